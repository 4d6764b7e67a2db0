//! SVG drawing of a straight code: the strand on a horizontal line, each
//! connector a semicircle above or below it, and connectors that change
//! sides wrapping around the strand's left end.

use std::fmt::Write;

use crate::straight::{chords, StraightCode};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;
const GAP: f64 = 0.18;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Point {
    End(u32),
    Top(u32),
    Bottom(u32),
}

fn classify(n: u32, idx: u32) -> Point {
    if idx == 0 || idx == n + 1 {
        Point::End(idx)
    } else if idx <= n {
        Point::Top(idx)
    } else {
        Point::Bottom(2 * n + 2 - idx)
    }
}

fn x_of(p: Point) -> f64 {
    match p {
        Point::End(x) | Point::Top(x) | Point::Bottom(x) => x as f64,
    }
}

/// The drawing as a standalone SVG document. Byte-identical for equal codes.
pub fn render_svg(code: &StraightCode) -> String {
    let n = code.n() as u32;
    let cs = chords(code.visits(), code.arrivals());
    let pts: Vec<(Point, Point)> = cs
        .iter()
        .map(|&(a, b)| (classify(n, a), classify(n, b)))
        .collect();
    // Wrapping connectors are nested around the left end; rank by the top
    // endpoint so inner ones get the smaller detour.
    let mut wrap_tops: Vec<u32> = pts
        .iter()
        .filter_map(|&(a, b)| match (a, b) {
            (Point::Top(p), Point::Bottom(_)) | (Point::Bottom(_), Point::Top(p)) => Some(p),
            _ => None,
        })
        .collect();
    wrap_tops.sort_unstable();
    let detour = |p: u32| 0.5 * (wrap_tops.iter().position(|&t| t == p).unwrap() + 1) as f64;
    let left = wrap_tops.len() as f64 * 0.5;
    let right = n as f64 + 1.0;
    let span = right + left;
    let height = span / 2.0 + 0.5;
    let ox = MARGIN + left * UNIT;
    let oy = MARGIN + height * UNIT;
    let sx = move |x: f64| ox + x * UNIT;
    let w = 2.0 * MARGIN + span * UNIT;
    let h = 2.0 * MARGIN + 2.0 * height * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="3">"#).unwrap();
    writeln!(
        out,
        r#"<line class="strand" x1="{:.2}" y1="{oy:.2}" x2="{:.2}" y2="{oy:.2}"/>"#,
        sx(0.0),
        sx(right)
    )
    .unwrap();
    for &(a, b) in &pts {
        let mut d = format!("M {:.2} {oy:.2}", sx(x_of(a)));
        let mut arc = |x1: f64, x2: f64, up: bool| {
            let r = (x2 - x1).abs() / 2.0 * UNIT;
            let sweep = (x1 < x2) == up;
            write!(
                d,
                " A {r:.2} {r:.2} 0 0 {} {:.2} {oy:.2}",
                sweep as u8,
                sx(x2)
            )
            .unwrap();
        };
        match (a, b) {
            (Point::Top(p), Point::Bottom(_)) | (Point::Bottom(_), Point::Top(p)) => {
                let up_first = matches!(a, Point::Top(_));
                let xm = -detour(p);
                arc(x_of(a), xm, up_first);
                arc(xm, x_of(b), !up_first);
            }
            (Point::Top(_), _) | (_, Point::Top(_)) => arc(x_of(a), x_of(b), true),
            _ => arc(x_of(a), x_of(b), false),
        }
        writeln!(
            out,
            r#"<path class="connector" d="{d}" stroke-linecap="round"/>"#
        )
        .unwrap();
    }
    for p in 1..=n {
        let (x, g) = (sx(p as f64), GAP * UNIT);
        let (x1, y1, x2, y2) = if code.overs()[p as usize - 1] {
            (x - g, oy, x + g, oy)
        } else {
            (x, oy - g, x, oy + g)
        };
        writeln!(
            out,
            r#"<g class="crossing" data-position="{p}"><line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="white" stroke-width="11"/><line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/></g>"#
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<circle cx="{:.2}" cy="{oy:.2}" r="4" fill="black"/>"#,
        sx(0.0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<circle cx="{:.2}" cy="{oy:.2}" r="4" fill="black"/>"#,
        sx(right)
    )
    .unwrap();
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn kink_has_one_crossing_and_two_connectors() {
        let c: StraightCode = "1; 1; UD; 1".parse().unwrap();
        let svg = render_svg(&c);
        assert_eq!(count(&svg, r#"class="crossing""#), 1);
        assert_eq!(count(&svg, r#"class="connector""#), 2);
    }

    #[test]
    fn nine_32_witness_has_ten_crossings_and_is_stable() {
        let c: StraightCode = "10; 2 5 8 7 6 1 10 3 4 9; UDUDUDDUDUD; 1010110110"
            .parse()
            .unwrap();
        let a = render_svg(&c);
        assert_eq!(count(&a, r#"class="crossing""#), 10);
        assert_eq!(count(&a, r#"class="connector""#), 11);
        assert_eq!(a, render_svg(&c.clone()));
    }
}
