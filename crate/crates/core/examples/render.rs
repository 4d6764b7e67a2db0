//! `render "<code>"` writes the SVG to stdout.
fn main() {
    let c: straightknot::StraightCode = std::env::args()
        .nth(1)
        .expect("code")
        .parse()
        .expect("valid code");
    print!("{}", straightknot::render::render_svg(&c));
}
