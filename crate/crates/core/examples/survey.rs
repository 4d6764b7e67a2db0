//! `survey <max crossing number>`: table knots that are not perfectly
//! straight, with their straight numbers when found within `c + 2`.
use straightknot::solver::{
    is_perfectly_straight, straight_number_from, SolveOptions, Status, Target,
};
use straightknot::Table;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(9, |s| s.parse().expect("a number"));
    let table = Table::bundled();
    let mut checked = 0;
    for rec in table
        .records()
        .iter()
        .filter(|r| (3..=max).contains(&r.crossing_number()))
    {
        checked += 1;
        let t = Target::from_name(table, &rec.name).expect("table name");
        let p = is_perfectly_straight(&t, &SolveOptions::up_to(0)).expect("search runs");
        if p.perfectly_straight {
            continue;
        }
        let c = rec.crossing_number();
        if !p.determined {
            println!(
                "{} c={c} undetermined: level {c} matches {:?}",
                rec.name, p.result.candidates
            );
            continue;
        }
        let r = straight_number_from(&t, c + 1, &SolveOptions::up_to(c + 2)).expect("search runs");
        let value = match r.status {
            Status::LowerBoundOnly => format!("> {}", r.value),
            _ => r.value.to_string(),
        };
        println!(
            "{} c={c} str={value} {:?} {:?}",
            rec.name, r.status, r.candidates
        );
    }
    println!("{checked} knots checked");
}
