//! Runs the straight-number search on table knots: `solve 8_18 10`.

use straightknot::solver::{straight_number, SolveOptions, Target};
use straightknot::Table;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let name = args.get(1).map(String::as_str).unwrap_or("3_1");
    let max: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(10);
    let table = Table::bundled();
    let target = Target::from_name(table, name).expect("knot in table");
    let r = straight_number(&target, &SolveOptions::up_to(max)).expect("search runs");
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
