//! Prints canonical shadow counts and timings.
use std::time::Instant;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    for n in 1..=max {
        let t = Instant::now();
        let c = straightknot::straight::count_shadows(n);
        println!("n={n:2} shadows={c:10} {:?}", t.elapsed());
    }
}
