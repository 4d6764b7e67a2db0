//! `verify_template 3,1,2,2,1,1`
use straightknot::families::TemplateSpec;
use straightknot::solver::SolveOptions;
use straightknot::verify::verify_template;

fn main() {
    let spec: TemplateSpec = std::env::args()
        .nth(1)
        .unwrap_or("3,1,2,2,1,1".into())
        .parse()
        .unwrap();
    let r = verify_template(&spec, &SolveOptions::up_to(0)).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
