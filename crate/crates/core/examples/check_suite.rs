//! Running a named check suite from code, as the command line does.
//!
//! cargo run --example check_suite

use qtcomb::cli::{run_suite, Params, Suite};

fn main() {
    let bounds = Params::parse(&["n=4".to_string()]).expect("well-formed bounds");
    let cases = Suite::Ribbon3way.cases(&bounds, &[2, 3]).expect("known bounds");
    let (report, errors) = run_suite(Suite::Ribbon3way, cases);
    println!(
        "{} cases, passed: {}, errors: {}",
        report.cases.len(),
        report.passed,
        errors.len()
    );
    for case in report.cases.iter().take(3) {
        println!("  [{}] {} -> {:?}", case.parameters, case.identity, case.status);
    }
}
