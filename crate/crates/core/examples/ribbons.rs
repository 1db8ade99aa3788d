//! (q,t)-ribbon numbers by descent classes, inclusion-exclusion and a
//! determinant, with their classical limits.
//!
//! cargo run --example ribbons

use qtcomb::permstat::{ribbon_classical, ribbon_q1_limit, ribbon_qt, PermStatistic, RibbonRoute};
use qtcomb::qtnum::Composition;

fn main() -> qtcomb::Result<()> {
    let q = 2;
    for alpha in Composition::all_of(3) {
        let values: Vec<String> = RibbonRoute::ALL
            .iter()
            .map(|&r| ribbon_qt(&alpha, q, r).map(|p| p.to_string()))
            .collect::<qtcomb::Result<_>>()?;
        println!("r_{alpha}(2,t): {}", values[0]);
        println!("  routes agree: {}", values.iter().all(|v| *v == values[0]));
        println!(
            "  q -> 1 limit {} = sum of t^l(w) {}",
            ribbon_q1_limit(&alpha)?,
            ribbon_classical(&alpha, PermStatistic::Length)?
        );
    }
    Ok(())
}
