//! The two specializations of a weight: t -> 1 gives a q-count and q -> 1
//! gives a classical t-statistic.
//!
//! cargo run --example limits

use qtcomb::boxes::box_limits_check;
use qtcomb::macschur::{tableau_limits_check, SkewShape};
use qtcomb::permstat::perm_limits_check;
use qtcomb::qtnum::Composition;

fn main() -> qtcomb::Result<()> {
    let mut checks = box_limits_check(5, 2, 3)?;
    checks.extend(perm_limits_check(&"2,2".parse::<Composition>()?, 2)?);
    checks.extend(tableau_limits_check(&"3,2/1".parse::<SkewShape>()?, 2, 3)?);
    for id in &checks.identities {
        println!(
            "{}: {} = {} ({})",
            id.label,
            id.lhs,
            id.rhs,
            if id.holds() { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
