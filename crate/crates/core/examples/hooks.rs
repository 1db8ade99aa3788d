//! Hook shapes: the product formula, the HZ * EZ recurrence, and the
//! coincidence with ribbon numbers.
//!
//! cargo run --example hooks

use qtcomb::macschur::{bialternant_spec, hook, hook_checks};

fn main() -> qtcomb::Result<()> {
    let q = 2;
    for (m, k, n) in [(1, 1, 1), (2, 1, 2), (3, 2, 3)] {
        let lambda = hook(m, k);
        println!(
            "hook {lambda} in {} variables: {}",
            n + 1,
            bialternant_spec(&lambda, n, q)?
        );
        for id in &hook_checks(m, k, n, q)?.identities {
            println!("  {}: {}", id.label, if id.holds() { "holds" } else { "FAILS" });
        }
    }
    Ok(())
}
