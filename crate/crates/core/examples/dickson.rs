//! The product of y + l over all linear functionals l on F_p^n, against its
//! closed-form expansion.
//!
//! cargo run --example dickson

use qtcomb::ffield::{dickson_coefficient, dickson_identity_check, dickson_product};

fn main() -> qtcomb::Result<()> {
    println!("over F_2, n=2: {:?}", dickson_product(2, 2)?);
    for s in 0..=2 {
        println!(
            "  closed-form coefficient of y^(2^{s}): {}",
            dickson_coefficient(2, s, 2)?
        );
    }
    for (n, p) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        println!("n={n} p={p}: identity holds = {}", dickson_identity_check(n, p)?);
    }
    Ok(())
}
