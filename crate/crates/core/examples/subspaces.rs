//! Subspaces of F_p^n as echelon matrices, and the subspace statistic.
//!
//! cargo run --example subspaces

use qtcomb::ffield::{enumerate_subspaces, subspace_sum, subspaces_csv};
use qtcomb::qtnum::binomial;

fn main() -> qtcomb::Result<()> {
    let (n, k, p) = (3, 2, 2);
    println!("2-subspaces of F_2^3 (pivots 1-indexed):");
    print!("{}", subspaces_csv(n, k, p)?);

    let sum = subspace_sum(n, k, p)?;
    println!("\nsum of t^s(U) = {sum}");
    println!("equals [3 choose 2]_(2,t): {}", sum == binomial(n, k, p)?);

    let count = enumerate_subspaces(5, 2, 3)?.count();
    println!("\n2-subspaces of F_3^5: {count}");
    Ok(())
}
