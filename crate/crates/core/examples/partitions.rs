//! Partition weights in a box, the box sum, and q-compatible partitions.
//!
//! cargo run --example partitions

use qtcomb::boxes::{
    box_sum, compatible_multiplicities, compatible_parts, compatible_sum, partition_weight, Partition,
};
use qtcomb::qtnum::binomial;

fn main() -> qtcomb::Result<()> {
    let lambda: Partition = "4,3,1,0".parse()?;
    let k = 4;
    let w = partition_weight(&lambda, k)?;
    println!("wt({lambda}, {k}) = {w}");
    println!("  at q=2: {}", w.to_poly(2)?);
    println!("  t -> 1 limit at q=2: {} (= 2^|lambda|)", w.limit_t1(2));
    println!("  q -> 1 limit: t^{} (= t^|lambda|)", w.limit_q1()?);

    let (n, k, q) = (5, 2, 3);
    let b = binomial(n, k, q)?;
    println!(
        "\nbox sum over the {k}x{} box at q={q} equals the binomial: {}",
        n - k,
        box_sum(n, k, q)? == b
    );
    println!("compatible sum equals the binomial: {}", compatible_sum(n, k, q)? == b);

    let lambda: Partition = "2,1".parse()?;
    let parts = compatible_parts(k as usize, q)?;
    let vectors = compatible_multiplicities(&lambda, k as usize, q)?;
    println!(
        "\n{lambda} in the {k}x{} box yields {} q-compatible partitions",
        n - k,
        vectors.len()
    );
    println!(
        "  (= q^|lambda| = {}) with parts {parts:?}; the first few multiplicities:",
        q.pow(lambda.size())
    );
    for m in vectors.iter().take(4) {
        println!("  {m:?}");
    }
    Ok(())
}
