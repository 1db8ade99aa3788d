//! Permutation weights, their factorization, and the multinomial as a sum
//! over minimal coset representatives.
//!
//! cargo run --example permutations

use qtcomb::permstat::{coset_reps, factorize, multinomial_perm_sum, perm_weight, Permutation};
use qtcomb::qtnum::{multinomial, Composition};

fn main() -> qtcomb::Result<()> {
    let w: Permutation = "5,2,7,4,1,3,8,6".parse()?;
    let f = factorize(&w)?;
    println!(
        "w = {w}: length {}, descents {:?}, maj {}",
        w.length(),
        w.descents(),
        w.maj()
    );
    println!("  factors: k={}, lambda={}, a={}, b={}", f.k, f.lambda, f.a, f.b);
    println!("  wt(w) = {}", perm_weight(&w)?);

    let alpha: Composition = "2,1".parse()?;
    println!("\ncoset representatives for {alpha}:");
    for u in coset_reps(&alpha)? {
        println!("  {u}: {}", perm_weight(&u)?.to_poly(2)?);
    }
    let sum = multinomial_perm_sum(&alpha, 2)?;
    println!("sum = {sum}");
    println!("equals the (q,t)-multinomial: {}", sum == multinomial(&alpha, 2)?);
    Ok(())
}
