//! (q,t)-factorials, binomials and multinomials, with the Pascal relations.
//!
//! cargo run --example binomial

use qtcomb::qtnum::{binomial, factorial, gaussian_binomial, multinomial, pascal_check, Composition};

fn main() -> qtcomb::Result<()> {
    let q = 2;
    println!("3!_(q,t) at q={q}: {}", factorial(3, q)?);

    println!("\n(q,t)-binomials at q={q} and their t=1 values (Gaussian binomials at q):");
    for n in 0..=4 {
        let row: Vec<String> = (0..=n)
            .map(|k| binomial(n, k, q).map(|b| b.eval_one().to_string()))
            .collect::<qtcomb::Result<_>>()?;
        println!("  n={n}: {}", row.join(" "));
    }
    println!("[4 choose 2]_(q,t) = {}", binomial(4, 2, q)?);
    println!("Gaussian [4 choose 2]_t = {}", gaussian_binomial(4, 2));

    let alpha: Composition = "1,2,1".parse()?;
    println!(
        "\n[4; {alpha}]_(q,t) at q=3 has {} terms",
        multinomial(&alpha, 3)?.terms().count()
    );

    let outcome = pascal_check(5, 2, q)?;
    for id in &outcome.identities {
        println!("{}: {}", id.label, if id.holds() { "holds" } else { "FAILS" });
    }
    Ok(())
}
