//! Schur specializations by bialternant, Jacobi-Trudi (and its dual), and
//! reverse column-strict tableaux.
//!
//! cargo run --example schur

use qtcomb::macschur::{
    bialternant_spec, classical_schur_spec, dual_jacobi_trudi_spec, enumerate_tableaux, jacobi_trudi_spec, tableau_sum,
    tableau_weight, SkewShape,
};

fn main() -> qtcomb::Result<()> {
    let (k, q) = (1, 2);
    for text in ["2,1", "2,2/1,0"] {
        let shape: SkewShape = text.parse()?;
        println!("shape {shape}, variables (1, t), q={q}");
        for t in enumerate_tableaux(&shape, k) {
            println!(
                "  tableau {t}: weight {} = {}",
                tableau_weight(&t, k)?,
                tableau_weight(&t, k)?.to_poly(q)?
            );
        }
        println!("  tableau sum     {}", tableau_sum(&shape, k, q)?);
        println!("  Jacobi-Trudi    {}", jacobi_trudi_spec(&shape, k, q)?);
        println!("  dual JT         {}", dual_jacobi_trudi_spec(&shape, k, q)?);
        if shape.is_straight() {
            println!("  bialternant     {}", bialternant_spec(shape.lambda(), k, q)?);
        }
        println!("  classical limit {}", classical_schur_spec(&shape, k));
    }
    Ok(())
}
