//! Exact (q,t)-analogues from the invariant theory of `GL_n(F_q)`.
//!
//! Everything is computed at a fixed integer `q >= 2` as polynomials in `t`
//! with exact rational exponents, except the product-form weights in
//! [`exprcore`], which keep `q` symbolic so both formal limits (`t -> 1` and
//! `q -> 1`) can be taken term by term.

pub mod boxes;
pub mod cli;
pub mod error;
pub mod exprcore;
pub mod ffield;
pub mod identity;
pub mod macschur;
pub mod permstat;
pub mod qtnum;
pub mod tpoly;

pub use error::{Error, Result};
pub use exprcore::{QExp, WeightExpr};
pub use identity::{CheckOutcome, Identity};
pub use tpoly::{Exp, FpPoly2, TPoly};
