//! Symbolic exponents in `Z[q, 1/q]` and product-form weights
//! `t^{e0} * prod_i [q]_{t^{e_i}}` built from them.

mod qexp;
mod weight;

pub use qexp::QExp;
pub use weight::WeightExpr;
