use std::fmt;
use std::ops::{Mul, MulAssign};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::QExp;
use crate::error::{Error, Result};
use crate::tpoly::{Exp, TPoly};

/// The product `t^{prefactor} * prod_b [q]_{t^b}` where `[q]_x = 1 + x + ... + x^{q-1}`.
///
/// Brackets are kept sorted so that equality compares the bracket multiset.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightExpr {
    prefactor: QExp,
    brackets: Vec<QExp>,
}

impl WeightExpr {
    /// The empty product.
    pub fn one() -> Self {
        WeightExpr::default()
    }

    /// `t^e`.
    pub fn monomial(e: QExp) -> Self {
        WeightExpr {
            prefactor: e,
            brackets: Vec::new(),
        }
    }

    /// `[q]_{t^e}`.
    pub fn bracket(e: QExp) -> Self {
        WeightExpr {
            prefactor: QExp::zero(),
            brackets: vec![e],
        }
    }

    /// `t^e [q]_{t^e}`: the factor of a cell sitting at the bottom of its column.
    pub fn shifted_bracket(e: QExp) -> Self {
        WeightExpr {
            prefactor: e.clone(),
            brackets: vec![e],
        }
    }

    pub fn new(prefactor: QExp, mut brackets: Vec<QExp>) -> Self {
        brackets.sort();
        WeightExpr { prefactor, brackets }
    }

    pub fn prefactor(&self) -> &QExp {
        &self.prefactor
    }

    pub fn brackets(&self) -> &[QExp] {
        &self.brackets
    }

    pub fn bracket_count(&self) -> usize {
        self.brackets.len()
    }

    /// Applies `t -> t^(q^steps)` to every factor.
    pub fn frobenius(&self, steps: i32) -> WeightExpr {
        WeightExpr {
            prefactor: self.prefactor.frobenius(steps),
            brackets: self.brackets.iter().map(|b| b.frobenius(steps)).collect(),
        }
    }

    /// Checks membership in the degree-zero subfield (every exponent vanishes
    /// at `q = 1`) and sampled positivity of every bracket exponent.
    pub fn validate(&self) -> Result<()> {
        if !self.prefactor.at_one().is_zero() {
            return Err(Error::OutsideSubfield(self.prefactor.to_string()));
        }
        for b in &self.brackets {
            if !b.at_one().is_zero() {
                return Err(Error::OutsideSubfield(b.to_string()));
            }
            if !b.is_sampled_positive() {
                return Err(Error::NonPositiveBracket(b.to_string()));
            }
        }
        Ok(())
    }

    /// Expands the product at a fixed integer `q`.
    pub fn to_poly(&self, q: u64) -> Result<TPoly> {
        let e0 = self.prefactor.eval_exp(q)?;
        let mut acc = TPoly::t_pow(e0);
        for b in &self.brackets {
            let e = b.eval_exp(q)?;
            if e <= Exp::from_integer(0) {
                return Err(Error::NonPositiveBracket(b.to_string()));
            }
            acc = acc.try_mul(&TPoly::geometric(q, e)?)?;
        }
        Ok(acc)
    }

    /// The `t -> 1` limit at integer `q`: every bracket tends to `q`.
    pub fn limit_t1(&self, q: u64) -> BigInt {
        num_traits::pow(BigInt::from(q), self.brackets.len())
    }

    /// The `q -> 1` limit after `t -> t^{1/(q-1)}`, returned as the exponent `m` of `t^m`.
    pub fn limit_q1(&self) -> Result<i64> {
        for e in std::iter::once(&self.prefactor).chain(&self.brackets) {
            if !e.at_one().is_zero() {
                return Err(Error::OutsideSubfield(e.to_string()));
            }
        }
        self.prefactor
            .derivative_at_one()
            .to_i64()
            .ok_or_else(|| Error::OutOfRange("limit exponent overflows i64".into()))
    }
}

impl<'a> MulAssign<&'a WeightExpr> for WeightExpr {
    // multiplying powers of t adds their exponents
    #[allow(clippy::suspicious_op_assign_impl)]
    fn mul_assign(&mut self, rhs: &'a WeightExpr) {
        self.prefactor += &rhs.prefactor;
        self.brackets.extend(rhs.brackets.iter().cloned());
        self.brackets.sort();
    }
}

impl MulAssign for WeightExpr {
    fn mul_assign(&mut self, rhs: WeightExpr) {
        *self *= &rhs;
    }
}

impl Mul for WeightExpr {
    type Output = WeightExpr;
    fn mul(mut self, rhs: WeightExpr) -> WeightExpr {
        self *= &rhs;
        self
    }
}

impl<'a> Mul<&'a WeightExpr> for &WeightExpr {
    type Output = WeightExpr;
    fn mul(self, rhs: &'a WeightExpr) -> WeightExpr {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl std::iter::Product for WeightExpr {
    fn product<I: Iterator<Item = WeightExpr>>(iter: I) -> WeightExpr {
        iter.fold(WeightExpr::one(), |a, b| a * b)
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.prefactor.is_zero() {
            write!(f, "t^({})", self.prefactor)?;
            wrote = true;
        }
        for b in &self.brackets {
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "[q]_{{t^({b})}}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightExpr({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::exp;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (exp(e), c)))
    }

    #[test]
    fn to_poly_examples() {
        let w = WeightExpr::shifted_bracket(QExp::qdiff(1, 0));
        assert_eq!(w.to_poly(2).unwrap(), p(&[(1, 1), (2, 1)]));
        assert_eq!(WeightExpr::one().to_poly(2).unwrap(), TPoly::one());
        let w = WeightExpr::shifted_bracket(QExp::qdiff(2, 1));
        assert_eq!(w.to_poly(2).unwrap(), p(&[(2, 1), (4, 1)]));
    }

    #[test]
    fn nonpositive_bracket_is_rejected() {
        let w = WeightExpr::bracket(QExp::qdiff(0, 1));
        assert!(matches!(w.to_poly(2), Err(Error::NonPositiveBracket(_))));
        assert!(w.validate().is_err());
    }

    #[test]
    fn limit_examples() {
        let three = WeightExpr::new(
            QExp::zero(),
            vec![QExp::qdiff(1, 0), QExp::qdiff(2, 0), QExp::qdiff(2, 1)],
        );
        assert_eq!(three.limit_t1(2), BigInt::from(8));
        assert_eq!(WeightExpr::one().limit_t1(2), BigInt::from(1));

        assert_eq!(WeightExpr::shifted_bracket(QExp::qdiff(1, 0)).limit_q1().unwrap(), 1);
        assert_eq!(WeightExpr::one().limit_q1().unwrap(), 0);
        assert_eq!(WeightExpr::shifted_bracket(QExp::qdiff(2, 1)).limit_q1().unwrap(), 1);

        let outside = WeightExpr::monomial(QExp::qpow(1));
        assert!(matches!(outside.limit_q1(), Err(Error::OutsideSubfield(_))));
        let outside = WeightExpr::bracket(QExp::qpow(2));
        assert!(matches!(outside.limit_q1(), Err(Error::OutsideSubfield(_))));
    }

    fn arb_weight() -> impl Strategy<Value = WeightExpr> {
        let diff = (0i32..4, 1i32..3).prop_map(|(z, d)| QExp::qdiff(z + d, z));
        (
            prop::collection::vec(diff.clone(), 0..3),
            prop::collection::vec(diff, 0..3),
            -2i32..2,
        )
            .prop_map(|(pre, br, shift)| {
                let prefactor = pre.into_iter().fold(QExp::zero(), |a, b| a + b);
                WeightExpr::new(prefactor, br).frobenius(shift)
            })
    }

    proptest! {
        #[test]
        fn multiplicative(a in arb_weight(), b in arb_weight(), q in 2u64..4) {
            let ab = &a * &b;
            prop_assert_eq!(ab.to_poly(q).unwrap(), a.to_poly(q).unwrap() * b.to_poly(q).unwrap());
            prop_assert_eq!(ab.limit_q1().unwrap(), a.limit_q1().unwrap() + b.limit_q1().unwrap());
            prop_assert_eq!(ab.limit_t1(q), a.limit_t1(q) * b.limit_t1(q));
        }

        #[test]
        fn frobenius_matches_substitution(a in arb_weight(), q in 2u64..4) {
            let lhs = a.frobenius(1).to_poly(q).unwrap();
            let rhs = a.to_poly(q).unwrap().subst_power(exp(q as i64)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn t_one_value_is_the_limit(a in arb_weight(), q in 2u64..4) {
            prop_assert_eq!(a.to_poly(q).unwrap().eval_one(), a.limit_t1(q));
        }
    }
}
