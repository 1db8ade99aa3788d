//! Sparse polynomials in a single variable `t` with big-integer coefficients
//! and exact rational exponents.
//!
//! Fractional exponents arise from negative Frobenius powers `t -> t^(1/q)`;
//! at a fixed integer `q` their denominators are powers of `q`.

mod fp2;
mod guard;
mod serial;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use fp2::FpPoly2;
pub use guard::{check_exponent, degree_guard, pow_q, set_degree_guard, DEFAULT_DEGREE_GUARD};
pub use serial::{TPolyJson, TermRecord};

/// Exponent of `t`: an exact rational.
pub type Exp = num_rational::Ratio<i64>;

/// Integer exponent as an [`Exp`].
pub fn exp(n: i64) -> Exp {
    Exp::from_integer(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial `sum c_e t^e` with no zero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::monomial(exp(0), BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TPoly::monomial(exp(0), c.into())
    }

    pub fn monomial(e: Exp, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TPoly { terms }
    }

    /// `t^e` with coefficient one.
    pub fn t_pow(e: Exp) -> Self {
        TPoly::monomial(e, 1)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging repeats.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Exp, C)>,
        C: Into<BigInt>,
    {
        let mut p = TPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 - t^e`.
    pub fn one_minus(e: Exp) -> Self {
        TPoly::from_terms([(exp(0), BigInt::one()), (e, -BigInt::one())])
    }

    /// `t^a - t^b`.
    pub fn binomial_diff(a: Exp, b: Exp) -> Self {
        TPoly::from_terms([(a, BigInt::one()), (b, -BigInt::one())])
    }

    /// `[n]_{t^e} = 1 + t^e + ... + t^{(n-1)e}`, built term by term.
    pub fn geometric(n: u64, e: Exp) -> Result<Self> {
        let mut p = TPoly::zero();
        for i in 0..n {
            let ei = e * exp(i as i64);
            check_exponent(&ei)?;
            p.add_term(ei, BigInt::one());
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&exp(0)).is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Largest exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Exp, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<Exp> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<Exp> {
        self.terms.keys().next().copied()
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when every exponent is a nonnegative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer() && *e >= exp(0))
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluates at an integer point; requires nonnegative integer exponents.
    pub fn eval_at(&self, x: &BigInt) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if !e.is_integer() || *e < exp(0) {
                return Err(Error::Invalid(format!("cannot evaluate t^{e} at an integer point")));
            }
            acc += c * num_traits::pow(x.clone(), e.to_integer() as usize);
        }
        Ok(acc)
    }

    /// Substitutes `t -> t^c` for a positive rational `c`.
    pub fn subst_power(&self, c: Exp) -> Result<TPoly> {
        if c <= exp(0) {
            return Err(Error::OutOfRange(format!("substitution power {c} must be positive")));
        }
        let mut out = BTreeMap::new();
        for (e, k) in &self.terms {
            let ne = e.checked_mul(&c).ok_or_else(|| overflow_err(e))?;
            check_exponent(&ne)?;
            out.insert(ne, k.clone());
        }
        Ok(TPoly { terms: out })
    }

    /// Frobenius power `t -> t^(q^steps)`; `steps` may be negative.
    pub fn frobenius(&self, q: u64, steps: i32) -> Result<TPoly> {
        if steps == 0 {
            return Ok(self.clone());
        }
        self.subst_power(pow_q(q, steps)?)
    }

    /// Guard-checked product.
    pub fn try_mul(&self, rhs: &TPoly) -> Result<TPoly> {
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            check_exponent(&(a + b))?;
        }
        if let (Some(a), Some(b)) = (self.min_exponent(), rhs.min_exponent()) {
            check_exponent(&(a + b))?;
        }
        Ok(self * rhs)
    }

    /// Returns `c` with `self = divisor * c`, or an error if no such
    /// polynomial with integer coefficients exists.
    pub fn exact_div(&self, divisor: &TPoly) -> Result<TPoly> {
        let (dlead_e, dlead_c) = match divisor.leading() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        // an exact quotient has lowest exponent min(self) - min(divisor), so a
        // shift below that leaves a remainder
        let floor = match (self.min_exponent(), divisor.min_exponent()) {
            (Some(a), Some(b)) => a - b,
            _ => return Ok(TPoly::zero()),
        };
        let mut rem = self.terms.clone();
        let mut quot = TPoly::zero();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if re - dlead_e < floor {
                return Err(Error::NonZeroRemainder);
            }
            let (qc, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return Err(Error::NonIntegralQuotient);
            }
            let shift = re - dlead_e;
            for (de, dc) in &divisor.terms {
                let e = de + shift;
                let v = rem.entry(e).or_default();
                *v -= &qc * dc;
                if v.is_zero() {
                    rem.remove(&e);
                }
            }
            quot.add_term(shift, qc);
        }
        Ok(quot)
    }

    pub fn arith(&self, rhs: &TPoly, op: ArithOp) -> TPoly {
        match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
        }
    }

    /// Product of a sequence of polynomials, guard-checked.
    pub fn product<'a, I: IntoIterator<Item = &'a TPoly>>(iter: I) -> Result<TPoly> {
        let mut acc = TPoly::one();
        for p in iter {
            acc = acc.try_mul(p)?;
        }
        Ok(acc)
    }

    /// Least common multiple of the exponent denominators.
    fn common_denominator(&self) -> i64 {
        self.terms.keys().fold(1i64, |d, e| d.lcm(e.denom()))
    }
}

fn overflow_err(e: &Exp) -> Error {
    Error::DegreeGuard {
        exponent: format!("{e}*overflow"),
        limit: degree_guard(),
    }
}

// Below this many potential cells a dense accumulator is used for products.
const DENSE_SPAN_LIMIT: i64 = 1 << 21;

fn small_coeffs(p: &TPoly) -> Option<(Vec<(i64, i64)>, u128)> {
    let mut out = Vec::with_capacity(p.terms.len());
    let mut max = 0u128;
    for c in p.terms.values() {
        let v = c.to_i64()?;
        max = max.max(v.unsigned_abs() as u128);
        out.push((0, v));
    }
    Some((out, max))
}

fn mul_impl(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_zero() || b.is_zero() {
        return TPoly::zero();
    }
    let d = a.common_denominator().lcm(&b.common_denominator());
    let keyed = |p: &TPoly| -> Vec<i64> { p.terms.keys().map(|e| e.numer() * (d / e.denom())).collect() };
    let ka = keyed(a);
    let kb = keyed(b);

    if let (Some((mut ca, ma)), Some((mut cb, mb))) = (small_coeffs(a), small_coeffs(b)) {
        let bound = ma
            .checked_mul(mb)
            .and_then(|m| m.checked_mul(a.len().min(b.len()) as u128));
        if bound.is_some_and(|m| m < (1u128 << 126)) {
            for (slot, k) in ca.iter_mut().zip(&ka) {
                slot.0 = *k;
            }
            for (slot, k) in cb.iter_mut().zip(&kb) {
                slot.0 = *k;
            }
            let lo = ka[0] + kb[0];
            let hi = ka[ka.len() - 1] + kb[kb.len() - 1];
            let span = hi - lo + 1;
            let pairs = (ca.len() as i64).saturating_mul(cb.len() as i64);
            let mut out = TPoly::zero();
            if span <= DENSE_SPAN_LIMIT && pairs.saturating_mul(4) >= span {
                let mut acc = vec![0i128; span as usize];
                for &(ea, va) in &ca {
                    for &(eb, vb) in &cb {
                        acc[(ea + eb - lo) as usize] += va as i128 * vb as i128;
                    }
                }
                for (i, v) in acc.into_iter().enumerate() {
                    if v != 0 {
                        out.terms.insert(Exp::new(lo + i as i64, d), BigInt::from(v));
                    }
                }
            } else {
                let mut acc: HashMap<i64, i128> = HashMap::with_capacity(ca.len() * 2);
                for &(ea, va) in &ca {
                    for &(eb, vb) in &cb {
                        *acc.entry(ea + eb).or_default() += va as i128 * vb as i128;
                    }
                }
                for (k, v) in acc {
                    if v != 0 {
                        out.terms.insert(Exp::new(k, d), BigInt::from(v));
                    }
                }
            }
            return out;
        }
    }

    let mut acc: HashMap<i64, BigInt> = HashMap::new();
    for ((_, va), ea) in a.terms.iter().zip(&ka) {
        for ((_, vb), eb) in b.terms.iter().zip(&kb) {
            *acc.entry(ea + eb).or_default() += va * vb;
        }
    }
    let mut out = TPoly::zero();
    for (k, v) in acc {
        if !v.is_zero() {
            out.terms.insert(Exp::new(k, d), v);
        }
    }
    out
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let is_const = e.is_zero();
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            if !is_const {
                if e.is_one() {
                    write!(f, "t")?;
                } else if e.is_integer() && *e > exp(0) {
                    write!(f, "t^{e}")?;
                } else {
                    write!(f, "t^({e})")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl<'a> Add<&'a TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &'a TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &'a TPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for TPoly {
    fn add_assign(&mut self, rhs: TPoly) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &'a TPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &'a TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(mut self) -> TPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -self.clone()
    }
}

impl<'a> Mul<&'a TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &'a TPoly) -> TPoly {
        mul_impl(self, rhs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        mul_impl(&self, &rhs)
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        let mut acc = TPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (exp(e), c)))
    }

    fn half(n: i64) -> Exp {
        Exp::new(n, 2)
    }

    #[test]
    fn arith_examples() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(0, 1), (2, -1)]));
        assert_eq!(&a + &TPoly::zero(), a);
        let c = TPoly::from_terms([(exp(0), 1), (half(1), 1)]);
        let d = TPoly::from_terms([(exp(0), 1), (half(1), -1)]);
        assert_eq!(c.arith(&d, ArithOp::Mul), p(&[(0, 1), (1, -1)]));
        assert_eq!(a.arith(&a, ArithOp::Sub), TPoly::zero());
    }

    #[test]
    fn exact_div_examples() {
        let q = TPoly::one_minus(exp(3)).exact_div(&TPoly::one_minus(exp(1))).unwrap();
        assert_eq!(q, p(&[(0, 1), (1, 1), (2, 1)]));

        let num = TPoly::one_minus(exp(7)) * TPoly::one_minus(exp(6));
        let den = TPoly::one_minus(exp(3)) * TPoly::one_minus(exp(2));
        // the three box partitions of a 2x1 box, weighed by hand at q = 2
        let oracle = p(&[(0, 1)]) + p(&[(2, 1), (4, 1)]) + p(&[(3, 1), (5, 1), (6, 1), (8, 1)]);
        assert_eq!(num.exact_div(&den).unwrap(), oracle);

        let err = TPoly::one_minus(exp(2)).exact_div(&TPoly::one_minus(exp(3)));
        assert_eq!(err, Err(Error::NonZeroRemainder));
        assert_eq!(TPoly::one().exact_div(&TPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(p(&[(0, 1)]).exact_div(&p(&[(0, 2)])), Err(Error::NonIntegralQuotient));

        // quotients with negative exponents come out of the same long division
        let laurent = p(&[(-3, 2), (1, -1)]);
        let divisor = p(&[(-1, 1), (4, 5)]);
        assert_eq!((&laurent * &divisor).exact_div(&divisor).unwrap(), laurent);
        assert_eq!(TPoly::zero().exact_div(&divisor).unwrap(), TPoly::zero());
        assert_eq!(
            p(&[(-2, 1)]).exact_div(&p(&[(0, 1), (1, 1)])),
            Err(Error::NonZeroRemainder)
        );
    }

    #[test]
    fn subst_power_examples() {
        let a = p(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(a.subst_power(exp(2)).unwrap(), p(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(a.subst_power(exp(1)).unwrap(), a);
        assert_eq!(p(&[(0, 1), (2, 1)]).subst_power(half(1)).unwrap(), p(&[(0, 1), (1, 1)]));
        assert!(a.subst_power(exp(0)).is_err());
    }

    #[test]
    fn eval_one_examples() {
        assert_eq!(
            p(&[(0, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (8, 1)]).eval_one(),
            BigInt::from(7)
        );
        assert_eq!(TPoly::zero().eval_one(), BigInt::zero());
        assert_eq!(p(&[(0, 1), (1, 1), (2, 1)]).eval_one(), BigInt::from(3));
    }

    #[test]
    fn big_coefficients_take_the_slow_path() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let a = TPoly::from_terms([(exp(0), big.clone()), (exp(1), BigInt::one())]);
        let sq = &a * &a;
        assert_eq!(sq.coeff(&exp(0)), &big * &big);
        assert_eq!(sq.coeff(&exp(1)), &big * 2);
        assert_eq!(sq.exact_div(&a).unwrap(), a);
    }

    #[test]
    fn sparse_product_matches_dense() {
        let a = TPoly::from_terms([(exp(0), 1), (exp(3_000_000), 1)]);
        let b = TPoly::from_terms([(exp(1), 2), (Exp::new(1, 3), -1)]);
        let prod = &a * &b;
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.coeff(&Exp::new(9_000_001, 3)), BigInt::from(-1));
    }

    #[test]
    fn guard_rejects_large_geometric() {
        assert!(TPoly::geometric(3, exp(DEFAULT_DEGREE_GUARD as i64))
            .unwrap_err()
            .is_guard());
    }

    #[test]
    fn display() {
        let a = TPoly::from_terms([(exp(0), 1), (half(5), -2), (exp(1), 1)]);
        assert_eq!(a.to_string(), "1 + t - 2*t^(5/2)");
    }
}
