use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tpoly::{check_exponent, Exp};

/// A Laurent polynomial in the formal symbol `q` with integer coefficients.
///
/// Houses exponents such as `q^n - q^(i-1)`. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QExp {
    coeffs: BTreeMap<i32, BigInt>,
}

impl QExp {
    pub fn zero() -> Self {
        QExp::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QExp::monomial(0, c)
    }

    pub fn monomial(deg: i32, c: impl Into<BigInt>) -> Self {
        let mut out = QExp::zero();
        out.add_term(deg, c.into());
        out
    }

    /// `q^deg`.
    pub fn qpow(deg: i32) -> Self {
        QExp::monomial(deg, 1)
    }

    /// `q^a - q^b`.
    pub fn qdiff(a: i32, b: i32) -> Self {
        QExp::qpow(a) - QExp::qpow(b)
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = QExp::zero();
        for (d, c) in terms {
            out.add_term(d, c.into());
        }
        out
    }

    fn add_term(&mut self, deg: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(deg).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Coefficient of the highest power of `q`, if any.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiplication by `q^steps`.
    pub fn frobenius(&self, steps: i32) -> QExp {
        QExp {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + steps, c.clone())).collect(),
        }
    }

    /// Value at an integer `q >= 2`, as an exact rational.
    pub fn eval(&self, q: u64) -> Result<BigRational> {
        if q < 2 {
            return Err(Error::OutOfRange(format!("q = {q} must be at least 2")));
        }
        let qb = BigInt::from(q);
        let mut acc = BigRational::zero();
        for (d, c) in &self.coeffs {
            let p = num_traits::pow(qb.clone(), d.unsigned_abs() as usize);
            let term = if *d >= 0 {
                BigRational::from_integer(c * p)
            } else {
                BigRational::new(c.clone(), p)
            };
            acc += term;
        }
        Ok(acc)
    }

    /// Value at `q` as a `t`-exponent, guard-checked.
    pub fn eval_exp(&self, q: u64) -> Result<Exp> {
        let v = self.eval(q)?;
        let too_big = || crate::error::Error::DegreeGuard {
            exponent: format!("{v}"),
            limit: crate::tpoly::degree_guard(),
        };
        let n = v.numer().to_i64().ok_or_else(too_big)?;
        let d = v.denom().to_i64().ok_or_else(too_big)?;
        let e = Exp::new(n, d);
        check_exponent(&e)?;
        Ok(e)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Derivative at `q = 1`, i.e. `sum a_r * r`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs.iter().map(|(d, c)| c * BigInt::from(*d)).sum()
    }

    /// Sampled positivity: positive at `q = 2, 3` with a positive leading coefficient.
    pub fn is_sampled_positive(&self) -> bool {
        let positive_at = |q| self.eval(q).map(|v| v.is_positive()).unwrap_or(false);
        self.leading_coefficient().is_some_and(|c| c.is_positive()) && positive_at(2) && positive_at(3)
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (*d, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{abs}q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QExp({self})")
    }
}

impl<'a> AddAssign<&'a QExp> for QExp {
    fn add_assign(&mut self, rhs: &'a QExp) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c.clone());
        }
    }
}

impl Add for QExp {
    type Output = QExp;
    fn add(mut self, rhs: QExp) -> QExp {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a QExp> for &QExp {
    type Output = QExp;
    fn add(self, rhs: &'a QExp) -> QExp {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for QExp {
    type Output = QExp;
    fn neg(self) -> QExp {
        QExp {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Sub for QExp {
    type Output = QExp;
    fn sub(self, rhs: QExp) -> QExp {
        self + (-rhs)
    }
}

impl Mul<i64> for &QExp {
    type Output = QExp;
    fn mul(self, k: i64) -> QExp {
        let k = BigInt::from(k);
        let mut out = QExp::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, c * &k);
        }
        out
    }
}
