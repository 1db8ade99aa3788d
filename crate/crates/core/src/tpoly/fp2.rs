//! Bivariate polynomials in `y` and `t` over a prime field.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// `sum c_{a,b} y^a t^b` with residues `c` in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly2 {
    p: u64,
    // keyed by (y-degree, t-degree)
    terms: BTreeMap<(u64, u64), u64>,
}

impl FpPoly2 {
    pub fn zero(p: u64) -> Self {
        FpPoly2 {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::monomial(p, 0, 0, 1)
    }

    pub fn monomial(p: u64, ydeg: u64, tdeg: u64, c: i64) -> Self {
        let mut out = Self::zero(p);
        out.add_term(ydeg, tdeg, c);
        out
    }

    pub fn from_terms(p: u64, terms: impl IntoIterator<Item = ((u64, u64), i64)>) -> Self {
        let mut out = Self::zero(p);
        for ((a, b), c) in terms {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u64, u64), &u64)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, ydeg: u64, tdeg: u64, c: i64) {
        let r = c.rem_euclid(self.p as i64) as u64;
        if r == 0 {
            return;
        }
        let slot = self.terms.entry((ydeg, tdeg)).or_insert(0);
        *slot = (*slot + r) % self.p;
        if *slot == 0 {
            self.terms.remove(&(ydeg, tdeg));
        }
    }

    pub fn y_degree(&self) -> Option<u64> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Coefficient of `y^d` as a list of (t-degree, residue), ascending.
    pub fn y_coefficient(&self, d: u64) -> Vec<(u64, u64)> {
        self.terms
            .iter()
            .filter(|((a, _), _)| *a == d)
            .map(|((_, b), c)| (*b, *c))
            .collect()
    }

    /// Distinct y-degrees that carry a nonzero coefficient.
    pub fn y_support(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.terms.keys().map(|k| k.0).collect();
        v.dedup();
        v
    }

    pub fn add(&self, rhs: &FpPoly2) -> Result<FpPoly2> {
        self.same_field(rhs)?;
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, *c as i64);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &FpPoly2) -> Result<FpPoly2> {
        self.same_field(rhs)?;
        let p = self.p as u128;
        let mut acc: BTreeMap<(u64, u64), u128> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let slot = acc.entry((a1 + a2, b1 + b2)).or_insert(0);
                *slot = (*slot + (*c1 as u128) * (*c2 as u128)) % p;
            }
        }
        Ok(FpPoly2 {
            p: self.p,
            terms: acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (k, c as u64))
                .collect(),
        })
    }

    fn same_field(&self, rhs: &FpPoly2) -> Result<()> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p, rhs.p));
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly2[p={}](", self.p)?;
        let mut first = true;
        for ((a, b), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*y^{a}*t^{b}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_two_square() {
        let a = FpPoly2::from_terms(2, [((1, 0), 1), ((0, 0), 1)]);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, FpPoly2::from_terms(2, [((2, 0), 1), ((0, 0), 1)]));
    }

    #[test]
    fn y_coefficient_cancels_mod_two() {
        // (y + t)(y + 1 + t) = y^2 + (1 + 2t) y + t + t^2, and 2t vanishes over F_2
        let a = FpPoly2::from_terms(2, [((1, 0), 1), ((0, 1), 1)]);
        let b = FpPoly2::from_terms(2, [((1, 0), 1), ((0, 0), 1), ((0, 1), 1)]);
        let prod = a.mul(&b).unwrap();
        let expect = FpPoly2::from_terms(2, [((2, 0), 1), ((1, 0), 1), ((0, 1), 1), ((0, 2), 1)]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn identity_and_mismatch() {
        let a = FpPoly2::from_terms(3, [((2, 1), 2), ((0, 0), 5)]);
        assert_eq!(a.mul(&FpPoly2::one(3)).unwrap(), a);
        assert_eq!(a.add(&FpPoly2::zero(3)).unwrap(), a);
        assert_eq!(a.mul(&FpPoly2::one(2)), Err(Error::ModulusMismatch(3, 2)));
        assert_eq!(a.y_coefficient(0), vec![(0, 2)]);
    }
}
