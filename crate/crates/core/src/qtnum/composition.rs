use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered composition `(a_1, ..., a_l)` of `n` into nonnegative parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: u32) -> Self {
        Composition::new(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn has_zero_part(&self) -> bool {
        self.parts.contains(&0)
    }

    /// `sigma_0 = 0, sigma_1, ..., sigma_l = n`.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut s = 0;
        out.push(0);
        for &p in &self.parts {
            s += p;
            out.push(s);
        }
        out
    }

    /// The proper partial sums `{sigma_1, ..., sigma_{l-1}}` as a bitmask over `1..n`.
    pub fn descent_mask(&self) -> u64 {
        let n = self.n();
        self.partial_sums()
            .into_iter()
            .filter(|&s| s > 0 && s < n)
            .fold(0u64, |m, s| m | (1 << s))
    }

    /// Builds the composition of `n` whose proper partial sums are the set bits of `mask`.
    pub fn from_mask(n: u32, mask: u64) -> Composition {
        let mut parts = Vec::new();
        let mut last = 0;
        for s in 1..n {
            if mask & (1 << s) != 0 {
                parts.push(s - last);
                last = s;
            }
        }
        if n > 0 {
            parts.push(n - last);
        }
        Composition::new(parts)
    }

    /// True when `self` refines `coarser`: same total and every partial sum of
    /// `coarser` is a partial sum of `self`. Both must have positive parts.
    pub fn refines(&self, coarser: &Composition) -> bool {
        self.n() == coarser.n() && coarser.descent_mask() & !self.descent_mask() == 0
    }

    /// All compositions of `n` with positive parts, ordered by partial-sum mask.
    pub fn all_of(n: u32) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::default()];
        }
        (0..1u64 << (n - 1))
            .map(|m| Composition::from_mask(n, m << 1))
            .collect()
    }

    /// Every composition that `self` refines (including `self`).
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.n();
        let mask = self.descent_mask();
        let mut out = Vec::new();
        let mut sub = mask;
        loop {
            out.push(Composition::from_mask(n, sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        out.reverse();
        out
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.has_zero_part() {
            return Err(Error::Invalid(format!("composition {self} has a zero part")));
        }
        Ok(())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"1,2,1"`; the empty string is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Composition::default());
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn partial_sums_and_masks() {
        let a = c(&[1, 2, 1, 3, 1]);
        assert_eq!(a.partial_sums(), vec![0, 1, 3, 4, 7, 8]);
        assert_eq!(Composition::from_mask(8, a.descent_mask()), a);
        assert_eq!(c(&[3]).descent_mask(), 0);
    }

    #[test]
    fn refinement_is_subset_inclusion() {
        assert!(c(&[1, 1, 1]).refines(&c(&[2, 1])));
        assert!(c(&[1, 2]).refines(&c(&[3])));
        assert!(!c(&[2, 1]).refines(&c(&[1, 2])));
        assert!(c(&[2, 1]).refines(&c(&[2, 1])));
    }

    #[test]
    fn enumerations() {
        assert_eq!(Composition::all_of(4).len(), 8);
        assert_eq!(Composition::all_of(0), vec![Composition::default()]);
        let co = c(&[1, 1, 2]).coarsenings();
        assert_eq!(co.len(), 4);
        assert!(co.iter().all(|b| c(&[1, 1, 2]).refines(b)));
        assert_eq!("1, 2,1".parse::<Composition>().unwrap(), c(&[1, 2, 1]));
        assert!("1,x".parse::<Composition>().is_err());
    }
}
