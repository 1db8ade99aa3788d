use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qtnum::Composition;

/// A permutation of `{1, ..., n}` in one-line notation `(w(1), ..., w(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len() as u32;
        let mut seen = vec![false; one_line.len()];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::Invalid(format!("{one_line:?} is not a permutation")));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: u32) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n as usize)
            .map(|one_line| Permutation { one_line })
    }

    /// The permutation whose one-line notation has the same relative order as
    /// `values` (which must be distinct).
    pub fn standardize(values: &[u32]) -> Permutation {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut one_line = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            one_line[i] = rank as u32 + 1;
        }
        Permutation { one_line }
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    pub fn n(&self) -> u32 {
        self.one_line.len() as u32
    }

    /// `w(i)` for 1-indexed `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.one_line[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut one_line = vec![0; self.one_line.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            one_line[v as usize - 1] = i as u32 + 1;
        }
        Permutation { one_line }
    }

    /// `self . other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::Invalid("composing permutations of different sizes".into()));
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    /// `l(w)`: the number of inversions.
    pub fn length(&self) -> u32 {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32)
            .sum()
    }

    /// Positions `i` (1-indexed) with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<u32> {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Sum of descent positions.
    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }

    /// `beta(w)`: the lengths of the maximal increasing runs of the one-line notation.
    pub fn descent_composition(&self) -> Composition {
        let mask = self.descents().iter().fold(0u64, |m, &d| m | (1 << d));
        Composition::from_mask(self.n(), mask)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_line.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-line notation `"5,2,7,4,1,3,8,6"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let v = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad permutation entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn statistics() {
        let x = w("5,2,7,4,1,3,8,6");
        assert_eq!(x.descents(), vec![1, 3, 4, 7]);
        assert_eq!(x.descent_composition(), Composition::new(vec![1, 2, 1, 3, 1]));
        assert_eq!(x.maj(), 15);
        assert_eq!(
            Permutation::identity(4).descent_composition(),
            Composition::new(vec![4])
        );
        assert_eq!(w("2,1").descent_composition(), Composition::new(vec![1, 1]));
        assert_eq!(w("3,1,2").length(), 2);
        assert_eq!(x.compose(&x.inverse()).unwrap(), Permutation::identity(8));
    }

    #[test]
    fn construction() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(Permutation::standardize(&[7, 2, 5]), w("3,1,2"));
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(w("2,1").to_string(), "(2,1)");
    }
}
