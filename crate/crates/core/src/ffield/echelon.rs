use std::fmt;

use crate::boxes::Partition;
use crate::error::{Error, Result};

/// Bijections `phi0: F_p -> {0..p-1}` and `phi1: F_p -> {1..p}` used to turn a
/// free entry into an integer multiplier. `phi1` applies to the lowest free
/// entry of each column, `phi0` to every other one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryBijections {
    phi0: Vec<u64>,
    phi1: Vec<u64>,
}

impl EntryBijections {
    /// `phi0(a) = a`, `phi1(a) = a + 1` on residue representatives.
    pub fn canonical(p: u64) -> Self {
        EntryBijections {
            phi0: (0..p).collect(),
            phi1: (1..=p).collect(),
        }
    }

    /// Custom tables, indexed by residue. `phi0` must be a permutation of
    /// `0..p` and `phi1` of `1..=p`.
    pub fn new(phi0: Vec<u64>, phi1: Vec<u64>) -> Result<Self> {
        let p = phi0.len() as u64;
        let is_perm = |v: &[u64], lo: u64| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s.into_iter().eq(lo..lo + p)
        };
        if phi1.len() as u64 != p || !is_perm(&phi0, 0) || !is_perm(&phi1, 1) {
            return Err(Error::Invalid(
                "entry tables are not bijections onto 0..p and 1..=p".into(),
            ));
        }
        Ok(EntryBijections { phi0, phi1 })
    }

    pub fn modulus(&self) -> u64 {
        self.phi0.len() as u64
    }

    fn apply(&self, a: u64, lowest: bool) -> u64 {
        if lowest {
            self.phi1[a as usize]
        } else {
            self.phi0[a as usize]
        }
    }
}

/// A `k x n` row-reduced echelon matrix over `F_p`.
///
/// Pivot columns (0-indexed) strictly decrease down the rows, so row 1's pivot
/// is rightmost. Entries right of a pivot and in other rows' pivot columns are
/// zero; the remaining positions left of each pivot are free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EchelonMatrix {
    p: u64,
    n: usize,
    pivots: Vec<usize>,
    // free entries in row-major order of `free_positions()`
    free: Vec<u64>,
}

impl EchelonMatrix {
    pub fn new(p: u64, n: usize, pivots: Vec<usize>, free: Vec<u64>) -> Result<Self> {
        if pivots.windows(2).any(|w| w[0] <= w[1]) || pivots.first().is_some_and(|&c| c >= n) {
            return Err(Error::Invalid(format!(
                "pivots {pivots:?} must strictly decrease within 0..{n}"
            )));
        }
        let m = EchelonMatrix {
            p,
            n,
            pivots,
            free: Vec::new(),
        };
        if free.len() != m.free_positions().len() || free.iter().any(|&a| a >= p) {
            return Err(Error::Invalid("free entries do not match the pivot pattern".into()));
        }
        Ok(EchelonMatrix { free, ..m })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot columns, 0-indexed, one per row from the top.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `(row, column)` of each free entry, both 0-indexed, in row-major order.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &c) in self.pivots.iter().enumerate() {
            for j in 0..c {
                if !self.pivots.contains(&j) {
                    out.push((r, j));
                }
            }
        }
        out
    }

    pub fn free_entries(&self) -> &[u64] {
        &self.free
    }

    /// The full matrix of residues.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![0; self.n]; self.k()];
        for (r, &c) in self.pivots.iter().enumerate() {
            rows[r][c] = 1;
        }
        for (&(r, c), &a) in self.free_positions().iter().zip(&self.free) {
            rows[r][c] = a;
        }
        rows
    }

    /// `lambda_i` = number of nonpivot columns strictly left of row `i`'s pivot.
    pub fn lambda(&self) -> Partition {
        let parts = self
            .pivots
            .iter()
            .map(|&c| (0..c).filter(|j| !self.pivots.contains(j)).count() as u32)
            .collect();
        Partition::new(parts).expect("decreasing pivots give a partition")
    }

    /// `dist(i, j) = k - i + j - #{pivot columns left of j} - 1` with 1-indexed `i, j`.
    pub fn dist(&self, row: usize, col: usize) -> usize {
        let left = self.pivots.iter().filter(|&&c| c < col).count();
        self.k() - (row + 1) + (col + 1) - left - 1
    }

    /// `s(U) = sum val(a_ij) (q^{i + dist} - q^{dist})` at `q = p`, with the
    /// canonical entry bijections.
    pub fn statistic(&self) -> Result<u64> {
        self.statistic_with(&EntryBijections::canonical(self.p))
    }

    pub fn statistic_with(&self, phis: &EntryBijections) -> Result<u64> {
        if phis.modulus() != self.p {
            return Err(Error::ModulusMismatch(phis.modulus(), self.p));
        }
        let overflow = || Error::OutOfRange("subspace statistic overflows u64".into());
        let positions = self.free_positions();
        let mut s = 0u64;
        for (idx, (&(r, c), &a)) in positions.iter().zip(&self.free).enumerate() {
            let lowest = !positions[idx + 1..].iter().any(|&(_, c2)| c2 == c);
            let d = self.dist(r, c) as u32;
            let hi = self.p.checked_pow(r as u32 + 1 + d).ok_or_else(overflow)?;
            let e = hi - self.p.pow(d);
            let term = phis.apply(a, lowest).checked_mul(e).ok_or_else(overflow)?;
            s = s.checked_add(term).ok_or_else(overflow)?;
        }
        Ok(s)
    }
}

impl fmt::Debug for EchelonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EchelonMatrix(p={}, {:?})", self.p, self.rows())
    }
}

/// Streams every `k`-dimensional subspace of `F_p^n` once, as its echelon
/// matrix: pivot sets in colex order, free entries in odometer order (last
/// entry fastest).
pub struct SubspaceIter {
    p: u64,
    n: usize,
    k: usize,
    mask: u64,
    pivots: Vec<usize>,
    free_len: usize,
    free: Vec<u64>,
    done: bool,
}

impl SubspaceIter {
    fn load_mask(&mut self) {
        self.pivots = (0..self.n).rev().filter(|&j| self.mask & (1 << j) != 0).collect();
        self.free_len = self
            .pivots
            .iter()
            .map(|&c| (0..c).filter(|j| self.mask & (1 << j) == 0).count())
            .sum();
        self.free = vec![0; self.free_len];
    }

    /// Next k-subset mask in colex order (Gosper's hack).
    fn advance_mask(&mut self) -> bool {
        if self.k == 0 {
            return false;
        }
        let m = self.mask;
        let c = m & m.wrapping_neg();
        let r = m + c;
        let next = (((r ^ m) >> 2) / c) | r;
        if next >> self.n != 0 {
            return false;
        }
        self.mask = next;
        self.load_mask();
        true
    }
}

impl Iterator for SubspaceIter {
    type Item = EchelonMatrix;

    fn next(&mut self) -> Option<EchelonMatrix> {
        if self.done {
            return None;
        }
        let out = EchelonMatrix {
            p: self.p,
            n: self.n,
            pivots: self.pivots.clone(),
            free: self.free.clone(),
        };
        let mut i = self.free_len;
        loop {
            if i == 0 {
                if !self.advance_mask() {
                    self.done = true;
                }
                break;
            }
            i -= 1;
            self.free[i] += 1;
            if self.free[i] < self.p {
                break;
            }
            self.free[i] = 0;
        }
        Some(out)
    }
}

pub(super) fn subspace_iter(n: usize, k: usize, p: u64) -> SubspaceIter {
    let mut it = SubspaceIter {
        p,
        n,
        k,
        mask: (1u64 << k) - 1,
        pivots: Vec::new(),
        free_len: 0,
        free: Vec::new(),
        done: false,
    };
    it.load_mask();
    it
}

/// The colex-ordered pivot sets, as masks, for parallel enumeration.
pub(super) fn pivot_masks(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// All matrices sharing the pivot set `mask`, in odometer order.
pub(super) fn matrices_for_mask(n: usize, p: u64, mask: u64) -> impl Iterator<Item = EchelonMatrix> {
    let mut it = subspace_iter(n, mask.count_ones() as usize, p);
    it.mask = mask;
    it.load_mask();
    let total = p.pow(it.free_len as u32);
    it.take(total as usize)
}
