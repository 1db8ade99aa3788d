use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// kept as given; they matter only once a box height is attached.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 1-indexed; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    /// `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Largest part.
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }

    /// Pads with zeros (or trims zeros) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Result<Partition> {
        if self.length() > len {
            return Err(Error::OutOfRange(format!("{self} has more than {len} parts")));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Ferrers diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.length()).all(|i| self.part(i) >= inner.part(i))
    }

    /// Removes the first column: every nonzero part decreases by one.
    pub fn without_first_column(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p.saturating_sub(1)).collect(),
        }
    }

    /// All partitions with at most `k` parts each at most `width`, as length-`k`
    /// sequences in increasing lexicographic order.
    pub fn in_box(k: usize, width: u32) -> Vec<Partition> {
        // Each part is bounded by its predecessor, which keeps the output
        // weakly decreasing; iterating upward gives lexicographic order.
        fn rec(k: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == k {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in 0..=bound {
                cur.push(p);
                rec(k, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, width, &mut Vec::with_capacity(k), &mut out);
        out
    }

    /// All partitions of `n` (no trailing zeros), in reverse lexicographic order.
    pub fn of_size(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=bound.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,3,1,0"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A partition placed in a `k x width` box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    partition: Partition,
    k: usize,
    width: u32,
}

impl BoxedPartition {
    /// Pads the partition to `k` entries; fails if it does not fit.
    pub fn new(partition: &Partition, k: usize, width: u32) -> Result<Self> {
        if partition.width() > width {
            return Err(Error::OutOfRange(format!("{partition} is wider than {width}")));
        }
        Ok(BoxedPartition {
            partition: partition.padded(k)?,
            k,
            width,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> u32 {
        self.width
    }
}
