use std::fmt;
use std::str::FromStr;

use crate::boxes::Partition;
use crate::error::{Error, Result};

/// A skew shape `lambda / mu` with both partitions padded to the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: &Partition, mu: &Partition) -> Result<Self> {
        let len = lambda.parts().len().max(mu.parts().len()).max(mu.length());
        let lambda = lambda.padded(len.max(lambda.length()))?;
        let mu = mu.padded(lambda.parts().len())?;
        if !lambda.contains(&mu) {
            return Err(Error::Invalid(format!("{mu} does not fit inside {lambda}")));
        }
        Ok(SkewShape { lambda, mu })
    }

    /// The straight shape `lambda / 0`.
    pub fn straight(lambda: &Partition) -> Self {
        SkewShape {
            lambda: lambda.clone(),
            mu: Partition::new(vec![0; lambda.parts().len()]).expect("zeros are a partition"),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Number of rows `l` (including empty trailing rows as given).
    pub fn rows(&self) -> usize {
        self.lambda.parts().len()
    }

    pub fn is_straight(&self) -> bool {
        self.mu.size() == 0
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.lambda.size() - self.mu.size()
    }

    /// Whether the 1-indexed cell `(i, j)` belongs to the shape.
    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j > self.mu.part(i) as usize && j <= self.lambda.part(i) as usize
    }

    /// `lambda' / mu'`, padded to `lambda_1` rows.
    pub fn conjugate(&self) -> SkewShape {
        let lc = self.lambda.conjugate();
        let len = lc.parts().len();
        let mc = self.mu.conjugate().padded(len).expect("mu fits inside lambda");
        SkewShape { lambda: lc, mu: mc }
    }

    /// Every skew shape `lambda / mu` with `mu <= lambda <= (width^height)`.
    pub fn all_inside(height: usize, width: u32) -> Vec<SkewShape> {
        let boxes = Partition::in_box(height, width);
        let mut out = Vec::new();
        for lambda in &boxes {
            for mu in &boxes {
                if lambda.contains(mu) {
                    out.push(SkewShape {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.lambda.parts().iter().map(u32::to_string).collect();
        write!(f, "{}", l.join(","))?;
        if !self.is_straight() {
            let m: Vec<String> = self.mu.parts().iter().map(u32::to_string).collect();
            write!(f, "/{}", m.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `"2,2/1,0"` or a straight shape `"2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((l, m)) => SkewShape::new(&l.parse()?, &m.parse()?),
            None => Ok(SkewShape::straight(&s.parse()?)),
        }
    }
}

/// A reverse column-strict filling of a skew shape: rows weakly decrease to the
/// right, columns strictly decrease downward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    // rows[i] holds the entries of row i+1 from column mu_{i+1}+1 rightward
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: &SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau {
            shape: shape.clone(),
            rows,
        };
        if !t.is_valid() {
            return Err(Error::Invalid("not a reverse column-strict tableau".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-indexed `(i, j)`, if the cell is in the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        if !self.shape.contains_cell(i, j) {
            return None;
        }
        Some(self.rows[i - 1][j - 1 - self.shape.mu.part(i) as usize])
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    fn is_valid(&self) -> bool {
        let sh = &self.shape;
        if self.rows.len() != sh.rows() {
            return false;
        }
        for i in 1..=sh.rows() {
            let want = (sh.lambda.part(i) - sh.mu.part(i)) as usize;
            let row = &self.rows[i - 1];
            if row.len() != want || row.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
            for j in sh.mu.part(i) as usize + 1..=sh.lambda.part(i) as usize {
                if let (Some(above), Some(here)) = (self.entry(i - 1, j), self.entry(i, j)) {
                    if above <= here {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The partition `nu_i` whose conjugate is row `i` (1-indexed) read left to right.
    pub fn row_partition(&self, i: usize) -> Partition {
        Partition::new(self.rows[i - 1].clone())
            .expect("rows weakly decrease")
            .conjugate()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// All reverse column-strict tableaux of `shape` with entries in `0..=k`, in
/// lexicographic order of their row-major reading words.
pub fn enumerate_tableaux(shape: &SkewShape, k: u32) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = (1..=shape.rows())
        .flat_map(|i| (shape.mu.part(i) as usize + 1..=shape.lambda.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut grid = vec![vec![None; shape.lambda.width() as usize + 1]; shape.rows() + 1];
    fill(shape, k, &cells, 0, &mut grid, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    k: u32,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<Option<u32>>>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        let rows = (1..=shape.rows())
            .map(|i| {
                (shape.mu.part(i) as usize + 1..=shape.lambda.part(i) as usize)
                    .map(|j| grid[i][j].expect("filled"))
                    .collect()
            })
            .collect();
        out.push(Tableau {
            shape: shape.clone(),
            rows,
        });
        return;
    }
    let (i, j) = cells[idx];
    let mut hi = Some(k);
    if let Some(left) = grid[i][j - 1].filter(|_| shape.contains_cell(i, j - 1)) {
        hi = hi.map(|h| h.min(left));
    }
    if shape.contains_cell(i - 1, j) {
        hi = grid[i - 1][j]
            .and_then(|above| above.checked_sub(1))
            .and_then(|a| hi.map(|h| h.min(a)));
    }
    let Some(hi) = hi else { return };
    for v in 0..=hi {
        grid[i][j] = Some(v);
        fill(shape, k, cells, idx + 1, grid, out);
    }
    grid[i][j] = None;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_conjugates() {
        let s = shape("2,2/1,0");
        assert_eq!(s.rows(), 2);
        assert_eq!(s.size(), 3);
        assert!(!s.is_straight());
        assert_eq!(s.to_string(), "2,2/1,0");
        let c = s.conjugate();
        assert_eq!(c.lambda().parts(), &[2, 2]);
        assert_eq!(c.mu().parts(), &[1, 0]);
        assert!("1/2".parse::<SkewShape>().is_err());
        assert_eq!(shape("3,1").conjugate().lambda().parts(), &[2, 1, 1]);
        assert_eq!(SkewShape::all_inside(1, 2).len(), 6);
    }

    #[test]
    fn tableaux_of_small_shapes() {
        let t = enumerate_tableaux(&shape("2,1"), 1);
        let rows: Vec<_> = t.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 0], vec![0]], vec![vec![1, 1], vec![0]]]);
        let t = enumerate_tableaux(&shape("2,2/1,0"), 1);
        let rows: Vec<_> = t.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1], vec![0, 0]], vec![vec![1], vec![1, 0]]]);
        assert_eq!(enumerate_tableaux(&shape(""), 3).len(), 1);
        assert_eq!(enumerate_tableaux(&shape("1,1,1"), 1).len(), 0);
        assert_eq!(enumerate_tableaux(&shape("1"), 2).len(), 3);
    }

    #[test]
    fn validation_and_rows() {
        let sh = shape("2,1");
        assert!(Tableau::new(&sh, vec![vec![1, 0], vec![1]]).is_err());
        assert!(Tableau::new(&sh, vec![vec![0, 1], vec![0]]).is_err());
        let single = Tableau::new(&shape("5"), vec![vec![3, 2, 2, 2, 0]]).unwrap();
        assert_eq!(single.row_partition(1), "4,4,1".parse().unwrap());
        assert_eq!(single.entry_sum(), 9);
        assert_eq!(single.to_string(), "[32220]");
    }
}
