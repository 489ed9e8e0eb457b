//! Partitions, Young-diagram boxes and tableau enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A partition in canonical form: weakly decreasing positive parts, trailing
/// zeros stripped. Serializes as a JSON array such as `[3,1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row as usize)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.has_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram {
                cell,
                shape: self.clone(),
            })
        }
    }

    /// a(b) = λ_i − j
    pub fn arm(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row as usize) - cell.col)
    }

    /// l(b) = #{k > i : λ_k ≥ j}
    pub fn leg(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(self.parts[cell.row as usize..]
            .iter()
            .filter(|&&p| p >= cell.col)
            .count() as u32)
    }

    /// a′(b) = j − 1, the number of boxes to the left of `cell`.
    pub fn arm_colength(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(cell.col - 1)
    }

    /// l′(b) = i − 1
    pub fn leg_colength(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(cell.row - 1)
    }

    /// True iff the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let arm = self.part(c.row as usize) - c.col;
                let leg = conj.part(c.col as usize) - c.row;
                BigInt::from(arm + leg + 1)
            })
            .fold(BigInt::one(), |acc, h| acc * h)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A box of a Young diagram, 1-based (row, column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// y_λ = (−4)^{|λ|} / Π (a(b) + 1 + l(b))
pub fn y_lambda(lambda: &Partition) -> Rational {
    let num = BigInt::from(-4).pow(lambda.weight());
    Rational::new(num, lambda.hook_product())
}

/// Boxes of `outer` lying in a row that meets `outer / inner` but in no column
/// that meets it.
pub fn rc_set(outer: &Partition, inner: &Partition) -> Result<Vec<Cell>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            inner: inner.clone(),
            outer: outer.clone(),
        });
    }
    let (oc, ic) = (outer.conjugate(), inner.conjugate());
    let row_hit = |i: u32| inner.part(i as usize) < outer.part(i as usize);
    let col_hit = |j: u32| ic.part(j as usize) < oc.part(j as usize);
    Ok(outer
        .cells()
        .filter(|c| row_hit(c.row) && !col_hit(c.col))
        .collect())
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n`, ordered by weight then as in [`partitions_of`].
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// A filling of a Young diagram. `rows[i][j]` is the entry of box (i+1, j+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

/// Tableau with weakly decreasing rows and strictly decreasing columns.
pub type ReverseTableau = Tableau;

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, cell: Cell) -> u32 {
        self.rows[cell.row as usize - 1][cell.col as usize - 1]
    }

    /// Row-major entry vector.
    pub fn entries(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Shape of the boxes whose entry exceeds `k`. Only meaningful for reverse
    /// tableaux, where those boxes form a partition.
    pub fn upper_shape(&self, k: u32) -> Partition {
        let parts = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e > k).count() as u32)
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Replaces every entry `e` by `r + 1 − e`.
    pub fn complement(&self, r: u32) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&e| r + 1 - e).collect())
                .collect(),
        }
    }
}

fn enumerate(shape: &Partition, r: u32, reverse: bool) -> Vec<Tableau> {
    let cells: Vec<Cell> = shape.cells().collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut out = Vec::new();
    if shape.len() > r as usize {
        return out;
    }

    fn go(
        idx: usize,
        cells: &[Cell],
        rows: &mut Vec<Vec<u32>>,
        shape: &Partition,
        r: u32,
        reverse: bool,
        out: &mut Vec<Tableau>,
    ) {
        let Some(&c) = cells.get(idx) else {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        };
        let (i, j) = (c.row as usize - 1, c.col as usize - 1);
        let left = (j > 0).then(|| rows[i][j - 1]);
        let above = (i > 0).then(|| rows[i - 1][j]);
        let (lo, hi) = if reverse {
            let hi = left
                .unwrap_or(r)
                .min(above.map_or(r, |a| a.saturating_sub(1)));
            (1, hi)
        } else {
            let lo = left.unwrap_or(1).max(above.map_or(1, |a| a + 1));
            (lo, r)
        };
        for v in lo..=hi {
            rows[i][j] = v;
            go(idx + 1, cells, rows, shape, r, reverse, out);
        }
    }

    go(0, &cells, &mut rows, shape, r, reverse, &mut out);
    out
}

/// Reverse tableaux of shape `shape` with entries in `1..=r`, in lexicographic
/// order of their row-major entry vectors.
pub fn reverse_tableaux(shape: &Partition, r: u32) -> Vec<ReverseTableau> {
    enumerate(shape, r, true)
}

/// Semistandard tableaux of shape `shape` with entries in `1..=r`, in
/// lexicographic order of their row-major entry vectors.
pub fn semistandard_tableaux(shape: &Partition, r: u32) -> Vec<Tableau> {
    enumerate(shape, r, false)
}
