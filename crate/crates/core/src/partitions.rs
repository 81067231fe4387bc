//! Integer partitions, Ferrers diagrams and the reverse-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a Ferrers diagram in English notation: row 1 is the top row,
/// column 1 the leftmost column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", try_from = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The cell directly above, if any.
    pub fn up(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    /// The cell directly to the left, if any.
    pub fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl TryFrom<(usize, usize)> for Cell {
    type Error = Error;

    fn try_from((row, col): (usize, usize)) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::Parse {
                what: "cell",
                input: format!("[{row},{col}]"),
                reason: "cells are 1-based".into(),
            });
        }
        Ok(Cell::new(row, col))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "cell",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut it = inner.split(',').map(|t| t.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(r)), Some(Ok(c)), None) => {
                Cell::try_from((r, c)).map_err(|_| err("cells are 1-based"))
            }
            _ => Err(err("expected two comma-separated integers")),
        }
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// The `Ord` implementation is the reverse-lexicographic order used to
/// index Kostka matrices: `a < b` when, at the first index where the
/// zero-padded part sequences differ, `a` has the larger part. Hence `(n)`
/// is the least partition of `n` and `(1^n)` the greatest, and iterating a
/// `BTreeMap<Partition, _>` visits keys in matrix order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "part {} of {:?} is zero",
                pos + 1,
                parts
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive sizes decreasingly; zeros are dropped.
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = sizes.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_sizes([n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight `n = Σ parts`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of (1-based) row `row`, zero outside the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of (1-based) column `col`.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// A cell at the end of both its row and its column.
    pub fn is_corner(&self, cell: Cell) -> bool {
        self.contains(cell) && !self.contains(cell.down()) && !self.contains(cell.right())
    }

    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .map(|r| Cell::new(r, self.row_len(r)))
            .filter(|&c| self.is_corner(c))
            .collect()
    }

    /// `λ'_j` is the number of parts of `λ` that are at least `j`.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=first).map(|j| self.col_len(j)).collect(),
        }
    }

    /// Cells of the Ferrers diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells().into_iter().collect()
    }

    /// The Ferrers shape with exactly the given cells, if they form one.
    pub fn from_cells<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<Partition> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return None;
            }
            if rows.len() < c.row {
                rows.resize_with(c.row, Vec::new);
            }
            rows[c.row - 1].push(c.col);
        }
        let mut parts = Vec::with_capacity(rows.len());
        for mut row in rows {
            row.sort_unstable();
            row.dedup();
            if row.is_empty() || row.iter().enumerate().any(|(k, &c)| c != k + 1) {
                return None;
            }
            parts.push(row.len());
        }
        Partition::new(parts).ok()
    }

    /// Multiplicity notation such as `1^2 2^2 3`, smallest part first.
    pub fn to_multiplicity_string(&self) -> String {
        let mut out = Vec::new();
        let mut parts = self.parts.clone();
        parts.reverse();
        for chunk in parts.chunk_by(|a, b| a == b) {
            match chunk.len() {
                1 => out.push(chunk[0].to_string()),
                m => out.push(format!("{}^{}", chunk[0], m)),
            }
        }
        out.join(" ")
    }

    /// Multiplicities `m_k` (index `k`) of each part size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// The partition with one more part equal to `size`.
    pub fn with_part(&self, size: usize) -> Partition {
        Partition::from_sizes(self.parts.iter().copied().chain([size]))
    }

    /// The partition with one part equal to `size` removed, if present.
    pub fn without_part(&self, size: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == size)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.len().max(other.len());
        for i in 0..len {
            let a = self.parts.get(i).copied().unwrap_or(0);
            let b = other.parts.get(i).copied().unwrap_or(0);
            match b.cmp(&a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Accepts `[3,2,2,1,1]`, `3,2,2,1,1`, `()`, `[]`, and multiplicity form
/// `1^2 2^2 3` (parts in any order).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "partition",
            input: s.to_string(),
            reason,
        };
        let t = s.trim();
        let bracketed = (t.starts_with('[') && t.ends_with(']'))
            || (t.starts_with('(') && t.ends_with(')'));
        let body = if bracketed { &t[1..t.len() - 1] } else { t }.trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        if body.contains('^') || (!body.contains(',') && body.contains(char::is_whitespace)) {
            let mut sizes = Vec::new();
            for tok in body.split_whitespace() {
                let (part, mult) = match tok.split_once('^') {
                    Some((p, m)) => (p, m),
                    None => (tok, "1"),
                };
                let part: usize = part.parse().map_err(|e| err(format!("{tok}: {e}")))?;
                let mult: usize = mult.parse().map_err(|e| err(format!("{tok}: {e}")))?;
                if part == 0 {
                    return Err(err("parts must be positive".into()));
                }
                sizes.extend(std::iter::repeat_n(part, mult));
            }
            return Ok(Partition::from_sizes(sizes));
        }
        let parts = body
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| err(e.to_string()))?;
        Partition::new(parts).map_err(|e| err(e.to_string()))
    }
}

/// All partitions of `n`, in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The partition number `p(n)`.
pub fn partition_count(n: usize) -> usize {
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_three() {
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn enumerates_zero() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumerates_four() {
        let all = enumerate_partitions(4);
        assert_eq!(all.len(), 5);
        assert_eq!(all.first(), Some(&p(&[4])));
        assert_eq!(all.last(), Some(&p(&[1, 1, 1, 1])));
    }

    #[test]
    fn partition_numbers() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partition_count(n), e);
            assert_eq!(enumerate_partitions(n).len(), e);
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2, 2, 1, 1]).conjugate(), p(&[5, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn cells_of_small_shapes() {
        assert_eq!(
            p(&[2, 1]).cells(),
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert!(Partition::empty().cells().is_empty());
        let big = p(&[3, 2, 2, 1, 1]).cell_set();
        assert_eq!(big.len(), 9);
        assert!(big.contains(&Cell::new(3, 2)));
        assert!(!big.contains(&Cell::new(3, 3)));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("[3,2,2,1,1]".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1, 1]));
        assert_eq!("1^2 2^2 3".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1, 1]));
        assert_eq!("4".parse::<Partition>().unwrap(), p(&[4]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("1^4".parse::<Partition>().unwrap(), p(&[1, 1, 1, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 2, 1, 1]).to_multiplicity_string(), "1^2 2^2 3");
    }

    #[test]
    fn cells_roundtrip_through_shape() {
        let lam = p(&[4, 3, 3, 1]);
        assert_eq!(Partition::from_cells(&lam.cells()), Some(lam.clone()));
        let mut cells = lam.cell_set();
        cells.remove(&Cell::new(2, 2));
        assert_eq!(Partition::from_cells(&cells), None);
        cells.insert(Cell::new(2, 2));
        cells.insert(Cell::new(3, 4));
        assert_eq!(Partition::from_cells(&cells), None);
    }

    #[test]
    fn corners() {
        assert_eq!(
            p(&[3, 2, 2, 1]).corners(),
            vec![Cell::new(1, 3), Cell::new(3, 2), Cell::new(4, 1)]
        );
    }

    #[test]
    fn serde_as_plain_array() {
        let lam = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(serde_json::to_string(&Cell::new(2, 5)).unwrap(), "[2,5]");
    }
}
