//! Rim hooks, special rim-hook tableaux and semistandard Young tableaux.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// A rim hook stored as a path of cells from tail to head.
///
/// Every step goes one cell up or one cell right, so the hook is connected
/// and has no 2x2 block. The tail is the first cell and the head the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Cell>", try_from = "Vec<Cell>")]
pub struct RimHook {
    cells: Vec<Cell>,
}

impl RimHook {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidHook("a rim hook has at least one cell".into()));
        }
        for w in cells.windows(2) {
            if w[0].up() != Some(w[1]) && w[0].right() != w[1] {
                return Err(Error::InvalidHook(format!(
                    "step {} -> {} is neither up nor right",
                    w[0], w[1]
                )));
            }
        }
        Ok(RimHook { cells })
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<Cell>) -> Self {
        debug_assert!(RimHook::new(cells.clone()).is_ok());
        RimHook { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn tail(&self) -> Cell {
        self.cells[0]
    }

    pub fn head(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn position(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    /// A special hook has its tail in the first column.
    pub fn is_special(&self) -> bool {
        self.tail().col == 1
    }

    /// Leg length: the number of vertical steps.
    pub fn leg_length(&self) -> usize {
        self.cells.windows(2).filter(|w| w[0].col == w[1].col).count()
    }

    /// `(-1)^{leg length}`.
    pub fn sign(&self) -> i32 {
        if self.leg_length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of cells of the leading run in column 1.
    pub fn first_column_len(&self) -> usize {
        self.cells.iter().take_while(|c| c.col == 1).count()
    }

    /// `(i,j)` with `(i+1,j)` and `(i,j+1)` both in the hook.
    pub fn is_internal_corner(&self, cell: Cell) -> bool {
        self.contains(cell) && self.contains(cell.down()) && self.contains(cell.right())
    }

    /// `(i,j)` with `(i-1,j)` and `(i,j-1)` both in the hook.
    pub fn is_external_corner(&self, cell: Cell) -> bool {
        match (cell.up(), cell.left()) {
            (Some(u), Some(l)) => self.contains(cell) && self.contains(u) && self.contains(l),
            _ => false,
        }
    }

    pub fn is_permissible(&self, cell: Cell) -> bool {
        cell == self.head()
            || cell == self.tail()
            || self.is_internal_corner(cell)
            || self.is_external_corner(cell)
    }

    pub(crate) fn cells_mut(&mut self) -> &mut Vec<Cell> {
        &mut self.cells
    }
}

impl From<RimHook> for Vec<Cell> {
    fn from(h: RimHook) -> Self {
        h.cells
    }
}

impl TryFrom<Vec<Cell>> for RimHook {
    type Error = Error;

    fn try_from(cells: Vec<Cell>) -> Result<Self> {
        RimHook::new(cells)
    }
}

/// Internal corners, external corners, head and tail of a hook.
pub fn permissible_cells(hook: &RimHook) -> BTreeSet<Cell> {
    hook.cells()
        .iter()
        .copied()
        .filter(|&c| hook.is_permissible(c))
        .collect()
}

/// A partition of a Ferrers diagram into rim hooks that each meet the
/// first column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSrht")]
pub struct SpecialRimHookTableau {
    shape: Partition,
    hooks: Vec<RimHook>,
}

#[derive(Deserialize)]
struct RawSrht {
    shape: Partition,
    hooks: Vec<RimHook>,
}

impl TryFrom<RawSrht> for SpecialRimHookTableau {
    type Error = Error;

    fn try_from(raw: RawSrht) -> Result<Self> {
        SpecialRimHookTableau::new(raw.shape, raw.hooks)
    }
}

impl SpecialRimHookTableau {
    /// Validates the hooks and stores them sorted by tail row, top first.
    pub fn new(shape: Partition, mut hooks: Vec<RimHook>) -> Result<Self> {
        let cells = shape.cell_set();
        let mut seen = BTreeSet::new();
        for h in &hooks {
            if !h.is_special() {
                return Err(Error::InvalidTableau(format!(
                    "hook with tail {} misses the first column",
                    h.tail()
                )));
            }
            for &c in h.cells() {
                if !cells.contains(&c) {
                    return Err(Error::InvalidTableau(format!("{c} lies outside {shape}")));
                }
                if !seen.insert(c) {
                    return Err(Error::InvalidTableau(format!("{c} is covered twice")));
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::InvalidTableau(format!(
                "hooks cover {} of the {} cells of {shape}",
                seen.len(),
                cells.len()
            )));
        }
        hooks.sort();
        Ok(SpecialRimHookTableau { shape, hooks })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn hooks(&self) -> &[RimHook] {
        &self.hooks
    }

    /// The partition of hook sizes.
    pub fn hook_type(&self) -> Partition {
        Partition::from_sizes(self.hooks.iter().map(RimHook::len))
    }

    pub fn sign(&self) -> i32 {
        self.hooks.iter().map(RimHook::sign).product()
    }

    /// The hook containing `cell`.
    pub fn hook_at(&self, cell: Cell) -> Option<&RimHook> {
        self.hooks.iter().find(|h| h.contains(cell))
    }

    pub fn into_hooks(self) -> Vec<RimHook> {
        self.hooks
    }
}

/// Product of hook signs; a free-function form of [`SpecialRimHookTableau::sign`].
pub fn sign(tableau: &SpecialRimHookTableau) -> i32 {
    tableau.sign()
}

/// Cells of the outer rim of `shape`, walking from the bottom cell of the
/// first column: right while possible, otherwise up.
fn rim_from_first_column(shape: &Partition) -> Vec<Cell> {
    let mut out = Vec::new();
    if shape.is_empty() {
        return out;
    }
    let mut cur = Cell::new(shape.len(), 1);
    loop {
        out.push(cur);
        if shape.contains(cur.right()) {
            cur = cur.right();
        } else if let Some(up) = cur.up() {
            cur = up;
        } else {
            break;
        }
    }
    out
}

/// Enumerates special rim-hook tableaux of `shape`, optionally restricted to
/// one type.
///
/// The hook through the bottom cell of column 1 is always a border strip of
/// the shape starting at that cell, so peeling strips from the rim and
/// recursing on what remains visits every tableau exactly once.
fn srht_search(
    shape: &Partition,
    sizes: Option<&mut BTreeMap<usize, usize>>,
    acc: &mut Vec<RimHook>,
    out: &mut Vec<Vec<RimHook>>,
) {
    if shape.is_empty() {
        out.push(acc.clone());
        return;
    }
    let rim = rim_from_first_column(shape);
    let mut sizes = sizes;
    for k in 1..=rim.len() {
        if let Some(s) = sizes.as_deref() {
            if s.get(&k).copied().unwrap_or(0) == 0 {
                continue;
            }
        }
        let strip = &rim[..k];
        let mut rest = shape.cell_set();
        for c in strip {
            rest.remove(c);
        }
        let Some(remaining) = Partition::from_cells(&rest) else {
            continue;
        };
        acc.push(RimHook::from_cells_unchecked(strip.to_vec()));
        match sizes.as_deref_mut() {
            Some(s) => {
                *s.get_mut(&k).unwrap() -= 1;
                srht_search(&remaining, Some(s), acc, out);
                *s.get_mut(&k).unwrap() += 1;
            }
            None => srht_search(&remaining, None, acc, out),
        }
        acc.pop();
    }
}

/// All special rim-hook tableaux with the given shape and type.
pub fn enumerate_srht(shape: &Partition, hook_type: &Partition) -> Vec<SpecialRimHookTableau> {
    if shape.n() != hook_type.n() {
        return Vec::new();
    }
    let mut sizes = BTreeMap::new();
    for &p in hook_type.parts() {
        *sizes.entry(p).or_insert(0) += 1;
    }
    let mut raw = Vec::new();
    srht_search(shape, Some(&mut sizes), &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|hooks| SpecialRimHookTableau::new(shape.clone(), hooks).expect("valid by construction"))
        .collect()
}

/// All special rim-hook tableaux of the given shape, of every type.
pub fn enumerate_srht_any_type(shape: &Partition) -> Vec<SpecialRimHookTableau> {
    let mut raw = Vec::new();
    srht_search(shape, None, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|hooks| SpecialRimHookTableau::new(shape.clone(), hooks).expect("valid by construction"))
        .collect()
}

/// A filling with weakly increasing rows and strictly increasing columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", i + 1)));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| a >= b) {
                return Err(Error::InvalidTableau(format!(
                    "column strictness fails between rows {} and {}",
                    i,
                    i + 1
                )));
            }
        }
        debug_assert_eq!(shape.len(), rows.len());
        Ok(SemistandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sizes(self.rows.iter().map(Vec::len))
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// `content[k-1]` counts the entries equal to `k`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        c
    }

    pub fn is_standard(&self) -> bool {
        self.content().iter().all(|&m| m == 1)
    }

    /// Cell of the first occurrence of `value` in row-major order.
    pub fn position_of(&self, value: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&v| v == value)
                .map(|j| Cell::new(i + 1, j + 1))
        })
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(SemistandardTableau::new(rows.clone()).is_ok());
        SemistandardTableau { rows }
    }
}

impl From<SemistandardTableau> for Vec<Vec<usize>> {
    fn from(t: SemistandardTableau) -> Self {
        t.rows
    }
}

impl TryFrom<Vec<Vec<usize>>> for SemistandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        SemistandardTableau::new(rows)
    }
}

/// Row-by-row backtracking over fillings with the given content, which may
/// be any composition. Calls `visit` once per tableau, in lexicographic
/// order of the row-major reading word.
fn ssyt_search(shape: &Partition, content: &[usize], visit: &mut dyn FnMut(&[Vec<usize>])) {
    if shape.n() != content.iter().sum::<usize>() {
        return;
    }
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut remaining = content.to_vec();

    fn go(
        idx: usize,
        cells: &[Cell],
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut [usize],
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if idx == cells.len() {
            visit(rows);
            return;
        }
        let Cell { row, col } = cells[idx];
        let left = if col > 1 { rows[row - 1][col - 2] } else { 1 };
        let above = if row > 1 { rows[row - 2][col - 1] + 1 } else { 1 };
        let lo = left.max(above);
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            rows[row - 1].push(v);
            go(idx + 1, cells, rows, remaining, visit);
            rows[row - 1].pop();
            remaining[v - 1] += 1;
        }
    }

    go(0, &cells, &mut rows, &mut remaining, visit);
}

/// All semistandard tableaux of the given shape and content.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    ssyt_search(shape, content.parts(), &mut |rows| {
        out.push(SemistandardTableau::from_rows_unchecked(rows.to_vec()))
    });
    out
}

/// The Kostka number `K_{shape,content}`.
pub fn count_ssyt(shape: &Partition, content: &Partition) -> usize {
    let mut count = 0;
    ssyt_search(shape, content.parts(), &mut |_| count += 1);
    count
}

/// Standard Young tableaux of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<SemistandardTableau> {
    enumerate_ssyt(shape, &Partition::column(shape.n()))
}
