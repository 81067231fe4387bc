//! P-tableaux, chromatic symmetric functions and the height-two involution.

use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Value};

use super::Poset;
use crate::error::{Error, Result};
use crate::involution::{iota, RootedTableau};
use crate::partitions::{enumerate_partitions, Cell, Partition};
use crate::render::Canvas;
use crate::scalar::Coefficient;
use crate::symfunc::{inverse_kostka_matrix, schur_to_e_with, Basis, PartitionMatrix, SymFuncExpansion};
use crate::tableaux::{enumerate_srht_any_type, SpecialRimHookTableau};

/// A filling of a shape by the elements of a poset, each used once, with
/// columns strictly increasing and no row neighbour strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PTableau {
    rows: Vec<Vec<usize>>,
}

impl PTableau {
    /// Checks both conditions and that the entries are exactly `0..|P|`.
    pub fn new(poset: &Poset, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = PTableau { rows };
        Partition::new(t.rows.iter().map(Vec::len).collect())?;
        let mut seen = vec![false; poset.len()];
        for &x in t.rows.iter().flatten() {
            if x >= poset.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidTableau(format!("entry {x} is repeated or unknown")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTableau("not every element is used".into()));
        }
        if !t.is_valid(poset) {
            return Err(Error::InvalidTableau("filling breaks a P-tableau condition".into()));
        }
        Ok(t)
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        let get = |i: usize, j: usize| self.rows.get(i).and_then(|r| r.get(j)).copied();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if let Some(below) = get(i + 1, j) {
                    if !poset.lt(x, below) {
                        return false;
                    }
                }
                if let Some(right) = get(i, j + 1) {
                    if poset.lt(right, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sizes(self.rows.iter().map(Vec::len))
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    /// Rows of labels.
    pub fn labelled(&self, poset: &Poset) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| poset.label(x).to_string()).collect())
            .collect()
    }
}

fn p_tableau_search(poset: &Poset, shape: &Partition, mut visit: impl FnMut(&[Vec<usize>])) {
    fn go(
        poset: &Poset,
        cells: &[Cell],
        k: usize,
        used: u64,
        rows: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&cell) = cells.get(k) else {
            visit(rows);
            return;
        };
        let (i, j) = (cell.row - 1, cell.col - 1);
        for x in 0..poset.len() {
            if used >> x & 1 == 1 {
                continue;
            }
            if i > 0 && !poset.lt(rows[i - 1][j], x) {
                continue;
            }
            if j > 0 && poset.lt(x, rows[i][j - 1]) {
                continue;
            }
            rows[i].push(x);
            go(poset, cells, k + 1, used | 1 << x, rows, visit);
            rows[i].pop();
        }
    }
    if shape.n() != poset.len() {
        return;
    }
    let cells = shape.cells();
    let mut rows = vec![Vec::new(); shape.len()];
    go(poset, &cells, 0, 0, &mut rows, &mut visit);
}

/// Every P-tableau of the given shape, in lexicographic row-major fill order.
pub fn enumerate_p_tableaux(poset: &Poset, shape: &Partition) -> Vec<PTableau> {
    let mut out = Vec::new();
    p_tableau_search(poset, shape, |rows| out.push(PTableau { rows: rows.to_vec() }));
    out
}

/// Number of P-tableaux of the given shape; zero unless `|λ| = |P|`.
pub fn count_p_tableaux(poset: &Poset, shape: &Partition) -> usize {
    let mut count = 0;
    p_tableau_search(poset, shape, |_| count += 1);
    count
}

/// A special rim-hook tableau and a P-tableau of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinedPair {
    pub tableau: SpecialRimHookTableau,
    pub filling: PTableau,
}

impl CombinedPair {
    pub fn sign(&self) -> i32 {
        self.tableau.sign()
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    pub fn hook_type(&self) -> Partition {
        self.tableau.hook_type()
    }

    /// Poset labels at the cells, hooks drawn as edges.
    pub fn render(&self, poset: &Poset) -> String {
        let mut canvas = Canvas::new();
        for (i, row) in self.filling.rows().iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                canvas.put(Cell::new(i + 1, j + 1), poset.label(x));
            }
        }
        for h in self.tableau.hooks() {
            canvas.hook(h, "*");
        }
        canvas.render()
    }

    pub fn to_json(&self, poset: &Poset) -> Value {
        json!({
            "shape": self.tableau.shape(),
            "sign": self.sign(),
            "type": self.hook_type(),
            "hooks": self.tableau.hooks(),
            "entries": self.filling.labelled(poset),
        })
    }
}

/// All pairs `(S, T)` of a common shape: shapes in reverse-lex order, then
/// special rim-hook tableaux in enumeration order, then P-tableaux in fill order.
fn combined_pairs(poset: &Poset) -> Vec<CombinedPair> {
    let mut out = Vec::new();
    for shape in enumerate_partitions(poset.len()) {
        let fillings = enumerate_p_tableaux(poset, &shape);
        if fillings.is_empty() {
            continue;
        }
        for s in enumerate_srht_any_type(&shape) {
            for t in &fillings {
                out.push(CombinedPair {
                    tableau: s.clone(),
                    filling: t.clone(),
                });
            }
        }
    }
    out
}

/// Matching and fixed points of the height-two involution.
#[derive(Debug, Clone)]
pub struct PairCensus {
    pub pairs: usize,
    /// `(negative pair, positive image)`.
    pub matched: Vec<(CombinedPair, CombinedPair)>,
    /// Positive pairs outside the image, in generation order.
    pub fixed: Vec<CombinedPair>,
}

impl PairCensus {
    /// Number of fixed points of each type.
    pub fn fixed_by_type(&self) -> BTreeMap<Partition, usize> {
        let mut out = BTreeMap::new();
        for p in &self.fixed {
            *out.entry(p.hook_type()).or_insert(0) += 1;
        }
        out
    }

    pub fn fixed_by_shape(&self) -> BTreeMap<Partition, Vec<&CombinedPair>> {
        let mut out: BTreeMap<Partition, Vec<&CombinedPair>> = BTreeMap::new();
        for p in &self.fixed {
            out.entry(p.shape().clone()).or_default().push(p);
        }
        out
    }

    pub fn to_json(&self, poset: &Poset) -> Value {
        let fixed: serde_json::Map<String, Value> = self
            .fixed_by_shape()
            .into_iter()
            .map(|(shape, ps)| (shape.to_string(), ps.iter().map(|p| p.to_json(poset)).collect()))
            .collect();
        json!({
            "pairs": self.pairs,
            "matched": self
                .matched
                .iter()
                .map(|(a, b)| json!([a.to_json(poset), b.to_json(poset)]))
                .collect::<Vec<_>>(),
            "fixed": fixed,
        })
    }

    pub fn render(&self, poset: &Poset) -> String {
        let mut out = format!(
            "{} pairs, {} matched, {} fixed\n",
            self.pairs,
            self.matched.len(),
            self.fixed.len()
        );
        for (k, (a, b)) in self.matched.iter().enumerate() {
            out.push_str(&format!("\nmatch {} ({:+} <-> {:+})\n", k + 1, a.sign(), b.sign()));
            out.push_str(&a.render(poset));
            out.push_str("  <->\n");
            out.push_str(&b.render(poset));
        }
        for (shape, ps) in self.fixed_by_shape() {
            out.push_str(&format!("\nfixed points of shape {shape}: {}\n", ps.len()));
            for p in ps {
                out.push('\n');
                out.push_str(&p.render(poset));
            }
        }
        out
    }
}

fn with_root_moved(filling: &PTableau, from: Cell, to: Cell) -> Vec<Vec<usize>> {
    let mut rows = filling.rows().to_vec();
    let x = rows[from.row - 1].remove(from.col - 1);
    if rows.len() < to.row {
        rows.resize_with(to.row, Vec::new);
    }
    rows[to.row - 1].insert(to.col - 1, x);
    rows.retain(|r| !r.is_empty());
    rows
}

/// Moves the element at `root` through the rooted involution.
fn push_through(poset: &Poset, pair: &CombinedPair, root: Cell) -> Result<CombinedPair> {
    let start = RootedTableau::from_srht(&pair.tableau, root)?;
    let (end, _) = iota(&start)?;
    let tableau = end.to_srht()?;
    let filling = PTableau::new(poset, with_root_moved(&pair.filling, root, end.root()))
        .map_err(|e| Error::Involution(format!("moved filling is not a P-tableau: {e}")))?;
    Ok(CombinedPair { tableau, filling })
}

/// Whether a positive pair lies in the image of the negative pairs.
fn in_image(poset: &Poset, pair: &CombinedPair) -> bool {
    let parts = pair.shape().parts();
    let nu1 = parts[0];
    let nu2 = parts.get(1).copied().unwrap_or(0);
    if pair.sign() != 1 || parts.len() > 2 || nu1 <= nu2 + 1 {
        return false;
    }
    let x = pair.filling.get(Cell::new(1, nu1)).expect("in shape");
    let y = pair.filling.get(Cell::new(1, nu2 + 1)).expect("in shape");
    poset.lt(y, x)
}

/// Matches each negative pair with a positive one of shape
/// `(λ₁ + 1, λ₂ − 1)` by rooting at the end of row two, and checks that
/// the images are exactly the positive pairs with `ν₁ > ν₂ + 1` and
/// `T'_{1,ν₂+1} < T'_{1,ν₁}`.
pub fn stanley_stembridge_involution(poset: &Poset) -> Result<PairCensus> {
    let h = poset.height()?;
    if h > 2 {
        return Err(Error::HeightTooLarge(h));
    }
    let pairs = combined_pairs(poset);
    let mut matched = Vec::new();
    let mut images = HashSet::new();
    for pair in pairs.iter().filter(|p| p.sign() < 0) {
        let parts = pair.shape().parts();
        if parts.len() != 2 {
            return Err(Error::Involution(format!("negative pair of shape {}", pair.shape())));
        }
        let root = Cell::new(2, parts[1]);
        let image = push_through(poset, pair, root)?;
        let expected = Partition::from_sizes([parts[0] + 1, parts[1] - 1]);
        if *image.shape() != expected || image.sign() != 1 || !in_image(poset, &image) {
            return Err(Error::Involution(format!(
                "image of shape {} does not have the expected form",
                image.shape()
            )));
        }
        let back = push_through(poset, &image, Cell::new(1, parts[0] + 1))?;
        if back != *pair {
            return Err(Error::Involution("matching is not an involution".into()));
        }
        if !images.insert(image.clone()) {
            return Err(Error::Involution("two negative pairs share an image".into()));
        }
        matched.push((pair.clone(), image));
    }
    let mut fixed = Vec::new();
    for pair in pairs.iter().filter(|p| p.sign() > 0) {
        let hit = images.contains(pair);
        if hit != in_image(poset, pair) {
            return Err(Error::Involution(format!(
                "image characterisation fails on a pair of shape {}",
                pair.shape()
            )));
        }
        if !hit {
            fixed.push(pair.clone());
        }
    }
    Ok(PairCensus {
        pairs: pairs.len(),
        matched,
        fixed,
    })
}

/// Schur and elementary expansions of the chromatic symmetric function.
#[derive(Debug, Clone)]
pub struct CsfResult<T> {
    pub s_expansion: SymFuncExpansion<T>,
    pub e_expansion: SymFuncExpansion<T>,
    /// Present when the poset has height at most two.
    pub pair_census: Option<PairCensus>,
}

/// Expands the chromatic symmetric function of the incomparability graph of
/// a (3+1)-free poset.
pub fn csf<T: Coefficient>(poset: &Poset) -> Result<CsfResult<T>> {
    csf_with(poset, &inverse_kostka_matrix(poset.len()))
}

/// [`csf`] with a precomputed inverse Kostka matrix of weight `|P|`.
pub fn csf_with<T: Coefficient>(poset: &Poset, inverse: &PartitionMatrix<T>) -> Result<CsfResult<T>> {
    if poset.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if !poset.is_three_plus_one_free() {
        return Err(Error::NotThreePlusOneFree);
    }
    let n = poset.len();
    if inverse.n() != n {
        return Err(Error::InvalidPartition(format!(
            "inverse Kostka matrix has weight {}, poset has {n} elements",
            inverse.n()
        )));
    }
    let mut s_expansion = SymFuncExpansion::zero(Basis::S, n);
    let mut e_expansion = SymFuncExpansion::zero(Basis::E, n);
    for shape in enumerate_partitions(n) {
        let f = count_p_tableaux(poset, &shape);
        if f == 0 {
            continue;
        }
        let f = T::from_count(f);
        s_expansion.add_term(shape.conjugate(), f.clone())?;
        e_expansion = e_expansion.add(&schur_to_e_with(&shape, inverse).scale(&f))?;
    }
    let pair_census = if poset.height()? <= 2 {
        Some(stanley_stembridge_involution(poset)?)
    } else {
        None
    };
    Ok(CsfResult {
        s_expansion,
        e_expansion,
        pair_census,
    })
}
