//! Finite posets, incomparability graphs and proper colourings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

mod csf;
pub mod generate;

pub use csf::{
    count_p_tableaux, csf, csf_with, enumerate_p_tableaux, stanley_stembridge_involution,
    CombinedPair, CsfResult, PTableau, PairCensus,
};

/// Largest supported poset; relations are stored as 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

/// A finite partial order on elements `0..n`, with display labels.
///
/// `up[i]` has bit `j` set iff `i ≤ j`; `down` is its transpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<u64>,
    down: Vec<u64>,
}

fn default_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{i}")
    }
}

impl Poset {
    /// Builds the reflexive-transitive closure of the given cover pairs
    /// `(x, y)` meaning `x < y`, rejecting cycles.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::InvalidPoset(format!("at most {MAX_ELEMENTS} elements are supported")));
        }
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation ({x},{y}) out of range")));
            }
            up[x] |= 1 << y;
        }
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::InvalidPoset(format!(
                        "{} and {} lie on a cycle",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self::from_up_masks(labels, up))
    }

    /// Builds a poset from a full relation, checking the partial-order axioms.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::InvalidPoset(format!("at most {MAX_ELEMENTS} elements are supported")));
        }
        let mut up = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i] |= 1 << j;
                }
            }
        }
        for i in 0..n {
            if up[i] >> i & 1 == 0 {
                return Err(Error::InvalidPoset("relation is not reflexive".into()));
            }
            for j in 0..n {
                if i != j && up[i] >> j & 1 == 1 {
                    if up[j] >> i & 1 == 1 {
                        return Err(Error::InvalidPoset("relation is not antisymmetric".into()));
                    }
                    if up[j] & !up[i] != 0 {
                        return Err(Error::InvalidPoset("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(Self::from_up_masks(labels, up))
    }

    pub(crate) fn from_up_masks(labels: Vec<String>, up: Vec<u64>) -> Self {
        let n = labels.len();
        let mut down = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if up[i] >> j & 1 == 1 {
                    down[j] |= 1 << i;
                }
            }
        }
        Poset { labels, up, down }
    }

    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(default_label).collect();
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(labels, &covers).expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_covers((0..n).map(default_label).collect(), &[]).expect("an antichain is a poset")
    }

    /// Disjoint union, labels of `other` suffixed with `'` on collision.
    pub fn disjoint_union(&self, other: &Poset) -> Self {
        let offset = self.len();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let mut up = self.up.clone();
        up.extend(other.up.iter().map(|m| m << offset));
        Self::from_up_masks(labels, up)
    }

    /// Parses lines `x < y` (cover relations) and bare `x` (an element with
    /// no relations); `#` starts a comment. Elements are numbered in order
    /// of first appearance.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut ids: BTreeMap<String, usize> = BTreeMap::new();
        let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
            *ids.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() - 1
            })
        };
        let mut covers = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let names: Vec<&str> = line.split('<').map(str::trim).collect();
            if names.iter().any(|n| n.is_empty() || n.contains(char::is_whitespace)) {
                return Err(Error::Parse {
                    what: "poset",
                    input: raw.to_string(),
                    reason: format!("line {}: expected `x < y` or a single label", lineno + 1),
                });
            }
            let ids: Vec<usize> = names.iter().map(|n| intern(n, &mut labels)).collect();
            covers.extend(ids.windows(2).map(|w| (w[0], w[1])));
        }
        Self::from_covers(labels, &covers)
    }

    /// Cover relations as `x < y` lines, isolated elements on their own line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let covers = self.covers();
        for i in 0..self.len() {
            if !covers.iter().any(|&(x, y)| x == i || y == i) {
                let _ = writeln!(out, "{}", self.labels[i]);
            }
        }
        for (x, y) in covers {
            let _ = writeln!(out, "{} < {}", self.labels[x], self.labels[y]);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub(crate) fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub(crate) fn down_mask(&self, i: usize) -> u64 {
        self.down[i]
    }

    /// Pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements ordered by the size of their down-set, a linear extension.
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(), i));
        order
    }

    /// Longest chain length within the elements of `mask`.
    fn height_within(&self, mask: u64) -> usize {
        let mut best = vec![0usize; self.len()];
        let mut overall = 0;
        for i in self.linear_extension() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let below = (0..self.len())
                .filter(|&j| mask >> j & 1 == 1 && self.lt(j, i))
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
            best[i] = below + 1;
            overall = overall.max(best[i]);
        }
        overall
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self.height_within(self.full_mask()))
    }

    fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Elements incomparable to `i`.
    fn incomparable_mask(&self, i: usize) -> u64 {
        self.full_mask() & !(self.up[i] | self.down[i])
    }

    /// True iff no `a`-element chain and `b`-element chain exist with every
    /// element of one incomparable to every element of the other.
    pub fn is_ab_free(&self, a: usize, b: usize) -> bool {
        fn chains(p: &Poset, order: &[usize], from: usize, left: usize, mask: u64, out: &mut Vec<u64>) {
            if left == 0 {
                out.push(mask);
                return;
            }
            for k in from..order.len() {
                let x = order[k];
                let extends = (0..p.len()).all(|y| mask >> y & 1 == 0 || p.lt(y, x));
                if extends {
                    chains(p, order, k + 1, left - 1, mask | 1 << x, out);
                }
            }
        }
        let order = self.linear_extension();
        let mut found = Vec::new();
        chains(self, &order, 0, a, 0, &mut found);
        found.into_iter().all(|chain| {
            let mut free = self.full_mask() & !chain;
            for x in 0..self.len() {
                if chain >> x & 1 == 1 {
                    free &= self.incomparable_mask(x);
                }
            }
            self.height_within(free) < b
        })
    }

    pub fn is_three_plus_one_free(&self) -> bool {
        self.is_ab_free(3, 1)
    }

    /// Vertices are the elements; edges join incomparable pairs.
    pub fn incomparability_graph(&self) -> Graph {
        let adj = (0..self.len()).map(|i| self.incomparable_mask(i)).collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Adjoins a new element above every existing one.
    pub fn with_maximum(&self) -> Self {
        let mut labels = self.labels.clone();
        let mut top = String::from("top");
        while labels.contains(&top) {
            top.push('\'');
        }
        labels.push(top);
        let n = self.len();
        let mut up: Vec<u64> = self.up.iter().map(|m| m | 1 << n).collect();
        up.push(1 << n);
        Self::from_up_masks(labels, up)
    }
}

/// A simple undirected graph with adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidPoset(format!("bad edge ({u},{v})")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { labels, adj })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    /// Number of proper colourings with colours `1..=k`, counted by
    /// assigning colours vertex by vertex.
    pub fn chromatic_polynomial_value(&self, k: usize) -> u64 {
        fn go(g: &Graph, v: usize, k: usize, colours: &mut Vec<usize>) -> u64 {
            if v == g.len() {
                return 1;
            }
            let mut total = 0;
            for c in 0..k {
                if (0..v).any(|u| colours[u] == c && g.has_edge(u, v)) {
                    continue;
                }
                colours[v] = c;
                total += go(g, v + 1, k, colours);
            }
            total
        }
        go(self, 0, k, &mut vec![0; self.len()])
    }

    /// Coefficients (constant term first) of the chromatic polynomial, by
    /// deletion and contraction.
    pub fn chromatic_polynomial(&self) -> Vec<i64> {
        fn go(adj: &mut Vec<u64>, alive: u64) -> Vec<i64> {
            let n = alive.count_ones() as usize;
            let edge = (0..64)
                .filter(|&u| alive >> u & 1 == 1)
                .find_map(|u| {
                    let nb = adj[u] & alive;
                    (nb != 0).then(|| (u, nb.trailing_zeros() as usize))
                });
            let Some((u, v)) = edge else {
                let mut poly = vec![0; n + 1];
                poly[n] = 1;
                return poly;
            };
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
            let deleted = go(adj, alive);
            let (saved_u, saved_v) = (adj[u], adj[v]);
            let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
            let touched: Vec<usize> = (0..64).filter(|&w| merged >> w & 1 == 1).collect();
            let saved: Vec<u64> = touched.iter().map(|&w| adj[w]).collect();
            adj[u] = merged;
            for &w in &touched {
                adj[w] = (adj[w] & !(1 << v)) | 1 << u;
            }
            let contracted = go(adj, alive & !(1 << v));
            for (&w, &m) in touched.iter().zip(&saved) {
                adj[w] = m;
            }
            adj[u] = saved_u | 1 << v;
            adj[v] = saved_v | 1 << u;
            let mut out = deleted;
            for (i, c) in contracted.into_iter().enumerate() {
                out[i] -= c;
            }
            out
        }
        let mut adj = self.adj.clone();
        let alive = if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 };
        go(&mut adj, alive)
    }
}

/// Evaluates a polynomial given by coefficients, constant term first.
pub fn evaluate_polynomial(coeffs: &[i64], x: i64) -> i64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_poset() -> Poset {
        Poset::parse("a < c\nb < c\nb < d\n").unwrap()
    }

    #[test]
    fn parses_and_closes() {
        let p = Poset::parse("# comment\nx < y < z\nw\n").unwrap();
        assert_eq!(p.labels(), &["x", "y", "z", "w"]);
        assert!(p.lt(0, 2));
        assert!(!p.comparable(3, 0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(Poset::parse(&p.to_text()).unwrap().covers().len(), 2);
        assert!(Poset::parse("a < b\nb < a\n").is_err());
        assert!(Poset::parse("a b < c\n").is_err());
    }

    #[test]
    fn relation_axioms_are_checked() {
        let labels = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert!(Poset::from_relation(labels(), |i, j| i <= j).is_ok());
        assert!(Poset::from_relation(labels(), |i, j| i == j || (i, j) == (0, 1) || (i, j) == (1, 2)).is_err());
        assert!(Poset::from_relation(labels(), |i, j| i != j).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(Poset::antichain(4).height().unwrap(), 1);
        assert_eq!(Poset::chain(5).height().unwrap(), 5);
        assert_eq!(example_poset().height().unwrap(), 2);
        assert_eq!(Poset::antichain(0).height(), Err(Error::EmptyPoset));
    }

    #[test]
    fn incomparability_graphs() {
        assert!(Poset::chain(4).incomparability_graph().edges().is_empty());
        assert_eq!(Poset::antichain(4).incomparability_graph().edges().len(), 6);
        let g = example_poset().incomparability_graph();
        // a=0, c=1, b=2, d=3 in order of first appearance.
        let named: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (x, y) = (g.labels()[u].clone(), g.labels()[v].clone());
                if x < y { (x, y) } else { (y, x) }
            })
            .collect();
        let mut named = named;
        named.sort();
        let expected: Vec<(String, String)> = [("a", "b"), ("a", "d"), ("c", "d")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert_eq!(named, expected);
    }

    #[test]
    fn ab_freeness() {
        assert!(example_poset().is_ab_free(3, 1));
        let three_plus_one = Poset::chain(3).disjoint_union(&Poset::antichain(1));
        assert!(!three_plus_one.is_ab_free(3, 1));
        assert!(three_plus_one.is_ab_free(3, 2));
        assert!(!Poset::antichain(2).is_ab_free(1, 1));
        assert!(Poset::chain(4).is_ab_free(1, 1));
        let two_plus_two = Poset::chain(2).disjoint_union(&Poset::chain(2));
        assert!(!two_plus_two.is_ab_free(2, 2));
        assert!(two_plus_two.is_ab_free(3, 1));
    }

    #[test]
    fn colourings() {
        let empty = Poset::chain(3).incomparability_graph();
        for k in 0..5u64 {
            assert_eq!(empty.chromatic_polynomial_value(k as usize), k.pow(3));
        }
        let edge = Graph::new(vec!["u".into(), "v".into()], &[(0, 1)]).unwrap();
        for k in 0..5u64 {
            assert_eq!(edge.chromatic_polynomial_value(k as usize), k * k.saturating_sub(1));
        }
        let g = example_poset().incomparability_graph();
        let poly = g.chromatic_polynomial();
        for k in 0..7 {
            assert_eq!(evaluate_polynomial(&poly, k as i64), g.chromatic_polynomial_value(k) as i64);
        }
        // A path on four vertices: k (k-1)^3.
        assert_eq!(poly, vec![0, -1, 3, -3, 1]);
    }

    #[test]
    fn adjoining_a_maximum() {
        let p = example_poset().with_maximum();
        assert_eq!(p.len(), 5);
        assert_eq!(p.height().unwrap(), 3);
        assert!(p.is_three_plus_one_free());
        assert!((0..4).all(|i| p.lt(i, 4)));
    }
}
