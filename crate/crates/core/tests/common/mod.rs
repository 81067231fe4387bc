//! Brute-force oracles shared by the integration tests. None of them call
//! the enumerators they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rimhook::{Cell, Partition, Poset};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Partitions of `n` in reverse-lex order, by recursion on the first part.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cells_of(shape: &[usize]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
        .collect()
}

/// Kostka number by trying every arrangement of the content multiset.
pub fn kostka_brute(shape: &[usize], content: &[usize]) -> i64 {
    let cells = cells_of(shape);
    let mut letters: Vec<usize> = content
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(k + 1, m))
        .collect();
    if letters.len() != cells.len() {
        return 0;
    }
    letters.sort();
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut count = 0;
    loop {
        let ok = cells.iter().enumerate().all(|(k, &(i, j))| {
            let v = letters[k];
            let right = index.get(&(i, j + 1)).is_none_or(|&r| letters[r] >= v);
            let below = index.get(&(i + 1, j)).is_none_or(|&b| letters[b] > v);
            right && below
        });
        count += i64::from(ok);
        if !next_permutation(&mut letters) {
            return count;
        }
    }
}

pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Inverse of a unitriangular integer matrix by back-substitution.
pub fn unitriangular_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = m.len();
    let upper = (0..d).all(|i| (0..i).all(|j| m[i][j] == 0));
    let t: Vec<Vec<i64>> = if upper {
        m.to_vec()
    } else {
        (0..d).map(|i| (0..d).map(|j| m[j][i]).collect()).collect()
    };
    let mut inv = vec![vec![0i64; d]; d];
    for col in 0..d {
        for row in (0..d).rev() {
            assert_eq!(t[row][row], 1);
            let target = i64::from(row == col);
            let acc: i64 = (row + 1..d).map(|k| t[row][k] * inv[k][col]).sum();
            inv[row][col] = target - acc;
        }
    }
    if upper {
        inv
    } else {
        (0..d).map(|i| (0..d).map(|j| inv[j][i]).collect()).collect()
    }
}

/// All up/right lattice paths inside `shape` that start in column one.
fn special_paths(shape: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let inside = |(i, j): (usize, usize)| i >= 1 && i <= shape.len() && j >= 1 && j <= shape[i - 1];
    let mut out = Vec::new();
    let mut stack: Vec<Vec<(usize, usize)>> = (1..=shape.len()).map(|i| vec![(i, 1)]).collect();
    while let Some(path) = stack.pop() {
        let &(i, j) = path.last().unwrap();
        out.push(path.clone());
        for next in [(i.wrapping_sub(1), j), (i, j + 1)] {
            if inside(next) {
                let mut longer = path.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    out
}

fn is_partition_set(cells: &BTreeSet<(usize, usize)>) -> bool {
    cells.iter().all(|&(i, j)| {
        (i == 1 || cells.contains(&(i - 1, j))) && (j == 1 || cells.contains(&(i, j - 1)))
    })
}

/// Every special rim-hook tableau of `shape`, found as an exact cover by
/// column-one paths whose top-down unions are all Ferrers diagrams. Each
/// tableau is returned as its list of hooks sorted by tail row.
pub fn srht_brute(shape: &[usize]) -> Vec<Vec<Vec<(usize, usize)>>> {
    let paths = special_paths(shape);
    let mut by_tail: BTreeMap<usize, Vec<&Vec<(usize, usize)>>> = BTreeMap::new();
    for path in &paths {
        by_tail.entry(path[0].0).or_default().push(path);
    }
    let rows = shape.len();
    let mut out = Vec::new();
    // Bottom row first: row r's column-one cell is either a tail or
    // already covered by a hook from further down.
    fn go<'a>(
        r: usize,
        by_tail: &BTreeMap<usize, Vec<&'a Vec<(usize, usize)>>>,
        used: &mut BTreeSet<(usize, usize)>,
        chosen: &mut Vec<&'a Vec<(usize, usize)>>,
        total: usize,
        out: &mut Vec<Vec<Vec<(usize, usize)>>>,
    ) {
        if r == 0 {
            if used.len() == total {
                let mut hooks: Vec<Vec<(usize, usize)>> = chosen.iter().map(|h| (*h).clone()).collect();
                hooks.sort_by_key(|h| h[0].0);
                let mut acc = BTreeSet::new();
                let valid = hooks.iter().all(|h| {
                    acc.extend(h.iter().copied());
                    is_partition_set(&acc)
                });
                if valid {
                    out.push(hooks);
                }
            }
            return;
        }
        if used.contains(&(r, 1)) {
            go(r - 1, by_tail, used, chosen, total, out);
            return;
        }
        for &path in by_tail.get(&r).into_iter().flatten() {
            if path.iter().any(|c| used.contains(c)) {
                continue;
            }
            used.extend(path.iter().copied());
            chosen.push(path);
            go(r - 1, by_tail, used, chosen, total, out);
            chosen.pop();
            for c in path {
                used.remove(c);
            }
        }
    }
    let total = shape.iter().sum();
    go(rows, &by_tail, &mut BTreeSet::new(), &mut Vec::new(), total, &mut out);
    out
}

/// Leg length of a path: its number of vertical steps.
pub fn leg(path: &[(usize, usize)]) -> usize {
    path.windows(2).filter(|w| w[0].1 == w[1].1).count()
}

/// Number of semistandard tableaux of `shape` with entries in `1..=k`.
pub fn ssyt_count_bounded(shape: &[usize], k: usize) -> u64 {
    let cells = cells_of(shape);
    fn go(cells: &[(usize, usize)], idx: usize, k: usize, fill: &mut BTreeMap<(usize, usize), usize>) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else {
            return 1;
        };
        let lo_left = if j > 1 { fill[&(i, j - 1)] } else { 1 };
        let lo_up = if i > 1 { fill[&(i - 1, j)] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_left.max(lo_up)..=k {
            fill.insert((i, j), v);
            total += go(cells, idx + 1, k, fill);
        }
        fill.remove(&(i, j));
        total
    }
    go(&cells, 0, k, &mut BTreeMap::new())
}

/// Proper colourings counted over all `k^n` colour assignments.
pub fn colourings_brute(edges: &[(usize, usize)], n: usize, k: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let total = (k as u64).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let colour = |v: usize| (code / (k as u64).pow(v as u32)) % k as u64;
            edges.iter().all(|&(u, v)| colour(u) != colour(v))
        })
        .count() as u64
}

/// Number of P-tableaux of a shape by trying every bijection to the cells.
pub fn p_tableaux_brute(poset: &Poset, shape: &[usize]) -> usize {
    let cells = cells_of(shape);
    if cells.len() != poset.len() {
        return 0;
    }
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut perm: Vec<usize> = (0..poset.len()).collect();
    let mut count = 0;
    loop {
        let ok = cells.iter().enumerate().all(|(k, &(i, j))| {
            let x = perm[k];
            let below = index.get(&(i + 1, j)).is_none_or(|&b| poset.lt(x, perm[b]));
            let right = index.get(&(i, j + 1)).is_none_or(|&r| !poset.lt(perm[r], x));
            below && right
        });
        count += usize::from(ok);
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

/// Whether `p` contains an induced copy of an `a`-chain beside a `b`-chain,
/// by testing every pair of disjoint subsets.
pub fn contains_ab_brute(poset: &Poset, a: usize, b: usize) -> bool {
    let n = poset.len();
    let is_chain = |mask: u32| {
        (0..n).all(|x| (0..n).all(|y| mask >> x & 1 == 0 || mask >> y & 1 == 0 || poset.comparable(x, y)))
    };
    for s in 0u32..1 << n {
        if s.count_ones() as usize != a || !is_chain(s) {
            continue;
        }
        for t in 0u32..1 << n {
            if t & s != 0 || t.count_ones() as usize != b || !is_chain(t) {
                continue;
            }
            let separated = (0..n).all(|x| {
                (0..n).all(|y| s >> x & 1 == 0 || t >> y & 1 == 0 || !poset.comparable(x, y))
            });
            if separated {
                return true;
            }
        }
    }
    false
}

pub fn cell(r: usize, c: usize) -> Cell {
    Cell::new(r, c)
}
