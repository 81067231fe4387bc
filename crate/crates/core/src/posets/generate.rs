//! Posets up to isomorphism, grown one maximal element at a time.

use std::collections::HashSet;

use super::{default_label, Poset};

/// Canonical code: the least relation bitmask over relabelings that keep
/// elements sorted by (down-set size, up-set size). Supports up to 8 elements.
pub fn canonical_code(poset: &Poset) -> u64 {
    let n = poset.len();
    assert!(n <= 8, "canonical codes fit posets of at most 8 elements");
    let key = |i: usize| (poset.down_mask(i).count_ones(), poset.up_mask(i).count_ones());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| key(i));
    let slot_key: Vec<_> = order.iter().map(|&i| key(i)).collect();

    fn go(
        poset: &Poset,
        slot_key: &[(u32, u32)],
        key: &dyn Fn(usize) -> (u32, u32),
        perm: &mut Vec<usize>,
        used: u64,
        best: &mut u64,
    ) {
        let n = slot_key.len();
        if perm.len() == n {
            let mut code = 0u64;
            for a in 0..n {
                for b in 0..n {
                    if poset.leq(perm[a], perm[b]) {
                        code |= 1 << (a * n + b);
                    }
                }
            }
            *best = (*best).min(code);
            return;
        }
        let want = slot_key[perm.len()];
        for x in 0..n {
            if used >> x & 1 == 0 && key(x) == want {
                perm.push(x);
                go(poset, slot_key, key, perm, used | 1 << x, best);
                perm.pop();
            }
        }
    }
    let mut best = u64::MAX;
    go(poset, &slot_key, &key, &mut Vec::with_capacity(n), 0, &mut best);
    best
}

/// One representative per isomorphism class of posets on `0..=max_n`
/// elements satisfying `keep`, which must be inherited by induced subposets.
/// Entry `k` of the result lists the `k`-element classes.
pub fn posets_up_to_isomorphism(max_n: usize, keep: impl Fn(&Poset) -> bool) -> Vec<Vec<Poset>> {
    assert!(max_n <= 8, "generation supports at most 8 elements");
    let mut levels = vec![vec![Poset::antichain(0)]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for base in &levels[n - 1] {
            let m = n - 1;
            for ideal in 0u64..1 << m {
                let closed = (0..m).all(|i| ideal >> i & 1 == 0 || base.down_mask(i) & !ideal == 0);
                if !closed {
                    continue;
                }
                let mut up: Vec<u64> = (0..m)
                    .map(|i| base.up_mask(i) | (ideal >> i & 1) << m)
                    .collect();
                up.push(1 << m);
                let poset = Poset::from_up_masks((0..n).map(default_label).collect(), up);
                if !keep(&poset) {
                    continue;
                }
                if seen.insert(canonical_code(&poset)) {
                    level.push(poset);
                }
            }
        }
        levels.push(level);
    }
    levels
}
