//! Labeled partial orders on `{0, .., n-1}`, `n <= 7`.
//!
//! A poset on `k + 1` elements restricts to a unique poset on the first `k`,
//! so every poset is generated exactly once by extending each smaller poset
//! with a new element `k`: pick a down-closed set `D` of elements below it
//! and an up-closed set `U` above it such that every member of `D` is below
//! every member of `U`. Reflexivity, antisymmetry and transitivity hold by
//! construction.

/// `down[y]` has bit `x` set when `x ⊑ y`. Only the first `n` entries are used.
pub type Down = [u8; 8];

pub const MAX_POSET: usize = 7;

fn up_sets(down: &Down, k: usize) -> [u8; 8] {
    let mut up = [0u8; 8];
    for (y, &d) in down.iter().enumerate().take(k) {
        for (x, u) in up.iter_mut().enumerate().take(k) {
            if d >> x & 1 == 1 {
                *u |= 1 << y;
            }
        }
    }
    up
}

fn closed_sets(sets: &[u8; 8], k: usize) -> Vec<u8> {
    (0..1u16 << k)
        .map(|m| m as u8)
        .filter(|&m| (0..k).all(|i| m >> i & 1 == 0 || sets[i] & !m == 0))
        .collect()
}

/// Calls `f` for every extension of the `k`-element poset `down` by element `k`.
pub fn extend(down: &Down, k: usize, mut f: impl FnMut(Down)) {
    let up = up_sets(down, k);
    let downs = closed_sets(down, k);
    let ups = closed_sets(&up, k);
    let all = ((1u16 << k) - 1) as u8;
    for &u in &ups {
        let allowed = (0..k)
            .filter(|&i| u >> i & 1 == 1)
            .fold(all, |acc, i| acc & down[i] & !(1 << i));
        for &d in &downs {
            if d & !allowed != 0 {
                continue;
            }
            let mut next = *down;
            next[k] = d | 1 << k;
            for (i, slot) in next.iter_mut().enumerate().take(k) {
                if u >> i & 1 == 1 {
                    *slot |= 1 << k;
                }
            }
            f(next);
        }
    }
}

/// All labeled posets on `n` elements in generation order.
pub fn posets(n: usize) -> Vec<Down> {
    assert!(n <= MAX_POSET);
    let mut level = vec![[0u8; 8]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &level {
            extend(p, k, |q| next.push(q));
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Oracle: filter every reflexive relation for antisymmetry and transitivity.
    fn brute_force_count(n: usize) -> usize {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|(x, y)| x != y)
            .collect();
        (0u32..1 << off.len())
            .filter(|bits| {
                let rel = |x: usize, y: usize| {
                    x == y || off.iter().position(|&p| p == (x, y)).is_some_and(|i| bits >> i & 1 == 1)
                };
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        (x == y || !(rel(x, y) && rel(y, x)))
                            && (0..n).all(|z| !(rel(x, y) && rel(y, z)) || rel(x, z))
                    })
                })
            })
            .count()
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 0..=4 {
            assert_eq!(posets(n).len(), brute_force_count(n), "n = {n}");
        }
    }

    #[test]
    fn known_labeled_poset_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231, 130023]);
    }

    #[test]
    fn generated_posets_are_distinct_partial_orders() {
        let n = 5;
        let all = posets(n);
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for p in &all {
            for x in 0..n {
                assert!(p[x] >> x & 1 == 1);
                for y in 0..n {
                    let xy = p[y] >> x & 1 == 1;
                    let yx = p[x] >> y & 1 == 1;
                    assert!(x == y || !(xy && yx));
                    if xy {
                        assert_eq!(p[x] & !p[y], 0, "transitivity");
                    }
                }
            }
        }
    }
}
