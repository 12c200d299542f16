//! Formula-literal reference evaluation of the axioms on plain matrices and
//! pair sets. Shares nothing with the library beyond conversion.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mereo::{Domain, MereoStructure, PartRelation, Subset, SumRelation, SumStructure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn members(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn all_masks(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << n
}

/// `rel[x][y]` means `x ⊑ y`.
#[derive(Debug, Clone)]
pub struct PartOracle {
    pub n: usize,
    pub rel: Vec<Vec<bool>>,
}

impl PartOracle {
    pub fn from_bits(n: usize, bits: u64) -> Self {
        let rel = (0..n)
            .map(|x| (0..n).map(|y| bits >> (x * n + y) & 1 == 1).collect())
            .collect();
        PartOracle { n, rel }
    }

    pub fn random(n: usize, density: f64, rng: &mut impl Rng) -> Self {
        let rel = (0..n)
            .map(|_| (0..n).map(|_| rng.random_bool(density)).collect())
            .collect();
        PartOracle { n, rel }
    }

    pub fn of(m: &MereoStructure) -> Self {
        let n = m.len();
        let rel = (0..n).map(|x| (0..n).map(|y| m.part().holds(x, y)).collect()).collect();
        PartOracle { n, rel }
    }

    pub fn structure(&self) -> MereoStructure {
        let pairs = (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.rel[x][y]);
        MereoStructure::new(Domain::letters(self.n).unwrap(), PartRelation::from_pairs(self.n, pairs)).unwrap()
    }

    fn le(&self, x: usize, y: usize) -> bool {
        self.rel[x][y]
    }

    fn m(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn overlap(&self, x: usize, y: usize) -> bool {
        self.m().any(|z| self.le(z, x) && self.le(z, y))
    }

    pub fn p1(&self) -> bool {
        self.m().all(|x| self.le(x, x))
    }

    pub fn p2(&self) -> bool {
        self.m().all(|x| self.m().all(|y| !(self.le(x, y) && self.le(y, x)) || x == y))
    }

    pub fn p3(&self) -> bool {
        self.m()
            .all(|x| self.m().all(|y| self.m().all(|z| !(self.le(x, y) && self.le(y, z)) || self.le(x, z))))
    }

    pub fn p4(&self) -> bool {
        self.m().all(|x| {
            self.m().all(|y| {
                self.le(x, y)
                    || self
                        .m()
                        .any(|z| self.le(z, x) && !self.m().any(|u| self.le(u, z) && self.le(u, y)))
            })
        })
    }

    pub fn p4_strong(&self) -> bool {
        self.m()
            .all(|x| self.m().all(|y| self.le(x, y) || self.m().any(|z| self.le(z, x) && !self.overlap(z, y))))
    }

    pub fn p5(&self) -> bool {
        all_masks(self.n).filter(|&m| m != 0).all(|set| {
            let xs = members(self.n, set);
            self.m().any(|x| {
                xs.iter().all(|&y| self.le(y, x))
                    && self.m().all(|a| {
                        !self.le(a, x) || xs.iter().any(|&y| self.m().any(|z| self.le(z, y) && self.le(z, a)))
                    })
            })
        })
    }

    pub fn sum(&self, x: usize, set: u64) -> bool {
        let xs = members(self.n, set);
        xs.iter().all(|&y| self.le(y, x))
            && self.m().all(|a| !self.le(a, x) || xs.iter().any(|&y| self.overlap(a, y)))
    }

    pub fn p5_sum(&self) -> bool {
        all_masks(self.n)
            .filter(|&m| m != 0)
            .all(|set| self.m().any(|x| self.sum(x, set)))
    }

    pub fn mereological(&self) -> bool {
        self.p1() && self.p2() && self.p3() && self.p4() && self.p5()
    }

    pub fn induced_sum(&self) -> SumOracle {
        let pairs = self
            .m()
            .flat_map(|x| all_masks(self.n).map(move |s| (x, s)))
            .filter(|&(x, s)| self.sum(x, s))
            .collect();
        SumOracle { n: self.n, pairs }
    }
}

/// Pairs `(x, mask)` meaning `x + X`.
#[derive(Debug, Clone)]
pub struct SumOracle {
    pub n: usize,
    pub pairs: BTreeSet<(usize, u64)>,
}

impl SumOracle {
    pub fn random(n: usize, density: f64, rng: &mut impl Rng) -> Self {
        let pairs = (0..n)
            .flat_map(|x| all_masks(n).map(move |s| (x, s)))
            .filter(|_| rng.random_bool(density))
            .collect();
        SumOracle { n, pairs }
    }

    pub fn of(s: &SumStructure) -> Self {
        let pairs = s.sum().pairs().map(|(x, set)| (x, set.bits())).collect();
        SumOracle { n: s.len(), pairs }
    }

    pub fn structure(&self) -> SumStructure {
        let rel = SumRelation::from_pairs(self.n, self.pairs.iter().map(|&(x, s)| (x, Subset::from_bits(s))));
        SumStructure::new(Domain::letters(self.n).unwrap(), rel).unwrap()
    }

    fn m(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn holds(&self, x: usize, set: u64) -> bool {
        self.pairs.contains(&(x, set))
    }

    pub fn family(&self, x: usize) -> Vec<u64> {
        self.pairs.iter().filter(|p| p.0 == x).map(|p| p.1).collect()
    }

    /// `x` is an s-part of `y`.
    pub fn ingr(&self, x: usize, y: usize) -> bool {
        self.pairs.iter().any(|&(z, s)| z == y && s >> x & 1 == 1)
    }

    pub fn ingr_set(&self, x: usize) -> u64 {
        self.m().filter(|&y| self.ingr(y, x)).fold(0, |acc, y| acc | 1 << y)
    }

    pub fn ingr_of(&self, set: u64) -> u64 {
        members(self.n, set).into_iter().fold(0, |acc, a| acc | self.ingr_set(a))
    }

    pub fn s_overlap(&self, x: usize, y: usize) -> bool {
        self.pairs
            .iter()
            .any(|&(a, s)| a == x && self.pairs.iter().any(|&(b, t)| b == y && s & t != 0))
    }

    pub fn s_disjoint(&self, x: usize, y: usize) -> bool {
        self.pairs
            .iter()
            .all(|&(a, s)| a != x || self.pairs.iter().all(|&(b, t)| b != y || s & t == 0))
    }

    pub fn s1(&self) -> bool {
        all_masks(self.n).filter(|&s| s != 0).all(|s| self.m().any(|x| self.holds(x, s)))
    }

    pub fn s1_strict(&self) -> bool {
        all_masks(self.n)
            .filter(|&s| s != 0)
            .all(|s| members(self.n, s).into_iter().any(|x| self.holds(x, s)))
    }

    pub fn s2(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(x, s)| self.pairs.iter().all(|&(y, t)| s != t || x == y))
    }

    pub fn s3(&self) -> bool {
        self.pairs.iter().all(|&(x, s)| {
            self.pairs
                .iter()
                .all(|&(y, t)| t >> x & 1 == 0 || self.holds(y, s | t))
        })
    }

    /// Unfolded form: some `z ∈ X` sums a collection meeting one summed by `y`.
    pub fn s4(&self) -> bool {
        self.pairs.iter().all(|&(x, s)| {
            self.family(x).into_iter().all(|t| {
                members(self.n, t).into_iter().all(|y| {
                    members(self.n, s).into_iter().any(|z| {
                        self.pairs.iter().any(|&(a, zs)| {
                            a == z && self.pairs.iter().any(|&(b, us)| b == y && zs & us != 0)
                        })
                    })
                })
            })
        })
    }

    pub fn s4_var(&self) -> bool {
        self.pairs.iter().all(|&(x, s)| {
            self.m()
                .filter(|&y| self.ingr(y, x))
                .all(|y| members(self.n, s).into_iter().any(|z| self.s_overlap(y, z)))
        })
    }

    pub fn pre_dense(&self, a: u64, b: u64) -> bool {
        members(self.n, b)
            .into_iter()
            .all(|y| members(self.n, a).into_iter().any(|x| self.s_overlap(x, y)))
    }

    pub fn s5(&self) -> bool {
        self.m().all(|x| {
            let own = self.ingr_set(x);
            all_masks(self.n)
                .filter(|&set| self.pre_dense(set, own))
                .all(|set| self.holds(x, own & self.ingr_of(set)))
        })
    }

    pub fn is_model(&self) -> bool {
        self.s1() && self.s2() && self.s3() && self.s4() && self.s5()
    }

    /// Closure of `Σ(x)` under unions of every non-empty subfamily, by
    /// enumerating the subfamilies.
    pub fn sigma_union_closed(&self) -> bool {
        self.m().all(|x| {
            let fam = self.family(x);
            assert!(fam.len() < 20, "subfamily enumeration too large");
            (1u32..1 << fam.len()).all(|pick| {
                let union = (0..fam.len())
                    .filter(|&i| pick >> i & 1 == 1)
                    .fold(0, |acc, i| acc | fam[i]);
                self.holds(x, union)
            })
        })
    }

    pub fn singleton_sum(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(x, s)| s.count_ones() != 1 || s == 1 << x)
    }

    pub fn induced_part(&self) -> PartOracle {
        let rel = (0..self.n)
            .map(|x| (0..self.n).map(|y| self.ingr(x, y)).collect())
            .collect();
        PartOracle { n: self.n, rel }
    }

    /// Every theorem the sum axioms are known to entail, evaluated from the
    /// definitions. Returns the names of those that fail.
    pub fn theorem_failures(&self) -> Vec<&'static str> {
        let n = self.n;
        let mut bad = Vec::new();
        let part = self.induced_part();
        if !(part.p1() && part.p2() && part.p3()) {
            bad.push("partial order");
        }
        if !self.m().all(|x| self.holds(x, 1 << x)) {
            bad.push("self sum");
        }
        if self.m().any(|x| self.holds(x, 0)) {
            bad.push("empty sum");
        }
        let nonempty: Vec<u64> = (1..1u64 << n).collect();
        let covered = nonempty.iter().all(|&s| self.m().filter(|&x| self.holds(x, s)).count() == 1);
        let no_empty_family = self.m().all(|x| !self.family(x).is_empty());
        if !(covered && no_empty_family) {
            bad.push("partition");
        }
        if !self.m().all(|x| self.family(x).iter().fold(0, |a, s| a | s) == self.ingr_set(x)) {
            bad.push("parts are union");
        }
        if !self.sigma_union_closed() {
            bad.push("union closed");
        }
        if !self.singleton_sum() {
            bad.push("singleton sum");
        }
        for x in self.m() {
            let own = self.ingr_set(x);
            for set in all_masks(n) {
                if set & !own == 0 && self.ingr_of(set) & !own != 0 {
                    bad.push("aux 1");
                }
                if self.holds(x, set) {
                    if !self.holds(x, own & self.ingr_of(set)) {
                        bad.push("aux 2");
                    }
                    if self.ingr_of(set) & !own != 0 {
                        bad.push("aux 3");
                    }
                }
                if self.holds(x, set) != self.holds(x, self.ingr_of(set)) {
                    bad.push("aux 4");
                }
                let induced = part.sum(x, set);
                if self.holds(x, set) != induced {
                    bad.push("sum matches induced");
                }
            }
            for y in self.m() {
                let common = self.ingr_set(x) & self.ingr_set(y) != 0;
                if self.s_overlap(x, y) != common || common != part.overlap(x, y) {
                    bad.push("overlap");
                }
                if self.s_disjoint(x, y) == self.s_overlap(x, y) {
                    bad.push("disjoint");
                }
            }
        }
        bad.sort();
        bad.dedup();
        bad
    }
}
