//! Axioms S1–S5 on `⟨M, +⟩`, the notions derived from the primitive sum,
//! and the theorems that follow from the axioms.
//!
//! As with parthood, all quantifiers are exhaustive loops and witnesses are
//! the first violating tuple in canonical order.

use crate::model::{MereoStructure, PartRelation, Subset, SumStructure};
use crate::parthood;
use crate::report::{AxiomId, AxiomReport, AxiomVerdict, SumAxiom, SumTheorem, Witness};

/// `Σ(x)`: a view of the stored family `{ X | x + X }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaFamily<'a> {
    pub owner: usize,
    pub family: &'a [Subset],
}

impl SigmaFamily<'_> {
    pub fn contains(&self, set: Subset) -> bool {
        self.family.binary_search(&set).is_ok()
    }

    /// `⋃Σ(x)`
    pub fn union(&self) -> Subset {
        self.family.iter().fold(Subset::EMPTY, |acc, &s| acc.union(s))
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }
}

pub fn sigma(s: &SumStructure, x: usize) -> SigmaFamily<'_> {
    SigmaFamily {
        owner: x,
        family: s.sum().family(x),
    }
}

/// s-part: some collection summed by `y` contains `x`.
pub fn part_induced(s: &SumStructure, x: usize, y: usize) -> bool {
    s.sum().family(y).iter().any(|set| set.contains(x))
}

pub fn induced_part_relation(s: &SumStructure) -> PartRelation {
    let n = s.len();
    PartRelation::from_pairs(
        n,
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| part_induced(s, x, y)),
    )
}

/// `Ingr(x)`: the s-parts of `x`.
pub fn ingr_set(s: &SumStructure, x: usize) -> Subset {
    Subset::from_indices((0..s.len()).filter(|&y| part_induced(s, y, x)))
}

/// `Ingr(A)`: union of `Ingr(a)` over `a ∈ A`.
pub fn ingr_set_family(s: &SumStructure, set: Subset) -> Subset {
    set.iter()
        .fold(Subset::EMPTY, |acc, a| acc.union(ingr_set(s, a)))
}

/// `x` and `y` sum collections that share a member.
pub fn s_overlap(s: &SumStructure, x: usize, y: usize) -> bool {
    let sum = s.sum();
    sum.family(x)
        .iter()
        .any(|&xs| sum.family(y).iter().any(|&ys| xs.meets(ys)))
}

/// Every collection summed by `x` is disjoint from every collection summed
/// by `y`. Vacuously true when either family is empty.
pub fn s_disjoint(s: &SumStructure, x: usize, y: usize) -> bool {
    let sum = s.sum();
    sum.family(x)
        .iter()
        .all(|&xs| sum.family(y).iter().all(|&ys| !xs.meets(ys)))
}

/// Every member of `target` s-overlaps some member of `dense`.
pub fn pre_dense(s: &SumStructure, dense: Subset, target: Subset) -> bool {
    target
        .iter()
        .all(|b| dense.iter().any(|a| s_overlap(s, a, b)))
}

/// df Sum evaluated with the induced parthood `⊑₊` in place of `⊑`.
pub fn sum_wrt_induced(s: &SumStructure, x: usize, set: Subset) -> bool {
    let induced = induced_structure(s);
    parthood::sum_induced_holds(&induced, x, set)
}

fn induced_structure(s: &SumStructure) -> MereoStructure {
    MereoStructure::new(s.domain().clone(), induced_part_relation(s))
        .expect("induced relation shares the domain")
}

/// Derived data computed once per check, each entry from its own definition.
struct Ctx<'a> {
    s: &'a SumStructure,
    n: usize,
    ingr: Vec<Subset>,
    /// `overlap[x]`: elements that s-overlap `x`.
    overlap: Vec<Subset>,
    induced: MereoStructure,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a SumStructure) -> Self {
        let n = s.len();
        let ingr = (0..n).map(|x| ingr_set(s, x)).collect();
        let overlap = (0..n)
            .map(|x| Subset::from_indices((0..n).filter(|&y| s_overlap(s, x, y))))
            .collect();
        Ctx {
            s,
            n,
            ingr,
            overlap,
            induced: induced_structure(s),
        }
    }

    fn holds(&self, x: usize, set: Subset) -> bool {
        self.s.holds(x, set)
    }

    fn family(&self, x: usize) -> &'a [Subset] {
        self.s.sum().family(x)
    }

    fn ingr_of(&self, set: Subset) -> Subset {
        set.iter()
            .fold(Subset::EMPTY, |acc, a| acc.union(self.ingr[a]))
    }

    fn pre_dense(&self, dense: Subset, target: Subset) -> bool {
        target.iter().all(|b| self.overlap[b].meets(dense))
    }

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn subsets(&self, nonempty: bool) -> crate::model::Subsets {
        self.s.domain().all_subsets(nonempty)
    }

    // -- axiom instances: true when the axiom holds at these bindings --

    fn s1_at(&self, set: Subset, strict: bool) -> bool {
        let range = if strict { set } else { Subset::full(self.n) };
        set.is_empty() || range.iter().any(|x| self.holds(x, set))
    }

    fn s2_at(&self, x: usize, set: Subset, y: usize) -> bool {
        !(self.holds(x, set) && self.holds(y, set)) || x == y
    }

    fn s3_at(&self, x: usize, xs: Subset, y: usize, ys: Subset) -> bool {
        !(self.holds(x, xs) && self.holds(y, ys) && ys.contains(x)) || self.holds(y, xs.union(ys))
    }

    fn s4_at(&self, x: usize, xs: Subset, ys: Subset, y: usize) -> bool {
        if !(self.holds(x, xs) && self.holds(x, ys) && ys.contains(y)) {
            return true;
        }
        xs.iter().any(|z| {
            self.family(z)
                .iter()
                .any(|&zs| self.family(y).iter().any(|&us| zs.meets(us)))
        })
    }

    fn s4_var_at(&self, x: usize, xs: Subset, y: usize) -> bool {
        !(self.holds(x, xs) && self.ingr[x].contains(y)) || self.overlap[y].meets(xs)
    }

    fn s5_at(&self, x: usize, set: Subset) -> bool {
        !self.pre_dense(set, self.ingr[x]) || self.holds(x, self.ingr[x].intersection(self.ingr_of(set)))
    }

    fn sigma_union_at(&self, x: usize, fam: &[Subset]) -> bool {
        if fam.is_empty() || !fam.iter().all(|&a| self.holds(x, a)) {
            return true;
        }
        let union = fam.iter().fold(Subset::EMPTY, |acc, &a| acc.union(a));
        self.holds(x, union)
    }

    fn singleton_at(&self, x: usize, y: usize) -> bool {
        !self.holds(x, Subset::singleton(y)) || x == y
    }

    fn check_axiom(&self, axiom: SumAxiom) -> AxiomVerdict {
        let w = match axiom {
            SumAxiom::S1 | SumAxiom::S1InCollection => {
                let strict = axiom == SumAxiom::S1InCollection;
                self.subsets(true)
                    .find(|&set| !self.s1_at(set, strict))
                    .map(|set| Witness::new().subset("X", set))
            }
            SumAxiom::S2 => self.elements().find_map(|x| {
                self.family(x).iter().find_map(|&set| {
                    self.elements()
                        .find(|&y| !self.s2_at(x, set, y))
                        .map(|y| Witness::new().element("x", x).subset("X", set).element("y", y))
                })
            }),
            SumAxiom::S3 => self.elements().find_map(|x| {
                self.family(x).iter().find_map(|&xs| {
                    self.elements().find_map(|y| {
                        self.family(y).iter().find(|&&ys| !self.s3_at(x, xs, y, ys)).map(|&ys| {
                            Witness::new()
                                .element("x", x)
                                .subset("X", xs)
                                .element("y", y)
                                .subset("Y", ys)
                        })
                    })
                })
            }),
            SumAxiom::S4 => self.elements().find_map(|x| {
                self.family(x).iter().find_map(|&xs| {
                    self.family(x).iter().find_map(|&ys| {
                        ys.iter().find(|&y| !self.s4_at(x, xs, ys, y)).map(|y| {
                            Witness::new()
                                .element("x", x)
                                .subset("X", xs)
                                .subset("Y", ys)
                                .element("y", y)
                        })
                    })
                })
            }),
            SumAxiom::S4Var => self.elements().find_map(|x| {
                self.family(x).iter().find_map(|&xs| {
                    self.elements()
                        .find(|&y| !self.s4_var_at(x, xs, y))
                        .map(|y| Witness::new().element("x", x).subset("X", xs).element("y", y))
                })
            }),
            SumAxiom::S5 => self.elements().find_map(|x| {
                self.subsets(false)
                    .find(|&set| !self.s5_at(x, set))
                    .map(|set| Witness::new().element("x", x).subset("X", set))
            }),
            // Closure under unions of all non-empty subfamilies is equivalent
            // to closure under binary unions, so pairs are searched.
            SumAxiom::SigmaUnion => self.elements().find_map(|x| {
                let fam = self.family(x);
                fam.iter().enumerate().find_map(|(i, &a)| {
                    fam[i + 1..]
                        .iter()
                        .find(|&&b| !self.sigma_union_at(x, &[a, b]))
                        .map(|&b| Witness::new().element("x", x).family("A", vec![a, b]))
                })
            }),
            SumAxiom::SingletonSum => self.elements().find_map(|x| {
                self.elements()
                    .find(|&y| !self.singleton_at(x, y))
                    .map(|y| Witness::new().element("x", x).element("y", y))
            }),
        };
        AxiomVerdict::from_search(axiom, w)
    }

    fn replay_axiom(&self, axiom: SumAxiom, w: &Witness) -> Option<bool> {
        let el = |role: &str| w.get_element(role).filter(|&i| i < self.n);
        let set = |role: &str| w.get_subset(role).filter(|s| s.fits(self.n));
        Some(match axiom {
            SumAxiom::S1 => !self.s1_at(set("X")?, false),
            SumAxiom::S1InCollection => !self.s1_at(set("X")?, true),
            SumAxiom::S2 => !self.s2_at(el("x")?, set("X")?, el("y")?),
            SumAxiom::S3 => !self.s3_at(el("x")?, set("X")?, el("y")?, set("Y")?),
            SumAxiom::S4 => !self.s4_at(el("x")?, set("X")?, set("Y")?, el("y")?),
            SumAxiom::S4Var => !self.s4_var_at(el("x")?, set("X")?, el("y")?),
            SumAxiom::S5 => !self.s5_at(el("x")?, set("X")?),
            SumAxiom::SigmaUnion => !self.sigma_union_at(el("x")?, w.get_family("A")?),
            SumAxiom::SingletonSum => !self.singleton_at(el("x")?, el("y")?),
        })
    }

    // -- theorem instances --

    fn part(&self, x: usize, y: usize) -> bool {
        self.ingr[y].contains(x)
    }

    fn theorem_at(&self, t: SumTheorem, w: &Witness) -> Option<bool> {
        let el = |role: &str| w.get_element(role).filter(|&i| i < self.n);
        let set = |role: &str| w.get_subset(role).filter(|s| s.fits(self.n));
        Some(match t {
            SumTheorem::PartAntisymmetric => {
                let (x, y) = (el("x")?, el("y")?);
                !(self.part(x, y) && self.part(y, x)) || x == y
            }
            SumTheorem::PartTransitive => {
                let (x, y, z) = (el("x")?, el("y")?, el("z")?);
                !(self.part(x, y) && self.part(y, z)) || self.part(x, z)
            }
            SumTheorem::PartReflexive => {
                let x = el("x")?;
                self.part(x, x)
            }
            SumTheorem::SumOfOwnParts => {
                let y = el("y")?;
                self.pre_dense(Subset::singleton(y), self.ingr[y]) && self.holds(y, self.ingr[y])
            }
            SumTheorem::SelfSum => {
                let x = el("x")?;
                self.holds(x, Subset::singleton(x))
            }
            SumTheorem::NoEmptySum => !self.holds(el("x")?, Subset::EMPTY),
            SumTheorem::PartsNonEmpty => !self.ingr[el("x")?].is_empty(),
            SumTheorem::AuxDownClosed => {
                let (x, xs) = (el("x")?, set("X")?);
                !xs.is_subset(self.ingr[x]) || self.ingr_of(xs).is_subset(self.ingr[x])
            }
            SumTheorem::AuxSumOfCommonParts => {
                let (x, xs) = (el("x")?, set("X")?);
                !self.holds(x, xs) || self.holds(x, self.ingr[x].intersection(self.ingr_of(xs)))
            }
            SumTheorem::AuxPartsBelowSum => {
                let (x, xs) = (el("x")?, set("X")?);
                !self.holds(x, xs) || self.ingr_of(xs).is_subset(self.ingr[x])
            }
            SumTheorem::AuxSumOfParts => {
                let (x, xs) = (el("x")?, set("X")?);
                self.holds(x, xs) == self.holds(x, self.ingr_of(xs))
            }
            SumTheorem::PreDenseSum => {
                let (x, xs) = (el("x")?, set("X")?);
                !(self.pre_dense(xs, self.ingr[x]) && xs.is_subset(self.ingr[x])) || self.holds(x, xs)
            }
            SumTheorem::SigmaPartition => match (el("x"), el("y"), set("X")) {
                (Some(x), None, None) => !self.family(x).is_empty(),
                (Some(x), None, Some(xs)) => !(xs.is_empty() && self.holds(x, xs)),
                (Some(x), Some(y), Some(xs)) => {
                    !(self.holds(x, xs) && self.holds(y, xs)) || self.family(x) == self.family(y)
                }
                (None, None, Some(xs)) => {
                    xs.is_empty() || self.elements().any(|x| self.holds(x, xs))
                }
                _ => return None,
            },
            SumTheorem::PartsAreSigmaUnion => {
                let x = el("x")?;
                self.ingr[x] == sigma(self.s, x).union()
            }
            SumTheorem::OverlapAgreement => {
                let (x, y) = (el("x")?, el("y")?);
                let by_sums = self.overlap[x].contains(y);
                let by_ingr = self.ingr[x].meets(self.ingr[y]);
                let by_part = parthood::overlap_p(&self.induced, x, y);
                by_sums == by_ingr && by_ingr == by_part
            }
            SumTheorem::DisjointAgreement => {
                let (x, y) = (el("x")?, el("y")?);
                let by_sums = s_disjoint(self.s, x, y);
                let by_ingr = !self.ingr[x].meets(self.ingr[y]);
                let by_part = parthood::disjoint_p(&self.induced, x, y);
                by_sums == by_ingr && by_ingr == by_part
            }
            SumTheorem::SumMatchesInduced => {
                let (x, xs) = (el("x")?, set("X")?);
                self.holds(x, xs) == parthood::sum_induced_holds(&self.induced, x, xs)
            }
        })
    }

    /// Candidate bindings for a theorem, in canonical order.
    fn theorem_bindings(&self, t: SumTheorem) -> Vec<Witness> {
        let n = self.n;
        let x_only = || (0..n).map(|x| Witness::new().element("x", x)).collect();
        let xy = || {
            (0..n)
                .flat_map(|x| (0..n).map(move |y| Witness::new().element("x", x).element("y", y)))
                .collect()
        };
        let x_and_set = || {
            (0..n)
                .flat_map(|x| self.subsets(false).map(move |s| Witness::new().element("x", x).subset("X", s)))
                .collect()
        };
        match t {
            SumTheorem::PartAntisymmetric | SumTheorem::OverlapAgreement | SumTheorem::DisjointAgreement => xy(),
            SumTheorem::PartTransitive => (0..n)
                .flat_map(|x| {
                    (0..n).flat_map(move |y| {
                        (0..n).map(move |z| Witness::new().element("x", x).element("y", y).element("z", z))
                    })
                })
                .collect(),
            SumTheorem::SumOfOwnParts => (0..n).map(|y| Witness::new().element("y", y)).collect(),
            SumTheorem::PartReflexive
            | SumTheorem::SelfSum
            | SumTheorem::NoEmptySum
            | SumTheorem::PartsNonEmpty
            | SumTheorem::PartsAreSigmaUnion => x_only(),
            SumTheorem::AuxDownClosed
            | SumTheorem::AuxSumOfCommonParts
            | SumTheorem::AuxPartsBelowSum
            | SumTheorem::AuxSumOfParts
            | SumTheorem::PreDenseSum
            | SumTheorem::SumMatchesInduced => x_and_set(),
            SumTheorem::SigmaPartition => {
                // Non-empty blocks, no empty member, overlapping blocks equal, cover.
                let mut out: Vec<Witness> = x_only();
                out.extend((0..n).map(|x| Witness::new().element("x", x).subset("X", Subset::EMPTY)));
                for x in 0..n {
                    for &xs in self.family(x) {
                        out.extend(
                            (0..n)
                                .filter(|&y| y != x)
                                .map(|y| Witness::new().element("x", x).element("y", y).subset("X", xs)),
                        );
                    }
                }
                out.extend(self.subsets(true).map(|s| Witness::new().subset("X", s)));
                out
            }
        }
    }

    fn check_theorem(&self, t: SumTheorem) -> AxiomVerdict {
        let w = self
            .theorem_bindings(t)
            .into_iter()
            .find(|w| self.theorem_at(t, w) == Some(false));
        AxiomVerdict::from_search(t, w)
    }
}

/// Decides each requested axiom, in request order.
pub fn check_sum_axioms(s: &SumStructure, which: &[SumAxiom]) -> AxiomReport {
    let ctx = Ctx::new(s);
    which.iter().map(|&a| ctx.check_axiom(a)).collect()
}

/// True when all of S1–S5 hold.
pub fn is_sum_model(s: &SumStructure) -> bool {
    let ctx = Ctx::new(s);
    SumAxiom::CORE.iter().all(|&a| ctx.check_axiom(a).holds)
}

/// The theorems of the sum theory, plus S-Sigma and singleton-sum, each
/// checked exhaustively. Runs on any structure; outside the class of sum
/// models failures are expected and reported.
pub fn derived_theorem_suite(s: &SumStructure) -> AxiomReport {
    let ctx = Ctx::new(s);
    let mut verdicts = Vec::with_capacity(SumTheorem::ALL.len() + 2);
    for t in SumTheorem::ALL {
        verdicts.push(ctx.check_theorem(t));
        if t == SumTheorem::PartsAreSigmaUnion {
            verdicts.push(ctx.check_axiom(SumAxiom::SigmaUnion));
            verdicts.push(ctx.check_axiom(SumAxiom::SingletonSum));
        }
    }
    AxiomReport { verdicts }
}

/// Re-evaluates an axiom or theorem at the witness bindings; true when the
/// witness really is a counterexample.
pub fn replay_sum_witness(s: &SumStructure, axiom: AxiomId, witness: &Witness) -> bool {
    let ctx = Ctx::new(s);
    let violated = match axiom {
        AxiomId::Sum(a) => ctx.replay_axiom(a, witness),
        AxiomId::Theorem(t) => ctx.theorem_at(t, witness).map(|holds| !holds),
        AxiomId::Part(_) => None,
    };
    violated.unwrap_or(false)
}
