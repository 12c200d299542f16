//! Axioms P1–P5 on `⟨M, ⊑⟩` and the notions derived from parthood.
//!
//! Every check is an exhaustive loop over the explicit domain. Witnesses are
//! the first violating tuple in canonical order, with variables taken in the
//! order they occur in the axiom.

use crate::model::{MereoStructure, Subset, SumRelation};
use crate::report::{AxiomReport, AxiomVerdict, PartAxiom, Witness};

/// `x` and `y` share a part.
pub fn overlap_p(m: &MereoStructure, x: usize, y: usize) -> bool {
    let part = m.part();
    (0..m.len()).any(|z| part.holds(z, x) && part.holds(z, y))
}

/// No `z` is part of both `x` and `y`.
pub fn disjoint_p(m: &MereoStructure, x: usize, y: usize) -> bool {
    let part = m.part();
    !(0..m.len()).any(|z| part.holds(z, x) && part.holds(z, y))
}

/// The sum induced by parthood: every member of `set` is part of `x`, and
/// every part of `x` overlaps some member of `set`.
pub fn sum_induced_holds(m: &MereoStructure, x: usize, set: Subset) -> bool {
    let part = m.part();
    set.iter().all(|y| part.holds(y, x))
        && (0..m.len())
            .filter(|&a| part.holds(a, x))
            .all(|a| set.iter().any(|y| overlap_p(m, a, y)))
}

/// `{ X | x +_⊑ X }` for every element. Costs `O(n · 2^n · n²)`.
pub fn induced_sum_relation(m: &MereoStructure) -> SumRelation {
    let families = (0..m.len())
        .map(|x| {
            m.domain()
                .all_subsets(false)
                .filter(|&set| sum_induced_holds(m, x, set))
                .collect()
        })
        .collect();
    SumRelation::from_families(families)
}

fn p1_at(m: &MereoStructure, x: usize) -> bool {
    m.part().holds(x, x)
}

fn p2_at(m: &MereoStructure, x: usize, y: usize) -> bool {
    !(m.part().holds(x, y) && m.part().holds(y, x)) || x == y
}

fn p3_at(m: &MereoStructure, x: usize, y: usize, z: usize) -> bool {
    let p = m.part();
    !(p.holds(x, y) && p.holds(y, z)) || p.holds(x, z)
}

fn p4_at(m: &MereoStructure, x: usize, y: usize) -> bool {
    let p = m.part();
    let n = m.len();
    p.holds(x, y)
        || (0..n).any(|z| p.holds(z, x) && !(0..n).any(|u| p.holds(u, z) && p.holds(u, y)))
}

fn p4_strong_at(m: &MereoStructure, x: usize, y: usize) -> bool {
    m.part().holds(x, y) || (0..m.len()).any(|z| m.part().holds(z, x) && disjoint_p(m, z, y))
}

fn p5_at(m: &MereoStructure, set: Subset) -> bool {
    let p = m.part();
    let n = m.len();
    set.is_empty()
        || (0..n).any(|x| {
            set.iter().all(|y| p.holds(y, x))
                && (0..n).all(|a| {
                    !p.holds(a, x)
                        || set
                            .iter()
                            .any(|y| (0..n).any(|z| p.holds(z, y) && p.holds(z, a)))
                })
        })
}

fn p5_sum_at(m: &MereoStructure, set: Subset) -> bool {
    set.is_empty() || (0..m.len()).any(|x| sum_induced_holds(m, x, set))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn check_one(m: &MereoStructure, axiom: PartAxiom) -> AxiomVerdict {
    let n = m.len();
    let witness = match axiom {
        PartAxiom::P1 => (0..n)
            .find(|&x| !p1_at(m, x))
            .map(|x| Witness::new().element("x", x)),
        PartAxiom::P2 => pairs(n)
            .find(|&(x, y)| !p2_at(m, x, y))
            .map(|(x, y)| Witness::new().element("x", x).element("y", y)),
        PartAxiom::P3 => pairs(n)
            .flat_map(|(x, y)| (0..n).map(move |z| (x, y, z)))
            .find(|&(x, y, z)| !p3_at(m, x, y, z))
            .map(|(x, y, z)| Witness::new().element("x", x).element("y", y).element("z", z)),
        PartAxiom::P4 | PartAxiom::P4Strong => {
            let at = if axiom == PartAxiom::P4 { p4_at } else { p4_strong_at };
            pairs(n)
                .find(|&(x, y)| !at(m, x, y))
                .map(|(x, y)| Witness::new().element("x", x).element("y", y))
        }
        PartAxiom::P5 | PartAxiom::P5Sum => {
            let at = if axiom == PartAxiom::P5 { p5_at } else { p5_sum_at };
            m.domain()
                .all_subsets(true)
                .find(|&set| !at(m, set))
                .map(|set| Witness::new().subset("X", set))
        }
    };
    AxiomVerdict::from_search(axiom, witness)
}

/// Decides each requested axiom, in request order.
pub fn check_part_axioms(m: &MereoStructure, which: &[PartAxiom]) -> AxiomReport {
    which.iter().map(|&a| check_one(m, a)).collect()
}

/// True when all of P1–P5 hold.
pub fn is_mereological(m: &MereoStructure) -> bool {
    PartAxiom::CORE.iter().all(|&a| check_one(m, a).holds)
}

/// Re-evaluates the axiom at the bindings in `witness`; true when the
/// witness really is a counterexample.
pub fn replay_part_witness(m: &MereoStructure, axiom: PartAxiom, witness: &Witness) -> bool {
    let n = m.len();
    let el = |role: &str| witness.get_element(role).filter(|&i| i < n);
    let violated = match axiom {
        PartAxiom::P1 => el("x").map(|x| !p1_at(m, x)),
        PartAxiom::P2 => el("x").zip(el("y")).map(|(x, y)| !p2_at(m, x, y)),
        PartAxiom::P3 => el("x")
            .zip(el("y"))
            .zip(el("z"))
            .map(|((x, y), z)| !p3_at(m, x, y, z)),
        PartAxiom::P4 => el("x").zip(el("y")).map(|(x, y)| !p4_at(m, x, y)),
        PartAxiom::P4Strong => el("x").zip(el("y")).map(|(x, y)| !p4_strong_at(m, x, y)),
        PartAxiom::P5 => witness.get_subset("X").map(|s| !p5_at(m, s)),
        PartAxiom::P5Sum => witness.get_subset("X").map(|s| !p5_sum_at(m, s)),
    };
    violated.unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Domain, PartRelation};

    /// Atoms a, b under top c.
    fn three() -> MereoStructure {
        MereoStructure::from_labels(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "c"), ("b", "c")],
        )
        .unwrap()
    }

    fn chain() -> MereoStructure {
        MereoStructure::from_labels(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b")]).unwrap()
    }

    fn set(m: &MereoStructure, names: &[&str]) -> Subset {
        m.domain().subset_of(names).unwrap()
    }

    #[test]
    fn overlap_examples() {
        let m = three();
        for x in 0..3 {
            assert!(overlap_p(&m, x, x));
            assert!(!disjoint_p(&m, x, x));
        }
        assert!(!overlap_p(&m, 0, 1));
        assert!(disjoint_p(&m, 0, 1));
        assert!(overlap_p(&m, 0, 2));
        assert!(!disjoint_p(&m, 0, 2));
    }

    #[test]
    fn sum_induced_examples() {
        let m = three();
        assert!(sum_induced_holds(&m, 2, set(&m, &["a", "b"])));
        assert!(!sum_induced_holds(&m, 2, set(&m, &["a"])));
        for x in 0..3 {
            assert!(sum_induced_holds(&m, x, Subset::singleton(x)));
        }
    }

    #[test]
    fn empty_sum_is_not_hard_coded() {
        // No parts at all: both conjuncts are vacuous for the empty set.
        let d = Domain::letters(2).unwrap();
        let m = MereoStructure::new(d, PartRelation::from_pairs(2, [(0, 0)])).unwrap();
        assert!(sum_induced_holds(&m, 1, Subset::EMPTY));
        assert!(!sum_induced_holds(&m, 0, Subset::EMPTY));
    }

    #[test]
    fn induced_sum_examples() {
        let d = Domain::letters(1).unwrap();
        let one = MereoStructure::new(d, PartRelation::identity(1)).unwrap();
        let rel = induced_sum_relation(&one);
        assert_eq!(rel.family(0), &[Subset::singleton(0)]);

        let m = three();
        let rel = induced_sum_relation(&m);
        let mut expect: Vec<Subset> = [&["a", "b"][..], &["a", "b", "c"], &["a", "c"], &["b", "c"], &["c"]]
            .iter()
            .map(|names| set(&m, names))
            .collect();
        expect.sort();
        assert_eq!(rel.family(2), expect.as_slice());
        assert_eq!(rel.family(0), &[set(&m, &["a"])]);
    }

    #[test]
    fn three_element_model_passes_everything() {
        let m = three();
        let report = check_part_axioms(&m, &PartAxiom::ALL);
        assert!(report.all_hold(), "{report:?}");
        assert!(is_mereological(&m));
    }

    #[test]
    fn chain_fails_supplementation() {
        let m = chain();
        let report = check_part_axioms(&m, &PartAxiom::ALL);
        for a in [PartAxiom::P1, PartAxiom::P2, PartAxiom::P3, PartAxiom::P5, PartAxiom::P5Sum] {
            assert!(report.holds(a), "{a:?}");
        }
        for a in [PartAxiom::P4, PartAxiom::P4Strong] {
            let v = report.get(a).unwrap();
            let w = v.witness.as_ref().unwrap();
            assert_eq!(w.get_element("x"), Some(1));
            assert_eq!(w.get_element("y"), Some(0));
            assert!(replay_part_witness(&m, a, w));
        }
    }

    #[test]
    fn witness_replay_rejects_non_violations() {
        let m = three();
        let w = Witness::new().element("x", 0).element("y", 1);
        assert!(!replay_part_witness(&m, PartAxiom::P4, &w));
        assert!(!replay_part_witness(&m, PartAxiom::P2, &Witness::new()));
    }

    #[test]
    fn empty_relation_fails_reflexivity_and_sums() {
        let d = Domain::letters(2).unwrap();
        let m = MereoStructure::new(d, PartRelation::empty(2)).unwrap();
        let r = check_part_axioms(&m, &PartAxiom::ALL);
        assert_eq!(r.get(PartAxiom::P1).unwrap().witness, Some(Witness::new().element("x", 0)));
        assert!(r.holds(PartAxiom::P2));
        assert!(r.holds(PartAxiom::P3));
        assert!(!r.holds(PartAxiom::P4));
        assert!(!r.holds(PartAxiom::P5));
        assert!(!r.holds(PartAxiom::P5Sum));
    }
}
