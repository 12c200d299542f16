//! The two induction maps between parthood and sum structures, round-trip
//! comparisons, and the model-level bijection check.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::model::{MereoStructure, PartRelation, Subset, SumRelation, SumStructure};
use crate::parthood;
use crate::sum;

/// Parthood model to sum structure via the parthood-defined sum.
pub fn induce_sum(m: &MereoStructure) -> SumStructure {
    SumStructure::new(m.domain().clone(), parthood::induced_sum_relation(m))
        .expect("induced relation shares the domain")
}

/// Sum structure to parthood structure via s-parthood.
pub fn induce_part(s: &SumStructure) -> MereoStructure {
    MereoStructure::new(s.domain().clone(), sum::induced_part_relation(s))
        .expect("induced relation shares the domain")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    PartFirst,
    SumFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Difference {
    /// `(x, y)` is in exactly one of the two part relations.
    Pair { x: usize, y: usize, in_original: bool },
    /// `(x, X)` is in exactly one of the two sum relations.
    Sum { x: usize, set: Subset, in_original: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Part(PartRelation),
    Sum(SumRelation),
}

/// Outcome of a definitional round trip. `in_theory` records whether the
/// input satisfied its axioms; equality is only guaranteed when it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub direction: Direction,
    pub in_theory: bool,
    pub original: Relation,
    pub reconstructed: Relation,
    pub equal: bool,
    pub first_difference: Option<Difference>,
}

/// Compares `⊑` with the s-parthood of its induced sum structure.
pub fn roundtrip_part(m: &MereoStructure) -> RoundtripReport {
    let back = sum::induced_part_relation(&induce_sum(m));
    let n = m.len();
    let first_difference = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| m.part().holds(x, y) != back.holds(x, y))
        .map(|(x, y)| Difference::Pair {
            x,
            y,
            in_original: m.part().holds(x, y),
        });
    RoundtripReport {
        direction: Direction::PartFirst,
        in_theory: parthood::is_mereological(m),
        original: Relation::Part(m.part().clone()),
        reconstructed: Relation::Part(back),
        equal: first_difference.is_none(),
        first_difference,
    }
}

/// Compares `+` with the sum defined from its own s-parthood.
pub fn roundtrip_sum(s: &SumStructure) -> RoundtripReport {
    let induced = induce_part(s);
    let back = parthood::induced_sum_relation(&induced);
    let first_difference = (0..s.len())
        .flat_map(|x| s.domain().all_subsets(false).map(move |set| (x, set)))
        .find(|&(x, set)| s.holds(x, set) != back.holds(x, set))
        .map(|(x, set)| Difference::Sum {
            x,
            set,
            in_original: s.holds(x, set),
        });
    RoundtripReport {
        direction: Direction::SumFirst,
        in_theory: sum::is_sum_model(s),
        original: Relation::Sum(s.sum().clone()),
        reconstructed: Relation::Sum(back),
        equal: first_difference.is_none(),
        first_difference,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("parthood model #{0} induces a sum structure missing from the sum list")]
    UnmatchedPart(usize),
    #[error("parthood models #{0} and #{1} induce the same sum structure")]
    NotInjective(usize, usize),
    #[error("sum model #{0} is not the image of any parthood model")]
    UnmatchedSum(usize),
    #[error("sum model #{sum} does not induce back parthood model #{part}")]
    NotInverse { part: usize, sum: usize },
    #[error("model lists are for domain size {found}, expected {expected}")]
    WrongSize { expected: usize, found: usize },
}

/// Checks that `induce_sum` maps `parts` one-to-one onto `sums` with
/// `induce_part` as inverse. Returns `(part index, sum index)` pairs.
pub fn verify_bijection(
    n: usize,
    parts: &[MereoStructure],
    sums: &[SumStructure],
) -> Result<Vec<(usize, usize)>, BijectionError> {
    let sizes = parts.iter().map(|m| m.len()).chain(sums.iter().map(|s| s.len()));
    for found in sizes {
        if found != n {
            return Err(BijectionError::WrongSize { expected: n, found });
        }
    }
    let index: HashMap<&SumRelation, usize> =
        sums.iter().enumerate().map(|(i, s)| (s.sum(), i)).collect();
    let mut owner: Vec<Option<usize>> = vec![None; sums.len()];
    let mut pairing = Vec::with_capacity(parts.len());
    for (pi, m) in parts.iter().enumerate() {
        let image = induce_sum(m);
        let si = *index
            .get(image.sum())
            .ok_or(BijectionError::UnmatchedPart(pi))?;
        if let Some(prev) = owner[si] {
            return Err(BijectionError::NotInjective(prev, pi));
        }
        owner[si] = Some(pi);
        if induce_part(&sums[si]).part() != m.part() {
            return Err(BijectionError::NotInverse { part: pi, sum: si });
        }
        pairing.push((pi, si));
    }
    if let Some(si) = owner.iter().position(Option::is_none) {
        return Err(BijectionError::UnmatchedSum(si));
    }
    Ok(pairing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Domain;
    use crate::report::{PartAxiom, SumAxiom};

    fn three() -> MereoStructure {
        MereoStructure::from_labels(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "c"), ("b", "c")],
        )
        .unwrap()
    }

    fn one() -> MereoStructure {
        MereoStructure::new(Domain::letters(1).unwrap(), PartRelation::identity(1)).unwrap()
    }

    #[test]
    fn induce_sum_examples() {
        let s = induce_sum(&three());
        assert!(s.holds(2, Subset::from_bits(0b011)));
        assert!(sum::check_sum_axioms(&s, &SumAxiom::CORE).all_hold());
        let s1 = induce_sum(&one());
        assert_eq!(s1.sum().family(0), &[Subset::singleton(0)]);
    }

    #[test]
    fn induce_part_examples() {
        let m = induce_part(&induce_sum(&three()));
        assert_eq!(m.part(), three().part());
        assert!(parthood::check_part_axioms(&m, &PartAxiom::CORE).all_hold());
        assert_eq!(induce_part(&induce_sum(&one())).part(), &PartRelation::identity(1));

        let s2_fail = SumStructure::from_labels(
            &["a", "b"],
            &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"]), ("b", &["a", "b"])],
        )
        .unwrap();
        let r = parthood::check_part_axioms(&induce_part(&s2_fail), &[PartAxiom::P2]);
        assert!(!r.all_hold());
    }

    #[test]
    fn roundtrip_part_examples() {
        let r = roundtrip_part(&three());
        assert!(r.in_theory && r.equal && r.first_difference.is_none());
        let chain =
            MereoStructure::from_labels(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b")]).unwrap();
        let r = roundtrip_part(&chain);
        assert!(!r.in_theory);
        assert_eq!(r.equal, r.first_difference.is_none());
    }

    #[test]
    fn roundtrip_sum_examples() {
        let single = induce_sum(&one());
        let r = roundtrip_sum(&single);
        assert!(r.in_theory && r.equal);

        let s5_fail = SumStructure::from_labels(
            &["a", "b"],
            &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"])],
        )
        .unwrap();
        let r = roundtrip_sum(&s5_fail);
        assert!(!r.in_theory);
        assert_eq!(
            r.first_difference,
            Some(Difference::Sum {
                x: 0,
                set: Subset::singleton(1),
                in_original: false
            })
        );
    }

    #[test]
    fn bijection_errors() {
        let m = three();
        let s = induce_sum(&m);
        assert_eq!(verify_bijection(3, std::slice::from_ref(&m), std::slice::from_ref(&s)), Ok(vec![(0, 0)]));
        assert_eq!(verify_bijection(3, std::slice::from_ref(&m), &[]), Err(BijectionError::UnmatchedPart(0)));
        assert_eq!(verify_bijection(3, &[], std::slice::from_ref(&s)), Err(BijectionError::UnmatchedSum(0)));
        assert_eq!(
            verify_bijection(3, &[m.clone(), m.clone()], std::slice::from_ref(&s)),
            Err(BijectionError::NotInjective(0, 1))
        );
        assert!(matches!(
            verify_bijection(2, &[m], &[s]),
            Err(BijectionError::WrongSize { .. })
        ));
        assert_eq!(verify_bijection(2, &[], &[]), Ok(vec![]));
    }
}
