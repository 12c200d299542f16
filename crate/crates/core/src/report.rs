//! Verdicts and counterexample witnesses shared by both theories.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::{Domain, Subset};

/// Axioms of the parthood theory, plus the two supplementation/sum variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartAxiom {
    P1,
    P2,
    P3,
    P4,
    /// Strong supplementation, phrased with disjointness.
    P4Strong,
    P5,
    /// Unrestricted sum, phrased with the induced sum.
    P5Sum,
}

impl PartAxiom {
    /// P1..P5, the axioms that define the class of parthood models.
    pub const CORE: [PartAxiom; 5] = [
        PartAxiom::P1,
        PartAxiom::P2,
        PartAxiom::P3,
        PartAxiom::P4,
        PartAxiom::P5,
    ];
    pub const ALL: [PartAxiom; 7] = [
        PartAxiom::P1,
        PartAxiom::P2,
        PartAxiom::P3,
        PartAxiom::P4,
        PartAxiom::P4Strong,
        PartAxiom::P5,
        PartAxiom::P5Sum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartAxiom::P1 => "P1",
            PartAxiom::P2 => "P2",
            PartAxiom::P3 => "P3",
            PartAxiom::P4 => "P4",
            PartAxiom::P4Strong => "P4'",
            PartAxiom::P5 => "P5",
            PartAxiom::P5Sum => "P5'",
        }
    }
}

/// Axioms of the sum theory and the principles checked alongside them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SumAxiom {
    /// Every non-empty collection has a sum somewhere in `M`.
    S1,
    /// Literal variant: the sum must be a member of the collection itself.
    S1InCollection,
    S2,
    S3,
    S4,
    /// S4 restated with s-part and s-overlap.
    S4Var,
    S5,
    /// Closure of each Σ(x) under unions of non-empty subfamilies.
    SigmaUnion,
    /// `x + {y} → x = y`
    SingletonSum,
}

impl SumAxiom {
    /// S1..S5, the axioms that define the class of sum models.
    pub const CORE: [SumAxiom; 5] = [
        SumAxiom::S1,
        SumAxiom::S2,
        SumAxiom::S3,
        SumAxiom::S4,
        SumAxiom::S5,
    ];
    pub const ALL: [SumAxiom; 9] = [
        SumAxiom::S1,
        SumAxiom::S1InCollection,
        SumAxiom::S2,
        SumAxiom::S3,
        SumAxiom::S4,
        SumAxiom::S4Var,
        SumAxiom::S5,
        SumAxiom::SigmaUnion,
        SumAxiom::SingletonSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumAxiom::S1 => "S1",
            SumAxiom::S1InCollection => "S1-strict",
            SumAxiom::S2 => "S2",
            SumAxiom::S3 => "S3",
            SumAxiom::S4 => "S4",
            SumAxiom::S4Var => "S4-var",
            SumAxiom::S5 => "S5",
            SumAxiom::SigmaUnion => "S-Sigma",
            SumAxiom::SingletonSum => "singleton-sum",
        }
    }
}

/// Consequences of S1..S5 that are checked on explicit structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SumTheorem {
    PartAntisymmetric,
    PartTransitive,
    PartReflexive,
    /// `{y}` is pre-dense in `Ingr(y)` and `y + Ingr(y)`.
    SumOfOwnParts,
    /// `x + {x}`
    SelfSum,
    /// No `x + ∅`.
    NoEmptySum,
    /// `Ingr(x) ≠ ∅`
    PartsNonEmpty,
    /// `X ⊆ Ingr(x) → Ingr(X) ⊆ Ingr(x)`
    AuxDownClosed,
    /// `x + X → x + Ingr(x) ∩ Ingr(X)`
    AuxSumOfCommonParts,
    /// `x + X → Ingr(X) ⊆ Ingr(x)`
    AuxPartsBelowSum,
    /// `x + X ⟺ x + Ingr(X)`
    AuxSumOfParts,
    /// `X` pre-dense in `Ingr(x)` and `X ⊆ Ingr(x)` give `x + X`.
    PreDenseSum,
    /// `{Σ(x)}` partitions the non-empty subsets.
    SigmaPartition,
    /// `Ingr(x) = ⋃Σ(x)`
    PartsAreSigmaUnion,
    /// s-overlap, meeting Ingr sets, and overlap under ⊑₊ coincide.
    OverlapAgreement,
    /// s-disjointness, disjoint Ingr sets, and disjointness under ⊑₊ coincide.
    DisjointAgreement,
    /// `x + X ⟺ x +_{⊑₊} X`
    SumMatchesInduced,
}

impl SumTheorem {
    pub const ALL: [SumTheorem; 17] = [
        SumTheorem::PartAntisymmetric,
        SumTheorem::PartTransitive,
        SumTheorem::PartReflexive,
        SumTheorem::SumOfOwnParts,
        SumTheorem::SelfSum,
        SumTheorem::NoEmptySum,
        SumTheorem::PartsNonEmpty,
        SumTheorem::AuxDownClosed,
        SumTheorem::AuxSumOfCommonParts,
        SumTheorem::AuxPartsBelowSum,
        SumTheorem::AuxSumOfParts,
        SumTheorem::PreDenseSum,
        SumTheorem::SigmaPartition,
        SumTheorem::PartsAreSigmaUnion,
        SumTheorem::OverlapAgreement,
        SumTheorem::DisjointAgreement,
        SumTheorem::SumMatchesInduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumTheorem::PartAntisymmetric => "s-part-antisymmetric",
            SumTheorem::PartTransitive => "s-part-transitive",
            SumTheorem::PartReflexive => "s-part-reflexive",
            SumTheorem::SumOfOwnParts => "sum-of-own-parts",
            SumTheorem::SelfSum => "self-sum",
            SumTheorem::NoEmptySum => "no-empty-sum",
            SumTheorem::PartsNonEmpty => "ingr-nonempty",
            SumTheorem::AuxDownClosed => "aux-1",
            SumTheorem::AuxSumOfCommonParts => "aux-2",
            SumTheorem::AuxPartsBelowSum => "aux-3",
            SumTheorem::AuxSumOfParts => "aux-4",
            SumTheorem::PreDenseSum => "S5-var",
            SumTheorem::SigmaPartition => "sigma-partition",
            SumTheorem::PartsAreSigmaUnion => "ingr-is-sigma-union",
            SumTheorem::OverlapAgreement => "overlap-agreement",
            SumTheorem::DisjointAgreement => "disjoint-agreement",
            SumTheorem::SumMatchesInduced => "sum-matches-induced",
        }
    }
}

/// Identifier of anything a report can carry a verdict for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Part(PartAxiom),
    Sum(SumAxiom),
    Theorem(SumTheorem),
}

impl AxiomId {
    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Part(a) => a.name(),
            AxiomId::Sum(a) => a.name(),
            AxiomId::Theorem(t) => t.name(),
        }
    }
}

macro_rules! display_by_name {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    )*};
}

display_by_name!(PartAxiom, SumAxiom, SumTheorem);

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<PartAxiom> for AxiomId {
    fn from(a: PartAxiom) -> Self {
        AxiomId::Part(a)
    }
}

impl From<SumAxiom> for AxiomId {
    fn from(a: SumAxiom) -> Self {
        AxiomId::Sum(a)
    }
}

impl From<SumTheorem> for AxiomId {
    fn from(t: SumTheorem) -> Self {
        AxiomId::Theorem(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartAxiom::ALL
            .iter()
            .map(|&a| AxiomId::Part(a))
            .chain(SumAxiom::ALL.iter().map(|&a| AxiomId::Sum(a)))
            .chain(SumTheorem::ALL.iter().map(|&t| AxiomId::Theorem(t)))
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A value bound to one role of a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Element(usize),
    Subset(Subset),
    Family(Vec<Subset>),
}

/// A named binding of the quantified variables at which an axiom fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub role: String,
    pub value: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(pub Vec<Binding>);

impl Witness {
    pub fn new() -> Self {
        Witness(Vec::new())
    }

    #[must_use]
    pub fn element(mut self, role: &str, x: usize) -> Self {
        self.0.push(Binding {
            role: role.to_string(),
            value: Value::Element(x),
        });
        self
    }

    #[must_use]
    pub fn subset(mut self, role: &str, set: Subset) -> Self {
        self.0.push(Binding {
            role: role.to_string(),
            value: Value::Subset(set),
        });
        self
    }

    #[must_use]
    pub fn family(mut self, role: &str, fam: Vec<Subset>) -> Self {
        self.0.push(Binding {
            role: role.to_string(),
            value: Value::Family(fam),
        });
        self
    }

    fn lookup(&self, role: &str) -> Option<&Value> {
        self.0.iter().find(|b| b.role == role).map(|b| &b.value)
    }

    pub fn get_element(&self, role: &str) -> Option<usize> {
        match self.lookup(role)? {
            Value::Element(x) => Some(*x),
            _ => None,
        }
    }

    pub fn get_subset(&self, role: &str) -> Option<Subset> {
        match self.lookup(role)? {
            Value::Subset(s) => Some(*s),
            _ => None,
        }
    }

    pub fn get_family(&self, role: &str) -> Option<&[Subset]> {
        match self.lookup(role)? {
            Value::Family(f) => Some(f),
            _ => None,
        }
    }

    /// `x=a X={b}` style rendering with domain labels.
    pub fn render(&self, domain: &Domain) -> String {
        self.0
            .iter()
            .map(|b| {
                let v = match &b.value {
                    Value::Element(x) => domain.label(*x).to_string(),
                    Value::Subset(s) => domain.show(*s),
                    Value::Family(f) => {
                        let parts: Vec<String> = f.iter().map(|s| domain.show(*s)).collect();
                        format!("{{{}}}", parts.join(","))
                    }
                };
                format!("{}={}", b.role, v)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outcome of one axiom. `witness` is present exactly when `holds` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomVerdict {
    pub fn from_search(axiom: impl Into<AxiomId>, witness: Option<Witness>) -> Self {
        AxiomVerdict {
            axiom: axiom.into(),
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn render(&self, domain: &Domain) -> String {
        match &self.witness {
            None => format!("{} holds", self.axiom),
            Some(w) => format!("{} FAILS, witness {}", self.axiom, w.render(domain)),
        }
    }
}

/// Verdicts in the order they were requested.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn get(&self, axiom: impl Into<AxiomId>) -> Option<&AxiomVerdict> {
        let axiom = axiom.into();
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// Verdict for `axiom`; panics if it was not requested.
    pub fn holds(&self, axiom: impl Into<AxiomId>) -> bool {
        let axiom = axiom.into();
        self.get(axiom)
            .unwrap_or_else(|| panic!("{axiom} not in report"))
            .holds
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn render(&self, domain: &Domain) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&v.render(domain));
            out.push('\n');
        }
        out
    }
}

impl FromIterator<AxiomVerdict> for AxiomReport {
    fn from_iter<I: IntoIterator<Item = AxiomVerdict>>(iter: I) -> Self {
        AxiomReport {
            verdicts: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        let ids = PartAxiom::ALL
            .iter()
            .map(|&a| AxiomId::from(a))
            .chain(SumAxiom::ALL.iter().map(|&a| a.into()))
            .chain(SumTheorem::ALL.iter().map(|&t| t.into()));
        for id in ids {
            let parsed: AxiomId = id.name().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert_eq!("p4'".parse::<AxiomId>().unwrap(), PartAxiom::P4Strong.into());
        assert!("S6".parse::<AxiomId>().is_err());
    }

    #[test]
    fn verdict_rendering() {
        let d = Domain::new(&["a", "b"]).unwrap();
        let w = Witness::new()
            .element("x", 0)
            .subset("X", Subset::singleton(1));
        let v = AxiomVerdict::from_search(SumAxiom::S5, Some(w));
        assert!(!v.holds);
        assert_eq!(v.render(&d), "S5 FAILS, witness x=a X={b}");
        let ok = AxiomVerdict::from_search(SumAxiom::S1, None);
        assert_eq!(ok.render(&d), "S1 holds");
    }

    #[test]
    fn report_json_round_trip() {
        let report: AxiomReport = [
            AxiomVerdict::from_search(PartAxiom::P4, Some(Witness::new().element("x", 1).element("y", 0))),
            AxiomVerdict::from_search(
                SumAxiom::SigmaUnion,
                Some(Witness::new().element("x", 0).family("A", vec![Subset::from_bits(1)])),
            ),
            AxiomVerdict::from_search(SumTheorem::NoEmptySum, None),
        ]
        .into_iter()
        .collect();
        let text = serde_json::to_string(&report).unwrap();
        let back: AxiomReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
