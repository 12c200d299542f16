//! Five sum structures, each failing exactly one of S1–S5.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::equivalence::induce_sum;
use crate::model::{MereoStructure, SumStructure};
use crate::report::{AxiomReport, SumAxiom};
use crate::sum::check_sum_axioms;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureName {
    S1Fail,
    S2Fail,
    S3Fail,
    S4Fail,
    S5Fail,
}

impl FixtureName {
    pub const ALL: [FixtureName; 5] = [
        FixtureName::S1Fail,
        FixtureName::S2Fail,
        FixtureName::S3Fail,
        FixtureName::S4Fail,
        FixtureName::S5Fail,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::S1Fail => "s1-fail",
            FixtureName::S2Fail => "s2-fail",
            FixtureName::S3Fail => "s3-fail",
            FixtureName::S4Fail => "s4-fail",
            FixtureName::S5Fail => "s5-fail",
        }
    }

    /// The axiom this fixture is built to violate.
    pub fn target(self) -> SumAxiom {
        match self {
            FixtureName::S1Fail => SumAxiom::S1,
            FixtureName::S2Fail => SumAxiom::S2,
            FixtureName::S3Fail => SumAxiom::S3,
            FixtureName::S4Fail => SumAxiom::S4,
            FixtureName::S5Fail => SumAxiom::S5,
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown fixture `{0}` (expected one of s1-fail .. s5-fail)")]
pub struct UnknownFixture(pub String);

impl FromStr for FixtureName {
    type Err = UnknownFixture;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| UnknownFixture(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct WitnessFixture {
    pub name: FixtureName,
    pub caption: &'static str,
    pub structure: SumStructure,
    /// Axiom and whether it is expected to hold.
    pub expected: Vec<(SumAxiom, bool)>,
}

impl WitnessFixture {
    pub fn check(&self) -> AxiomReport {
        let axioms: Vec<SumAxiom> = self.expected.iter().map(|&(a, _)| a).collect();
        check_sum_axioms(&self.structure, &axioms)
    }

    /// True when every expected verdict is reproduced.
    pub fn matches(&self) -> bool {
        let report = self.check();
        self.expected
            .iter()
            .all(|&(a, holds)| report.holds(a) == holds)
    }
}

fn profile(fail: SumAxiom, extra: &[SumAxiom]) -> Vec<(SumAxiom, bool)> {
    SumAxiom::CORE
        .iter()
        .chain(extra)
        .map(|&a| (a, a != fail))
        .collect()
}

/// Parthood on 1..7 read bottom-up from the line diagram: a pair holds
/// when a path of lines of one style leads from the lower to the upper
/// element. Solid lines: 4–2, 6–2, 2–1, 3–1, 5–3, 4–3, 7–5; dotted: 6–5.
/// 6 ⊑ 5 and 5 ⊑ 3 but not 6 ⊑ 3.
///
/// The diagram draws no loops. With `reflexive` the identity is added; the
/// induced sum needs it, since an element with no parts of its own cannot
/// overlap anything (and then 5 would not sum {6, 7}).
pub fn nontransitive_parthood(reflexive: bool) -> MereoStructure {
    let labels = ["1", "2", "3", "4", "5", "6", "7"];
    let strict = [
        ("4", "2"),
        ("6", "2"),
        ("2", "1"),
        ("3", "1"),
        ("5", "3"),
        ("4", "3"),
        ("7", "5"),
        ("6", "5"),
        ("4", "1"),
        ("6", "1"),
        ("5", "1"),
        ("7", "1"),
        ("7", "3"),
    ];
    let mut pairs: Vec<(&str, &str)> = strict.to_vec();
    if reflexive {
        pairs.extend(labels.iter().map(|l| (*l, *l)));
    }
    MereoStructure::from_labels(&labels, &pairs).expect("fixed labels")
}

pub fn fixture(name: FixtureName) -> WitnessFixture {
    let (caption, structure, expected) = match name {
        FixtureName::S1Fail => (
            "a + {a}, b + {b}: the collection {a,b} has no sum",
            SumStructure::from_labels(&["a", "b"], &[("a", &["a"][..]), ("b", &["b"])]),
            profile(SumAxiom::S1, &[]),
        ),
        FixtureName::S2Fail => (
            "a and b both sum {a,b}",
            SumStructure::from_labels(
                &["a", "b"],
                &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"]), ("b", &["a", "b"])],
            ),
            profile(SumAxiom::S2, &[]),
        ),
        FixtureName::S3Fail => (
            "sum induced by a non-transitive parthood: 3 + {4,5}, 5 + {6,7}, not 3 + {4,5,6,7}",
            Ok(induce_sum(&nontransitive_parthood(true))),
            profile(SumAxiom::S3, &[]),
        ),
        FixtureName::S4Fail => (
            "a + {a}, a + ∅: the empty collection has no member",
            SumStructure::from_labels(&["a"], &[("a", &["a"][..]), ("a", &[])]),
            profile(SumAxiom::S4, &[]),
        ),
        FixtureName::S5Fail => (
            "a + {a}, a + {a,b}, b + {b}: {b} is pre-dense in Ingr(a) but a + {b} fails",
            SumStructure::from_labels(
                &["a", "b"],
                &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"])],
            ),
            profile(SumAxiom::S5, &[SumAxiom::SigmaUnion, SumAxiom::SingletonSum]),
        ),
    };
    WitnessFixture {
        name,
        caption,
        structure: structure.expect("fixed labels"),
        expected,
    }
}

/// Looks a fixture up by its name (`s1-fail` .. `s5-fail`).
pub fn witness(name: &str) -> Result<WitnessFixture, UnknownFixture> {
    Ok(fixture(name.parse()?))
}

pub fn all_fixtures() -> Vec<WitnessFixture> {
    FixtureName::ALL.into_iter().map(fixture).collect()
}
