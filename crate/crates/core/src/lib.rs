//! Finite models of classical mereology in two axiomatizations: one built
//! on parthood (`x ⊑ y`, axioms P1–P5) and one built on a primitive sum
//! relation (`x + X`, axioms S1–S5).
//!
//! The crate checks axioms with replayable counterexamples, translates
//! structures between the two signatures, enumerates all models on small
//! domains, and reads and writes model documents and Graphviz diagrams.
//!
//! ```
//! use mereo::{check_sum_axioms, SumAxiom, SumStructure};
//!
//! let s = SumStructure::from_labels(&["a", "b"], &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"])])?;
//! let report = check_sum_axioms(&s, &SumAxiom::CORE);
//! assert!(!report.holds(SumAxiom::S5));
//! assert_eq!(report.get(SumAxiom::S5).unwrap().render(s.domain()), "S5 FAILS, witness x=a X={b}");
//! # Ok::<(), mereo::ModelError>(())
//! ```

pub mod enumeration;
pub mod equivalence;
pub mod io;
pub mod model;
pub mod parthood;
pub mod report;
pub mod sum;

pub use enumeration::{enumerate_mereo, enumerate_sum, EnumerationError, EnumerationResult};
pub use equivalence::{induce_part, induce_sum, roundtrip_part, roundtrip_sum, RoundtripReport};
pub use io::{export_dot, parse_model, write_model, IoError, ModelDocument, Structure};
pub use model::{Domain, MereoStructure, ModelError, PartRelation, Subset, SumRelation, SumStructure, Theory};
pub use parthood::{check_part_axioms, is_mereological};
pub use report::{AxiomId, AxiomReport, AxiomVerdict, PartAxiom, SumAxiom, SumTheorem, Witness};
pub use sum::{check_sum_axioms, derived_theorem_suite, is_sum_model};
