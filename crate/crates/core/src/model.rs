//! Domains, subsets and the two kinds of structure.
//!
//! Everything here is index based. Labels only matter at the I/O boundary,
//! and no constructor checks any axiom: arbitrary relations must be
//! expressible so that the theory modules can find their failures.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which of the two primitive notions a structure is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Part,
    Sum,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Part => "part",
            Theory::Sum => "sum",
        })
    }
}

/// Largest supported domain; a [`Subset`] is a single `u64`.
pub const MAX_DOMAIN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("domain must contain at least one element")]
    EmptyDomain,
    #[error("domain has {0} elements, at most {MAX_DOMAIN} are supported")]
    TooWide(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("labels must be non-empty")]
    EmptyLabel,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for domain of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("subset {bits:#x} has members outside a domain of size {size}")]
    SubsetOutOfRange { bits: u64, size: usize },
    #[error("relation has {found} rows, domain has {expected} elements")]
    DimensionMismatch { expected: usize, found: usize },
}

/// The universe `M`: an ordered list of distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Domain {
    labels: Vec<String>,
}

impl Domain {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self, ModelError> {
        if labels.is_empty() {
            return Err(ModelError::EmptyDomain);
        }
        if labels.len() > MAX_DOMAIN {
            return Err(ModelError::TooWide(labels.len()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            if label.is_empty() {
                return Err(ModelError::EmptyLabel);
            }
            if !seen.insert(label) {
                return Err(ModelError::DuplicateLabel(label.to_string()));
            }
            out.push(label.to_string());
        }
        Ok(Domain { labels: out })
    }

    /// `a, b, c, ...` for small sizes, `e0, e1, ...` beyond the alphabet.
    pub fn letters(n: usize) -> Result<Self, ModelError> {
        let labels: Vec<String> = if n <= 26 {
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (0..n).map(|i| format!("e{i}")).collect()
        };
        Domain::new(&labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, ModelError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ModelError::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds the subset named by `names`. Repeated names are rejected.
    pub fn subset_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, ModelError> {
        let mut set = Subset::EMPTY;
        for name in names {
            let i = self.index_of(name.as_ref())?;
            if set.contains(i) {
                return Err(ModelError::DuplicateLabel(name.as_ref().to_string()));
            }
            set = set.with(i);
        }
        Ok(set)
    }

    /// Every subset in ascending numeric order, optionally skipping `∅`.
    pub fn all_subsets(&self, nonempty_only: bool) -> Subsets {
        Subsets::new(self.len(), nonempty_only)
    }

    /// Renders a subset as `{a,b}` using this domain's labels.
    pub fn show(&self, set: Subset) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<(), ModelError> {
        if index < self.len() {
            Ok(())
        } else {
            Err(ModelError::ElementOutOfRange {
                index,
                size: self.len(),
            })
        }
    }

    pub(crate) fn check_subset(&self, set: Subset) -> Result<(), ModelError> {
        if set.fits(self.len()) {
            Ok(())
        } else {
            Err(ModelError::SubsetOutOfRange {
                bits: set.bits(),
                size: self.len(),
            })
        }
    }
}

/// A set of domain elements as a bit vector; bit `i` marks element `i`.
///
/// Ordering is the numeric order of the bit vector, which is the canonical
/// subset order used for witnesses and enumeration output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Subset::EMPTY, Subset::with)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True when no bit at index `>= n` is set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Subset::full(n))
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Applies an index permutation (`perm[i]` is the image of `i`).
    pub fn permute(self, perm: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|i| perm[i]))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Streams the subsets of an `n`-element domain in ascending numeric order.
#[derive(Debug, Clone)]
pub struct Subsets {
    next: Option<u64>,
    last: u64,
}

impl Subsets {
    pub fn new(n: usize, nonempty_only: bool) -> Self {
        Subsets {
            next: Some(u64::from(nonempty_only)).filter(|&s| s <= Subset::full(n).0),
            last: Subset::full(n).0,
        }
    }
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.last { None } else { Some(cur + 1) };
        Some(Subset(cur))
    }
}

/// A candidate part-of relation. `holds(x, y)` reads "x is part of y".
///
/// Both directions are stored: `down[y]` is the set of parts of `y`, `up[x]`
/// the set of elements `x` is part of.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartRelation {
    down: Vec<Subset>,
    up: Vec<Subset>,
}

impl PartRelation {
    pub fn empty(n: usize) -> Self {
        PartRelation {
            down: vec![Subset::EMPTY; n],
            up: vec![Subset::EMPTY; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_pairs(n, (0..n).map(|i| (i, i)))
    }

    /// Builds the relation from `(x, y)` pairs meaning x ⊑ y. Indices must
    /// be `< n`; this is checked where a [`Domain`] is attached.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut rel = Self::empty(n);
        for (x, y) in pairs {
            rel.down[y] = rel.down[y].with(x);
            rel.up[x] = rel.up[x].with(y);
        }
        rel
    }

    /// From the per-element sets of parts (`down[y]` = parts of `y`).
    pub fn from_down_sets(down: Vec<Subset>) -> Self {
        let n = down.len();
        let mut up = vec![Subset::EMPTY; n];
        for (y, parts) in down.iter().enumerate() {
            for x in parts.iter() {
                up[x] = up[x].with(y);
            }
        }
        PartRelation { down, up }
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// `{ z | z ⊑ y }`
    pub fn parts_of(&self, y: usize) -> Subset {
        self.down[y]
    }

    /// `{ y | x ⊑ y }`
    pub fn wholes_of(&self, x: usize) -> Subset {
        self.up[x]
    }

    pub fn down_sets(&self) -> &[Subset] {
        &self.down
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |x| self.up[x].iter().map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.down.iter().map(|s| s.len()).sum()
    }

    pub fn permute(&self, perm: &[usize]) -> PartRelation {
        let n = self.len();
        let mut down = vec![Subset::EMPTY; n];
        for (y, parts) in self.down.iter().enumerate() {
            down[perm[y]] = parts.permute(perm);
        }
        PartRelation::from_down_sets(down)
    }

    /// Row-major bit encoding; used as an isomorphism-canonical key.
    pub(crate) fn encode(&self) -> Vec<u64> {
        self.down.iter().map(|s| s.bits()).collect()
    }
}

/// A candidate hybrid sum relation `+ ⊆ M × P(M)`, stored as the family
/// `{ X | x + X }` for every element, each in canonical subset order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumRelation {
    families: Vec<Vec<Subset>>,
}

impl SumRelation {
    pub fn empty(n: usize) -> Self {
        SumRelation {
            families: vec![Vec::new(); n],
        }
    }

    /// Sorts and deduplicates every family.
    pub fn from_families(mut families: Vec<Vec<Subset>>) -> Self {
        for fam in &mut families {
            fam.sort_unstable();
            fam.dedup();
        }
        SumRelation { families }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Subset)>>(n: usize, pairs: I) -> Self {
        let mut families = vec![Vec::new(); n];
        for (x, set) in pairs {
            families[x].push(set);
        }
        Self::from_families(families)
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// `x + X`
    pub fn holds(&self, x: usize, set: Subset) -> bool {
        self.families[x].binary_search(&set).is_ok()
    }

    /// The stored family `{ X | x + X }`.
    pub fn family(&self, x: usize) -> &[Subset] {
        &self.families[x]
    }

    /// Elements `x` with `x + X`.
    pub fn sums_of(&self, set: Subset) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&x| self.holds(x, set)))
    }

    /// All `(x, X)` pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, Subset)> + '_ {
        self.families
            .iter()
            .enumerate()
            .flat_map(|(x, fam)| fam.iter().map(move |&s| (x, s)))
    }

    pub fn pair_count(&self) -> usize {
        self.families.iter().map(Vec::len).sum()
    }

    pub fn permute(&self, perm: &[usize]) -> SumRelation {
        let mut families = vec![Vec::new(); self.len()];
        for (x, fam) in self.families.iter().enumerate() {
            families[perm[x]] = fam.iter().map(|s| s.permute(perm)).collect();
        }
        SumRelation::from_families(families)
    }

    pub(crate) fn encode(&self) -> Vec<u64> {
        let mut key = Vec::with_capacity(self.pair_count() + self.len());
        for fam in &self.families {
            key.push(fam.len() as u64);
            key.extend(fam.iter().map(|s| s.bits()));
        }
        key
    }
}

/// `⟨M, ⊑⟩` with no axioms presumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MereoStructure {
    domain: Domain,
    part: PartRelation,
}

impl MereoStructure {
    pub fn new(domain: Domain, part: PartRelation) -> Result<Self, ModelError> {
        if part.len() != domain.len() {
            return Err(ModelError::DimensionMismatch {
                expected: domain.len(),
                found: part.len(),
            });
        }
        for s in part.down.iter().chain(&part.up) {
            domain.check_subset(*s)?;
        }
        Ok(MereoStructure { domain, part })
    }

    /// Convenience constructor from labelled `(x, y)` pairs meaning x ⊑ y.
    pub fn from_labels<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self, ModelError> {
        let domain = Domain::new(labels)?;
        let mut idx = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            idx.push((domain.index_of(x.as_ref())?, domain.index_of(y.as_ref())?));
        }
        let part = PartRelation::from_pairs(domain.len(), idx);
        Self::new(domain, part)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn part(&self) -> &PartRelation {
        &self.part
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }
}

/// `⟨M, +⟩` with no axioms presumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumStructure {
    domain: Domain,
    sum: SumRelation,
}

impl SumStructure {
    pub fn new(domain: Domain, sum: SumRelation) -> Result<Self, ModelError> {
        if sum.len() != domain.len() {
            return Err(ModelError::DimensionMismatch {
                expected: domain.len(),
                found: sum.len(),
            });
        }
        for (_, s) in sum.pairs() {
            domain.check_subset(s)?;
        }
        Ok(SumStructure { domain, sum })
    }

    /// Convenience constructor from labelled `(x, [members])` pairs.
    pub fn from_labels<S: AsRef<str>>(labels: &[S], pairs: &[(S, &[S])]) -> Result<Self, ModelError> {
        let domain = Domain::new(labels)?;
        let mut idx = Vec::with_capacity(pairs.len());
        for (x, members) in pairs {
            idx.push((domain.index_of(x.as_ref())?, domain.subset_of(members)?));
        }
        let sum = SumRelation::from_pairs(domain.len(), idx);
        Self::new(domain, sum)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn sum(&self) -> &SumRelation {
        &self.sum
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn holds(&self, x: usize, set: Subset) -> bool {
        self.sum.holds(x, set)
    }
}
