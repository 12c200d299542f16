//! Exhaustive enumeration of parthood models and sum models on small
//! labeled domains, isomorphism counting, and the independence fixtures.

pub mod fixtures;
pub mod posets;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::equivalence::induce_sum;
use crate::model::{Domain, MereoStructure, PartRelation, Subset, SumRelation, SumStructure, Theory};
use crate::{parthood, sum};

pub use fixtures::{all_fixtures, nontransitive_parthood, witness, FixtureName, WitnessFixture};

/// Largest domain for parthood enumeration.
pub const MAX_PART_N: usize = posets::MAX_POSET;
/// Largest domain searched directly for sum models; larger sizes (up to
/// [`MAX_PART_N`]) go through the bijection with parthood models.
pub const MAX_DIRECT_SUM_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("domain size {n} is outside 1..={max}")]
    SizeOutOfRange { n: usize, max: usize },
}

#[derive(Debug, Clone)]
pub struct EnumerationResult<T> {
    pub n: usize,
    pub theory: Theory,
    pub labeled_count: usize,
    pub iso_count: usize,
    /// Present when collection was requested; sorted canonically.
    pub models: Option<Vec<T>>,
    pub elapsed: Duration,
    /// Sum models obtained by inducing sums on enumerated parthood models.
    pub via_bijection: bool,
}

fn check_size(n: usize, max: usize) -> Result<(), EnumerationError> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::SizeOutOfRange { n, max })
    }
}

/// A top element exists (needed for P5 on the whole domain) and strong
/// supplementation holds, both on the bit masks.
fn passes_cheap_filters(down: &posets::Down, n: usize) -> bool {
    let full = ((1u16 << n) - 1) as u8;
    if !down[..n].contains(&full) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            down[y] >> x & 1 == 1
                || (0..n).any(|z| down[x] >> z & 1 == 1 && down[z] & down[y] == 0)
        })
    })
}

fn to_structure(domain: &Domain, down: &posets::Down) -> MereoStructure {
    let n = domain.len();
    let rel = PartRelation::from_down_sets(
        down[..n].iter().map(|&d| Subset::from_bits(u64::from(d))).collect(),
    );
    MereoStructure::new(domain.clone(), rel).expect("poset fits its domain")
}

/// Every relation on `n` labeled elements satisfying P1–P5.
///
/// Candidates are labeled partial orders (P1–P3 hold by construction); a
/// cheap top/supplementation filter precedes the full axiom check.
pub fn enumerate_mereo(n: usize, collect: bool) -> Result<EnumerationResult<MereoStructure>, EnumerationError> {
    check_size(n, MAX_PART_N)?;
    let start = Instant::now();
    let domain = Domain::letters(n).expect("n is within the domain cap");
    let base = posets::posets(n - 1);
    let mut models: Vec<MereoStructure> = base
        .par_iter()
        .flat_map_iter(|p| {
            let mut found = Vec::new();
            posets::extend(p, n - 1, |q| {
                if passes_cheap_filters(&q, n) {
                    let m = to_structure(&domain, &q);
                    if parthood::is_mereological(&m) {
                        found.push(m);
                    }
                }
            });
            found
        })
        .collect();
    models.sort_by_cached_key(|m| m.part().encode());
    let iso_count = canonical_count(&models);
    Ok(EnumerationResult {
        n,
        theory: Theory::Part,
        labeled_count: models.len(),
        iso_count,
        models: collect.then_some(models),
        elapsed: start.elapsed(),
        via_bijection: false,
    })
}

/// Sum assignments on non-empty subsets indexed by bit mask, checked
/// against S3 in functional form: `σ(X) ∈ Y → σ(X ∪ Y) = σ(Y)`.
fn sigma_passes_s3(sigma: &[u8], full: usize) -> bool {
    (1..=full).all(|y| {
        (1..=full).all(|x| y >> sigma[x] & 1 == 0 || sigma[x | y] == sigma[y])
    })
}

/// Every sum relation on `n` labeled elements satisfying S1–S5.
///
/// S1 (every non-empty collection has a sum) and S2 (at most one) make a
/// model the graph of a function `σ` on non-empty subsets, and no model sums
/// the empty set. The direct search runs over such functions with
/// `σ({x}) = x`, which every model satisfies, pre-filters on S3, and keeps
/// the candidates passing the full axiom check. Above
/// [`MAX_DIRECT_SUM_N`] the models are induced from the parthood models.
pub fn enumerate_sum(n: usize, collect: bool) -> Result<EnumerationResult<SumStructure>, EnumerationError> {
    check_size(n, MAX_PART_N)?;
    if n > MAX_DIRECT_SUM_N {
        let start = Instant::now();
        let parts = enumerate_mereo(n, true)?;
        let mut models: Vec<SumStructure> = parts
            .models
            .unwrap_or_default()
            .par_iter()
            .map(induce_sum)
            .collect();
        models.sort_by_cached_key(|s| s.sum().encode());
        return Ok(EnumerationResult {
            n,
            theory: Theory::Sum,
            labeled_count: models.len(),
            iso_count: parts.iso_count,
            models: collect.then_some(models),
            elapsed: start.elapsed(),
            via_bijection: true,
        });
    }
    let start = Instant::now();
    let domain = Domain::letters(n).expect("n is within the domain cap");
    let full = (1usize << n) - 1;
    let free: Vec<usize> = (1..=full).filter(|m| m.count_ones() >= 2).collect();
    let total = n.pow(free.len() as u32) as u64;
    let mut models: Vec<SumStructure> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut sigma = vec![0u8; full + 1];
            for i in 0..n {
                sigma[1 << i] = i as u8;
            }
            let mut rest = code;
            for &m in &free {
                sigma[m] = (rest % n as u64) as u8;
                rest /= n as u64;
            }
            if !sigma_passes_s3(&sigma, full) {
                return None;
            }
            let rel = SumRelation::from_pairs(
                n,
                (1..=full).map(|m| (sigma[m] as usize, Subset::from_bits(m as u64))),
            );
            let s = SumStructure::new(domain.clone(), rel).expect("fits domain");
            sum::is_sum_model(&s).then_some(s)
        })
        .collect();
    models.sort_by_cached_key(|s| s.sum().encode());
    let iso_count = canonical_count(&models);
    Ok(EnumerationResult {
        n,
        theory: Theory::Sum,
        labeled_count: models.len(),
        iso_count,
        models: collect.then_some(models),
        elapsed: start.elapsed(),
        via_bijection: false,
    })
}

/// Structures that can be relabeled by a permutation of their domain.
pub trait Relabel {
    fn size(&self) -> usize;
    /// Encoding of the structure after applying `perm` to its elements.
    fn encode_permuted(&self, perm: &[usize]) -> Vec<u64>;

    /// Least encoding over all `n!` relabelings.
    fn canonical_key(&self) -> Vec<u64> {
        (0..self.size())
            .permutations(self.size())
            .map(|p| self.encode_permuted(&p))
            .min()
            .unwrap_or_default()
    }
}

impl Relabel for MereoStructure {
    fn size(&self) -> usize {
        self.len()
    }

    fn encode_permuted(&self, perm: &[usize]) -> Vec<u64> {
        self.part().permute(perm).encode()
    }
}

impl Relabel for SumStructure {
    fn size(&self) -> usize {
        self.len()
    }

    fn encode_permuted(&self, perm: &[usize]) -> Vec<u64> {
        self.sum().permute(perm).encode()
    }
}

/// Number of isomorphism classes among `models`.
pub fn canonical_count<T: Relabel + Sync>(models: &[T]) -> usize {
    let keys: HashSet<Vec<u64>> = models.par_iter().map(Relabel::canonical_key).collect();
    keys.len()
}
