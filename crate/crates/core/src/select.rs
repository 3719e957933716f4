//! Candidate term selection: the PMI family of association measures, the
//! support score combining cosine similarity with co-occurrence, and the
//! three pools a form draws from — topical in-document terms (TID), topical
//! terms from the external supply lists (TOD), and non-topical distractors
//! (NT).

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::grade_of_term;
use crate::cluster::TopicModel;
use crate::embed::{self, UnitVector};
use crate::resources::{CooccurrenceModel, ResourceBundle};
use crate::textprep::PosTag;

/// Default over-selection quota for topical in-document terms.
pub const DEFAULT_TID_QUOTA: usize = 25;
/// Default number of top clusters feeding the anchor pool.
pub const DEFAULT_ANCHOR_CLUSTERS: usize = 3;
/// Default TOD pool size: four times the per-form need of 14.
pub const DEFAULT_TOD_POOL_SIZE: usize = 56;
/// Default NT pool size: four times the per-form need of 22.
pub const DEFAULT_NT_POOL_SIZE: usize = 88;
/// A distractor may not exceed this cosine to any anchor.
pub const DEFAULT_THETA_COS: f64 = 0.25;
/// A distractor may not exceed this PNPMI to any anchor.
pub const DEFAULT_THETA_PMI: f64 = 0.05;

#[derive(Debug, Error)]
pub enum SelectError {
    #[error("candidate term '{0}' has no resolvable vector")]
    UnresolvableCandidate(String),
    #[error("only {found} supply candidates clear the distractor ceiling; at least {needed} topical candidates needed")]
    InsufficientTopicalCandidates { found: usize, needed: usize },
    #[error("only {found} supply candidates are eligible distractors; at least {needed} needed")]
    InsufficientDistractors { found: usize, needed: usize },
    #[error("pool of {found} terms cannot fill a grade-matched target of {target}")]
    PoolBelowTarget { found: usize, target: usize },
}

/// Pointwise mutual information `log2(p(a,b) / (p(a) * p(b)))`.
///
/// `None` when a unigram or the pair count is zero (the "unavailable"
/// signal consumed by [`pnpmi`]).
pub fn pmi(a: &str, b: &str, model: &CooccurrenceModel) -> Option<f64> {
    let ua = model.unigram_count(a);
    let ub = model.unigram_count(b);
    let pair = model.pair_count(a, b);
    if ua == 0 || ub == 0 || pair == 0 {
        return None;
    }
    let total = model.total_contexts() as f64;
    let p_a = ua as f64 / total;
    let p_b = ub as f64 / total;
    let p_ab = pair as f64 / total;
    Some((p_ab / (p_a * p_b)).log2())
}

/// Normalized PMI, constrained to (-1, 1]: `pmi / -log2(p(a,b))`.
pub fn npmi(a: &str, b: &str, model: &CooccurrenceModel) -> Option<f64> {
    let value = pmi(a, b, model)?;
    let p_ab = model.pair_count(a, b) as f64 / model.total_contexts() as f64;
    let denominator = -p_ab.log2();
    if denominator == 0.0 {
        // p(a,b) = 1: both words in every context, perfect association.
        return Some(1.0);
    }
    Some(value / denominator)
}

/// Positive normalized PMI: NPMI clamped at zero, with unavailable pairs
/// mapped to zero. When either term is an MWE the value is the mean PNPMI
/// over all constituent word pairs. Total over all inputs, range [0, 1].
pub fn pnpmi(a: &str, b: &str, model: &CooccurrenceModel) -> f64 {
    let a_words: Vec<&str> = a.split_whitespace().collect();
    let b_words: Vec<&str> = b.split_whitespace().collect();
    if a_words.len() <= 1 && b_words.len() <= 1 {
        return npmi(a, b, model).map_or(0.0, |value| value.max(0.0));
    }
    let mut sum = 0.0;
    let mut pairs = 0usize;
    for word_a in &a_words {
        for word_b in &b_words {
            sum += npmi(word_a, word_b, model).map_or(0.0, |value| value.max(0.0));
            pairs += 1;
        }
    }
    if pairs == 0 {
        0.0
    } else {
        sum / pairs as f64
    }
}

/// One anchor term from the document's top topical clusters.
#[derive(Debug, Clone)]
pub struct Anchor {
    pub term: String,
    pub count: u64,
    pub vector: UnitVector,
}

/// All terms of the top clusters, the reference set the support score sums
/// over.
#[derive(Debug, Clone)]
pub struct AnchorPool {
    pub anchors: Vec<Anchor>,
    pub source_clusters: usize,
}

/// All terms (any POS) of the top `k` clusters, with document counts.
pub fn build_anchor_pool(model: &TopicModel, k: usize) -> AnchorPool {
    let source_clusters = k.min(model.clusters.len());
    let anchors = model
        .clusters
        .iter()
        .take(source_clusters)
        .flat_map(|cluster| {
            cluster.members.iter().map(|member| Anchor {
                term: member.term.clone(),
                count: member.count,
                vector: member.vector.clone(),
            })
        })
        .collect();
    AnchorPool {
        anchors,
        source_clusters,
    }
}

/// The support kernel: `sum_j (cosine_j + pnpmi_j) * log10(count_j + 1)`.
pub fn support_from_parts<I>(parts: I) -> f64
where
    I: IntoIterator<Item = (f64, f64, u64)>,
{
    parts
        .into_iter()
        .map(|(cosine, pnpmi, count)| (cosine + pnpmi) * ((count + 1) as f64).log10())
        .sum()
}

/// A candidate's aggregate topical relatedness to the document's anchors.
pub fn support(
    candidate: &str,
    anchors: &AnchorPool,
    bundle: &ResourceBundle,
) -> Result<f64, SelectError> {
    let vector = embed::term_vector(candidate, bundle)
        .map_err(|_| SelectError::UnresolvableCandidate(candidate.to_owned()))?;
    Ok(support_with_vector(
        candidate,
        &vector,
        anchors,
        &bundle.cooccurrence_model,
    ))
}

pub(crate) fn support_with_vector(
    candidate: &str,
    vector: &UnitVector,
    anchors: &AnchorPool,
    model: &CooccurrenceModel,
) -> f64 {
    support_from_parts(anchors.anchors.iter().map(|anchor| {
        let cosine = embed::cosine(vector, &anchor.vector).unwrap_or(0.0);
        (cosine, pnpmi(candidate, &anchor.term, model), anchor.count)
    }))
}

/// A pool member with its support score and grade level. Grade is `None`
/// when no constituent is covered by the grade lexicon; such terms sort
/// last in grade-sensitive steps but never fail assembly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScoredCandidate {
    pub term: String,
    pub support: f64,
    pub grade: Option<f64>,
    pub is_mwe: bool,
}

/// Degree of TID shortfall against the quota.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScarcityInfo {
    pub found: usize,
    pub quota: usize,
    /// Set when the passage yields no topical nouns at all.
    pub hard: bool,
}

/// The three candidate pools a form draws from.
#[derive(Debug, Clone)]
pub struct TermPools {
    pub tid: Vec<ScoredCandidate>,
    pub tod: Vec<ScoredCandidate>,
    pub nt: Vec<ScoredCandidate>,
    pub scarcity: Option<ScarcityInfo>,
}

/// Topical in-document pool: nouns and nominal MWEs from the top clusters,
/// ordered by (cluster rank, support descending), truncated to `quota`.
pub fn build_tid_pool(
    model: &TopicModel,
    anchors: &AnchorPool,
    bundle: &ResourceBundle,
    quota: usize,
) -> (Vec<ScoredCandidate>, Option<ScarcityInfo>) {
    let mut pool = Vec::new();
    for cluster in model.clusters.iter().take(anchors.source_clusters) {
        let mut nominals: Vec<ScoredCandidate> = cluster
            .members
            .iter()
            .filter(|member| member.pos == PosTag::Noun)
            .map(|member| ScoredCandidate {
                term: member.term.clone(),
                support: support_with_vector(
                    &member.term,
                    &member.vector,
                    anchors,
                    &bundle.cooccurrence_model,
                ),
                grade: grade_of_term(&member.term, &bundle.grade_lexicon),
                is_mwe: member.is_mwe,
            })
            .collect();
        nominals.sort_by(|a, b| {
            b.support
                .partial_cmp(&a.support)
                .unwrap()
                .then_with(|| a.term.cmp(&b.term))
        });
        pool.extend(nominals);
    }
    pool.truncate(quota);
    let scarcity = if pool.len() < quota {
        Some(ScarcityInfo {
            found: pool.len(),
            quota,
            hard: pool.is_empty(),
        })
    } else {
        None
    };
    (pool, scarcity)
}

struct SupplyCandidate {
    candidate: ScoredCandidate,
    max_cosine: f64,
    max_pnpmi: f64,
}

/// Scan the supply lists (noun lemmas, then MWE entries), skipping anything
/// whose surface occurs in the passage, and score every candidate against
/// the anchors.
fn scan_supply(
    bundle: &ResourceBundle,
    anchors: &AnchorPool,
    passage_surfaces: &HashSet<String>,
) -> Vec<SupplyCandidate> {
    let nouns = bundle
        .pos_resources
        .noun_supply()
        .iter()
        .map(|n| (n.as_str(), false));
    let mwes = bundle
        .mwe_lexicon
        .iter_sorted()
        .into_iter()
        .map(|m| (m, true));
    let mut scanned = Vec::new();
    let mut seen = HashSet::new();
    for (term, is_mwe) in nouns.chain(mwes) {
        if passage_surfaces.contains(term) || !seen.insert(term.to_owned()) {
            continue;
        }
        let Ok(vector) = embed::term_vector(term, bundle) else {
            continue;
        };
        let mut max_cosine = f64::NEG_INFINITY;
        let mut max_pnpmi: f64 = 0.0;
        let mut parts = Vec::with_capacity(anchors.anchors.len());
        for anchor in &anchors.anchors {
            let cosine = embed::cosine(&vector, &anchor.vector).unwrap_or(0.0);
            let association = pnpmi(term, &anchor.term, &bundle.cooccurrence_model);
            max_cosine = max_cosine.max(cosine);
            max_pnpmi = max_pnpmi.max(association);
            parts.push((cosine, association, anchor.count));
        }
        scanned.push(SupplyCandidate {
            candidate: ScoredCandidate {
                term: term.to_owned(),
                support: support_from_parts(parts),
                grade: grade_of_term(term, &bundle.grade_lexicon),
                is_mwe,
            },
            max_cosine,
            max_pnpmi,
        });
    }
    scanned
}

/// Topical out-of-document pool: supply candidates that clear the distractor
/// ceiling (related to at least one anchor beyond the NT thresholds), ranked
/// by support descending, truncated to `pool_size`.
#[allow(clippy::too_many_arguments)]
pub fn build_tod_pool(
    bundle: &ResourceBundle,
    anchors: &AnchorPool,
    passage_surfaces: &HashSet<String>,
    pool_size: usize,
    theta_cos: f64,
    theta_pmi: f64,
    minimum_needed: usize,
) -> Result<Vec<ScoredCandidate>, SelectError> {
    let mut eligible: Vec<ScoredCandidate> = scan_supply(bundle, anchors, passage_surfaces)
        .into_iter()
        .filter(|c| c.max_cosine > theta_cos || c.max_pnpmi > theta_pmi)
        .map(|c| c.candidate)
        .collect();
    if eligible.len() < minimum_needed {
        return Err(SelectError::InsufficientTopicalCandidates {
            found: eligible.len(),
            needed: minimum_needed,
        });
    }
    eligible.sort_by(|a, b| {
        b.support
            .partial_cmp(&a.support)
            .unwrap()
            .then_with(|| a.term.cmp(&b.term))
    });
    eligible.truncate(pool_size);
    Ok(eligible)
}

/// Non-topical pool: a seeded-random sample of the supply candidates that
/// stay below both thresholds against every anchor.
///
/// The sample is stratified over the guide's quartile bins (proportional
/// allocation, random within each bin) so that the oversampled pool can
/// actually satisfy the later grade matching; a uniform sample over the
/// whole eligible set starves narrow grade bins. With an empty guide the
/// sample is uniform.
#[allow(clippy::too_many_arguments)]
pub fn build_nt_pool(
    bundle: &ResourceBundle,
    anchors: &AnchorPool,
    passage_surfaces: &HashSet<String>,
    pool_size: usize,
    seed: u64,
    theta_cos: f64,
    theta_pmi: f64,
    minimum_needed: usize,
    guide: &[f64],
) -> Result<Vec<ScoredCandidate>, SelectError> {
    let mut eligible: Vec<ScoredCandidate> = scan_supply(bundle, anchors, passage_surfaces)
        .into_iter()
        .filter(|c| c.max_cosine <= theta_cos && c.max_pnpmi <= theta_pmi)
        .map(|c| c.candidate)
        .collect();
    if eligible.len() < minimum_needed {
        return Err(SelectError::InsufficientDistractors {
            found: eligible.len(),
            needed: minimum_needed,
        });
    }
    eligible.sort_by(|a, b| a.term.cmp(&b.term));
    if eligible.len() <= pool_size {
        return Ok(eligible);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if guide.is_empty() {
        let indices = rand::seq::index::sample(&mut rng, eligible.len(), pool_size);
        let mut selected: Vec<usize> = indices.iter().collect();
        selected.sort_unstable();
        return Ok(selected.into_iter().map(|i| eligible[i].clone()).collect());
    }

    let mut sorted_guide = guide.to_vec();
    sorted_guide.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let bounds = GuideBins::from_sorted(&sorted_guide);
    let guide_counts = {
        let mut counts = [0usize; 4];
        for grade in guide {
            counts[bounds.bin_of_clamped(*grade)] += 1;
        }
        counts
    };
    let quotas = largest_remainder(&guide_counts, pool_size);

    // Candidates per bin; unknown grades go last, spread over bins.
    let mut bins: [Vec<usize>; 4] = Default::default();
    let mut unknown: Vec<usize> = Vec::new();
    for (index, candidate) in eligible.iter().enumerate() {
        match candidate.grade {
            Some(grade) => bins[bounds.bin_of_clamped(grade)].push(index),
            None => unknown.push(index),
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(pool_size);
    let mut leftovers: [Vec<usize>; 4] = Default::default();
    for bin in 0..4 {
        let quota = quotas[bin].min(bins[bin].len());
        if quota == bins[bin].len() {
            chosen.extend(&bins[bin]);
        } else {
            let picks = rand::seq::index::sample(&mut rng, bins[bin].len(), quota);
            let mut picked: Vec<bool> = vec![false; bins[bin].len()];
            for p in picks.iter() {
                picked[p] = true;
            }
            for (slot, index) in bins[bin].iter().enumerate() {
                if picked[slot] {
                    chosen.push(*index);
                } else {
                    leftovers[bin].push(*index);
                }
            }
        }
    }
    // Shortfalls pull randomly from the nearest bins' leftovers, then from
    // unknown-grade candidates.
    let mut shortfall = pool_size - chosen.len();
    let mut distance = 1usize;
    while shortfall > 0 && distance <= 3 {
        for bin in 0..4usize {
            for neighbor in [bin.checked_sub(distance), Some(bin + distance)]
                .into_iter()
                .flatten()
                .filter(|n| *n < 4)
            {
                while shortfall > 0 && !leftovers[neighbor].is_empty() {
                    let pick = rng.gen_range(0..leftovers[neighbor].len());
                    chosen.push(leftovers[neighbor].swap_remove(pick));
                    shortfall -= 1;
                }
            }
        }
        distance += 1;
    }
    while shortfall > 0 && !unknown.is_empty() {
        let pick = rng.gen_range(0..unknown.len());
        chosen.push(unknown.swap_remove(pick));
        shortfall -= 1;
    }

    chosen.sort_unstable();
    Ok(chosen.into_iter().map(|i| eligible[i].clone()).collect())
}

/// Result of grade-distribution matching.
#[derive(Debug, Clone)]
pub struct MatchedPool {
    pub selected: Vec<ScoredCandidate>,
    /// Set when the guide was empty and the pool passed through untrimmed.
    pub guide_empty: bool,
}

/// Trim a ranked pool to `target_size` terms whose grade distribution
/// matches the guide's quartile profile.
///
/// The guide grades are split into quartile bins; `target_size` is allocated
/// proportionally per bin (largest remainder); each bin takes the
/// highest-ranked pool terms whose grade falls inside it; a shortfall spills
/// to the nearest bins, with out-of-range and unknown-grade terms used last.
/// The output preserves the pool's rank order.
pub fn match_grade_distribution(
    pool: &[ScoredCandidate],
    guide: &[f64],
    target_size: usize,
) -> Result<MatchedPool, SelectError> {
    if pool.len() < target_size {
        return Err(SelectError::PoolBelowTarget {
            found: pool.len(),
            target: target_size,
        });
    }
    if guide.is_empty() {
        return Ok(MatchedPool {
            selected: pool[..target_size].to_vec(),
            guide_empty: true,
        });
    }

    let mut sorted_guide = guide.to_vec();
    sorted_guide.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let bounds = GuideBins::from_sorted(&sorted_guide);
    let guide_counts = {
        let mut counts = [0usize; 4];
        for grade in guide {
            if let Slot::Bin(b) = bounds.slot_of(Some(*grade)) {
                counts[b] += 1;
            }
        }
        counts
    };
    let allocation = largest_remainder(&guide_counts, target_size);

    // Slot layout on a line: below-min, bins 0-3, above-max; unknown grades
    // sit at infinite distance and fill only as a last resort.
    let mut queues: [Vec<usize>; 7] = Default::default();
    for (index, candidate) in pool.iter().enumerate() {
        let queue = match bounds.slot_of(candidate.grade) {
            Slot::BelowMin => 0,
            Slot::Bin(b) => 1 + b,
            Slot::AboveMax => 5,
            Slot::Unknown => 6,
        };
        queues[queue].push(index);
    }

    let mut taken = vec![false; pool.len()];
    let take_from = |queue: usize, need: usize, taken: &mut Vec<bool>| -> usize {
        let mut got = 0;
        for &index in &queues[queue] {
            if got == need {
                break;
            }
            if !taken[index] {
                taken[index] = true;
                got += 1;
            }
        }
        got
    };
    for (bin, &quota) in allocation.iter().enumerate() {
        let mut need = quota;
        need -= take_from(1 + bin, need, &mut taken);
        let mut distance = 1usize;
        while need > 0 && distance <= 5 {
            for position in [(1 + bin).checked_sub(distance), Some(1 + bin + distance)]
                .into_iter()
                .flatten()
            {
                if position <= 5 && need > 0 {
                    need -= take_from(position, need, &mut taken);
                }
            }
            distance += 1;
        }
        if need > 0 {
            take_from(6, need, &mut taken);
        }
    }
    // Rounding or exhaustion may leave a shortfall; fill by rank.
    let mut selected_count = taken.iter().filter(|t| **t).count();
    for slot in taken.iter_mut() {
        if selected_count == target_size {
            break;
        }
        if !*slot {
            *slot = true;
            selected_count += 1;
        }
    }

    let selected = pool
        .iter()
        .enumerate()
        .filter(|(index, _)| taken[*index])
        .map(|(_, candidate)| candidate.clone())
        .collect();
    Ok(MatchedPool {
        selected,
        guide_empty: false,
    })
}

enum Slot {
    BelowMin,
    Bin(usize),
    AboveMax,
    Unknown,
}

/// Quartile boundaries of the guide distribution.
pub struct GuideBins {
    pub min: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub max: f64,
}

impl GuideBins {
    pub fn from_sorted(sorted: &[f64]) -> Self {
        Self {
            min: sorted[0],
            q1: quantile(sorted, 0.25),
            q2: quantile(sorted, 0.5),
            q3: quantile(sorted, 0.75),
            max: sorted[sorted.len() - 1],
        }
    }

    fn slot_of(&self, grade: Option<f64>) -> Slot {
        let Some(g) = grade else { return Slot::Unknown };
        if g < self.min {
            Slot::BelowMin
        } else if g <= self.q1 {
            Slot::Bin(0)
        } else if g <= self.q2 {
            Slot::Bin(1)
        } else if g <= self.q3 {
            Slot::Bin(2)
        } else if g <= self.max {
            Slot::Bin(3)
        } else {
            Slot::AboveMax
        }
    }

    /// Bin index for a known grade clamped into the guide range; used by
    /// reporting and tests.
    pub fn bin_of_clamped(&self, grade: f64) -> usize {
        match self.slot_of(Some(grade)) {
            Slot::BelowMin | Slot::Bin(0) => 0,
            Slot::Bin(b) => b,
            Slot::AboveMax => 3,
            Slot::Unknown => unreachable!(),
        }
    }
}

/// Linear-interpolation quantile of a sorted slice.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let position = p * (sorted.len() - 1) as f64;
    let low = position.floor() as usize;
    let high = position.ceil() as usize;
    let fraction = position - low as f64;
    sorted[low] + fraction * (sorted[high] - sorted[low])
}

/// Proportional allocation by the largest remainder method; ties favor the
/// lower bin index.
pub fn largest_remainder(counts: &[usize; 4], target: usize) -> [usize; 4] {
    let total: usize = counts.iter().sum();
    if total == 0 {
        let mut allocation = [target / 4; 4];
        let mut leftover = target - allocation.iter().sum::<usize>();
        let mut bin = 0;
        while leftover > 0 {
            allocation[bin] += 1;
            leftover -= 1;
            bin = (bin + 1) % 4;
        }
        return allocation;
    }
    let mut allocation = [0usize; 4];
    let mut remainders: Vec<(f64, usize)> = Vec::with_capacity(4);
    let mut assigned = 0usize;
    for bin in 0..4 {
        let exact = counts[bin] as f64 * target as f64 / total as f64;
        allocation[bin] = exact.floor() as usize;
        assigned += allocation[bin];
        remainders.push((exact - exact.floor(), bin));
    }
    remainders.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then_with(|| a.1.cmp(&b.1)));
    for (_, bin) in remainders.into_iter().take(target.saturating_sub(assigned)) {
        allocation[bin] += 1;
    }
    allocation
}
