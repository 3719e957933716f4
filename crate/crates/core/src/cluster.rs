//! Topical clustering: affinity propagation over term cosine similarities,
//! tf-weighted cluster centroids, and cluster ranking against the whole
//! document vector.

use std::collections::BTreeMap;

use ndarray::Array2;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embed::{self, DocumentVector, EmbedError, UnitVector};
use crate::resources::ResourceBundle;
use crate::textprep::{PosTag, TermInventory};

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("invalid affinity propagation parameters: {0}")]
    InvalidParams(String),
    #[error("similarity matrix is empty")]
    EmptyInput,
    #[error("no inventory term has a resolvable vector")]
    NoResolvableTerms,
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Self-similarity (preference) placed on the matrix diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Preference {
    /// Median of the off-diagonal similarities (0 when there are none).
    Median,
    Value(f64),
}

/// Affinity propagation parameters.
#[derive(Debug, Clone)]
pub struct ApParams {
    /// Damping factor in [0.5, 1).
    pub damping: f64,
    pub max_iterations: usize,
    /// Consecutive iterations with an unchanged exemplar set required to
    /// declare convergence.
    pub convergence_window: usize,
    pub preference: Preference,
}

impl Default for ApParams {
    fn default() -> Self {
        Self {
            damping: 0.9,
            max_iterations: 500,
            convergence_window: 10,
            preference: Preference::Median,
        }
    }
}

impl ApParams {
    pub fn validate(&self) -> Result<(), ClusterError> {
        if !(0.5..1.0).contains(&self.damping) {
            return Err(ClusterError::InvalidParams(format!(
                "damping {} outside [0.5, 1)",
                self.damping
            )));
        }
        if self.convergence_window < 1 {
            return Err(ClusterError::InvalidParams(
                "convergence window must be at least 1".into(),
            ));
        }
        if self.max_iterations < self.convergence_window {
            return Err(ClusterError::InvalidParams(format!(
                "max iterations {} below convergence window {}",
                self.max_iterations, self.convergence_window
            )));
        }
        Ok(())
    }
}

/// Cluster assignments produced by [`affinity_propagation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApOutcome {
    /// Index of the assigned exemplar, per point.
    pub exemplar_of: Vec<usize>,
    /// Distinct exemplar indices, ascending.
    pub exemplars: Vec<usize>,
    pub converged: bool,
    pub iterations: usize,
}

/// Pairwise cosine similarity matrix with the preference on the diagonal.
pub fn similarity_matrix(
    vectors: &[UnitVector],
    preference: Preference,
) -> Result<Array2<f64>, ClusterError> {
    let n = vectors.len();
    if n == 0 {
        return Err(ClusterError::EmptyInput);
    }
    let mut matrix = Array2::zeros((n, n));
    let mut off_diagonal = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let similarity = embed::cosine(&vectors[i], &vectors[j])?;
            matrix[(i, j)] = similarity;
            matrix[(j, i)] = similarity;
            off_diagonal.push(similarity);
        }
    }
    let diagonal = match preference {
        Preference::Value(value) => value,
        Preference::Median => median(&mut off_diagonal),
    };
    for i in 0..n {
        matrix[(i, i)] = diagonal;
    }
    Ok(matrix)
}

/// Median of a slice; the empty median is defined as 0.
fn median(values: &mut [f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Standard responsibility/availability message passing with damping.
///
/// Deterministic for a given matrix, parameters, and seed: the seed only
/// drives a symmetric off-diagonal noise of magnitude 1e-12 that breaks ties
/// on degenerate inputs. A matrix carrying no information at all (all
/// off-diagonal entries equal and all diagonal entries equal) is resolved in
/// closed form: points merge into one cluster when the shared similarity is
/// at the cosine identity level, and stay singletons otherwise.
pub fn affinity_propagation(
    similarities: &Array2<f64>,
    params: &ApParams,
    seed: u64,
) -> Result<ApOutcome, ClusterError> {
    params.validate()?;
    let n = similarities.nrows();
    if n == 0 || similarities.ncols() != n {
        return Err(ClusterError::EmptyInput);
    }
    if n == 1 {
        return Ok(ApOutcome {
            exemplar_of: vec![0],
            exemplars: vec![0],
            converged: true,
            iterations: 0,
        });
    }
    if let Some(outcome) = resolve_degenerate(similarities, n) {
        return Ok(outcome);
    }

    let mut s = similarities.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        for j in (i + 1)..n {
            let eps = rng.gen_range(-1e-12..1e-12);
            s[(i, j)] += eps;
            s[(j, i)] += eps;
        }
    }

    let damping = params.damping;
    let mut responsibilities = Array2::<f64>::zeros((n, n));
    let mut availabilities = Array2::<f64>::zeros((n, n));
    let mut last_exemplars: Option<Vec<usize>> = None;
    let mut stable = 0usize;
    let mut converged = false;
    let mut iterations = 0usize;

    for iteration in 1..=params.max_iterations {
        iterations = iteration;
        for i in 0..n {
            let mut max1 = f64::NEG_INFINITY;
            let mut max1_k = 0usize;
            let mut max2 = f64::NEG_INFINITY;
            for k in 0..n {
                let value = availabilities[(i, k)] + s[(i, k)];
                if value > max1 {
                    max2 = max1;
                    max1 = value;
                    max1_k = k;
                } else if value > max2 {
                    max2 = value;
                }
            }
            for k in 0..n {
                let bound = if k == max1_k { max2 } else { max1 };
                let updated = s[(i, k)] - bound;
                responsibilities[(i, k)] =
                    damping * responsibilities[(i, k)] + (1.0 - damping) * updated;
            }
        }
        for k in 0..n {
            let mut positive_sum = 0.0;
            for i in 0..n {
                if i != k {
                    positive_sum += responsibilities[(i, k)].max(0.0);
                }
            }
            for i in 0..n {
                let updated = if i == k {
                    positive_sum
                } else {
                    (responsibilities[(k, k)] + positive_sum - responsibilities[(i, k)].max(0.0))
                        .min(0.0)
                };
                availabilities[(i, k)] =
                    damping * availabilities[(i, k)] + (1.0 - damping) * updated;
            }
        }
        let exemplars: Vec<usize> = (0..n)
            .filter(|&k| availabilities[(k, k)] + responsibilities[(k, k)] > 0.0)
            .collect();
        if !exemplars.is_empty() && last_exemplars.as_deref() == Some(exemplars.as_slice()) {
            stable += 1;
            if stable >= params.convergence_window {
                last_exemplars = Some(exemplars);
                converged = true;
                break;
            }
        } else {
            stable = 0;
        }
        last_exemplars = Some(exemplars);
    }

    let mut exemplars = last_exemplars.unwrap_or_default();
    if exemplars.is_empty() {
        // No point accumulated positive self-evidence; fall back to the
        // strongest candidate so callers always get an assignment.
        let mut best = 0usize;
        for k in 1..n {
            let current = availabilities[(k, k)] + responsibilities[(k, k)];
            let incumbent = availabilities[(best, best)] + responsibilities[(best, best)];
            if current > incumbent {
                best = k;
            }
        }
        exemplars = vec![best];
        converged = false;
    }

    let exemplar_of = assign_to_exemplars(&s, &exemplars);
    Ok(ApOutcome {
        exemplar_of,
        exemplars,
        converged,
        iterations,
    })
}

/// Closed-form outcome for matrices with no distinguishing structure.
fn resolve_degenerate(similarities: &Array2<f64>, n: usize) -> Option<ApOutcome> {
    let off = similarities[(0, 1)];
    let diag = similarities[(0, 0)];
    for i in 0..n {
        if similarities[(i, i)] != diag {
            return None;
        }
        for j in 0..n {
            if i != j && similarities[(i, j)] != off {
                return None;
            }
        }
    }
    if off > 1.0 - 1e-9 {
        Some(ApOutcome {
            exemplar_of: vec![0; n],
            exemplars: vec![0],
            converged: true,
            iterations: 0,
        })
    } else {
        Some(ApOutcome {
            exemplar_of: (0..n).collect(),
            exemplars: (0..n).collect(),
            converged: true,
            iterations: 0,
        })
    }
}

fn assign_to_exemplars(s: &Array2<f64>, exemplars: &[usize]) -> Vec<usize> {
    (0..s.nrows())
        .map(|i| {
            if exemplars.contains(&i) {
                return i;
            }
            let mut best = exemplars[0];
            let mut best_similarity = s[(i, exemplars[0])];
            for &k in &exemplars[1..] {
                if s[(i, k)] > best_similarity {
                    best_similarity = s[(i, k)];
                    best = k;
                }
            }
            best
        })
        .collect()
}

/// One member of a topical cluster.
#[derive(Debug, Clone)]
pub struct ClusterMember {
    pub term: String,
    pub count: u64,
    pub pos: PosTag,
    pub is_mwe: bool,
    pub vector: UnitVector,
}

/// A topical cluster with its tf-weighted centroid and similarity to the
/// whole document.
#[derive(Debug, Clone)]
pub struct Cluster {
    pub members: Vec<ClusterMember>,
    pub exemplar: String,
    pub centroid: UnitVector,
    pub doc_similarity: f64,
}

impl Cluster {
    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(|m| m.term.as_str())
    }
}

/// Clusters of the passage's terms, sorted by document similarity
/// descending (ties: larger cluster first, then exemplar lexicographic).
#[derive(Debug, Clone)]
pub struct TopicModel {
    pub clusters: Vec<Cluster>,
    pub document_vector: DocumentVector,
    /// Inventory terms without a resolvable vector, excluded from clustering.
    pub excluded_terms: Vec<String>,
    pub converged: bool,
    pub iterations: usize,
}

/// Cluster the inventory's terms and rank the clusters against the document.
pub fn build_topic_model(
    inventory: &TermInventory,
    document: &DocumentVector,
    bundle: &ResourceBundle,
    params: &ApParams,
    seed: u64,
) -> Result<TopicModel, ClusterError> {
    let mut members = Vec::new();
    let mut excluded_terms = Vec::new();
    for term in &inventory.terms {
        match embed::term_vector(&term.surface, bundle) {
            Ok(vector) => members.push(ClusterMember {
                term: term.surface.clone(),
                count: term.count,
                pos: term.pos,
                is_mwe: term.is_mwe,
                vector,
            }),
            Err(_) => excluded_terms.push(term.surface.clone()),
        }
    }
    if members.is_empty() {
        return Err(ClusterError::NoResolvableTerms);
    }

    let vectors: Vec<UnitVector> = members.iter().map(|m| m.vector.clone()).collect();
    let matrix = similarity_matrix(&vectors, params.preference)?;
    let outcome = affinity_propagation(&matrix, params, seed)?;

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (index, exemplar) in outcome.exemplar_of.iter().enumerate() {
        groups.entry(*exemplar).or_default().push(index);
    }

    let mut clusters = Vec::with_capacity(groups.len());
    for (exemplar_index, member_indices) in groups {
        let cluster_members: Vec<ClusterMember> =
            member_indices.iter().map(|&i| members[i].clone()).collect();
        let centroid = embed::centroid(cluster_members.iter().map(|m| (&m.vector, m.count)))?;
        let doc_similarity = embed::cosine(&centroid, &document.vector)?;
        clusters.push(Cluster {
            exemplar: members[exemplar_index].term.clone(),
            members: cluster_members,
            centroid,
            doc_similarity,
        });
    }
    clusters.sort_by(|a, b| {
        b.doc_similarity
            .partial_cmp(&a.doc_similarity)
            .unwrap()
            .then_with(|| b.members.len().cmp(&a.members.len()))
            .then_with(|| a.exemplar.cmp(&b.exemplar))
    });

    Ok(TopicModel {
        clusters,
        document_vector: document.clone(),
        excluded_terms,
        converged: outcome.converged,
        iterations: outcome.iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::arr2;

    fn unit(components: &[f64]) -> UnitVector {
        UnitVector::new(components.to_vec()).unwrap()
    }

    #[test]
    fn single_term_matrix_uses_zero_median() {
        let matrix = similarity_matrix(&[unit(&[1.0, 0.0])], Preference::Median).unwrap();
        assert_eq!(matrix[(0, 0)], 0.0);
    }

    #[test]
    fn orthogonal_pair_matrix() {
        let matrix =
            similarity_matrix(&[unit(&[1.0, 0.0]), unit(&[0.0, 1.0])], Preference::Median).unwrap();
        assert_eq!(matrix[(0, 1)], 0.0);
        assert_eq!(matrix[(1, 0)], 0.0);
        assert_eq!(matrix[(0, 0)], 0.0);
    }

    #[test]
    fn median_of_three_pairwise_cosines() {
        // Unit vectors with pairwise cosines 0.2, 0.4, 0.9.
        let a = unit(&[1.0, 0.0, 0.0]);
        let b = unit(&[0.2, (1.0f64 - 0.04).sqrt(), 0.0]);
        let c2 = (0.9 - 0.2 * 0.4) / (1.0f64 - 0.04).sqrt();
        let c = unit(&[0.4, c2, (1.0 - 0.16 - c2 * c2).sqrt()]);
        let matrix = similarity_matrix(&[a, b, c], Preference::Median).unwrap();
        assert!((matrix[(0, 1)] - 0.2).abs() < 1e-9);
        assert!((matrix[(0, 2)] - 0.4).abs() < 1e-9);
        assert!((matrix[(1, 2)] - 0.9).abs() < 1e-9);
        assert!((matrix[(0, 0)] - 0.4).abs() < 1e-9);
    }

    #[test]
    fn explicit_preference_fills_diagonal() {
        let matrix = similarity_matrix(
            &[unit(&[1.0, 0.0]), unit(&[0.0, 1.0])],
            Preference::Value(-2.5),
        )
        .unwrap();
        assert_eq!(matrix[(0, 0)], -2.5);
        assert_eq!(matrix[(1, 1)], -2.5);
    }

    #[test]
    fn single_point_is_its_own_exemplar() {
        let s = arr2(&[[0.0]]);
        let outcome = affinity_propagation(&s, &ApParams::default(), 0).unwrap();
        assert_eq!(outcome.exemplar_of, vec![0]);
        assert_eq!(outcome.exemplars, vec![0]);
        assert!(outcome.converged);
    }

    #[test]
    fn identical_points_collapse_to_one_cluster() {
        for n in [2usize, 3, 6, 9] {
            let vectors: Vec<UnitVector> = (0..n).map(|_| unit(&[0.6, 0.8])).collect();
            let s = similarity_matrix(&vectors, Preference::Median).unwrap();
            let outcome = affinity_propagation(&s, &ApParams::default(), 7).unwrap();
            assert_eq!(outcome.exemplars.len(), 1, "n = {n}");
            let exemplar = outcome.exemplars[0];
            assert!(outcome.exemplar_of.iter().all(|&e| e == exemplar));
        }
    }

    #[test]
    fn two_identical_groups_split_into_two_clusters() {
        let mut vectors = Vec::new();
        for _ in 0..3 {
            vectors.push(unit(&[1.0, 0.0]));
        }
        for _ in 0..3 {
            vectors.push(unit(&[0.0, 1.0]));
        }
        let s = similarity_matrix(&vectors, Preference::Median).unwrap();
        let outcome = affinity_propagation(&s, &ApParams::default(), 3).unwrap();
        assert_eq!(outcome.exemplars.len(), 2, "{outcome:?}");
        let first_group: Vec<usize> = outcome.exemplar_of[..3].to_vec();
        let second_group: Vec<usize> = outcome.exemplar_of[3..].to_vec();
        assert!(first_group.iter().all(|&e| e == first_group[0]));
        assert!(second_group.iter().all(|&e| e == second_group[0]));
        assert_ne!(first_group[0], second_group[0]);
    }

    #[test]
    fn assignments_are_deterministic_for_a_seed() {
        let vectors = [
            unit(&[1.0, 0.1, 0.0]),
            unit(&[0.9, 0.2, 0.1]),
            unit(&[0.0, 1.0, 0.1]),
            unit(&[0.1, 0.9, 0.0]),
            unit(&[0.0, 0.1, 1.0]),
        ];
        let s = similarity_matrix(&vectors, Preference::Median).unwrap();
        let first = affinity_propagation(&s, &ApParams::default(), 42).unwrap();
        let second = affinity_propagation(&s, &ApParams::default(), 42).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn invalid_damping_is_rejected() {
        let params = ApParams {
            damping: 0.3,
            ..ApParams::default()
        };
        let s = arr2(&[[0.0, 0.5], [0.5, 0.0]]);
        assert!(matches!(
            affinity_propagation(&s, &params, 0),
            Err(ClusterError::InvalidParams(_))
        ));
    }

    mod topic_model {
        use super::*;
        use crate::embed::DocumentVector;
        use crate::resources::test_fixtures::write_desk_fixture;
        use crate::resources::{load_bundle, ResourceBundle};
        use crate::textprep::{TermEntry, TermInventory};

        fn desk_bundle() -> (tempfile::TempDir, ResourceBundle) {
            let dir = tempfile::tempdir().unwrap();
            let manifest = write_desk_fixture(dir.path());
            let bundle = load_bundle(&manifest).unwrap();
            (dir, bundle)
        }

        fn inventory_of(entries: &[(&str, u64)]) -> TermInventory {
            TermInventory {
                terms: entries
                    .iter()
                    .map(|(surface, count)| TermEntry {
                        surface: (*surface).to_owned(),
                        pos: PosTag::Noun,
                        count: *count,
                        is_mwe: false,
                    })
                    .collect(),
                passage_word_count: entries.iter().map(|(_, c)| *c as usize).sum(),
                passage_grade_estimate: 5.0,
            }
        }

        fn doc_of(components: &[f64]) -> DocumentVector {
            DocumentVector {
                vector: unit(components),
                chunk_count: 1,
            }
        }

        #[test]
        fn orthogonal_terms_rank_the_matching_cluster_first() {
            let (_dir, bundle) = desk_bundle();
            // thunder = (1,0), rain = (0,1); document equals thunder's vector.
            let inventory = inventory_of(&[("thunder", 1), ("rain", 1)]);
            let model = build_topic_model(
                &inventory,
                &doc_of(&[1.0, 0.0]),
                &bundle,
                &ApParams::default(),
                0,
            )
            .unwrap();
            assert_eq!(model.clusters.len(), 2);
            let top = &model.clusters[0];
            assert_eq!(top.members.len(), 1);
            assert_eq!(top.members[0].term, "thunder");
            assert!((top.doc_similarity - 1.0).abs() < 1e-9);
            assert!(model.clusters[1].doc_similarity < top.doc_similarity);
        }

        #[test]
        fn identical_vectors_form_a_single_cluster() {
            let dir = tempfile::tempdir().unwrap();
            let manifest = write_desk_fixture(dir.path());
            std::fs::write(
                dir.path().join("embeddings.tsv"),
                "dim=2\nblizzard\t1 0\ngale\t1 0\nsquall\t1 0\n",
            )
            .unwrap();
            std::fs::write(dir.path().join("mwes.txt"), "").unwrap();
            std::fs::write(dir.path().join("nouns.txt"), "").unwrap();
            let bundle = load_bundle(&manifest).unwrap();
            let doc = doc_of(&[0.6, 0.8]);
            let inventory = inventory_of(&[("blizzard", 2), ("gale", 1), ("squall", 4)]);
            let model =
                build_topic_model(&inventory, &doc, &bundle, &ApParams::default(), 0).unwrap();
            assert_eq!(model.clusters.len(), 1);
            assert_eq!(model.clusters[0].members.len(), 3);
            let expected = embed::cosine(&unit(&[1.0, 0.0]), &doc.vector).unwrap();
            assert!((model.clusters[0].doc_similarity - expected).abs() < 1e-9);
        }

        #[test]
        fn every_resolvable_term_lands_in_exactly_one_cluster() {
            let (_dir, bundle) = desk_bundle();
            let inventory = inventory_of(&[
                ("thunder", 3),
                ("storm", 2),
                ("rain", 4),
                ("cloud", 1),
                ("sky", 1),
                ("zzqx", 1),
            ]);
            let model = build_topic_model(
                &inventory,
                &doc_of(&[0.8, 0.6]),
                &bundle,
                &ApParams::default(),
                11,
            )
            .unwrap();
            assert_eq!(model.excluded_terms, vec!["zzqx".to_owned()]);
            let mut clustered: Vec<&str> = model.clusters.iter().flat_map(|c| c.terms()).collect();
            clustered.sort_unstable();
            assert_eq!(clustered, ["cloud", "rain", "sky", "storm", "thunder"]);
        }

        #[test]
        fn scaling_counts_changes_neither_membership_nor_centroids() {
            let (_dir, bundle) = desk_bundle();
            let base = inventory_of(&[("thunder", 3), ("storm", 2), ("rain", 4), ("cloud", 1)]);
            let scaled = inventory_of(&[("thunder", 9), ("storm", 6), ("rain", 12), ("cloud", 3)]);
            let doc = doc_of(&[0.8, 0.6]);
            let params = ApParams::default();
            let first = build_topic_model(&base, &doc, &bundle, &params, 5).unwrap();
            let second = build_topic_model(&scaled, &doc, &bundle, &params, 5).unwrap();
            assert_eq!(first.clusters.len(), second.clusters.len());
            for (a, b) in first.clusters.iter().zip(&second.clusters) {
                let terms_a: Vec<&str> = a.terms().collect();
                let terms_b: Vec<&str> = b.terms().collect();
                assert_eq!(terms_a, terms_b);
                for (x, y) in a.centroid.components().iter().zip(b.centroid.components()) {
                    assert!((x - y).abs() < 1e-9);
                }
            }
        }

        #[test]
        fn rebuilding_is_bit_stable() {
            let (_dir, bundle) = desk_bundle();
            let inventory = inventory_of(&[
                ("thunder", 3),
                ("storm", 2),
                ("rain", 4),
                ("cloud", 1),
                ("sky", 2),
            ]);
            let doc = doc_of(&[0.8, 0.6]);
            let params = ApParams::default();
            let first = build_topic_model(&inventory, &doc, &bundle, &params, 9).unwrap();
            let second = build_topic_model(&inventory, &doc, &bundle, &params, 9).unwrap();
            let summarize = |model: &TopicModel| {
                model
                    .clusters
                    .iter()
                    .map(|c| (c.exemplar.clone(), c.doc_similarity, c.members.len()))
                    .collect::<Vec<_>>()
            };
            assert_eq!(summarize(&first), summarize(&second));
        }
    }
}
