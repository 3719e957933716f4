//! Vector math over the static embedding space: term vectors, the whole
//! document vector, tf-weighted centroids, and cosine similarity.
//!
//! Everything here is pure and operates on L2-normalized vectors, so cosine
//! similarity reduces to a dot product.

use thiserror::Error;

use crate::resources::{l2_normalize, ResourceBundle};
use crate::textprep::TermUnit;

/// Default chunk size for whole-document vectorization, in content terms.
pub const DEFAULT_CHUNK_SIZE: usize = 400;

#[derive(Debug, Error, PartialEq)]
pub enum EmbedError {
    #[error("term '{0}' is unresolvable: no embedding entry and no covered constituents")]
    Unresolvable(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("centroid of empty member list")]
    EmptyMembers,
    #[error("zero-norm vector sum for {0}; degenerate input")]
    ZeroNorm(String),
    #[error("no content term with a resolvable vector")]
    NoResolvableTerms,
    #[error("chunk size must be at least 1")]
    InvalidChunkSize,
}

/// An L2-normalized embedding vector.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    components: Vec<f64>,
}

impl UnitVector {
    /// Normalize arbitrary components into a unit vector.
    pub fn new(components: Vec<f64>) -> Result<Self, EmbedError> {
        let normalized =
            l2_normalize(&components).ok_or_else(|| EmbedError::ZeroNorm("vector".into()))?;
        Ok(Self {
            components: normalized,
        })
    }

    /// Wrap components already normalized at resource load.
    pub(crate) fn from_normalized(components: Vec<f64>) -> Self {
        debug_assert!({
            let norm: f64 = components.iter().map(|c| c * c).sum::<f64>().sqrt();
            (norm - 1.0).abs() < 1e-6
        });
        Self { components }
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }
}

/// The whole-passage vector: L2-normalized mean of chunk vectors.
#[derive(Debug, Clone)]
pub struct DocumentVector {
    pub vector: UnitVector,
    pub chunk_count: usize,
}

/// Cosine similarity of two unit vectors (their dot product).
pub fn cosine(u: &UnitVector, v: &UnitVector) -> Result<f64, EmbedError> {
    if u.dimension() != v.dimension() {
        return Err(EmbedError::DimensionMismatch {
            left: u.dimension(),
            right: v.dimension(),
        });
    }
    Ok(u.components
        .iter()
        .zip(&v.components)
        .map(|(a, b)| a * b)
        .sum())
}

/// Resolve a term's vector: direct dictionary lookup, with a fallback for
/// MWEs to the normalized mean of their covered constituent vectors.
pub fn term_vector(term: &str, bundle: &ResourceBundle) -> Result<UnitVector, EmbedError> {
    if let Some(components) = bundle.embedding_lexicon.get(term) {
        return Ok(UnitVector::from_normalized(components.to_vec()));
    }
    if term.contains(char::is_whitespace) {
        let covered: Vec<&[f64]> = term
            .split_whitespace()
            .filter_map(|word| bundle.embedding_lexicon.get(word))
            .collect();
        if covered.is_empty() {
            return Err(EmbedError::Unresolvable(term.to_owned()));
        }
        let mean = component_mean(&covered);
        return UnitVector::new(mean).map_err(|_| EmbedError::ZeroNorm(format!("MWE '{term}'")));
    }
    Err(EmbedError::Unresolvable(term.to_owned()))
}

/// Vectorize the whole passage: split the content terms, in order, into
/// windows of at most `chunk_size`; each chunk vector is the unweighted mean
/// of its term vectors; the document vector is the L2-normalized mean of the
/// chunk vectors. Content terms without a resolvable vector are skipped.
pub fn document_vector(
    units: &[TermUnit],
    bundle: &ResourceBundle,
    chunk_size: usize,
) -> Result<DocumentVector, EmbedError> {
    if chunk_size == 0 {
        return Err(EmbedError::InvalidChunkSize);
    }
    let vectors: Vec<UnitVector> = units
        .iter()
        .filter(|unit| unit.pos.is_content())
        .filter_map(|unit| term_vector(&unit.surface, bundle).ok())
        .collect();
    if vectors.is_empty() {
        return Err(EmbedError::NoResolvableTerms);
    }
    let chunk_means: Vec<Vec<f64>> = vectors
        .chunks(chunk_size)
        .map(|chunk| {
            let refs: Vec<&[f64]> = chunk.iter().map(|v| v.components()).collect();
            component_mean(&refs)
        })
        .collect();
    let refs: Vec<&[f64]> = chunk_means.iter().map(Vec::as_slice).collect();
    let vector = UnitVector::new(component_mean(&refs))
        .map_err(|_| EmbedError::ZeroNorm("document".into()))?;
    Ok(DocumentVector {
        vector,
        chunk_count: chunk_means.len(),
    })
}

/// Tf-weighted, L2-normalized centroid of cluster members.
pub fn centroid<'a, I>(members: I) -> Result<UnitVector, EmbedError>
where
    I: IntoIterator<Item = (&'a UnitVector, u64)>,
{
    let mut sum: Option<Vec<f64>> = None;
    let mut total_weight = 0u64;
    for (vector, count) in members {
        let weight = count as f64;
        match &mut sum {
            None => {
                sum = Some(vector.components().iter().map(|c| c * weight).collect());
            }
            Some(acc) => {
                if acc.len() != vector.dimension() {
                    return Err(EmbedError::DimensionMismatch {
                        left: acc.len(),
                        right: vector.dimension(),
                    });
                }
                for (slot, component) in acc.iter_mut().zip(vector.components()) {
                    *slot += component * weight;
                }
            }
        }
        total_weight += count;
    }
    let sum = sum.ok_or(EmbedError::EmptyMembers)?;
    if total_weight == 0 {
        return Err(EmbedError::EmptyMembers);
    }
    let mean: Vec<f64> = sum.iter().map(|c| c / total_weight as f64).collect();
    UnitVector::new(mean).map_err(|_| EmbedError::ZeroNorm("cluster centroid".into()))
}

fn component_mean(vectors: &[&[f64]]) -> Vec<f64> {
    let dimension = vectors[0].len();
    let mut mean = vec![0.0; dimension];
    for vector in vectors {
        for (slot, component) in mean.iter_mut().zip(vector.iter()) {
            *slot += component;
        }
    }
    let n = vectors.len() as f64;
    for slot in &mut mean {
        *slot /= n;
    }
    mean
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resources::load_bundle;
    use crate::resources::test_fixtures::write_desk_fixture;
    use crate::textprep::PosTag;
    use proptest::prelude::*;

    fn unit(components: &[f64]) -> UnitVector {
        UnitVector::new(components.to_vec()).unwrap()
    }

    fn content_unit(surface: &str) -> TermUnit {
        TermUnit {
            surface: surface.to_owned(),
            pos: PosTag::Noun,
            is_mwe: surface.contains(' '),
            token_span: (0, 1),
        }
    }

    fn desk_bundle() -> (tempfile::TempDir, crate::resources::ResourceBundle) {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write_desk_fixture(dir.path());
        let bundle = load_bundle(&manifest).unwrap();
        (dir, bundle)
    }

    #[test]
    fn lookup_returns_stored_vector() {
        let (_dir, bundle) = desk_bundle();
        let v = term_vector("sky", &bundle).unwrap();
        assert!((v.components()[0] - 0.6).abs() < 1e-12);
        assert!((v.components()[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn mwe_fallback_averages_constituents() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write_desk_fixture(dir.path());
        std::fs::write(dir.path().join("embeddings.tsv"), "dim=2\na\t1 0\nb\t0 1\n").unwrap();
        std::fs::write(dir.path().join("mwes.txt"), "a b\n").unwrap();
        std::fs::write(dir.path().join("nouns.txt"), "").unwrap();
        let bundle = load_bundle(&manifest).unwrap();
        let v = term_vector("a b", &bundle).unwrap();
        let expected = 1.0 / 2.0_f64.sqrt();
        assert!((v.components()[0] - expected).abs() < 1e-9);
        assert!((v.components()[1] - expected).abs() < 1e-9);
    }

    #[test]
    fn unknown_word_is_unresolvable() {
        let (_dir, bundle) = desk_bundle();
        assert_eq!(
            term_vector("zzqx", &bundle).unwrap_err(),
            EmbedError::Unresolvable("zzqx".into())
        );
    }

    #[test]
    fn single_chunk_document_is_the_normalized_chunk_mean() {
        let (_dir, bundle) = desk_bundle();
        let units = vec![content_unit("thunder"), content_unit("rain")];
        let doc = document_vector(&units, &bundle, DEFAULT_CHUNK_SIZE).unwrap();
        assert_eq!(doc.chunk_count, 1);
        // thunder=(1,0), rain=(0,1): mean (0.5,0.5) normalizes to 45 degrees.
        let expected = 1.0 / 2.0_f64.sqrt();
        assert!((doc.vector.components()[0] - expected).abs() < 1e-9);
        assert!((doc.vector.components()[1] - expected).abs() < 1e-9);
    }

    #[test]
    fn two_chunks_average_before_normalization() {
        let (_dir, bundle) = desk_bundle();
        // chunk_size 1: chunks are [(1,0)] and [(0,1)].
        let units = vec![content_unit("thunder"), content_unit("rain")];
        let doc = document_vector(&units, &bundle, 1).unwrap();
        assert_eq!(doc.chunk_count, 2);
        let expected = 1.0 / 2.0_f64.sqrt();
        assert!((doc.vector.components()[0] - expected).abs() < 1e-9);
        assert!((doc.vector.components()[1] - expected).abs() < 1e-9);
    }

    #[test]
    fn chunk_count_is_ceiling_of_terms_over_chunk_size() {
        let (_dir, bundle) = desk_bundle();
        let units: Vec<TermUnit> = std::iter::repeat_with(|| content_unit("thunder"))
            .take(5)
            .collect();
        let doc = document_vector(&units, &bundle, 2).unwrap();
        assert_eq!(doc.chunk_count, 3);
    }

    #[test]
    fn document_vector_ignores_order_but_not_substance() {
        let (_dir, bundle) = desk_bundle();
        let units = vec![
            content_unit("thunder"),
            content_unit("storm"),
            content_unit("cloud"),
        ];
        let mut reordered = units.clone();
        reordered.swap(0, 2);
        let original = document_vector(&units, &bundle, DEFAULT_CHUNK_SIZE).unwrap();
        let permuted = document_vector(&reordered, &bundle, DEFAULT_CHUNK_SIZE).unwrap();
        for (a, b) in original
            .vector
            .components()
            .iter()
            .zip(permuted.vector.components())
        {
            assert!((a - b).abs() < 1e-12);
        }
        // Swapping a topical term for an orthogonal one moves the vector.
        let swapped = vec![
            content_unit("rain"),
            content_unit("storm"),
            content_unit("cloud"),
        ];
        let moved = document_vector(&swapped, &bundle, DEFAULT_CHUNK_SIZE).unwrap();
        let similarity = cosine(&original.vector, &moved.vector).unwrap();
        assert!(similarity < 1.0 - 1e-6, "vector did not move: {similarity}");
    }

    #[test]
    fn unresolvable_only_content_is_an_error() {
        let (_dir, bundle) = desk_bundle();
        let units = vec![content_unit("zzqx"), content_unit("qqzz")];
        assert_eq!(
            document_vector(&units, &bundle, 400).unwrap_err(),
            EmbedError::NoResolvableTerms
        );
    }

    #[test]
    fn centroid_of_single_member_is_that_vector() {
        let v = unit(&[0.6, 0.8]);
        let c = centroid([(&v, 3u64)]).unwrap();
        assert!((c.components()[0] - 0.6).abs() < 1e-12);
        assert!((c.components()[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn centroid_weights_by_counts() {
        // ((1,0), 1) and ((0,1), 3): weighted mean (0.25, 0.75),
        // normalized to (0.3162, 0.9487).
        let a = unit(&[1.0, 0.0]);
        let b = unit(&[0.0, 1.0]);
        let c = centroid([(&a, 1u64), (&b, 3u64)]).unwrap();
        assert!((c.components()[0] - 0.3162).abs() < 1e-4);
        assert!((c.components()[1] - 0.9487).abs() < 1e-4);
    }

    #[test]
    fn opposite_vectors_with_equal_counts_are_degenerate() {
        let a = unit(&[1.0, 0.0]);
        let b = unit(&[-1.0, 0.0]);
        let err = centroid([(&a, 2u64), (&b, 2u64)]).unwrap_err();
        assert!(matches!(err, EmbedError::ZeroNorm(_)));
    }

    #[test]
    fn centroid_of_empty_members_is_an_error() {
        let err = centroid(std::iter::empty::<(&UnitVector, u64)>()).unwrap_err();
        assert_eq!(err, EmbedError::EmptyMembers);
    }

    #[test]
    fn cosine_fixtures() {
        let e1 = unit(&[1.0, 0.0]);
        let e2 = unit(&[0.0, 1.0]);
        let a = unit(&[0.6, 0.8]);
        let b = unit(&[0.8, 0.6]);
        assert!((cosine(&e1, &e1).unwrap() - 1.0).abs() < 1e-12);
        assert!(cosine(&e1, &e2).unwrap().abs() < 1e-12);
        assert!((cosine(&a, &b).unwrap() - 0.96).abs() < 1e-12);
    }

    #[test]
    fn cosine_rejects_dimension_mismatch() {
        let a = unit(&[1.0, 0.0]);
        let b = unit(&[1.0, 0.0, 0.0]);
        assert!(matches!(
            cosine(&a, &b).unwrap_err(),
            EmbedError::DimensionMismatch { .. }
        ));
    }

    fn arb_unit_vector(dim: usize) -> impl Strategy<Value = UnitVector> {
        proptest::collection::vec(-10.0f64..10.0, dim)
            .prop_filter("nonzero", |v| v.iter().map(|c| c * c).sum::<f64>() > 1e-6)
            .prop_map(|v| UnitVector::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn cosine_is_symmetric_and_reflexive(u in arb_unit_vector(8), v in arb_unit_vector(8)) {
            let uv = cosine(&u, &v).unwrap();
            let vu = cosine(&v, &u).unwrap();
            prop_assert!((uv - vu).abs() < 1e-12);
            prop_assert!(uv >= -1.0 - 1e-9 && uv <= 1.0 + 1e-9);
            prop_assert!((cosine(&u, &u).unwrap() - 1.0).abs() < 1e-9);
        }

        #[test]
        fn centroid_is_permutation_invariant(
            vectors in proptest::collection::vec(arb_unit_vector(6), 2..6),
            counts in proptest::collection::vec(1u64..20, 6),
        ) {
            let members: Vec<(&UnitVector, u64)> = vectors
                .iter()
                .zip(counts.iter().copied())
                .collect();
            if let Ok(forward) = centroid(members.iter().copied()) {
                let reversed = centroid(members.iter().rev().copied()).unwrap();
                for (a, b) in forward.components().iter().zip(reversed.components()) {
                    prop_assert!((a - b).abs() < 1e-9);
                }
            }
        }

        #[test]
        fn centroid_of_identical_vectors_is_that_vector(
            v in arb_unit_vector(6),
            counts in proptest::collection::vec(1u64..20, 1..5),
        ) {
            let members: Vec<(&UnitVector, u64)> = counts.iter().map(|c| (&v, *c)).collect();
            let c = centroid(members).unwrap();
            for (a, b) in c.components().iter().zip(v.components()) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }

        #[test]
        fn scaling_counts_leaves_centroid_unchanged(
            vectors in proptest::collection::vec(arb_unit_vector(6), 2..5),
            counts in proptest::collection::vec(1u64..10, 5),
            scale in 2u64..5,
        ) {
            let base: Vec<(&UnitVector, u64)> = vectors.iter().zip(counts.iter().copied()).collect();
            let scaled: Vec<(&UnitVector, u64)> =
                vectors.iter().zip(counts.iter().map(|c| c * scale)).collect();
            match (centroid(base), centroid(scaled)) {
                (Ok(a), Ok(b)) => {
                    for (x, y) in a.components().iter().zip(b.components()) {
                        prop_assert!((x - y).abs() < 1e-9);
                    }
                }
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "scaling changed degeneracy"),
            }
        }
    }
}
