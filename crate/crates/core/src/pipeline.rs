//! End-to-end orchestration: run one passage through preprocessing, topic
//! detection, pool building, and form assembly, with every knob and seed
//! captured in a serializable [`RunConfig`] so any emitted form can be
//! reproduced byte for byte.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::{
    assemble_form, reconcile_shared_terms, suggest_topic_labels, AssembleError, Difficulty,
    FormSpec, TestForm,
};
use crate::cluster::{build_topic_model, ApParams, ClusterError, Preference, TopicModel};
use crate::embed::{self, EmbedError};
use crate::resources::{ResourceBundle, ResourceError};
use crate::score::ScoreError;
use crate::select::{
    self, build_anchor_pool, build_nt_pool, build_tid_pool, build_tod_pool,
    match_grade_distribution, ScarcityInfo, SelectError, TermPools,
};
use crate::textprep::{self, TextError};

/// Passage lengths outside this range trigger a warning (never an error).
pub const LENGTH_GUIDANCE: std::ops::RangeInclusive<usize> = 400..=1500;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Resource(#[from] ResourceError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Select(#[from] SelectError),
    #[error(transparent)]
    Assemble(#[from] AssembleError),
    #[error(transparent)]
    Score(#[from] ScoreError),
}

/// The three named seeds all randomness flows from.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Seeds {
    pub clustering: u64,
    pub nt_sample: u64,
    pub layout: u64,
}

impl Default for Seeds {
    fn default() -> Self {
        Self {
            clustering: 11,
            nt_sample: 23,
            layout: 47,
        }
    }
}

/// Full run configuration with every default materialized; serialized into
/// run records and accepted back for replay.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub manifest: PathBuf,
    pub passages: Vec<PathBuf>,
    pub out_dir: PathBuf,
    pub topic_label: Option<String>,
    pub difficulties: Vec<Difficulty>,
    pub seeds: Seeds,
    pub quota: usize,
    pub n_tid: usize,
    pub n_tod: usize,
    pub n_nt: usize,
    pub anchor_clusters: usize,
    pub tod_pool_size: usize,
    pub nt_pool_size: usize,
    pub theta_cos: f64,
    pub theta_pmi: f64,
    pub damping: f64,
    pub max_iterations: usize,
    pub convergence_window: usize,
    /// Explicit preference; `None` selects the median rule.
    pub preference: Option<f64>,
    pub chunk_size: usize,
}

impl RunConfig {
    pub fn new(manifest: PathBuf, passages: Vec<PathBuf>, out_dir: PathBuf) -> Self {
        Self {
            manifest,
            passages,
            out_dir,
            topic_label: None,
            difficulties: vec![Difficulty::Easy, Difficulty::Hard],
            seeds: Seeds::default(),
            quota: select::DEFAULT_TID_QUOTA,
            n_tid: 14,
            n_tod: 14,
            n_nt: 22,
            anchor_clusters: select::DEFAULT_ANCHOR_CLUSTERS,
            tod_pool_size: select::DEFAULT_TOD_POOL_SIZE,
            nt_pool_size: select::DEFAULT_NT_POOL_SIZE,
            theta_cos: select::DEFAULT_THETA_COS,
            theta_pmi: select::DEFAULT_THETA_PMI,
            damping: 0.9,
            max_iterations: 500,
            convergence_window: 10,
            preference: None,
            chunk_size: embed::DEFAULT_CHUNK_SIZE,
        }
    }

    pub fn ap_params(&self) -> ApParams {
        ApParams {
            damping: self.damping,
            max_iterations: self.max_iterations,
            convergence_window: self.convergence_window,
            preference: match self.preference {
                Some(value) => Preference::Value(value),
                None => Preference::Median,
            },
        }
    }
}

/// Everything produced for one passage.
#[derive(Debug)]
pub struct PassageArtifacts {
    pub passage_id: String,
    pub passage_sha256: String,
    pub word_count: usize,
    pub inventory: crate::textprep::TermInventory,
    pub model: TopicModel,
    pub pools: TermPools,
    /// Grade guide distribution (the TID pool's known grades).
    pub guide: Vec<f64>,
    pub forms: Vec<TestForm>,
    pub suggested_labels: Vec<String>,
    pub warnings: Vec<String>,
}

/// Reproducibility record emitted next to each form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: RunConfig,
    pub resource_checksums: BTreeMap<String, String>,
    pub passage_sha256: String,
    pub scarcity: Option<ScarcityInfo>,
    pub warnings: Vec<String>,
    pub suggested_labels: Vec<String>,
}

/// Run the whole pipeline for one passage text.
pub fn process_passage(
    bundle: &ResourceBundle,
    passage_text: &str,
    passage_id: &str,
    config: &RunConfig,
) -> Result<PassageArtifacts, PipelineError> {
    let mut warnings = Vec::new();

    let grade_estimate = textprep::passage_grade(passage_text)?;
    let tokens = textprep::tokenize(passage_text)?;
    let word_count = tokens.len();
    if !LENGTH_GUIDANCE.contains(&word_count) {
        warnings.push(format!(
            "passage is {word_count} words; guidance is {}-{} words",
            LENGTH_GUIDANCE.start(),
            LENGTH_GUIDANCE.end()
        ));
    }
    let tagged = textprep::tag_pos(&tokens, &bundle.pos_resources);
    let units = textprep::detect_mwes(&tagged, &bundle.mwe_lexicon);
    let mut passage_surfaces: HashSet<String> = tokens.iter().map(|t| t.surface.clone()).collect();
    passage_surfaces.extend(units.iter().map(|u| u.surface.clone()));

    let inventory = textprep::extract_terms(&units, word_count, grade_estimate)?;
    let document = embed::document_vector(&units, bundle, config.chunk_size)?;
    let model = build_topic_model(
        &inventory,
        &document,
        bundle,
        &config.ap_params(),
        config.seeds.clustering,
    )?;
    if !model.excluded_terms.is_empty() {
        warnings.push(format!(
            "{} inventory terms lack vectors and were excluded from clustering: {}",
            model.excluded_terms.len(),
            model.excluded_terms.join(", ")
        ));
    }
    if !model.converged {
        warnings.push(format!(
            "affinity propagation did not converge within {} iterations",
            model.iterations
        ));
    }

    let anchors = build_anchor_pool(&model, config.anchor_clusters);
    let (tid, scarcity) = build_tid_pool(&model, &anchors, bundle, config.quota);
    if let Some(info) = &scarcity {
        warnings.push(format!(
            "topical in-document terms are scarce: found {} of the {} quota{}",
            info.found,
            info.quota,
            if info.hard { " (none at all)" } else { "" }
        ));
    }
    let guide: Vec<f64> = tid.iter().filter_map(|c| c.grade).collect();

    let tod_raw = build_tod_pool(
        bundle,
        &anchors,
        &passage_surfaces,
        config.tod_pool_size,
        config.theta_cos,
        config.theta_pmi,
        config.n_tod,
    )?;
    let tod = match_grade_distribution(&tod_raw, &guide, (2 * config.n_tod).min(tod_raw.len()))?;
    let nt_raw = build_nt_pool(
        bundle,
        &anchors,
        &passage_surfaces,
        config.nt_pool_size,
        config.seeds.nt_sample,
        config.theta_cos,
        config.theta_pmi,
        config.n_nt,
        &guide,
    )?;
    let nt = match_grade_distribution(&nt_raw, &guide, (2 * config.n_nt).min(nt_raw.len()))?;
    if tod.guide_empty || nt.guide_empty {
        warnings.push("grade guide is empty; pools passed through unmatched".to_owned());
    }

    let pools = TermPools {
        tid,
        tod: tod.selected,
        nt: nt.selected,
        scarcity,
    };

    let suggested_labels = suggest_topic_labels(&model, 5);
    let mut forms = Vec::new();
    for difficulty in &config.difficulties {
        let spec = FormSpec {
            n_tid: config.n_tid,
            n_tod: config.n_tod,
            n_nt: config.n_nt,
            difficulty: *difficulty,
            layout_seed: config.seeds.layout,
            topic_label: config.topic_label.clone(),
        };
        let mut form = assemble_form(&pools, &spec, passage_id)?;
        form.provenance.resource_checksums = bundle.manifest.checksums();
        form.provenance.passage_sha256 = Some(sha256_hex(passage_text.as_bytes()));
        forms.push(form);
    }
    reconcile_shared_terms(&mut forms);

    Ok(PassageArtifacts {
        passage_id: passage_id.to_owned(),
        passage_sha256: sha256_hex(passage_text.as_bytes()),
        word_count,
        inventory,
        model,
        pools,
        guide,
        forms,
        suggested_labels,
        warnings,
    })
}

/// Hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Ranked cluster dump: rank, document similarity, member terms.
pub fn render_clusters(model: &TopicModel, top: Option<usize>) -> String {
    let mut out = String::new();
    let limit = top.unwrap_or(model.clusters.len());
    out.push_str("rank\tdoc_similarity\tterms\n");
    for (rank, cluster) in model.clusters.iter().take(limit).enumerate() {
        let terms: Vec<&str> = cluster.terms().collect();
        out.push_str(&format!(
            "{}\t{:.3}\t{}\n",
            rank + 1,
            cluster.doc_similarity,
            terms.join(", ")
        ));
    }
    if !model.excluded_terms.is_empty() {
        out.push_str(&format!(
            "excluded (no vector): {}\n",
            model.excluded_terms.join(", ")
        ));
    }
    out
}

/// Diagnostic pool dump: term, category, support, grade.
pub fn render_pools(pools: &TermPools) -> String {
    let mut out = String::new();
    out.push_str("term\tcategory\tsupport\tgrade\n");
    for (candidates, category) in [(&pools.tid, "TID"), (&pools.tod, "TOD"), (&pools.nt, "NT")] {
        for candidate in candidates.iter() {
            let grade = candidate
                .grade
                .map(|g| format!("{g:.2}"))
                .unwrap_or_else(|| "-".to_owned());
            out.push_str(&format!(
                "{}\t{}\t{:.4}\t{}\n",
                candidate.term, category, candidate.support, grade
            ));
        }
    }
    if let Some(info) = &pools.scarcity {
        out.push_str(&format!(
            "scarcity: {} of quota {}\n",
            info.found, info.quota
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_materialize_every_seed() {
        let config = RunConfig::new("m.toml".into(), vec!["p.txt".into()], "out".into());
        assert_eq!(config.seeds, Seeds::default());
        assert_eq!(config.n_tid + config.n_tod + config.n_nt, 50);
        assert_eq!(config.quota, 25);
        assert_eq!(config.tod_pool_size, 56);
        assert_eq!(config.nt_pool_size, 88);
        assert!((config.theta_cos - 0.25).abs() < 1e-12);
        assert!((config.theta_pmi - 0.05).abs() < 1e-12);
    }

    #[test]
    fn run_config_round_trips_through_json() {
        let config = RunConfig::new("m.toml".into(), vec!["p.txt".into()], "out".into());
        let json = serde_json::to_string_pretty(&config).unwrap();
        let back: RunConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(
            serde_json::to_string(&back).unwrap(),
            serde_json::to_string(&config).unwrap()
        );
    }

    #[test]
    fn run_record_round_trips() {
        let record = RunRecord {
            config: RunConfig::new("m.toml".into(), vec!["p.txt".into()], "out".into()),
            resource_checksums: BTreeMap::from([("embeddings".to_owned(), "ab".to_owned())]),
            passage_sha256: "cd".into(),
            scarcity: None,
            warnings: vec!["w".into()],
            suggested_labels: vec!["thunder".into()],
        };
        let json = serde_json::to_string_pretty(&record).unwrap();
        let back: RunRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.passage_sha256, "cd");
        assert_eq!(back.config.passages, record.config.passages);
    }

    #[test]
    fn sha256_is_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
