//! Form assembly: grade-level logic, deterministic selection from the
//! matched pools, seeded item layout, and rendering to the print and machine
//! formats.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cluster::TopicModel;
use crate::resources::GradeLexicon;
use crate::select::{ScarcityInfo, ScoredCandidate, TermPools};

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("invalid form spec: {0}")]
    InvalidSpec(String),
    #[error("{category} pool has {found} terms but the form needs {needed}")]
    PoolTooSmall {
        category: Category,
        found: usize,
        needed: usize,
    },
    #[error("topic label missing; pass one or pick from the suggested labels")]
    MissingTopicLabel,
    #[error("machine form: {0}")]
    MachineParse(String),
}

/// Item category. TID and TOD are keys (correct answer: checked); NT items
/// are distractors (correct answer: unchecked).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Category {
    #[serde(rename = "TID")]
    Tid,
    #[serde(rename = "TOD")]
    Tod,
    #[serde(rename = "NT")]
    Nt,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Tid => "TID",
            Self::Tod => "TOD",
            Self::Nt => "NT",
        })
    }
}

/// Form difficulty: assembled from the lowest- or highest-grade terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Difficulty {
    Easy,
    Hard,
}

impl Difficulty {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Easy => "easy",
            Self::Hard => "hard",
        }
    }
}

impl std::str::FromStr for Difficulty {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_lowercase().as_str() {
            "easy" => Ok(Self::Easy),
            "hard" | "difficult" => Ok(Self::Hard),
            other => Err(format!(
                "unknown difficulty '{other}', expected easy or hard"
            )),
        }
    }
}

impl fmt::Display for Difficulty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Composition and layout parameters for one form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormSpec {
    pub n_tid: usize,
    pub n_tod: usize,
    pub n_nt: usize,
    pub difficulty: Difficulty,
    pub layout_seed: u64,
    pub topic_label: Option<String>,
}

impl FormSpec {
    /// The standard 50-item 14:14:22 composition.
    pub fn standard(difficulty: Difficulty, layout_seed: u64) -> Self {
        Self {
            n_tid: 14,
            n_tod: 14,
            n_nt: 22,
            difficulty,
            layout_seed,
            topic_label: None,
        }
    }

    pub fn total_items(&self) -> usize {
        self.n_tid + self.n_tod + self.n_nt
    }

    pub fn validate(&self) -> Result<(), AssembleError> {
        if self.n_tid < 1 || self.n_tod < 1 || self.n_nt < 1 {
            return Err(AssembleError::InvalidSpec(
                "every category needs at least one item".into(),
            ));
        }
        Ok(())
    }
}

/// One item on a form. `key` is true exactly when the category is topical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormItem {
    pub term: String,
    pub category: Category,
    pub key: bool,
    pub grade: Option<f64>,
    pub support: f64,
}

/// Provenance recorded into machine-format forms and run records.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Provenance {
    #[serde(default)]
    pub resource_checksums: BTreeMap<String, String>,
    #[serde(default)]
    pub passage_sha256: Option<String>,
}

/// An assembled test form: items in presentation order plus everything
/// needed to print, key, and reproduce it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TestForm {
    pub passage_id: String,
    pub spec: FormSpec,
    pub instruction: String,
    pub items: Vec<FormItem>,
    /// Terms this form shares with sibling forms under TID scarcity.
    #[serde(default)]
    pub shared_terms: Vec<String>,
    #[serde(default)]
    pub scarcity: Option<ScarcityInfo>,
    #[serde(default)]
    pub provenance: Provenance,
}

/// Grade level of a term: dictionary value for single words; for an MWE,
/// the maximum covered constituent grade raised by 25%. `None` when nothing
/// is covered.
pub fn grade_of_term(term: &str, grade_lexicon: &GradeLexicon) -> Option<f64> {
    if !term.contains(char::is_whitespace) {
        return grade_lexicon.get(term);
    }
    term.split_whitespace()
        .filter_map(|word| grade_lexicon.get(word))
        .fold(None, |best: Option<f64>, grade| {
            Some(best.map_or(grade, |b| b.max(grade)))
        })
        .map(|max| max * 1.25)
}

fn difficulty_order(
    candidates: &[ScoredCandidate],
    difficulty: Difficulty,
) -> Vec<&ScoredCandidate> {
    let mut ordered: Vec<&ScoredCandidate> = candidates.iter().collect();
    ordered.sort_by(|a, b| {
        // Unknown grades sort last for either difficulty.
        let grade_key = |c: &ScoredCandidate| match (difficulty, c.grade) {
            (Difficulty::Easy, Some(g)) => g,
            (Difficulty::Easy, None) => f64::INFINITY,
            (Difficulty::Hard, Some(g)) => -g,
            (Difficulty::Hard, None) => f64::INFINITY,
        };
        grade_key(a)
            .partial_cmp(&grade_key(b))
            .unwrap()
            .then_with(|| b.support.partial_cmp(&a.support).unwrap())
            .then_with(|| a.term.cmp(&b.term))
    });
    ordered
}

/// Assemble one form from grade-matched pools.
///
/// Per category the candidates are ranked by grade (ascending for EASY,
/// descending for HARD; ties by support, then term) and the spec count is
/// taken. A TID pool smaller than the spec count is taken whole and the
/// scarcity recorded; a short TOD or NT pool is an error. The final item
/// order is a seeded shuffle.
pub fn assemble_form(
    pools: &TermPools,
    spec: &FormSpec,
    passage_id: &str,
) -> Result<TestForm, AssembleError> {
    spec.validate()?;
    let mut items = Vec::with_capacity(spec.total_items());
    let mut push = |candidates: &[ScoredCandidate], category: Category| {
        for candidate in candidates {
            items.push(FormItem {
                term: candidate.term.clone(),
                category,
                key: category != Category::Nt,
                grade: candidate.grade,
                support: candidate.support,
            });
        }
    };

    let tid_ranked = difficulty_order(&pools.tid, spec.difficulty);
    let tid_take: Vec<ScoredCandidate> = tid_ranked.into_iter().take(spec.n_tid).cloned().collect();
    push(&tid_take, Category::Tid);

    for (pool, category, needed) in [
        (&pools.tod, Category::Tod, spec.n_tod),
        (&pools.nt, Category::Nt, spec.n_nt),
    ] {
        if pool.len() < needed {
            return Err(AssembleError::PoolTooSmall {
                category,
                found: pool.len(),
                needed,
            });
        }
        let take: Vec<ScoredCandidate> = difficulty_order(pool, spec.difficulty)
            .into_iter()
            .take(needed)
            .cloned()
            .collect();
        push(&take, category);
    }

    debug_assert_eq!(
        items
            .iter()
            .map(|i| i.term.as_str())
            .collect::<HashSet<_>>()
            .len(),
        items.len(),
        "pools must be disjoint"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(spec.layout_seed);
    items.shuffle(&mut rng);

    let instruction = spec
        .topic_label
        .as_deref()
        .map(instruction_line)
        .unwrap_or_default();

    Ok(TestForm {
        passage_id: passage_id.to_owned(),
        spec: spec.clone(),
        instruction,
        items,
        shared_terms: Vec::new(),
        scarcity: pools.scarcity.clone(),
        provenance: Provenance::default(),
    })
}

fn instruction_line(label: &str) -> String {
    format!("Select all of the terms that are related to the topic of {label}.")
}

/// Record, on every sibling form, the terms it shares with the others.
pub fn reconcile_shared_terms(forms: &mut [TestForm]) {
    let mut occurrences: BTreeMap<String, usize> = BTreeMap::new();
    for form in forms.iter() {
        for item in &form.items {
            *occurrences.entry(item.term.clone()).or_default() += 1;
        }
    }
    for form in forms.iter_mut() {
        let mut shared: Vec<String> = form
            .items
            .iter()
            .filter(|item| occurrences[&item.term] > 1)
            .map(|item| item.term.clone())
            .collect();
        shared.sort_unstable();
        form.shared_terms = shared;
    }
}

/// Candidate topic labels: the exemplar terms of the top `k` clusters, in
/// rank order. A human picks or overrides; the artifact never invents a
/// label.
pub fn suggest_topic_labels(model: &TopicModel, k: usize) -> Vec<String> {
    model
        .clusters
        .iter()
        .take(k)
        .map(|cluster| cluster.exemplar.clone())
        .collect()
}

/// Output format for [`render_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// Three-column checkbox sheet for students.
    Print,
    /// Structured JSON record.
    Machine,
}

#[derive(Debug, Serialize, Deserialize)]
struct MachineItem {
    term: String,
    grade: Option<f64>,
    support: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    category: Option<Category>,
    #[serde(skip_serializing_if = "Option::is_none")]
    key: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
struct MachineForm {
    passage_id: String,
    spec: FormSpec,
    instruction: String,
    #[serde(default)]
    shared_terms: Vec<String>,
    #[serde(default)]
    scarcity: Option<ScarcityInfo>,
    items: Vec<MachineItem>,
    #[serde(default)]
    provenance: Provenance,
}

/// Render a form.
///
/// PRINT is a three-column checkbox sheet headed by the instruction line;
/// without `include_key` it carries no key or category markers at all.
/// MACHINE is a JSON record of the items with grades, supports, spec, and
/// provenance checksums; `include_key` controls whether categories and key
/// booleans are present.
pub fn render_form(
    form: &TestForm,
    format: RenderFormat,
    include_key: bool,
) -> Result<String, AssembleError> {
    match format {
        RenderFormat::Print => render_print(form, include_key),
        RenderFormat::Machine => render_machine(form, include_key),
    }
}

fn render_print(form: &TestForm, include_key: bool) -> Result<String, AssembleError> {
    if form.spec.topic_label.is_none() {
        return Err(AssembleError::MissingTopicLabel);
    }
    let cells: Vec<String> = form
        .items
        .iter()
        .map(|item| {
            let mark = if include_key && item.key {
                "[x]"
            } else {
                "[ ]"
            };
            format!("{mark} {}", item.term)
        })
        .collect();
    let width = cells.iter().map(String::len).max().unwrap_or(0) + 4;
    let mut out = String::new();
    out.push_str(&form.instruction);
    out.push_str("\n\n");
    for row in cells.chunks(3) {
        let mut line = String::new();
        for (column, cell) in row.iter().enumerate() {
            if column + 1 < row.len() {
                line.push_str(&format!("{cell:<width$}"));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn render_machine(form: &TestForm, include_key: bool) -> Result<String, AssembleError> {
    let record = MachineForm {
        passage_id: form.passage_id.clone(),
        spec: form.spec.clone(),
        instruction: form.instruction.clone(),
        shared_terms: form.shared_terms.clone(),
        scarcity: form.scarcity.clone(),
        items: form
            .items
            .iter()
            .map(|item| MachineItem {
                term: item.term.clone(),
                grade: item.grade,
                support: item.support,
                category: include_key.then_some(item.category),
                key: include_key.then_some(item.key),
            })
            .collect(),
        provenance: form.provenance.clone(),
    };
    let mut rendered = serde_json::to_string_pretty(&record)
        .map_err(|e| AssembleError::MachineParse(e.to_string()))?;
    rendered.push('\n');
    Ok(rendered)
}

/// Parse a machine-format form that carries categories and keys (a key
/// file); required by scoring.
pub fn parse_machine_form(json: &str) -> Result<TestForm, AssembleError> {
    let record: MachineForm =
        serde_json::from_str(json).map_err(|e| AssembleError::MachineParse(e.to_string()))?;
    let mut items = Vec::with_capacity(record.items.len());
    for item in record.items {
        let (Some(category), Some(key)) = (item.category, item.key) else {
            return Err(AssembleError::MachineParse(format!(
                "item '{}' lacks category/key; score against the key file, not the student form",
                item.term
            )));
        };
        items.push(FormItem {
            term: item.term,
            category,
            key,
            grade: item.grade,
            support: item.support,
        });
    }
    Ok(TestForm {
        passage_id: record.passage_id,
        spec: record.spec,
        instruction: record.instruction,
        items,
        shared_terms: record.shared_terms,
        scarcity: record.scarcity,
        provenance: record.provenance,
    })
}
