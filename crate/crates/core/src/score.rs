//! Scoring of filled-in response sheets against a form's answer key, plus
//! the must-know subset diagnostic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::{Category, TestForm};

#[derive(Debug, Error)]
pub enum ScoreError {
    #[error("response sheet references '{0}', which is not on the form")]
    UnknownTerm(String),
    #[error("response sheet parse: {0}")]
    Parse(String),
}

/// A student's yes/no marks. Terms missing from `marks` count as unchecked;
/// terms not on the form are an error at scoring time.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResponseSheet {
    #[serde(default)]
    pub form_id: String,
    pub marks: BTreeMap<String, bool>,
}

impl ResponseSheet {
    pub fn from_json(json: &str) -> Result<Self, ScoreError> {
        serde_json::from_str(json).map_err(|e| ScoreError::Parse(e.to_string()))
    }

    /// Parse `term,checked` lines; `checked` is true/false/1/0. A leading
    /// `term,checked` header is skipped.
    pub fn from_csv(csv: &str) -> Result<Self, ScoreError> {
        let mut marks = BTreeMap::new();
        for (index, line) in csv.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (index == 0 && line.eq_ignore_ascii_case("term,checked")) {
                continue;
            }
            let (term, value) = line.rsplit_once(',').ok_or_else(|| {
                ScoreError::Parse(format!("line {}: expected 'term,checked'", index + 1))
            })?;
            let checked = match value.trim().to_lowercase().as_str() {
                "true" | "1" => true,
                "false" | "0" => false,
                other => {
                    return Err(ScoreError::Parse(format!(
                        "line {}: bad checked value '{other}'",
                        index + 1
                    )))
                }
            };
            marks.insert(term.trim().to_lowercase(), checked);
        }
        Ok(Self {
            form_id: String::new(),
            marks,
        })
    }
}

/// Accuracy per item category; `None` when the form has no items of that
/// category.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryAccuracy {
    pub tid: Option<f64>,
    pub tod: Option<f64>,
    pub nt: Option<f64>,
}

/// Scoring outcome for one sheet.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScoreReport {
    /// Correctly marked items (accepted topical, rejected non-topical) over
    /// all items.
    pub proportion_correct: f64,
    pub per_category: CategoryAccuracy,
    pub must_know_terms: Vec<String>,
    pub must_know_accuracy: Option<f64>,
}

impl fmt::Display for ScoreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "proportion correct: {:.4}", self.proportion_correct)?;
        let cell = |value: Option<f64>| match value {
            Some(v) => format!("{v:.4}"),
            None => "-".to_owned(),
        };
        writeln!(
            f,
            "per category: TID {}, TOD {}, NT {}",
            cell(self.per_category.tid),
            cell(self.per_category.tod),
            cell(self.per_category.nt)
        )?;
        writeln!(
            f,
            "must-know ({}): {}",
            self.must_know_terms.join(", "),
            cell(self.must_know_accuracy)
        )
    }
}

/// The `n` most strongly topic-related keys on the form.
#[derive(Debug, Clone)]
pub struct MustKnowSubset {
    pub terms: Vec<String>,
    /// Set when the form carries fewer than `n` topical items.
    pub shortfall: bool,
}

/// Top `n` topical (TID and TOD) items by support, ties lexicographic.
pub fn must_know_subset(form: &TestForm, n: usize) -> MustKnowSubset {
    let mut topical: Vec<(&str, f64)> = form
        .items
        .iter()
        .filter(|item| item.key)
        .map(|item| (item.term.as_str(), item.support))
        .collect();
    topical.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(b.0)));
    let shortfall = topical.len() < n;
    MustKnowSubset {
        terms: topical
            .into_iter()
            .take(n)
            .map(|(term, _)| term.to_owned())
            .collect(),
        shortfall,
    }
}

/// Score one sheet: an item is correct when its mark equals its key.
pub fn score_responses(form: &TestForm, sheet: &ResponseSheet) -> Result<ScoreReport, ScoreError> {
    let form_terms: BTreeMap<&str, bool> = form
        .items
        .iter()
        .map(|item| (item.term.as_str(), item.key))
        .collect();
    for term in sheet.marks.keys() {
        if !form_terms.contains_key(term.as_str()) {
            return Err(ScoreError::UnknownTerm(term.clone()));
        }
    }

    let mut correct_total = 0usize;
    let mut per_category: BTreeMap<Category, (usize, usize)> = BTreeMap::new();
    let is_correct =
        |term: &str, key: bool| -> bool { sheet.marks.get(term).copied().unwrap_or(false) == key };
    for item in &form.items {
        let correct = is_correct(&item.term, item.key);
        if correct {
            correct_total += 1;
        }
        let slot = per_category.entry(item.category).or_insert((0, 0));
        slot.1 += 1;
        if correct {
            slot.0 += 1;
        }
    }
    let accuracy = |category: Category| -> Option<f64> {
        per_category
            .get(&category)
            .map(|(correct, total)| *correct as f64 / *total as f64)
    };

    let must_know = must_know_subset(form, 6);
    let must_know_accuracy = if must_know.terms.is_empty() {
        None
    } else {
        let correct = must_know
            .terms
            .iter()
            .filter(|term| is_correct(term, true))
            .count();
        Some(correct as f64 / must_know.terms.len() as f64)
    };

    Ok(ScoreReport {
        proportion_correct: correct_total as f64 / form.items.len() as f64,
        per_category: CategoryAccuracy {
            tid: accuracy(Category::Tid),
            tod: accuracy(Category::Tod),
            nt: accuracy(Category::Nt),
        },
        must_know_terms: must_know.terms,
        must_know_accuracy,
    })
}

impl Category {
    fn rank(&self) -> u8 {
        match self {
            Self::Tid => 0,
            Self::Tod => 1,
            Self::Nt => 2,
        }
    }
}

impl Ord for Category {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Category {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
