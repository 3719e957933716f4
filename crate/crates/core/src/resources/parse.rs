//! Line-oriented parsers for the five resource file formats.
//!
//! All formats are plain UTF-8 text, tab-separated where tabular, with a
//! one-line header where noted. Every parse error carries the file path and
//! 1-based line number.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::ResourceError;
use crate::textprep::PosTag;

fn read_lines(path: &Path) -> Result<Vec<String>, ResourceError> {
    let text = fs::read_to_string(path).map_err(|source| ResourceError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text.lines().map(str::to_owned).collect())
}

fn malformed(path: &Path, line: usize, message: impl Into<String>) -> ResourceError {
    ResourceError::MalformedLine {
        file: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

/// Parse `embeddings.tsv`: header `dim=<D>`, rows `term<TAB>v1 v2 ... vD`.
///
/// Vectors are L2-normalized here; the file may store raw vectors.
pub(super) fn parse_embeddings(
    path: &Path,
) -> Result<(usize, HashMap<String, Vec<f64>>), ResourceError> {
    let lines = read_lines(path)?;
    let header = lines
        .first()
        .ok_or_else(|| malformed(path, 1, "empty file, expected 'dim=<D>' header"))?;
    let dimension: usize = header
        .strip_prefix("dim=")
        .and_then(|d| d.trim().parse().ok())
        .filter(|d| *d > 0)
        .ok_or_else(|| {
            malformed(
                path,
                1,
                format!("bad header '{header}', expected 'dim=<D>'"),
            )
        })?;

    let mut entries = HashMap::new();
    for (idx, line) in lines.iter().enumerate().skip(1) {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (term, values) = line
            .split_once('\t')
            .ok_or_else(|| malformed(path, lineno, "expected 'term<TAB>components'"))?;
        let term = term.trim().to_lowercase();
        if term.is_empty() {
            return Err(malformed(path, lineno, "empty term"));
        }
        let mut components = Vec::with_capacity(dimension);
        for piece in values.split_whitespace() {
            let value: f64 = piece
                .parse()
                .map_err(|_| malformed(path, lineno, format!("bad component '{piece}'")))?;
            if !value.is_finite() {
                return Err(malformed(
                    path,
                    lineno,
                    format!("non-finite component '{piece}'"),
                ));
            }
            components.push(value);
        }
        if components.len() != dimension {
            return Err(ResourceError::DimensionMismatch {
                file: path.to_path_buf(),
                line: lineno,
                expected: dimension,
                found: components.len(),
            });
        }
        let normalized = l2_normalize(&components)
            .ok_or_else(|| malformed(path, lineno, format!("zero-norm vector for '{term}'")))?;
        if entries.insert(term.clone(), normalized).is_some() {
            return Err(ResourceError::DuplicateKey {
                file: path.to_path_buf(),
                line: lineno,
                key: term,
            });
        }
    }
    Ok((dimension, entries))
}

/// Parse `mwe.txt`: one multiword noun phrase per line, 2-5 tokens.
pub(super) fn parse_mwes(path: &Path) -> Result<Vec<Vec<String>>, ResourceError> {
    let lines = read_lines(path)?;
    let mut phrases = Vec::new();
    for (idx, line) in lines.iter().enumerate() {
        let lineno = idx + 1;
        let phrase = line.trim();
        if phrase.is_empty() {
            continue;
        }
        let tokens: Vec<String> = phrase.split_whitespace().map(str::to_lowercase).collect();
        if tokens.len() < 2 || tokens.len() > 5 {
            return Err(malformed(
                path,
                lineno,
                format!(
                    "phrase '{phrase}' has {} tokens, expected 2-5",
                    tokens.len()
                ),
            ));
        }
        phrases.push(tokens);
    }
    Ok(phrases)
}

/// Parse `grades.tsv`: rows `word<TAB>grade` with finite, non-negative grades.
pub(super) fn parse_grades(path: &Path) -> Result<HashMap<String, f64>, ResourceError> {
    let lines = read_lines(path)?;
    let mut entries = HashMap::new();
    for (idx, line) in lines.iter().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (word, grade) = line
            .split_once('\t')
            .ok_or_else(|| malformed(path, lineno, "expected 'word<TAB>grade'"))?;
        let word = word.trim().to_lowercase();
        let grade: f64 = grade
            .trim()
            .parse()
            .map_err(|_| malformed(path, lineno, format!("bad grade '{grade}'")))?;
        if !grade.is_finite() || grade < 0.0 {
            return Err(malformed(
                path,
                lineno,
                format!("grade {grade} out of range"),
            ));
        }
        if entries.insert(word.clone(), grade).is_some() {
            return Err(ResourceError::DuplicateKey {
                file: path.to_path_buf(),
                line: lineno,
                key: word,
            });
        }
    }
    Ok(entries)
}

pub(super) struct RawCooccurrence {
    pub total_contexts: u64,
    pub unigram_counts: HashMap<String, u64>,
    pub pair_counts: HashMap<(String, String), u64>,
}

/// Parse `cooc.tsv`: header `contexts=<N>`, rows `U<TAB>word<TAB>count` and
/// `P<TAB>word_a<TAB>word_b<TAB>count` with `word_a < word_b`.
pub(super) fn parse_cooccurrence(path: &Path) -> Result<RawCooccurrence, ResourceError> {
    let lines = read_lines(path)?;
    let header = lines
        .first()
        .ok_or_else(|| malformed(path, 1, "empty file, expected 'contexts=<N>' header"))?;
    let total_contexts: u64 = header
        .strip_prefix("contexts=")
        .and_then(|n| n.trim().parse().ok())
        .ok_or_else(|| {
            malformed(
                path,
                1,
                format!("bad header '{header}', expected 'contexts=<N>'"),
            )
        })?;

    let mut unigram_counts = HashMap::new();
    let mut pair_counts = HashMap::new();
    for (idx, line) in lines.iter().enumerate().skip(1) {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        match fields.as_slice() {
            ["U", word, count] => {
                let word = word.trim().to_lowercase();
                let count: u64 = count
                    .trim()
                    .parse()
                    .map_err(|_| malformed(path, lineno, format!("bad count '{count}'")))?;
                if unigram_counts.insert(word.clone(), count).is_some() {
                    return Err(ResourceError::DuplicateKey {
                        file: path.to_path_buf(),
                        line: lineno,
                        key: word,
                    });
                }
            }
            ["P", word_a, word_b, count] => {
                let a = word_a.trim().to_lowercase();
                let b = word_b.trim().to_lowercase();
                if a >= b {
                    return Err(malformed(
                        path,
                        lineno,
                        format!("pair '{a}'/'{b}' not stored with word_a < word_b"),
                    ));
                }
                let count: u64 = count
                    .trim()
                    .parse()
                    .map_err(|_| malformed(path, lineno, format!("bad count '{count}'")))?;
                if pair_counts.insert((a.clone(), b.clone()), count).is_some() {
                    return Err(ResourceError::DuplicateKey {
                        file: path.to_path_buf(),
                        line: lineno,
                        key: format!("{a} {b}"),
                    });
                }
            }
            _ => {
                return Err(malformed(
                    path,
                    lineno,
                    "expected 'U<TAB>word<TAB>count' or 'P<TAB>a<TAB>b<TAB>count'",
                ))
            }
        }
    }
    Ok(RawCooccurrence {
        total_contexts,
        unigram_counts,
        pair_counts,
    })
}

/// Parse `pos.tsv`: rows `word<TAB>tag[,tag...]` using the fixed tagset.
pub(super) fn parse_pos_map(path: &Path) -> Result<HashMap<String, Vec<PosTag>>, ResourceError> {
    let lines = read_lines(path)?;
    let mut entries = HashMap::new();
    for (idx, line) in lines.iter().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (word, tags) = line
            .split_once('\t')
            .ok_or_else(|| malformed(path, lineno, "expected 'word<TAB>tag[,tag...]'"))?;
        let word = word.trim().to_lowercase();
        let mut parsed = Vec::new();
        for tag in tags.split(',') {
            let tag = tag.trim();
            let tag = PosTag::parse(tag)
                .ok_or_else(|| malformed(path, lineno, format!("unknown POS tag '{tag}'")))?;
            if !parsed.contains(&tag) {
                parsed.push(tag);
            }
        }
        if parsed.is_empty() {
            return Err(malformed(path, lineno, "no POS tags listed"));
        }
        if entries.insert(word.clone(), parsed).is_some() {
            return Err(ResourceError::DuplicateKey {
                file: path.to_path_buf(),
                line: lineno,
                key: word,
            });
        }
    }
    Ok(entries)
}

/// Parse a one-word-per-line list (stoplists, `nouns.txt`).
pub(super) fn parse_word_list(path: &Path) -> Result<Vec<String>, ResourceError> {
    let lines = read_lines(path)?;
    Ok(lines
        .iter()
        .map(|line| line.trim().to_lowercase())
        .filter(|line| !line.is_empty())
        .collect())
}

/// L2-normalize a vector; `None` when the norm is zero.
pub(crate) fn l2_normalize(components: &[f64]) -> Option<Vec<f64>> {
    let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return None;
    }
    Some(components.iter().map(|c| c / norm).collect())
}

/// Hex-encoded SHA-256 of a file's bytes.
pub(crate) fn sha256_file(path: &Path) -> Result<String, ResourceError> {
    use sha2::{Digest, Sha256};
    let bytes = fs::read(path).map_err(|source| ResourceError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}
