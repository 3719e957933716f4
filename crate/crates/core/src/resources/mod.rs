//! Loading, validation, and indexing of the five lexical data files the
//! pipeline consumes: static embeddings, the MWE lexicon, word grade levels,
//! the paragraph co-occurrence model, and POS resources (tag map, stoplists,
//! noun supply list).
//!
//! A [`ResourceBundle`] is immutable after [`load_bundle`] returns and is safe
//! to share across any number of concurrent pipeline runs.

mod parse;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::textprep::PosTag;

pub(crate) use parse::l2_normalize;

#[derive(Debug, Error)]
pub enum ResourceError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest {path}: {message}")]
    Manifest { path: PathBuf, message: String },
    #[error("{file}:{line}: {message}")]
    MalformedLine {
        file: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{file}:{line}: expected {expected} vector components, found {found}")]
    DimensionMismatch {
        file: PathBuf,
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("{file}:{line}: duplicate key '{key}'")]
    DuplicateKey {
        file: PathBuf,
        line: usize,
        key: String,
    },
    #[error("invariant violation: {0}")]
    Invariant(String),
}

/// Dictionary of L2-normalized static embedding vectors, keyed by
/// case-folded surface term (single word or MWE string).
#[derive(Debug, Clone)]
pub struct EmbeddingLexicon {
    dimension: usize,
    entries: HashMap<String, Vec<f64>>,
}

impl EmbeddingLexicon {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Look up a term's unit vector. Lookups are case-folded.
    pub fn get(&self, term: &str) -> Option<&[f64]> {
        if term.chars().any(|c| c.is_uppercase()) {
            self.entries.get(&term.to_lowercase()).map(Vec::as_slice)
        } else {
            self.entries.get(term).map(Vec::as_slice)
        }
    }

    pub fn contains(&self, term: &str) -> bool {
        self.get(term).is_some()
    }
}

/// Lexicon of nominal multiword expressions with a first-token index for
/// longest-match scanning.
#[derive(Debug, Clone, Default)]
pub struct MweLexicon {
    entries: HashSet<String>,
    index: HashMap<String, Vec<Vec<String>>>,
}

impl MweLexicon {
    fn from_phrases(phrases: Vec<Vec<String>>) -> Self {
        let mut entries = HashSet::new();
        let mut index: HashMap<String, Vec<Vec<String>>> = HashMap::new();
        for tokens in phrases {
            let surface = tokens.join(" ");
            if entries.insert(surface) {
                index.entry(tokens[0].clone()).or_default().push(tokens);
            }
        }
        // Longest candidates first so a scan can take the first hit.
        for candidates in index.values_mut() {
            candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        }
        Self { entries, index }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, phrase: &str) -> bool {
        self.entries.contains(phrase)
    }

    /// Candidate phrases starting with `first_token`, longest first.
    pub fn candidates(&self, first_token: &str) -> &[Vec<String>] {
        self.index
            .get(first_token)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All entries in lexicographic order.
    pub fn iter_sorted(&self) -> Vec<&str> {
        let mut all: Vec<&str> = self.entries.iter().map(String::as_str).collect();
        all.sort_unstable();
        all
    }
}

/// Map from single word to its estimated US grade level (decimal).
#[derive(Debug, Clone)]
pub struct GradeLexicon {
    entries: HashMap<String, f64>,
}

impl GradeLexicon {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<f64> {
        if word.chars().any(|c| c.is_uppercase()) {
            self.entries.get(&word.to_lowercase()).copied()
        } else {
            self.entries.get(word).copied()
        }
    }
}

/// Word co-occurrence counts within paragraphs of a training corpus.
///
/// Counts are document-presence counts: a unigram count is the number of
/// paragraphs containing the word, a pair count the number of paragraphs
/// containing both words. Probabilities divide by `total_contexts`.
#[derive(Debug, Clone)]
pub struct CooccurrenceModel {
    unigram_counts: HashMap<String, u64>,
    pair_counts: HashMap<(String, String), u64>,
    total_contexts: u64,
}

impl CooccurrenceModel {
    pub fn new(
        unigram_counts: HashMap<String, u64>,
        pair_counts: HashMap<(String, String), u64>,
        total_contexts: u64,
    ) -> Result<Self, ResourceError> {
        let model = Self {
            unigram_counts,
            pair_counts,
            total_contexts,
        };
        model.check_invariants(Path::new("<memory>"))?;
        Ok(model)
    }

    /// Count a corpus of paragraphs, each given as its list of words.
    /// Repeated words within a paragraph count once.
    pub fn from_paragraphs<'a, P, W>(paragraphs: P) -> Self
    where
        P: IntoIterator<Item = W>,
        W: IntoIterator<Item = &'a str>,
    {
        let mut unigram_counts: HashMap<String, u64> = HashMap::new();
        let mut pair_counts: HashMap<(String, String), u64> = HashMap::new();
        let mut total_contexts = 0u64;
        for paragraph in paragraphs {
            total_contexts += 1;
            let mut seen: Vec<String> = paragraph
                .into_iter()
                .map(str::to_lowercase)
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            seen.sort_unstable();
            for (i, word) in seen.iter().enumerate() {
                *unigram_counts.entry(word.clone()).or_default() += 1;
                for other in &seen[i + 1..] {
                    *pair_counts
                        .entry((word.clone(), other.clone()))
                        .or_default() += 1;
                }
            }
        }
        Self {
            unigram_counts,
            pair_counts,
            total_contexts,
        }
    }

    fn check_invariants(&self, file: &Path) -> Result<(), ResourceError> {
        let max_unigram = self.unigram_counts.values().copied().max().unwrap_or(0);
        if self.total_contexts < max_unigram {
            return Err(ResourceError::Invariant(format!(
                "{}: total contexts {} below maximum unigram count {}",
                file.display(),
                self.total_contexts,
                max_unigram
            )));
        }
        for ((a, b), count) in &self.pair_counts {
            let ua = self.unigram_count(a);
            let ub = self.unigram_count(b);
            if *count > ua.min(ub) {
                return Err(ResourceError::Invariant(format!(
                    "{}: pair count {} for '{a}'/'{b}' exceeds unigram counts {ua}/{ub}",
                    file.display(),
                    count
                )));
            }
        }
        Ok(())
    }

    pub fn total_contexts(&self) -> u64 {
        self.total_contexts
    }

    pub fn unigram_count(&self, word: &str) -> u64 {
        self.unigram_counts.get(word).copied().unwrap_or(0)
    }

    /// Pair count for an unordered word pair; `pair_count(a, a)` is the
    /// unigram count of `a` (a paragraph always co-occurs with itself).
    pub fn pair_count(&self, a: &str, b: &str) -> u64 {
        if a == b {
            return self.unigram_count(a);
        }
        let key = if a < b {
            (a.to_owned(), b.to_owned())
        } else {
            (b.to_owned(), a.to_owned())
        };
        self.pair_counts.get(&key).copied().unwrap_or(0)
    }

    pub fn unigram_len(&self) -> usize {
        self.unigram_counts.len()
    }

    pub fn pair_len(&self) -> usize {
        self.pair_counts.len()
    }
}

/// Named stopword sets used by the POS filter.
#[derive(Debug, Clone, Default)]
pub struct Stoplists {
    pub function_words: HashSet<String>,
    pub interrogatives: HashSet<String>,
    pub demonstratives: HashSet<String>,
    pub do_be_have: HashSet<String>,
    pub modals: HashSet<String>,
}

impl Stoplists {
    pub fn contains(&self, word: &str) -> bool {
        self.function_words.contains(word)
            || self.interrogatives.contains(word)
            || self.demonstratives.contains(word)
            || self.do_be_have.contains(word)
            || self.modals.contains(word)
    }

    fn iter_all(&self) -> impl Iterator<Item = &String> {
        self.function_words
            .iter()
            .chain(&self.interrogatives)
            .chain(&self.demonstratives)
            .chain(&self.do_be_have)
            .chain(&self.modals)
    }

    pub fn total_len(&self) -> usize {
        self.iter_all().count()
    }
}

/// POS tag map, stoplists, and the noun supply list.
#[derive(Debug, Clone)]
pub struct PosResources {
    pos_map: HashMap<String, Vec<PosTag>>,
    pub stoplists: Stoplists,
    noun_supply: Vec<String>,
}

impl PosResources {
    /// Ordered tags for a word, most frequent first.
    pub fn tags(&self, word: &str) -> Option<&[PosTag]> {
        self.pos_map.get(word).map(Vec::as_slice)
    }

    pub fn pos_len(&self) -> usize {
        self.pos_map.len()
    }

    /// Supply list of noun lemmas, in file order.
    pub fn noun_supply(&self) -> &[String] {
        &self.noun_supply
    }
}

/// Manifest file (TOML) naming the resource files, paths relative to the
/// manifest's directory.
#[derive(Debug, Deserialize)]
struct ManifestFile {
    files: ManifestFiles,
    stoplists: ManifestStoplists,
}

#[derive(Debug, Deserialize)]
struct ManifestFiles {
    embeddings: String,
    mwes: String,
    grades: String,
    cooccurrence: String,
    pos: String,
    nouns: String,
}

#[derive(Debug, Deserialize)]
struct ManifestStoplists {
    function_words: String,
    interrogatives: String,
    demonstratives: String,
    do_be_have: String,
    modals: String,
}

/// Source paths and content checksums recorded at load time.
#[derive(Debug, Clone)]
pub struct BundleManifest {
    pub manifest_path: PathBuf,
    /// role -> (path, sha256), ordered by role for stable output.
    pub sources: BTreeMap<String, (PathBuf, String)>,
}

impl BundleManifest {
    /// role -> sha256 hex, for run records and machine forms.
    pub fn checksums(&self) -> BTreeMap<String, String> {
        self.sources
            .iter()
            .map(|(role, (_, sha))| (role.clone(), sha.clone()))
            .collect()
    }
}

/// All loaded lexical resources; read-only after load.
#[derive(Debug, Clone)]
pub struct ResourceBundle {
    pub embedding_lexicon: EmbeddingLexicon,
    pub mwe_lexicon: MweLexicon,
    pub grade_lexicon: GradeLexicon,
    pub cooccurrence_model: CooccurrenceModel,
    pub pos_resources: PosResources,
    pub manifest: BundleManifest,
}

/// Load, index, and validate the resource bundle named by a manifest file.
pub fn load_bundle(manifest_path: &Path) -> Result<ResourceBundle, ResourceError> {
    let manifest_text =
        std::fs::read_to_string(manifest_path).map_err(|source| ResourceError::Io {
            path: manifest_path.to_path_buf(),
            source,
        })?;
    let manifest: ManifestFile =
        toml::from_str(&manifest_text).map_err(|e| ResourceError::Manifest {
            path: manifest_path.to_path_buf(),
            message: e.to_string(),
        })?;
    let root = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let resolve = |relative: &str| root.join(relative);

    let embeddings_path = resolve(&manifest.files.embeddings);
    let mwes_path = resolve(&manifest.files.mwes);
    let grades_path = resolve(&manifest.files.grades);
    let cooc_path = resolve(&manifest.files.cooccurrence);
    let pos_path = resolve(&manifest.files.pos);
    let nouns_path = resolve(&manifest.files.nouns);
    let stop_paths = [
        (
            "function_words",
            resolve(&manifest.stoplists.function_words),
        ),
        (
            "interrogatives",
            resolve(&manifest.stoplists.interrogatives),
        ),
        (
            "demonstratives",
            resolve(&manifest.stoplists.demonstratives),
        ),
        ("do_be_have", resolve(&manifest.stoplists.do_be_have)),
        ("modals", resolve(&manifest.stoplists.modals)),
    ];

    let (dimension, entries) = parse::parse_embeddings(&embeddings_path)?;
    let embedding_lexicon = EmbeddingLexicon { dimension, entries };

    let mwe_lexicon = MweLexicon::from_phrases(parse::parse_mwes(&mwes_path)?);

    let grade_lexicon = GradeLexicon {
        entries: parse::parse_grades(&grades_path)?,
    };

    let raw_cooc = parse::parse_cooccurrence(&cooc_path)?;
    let cooccurrence_model = CooccurrenceModel {
        unigram_counts: raw_cooc.unigram_counts,
        pair_counts: raw_cooc.pair_counts,
        total_contexts: raw_cooc.total_contexts,
    };
    cooccurrence_model.check_invariants(&cooc_path)?;

    let pos_map = parse::parse_pos_map(&pos_path)?;
    let noun_supply = parse::parse_word_list(&nouns_path)?;
    let mut stoplists = Stoplists::default();
    for (name, path) in &stop_paths {
        let words: HashSet<String> = parse::parse_word_list(path)?.into_iter().collect();
        match *name {
            "function_words" => stoplists.function_words = words,
            "interrogatives" => stoplists.interrogatives = words,
            "demonstratives" => stoplists.demonstratives = words,
            "do_be_have" => stoplists.do_be_have = words,
            "modals" => stoplists.modals = words,
            _ => unreachable!(),
        }
    }

    for lemma in &noun_supply {
        let is_noun = pos_map
            .get(lemma)
            .map(|tags| tags.contains(&PosTag::Noun))
            .unwrap_or(false);
        if !is_noun {
            return Err(ResourceError::Invariant(format!(
                "noun supply entry '{lemma}' is not tagged NOUN in the POS map"
            )));
        }
        if stoplists.contains(lemma) {
            return Err(ResourceError::Invariant(format!(
                "noun supply entry '{lemma}' appears on a stoplist"
            )));
        }
    }

    let pos_resources = PosResources {
        pos_map,
        stoplists,
        noun_supply,
    };

    // Every MWE must yield a vector: a direct entry, or embeddings for all
    // of its constituent words (the fallback averages those).
    for phrase in mwe_lexicon.iter_sorted() {
        if embedding_lexicon.contains(phrase) {
            continue;
        }
        for word in phrase.split_whitespace() {
            if !embedding_lexicon.contains(word) {
                return Err(ResourceError::Invariant(format!(
                    "MWE '{phrase}' has no embedding and constituent '{word}' has none either"
                )));
            }
        }
    }

    let mut sources = BTreeMap::new();
    let mut stamp = |role: &str, path: &Path| -> Result<(), ResourceError> {
        sources.insert(
            role.to_owned(),
            (path.to_path_buf(), parse::sha256_file(path)?),
        );
        Ok(())
    };
    stamp("embeddings", &embeddings_path)?;
    stamp("mwes", &mwes_path)?;
    stamp("grades", &grades_path)?;
    stamp("cooccurrence", &cooc_path)?;
    stamp("pos", &pos_path)?;
    stamp("nouns", &nouns_path)?;
    for (name, path) in &stop_paths {
        stamp(&format!("stoplist_{name}"), path)?;
    }

    Ok(ResourceBundle {
        embedding_lexicon,
        mwe_lexicon,
        grade_lexicon,
        cooccurrence_model,
        pos_resources,
        manifest: BundleManifest {
            manifest_path: manifest_path.to_path_buf(),
            sources,
        },
    })
}

/// Per-resource counts, coverage statistics, and soft warnings. Diagnostic
/// only; never fails and never mutates the bundle.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub embedding_entries: usize,
    pub embedding_dimension: usize,
    pub mwe_entries: usize,
    pub grade_entries: usize,
    pub unigram_entries: usize,
    pub pair_entries: usize,
    pub total_contexts: u64,
    pub pos_entries: usize,
    pub stoplist_entries: usize,
    pub noun_supply_entries: usize,
    /// Fraction of the noun supply with an embedding entry.
    pub noun_embedding_coverage: f64,
    /// Fraction of the noun supply with a grade entry.
    pub noun_grade_coverage: f64,
    /// Fraction of MWE entries with a direct embedding (others fall back to
    /// constituent averaging).
    pub mwe_direct_embedding_coverage: f64,
    pub warnings: Vec<String>,
}

pub fn validate_bundle(bundle: &ResourceBundle) -> ValidationReport {
    let nouns = bundle.pos_resources.noun_supply();
    let noun_total = nouns.len();
    let with_embedding = nouns
        .iter()
        .filter(|n| bundle.embedding_lexicon.contains(n))
        .count();
    let with_grade = nouns
        .iter()
        .filter(|n| bundle.grade_lexicon.get(n).is_some())
        .count();
    let coverage = |covered: usize, total: usize| {
        if total == 0 {
            1.0
        } else {
            covered as f64 / total as f64
        }
    };

    let mwes = bundle.mwe_lexicon.iter_sorted();
    let mwe_total = mwes.len();
    let mwe_direct = mwes
        .iter()
        .filter(|m| bundle.embedding_lexicon.contains(m))
        .count();

    let mut warnings = Vec::new();
    if mwe_total == 0 {
        warnings.push("MWE lexicon is empty: MWE detection disabled".to_owned());
    }
    for mwe in &mwes {
        if !bundle.embedding_lexicon.contains(mwe) {
            warnings.push(format!(
                "MWE '{mwe}' has no direct embedding; constituent-average fallback in use"
            ));
        }
    }
    if with_embedding < noun_total {
        warnings.push(format!(
            "{} of {} noun supply entries lack embeddings and cannot be pool candidates",
            noun_total - with_embedding,
            noun_total
        ));
    }
    if with_grade < noun_total {
        warnings.push(format!(
            "{} of {} noun supply entries lack grade levels and sort last in grade matching",
            noun_total - with_grade,
            noun_total
        ));
    }

    ValidationReport {
        embedding_entries: bundle.embedding_lexicon.len(),
        embedding_dimension: bundle.embedding_lexicon.dimension(),
        mwe_entries: mwe_total,
        grade_entries: bundle.grade_lexicon.len(),
        unigram_entries: bundle.cooccurrence_model.unigram_len(),
        pair_entries: bundle.cooccurrence_model.pair_len(),
        total_contexts: bundle.cooccurrence_model.total_contexts(),
        pos_entries: bundle.pos_resources.pos_len(),
        stoplist_entries: bundle.pos_resources.stoplists.total_len(),
        noun_supply_entries: noun_total,
        noun_embedding_coverage: coverage(with_embedding, noun_total),
        noun_grade_coverage: coverage(with_grade, noun_total),
        mwe_direct_embedding_coverage: coverage(mwe_direct, mwe_total),
        warnings,
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "embeddings: {} entries, dimension {}",
            self.embedding_entries, self.embedding_dimension
        )?;
        writeln!(f, "mwes: {} entries", self.mwe_entries)?;
        writeln!(f, "grades: {} entries", self.grade_entries)?;
        writeln!(
            f,
            "cooccurrence: {} unigrams, {} pairs, {} contexts",
            self.unigram_entries, self.pair_entries, self.total_contexts
        )?;
        writeln!(
            f,
            "pos: {} entries, {} stoplist words",
            self.pos_entries, self.stoplist_entries
        )?;
        writeln!(f, "noun supply: {} entries", self.noun_supply_entries)?;
        writeln!(
            f,
            "coverage: noun embeddings {:.3}, noun grades {:.3}, direct MWE embeddings {:.3}",
            self.noun_embedding_coverage,
            self.noun_grade_coverage,
            self.mwe_direct_embedding_coverage
        )?;
        if self.warnings.is_empty() {
            writeln!(f, "warnings: none")?;
        } else {
            writeln!(f, "warnings:")?;
            for warning in &self.warnings {
                writeln!(f, "  - {warning}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use std::fs;
    use std::path::{Path, PathBuf};

    /// Write a small well-formed bundle into `dir` and return the manifest
    /// path. Callers can overwrite individual files before loading.
    pub fn write_desk_fixture(dir: &Path) -> PathBuf {
        let write = |name: &str, body: &str| fs::write(dir.join(name), body).unwrap();
        write(
            "embeddings.tsv",
            "dim=2\n\
             thunder\t1.0 0.0\n\
             storm\t0.9 0.1\n\
             rain\t0.0 1.0\n\
             cloud\t0.1 0.9\n\
             sky\t0.6 0.8\n\
             x\t3 4\n\
             severe weather\t0.8 0.2\n",
        );
        write("mwes.txt", "severe weather\nstorm cloud\n");
        write(
            "grades.tsv",
            "thunder\t4.0\nstorm\t3.0\nrain\t1.0\ncloud\t2.0\nsky\t1.5\nx\t5.0\n",
        );
        write(
            "cooc.tsv",
            "contexts=1000\n\
             U\tthunder\t100\n\
             U\tstorm\t120\n\
             U\train\t200\n\
             U\tcloud\t150\n\
             P\tstorm\tthunder\t80\n\
             P\tcloud\train\t90\n",
        );
        write(
            "pos.tsv",
            "thunder\tNOUN\nstorm\tNOUN\nrain\tNOUN,VERB\ncloud\tNOUN\nsky\tNOUN\nx\tNOUN\nrolls\tVERB\nfalls\tVERB\n",
        );
        write("nouns.txt", "thunder\nstorm\nrain\ncloud\nsky\n");
        write("stop_function.txt", "the\na\nof\nin\nand\n");
        write("stop_interrogatives.txt", "what\nwhich\n");
        write("stop_demonstratives.txt", "this\nthat\n");
        write("stop_do_be_have.txt", "is\nare\nwas\n");
        write("stop_modals.txt", "can\nmay\n");
        let manifest = dir.join("manifest.toml");
        fs::write(
            &manifest,
            "[files]\n\
             embeddings = \"embeddings.tsv\"\n\
             mwes = \"mwes.txt\"\n\
             grades = \"grades.tsv\"\n\
             cooccurrence = \"cooc.tsv\"\n\
             pos = \"pos.tsv\"\n\
             nouns = \"nouns.txt\"\n\
             \n\
             [stoplists]\n\
             function_words = \"stop_function.txt\"\n\
             interrogatives = \"stop_interrogatives.txt\"\n\
             demonstratives = \"stop_demonstratives.txt\"\n\
             do_be_have = \"stop_do_be_have.txt\"\n\
             modals = \"stop_modals.txt\"\n",
        )
        .unwrap();
        manifest
    }
}
