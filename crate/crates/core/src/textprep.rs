//! Passage preprocessing: tokenization, lexicon-based POS tagging, multiword
//! expression detection, and the type-level term inventory.
//!
//! The tagger is deterministic: stoplist membership wins, then the most
//! frequent tag from the POS map, and unknown words default to NOUN (the
//! downstream filter is noun-seeking, so recall on novel technical nouns
//! matters more than precision). Terms are matched and counted by surface
//! form; no lemmatization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::resources::{MweLexicon, PosResources};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("passage text is empty or whitespace-only")]
    EmptyText,
    #[error("no content terms survive filtering; passage is unusable")]
    NoContentTerms,
}

/// Fixed POS tagset. FUNC covers everything on a stoplist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosTag {
    Noun,
    Verb,
    Adj,
    Adv,
    Propn,
    Func,
    Num,
    Other,
}

impl PosTag {
    pub fn parse(tag: &str) -> Option<Self> {
        match tag {
            "NOUN" => Some(Self::Noun),
            "VERB" => Some(Self::Verb),
            "ADJ" => Some(Self::Adj),
            "ADV" => Some(Self::Adv),
            "PROPN" => Some(Self::Propn),
            "FUNC" => Some(Self::Func),
            "NUM" => Some(Self::Num),
            "OTHER" => Some(Self::Other),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Noun => "NOUN",
            Self::Verb => "VERB",
            Self::Adj => "ADJ",
            Self::Adv => "ADV",
            Self::Propn => "PROPN",
            Self::Func => "FUNC",
            Self::Num => "NUM",
            Self::Other => "OTHER",
        }
    }

    /// Nouns, verbs, and adjectives take part in topical analysis.
    pub fn is_content(&self) -> bool {
        matches!(self, Self::Noun | Self::Verb | Self::Adj)
    }
}

/// One token of the passage. Surfaces are lowercased; `capitalized` records
/// whether the source spelling started with an uppercase letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub position: usize,
    pub sentence_index: usize,
    pub capitalized: bool,
    pub pos: Option<PosTag>,
}

/// A unit of the MWE-resolved stream: either a single word token or a
/// detected multiword expression collapsed into one NOUN unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermUnit {
    pub surface: String,
    pub pos: PosTag,
    pub is_mwe: bool,
    /// Half-open token index range this unit covers.
    pub token_span: (usize, usize),
}

/// One distinct surface term of the passage with its occurrence count.
#[derive(Debug, Clone, PartialEq)]
pub struct TermEntry {
    pub surface: String,
    pub pos: PosTag,
    pub count: u64,
    pub is_mwe: bool,
}

/// Type-level inventory of the passage's content terms.
#[derive(Debug, Clone)]
pub struct TermInventory {
    /// One entry per distinct surface term, in first-occurrence order.
    pub terms: Vec<TermEntry>,
    pub passage_word_count: usize,
    pub passage_grade_estimate: f64,
}

/// Split a passage into lowercased tokens with sentence indices.
///
/// Tokens are maximal runs of alphanumeric characters plus internal hyphens,
/// apostrophes, and decimal points/commas between digits. Hyphenated tokens
/// stay whole; trailing possessive `'s` is stripped. Sentence boundaries sit
/// at `.?!` followed by whitespace, an uppercase letter, or end of text.
/// Digit-only tokens are tagged NUM immediately; all other tags are unset.
pub fn tokenize(text: &str) -> Result<Vec<Token>, TextError> {
    if text.trim().is_empty() {
        return Err(TextError::EmptyText);
    }
    let chars: Vec<char> = text
        .chars()
        .map(|c| if c == '\u{2019}' { '\'' } else { c })
        .collect();
    let mut tokens = Vec::new();
    let mut sentence_index = 0usize;
    let mut tokens_in_sentence = 0usize;
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if c.is_alphanumeric() {
            let start = i;
            let mut j = i + 1;
            while j < chars.len() {
                let cj = chars[j];
                let take = cj.is_alphanumeric()
                    || cj == '-'
                    || cj == '\''
                    || ((cj == '.' || cj == ',')
                        && chars[j - 1].is_ascii_digit()
                        && chars.get(j + 1).is_some_and(|n| n.is_ascii_digit()));
                if take {
                    j += 1;
                } else {
                    break;
                }
            }
            let raw: String = chars[start..j].iter().collect();
            if let Some(surface) = clean_surface(&raw) {
                let capitalized = raw
                    .chars()
                    .find(|c| c.is_alphabetic())
                    .is_some_and(char::is_uppercase);
                let pos = if surface.chars().any(|c| c.is_ascii_digit())
                    && !surface.chars().any(char::is_alphabetic)
                {
                    Some(PosTag::Num)
                } else {
                    None
                };
                tokens.push(Token {
                    surface,
                    position: tokens.len(),
                    sentence_index,
                    capitalized,
                    pos,
                });
                tokens_in_sentence += 1;
            }
            i = j;
        } else {
            if matches!(c, '.' | '?' | '!') {
                let boundary = match chars.get(i + 1) {
                    None => true,
                    Some(n) => n.is_whitespace() || n.is_uppercase(),
                };
                if boundary && tokens_in_sentence > 0 {
                    sentence_index += 1;
                    tokens_in_sentence = 0;
                }
            }
            i += 1;
        }
    }
    if tokens.is_empty() {
        return Err(TextError::EmptyText);
    }
    Ok(tokens)
}

fn clean_surface(raw: &str) -> Option<String> {
    let trimmed = raw.trim_matches(|c| c == '-' || c == '\'');
    let lower = trimmed.to_lowercase();
    let stripped = lower.strip_suffix("'s").unwrap_or(&lower);
    let surface = stripped.trim_matches(|c| c == '-' || c == '\'');
    if surface.is_empty() {
        None
    } else {
        Some(surface.to_owned())
    }
}

/// Assign exactly one POS tag to every token.
///
/// Stoplist membership maps to FUNC; otherwise the first tag listed in the
/// POS map wins. Unknown words default to NOUN, except that a word
/// capitalized in the source mid-sentence is treated as a proper noun.
pub fn tag_pos(tokens: &[Token], pos_resources: &PosResources) -> Vec<Token> {
    let mut tagged = Vec::with_capacity(tokens.len());
    let mut previous_sentence = None;
    for token in tokens {
        let sentence_initial = previous_sentence != Some(token.sentence_index);
        previous_sentence = Some(token.sentence_index);
        let pos = if let Some(tag) = token.pos {
            tag
        } else if pos_resources.stoplists.contains(&token.surface) {
            PosTag::Func
        } else if let Some(tags) = pos_resources.tags(&token.surface) {
            tags[0]
        } else if token.capitalized && !sentence_initial {
            PosTag::Propn
        } else {
            PosTag::Noun
        };
        tagged.push(Token {
            pos: Some(pos),
            ..token.clone()
        });
    }
    tagged
}

/// Collapse lexicon phrases into single NOUN units via greedy left-to-right
/// longest matching. Matched spans never overlap; concatenating unit spans
/// in order reproduces the token sequence.
pub fn detect_mwes(tokens: &[Token], mwe_lexicon: &MweLexicon) -> Vec<TermUnit> {
    let mut units = Vec::new();
    let mut i = 0usize;
    while i < tokens.len() {
        let mut matched_len = None;
        for candidate in mwe_lexicon.candidates(&tokens[i].surface) {
            if candidate.len() <= tokens.len() - i
                && candidate
                    .iter()
                    .zip(&tokens[i..])
                    .all(|(word, token)| *word == token.surface)
            {
                matched_len = Some(candidate.len());
                break;
            }
        }
        if let Some(len) = matched_len {
            let surface = tokens[i..i + len]
                .iter()
                .map(|t| t.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            units.push(TermUnit {
                surface,
                pos: PosTag::Noun,
                is_mwe: true,
                token_span: (i, i + len),
            });
            i += len;
        } else {
            units.push(TermUnit {
                surface: tokens[i].surface.clone(),
                pos: tokens[i].pos.unwrap_or(PosTag::Other),
                is_mwe: false,
                token_span: (i, i + 1),
            });
            i += 1;
        }
    }
    units
}

/// Aggregate the MWE-resolved stream into a type-level inventory, keeping
/// NOUN/VERB/ADJ units only. An MWE's constituents are excluded unless they
/// also occur by themselves elsewhere in the text.
pub fn extract_terms(
    units: &[TermUnit],
    passage_word_count: usize,
    passage_grade_estimate: f64,
) -> Result<TermInventory, TextError> {
    let mut terms: Vec<TermEntry> = Vec::new();
    let mut index: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    for unit in units {
        if !unit.pos.is_content() {
            continue;
        }
        match index.get(&unit.surface) {
            Some(&slot) => terms[slot].count += 1,
            None => {
                index.insert(unit.surface.clone(), terms.len());
                terms.push(TermEntry {
                    surface: unit.surface.clone(),
                    pos: unit.pos,
                    count: 1,
                    is_mwe: unit.is_mwe,
                });
            }
        }
    }
    if terms.is_empty() {
        return Err(TextError::NoContentTerms);
    }
    Ok(TermInventory {
        terms,
        passage_word_count,
        passage_grade_estimate,
    })
}

/// Flesch-Kincaid grade level of the passage:
/// `0.39 * (words/sentences) + 11.8 * (syllables/words) - 15.59`,
/// with syllables counted by a vowel-group heuristic.
pub fn passage_grade(text: &str) -> Result<f64, TextError> {
    let tokens = tokenize(text)?;
    let words = tokens.len();
    let sentences = tokens.last().map(|t| t.sentence_index + 1).unwrap_or(0);
    if words == 0 || sentences == 0 {
        return Err(TextError::EmptyText);
    }
    let syllables: usize = tokens.iter().map(|t| count_syllables(&t.surface)).sum();
    Ok(0.39 * (words as f64 / sentences as f64) + 11.8 * (syllables as f64 / words as f64) - 15.59)
}

/// Number of maximal vowel groups (aeiouy), at least 1 per word.
pub fn count_syllables(word: &str) -> usize {
    let mut groups = 0usize;
    let mut in_group = false;
    for c in word.chars() {
        let vowel = matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y');
        if vowel && !in_group {
            groups += 1;
        }
        in_group = vowel;
    }
    groups.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resources::test_fixtures::write_desk_fixture;
    use crate::resources::{load_bundle, ResourceBundle};
    use proptest::prelude::*;

    fn desk_bundle() -> ResourceBundle {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write_desk_fixture(dir.path());
        load_bundle(&manifest).unwrap()
    }

    fn mwe_lexicon_of(phrases: &[&str]) -> MweLexicon {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write_desk_fixture(dir.path());
        let mut embeddings = String::from("dim=2\n");
        let mut words = std::collections::BTreeSet::new();
        for phrase in phrases {
            embeddings.push_str(&format!("{phrase}\t1 0\n"));
            for word in phrase.split_whitespace() {
                words.insert(word.to_owned());
            }
        }
        for word in words {
            embeddings.push_str(&format!("{word}\t0 1\n"));
        }
        std::fs::write(dir.path().join("embeddings.tsv"), embeddings).unwrap();
        std::fs::write(dir.path().join("mwes.txt"), phrases.join("\n")).unwrap();
        std::fs::write(dir.path().join("nouns.txt"), "").unwrap();
        std::fs::write(dir.path().join("grades.tsv"), "").unwrap();
        load_bundle(&manifest).unwrap().mwe_lexicon
    }

    fn toks(text: &str) -> Vec<Token> {
        tokenize(text).unwrap()
    }

    #[test]
    fn splits_sentences_on_terminators() {
        let tokens = toks("Thunder rolls. Rain falls.");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, ["thunder", "rolls", "rain", "falls"]);
        let sentences: Vec<usize> = tokens.iter().map(|t| t.sentence_index).collect();
        assert_eq!(sentences, [0, 0, 1, 1]);
    }

    #[test]
    fn keeps_hyphens_and_strips_possessives() {
        let tokens = toks("Kepler-16b's star");
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, ["kepler-16b", "star"]);
        assert!(tokens[0].capitalized);
        assert!(!tokens[1].capitalized);
    }

    #[test]
    fn digit_tokens_are_tagged_num_immediately() {
        let tokens = toks("5.9 trillion miles");
        assert_eq!(tokens[0].surface, "5.9");
        assert_eq!(tokens[0].pos, Some(PosTag::Num));
        assert_eq!(tokens[1].pos, None);
    }

    #[test]
    fn decimal_point_does_not_split_sentences() {
        let tokens = toks("It is 5.9 miles. Far away.");
        assert_eq!(tokens.last().unwrap().sentence_index, 1);
    }

    #[test]
    fn empty_text_is_an_error() {
        assert_eq!(tokenize("").unwrap_err(), TextError::EmptyText);
        assert_eq!(tokenize("   \n\t ").unwrap_err(), TextError::EmptyText);
    }

    #[test]
    fn positions_increase_strictly() {
        let tokens = toks("One two three. Four five!");
        for (i, token) in tokens.iter().enumerate() {
            assert_eq!(token.position, i);
        }
    }

    #[test]
    fn stoplist_words_become_func() {
        let bundle = desk_bundle();
        let tagged = tag_pos(&toks("the thunder"), &bundle.pos_resources);
        assert_eq!(tagged[0].pos, Some(PosTag::Func));
        assert_eq!(tagged[1].pos, Some(PosTag::Noun));
    }

    #[test]
    fn unknown_words_default_to_noun() {
        let bundle = desk_bundle();
        let tagged = tag_pos(&toks("cumulonimbus rises"), &bundle.pos_resources);
        assert_eq!(tagged[0].pos, Some(PosTag::Noun));
    }

    #[test]
    fn first_listed_tag_wins() {
        let bundle = desk_bundle();
        // "rain" is listed NOUN,VERB in the fixture.
        let tagged = tag_pos(&toks("rain falls"), &bundle.pos_resources);
        assert_eq!(tagged[0].pos, Some(PosTag::Noun));
        assert_eq!(tagged[1].pos, Some(PosTag::Verb));
    }

    #[test]
    fn midsentence_capitalized_unknowns_are_proper_nouns() {
        let bundle = desk_bundle();
        let tagged = tag_pos(
            &toks("the thunder near Wokulla rolls"),
            &bundle.pos_resources,
        );
        assert_eq!(tagged[3].surface, "wokulla");
        assert_eq!(tagged[3].pos, Some(PosTag::Propn));
        // Sentence-initial capitalization carries no signal.
        let tagged = tag_pos(&toks("Wokulla is far."), &bundle.pos_resources);
        assert_eq!(tagged[0].pos, Some(PosTag::Noun));
    }

    #[test]
    fn detects_lexicon_phrases_as_units() {
        let lexicon = mwe_lexicon_of(&["space shuttle"]);
        let tokens = toks("space shuttle launched");
        let units = detect_mwes(&tokens, &lexicon);
        assert_eq!(units.len(), 2);
        assert_eq!(units[0].surface, "space shuttle");
        assert!(units[0].is_mwe);
        assert_eq!(units[0].pos, PosTag::Noun);
        assert_eq!(units[1].surface, "launched");
    }

    #[test]
    fn longest_match_wins() {
        let lexicon = mwe_lexicon_of(&["ice cream", "ice cream cone"]);
        let units = detect_mwes(&toks("ice cream cone"), &lexicon);
        assert_eq!(units.len(), 1);
        assert_eq!(units[0].surface, "ice cream cone");
    }

    #[test]
    fn no_lexicon_hits_leaves_stream_unchanged() {
        let lexicon = mwe_lexicon_of(&["space shuttle"]);
        let tokens = toks("thunder rolls over hills");
        let units = detect_mwes(&tokens, &lexicon);
        assert_eq!(units.len(), tokens.len());
        assert!(units.iter().all(|u| !u.is_mwe));
    }

    #[test]
    fn unit_spans_partition_the_token_sequence() {
        let lexicon = mwe_lexicon_of(&["ice cream cone", "space shuttle"]);
        let tokens = toks("the space shuttle carried ice cream cone supplies");
        let units = detect_mwes(&tokens, &lexicon);
        let mut expected_start = 0;
        for unit in &units {
            assert_eq!(unit.token_span.0, expected_start);
            expected_start = unit.token_span.1;
        }
        assert_eq!(expected_start, tokens.len());
    }

    #[test]
    fn mwe_constituents_survive_when_standalone() {
        let bundle = desk_bundle();
        let lexicon = mwe_lexicon_of(&["space shuttle"]);
        let tokens = tag_pos(
            &toks("the space shuttle docked and the shuttle returned"),
            &bundle.pos_resources,
        );
        let units = detect_mwes(&tokens, &lexicon);
        let inventory = extract_terms(&units, tokens.len(), 0.0).unwrap();
        let surfaces: Vec<&str> = inventory.terms.iter().map(|t| t.surface.as_str()).collect();
        assert!(surfaces.contains(&"space shuttle"));
        assert!(surfaces.contains(&"shuttle"));
        let shuttle = inventory
            .terms
            .iter()
            .find(|t| t.surface == "shuttle")
            .unwrap();
        assert_eq!(shuttle.count, 1);
    }

    #[test]
    fn counts_aggregate_by_type() {
        let bundle = desk_bundle();
        let tokens = tag_pos(
            &toks("thunder and thunder and thunder"),
            &bundle.pos_resources,
        );
        let units = detect_mwes(&tokens, &bundle.mwe_lexicon);
        let inventory = extract_terms(&units, tokens.len(), 0.0).unwrap();
        assert_eq!(inventory.terms.len(), 1);
        assert_eq!(inventory.terms[0].count, 3);
        assert_eq!(inventory.terms[0].pos, PosTag::Noun);
    }

    #[test]
    fn all_function_text_yields_no_content_error() {
        let bundle = desk_bundle();
        let tokens = tag_pos(&toks("the of and in a"), &bundle.pos_resources);
        let units = detect_mwes(&tokens, &bundle.mwe_lexicon);
        let err = extract_terms(&units, tokens.len(), 0.0).unwrap_err();
        assert_eq!(err, TextError::NoContentTerms);
    }

    #[test]
    fn inventory_counts_stay_within_word_count() {
        let bundle = desk_bundle();
        let text = "Thunder rolls. Rain falls on the storm cloud and the sky.";
        let tokens = tag_pos(&toks(text), &bundle.pos_resources);
        let units = detect_mwes(&tokens, &bundle.mwe_lexicon);
        let inventory = extract_terms(&units, tokens.len(), 0.0).unwrap();
        let total: u64 = inventory.terms.iter().map(|t| t.count).sum();
        assert!(total <= inventory.passage_word_count as u64);
        for term in &inventory.terms {
            assert!(term.pos.is_content());
            assert!(!bundle.pos_resources.stoplists.contains(&term.surface));
        }
    }

    #[test]
    fn flesch_kincaid_matches_hand_arithmetic() {
        // 3 words, 1 sentence, 3 syllables:
        // 0.39*3 + 11.8*1 - 15.59 = -2.62
        let grade = passage_grade("The cat sat.").unwrap();
        assert!((grade - (-2.62)).abs() < 0.01, "grade {grade}");
    }

    #[test]
    fn grade_is_invariant_under_duplication() {
        let text = "The cat sat on the mat. The dog ran far away.";
        let once = passage_grade(text).unwrap();
        let twice = passage_grade(&format!("{text} {text}")).unwrap();
        assert!((once - twice).abs() < 1e-9);
    }

    #[test]
    fn grade_of_empty_text_is_an_error() {
        assert!(passage_grade("").is_err());
    }

    #[test]
    fn syllable_groups() {
        assert_eq!(count_syllables("cat"), 1);
        assert_eq!(count_syllables("thunder"), 2);
        assert_eq!(count_syllables("cumulonimbus"), 5);
        assert_eq!(count_syllables("rhythm"), 1);
        assert_eq!(count_syllables("5.9"), 1);
    }

    proptest! {
        #[test]
        fn tokenize_positions_are_dense_and_surfaces_nonempty(
            text in "[a-zA-Z0-9 .?!',-]{1,200}"
        ) {
            if let Ok(tokens) = tokenize(&text) {
                for (i, token) in tokens.iter().enumerate() {
                    prop_assert_eq!(token.position, i);
                    prop_assert!(!token.surface.is_empty());
                    prop_assert_eq!(token.surface.clone(), token.surface.to_lowercase());
                }
                for pair in tokens.windows(2) {
                    prop_assert!(pair[0].sentence_index <= pair[1].sentence_index);
                }
            }
        }

        #[test]
        fn mwe_units_always_partition_tokens(words in proptest::collection::vec("[a-c]{1,2}", 1..30)) {
            let lexicon = mwe_lexicon_of(&["a b", "b c", "a b c"]);
            let text = words.join(" ");
            if let Ok(tokens) = tokenize(&text) {
                let units = detect_mwes(&tokens, &lexicon);
                let mut cursor = 0usize;
                for unit in &units {
                    prop_assert_eq!(unit.token_span.0, cursor);
                    cursor = unit.token_span.1;
                    let joined = tokens[unit.token_span.0..unit.token_span.1]
                        .iter()
                        .map(|t| t.surface.as_str())
                        .collect::<Vec<_>>()
                        .join(" ");
                    prop_assert_eq!(&joined, &unit.surface);
                }
                prop_assert_eq!(cursor, tokens.len());
            }
        }
    }
}
