//! Text cleaning and clause splitting.
//!
//! Raw English text is normalized into lowercase word tokens (contractions
//! expanded, punctuation stripped), then segmented into clauses at
//! sentence-internal punctuation and at a fixed list of conjunctions.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use once_cell::sync::Lazy;
use unicode_normalization::UnicodeNormalization;

use crate::{Error, Result};

/// Maps contraction surface forms to their space-separated expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTable {
    map: BTreeMap<String, Vec<String>>,
}

/// Clause-boundary conjunctions. Tokens in `keep` are retained as the first
/// token of the clause they introduce; all other splitters are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitterTable {
    splitters: BTreeSet<String>,
    keep: BTreeSet<String>,
}

/// A cleaned sentence: lowercase word tokens plus the token positions where
/// sentence-internal punctuation marked a potential clause boundary.
///
/// A break value `b` means "boundary between `tokens[b-1]` and `tokens[b]`".
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CleanSentence {
    pub tokens: Vec<String>,
    pub breaks: Vec<usize>,
}

/// A contiguous clause of a [`CleanSentence`]. `source_span` is the
/// half-open token range in the parent sentence; tokens of the parent that
/// fall in no clause span are the removed boundary conjunctions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub tokens: Vec<String>,
    pub source_span: (usize, usize),
}

const BUNDLED_CONTRACTIONS: &str = include_str!("../data/contractions.tsv");
const BUNDLED_SPLITTERS: &str = include_str!("../data/splitters.txt");

/// Subordinators kept clause-initially; coordinators are dropped outright.
const DEFAULT_KEPT_SPLITTERS: [&str; 2] = ["if", "when"];

static BUNDLED_CONTRACTION_TABLE: Lazy<ContractionTable> = Lazy::new(|| {
    ContractionTable::parse(BUNDLED_CONTRACTIONS, Path::new("data/contractions.tsv"))
        .expect("bundled contraction table is valid")
});

static BUNDLED_SPLITTER_TABLE: Lazy<SplitterTable> = Lazy::new(|| {
    SplitterTable::parse(BUNDLED_SPLITTERS, Path::new("data/splitters.txt"))
        .expect("bundled splitter table is valid")
});

impl ContractionTable {
    /// The table shipped with the crate (~70 entries).
    pub fn bundled() -> &'static ContractionTable {
        &BUNDLED_CONTRACTION_TABLE
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ContractionTable> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    /// Parses `contraction<TAB>expansion` lines; `#`-prefixed lines are comments.
    pub fn parse(text: &str, path: &Path) -> Result<ContractionTable> {
        let mut map = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, expansion) = line.split_once('\t').ok_or_else(|| Error::MalformedLine {
                path: path.to_path_buf(),
                line: idx + 1,
                reason: "expected `contraction<TAB>expansion`".into(),
            })?;
            let words: Vec<String> = expansion
                .split_whitespace()
                .map(|w| w.to_lowercase())
                .collect();
            if key.is_empty() || words.is_empty() {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    reason: "empty contraction or expansion".into(),
                });
            }
            map.insert(key.to_lowercase(), words);
        }
        Ok(ContractionTable { map })
    }

    pub fn get(&self, token: &str) -> Option<&[String]> {
        self.map.get(token).map(Vec::as_slice)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.map.contains_key(token)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl SplitterTable {
    /// The conjunction list shipped with the crate.
    pub fn bundled() -> &'static SplitterTable {
        &BUNDLED_SPLITTER_TABLE
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SplitterTable> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    /// Parses one splitter token per line; `#`-prefixed lines are comments.
    /// The kept-subordinator set defaults to {"if", "when"} ∩ splitters.
    pub fn parse(text: &str, _path: &Path) -> Result<SplitterTable> {
        let splitters: BTreeSet<String> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.to_lowercase())
            .collect();
        let keep = DEFAULT_KEPT_SPLITTERS
            .iter()
            .map(|s| s.to_string())
            .filter(|s| splitters.contains(s))
            .collect();
        Ok(SplitterTable { splitters, keep })
    }

    /// Replaces the kept-subordinator set (restricted to known splitters).
    pub fn with_keep(mut self, keep: impl IntoIterator<Item = String>) -> SplitterTable {
        self.keep = keep
            .into_iter()
            .filter(|s| self.splitters.contains(s))
            .collect();
        self
    }

    pub fn is_splitter(&self, token: &str) -> bool {
        self.splitters.contains(token)
    }

    pub fn keeps(&self, token: &str) -> bool {
        self.keep.contains(token)
    }
}

/// Characters that mark a potential clause boundary when they appear between
/// words. Stripped from tokens in all cases.
fn is_break_char(c: char) -> bool {
    matches!(
        c,
        '.' | ','
            | ';'
            | ':'
            | '!'
            | '?'
            | '('
            | ')'
            | '['
            | ']'
            | '{'
            | '}'
            | '/'
            | '|'
            | '\u{2014}' // em dash
            | '\u{2013}' // en dash
            | '\u{2026}' // ellipsis
    )
}

/// Cleans raw text into lowercase tokens: Unicode NFC, lowercasing,
/// contraction expansion, punctuation stripping, whitespace collapsing.
/// Internal hyphens and a leading `#` marker survive; everything else
/// non-alphanumeric is removed. Total on any input; empty input gives an
/// empty token list.
pub fn clean_text(raw: &str, contractions: &ContractionTable) -> CleanSentence {
    let normalized: String = raw.nfc().collect::<String>().to_lowercase();
    let mapped: String = normalized
        .chars()
        .map(|c| match c {
            '\u{2019}' | '\u{2018}' | '`' => '\'',
            '\u{201c}' | '\u{201d}' | '\u{00ab}' | '\u{00bb}' => '"',
            _ => c,
        })
        .collect();

    let mut tokens: Vec<String> = Vec::new();
    let mut breaks: BTreeSet<usize> = BTreeSet::new();
    for chunk in mapped.split_whitespace() {
        let mut word = String::new();
        for c in chunk.chars() {
            if is_break_char(c) {
                emit_word(&word, contractions, &mut tokens);
                word.clear();
                breaks.insert(tokens.len());
            } else {
                word.push(c);
            }
        }
        emit_word(&word, contractions, &mut tokens);
    }
    let n = tokens.len();
    CleanSentence {
        tokens,
        breaks: breaks.into_iter().filter(|&b| b > 0 && b < n).collect(),
    }
}

/// Cleans one whitespace/punctuation-delimited word and appends the resulting
/// token(s), applying contraction expansion and possessive stripping.
fn emit_word(word: &str, contractions: &ContractionTable, tokens: &mut Vec<String>) {
    let filtered: String = word
        .chars()
        .filter(|&c| c.is_alphanumeric() || c == '\'' || c == '-' || c == '#')
        .collect();
    if filtered.is_empty() {
        return;
    }
    if let Some(expansion) = contractions.get(&filtered) {
        tokens.extend(expansion.iter().cloned());
        return;
    }
    let mut w = filtered;
    if w.ends_with("'s") {
        w.truncate(w.len() - 2);
    }
    w.retain(|c| c != '\'');
    let w = w.trim_matches('-');
    if w.is_empty() {
        return;
    }
    if let Some(rest) = w.strip_prefix('#') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_alphanumeric()) {
            tokens.push(w.to_string());
            return;
        }
    }
    let w: String = w.chars().filter(|&c| c != '#').collect();
    if !w.is_empty() {
        tokens.push(w);
    }
}

/// Splits a cleaned sentence into clauses at recorded punctuation breaks and
/// at splitter conjunctions. Kept subordinators ("if"/"when" by default)
/// start their clause; other splitters are removed. A nonempty sentence
/// always yields at least one clause.
pub fn split_into_clauses(sentence: &CleanSentence, splitters: &SplitterTable) -> Vec<Clause> {
    let n = sentence.tokens.len();
    let break_set: BTreeSet<usize> = sentence.breaks.iter().copied().collect();
    let mut clauses: Vec<Clause> = Vec::new();
    let mut cur: Vec<String> = Vec::new();
    let mut span_start = 0usize;

    let mut close = |cur: &mut Vec<String>, clauses: &mut Vec<Clause>, start: usize, end: usize| {
        if !cur.is_empty() {
            clauses.push(Clause {
                tokens: std::mem::take(cur),
                source_span: (start, end),
            });
        }
    };

    for (i, tok) in sentence.tokens.iter().enumerate() {
        if break_set.contains(&i) {
            close(&mut cur, &mut clauses, span_start, i);
        }
        if splitters.is_splitter(tok) {
            close(&mut cur, &mut clauses, span_start, i);
            if splitters.keeps(tok) {
                span_start = i;
                cur.push(tok.clone());
            }
        } else {
            if cur.is_empty() {
                span_start = i;
            }
            cur.push(tok.clone());
        }
    }
    close(&mut cur, &mut clauses, span_start, n);

    if clauses.is_empty() && n > 0 {
        clauses.push(Clause {
            tokens: sentence.tokens.clone(),
            source_span: (0, n),
        });
    }
    clauses
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clean(s: &str) -> Vec<String> {
        clean_text(s, ContractionTable::bundled()).tokens
    }

    #[test]
    fn expands_contractions_then_strips() {
        assert_eq!(clean("Don't go!"), ["do", "not", "go"]);
    }

    #[test]
    fn empty_input_yields_empty_tokens() {
        assert_eq!(clean(""), Vec::<String>::new());
        assert_eq!(clean("   \t  "), Vec::<String>::new());
    }

    #[test]
    fn lowercases_and_collapses_whitespace() {
        assert_eq!(clean("Hello,   WORLD."), ["hello", "world"]);
    }

    #[test]
    fn records_internal_breaks_only() {
        let s = clean_text("Hello,   WORLD.", ContractionTable::bundled());
        assert_eq!(s.breaks, [1]);
        let s = clean_text("One two.", ContractionTable::bundled());
        assert_eq!(s.breaks, Vec::<usize>::new());
    }

    #[test]
    fn keeps_hash_marker_and_internal_hyphen() {
        assert_eq!(clean("#TV is well-known."), ["#tv", "is", "well-known"]);
    }

    #[test]
    fn strips_possessives() {
        assert_eq!(clean("Emma's book"), ["emma", "book"]);
        assert_eq!(clean("the dogs' bowl"), ["the", "dogs", "bowl"]);
    }

    #[test]
    fn handles_typographic_quotes() {
        assert_eq!(clean("\u{201c}don\u{2019}t\u{201d}"), ["do", "not"]);
    }

    #[test]
    fn gonna_expands() {
        assert_eq!(clean("I'm gonna win"), ["i", "am", "going", "to", "win"]);
    }

    #[test]
    fn idempotent_on_clean_output() {
        for raw in [
            "Don't go!",
            "Hello,   WORLD.",
            "Emma's #TV — well-known… (yes)",
            "She said: \"it's fine\"",
        ] {
            let once = clean(raw);
            let again = clean(&once.join(" "));
            assert_eq!(once, again, "not idempotent for {raw:?}");
        }
    }

    fn split(tokens: &[&str], breaks: &[usize]) -> Vec<Vec<String>> {
        let s = CleanSentence {
            tokens: tokens.iter().map(|t| t.to_string()).collect(),
            breaks: breaks.to_vec(),
        };
        split_into_clauses(&s, SplitterTable::bundled())
            .into_iter()
            .map(|c| c.tokens)
            .collect()
    }

    #[test]
    fn coordinator_splits_and_is_dropped() {
        assert_eq!(
            split(&["i", "ate", "and", "i", "slept"], &[]),
            [vec!["i", "ate"], vec!["i", "slept"]]
        );
    }

    #[test]
    fn no_splitter_single_clause() {
        assert_eq!(
            split(&["yesterday", "i", "went", "to", "school"], &[]),
            [vec!["yesterday", "i", "went", "to", "school"]]
        );
    }

    #[test]
    fn subordinator_kept_clause_initially() {
        let s = clean_text("when she arrived, we left", ContractionTable::bundled());
        let clauses = split_into_clauses(&s, SplitterTable::bundled());
        let tokens: Vec<Vec<String>> = clauses.iter().map(|c| c.tokens.clone()).collect();
        assert_eq!(
            tokens,
            [vec!["when", "she", "arrived"], vec!["we", "left"]]
        );
        assert_eq!(clauses[0].source_span, (0, 3));
        assert_eq!(clauses[1].source_span, (3, 5));
    }

    #[test]
    fn clause_multiset_partition() {
        let table = SplitterTable::bundled();
        for raw in [
            "i ate and i slept",
            "and and and",
            "if it rains, we stay home, but he leaves",
            "so then we go",
        ] {
            let s = clean_text(raw, ContractionTable::bundled());
            let clauses = split_into_clauses(&s, table);
            let mut covered: Vec<String> = Vec::new();
            let mut spans: Vec<(usize, usize)> = Vec::new();
            for c in &clauses {
                covered.extend(c.tokens.iter().cloned());
                spans.push(c.source_span);
                let (a, b) = c.source_span;
                assert_eq!(&s.tokens[a..b], c.tokens.as_slice());
            }
            // spans are ordered and non-overlapping
            for w in spans.windows(2) {
                assert!(w[0].1 <= w[1].0);
            }
            // covered + removed == all tokens (removed = span gaps)
            let removed: usize = s.tokens.len() - covered.len();
            let gap_total: usize = {
                let mut gaps = 0;
                let mut pos = 0;
                for (a, b) in &spans {
                    gaps += a - pos;
                    pos = *b;
                }
                gaps + (s.tokens.len() - pos)
            };
            assert_eq!(removed, gap_total, "for {raw:?}");
            if !s.tokens.is_empty() {
                assert!(!clauses.is_empty(), "nonempty sentence must yield a clause");
            }
        }
    }

    #[test]
    fn all_splitter_sentence_falls_back_to_single_clause() {
        assert_eq!(split(&["and"], &[]), [vec!["and"]]);
    }
}
