//! The curated ASL vocabulary and the word-category tables that drive gloss
//! extraction, plus suffix/irregular lemmatization.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use once_cell::sync::Lazy;

use crate::{Error, Result};

/// The single category assigned to every token (priority order fixed:
/// Temporal > Wh > Pronoun > Function > Verb > Descriptor > Noun > Unknown).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum WordCategory {
    Temporal,
    Wh,
    Pronoun,
    Verb,
    Descriptor,
    Noun,
    Function,
    Unknown,
}

/// Curated sign vocabulary plus category tables.
///
/// `vocabulary` holds every signable word: plain `vocab` entries, the members
/// of the temporal/wh/pronoun/verb/descriptor tables, and the keys of the
/// lexicalized map. Function words are never signable and stay disjoint from
/// `vocabulary`. The irregular-form map (inflected surface → lemma) is loaded
/// from a companion table, not the lexicon file; loaders attach the bundled
/// one so that lexicon save/load round-trips field-for-field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    vocabulary: BTreeSet<String>,
    temporal_words: BTreeSet<String>,
    wh_words: BTreeSet<String>,
    pronouns: BTreeSet<String>,
    verbs: BTreeSet<String>,
    descriptors: BTreeSet<String>,
    function_words: BTreeSet<String>,
    lexicalized: BTreeMap<String, String>,
    irregular: BTreeMap<String, String>,
}

/// A loaded lexicon plus load diagnostics.
#[derive(Debug, Clone)]
pub struct LexiconLoad {
    pub lexicon: Lexicon,
    /// Lines skipped because the word already had a category (first wins).
    pub duplicates: usize,
}

const BUNDLED_LEXICON: &str = include_str!("../data/lexicon.tsv");
const BUNDLED_IRREGULAR: &str = include_str!("../data/irregular-forms.tsv");

static BUNDLED: Lazy<Lexicon> = Lazy::new(|| {
    Lexicon::parse(BUNDLED_LEXICON, Path::new("data/lexicon.tsv"))
        .expect("bundled lexicon is valid")
        .lexicon
});

static BUNDLED_IRREGULAR_MAP: Lazy<BTreeMap<String, String>> = Lazy::new(|| {
    parse_irregular(BUNDLED_IRREGULAR, Path::new("data/irregular-forms.tsv"))
        .expect("bundled irregular-form table is valid")
});

fn parse_irregular(text: &str, path: &Path) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (from, to) = line.split_once('\t').ok_or_else(|| Error::MalformedLine {
            path: path.to_path_buf(),
            line: idx + 1,
            reason: "expected `surface<TAB>lemma`".into(),
        })?;
        map.insert(from.trim().to_lowercase(), to.trim().to_lowercase());
    }
    Ok(map)
}

impl Lexicon {
    /// The ~2000-word lexicon shipped with the crate.
    pub fn bundled() -> &'static Lexicon {
        &BUNDLED
    }

    /// Loads a lexicon file (see crate docs for the line format) and attaches
    /// the bundled irregular-form table.
    pub fn load(path: impl AsRef<Path>) -> Result<LexiconLoad> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    /// Parses lexicon text: one `word<TAB>category[<TAB>canonical]` entry per
    /// line, categories `vocab|temporal|wh|pronoun|verb|descriptor|function|
    /// lexicalized` (lexicalized lines require the canonical `#`-form).
    /// `#`-prefixed lines are comments. The first category seen for a word
    /// wins; later entries count as duplicates.
    pub fn parse(text: &str, path: &Path) -> Result<LexiconLoad> {
        let mut lex = Lexicon {
            vocabulary: BTreeSet::new(),
            temporal_words: BTreeSet::new(),
            wh_words: BTreeSet::new(),
            pronouns: BTreeSet::new(),
            verbs: BTreeSet::new(),
            descriptors: BTreeSet::new(),
            function_words: BTreeSet::new(),
            lexicalized: BTreeMap::new(),
            irregular: BUNDLED_IRREGULAR_MAP.clone(),
        };
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut duplicates = 0usize;

        for (idx, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::MalformedLine {
                path: path.to_path_buf(),
                line: idx + 1,
                reason: reason.into(),
            };
            let mut fields = line.split('\t');
            let word = fields.next().unwrap_or("").trim().to_lowercase();
            let category = fields.next().unwrap_or("").trim();
            let canonical = fields.next().map(str::trim);
            if fields.next().is_some() {
                return Err(bad("too many fields"));
            }
            if word.is_empty() || category.is_empty() {
                return Err(bad("expected `word<TAB>category[<TAB>canonical]`"));
            }
            if !seen.insert(word.clone()) {
                duplicates += 1;
                continue;
            }
            match (category, canonical) {
                ("lexicalized", Some(canon)) => {
                    let rest = canon.strip_prefix('#').ok_or_else(|| {
                        bad("lexicalized canonical form must start with `#`")
                    })?;
                    if rest.is_empty()
                        || !rest
                            .chars()
                            .all(|c| c.is_ascii_uppercase() || c.is_ascii_digit())
                    {
                        return Err(bad(
                            "lexicalized canonical form must be `#` + uppercase letters/digits",
                        ));
                    }
                    lex.lexicalized.insert(word.clone(), canon.to_string());
                    lex.vocabulary.insert(word);
                }
                ("lexicalized", None) => {
                    return Err(bad("lexicalized entry is missing its canonical form"))
                }
                (_, Some(_)) => return Err(bad("unexpected third field")),
                ("vocab", None) => {
                    lex.vocabulary.insert(word);
                }
                ("temporal", None) => {
                    lex.temporal_words.insert(word.clone());
                    lex.vocabulary.insert(word);
                }
                ("wh", None) => {
                    lex.wh_words.insert(word.clone());
                    lex.vocabulary.insert(word);
                }
                ("pronoun", None) => {
                    lex.pronouns.insert(word.clone());
                    lex.vocabulary.insert(word);
                }
                ("verb", None) => {
                    lex.verbs.insert(word.clone());
                    lex.vocabulary.insert(word);
                }
                ("descriptor", None) => {
                    lex.descriptors.insert(word.clone());
                    lex.vocabulary.insert(word);
                }
                ("function", None) => {
                    lex.function_words.insert(word);
                }
                (other, None) => return Err(bad(&format!("unknown category `{other}`"))),
            }
        }
        if lex.vocabulary.is_empty() {
            return Err(Error::EmptyLexicon);
        }
        Ok(LexiconLoad {
            lexicon: lex,
            duplicates,
        })
    }

    /// Serializes back to the lexicon file format (sorted, category lines
    /// first, residual vocab lines, then lexicalized lines). `load(save(x))`
    /// equals `x` field-for-field.
    pub fn to_file_string(&self) -> String {
        let mut out = String::from("# word<TAB>category[<TAB>canonical]\n");
        let sections: [(&BTreeSet<String>, &str); 6] = [
            (&self.temporal_words, "temporal"),
            (&self.wh_words, "wh"),
            (&self.pronouns, "pronoun"),
            (&self.verbs, "verb"),
            (&self.descriptors, "descriptor"),
            (&self.function_words, "function"),
        ];
        for (set, name) in sections {
            for w in set {
                out.push_str(w);
                out.push('\t');
                out.push_str(name);
                out.push('\n');
            }
        }
        for w in &self.vocabulary {
            let categorized = self.temporal_words.contains(w)
                || self.wh_words.contains(w)
                || self.pronouns.contains(w)
                || self.verbs.contains(w)
                || self.descriptors.contains(w)
                || self.lexicalized.contains_key(w);
            if !categorized {
                out.push_str(w);
                out.push_str("\tvocab\n");
            }
        }
        for (w, canon) in &self.lexicalized {
            out.push_str(w);
            out.push_str("\tlexicalized\t");
            out.push_str(canon);
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_file_string()).map_err(|e| Error::UnwritableOutput {
            path: path.to_path_buf(),
            source: e,
        })
    }

    pub fn vocabulary(&self) -> &BTreeSet<String> {
        &self.vocabulary
    }
    pub fn temporal_words(&self) -> &BTreeSet<String> {
        &self.temporal_words
    }
    pub fn wh_words(&self) -> &BTreeSet<String> {
        &self.wh_words
    }
    pub fn pronouns(&self) -> &BTreeSet<String> {
        &self.pronouns
    }
    pub fn verbs(&self) -> &BTreeSet<String> {
        &self.verbs
    }
    pub fn descriptors(&self) -> &BTreeSet<String> {
        &self.descriptors
    }
    pub fn function_words(&self) -> &BTreeSet<String> {
        &self.function_words
    }
    pub fn lexicalized(&self) -> &BTreeMap<String, String> {
        &self.lexicalized
    }
    pub fn irregular(&self) -> &BTreeMap<String, String> {
        &self.irregular
    }

    /// Direct table membership in priority order; no lemmatization.
    fn direct(&self, word: &str) -> Option<WordCategory> {
        if self.temporal_words.contains(word) {
            Some(WordCategory::Temporal)
        } else if self.wh_words.contains(word) {
            Some(WordCategory::Wh)
        } else if self.pronouns.contains(word) {
            Some(WordCategory::Pronoun)
        } else if self.function_words.contains(word) {
            Some(WordCategory::Function)
        } else if self.verbs.contains(word) {
            Some(WordCategory::Verb)
        } else if self.descriptors.contains(word) {
            Some(WordCategory::Descriptor)
        } else if self.vocabulary.contains(word) {
            Some(WordCategory::Noun)
        } else {
            None
        }
    }

    /// Resolves a token to `(lemma, category)`. Pass 1 checks the tables
    /// directly; pass 2 tries lemma candidates (irregular table first, then
    /// suffix stripping) and returns the first candidate found in any table.
    /// All-digit tokens are Nouns (number signs). Everything else is Unknown.
    pub fn resolve<'w>(&self, word: &'w str) -> (Cow<'w, str>, WordCategory) {
        if let Some(cat) = self.direct(word) {
            return (Cow::Borrowed(word), cat);
        }
        if !word.is_empty() && word.chars().all(|c| c.is_ascii_digit()) {
            return (Cow::Borrowed(word), WordCategory::Noun);
        }
        for cand in lemma_candidates(word, &self.irregular) {
            if let Some(cat) = self.direct(&cand) {
                return (Cow::Owned(cand), cat);
            }
        }
        (Cow::Borrowed(word), WordCategory::Unknown)
    }

    /// Total, deterministic single-category classification.
    pub fn classify(&self, word: &str) -> WordCategory {
        self.resolve(word).1
    }
}

/// Ordered lemma candidates for an inflected surface form.
fn lemma_candidates(word: &str, irregular: &BTreeMap<String, String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    if let Some(lemma) = irregular.get(word) {
        out.push(lemma.clone());
    }
    let n = word.len();
    let push_stem_variants = |out: &mut Vec<String>, stem: &str| {
        // try stem+e first (hoped→hope before hop), then the raw stem, then
        // the consonant-undoubled stem (stopped→stop)
        out.push(format!("{stem}e"));
        out.push(stem.to_string());
        let b = stem.as_bytes();
        if b.len() >= 3 && b[b.len() - 1] == b[b.len() - 2] && !is_vowel(b[b.len() - 1]) {
            out.push(stem[..stem.len() - 1].to_string());
        }
    };
    if !word.is_ascii() {
        return out;
    }
    if n > 4 && word.ends_with("ies") {
        out.push(format!("{}y", &word[..n - 3]));
    }
    if n > 4 && word.ends_with("ied") {
        out.push(format!("{}y", &word[..n - 3]));
    }
    if n > 3 && word.ends_with("es") {
        let stem = &word[..n - 2];
        if stem.ends_with('s')
            || stem.ends_with('x')
            || stem.ends_with('z')
            || stem.ends_with('o')
            || stem.ends_with("ch")
            || stem.ends_with("sh")
        {
            out.push(stem.to_string());
        }
    }
    if n > 3 && word.ends_with('s') && !word.ends_with("ss") {
        out.push(word[..n - 1].to_string());
    }
    if n >= 5 && word.ends_with("ing") {
        push_stem_variants(&mut out, &word[..n - 3]);
    }
    if n >= 4 && word.ends_with("ed") {
        push_stem_variants(&mut out, &word[..n - 2]);
    }
    if n >= 5 && word.ends_with("est") {
        push_stem_variants(&mut out, &word[..n - 3]);
    }
    if n >= 4 && word.ends_with("er") {
        push_stem_variants(&mut out, &word[..n - 2]);
    }
    if n >= 5 && word.ends_with("ily") {
        out.push(format!("{}y", &word[..n - 3]));
    }
    if n >= 4 && word.ends_with("ly") {
        out.push(word[..n - 2].to_string());
    }
    out
}

fn is_vowel(b: u8) -> bool {
    matches!(b, b'a' | b'e' | b'i' | b'o' | b'u')
}

/// Builder for constructing lexicon fixtures programmatically.
#[derive(Debug, Default, Clone)]
pub struct LexiconBuilder {
    temporal: Vec<String>,
    wh: Vec<String>,
    pronouns: Vec<String>,
    verbs: Vec<String>,
    descriptors: Vec<String>,
    nouns: Vec<String>,
    function: Vec<String>,
    lexicalized: Vec<(String, String)>,
    irregular: Vec<(String, String)>,
}

impl LexiconBuilder {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn temporal(mut self, words: &[&str]) -> Self {
        self.temporal.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn wh(mut self, words: &[&str]) -> Self {
        self.wh.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn pronouns(mut self, words: &[&str]) -> Self {
        self.pronouns.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn verbs(mut self, words: &[&str]) -> Self {
        self.verbs.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn descriptors(mut self, words: &[&str]) -> Self {
        self.descriptors.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn nouns(mut self, words: &[&str]) -> Self {
        self.nouns.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn function(mut self, words: &[&str]) -> Self {
        self.function.extend(words.iter().map(|w| w.to_string()));
        self
    }
    pub fn lexicalized(mut self, word: &str, canonical: &str) -> Self {
        self.lexicalized
            .push((word.to_string(), canonical.to_string()));
        self
    }
    pub fn irregular(mut self, surface: &str, lemma: &str) -> Self {
        self.irregular.push((surface.to_string(), lemma.to_string()));
        self
    }

    /// Builds a [`Lexicon`]. Unlike the file loader, the builder allows a
    /// word in several category tables (used to test classification
    /// priority); it still rejects an empty vocabulary and function words
    /// that overlap signable entries.
    pub fn build(self) -> Result<Lexicon> {
        let mut lex = Lexicon {
            vocabulary: BTreeSet::new(),
            temporal_words: self.temporal.iter().map(|w| w.to_lowercase()).collect(),
            wh_words: self.wh.iter().map(|w| w.to_lowercase()).collect(),
            pronouns: self.pronouns.iter().map(|w| w.to_lowercase()).collect(),
            verbs: self.verbs.iter().map(|w| w.to_lowercase()).collect(),
            descriptors: self.descriptors.iter().map(|w| w.to_lowercase()).collect(),
            function_words: self.function.iter().map(|w| w.to_lowercase()).collect(),
            lexicalized: self
                .lexicalized
                .iter()
                .map(|(w, c)| (w.to_lowercase(), c.clone()))
                .collect(),
            irregular: self
                .irregular
                .iter()
                .map(|(s, l)| (s.to_lowercase(), l.to_lowercase()))
                .collect(),
        };
        for set in [
            &lex.temporal_words,
            &lex.wh_words,
            &lex.pronouns,
            &lex.verbs,
            &lex.descriptors,
        ] {
            lex.vocabulary.extend(set.iter().cloned());
        }
        lex.vocabulary
            .extend(self.nouns.iter().map(|w| w.to_lowercase()));
        lex.vocabulary
            .extend(lex.lexicalized.keys().cloned());
        if lex.vocabulary.is_empty() {
            return Err(Error::EmptyLexicon);
        }
        if let Some(w) = lex.function_words.intersection(&lex.vocabulary).next() {
            return Err(Error::Config {
                reason: format!("function word `{w}` overlaps the signable vocabulary"),
            });
        }
        Ok(lex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lexicon_loads_within_bounds() {
        let lex = Lexicon::bundled();
        assert!(!lex.vocabulary.is_empty());
        assert!(lex.vocabulary.len() <= 10_000);
        // target ≈ 2000 signable words
        assert!(lex.vocabulary.len() >= 1_500 && lex.vocabulary.len() <= 3_000);
        assert!(lex
            .function_words
            .intersection(&lex.vocabulary)
            .next()
            .is_none());
        for canon in lex.lexicalized.values() {
            let rest = canon.strip_prefix('#').expect("canonical starts with #");
            assert!(rest
                .chars()
                .all(|c| c.is_ascii_uppercase() || c.is_ascii_digit()));
        }
    }

    #[test]
    fn classify_examples() {
        let lex = Lexicon::bundled();
        assert_eq!(lex.classify("yesterday"), WordCategory::Temporal);
        assert_eq!(lex.classify("the"), WordCategory::Function);
        assert_eq!(lex.classify("zxqv"), WordCategory::Unknown);
        assert_eq!(lex.classify("where"), WordCategory::Wh);
        assert_eq!(lex.classify("i"), WordCategory::Pronoun);
        assert_eq!(lex.classify("go"), WordCategory::Verb);
        assert_eq!(lex.classify("happy"), WordCategory::Descriptor);
        assert_eq!(lex.classify("school"), WordCategory::Noun);
        assert_eq!(lex.classify("tv"), WordCategory::Noun);
        assert_eq!(lex.classify("3"), WordCategory::Noun);
    }

    #[test]
    fn resolve_lemmatizes() {
        let lex = Lexicon::bundled();
        let cases = [
            ("went", "go", WordCategory::Verb),
            ("watches", "watch", WordCategory::Verb),
            ("arrived", "arrive", WordCategory::Verb),
            ("children", "child", WordCategory::Noun),
            ("apples", "apple", WordCategory::Noun),
            ("studies", "study", WordCategory::Verb),
            ("running", "run", WordCategory::Verb),
            ("hoped", "hope", WordCategory::Verb),
            ("bigger", "big", WordCategory::Descriptor),
            ("happily", "happy", WordCategory::Descriptor),
            ("quickly", "quick", WordCategory::Descriptor),
            ("better", "good", WordCategory::Descriptor),
            ("news", "news", WordCategory::Noun),
            ("left", "leave", WordCategory::Verb),
        ];
        for (word, lemma, cat) in cases {
            let (l, c) = lex.resolve(word);
            assert_eq!((l.as_ref(), c), (lemma, cat), "for {word:?}");
        }
    }

    #[test]
    fn empty_lexicon_rejected() {
        let err = Lexicon::parse("", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::EmptyLexicon));
        let err = Lexicon::parse("the\tfunction\n", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::EmptyLexicon));
    }

    #[test]
    fn malformed_lines_reported_with_number() {
        let err = Lexicon::parse("cat\tvocab\ndog\tnocategory\n", Path::new("x.tsv")).unwrap_err();
        match err {
            Error::MalformedLine { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        let err = Lexicon::parse("tv\tlexicalized\n", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 1, .. }));
        let err = Lexicon::parse("tv\tlexicalized\ttv\n", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { .. }));
    }

    #[test]
    fn lexicalized_line_parses() {
        let load = Lexicon::parse("tv\tlexicalized\t#TV\n", Path::new("x.tsv")).unwrap();
        assert_eq!(load.lexicon.lexicalized()["tv"], "#TV");
        assert!(load.lexicon.vocabulary().contains("tv"));
    }

    #[test]
    fn duplicates_counted_first_wins() {
        let text = "cat\tvocab\ncat\tverb\ncat\tvocab\n";
        let load = Lexicon::parse(text, Path::new("x.tsv")).unwrap();
        assert_eq!(load.duplicates, 2);
        assert_eq!(load.lexicon.classify("cat"), WordCategory::Noun);
    }

    #[test]
    fn save_load_round_trip_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lex.tsv");
        let original = Lexicon::bundled();
        original.save(&path).unwrap();
        let reloaded = Lexicon::load(&path).unwrap();
        assert_eq!(reloaded.duplicates, 0);
        assert_eq!(&reloaded.lexicon, original);
    }

    #[test]
    fn priority_temporal_beats_verb() {
        let lex = LexiconBuilder::new()
            .temporal(&["spring"])
            .verbs(&["spring"])
            .build()
            .unwrap();
        assert_eq!(lex.classify("spring"), WordCategory::Temporal);
    }

    #[test]
    fn builder_rejects_function_vocab_overlap() {
        let err = LexiconBuilder::new()
            .verbs(&["go"])
            .function(&["go"])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Config { .. }));
    }
}
