//! Finite lexicons of equal-length words and their text format.
//!
//! Format: one word per line, `#` starts a comment line, and an optional
//! `sigma=<n>` header overrides the alphabet size (otherwise the largest
//! symbol id used). Words are letters `a..z` or, when a line contains
//! digits, whitespace-separated decimal ids.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::mask::{precedes_word, AlphabetSet, Mask, Symbol, SymbolStyle, Word};
use crate::{MAX_SIGMA, MAX_WORD_LEN};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    words: Vec<Word>,
    k: usize,
    sigma: u32,
}

impl Lexicon {
    /// Builds a lexicon. `sigma` defaults to the largest symbol id used.
    pub fn new(words: Vec<Word>, sigma: Option<u32>) -> Result<Self> {
        let first = words.first().ok_or(Error::EmptyLexicon)?;
        let k = first.len();
        if k == 0 || k > MAX_WORD_LEN {
            return Err(Error::UnsupportedWordLength(k));
        }
        let used = words
            .iter()
            .flat_map(|w| w.symbols())
            .map(|s| s.id())
            .max()
            .unwrap_or(0);
        let sigma = sigma.unwrap_or(used);
        if sigma > MAX_SIGMA {
            return Err(Error::AlphabetTooLarge(sigma));
        }
        if used > sigma {
            return Err(Error::SymbolOutOfRange { id: used, sigma });
        }
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != k {
                return Err(Error::LengthMismatch {
                    left: k,
                    right: w.len(),
                });
            }
            if !seen.insert(w) {
                return Err(Error::DuplicateWord(SymbolStyle::for_sigma(sigma).word(w)));
            }
        }
        Ok(Lexicon { words, k, sigma })
    }

    /// Convenience constructor from letter strings such as `["abbc", "dddd"]`.
    pub fn from_letters<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let words = words
            .iter()
            .map(|w| Word::parse_letters(w.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Lexicon::new(words, None)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut sigma = None;
        let mut words = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(value) = line.strip_prefix("sigma=") {
                if !words.is_empty() || sigma.is_some() {
                    return Err(parse_error(line_no, "sigma header must precede all words"));
                }
                let n = value
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| parse_error(line_no, &format!("bad sigma value {value:?}")))?;
                sigma = Some(n);
                continue;
            }
            let word = parse_word(line).map_err(|message| parse_error(line_no, &message))?;
            if let Some(first) = words.first().map(Word::len) {
                if first != word.len() {
                    return Err(parse_error(
                        line_no,
                        &format!("word length {} differs from {first}", word.len()),
                    ));
                }
            }
            words.push(word);
        }
        Lexicon::new(words, sigma).map_err(|e| match e {
            Error::EmptyLexicon => Error::EmptyLexicon,
            other => Error::Parse {
                line: 0,
                message: other.to_string(),
            },
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, index: usize) -> &Word {
        &self.words[index]
    }

    /// Word length `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Alphabet size `σ`.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn style(&self) -> SymbolStyle {
        SymbolStyle::for_sigma(self.sigma)
    }

    pub fn alphabet(&self) -> AlphabetSet {
        AlphabetSet::full(self.sigma).expect("sigma validated at construction")
    }

    /// Symbols occurring in at least one word.
    pub fn used_symbols(&self) -> AlphabetSet {
        let mut set = AlphabetSet::empty(self.sigma).expect("sigma validated at construction");
        for s in self.words.iter().flat_map(|w| w.symbols()) {
            set.insert(*s).expect("symbols validated at construction");
        }
        set
    }

    pub fn position(&self, word: &Word) -> Option<usize> {
        self.words.iter().position(|w| w == word)
    }

    /// Serializes in the lexicon file format (round-trips through [`Lexicon::parse`]).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let used = self
            .words
            .iter()
            .flat_map(|w| w.symbols())
            .map(|s| s.id())
            .max()
            .unwrap_or(0);
        if used != self.sigma {
            out.push_str(&format!("sigma={}\n", self.sigma));
        }
        let style = self.style();
        for w in &self.words {
            out.push_str(&style.word(w));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_word(line: &str) -> std::result::Result<Word, String> {
    let symbols = if line.chars().any(|c| c.is_ascii_digit()) {
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .ok()
                    .and_then(|id| Symbol::new(id).ok())
                    .ok_or_else(|| format!("bad symbol token {tok:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?
    } else {
        line.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Symbol::from_letter(c).ok_or_else(|| format!("bad letter {c:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()?
    };
    Word::new(symbols).map_err(|e| e.to_string())
}

/// Indices of words `w` with `mask ⪯ w` and no guessed symbol in a blank cell of `mask`.
///
/// With an empty `guessed` set this is plain `{ w ∈ L | M ⪯ w }`.
pub fn consistent_set(lexicon: &Lexicon, mask: &Mask, guessed: &AlphabetSet) -> Result<Vec<usize>> {
    if mask.len() != lexicon.k() {
        return Err(Error::LengthMismatch {
            left: mask.len(),
            right: lexicon.k(),
        });
    }
    Ok(lexicon
        .words()
        .iter()
        .enumerate()
        .filter(|(_, w)| precedes_word(mask, w) && !hides_guessed(mask, w, guessed))
        .map(|(i, _)| i)
        .collect())
}

fn hides_guessed(mask: &Mask, word: &Word, guessed: &AlphabetSet) -> bool {
    mask.cells()
        .iter()
        .zip(word.symbols())
        .any(|(c, s)| c.is_none() && guessed.contains(*s))
}
