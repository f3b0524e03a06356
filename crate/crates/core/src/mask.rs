//! Symbols, masks and the mask algebra.
//!
//! A [`Mask`] is a length-`k` row of cells, each either a revealed [`Symbol`]
//! or blank. A [`Word`] is a mask without blanks. Positions handed across the
//! public API are carried in [`Positions`], a bitset of zero-based indices
//! that prints one-based (`{1,3}`).

use std::fmt;
use std::num::NonZeroU8;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{MAX_SIGMA, MAX_WORD_LEN};

/// A letter of the alphabet `[1..σ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Symbol(NonZeroU8);

impl Symbol {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 || id > MAX_SIGMA {
            return Err(Error::SymbolOutOfRange { id, sigma: MAX_SIGMA });
        }
        Ok(Symbol(NonZeroU8::new(id as u8).expect("id checked non-zero")))
    }

    pub fn id(self) -> u32 {
        u32::from(self.0.get())
    }

    /// Zero-based bit index of this symbol inside an [`AlphabetSet`].
    pub(crate) fn bit(self) -> u32 {
        self.id() - 1
    }

    /// Maps `a..=z` to `1..=26`.
    pub fn from_letter(c: char) -> Option<Self> {
        c.is_ascii_lowercase()
            .then(|| Symbol::new(u32::from(c) - u32::from('a') + 1).ok())
            .flatten()
    }

    pub fn letter(self) -> Option<char> {
        (self.id() <= 26).then(|| char::from(b'a' + self.0.get() - 1))
    }
}

impl TryFrom<u32> for Symbol {
    type Error = Error;

    fn try_from(id: u32) -> Result<Self> {
        Symbol::new(id)
    }
}

impl From<Symbol> for u32 {
    fn from(s: Symbol) -> u32 {
        s.id()
    }
}

/// External text form of symbols: letters when `σ ≤ 26`, decimal tokens above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolStyle {
    Letters,
    Numeric,
}

impl SymbolStyle {
    pub fn for_sigma(sigma: u32) -> Self {
        if sigma <= 26 {
            SymbolStyle::Letters
        } else {
            SymbolStyle::Numeric
        }
    }

    pub fn symbol(self, s: Symbol) -> String {
        match (self, s.letter()) {
            (SymbolStyle::Letters, Some(c)) => c.to_string(),
            _ => s.id().to_string(),
        }
    }

    pub fn parse_symbol(self, text: &str) -> Option<Symbol> {
        let text = text.trim();
        match self {
            SymbolStyle::Letters => {
                let mut chars = text.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Symbol::from_letter(c),
                    _ => None,
                }
            }
            SymbolStyle::Numeric => text.parse::<u32>().ok().and_then(|id| Symbol::new(id).ok()),
        }
    }

    /// Renders a mask; blanks print as `_`. Numeric style separates cells with spaces.
    pub fn mask(self, mask: &Mask) -> String {
        let cell = |c: &Option<Symbol>| match c {
            Some(s) => self.symbol(*s),
            None => "_".to_string(),
        };
        match self {
            SymbolStyle::Letters => mask.cells().iter().map(cell).collect(),
            SymbolStyle::Numeric => mask.cells().iter().map(cell).collect::<Vec<_>>().join(" "),
        }
    }

    pub fn word(self, word: &Word) -> String {
        self.mask(&word.to_mask())
    }
}

/// Set of symbols over `[1..σ]`, stored as a bitset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlphabetSet {
    bits: u128,
    sigma: u32,
}

impl AlphabetSet {
    pub fn empty(sigma: u32) -> Result<Self> {
        if sigma > MAX_SIGMA {
            return Err(Error::AlphabetTooLarge(sigma));
        }
        Ok(AlphabetSet { bits: 0, sigma })
    }

    pub fn full(sigma: u32) -> Result<Self> {
        let mut set = AlphabetSet::empty(sigma)?;
        set.bits = low_bits(sigma);
        Ok(set)
    }

    pub fn capacity(&self) -> u32 {
        self.sigma
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub(crate) fn from_bits(bits: u128, sigma: u32) -> Self {
        debug_assert_eq!(bits & !low_bits(sigma), 0);
        AlphabetSet { bits, sigma }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.id() <= self.sigma && self.bits >> s.bit() & 1 == 1
    }

    pub fn insert(&mut self, s: Symbol) -> Result<bool> {
        self.check(s)?;
        let had = self.contains(s);
        self.bits |= 1 << s.bit();
        Ok(!had)
    }

    pub fn remove(&mut self, s: Symbol) -> bool {
        let had = self.contains(s);
        if had {
            self.bits &= !(1 << s.bit());
        }
        had
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        let bits = self.bits;
        (0..self.sigma)
            .filter(move |b| bits >> b & 1 == 1)
            .map(|b| Symbol(NonZeroU8::new(b as u8 + 1).expect("bit + 1 is non-zero")))
    }

    pub fn complement(&self) -> AlphabetSet {
        AlphabetSet {
            bits: !self.bits & low_bits(self.sigma),
            sigma: self.sigma,
        }
    }

    fn check(&self, s: Symbol) -> Result<()> {
        if s.id() > self.sigma {
            return Err(Error::SymbolOutOfRange {
                id: s.id(),
                sigma: self.sigma,
            });
        }
        Ok(())
    }
}

fn low_bits(n: u32) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// A set of word positions. Stored zero-based; displayed one-based.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Positions(u64);

impl Positions {
    pub const EMPTY: Positions = Positions(0);

    pub fn from_bits(bits: u64) -> Self {
        Positions(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from one-based positions, checking each against `k`.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(positions: I, k: usize) -> Result<Self> {
        let mut bits = 0u64;
        for p in positions {
            if p == 0 || p > k || p > MAX_WORD_LEN {
                return Err(Error::PositionOutOfRange { position: p, k });
            }
            bits |= 1 << (p - 1);
        }
        Ok(Positions(bits))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Positions) -> bool {
        self.0 & !other.0 == 0
    }

    /// Zero-based indices, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn one_based(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// Every subset of `self`, in increasing bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = Positions> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Positions(cur))
        })
    }

    /// Global reveal-set preference: fewer positions first, then the
    /// lexicographically smaller sorted position list.
    pub fn tie_break_cmp(self, other: Positions) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl fmt::Display for Positions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.one_based().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// The guesser's knowledge: each cell is a revealed symbol or blank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    cells: Vec<Option<Symbol>>,
}

impl Mask {
    pub fn new(cells: Vec<Option<Symbol>>) -> Result<Self> {
        if cells.is_empty() || cells.len() > MAX_WORD_LEN {
            return Err(Error::UnsupportedWordLength(cells.len()));
        }
        Ok(Mask { cells })
    }

    /// The all-blank mask of length `k`.
    pub fn blank(k: usize) -> Result<Self> {
        Mask::new(vec![None; k])
    }

    /// Parses letters and `_` (e.g. `"_u_"`).
    pub fn parse_letters(text: &str) -> Result<Self> {
        let cells = text
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '_' => Ok(None),
                c => Symbol::from_letter(c).map(Some).ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("bad mask character {c:?} at column {}", i + 1),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Mask::new(cells)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Option<Symbol>] {
        &self.cells
    }

    pub fn get(&self, index: usize) -> Option<Symbol> {
        self.cells.get(index).copied().flatten()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// Converts a blank-free mask into a [`Word`].
    pub fn to_word(&self) -> Option<Word> {
        self.cells
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(|symbols| Word { symbols })
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.cells.iter().flatten().map(|s| s.id()).max().unwrap_or(0);
        f.write_str(&SymbolStyle::for_sigma(max).mask(self))
    }
}

/// A fully revealed word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() || symbols.len() > MAX_WORD_LEN {
            return Err(Error::UnsupportedWordLength(symbols.len()));
        }
        Ok(Word { symbols })
    }

    pub fn parse_letters(text: &str) -> Result<Self> {
        Mask::parse_letters(text)?.to_word().ok_or(Error::Parse {
            line: 1,
            message: format!("word {text:?} contains blanks"),
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn to_mask(&self) -> Mask {
        Mask {
            cells: self.symbols.iter().copied().map(Some).collect(),
        }
    }

    /// Positions (zero-based bits) holding `s`.
    pub fn occurrences(&self, s: Symbol) -> Positions {
        let mut p = Positions::EMPTY;
        for (i, &c) in self.symbols.iter().enumerate() {
            if c == s {
                p.insert(i);
            }
        }
        p
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_mask().fmt(f)
    }
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { left: a, right: b });
    }
    Ok(())
}

/// `a ⪯ b`: every cell of `a` is blank or equals the same cell of `b`.
pub fn precedes(a: &Mask, b: &Mask) -> Result<bool> {
    same_len(a.len(), b.len())?;
    Ok(a.cells.iter().zip(&b.cells).all(|(x, y)| x.is_none() || x == y))
}

/// Word variant of [`precedes`] without the length check.
pub(crate) fn precedes_word(mask: &Mask, word: &Word) -> bool {
    mask.cells
        .iter()
        .zip(&word.symbols)
        .all(|(c, w)| c.is_none_or(|c| c == *w))
}

/// `a ⊕ b`: fills every blank of `a` from `b`.
pub fn overlay(a: &Mask, b: &Mask) -> Result<Mask> {
    same_len(a.len(), b.len())?;
    let cells = a.cells.iter().zip(&b.cells).map(|(x, y)| x.or(*y)).collect();
    Ok(Mask { cells })
}

/// `a ∩ b`: keeps the cells where `a` and `b` agree.
pub fn meet(a: &Mask, b: &Mask) -> Result<Mask> {
    same_len(a.len(), b.len())?;
    let cells = a
        .cells
        .iter()
        .zip(&b.cells)
        .map(|(x, y)| if x == y { *x } else { None })
        .collect();
    Ok(Mask { cells })
}

/// Honest reveal: `M ⊕ (w ∩ s^k)`.
pub fn reveal_with_word(mask: &Mask, word: &Word, s: Symbol) -> Result<Mask> {
    same_len(mask.len(), word.len())?;
    if !precedes_word(mask, word) {
        return Err(Error::NotConsistent);
    }
    let all = Positions::from_bits(low_bits(word.len() as u32) as u64);
    let sk = pattern_mask(s, all, word.len())?;
    overlay(mask, &meet(&word.to_mask(), &sk)?)
}

/// Blank positions of `mask`.
pub fn blanks(mask: &Mask) -> Positions {
    let mut p = Positions::EMPTY;
    for (i, c) in mask.cells.iter().enumerate() {
        if c.is_none() {
            p.insert(i);
        }
    }
    p
}

/// `s^B`: `s` at the positions in `positions`, blank elsewhere.
pub fn pattern_mask(s: Symbol, positions: Positions, k: usize) -> Result<Mask> {
    if k == 0 || k > MAX_WORD_LEN {
        return Err(Error::UnsupportedWordLength(k));
    }
    if let Some(bad) = positions.indices().find(|&i| i >= k) {
        return Err(Error::PositionOutOfRange { position: bad + 1, k });
    }
    let cells = (0..k).map(|i| positions.contains(i).then_some(s)).collect();
    Ok(Mask { cells })
}
