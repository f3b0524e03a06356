//! Game state and the turn transition.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lexicon::{consistent_set, Lexicon};
use crate::mask::{blanks, overlay, pattern_mask, AlphabetSet, Mask, Positions, Symbol};

/// One guess and the positions revealed in answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Turn {
    pub guess: Symbol,
    pub reveal: Positions,
}

impl Turn {
    pub fn failed(&self) -> bool {
        self.reveal.is_empty()
    }
}

/// A set of consistent words sharing one occurrence pattern of a guessed symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevealClass {
    pub reveal: Positions,
    pub words: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    lexicon: Arc<Lexicon>,
    mask: Mask,
    remaining: AlphabetSet,
    failed: u32,
    consistent: Vec<usize>,
}

impl GameState {
    /// Fresh game: all-blank mask, full alphabet, every word consistent.
    pub fn new(lexicon: Arc<Lexicon>) -> Self {
        let mask = Mask::blank(lexicon.k()).expect("lexicon word length validated");
        let remaining = lexicon.alphabet();
        let consistent = (0..lexicon.len()).collect();
        GameState {
            lexicon,
            mask,
            remaining,
            failed: 0,
            consistent,
        }
    }

    /// Rebuilds a state from a mask and the guessed set, recomputing the consistent words.
    pub fn from_parts(lexicon: Arc<Lexicon>, mask: Mask, guessed: AlphabetSet, failed: u32) -> Result<Self> {
        if guessed.capacity() != lexicon.sigma() {
            return Err(Error::InvalidParameter(
                "guessed set capacity differs from sigma".into(),
            ));
        }
        let consistent = consistent_set(&lexicon, &mask, &guessed)?;
        if consistent.is_empty() {
            return Err(Error::InconsistentAnswer);
        }
        Ok(GameState {
            remaining: guessed.complement(),
            lexicon,
            mask,
            failed,
            consistent,
        })
    }

    pub fn lexicon(&self) -> &Arc<Lexicon> {
        &self.lexicon
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn remaining(&self) -> AlphabetSet {
        self.remaining
    }

    pub fn guessed(&self) -> AlphabetSet {
        self.remaining.complement()
    }

    pub fn failed(&self) -> u32 {
        self.failed
    }

    /// Indices into the lexicon, ascending.
    pub fn consistent(&self) -> &[usize] {
        &self.consistent
    }

    pub fn blanks(&self) -> Positions {
        blanks(&self.mask)
    }

    pub fn is_solved(&self) -> bool {
        self.mask.is_complete()
    }

    /// Partitions the consistent words by where `s` occurs among the blanks.
    ///
    /// Classes come back in tie-break order of their reveal sets.
    pub fn classes(&self, s: Symbol) -> Vec<RevealClass> {
        let open = self.blanks();
        let mut by_pattern: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for &i in &self.consistent {
            let hit = self.lexicon.word(i).occurrences(s).bits() & open.bits();
            by_pattern.entry(hit).or_default().push(i);
        }
        let mut classes: Vec<_> = by_pattern
            .into_iter()
            .map(|(bits, words)| RevealClass {
                reveal: Positions::from_bits(bits),
                words,
            })
            .collect();
        classes.sort_by(|a, b| a.reveal.tie_break_cmp(b.reveal));
        classes
    }

    /// Applies the setter's answer `reveal` to the guess `s`.
    ///
    /// Survivors carry `s` at exactly `reveal` among the old blanks.
    pub fn apply_answer(&self, s: Symbol, reveal: Positions) -> Result<GameState> {
        if s.id() > self.lexicon.sigma() {
            return Err(Error::SymbolOutOfRange {
                id: s.id(),
                sigma: self.lexicon.sigma(),
            });
        }
        if !self.remaining.contains(s) {
            return Err(Error::RepeatedGuess(s.id()));
        }
        let open = self.blanks();
        if !reveal.is_subset(open) {
            let bad = reveal.indices().find(|&i| !open.contains(i)).unwrap_or(0);
            return Err(Error::PositionOutOfRange {
                position: bad + 1,
                k: self.lexicon.k(),
            });
        }
        let consistent: Vec<usize> = self
            .consistent
            .iter()
            .copied()
            .filter(|&i| self.lexicon.word(i).occurrences(s).bits() & open.bits() == reveal.bits())
            .collect();
        if consistent.is_empty() {
            return Err(Error::InconsistentAnswer);
        }
        let mask = overlay(&self.mask, &pattern_mask(s, reveal, self.lexicon.k())?)?;
        let mut remaining = self.remaining;
        remaining.remove(s);
        Ok(GameState {
            lexicon: Arc::clone(&self.lexicon),
            mask,
            remaining,
            failed: self.failed + u32::from(reveal.is_empty()),
            consistent,
        })
    }

    pub fn apply_turn(&self, turn: Turn) -> Result<GameState> {
        self.apply_answer(turn.guess, turn.reveal)
    }
}

/// Plays `turns` from a fresh state and returns the final state.
pub fn replay(lexicon: Arc<Lexicon>, turns: &[Turn]) -> Result<GameState> {
    turns
        .iter()
        .try_fold(GameState::new(lexicon), |state, &turn| state.apply_turn(turn))
}
