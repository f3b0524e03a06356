//! Exact game value of Evil Hangman by memoized minimax.
//!
//! The guesser minimizes over remaining symbols, the setter maximizes over the
//! occurrence-pattern classes of the guessed symbol, and a turn costs one
//! failed guess exactly when nothing is revealed. [`brute_force_solve`] is an
//! independent reference that enumerates every reveal subset with no table.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lexicon::{consistent_set, Lexicon};
use crate::mask::{blanks, overlay, pattern_mask, AlphabetSet, Mask, Positions, Symbol};
use crate::state::{GameState, RevealClass, Turn};

/// Guardrails for [`brute_force_solve`].
pub const ORACLE_MAX_WORDS: usize = 12;
pub const ORACLE_MAX_SIGMA: u32 = 8;
pub const ORACLE_MAX_K: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolveKey {
    pub mask: Mask,
    pub remaining: AlphabetSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub value: u32,
    pub states_expanded: u64,
    pub table_size: usize,
    pub principal_line: Vec<Turn>,
}

/// Memoized minimax over one root lexicon.
///
/// The table is keyed on `(mask, remaining ∩ used symbols)`; symbols that
/// occur in no word never change the consistent set, so dropping them from
/// the key keeps it sound.
#[derive(Debug, Clone)]
pub struct Solver {
    lexicon: Arc<Lexicon>,
    used: u128,
    memo: HashMap<SolveKey, u8>,
    states_expanded: u64,
}

impl Solver {
    pub fn new(lexicon: Arc<Lexicon>) -> Self {
        let used = lexicon.used_symbols().bits();
        Solver {
            lexicon,
            used,
            memo: HashMap::new(),
            states_expanded: 0,
        }
    }

    pub fn lexicon(&self) -> &Arc<Lexicon> {
        &self.lexicon
    }

    pub fn states_expanded(&self) -> u64 {
        self.states_expanded
    }

    pub fn table_size(&self) -> usize {
        self.memo.len()
    }

    /// Solves from the fresh state.
    pub fn solve(&mut self) -> SolveReport {
        let root = GameState::new(Arc::clone(&self.lexicon));
        let value = self.value(&root);
        let principal_line = self.principal_line(&root);
        SolveReport {
            value,
            states_expanded: self.states_expanded,
            table_size: self.memo.len(),
            principal_line,
        }
    }

    /// Failed guesses the setter can still force from `state` (not counting `state.failed()`).
    pub fn value(&mut self, state: &GameState) -> u32 {
        debug_assert!(Arc::ptr_eq(state.lexicon(), &self.lexicon) || **state.lexicon() == *self.lexicon);
        if state.is_solved() || state.consistent().len() == 1 {
            return 0;
        }
        let key = self.key(state);
        if let Some(&v) = self.memo.get(&key) {
            return u32::from(v);
        }
        self.states_expanded += 1;

        let mut best = u32::MAX;
        for s in live_symbols(state).iter() {
            let mut classes = state.classes(s);
            // Large classes first: they tend to hold the maximum, which sharpens the cutoff.
            classes.sort_by(|a, b| {
                b.words
                    .len()
                    .cmp(&a.words.len())
                    .then(a.reveal.tie_break_cmp(b.reveal))
            });
            let mut worst = 0;
            for class in &classes {
                worst = worst.max(self.class_value(state, s, class));
                if worst >= best {
                    break;
                }
            }
            best = best.min(worst);
            if best == 0 {
                break;
            }
        }
        self.memo.insert(key, best as u8);
        best
    }

    /// The setter's best reveal for guess `s`: maximal value, ties to the
    /// smallest then lexicographically first reveal set. The value includes
    /// the cost of this turn.
    pub fn best_answer(&mut self, state: &GameState, s: Symbol) -> (Positions, u32) {
        let mut best: Option<(Positions, u32)> = None;
        for class in state.classes(s) {
            let v = self.class_value(state, s, &class);
            if best.is_none_or(|(_, b)| v > b) {
                best = Some((class.reveal, v));
            }
        }
        best.expect("a live state has at least one reveal class")
    }

    /// The guesser's best symbol (lowest id among minimizers) and its value.
    pub fn best_guess(&mut self, state: &GameState) -> Option<(Symbol, u32)> {
        let mut best: Option<(Symbol, u32)> = None;
        for s in live_symbols(state).iter() {
            let worst = state
                .classes(s)
                .iter()
                .map(|c| self.class_value(state, s, c))
                .max()
                .unwrap_or(0);
            if best.is_none_or(|(_, b)| worst < b) {
                best = Some((s, worst));
            }
        }
        best
    }

    /// Optimal play from `state` to a fully revealed mask.
    pub fn principal_line(&mut self, state: &GameState) -> Vec<Turn> {
        let mut line = Vec::new();
        let mut cur = state.clone();
        while !cur.is_solved() {
            if cur.consistent().len() == 1 {
                line.extend(finish_word(&cur));
                break;
            }
            let (s, _) = self.best_guess(&cur).expect("unsolved state has a live symbol");
            let (reveal, _) = self.best_answer(&cur, s);
            let turn = Turn { guess: s, reveal };
            cur = cur.apply_turn(turn).expect("solver answers are legal");
            line.push(turn);
        }
        line
    }

    fn class_value(&mut self, state: &GameState, s: Symbol, class: &RevealClass) -> u32 {
        let child = state
            .apply_answer(s, class.reveal)
            .expect("class reveals are legal");
        u32::from(class.reveal.is_empty()) + self.value(&child)
    }

    fn key(&self, state: &GameState) -> SolveKey {
        let remaining = state.remaining();
        SolveKey {
            mask: state.mask().clone(),
            remaining: AlphabetSet::from_bits(remaining.bits() & self.used, remaining.capacity()),
        }
    }
}

/// Remaining symbols that occur in a blank cell of some consistent word.
fn live_symbols(state: &GameState) -> AlphabetSet {
    let open = state.blanks();
    let mut bits = 0u128;
    for &i in state.consistent() {
        for (j, s) in state.lexicon().word(i).symbols().iter().enumerate() {
            if open.contains(j) {
                bits |= 1 << (s.id() - 1);
            }
        }
    }
    AlphabetSet::from_bits(bits & state.remaining().bits(), state.remaining().capacity())
}

/// Reveals the only consistent word, one distinct symbol at a time in id order.
fn finish_word(state: &GameState) -> Vec<Turn> {
    let word = state.lexicon().word(state.consistent()[0]);
    let open = state.blanks();
    let mut symbols: Vec<Symbol> = open.indices().map(|i| word.symbols()[i]).collect();
    symbols.sort();
    symbols.dedup();
    symbols
        .into_iter()
        .map(|s| Turn {
            guess: s,
            reveal: Positions::from_bits(word.occurrences(s).bits() & open.bits()),
        })
        .collect()
}

pub fn solve(lexicon: &Lexicon) -> SolveReport {
    Solver::new(Arc::new(lexicon.clone())).solve()
}

/// Whether the setter can force at least `d` failed guesses.
pub fn decide(lexicon: &Lexicon, d: u32) -> bool {
    d == 0 || solve(lexicon).value >= d
}

/// Reference solver: plain minimax over every reveal subset, with no table and no shortcuts.
pub fn brute_force_solve(lexicon: &Lexicon) -> Result<SolveReport> {
    if lexicon.len() > ORACLE_MAX_WORDS || lexicon.sigma() > ORACLE_MAX_SIGMA || lexicon.k() > ORACLE_MAX_K {
        return Err(Error::TooLarge(format!(
            "n={} sigma={} k={} (limits n<={ORACLE_MAX_WORDS} sigma<={ORACLE_MAX_SIGMA} k<={ORACLE_MAX_K})",
            lexicon.len(),
            lexicon.sigma(),
            lexicon.k()
        )));
    }
    let mut oracle = Oracle { lexicon, expanded: 0 };
    let mut mask = Mask::blank(lexicon.k())?;
    let mut guessed = AlphabetSet::empty(lexicon.sigma())?;
    let value = oracle.value(&mask, &guessed);

    let mut principal_line = Vec::new();
    while !mask.is_complete() {
        let (turn, next_mask, next_guessed) = oracle.best_turn(&mask, &guessed);
        principal_line.push(turn);
        mask = next_mask;
        guessed = next_guessed;
    }
    Ok(SolveReport {
        value,
        states_expanded: oracle.expanded,
        table_size: 0,
        principal_line,
    })
}

struct Oracle<'a> {
    lexicon: &'a Lexicon,
    expanded: u64,
}

impl Oracle<'_> {
    fn value(&mut self, mask: &Mask, guessed: &AlphabetSet) -> u32 {
        if mask.is_complete() {
            return 0;
        }
        self.expanded += 1;
        guessed
            .complement()
            .iter()
            .map(|s| self.guess_value(mask, guessed, s))
            .min()
            .expect("an incomplete mask leaves symbols to guess")
    }

    fn guess_value(&mut self, mask: &Mask, guessed: &AlphabetSet, s: Symbol) -> u32 {
        self.answers(mask, guessed, s)
            .into_iter()
            .map(|(b, m, g)| u32::from(b.is_empty()) + self.value(&m, &g))
            .max()
            .expect("a non-empty consistent set admits an answer")
    }

    /// Every legal answer `B ⊆ blanks(M)` with a non-empty consistent set.
    fn answers(&self, mask: &Mask, guessed: &AlphabetSet, s: Symbol) -> Vec<(Positions, Mask, AlphabetSet)> {
        let mut next_guessed = *guessed;
        next_guessed.insert(s).expect("symbol within sigma");
        blanks(mask)
            .subsets()
            .filter_map(|b| {
                let m = overlay(mask, &pattern_mask(s, b, self.lexicon.k()).ok()?).ok()?;
                let live = !consistent_set(self.lexicon, &m, &next_guessed).ok()?.is_empty();
                live.then_some((b, m, next_guessed))
            })
            .collect()
    }

    fn best_turn(&mut self, mask: &Mask, guessed: &AlphabetSet) -> (Turn, Mask, AlphabetSet) {
        let mut best_guess: Option<(Symbol, u32)> = None;
        for s in guessed.complement().iter() {
            let v = self.guess_value(mask, guessed, s);
            if best_guess.is_none_or(|(_, b)| v < b) {
                best_guess = Some((s, v));
            }
        }
        let (s, _) = best_guess.expect("symbols remain");
        let mut answers: Vec<_> = self
            .answers(mask, guessed, s)
            .into_iter()
            .map(|(b, m, g)| (u32::from(b.is_empty()) + self.value(&m, &g), b, m, g))
            .collect();
        answers.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.tie_break_cmp(y.1)));
        let (_, b, m, g) = answers.swap_remove(0);
        (Turn { guess: s, reveal: b }, m, g)
    }
}
