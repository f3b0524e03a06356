//! Setter strategies and the guesser-side evaluation `W`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mask::{AlphabetSet, Mask, Positions, Symbol, Word};
use crate::solver::Solver;
use crate::state::{GameState, Turn};

/// A setter decides which blank positions to reveal for each guess.
pub trait SetterStrategy {
    fn name(&self) -> &str;

    /// Reveal set for guess `s`; must leave at least one consistent word.
    fn answer(&mut self, state: &GameState, s: Symbol) -> Result<Positions>;

    /// True when the answer depends only on `(mask, remaining)` for a fixed
    /// lexicon, which lets [`evaluate_w`] memoize.
    fn is_state_deterministic(&self) -> bool {
        false
    }
}

/// Positions of `s` in `secret` among the blanks of the mask.
pub fn honest_answer(state: &GameState, s: Symbol, secret: &Word) -> Result<Positions> {
    let index = state.lexicon().position(secret).ok_or(Error::NotConsistent)?;
    if state.consistent().binary_search(&index).is_err() {
        return Err(Error::NotConsistent);
    }
    Ok(Positions::from_bits(
        secret.occurrences(s).bits() & state.blanks().bits(),
    ))
}

/// Keeps the largest class of consistent words; ties go to the smallest,
/// then lexicographically first, reveal set.
pub fn greedy_answer(state: &GameState, s: Symbol) -> Positions {
    let mut best: Option<(Positions, usize)> = None;
    for class in state.classes(s) {
        if best.is_none_or(|(_, size)| class.words.len() > size) {
            best = Some((class.reveal, class.words.len()));
        }
    }
    best.map_or(Positions::EMPTY, |(b, _)| b)
}

/// Maximizes forced failures using a fresh solver.
pub fn optimal_answer(state: &GameState, s: Symbol) -> Positions {
    Solver::new(Arc::clone(state.lexicon())).best_answer(state, s).0
}

#[derive(Debug, Clone)]
pub struct HonestSetter {
    secret: Word,
}

impl HonestSetter {
    pub fn new(secret: Word) -> Self {
        HonestSetter { secret }
    }

    pub fn secret(&self) -> &Word {
        &self.secret
    }
}

impl SetterStrategy for HonestSetter {
    fn name(&self) -> &str {
        "honest"
    }

    fn answer(&mut self, state: &GameState, s: Symbol) -> Result<Positions> {
        honest_answer(state, s, &self.secret)
    }

    fn is_state_deterministic(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GreedySetter;

impl SetterStrategy for GreedySetter {
    fn name(&self) -> &str {
        "greedy"
    }

    fn answer(&mut self, state: &GameState, s: Symbol) -> Result<Positions> {
        Ok(greedy_answer(state, s))
    }

    fn is_state_deterministic(&self) -> bool {
        true
    }
}

/// Optimal setter. Keeps its solver table across calls on the same lexicon.
#[derive(Debug, Clone, Default)]
pub struct OptimalSetter {
    solver: Option<Solver>,
}

impl OptimalSetter {
    pub fn new() -> Self {
        OptimalSetter { solver: None }
    }

    pub fn solver_for(&mut self, state: &GameState) -> &mut Solver {
        let stale = match &self.solver {
            Some(solver) => {
                !Arc::ptr_eq(solver.lexicon(), state.lexicon()) && **solver.lexicon() != **state.lexicon()
            }
            None => true,
        };
        if stale {
            self.solver = Some(Solver::new(Arc::clone(state.lexicon())));
        }
        self.solver.as_mut().expect("solver initialized above")
    }
}

impl SetterStrategy for OptimalSetter {
    fn name(&self) -> &str {
        "optimal"
    }

    fn answer(&mut self, state: &GameState, s: Symbol) -> Result<Positions> {
        Ok(self.solver_for(state).best_answer(state, s).0)
    }

    fn is_state_deterministic(&self) -> bool {
        true
    }
}

/// Built-in strategy names accepted by the CLI and the service.
pub const STRATEGY_NAMES: [&str; 3] = ["honest", "greedy", "optimal"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationResult {
    /// Fewest failed guesses an optimal guesser suffers against the setter.
    pub value: u32,
    pub principal_line: Vec<Turn>,
}

/// Minimum number of failed guesses needed to fully reveal a word against `setter`.
///
/// Terminal when the mask is complete, or when a single word remains (the
/// setter must then reveal every guess of its symbols).
pub fn evaluate_w(state: &GameState, setter: &mut dyn SetterStrategy) -> Result<EvaluationResult> {
    let mut eval = Evaluator {
        setter,
        memo: HashMap::new(),
    };
    let value = eval.value(state)?;

    let mut principal_line = Vec::new();
    let mut cur = state.clone();
    while !cur.is_solved() {
        let mut best: Option<(u32, Turn, GameState)> = None;
        for s in cur.remaining().iter() {
            let (v, turn, next) = eval.step(&cur, s)?;
            if best.as_ref().is_none_or(|(b, ..)| v < *b) {
                best = Some((v, turn, next));
            }
        }
        let (_, turn, next) = best.expect("unsolved state has remaining symbols");
        principal_line.push(turn);
        cur = next;
    }
    Ok(EvaluationResult {
        value,
        principal_line,
    })
}

struct Evaluator<'a> {
    setter: &'a mut dyn SetterStrategy,
    memo: HashMap<(Mask, AlphabetSet), u32>,
}

impl Evaluator<'_> {
    fn value(&mut self, state: &GameState) -> Result<u32> {
        if state.is_solved() || state.consistent().len() == 1 {
            return Ok(0);
        }
        let memoize = self.setter.is_state_deterministic();
        let key = (state.mask().clone(), state.remaining());
        if memoize {
            if let Some(&v) = self.memo.get(&key) {
                return Ok(v);
            }
        }
        let mut best = u32::MAX;
        for s in state.remaining().iter() {
            best = best.min(self.step(state, s)?.0);
            if best == 0 {
                break;
            }
        }
        if memoize {
            self.memo.insert(key, best);
        }
        Ok(best)
    }

    fn step(&mut self, state: &GameState, s: Symbol) -> Result<(u32, Turn, GameState)> {
        let reveal = self.setter.answer(state, s)?;
        let next = state.apply_answer(s, reveal)?;
        let v = self.value(&next)? + u32::from(reveal.is_empty());
        Ok((v, Turn { guess: s, reveal }, next))
    }
}
