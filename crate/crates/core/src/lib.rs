//! Exact engine for Hangman and Evil Hangman over finite lexicons.
//!
//! - [`mask`]: symbols, masks and their algebra (`⪯`, `⊕`, `∩`, `s^B`).
//! - [`lexicon`]: equal-length word sets, the lexicon file format and consistent sets.
//! - [`state`]: game state and the turn transition.
//! - [`strategy`]: honest, greedy and optimal setters, and the evaluation `W`.
//! - [`solver`]: exact game value by memoized minimax, plus a brute-force oracle.
//! - [`graph`], [`matching`], [`encoding`]: cubic graphs, perfect matchings and proper encodings.
//! - [`generators`]: the anti-greedy family and the domination reduction.

pub mod encoding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod lexicon;
pub mod mask;
pub mod matching;
pub mod solver;
pub mod state;
pub mod strategy;

/// Largest supported alphabet.
pub const MAX_SIGMA: u32 = 128;
/// Largest supported word length.
pub const MAX_WORD_LEN: usize = 64;

pub use encoding::{proper_encode, properness_check, three_color, Color, EdgeColoring};
pub use error::{Error, Result};
pub use generators::{
    adversarial_family, build_reduction, verify_lemma_equivalence, verify_separation, AdversarialFamilySpec,
    Record, ReductionInstance, SeparationReport,
};
pub use graph::{dominating_number, random_cubic, CubicGraph, DominationCertificate};
pub use lexicon::{consistent_set, Lexicon};
pub use mask::{
    blanks, meet, overlay, pattern_mask, precedes, reveal_with_word, AlphabetSet, Mask, Positions, Symbol,
    SymbolStyle, Word,
};
pub use matching::{perfect_matching, BipartiteGraph};
pub use solver::{brute_force_solve, decide, solve, SolveReport, Solver};
pub use state::{replay, GameState, RevealClass, Turn};
pub use strategy::{
    evaluate_w, greedy_answer, honest_answer, optimal_answer, EvaluationResult, GreedySetter, HonestSetter,
    OptimalSetter, SetterStrategy,
};
