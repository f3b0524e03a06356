//! Hard instances: the anti-greedy family and graph reduction lexicons.

use std::fmt;
use std::sync::Arc;

use crate::encoding::{proper_encode, properness_check};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::lexicon::Lexicon;
use crate::mask::{Symbol, Word};
use crate::solver::Solver;
use crate::state::GameState;
use crate::strategy::{evaluate_w, GreedySetter};

/// Largest `m` for which [`verify_separation`] asserts exact values.
pub const SEPARATION_MAX_M: u32 = 3;
/// Largest graph for which [`build_reduction`] runs the solver.
pub const REDUCTION_MAX_VERTICES: usize = 12;

/// Parameters of the anti-greedy lexicon: `m + 1` words `α·{β,γ}^{k-1}`
/// (both of β and γ present) and `m` filler words `η_j^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdversarialFamilySpec {
    pub m: u32,
    pub k: usize,
    pub sigma: u32,
}

impl AdversarialFamilySpec {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        // Smallest k with 2^(k-1) - 2 >= m + 1 mixed {β,γ} strings.
        let mut k = 2usize;
        while (1u128 << (k - 1)) - 2 < u128::from(m) + 1 {
            k += 1;
        }
        let sigma = m + 3;
        if sigma > crate::MAX_SIGMA {
            return Err(Error::AlphabetTooLarge(sigma));
        }
        Ok(AdversarialFamilySpec { m, k, sigma })
    }

    pub fn alpha(&self) -> Symbol {
        Symbol::new(1).expect("valid id")
    }

    pub fn beta(&self) -> Symbol {
        Symbol::new(2).expect("valid id")
    }

    pub fn gamma(&self) -> Symbol {
        Symbol::new(3).expect("valid id")
    }

    pub fn etas(&self) -> Vec<Symbol> {
        (4..=self.sigma)
            .map(|id| Symbol::new(id).expect("sigma checked"))
            .collect()
    }

    pub fn lexicon(&self) -> Lexicon {
        let tail = self.k - 1;
        let mixed = (0u64..1 << tail)
            .filter(|&bits| bits != 0 && bits != (1 << tail) - 1)
            .take(self.m as usize + 1);
        let mut words: Vec<Word> = mixed
            .map(|bits| {
                // Most significant bit first, 0 → β, 1 → γ: numeric order is lexicographic order.
                let mut symbols = vec![self.alpha()];
                symbols.extend((0..tail).rev().map(|i| {
                    if bits >> i & 1 == 1 {
                        self.gamma()
                    } else {
                        self.beta()
                    }
                }));
                Word::new(symbols).expect("length k")
            })
            .collect();
        words.extend(
            self.etas()
                .into_iter()
                .map(|eta| Word::new(vec![eta; self.k]).expect("length k")),
        );
        Lexicon::new(words, Some(self.sigma)).expect("family words are distinct")
    }
}

pub fn adversarial_family(m: u32) -> Result<Lexicon> {
    Ok(AdversarialFamilySpec::new(m)?.lexicon())
}

/// Key-value record output (`key=value` per line).
pub trait Record {
    fn fields(&self) -> Vec<(&'static str, String)>;

    fn to_record(&self) -> String {
        self.fields()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub m: u32,
    pub k: usize,
    pub sigma: u32,
    pub greedy_value: u32,
    pub optimal_value: u32,
}

impl SeparationReport {
    pub fn holds(&self) -> bool {
        self.greedy_value == 0 && self.optimal_value == self.m
    }
}

impl Record for SeparationReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("m", self.m.to_string()),
            ("k", self.k.to_string()),
            ("sigma", self.sigma.to_string()),
            ("greedy", self.greedy_value.to_string()),
            ("optimal", self.optimal_value.to_string()),
            ("ok", self.holds().to_string()),
        ]
    }
}

/// Greedy and optimal values on the anti-greedy family.
///
/// Computes both for any `m`; [`verify_separation`] adds the guardrail.
pub fn separation_values(m: u32) -> Result<SeparationReport> {
    let spec = AdversarialFamilySpec::new(m)?;
    let lexicon = Arc::new(spec.lexicon());
    let root = GameState::new(Arc::clone(&lexicon));
    let greedy_value = evaluate_w(&root, &mut GreedySetter)?.value;
    let optimal_value = Solver::new(lexicon).solve().value;
    Ok(SeparationReport {
        m,
        k: spec.k,
        sigma: spec.sigma,
        greedy_value,
        optimal_value,
    })
}

/// Separation check for `m ≤ 3`; call [`SeparationReport::holds`] on the result.
pub fn verify_separation(m: u32) -> Result<SeparationReport> {
    if m > SEPARATION_MAX_M {
        return Err(Error::TooLarge(format!("m={m} (limit {SEPARATION_MAX_M})")));
    }
    separation_values(m)
}

#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub graph: CubicGraph,
    pub lexicon: Lexicon,
    pub gamma: usize,
    pub witness: Vec<usize>,
    pub game_value: u32,
}

impl ReductionInstance {
    /// Forced failures equal domination number minus one.
    pub fn holds(&self) -> bool {
        self.game_value as usize + 1 == self.gamma
    }

    /// `γ(G) ≤ d` exactly when the setter cannot force `d` failures.
    pub fn lemma_equivalence(&self, d: u32) -> bool {
        let dominated = self.gamma <= d as usize;
        let setter_wins = d == 0 || self.game_value >= d;
        dominated == !setter_wins
    }
}

impl Record for ReductionInstance {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.graph.n().to_string()),
            ("gamma", self.gamma.to_string()),
            ("value", self.game_value.to_string()),
            ("ok", self.holds().to_string()),
        ]
    }
}

impl fmt::Display for ReductionInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "ok" } else { "mismatch" };
        write!(f, "gamma={} value={} {verdict}", self.gamma, self.game_value)
    }
}

pub fn build_reduction(graph: &CubicGraph) -> Result<ReductionInstance> {
    if graph.n() > REDUCTION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices (limit {REDUCTION_MAX_VERTICES})",
            graph.n()
        )));
    }
    let lexicon = proper_encode(graph);
    if !properness_check(&lexicon) {
        return Err(Error::InvalidGraph("encoding is not proper".into()));
    }
    let cert = graph.dominating_number()?;
    let game_value = Solver::new(Arc::new(lexicon.clone())).solve().value;
    Ok(ReductionInstance {
        graph: graph.clone(),
        lexicon,
        gamma: cert.gamma,
        witness: cert.witness,
        game_value,
    })
}

/// `(γ(G) ≤ d) == !decide(L, d)` for the proper encoding `L` of `graph`.
pub fn verify_lemma_equivalence(graph: &CubicGraph, d: u32) -> Result<bool> {
    Ok(build_reduction(graph)?.lemma_equivalence(d))
}
