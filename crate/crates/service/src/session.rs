//! In-memory game sessions.
//!
//! Each session sits behind its own mutex, so turns within a session are
//! serialized while separate sessions proceed independently. The service
//! never decides reveals itself: every answer comes from the session's setter
//! and is applied with [`GameState::apply_answer`].

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use hangman_core::{
    GameState, GreedySetter, HonestSetter, Lexicon, OptimalSetter, SetterStrategy, SymbolStyle, Turn, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{LexiconCatalog, LexiconEntry};
use crate::error::ServiceError;

/// Largest number of distinct symbols the optimal setter accepts.
pub const OPTIMAL_MAX_SYMBOLS: usize = 20;
/// Largest lexicon the optimal setter accepts.
pub const OPTIMAL_MAX_WORDS: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetterKind {
    Honest,
    Greedy,
    Optimal,
}

impl SetterKind {
    pub fn name(self) -> &'static str {
        match self {
            SetterKind::Honest => "honest",
            SetterKind::Greedy => "greedy",
            SetterKind::Optimal => "optimal",
        }
    }
}

impl FromStr for SetterKind {
    type Err = ServiceError;

    fn from_str(s: &str) -> Result<Self, ServiceError> {
        match s {
            "honest" => Ok(SetterKind::Honest),
            "greedy" => Ok(SetterKind::Greedy),
            "optimal" => Ok(SetterKind::Optimal),
            other => Err(ServiceError::UnknownSetter(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Active,
    GuesserWon,
    SetterWon,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CreateGame {
    pub lexicon: String,
    pub setter: String,
    pub max_fails: u32,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurnView {
    pub symbol: String,
    pub revealed_positions: Vec<usize>,
    pub mask: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSnapshot {
    pub id: String,
    pub lexicon: String,
    pub setter: SetterKind,
    pub k: usize,
    pub sigma: u32,
    pub mask: String,
    pub failed: u32,
    pub max_fails: u32,
    pub status: Status,
    pub remaining: Vec<String>,
    pub guessed: Vec<String>,
    pub consistent_count: usize,
    pub transcript: Vec<TurnView>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurnResult {
    pub symbol: String,
    pub mask: String,
    pub failed: u32,
    pub status: Status,
    pub revealed_positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevealResult {
    pub word: String,
    pub status: Status,
    pub mask: String,
    pub failed: u32,
    pub transcript: Vec<TurnView>,
}

pub struct Session {
    id: String,
    lexicon_name: String,
    kind: SetterKind,
    setter: Box<dyn SetterStrategy + Send>,
    secret: Option<Word>,
    state: GameState,
    max_fails: u32,
    status: Status,
    transcript: Vec<(Turn, String)>,
    last_used: Instant,
}

impl Session {
    fn style(&self) -> SymbolStyle {
        self.state.lexicon().style()
    }

    fn snapshot(&self) -> GameSnapshot {
        let style = self.style();
        let lexicon = self.state.lexicon();
        GameSnapshot {
            id: self.id.clone(),
            lexicon: self.lexicon_name.clone(),
            setter: self.kind,
            k: lexicon.k(),
            sigma: lexicon.sigma(),
            mask: style.mask(self.state.mask()),
            failed: self.state.failed(),
            max_fails: self.max_fails,
            status: self.status,
            remaining: self.state.remaining().iter().map(|s| style.symbol(s)).collect(),
            guessed: self
                .transcript
                .iter()
                .map(|(t, _)| style.symbol(t.guess))
                .collect(),
            consistent_count: self.state.consistent().len(),
            transcript: self.transcript_views(),
        }
    }

    fn transcript_views(&self) -> Vec<TurnView> {
        let style = self.style();
        self.transcript
            .iter()
            .map(|(turn, mask)| TurnView {
                symbol: style.symbol(turn.guess),
                revealed_positions: turn.reveal.one_based(),
                mask: mask.clone(),
            })
            .collect()
    }

    fn guess(&mut self, text: &str) -> Result<TurnResult, ServiceError> {
        if self.status != Status::Active {
            return Err(ServiceError::Finished);
        }
        let style = self.style();
        let sigma = self.state.lexicon().sigma();
        let s = style
            .parse_symbol(text)
            .filter(|s| s.id() <= sigma)
            .ok_or_else(|| ServiceError::BadSymbol(text.to_string()))?;
        if !self.state.remaining().contains(s) {
            return Err(ServiceError::RepeatedGuess(style.symbol(s)));
        }
        let reveal = self.setter.answer(&self.state, s)?;
        self.state = self.state.apply_answer(s, reveal)?;
        let mask = style.mask(self.state.mask());
        self.transcript.push((Turn { guess: s, reveal }, mask.clone()));
        self.status = if self.state.failed() > self.max_fails {
            Status::SetterWon
        } else if self.state.is_solved() {
            Status::GuesserWon
        } else {
            Status::Active
        };
        Ok(TurnResult {
            symbol: style.symbol(s),
            mask,
            failed: self.state.failed(),
            status: self.status,
            revealed_positions: reveal.one_based(),
        })
    }

    /// The word the setter commits to. Honest setters show their secret; evil
    /// setters the lexicographically smallest consistent word.
    fn reveal(&mut self, concede: bool) -> Result<RevealResult, ServiceError> {
        if self.status == Status::Active {
            if !concede {
                return Err(ServiceError::StillActive);
            }
            self.status = Status::SetterWon;
        }
        let word = match &self.secret {
            Some(secret) => secret.clone(),
            None => {
                let lexicon = self.state.lexicon();
                let first = self.state.consistent().iter().map(|&i| lexicon.word(i)).min();
                first.expect("a live game keeps a consistent word").clone()
            }
        };
        Ok(RevealResult {
            word: self.style().word(&word),
            status: self.status,
            mask: self.style().mask(self.state.mask()),
            failed: self.state.failed(),
            transcript: self.transcript_views(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub lexicon_dir: Option<std::path::PathBuf>,
    pub idle_timeout: Duration,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            lexicon_dir: None,
            idle_timeout: Duration::from_secs(30 * 60),
        }
    }
}

/// Session registry and the game operations behind the HTTP routes.
pub struct GameService {
    catalog: LexiconCatalog,
    idle_timeout: Duration,
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
}

impl GameService {
    pub fn new(config: ServiceConfig) -> Self {
        GameService {
            catalog: LexiconCatalog::new(config.lexicon_dir),
            idle_timeout: config.idle_timeout,
            sessions: Mutex::new(HashMap::new()),
        }
    }

    pub fn idle_timeout(&self) -> Duration {
        self.idle_timeout
    }

    pub fn lexicons(&self) -> Vec<LexiconEntry> {
        self.catalog.list()
    }

    pub fn create_session(&self, req: &CreateGame) -> Result<GameSnapshot, ServiceError> {
        let kind: SetterKind = req.setter.parse()?;
        let lexicon = self.catalog.resolve(&req.lexicon)?;
        let mut secret = None;
        let setter: Box<dyn SetterStrategy + Send> = match kind {
            SetterKind::Honest => {
                let mut rng = match req.seed {
                    Some(seed) => ChaCha8Rng::seed_from_u64(seed),
                    None => ChaCha8Rng::from_entropy(),
                };
                let word = lexicon.word(rng.gen_range(0..lexicon.len())).clone();
                secret = Some(word.clone());
                Box::new(HonestSetter::new(word))
            }
            SetterKind::Greedy => Box::new(GreedySetter),
            SetterKind::Optimal => {
                check_optimal_guardrail(&lexicon)?;
                Box::new(OptimalSetter::new())
            }
        };
        let id = uuid::Uuid::new_v4().simple().to_string();
        let session = Session {
            id: id.clone(),
            lexicon_name: req.lexicon.clone(),
            kind,
            setter,
            secret,
            state: GameState::new(lexicon),
            max_fails: req.max_fails,
            status: Status::Active,
            transcript: Vec::new(),
            last_used: Instant::now(),
        };
        let snapshot = session.snapshot();
        self.sessions
            .lock()
            .expect("session map poisoned")
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(snapshot)
    }

    pub fn guess(&self, id: &str, symbol: &str) -> Result<TurnResult, ServiceError> {
        self.with_session(id, |s| s.guess(symbol))
    }

    pub fn session_info(&self, id: &str) -> Result<GameSnapshot, ServiceError> {
        self.with_session(id, |s| Ok(s.snapshot()))
    }

    /// Reveals a finished game's word. Conceding ends an active game first.
    pub fn reveal(&self, id: &str, concede: bool) -> Result<RevealResult, ServiceError> {
        self.with_session(id, |s| s.reveal(concede))
    }

    /// Drops sessions idle for longer than the timeout; returns how many.
    pub fn evict_idle(&self, now: Instant) -> usize {
        let mut sessions = self.sessions.lock().expect("session map poisoned");
        let before = sessions.len();
        sessions.retain(|_, s| match s.try_lock() {
            Ok(s) => now.saturating_duration_since(s.last_used) <= self.idle_timeout,
            Err(_) => true,
        });
        before - sessions.len()
    }

    pub fn session_count(&self) -> usize {
        self.sessions.lock().expect("session map poisoned").len()
    }

    fn with_session<T>(
        &self,
        id: &str,
        f: impl FnOnce(&mut Session) -> Result<T, ServiceError>,
    ) -> Result<T, ServiceError> {
        let session = self
            .sessions
            .lock()
            .expect("session map poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::UnknownSession(id.to_string()))?;
        let mut session = session.lock().expect("session poisoned");
        session.last_used = Instant::now();
        f(&mut session)
    }
}

fn check_optimal_guardrail(lexicon: &Lexicon) -> Result<(), ServiceError> {
    let used = lexicon.used_symbols().len();
    if used > OPTIMAL_MAX_SYMBOLS || lexicon.len() > OPTIMAL_MAX_WORDS {
        return Err(ServiceError::Guardrail(format!(
            "{} words over {used} distinct symbols (limits {OPTIMAL_MAX_WORDS} words, {OPTIMAL_MAX_SYMBOLS} symbols)",
            lexicon.len()
        )));
    }
    Ok(())
}
