//! HTTP game service for the Hangman engine.

pub mod catalog;
pub mod error;
pub mod http;
pub mod session;

pub use catalog::{LexiconCatalog, LexiconEntry};
pub use error::ServiceError;
pub use http::{router, serve, serve_on};
pub use session::{
    CreateGame, GameService, GameSnapshot, RevealResult, ServiceConfig, SetterKind, Status, TurnResult,
    TurnView,
};
