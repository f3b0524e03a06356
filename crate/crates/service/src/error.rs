use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("unknown session {0}")]
    UnknownSession(String),

    #[error("game is finished")]
    Finished,

    #[error("game is still active")]
    StillActive,

    #[error("repeated guess {0}")]
    RepeatedGuess(String),

    #[error("unknown lexicon {0}")]
    UnknownLexicon(String),

    #[error("unknown setter {0} (expected honest, greedy or optimal)")]
    UnknownSetter(String),

    #[error("bad symbol {0:?}")]
    BadSymbol(String),

    #[error("lexicon too large for the optimal setter: {0}")]
    Guardrail(String),

    #[error("malformed request: {0}")]
    Malformed(String),

    #[error(transparent)]
    Game(#[from] hangman_core::Error),
}

impl ServiceError {
    pub fn status(&self) -> StatusCode {
        match self {
            ServiceError::UnknownSession(_) => StatusCode::NOT_FOUND,
            ServiceError::Finished | ServiceError::StillActive | ServiceError::RepeatedGuess(_) => {
                StatusCode::CONFLICT
            }
            ServiceError::Game(hangman_core::Error::RepeatedGuess(_)) => StatusCode::CONFLICT,
            ServiceError::Game(hangman_core::Error::InconsistentAnswer) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        }
    }
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": self.to_string() });
        (self.status(), Json(body)).into_response()
    }
}
