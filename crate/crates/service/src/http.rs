//! HTTP routes over [`GameService`].

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use tower_http::cors::CorsLayer;
use tower_http::services::ServeDir;

use crate::catalog::LexiconEntry;
use crate::error::ServiceError;
use crate::session::{CreateGame, GameService, GameSnapshot, RevealResult, TurnResult};

type AppState = Arc<GameService>;

#[derive(Debug, Deserialize)]
pub struct GuessRequest {
    pub symbol: String,
}

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> Result<T, ServiceError> {
    payload
        .map(|Json(t)| t)
        .map_err(|e| ServiceError::Malformed(e.body_text()))
}

async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> Result<T, ServiceError> + Send + 'static,
) -> Result<T, ServiceError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ServiceError::Malformed(format!("worker failed: {e}")))?
}

async fn create_game(
    State(svc): State<AppState>,
    payload: Result<Json<CreateGame>, JsonRejection>,
) -> Result<Json<GameSnapshot>, ServiceError> {
    let req = body(payload)?;
    blocking(move || svc.create_session(&req)).await.map(Json)
}

async fn guess(
    State(svc): State<AppState>,
    Path(id): Path<String>,
    payload: Result<Json<GuessRequest>, JsonRejection>,
) -> Result<Json<TurnResult>, ServiceError> {
    let req = body(payload)?;
    blocking(move || svc.guess(&id, &req.symbol)).await.map(Json)
}

async fn info(
    State(svc): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<GameSnapshot>, ServiceError> {
    svc.session_info(&id).map(Json)
}

async fn concede(
    State(svc): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<RevealResult>, ServiceError> {
    svc.reveal(&id, true).map(Json)
}

async fn reveal(
    State(svc): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<RevealResult>, ServiceError> {
    svc.reveal(&id, false).map(Json)
}

async fn lexicons(State(svc): State<AppState>) -> Json<Vec<LexiconEntry>> {
    Json(svc.lexicons())
}

/// Builds the router. Static files, when given, are served for unmatched paths.
pub fn router(service: Arc<GameService>, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/games", post(create_game))
        .route("/games/:id", get(info))
        .route("/games/:id/guess", post(guess))
        .route("/games/:id/concede", post(concede))
        .route("/games/:id/reveal", get(reveal))
        .route("/lexicons", get(lexicons))
        .with_state(service);
    let app = match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    };
    app.layer(CorsLayer::permissive())
}

/// Binds `addr`, spawns idle-session eviction and serves until the future is dropped.
pub async fn serve(
    service: Arc<GameService>,
    addr: SocketAddr,
    static_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    serve_on(listener, service, static_dir).await
}

pub async fn serve_on(
    listener: tokio::net::TcpListener,
    service: Arc<GameService>,
    static_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    let sweeper = service.clone();
    let period = (sweeper.idle_timeout() / 4).max(Duration::from_secs(1));
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(period);
        loop {
            tick.tick().await;
            let evicted = sweeper.evict_idle(Instant::now());
            if evicted > 0 {
                tracing::debug!(evicted, "dropped idle sessions");
            }
        }
    });
    if let Ok(addr) = listener.local_addr() {
        tracing::info!(%addr, "listening");
    }
    axum::serve(listener, router(service, static_dir)).await
}
