//! The `hangman` command line.
//!
//! [`run`] takes explicit streams so the whole tool can be driven from tests.

use std::io::{BufRead, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use hangman_core::generators::{separation_values, Record, SEPARATION_MAX_M};
use hangman_core::{
    adversarial_family, build_reduction, evaluate_w, proper_encode, random_cubic, solve, CubicGraph,
    GameState, GreedySetter, HonestSetter, Lexicon, OptimalSetter, SetterStrategy, SymbolStyle, Turn,
};
use hangman_service::{GameService, LexiconCatalog, ServiceConfig, ServiceError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub const DEFAULT_PORT: u16 = 8080;

#[derive(Debug, Parser)]
#[command(
    name = "hangman",
    version,
    about = "Exact solver and generators for Evil Hangman"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play against a setter, reading one guess per line from stdin.
    Play(PlayArgs),
    /// Compute the game value against the optimal setter.
    Solve(LexiconArgs),
    /// Compute the fewest failures an optimal guesser suffers against the greedy setter.
    EvalGreedy(LexiconArgs),
    /// Generate lexicons and graphs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Encode a cubic graph as a proper lexicon.
    EncodeGraph(GraphArgs),
    /// Check the results tying games to graphs and greedy to optimal play.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run the HTTP game service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct LexiconArgs {
    /// Lexicon file, or a reference such as builtin:fig2 or adversarial:m=2.
    #[arg(long)]
    pub lexicon: String,
    /// Directory searched for file:<name> references.
    #[arg(long)]
    pub lexicon_dir: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    #[command(flatten)]
    pub lexicon: LexiconArgs,
    /// honest, greedy or optimal.
    #[arg(long, default_value = "greedy")]
    pub setter: String,
    /// Failed guesses allowed; one more loses.
    #[arg(short = 'd', default_value_t = 6)]
    pub max_fails: u32,
    /// Seed for the honest setter's secret.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// The anti-greedy family with parameter m.
    Adversarial {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// A random cubic graph as an edge list.
    Cubic {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// k4, k33, cube, petersen, random:<n>, or an edge-list file.
    #[arg(long)]
    pub graph: String,
    /// Seed used by random:<n>.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o')]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Game value of the encoding equals the domination number minus one.
    Reduction {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check the decision equivalence only at this threshold (default: every d in 0..=n).
        #[arg(short = 'd')]
        d: Option<u32>,
    },
    /// Greedy setter is beaten for free while the optimal setter forces m failures.
    Separation {
        #[arg(short = 'm')]
        m: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "HANGMAN_PORT", default_value_t = DEFAULT_PORT)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
    #[arg(long)]
    pub lexicon_dir: Option<PathBuf>,
    /// Directory of static web assets served next to the API.
    #[arg(long)]
    pub static_dir: Option<PathBuf>,
    /// Seconds before an untouched session is dropped.
    #[arg(long, default_value_t = 1800)]
    pub idle_secs: u64,
}

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    /// A verification ran but the checked property did not hold.
    Failed,
}

impl From<hangman_core::Error> for CliError {
    fn from(e: hangman_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ServiceError> for CliError {
    fn from(e: ServiceError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

/// Runs the tool and returns its exit code: 0 success, 1 domain error or
/// failed verification, 2 usage error.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(()) => 0,
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(CliError::Failed) => 1,
    }
}

fn dispatch(command: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Play(args) => play(&args, input, out),
        Command::Solve(args) => solve_cmd(&args, out),
        Command::EvalGreedy(args) => eval_greedy(&args, out),
        Command::Gen(GenCommand::Adversarial { m, output }) => {
            let lexicon = adversarial_family(m)?;
            emit(out, output.as_deref(), &lexicon.to_text())
        }
        Command::Gen(GenCommand::Cubic { n, seed, output }) => {
            emit(out, output.as_deref(), &random_cubic(n, seed)?.to_text())
        }
        Command::EncodeGraph(args) => encode_graph(&args, out),
        Command::Verify(VerifyCommand::Reduction { graph, d }) => verify_reduction(&graph, d, out),
        Command::Verify(VerifyCommand::Separation { m, json }) => verify_separation(m, json, out),
        Command::Serve(args) => serve(&args, out),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
        }
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// A file path, or a catalog reference when no such file exists.
pub fn load_lexicon(reference: &str, lexicon_dir: Option<&Path>) -> Result<Arc<Lexicon>, CliError> {
    let path = Path::new(reference);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{reference}: {e}")))?;
        return Ok(Arc::new(Lexicon::parse(&text)?));
    }
    if reference.contains(':') {
        return Ok(LexiconCatalog::new(lexicon_dir.map(Path::to_path_buf)).resolve(reference)?);
    }
    Err(CliError::Domain(format!("{reference}: no such lexicon file")))
}

pub fn load_graph(reference: &str, seed: u64) -> Result<CubicGraph, CliError> {
    if let Some(n) = reference.strip_prefix("random:") {
        let n = n
            .parse()
            .map_err(|_| CliError::Domain(format!("bad vertex count in {reference}")))?;
        return Ok(random_cubic(n, seed)?);
    }
    Ok(CubicGraph::load(reference)?)
}

fn line_text(style: SymbolStyle, line: &[Turn]) -> String {
    line.iter()
        .map(|t| format!("{}:{}", style.symbol(t.guess), t.reveal))
        .collect::<Vec<_>>()
        .join(" ")
}

fn line_json(style: SymbolStyle, line: &[Turn]) -> Value {
    line.iter()
        .map(|t| json!({"guess": style.symbol(t.guess), "reveal": t.reveal.one_based()}))
        .collect()
}

fn print_json(out: &mut dyn Write, value: &Value) -> CliResult {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    )?;
    Ok(())
}

fn solve_cmd(args: &LexiconArgs, out: &mut dyn Write) -> CliResult {
    let lexicon = load_lexicon(&args.lexicon, args.lexicon_dir.as_deref())?;
    let report = solve(&lexicon);
    let style = lexicon.style();
    if args.json {
        return print_json(
            out,
            &json!({
                "value": report.value,
                "states_expanded": report.states_expanded,
                "table_size": report.table_size,
                "principal_line": line_json(style, &report.principal_line),
            }),
        );
    }
    writeln!(out, "value={}", report.value)?;
    writeln!(out, "states_expanded={}", report.states_expanded)?;
    writeln!(out, "table_size={}", report.table_size)?;
    writeln!(out, "line={}", line_text(style, &report.principal_line))?;
    Ok(())
}

fn eval_greedy(args: &LexiconArgs, out: &mut dyn Write) -> CliResult {
    let lexicon = load_lexicon(&args.lexicon, args.lexicon_dir.as_deref())?;
    let result = evaluate_w(&GameState::new(lexicon.clone()), &mut GreedySetter)?;
    let style = lexicon.style();
    if args.json {
        return print_json(
            out,
            &json!({"value": result.value, "principal_line": line_json(style, &result.principal_line)}),
        );
    }
    writeln!(out, "value={}", result.value)?;
    writeln!(out, "line={}", line_text(style, &result.principal_line))?;
    Ok(())
}

fn encode_graph(args: &GraphArgs, out: &mut dyn Write) -> CliResult {
    let graph = load_graph(&args.graph, args.seed)?;
    let lexicon = proper_encode(&graph);
    if args.json {
        let style = lexicon.style();
        let words: Vec<String> = lexicon.words().iter().map(|w| style.word(w)).collect();
        let value = json!({"n": graph.n(), "k": lexicon.k(), "sigma": lexicon.sigma(), "words": words});
        let text = serde_json::to_string_pretty(&value).expect("json values serialize") + "\n";
        return emit(out, args.output.as_deref(), &text);
    }
    emit(out, args.output.as_deref(), &lexicon.to_text())
}

fn verify_reduction(args: &GraphArgs, d: Option<u32>, out: &mut dyn Write) -> CliResult {
    let graph = load_graph(&args.graph, args.seed)?;
    let instance = build_reduction(&graph)?;
    let thresholds: Vec<u32> = match d {
        Some(d) => vec![d],
        None => (0..=graph.n() as u32).collect(),
    };
    let failing: Vec<u32> = thresholds
        .iter()
        .copied()
        .filter(|&d| !instance.lemma_equivalence(d))
        .collect();
    let ok = instance.holds() && failing.is_empty();
    if args.json {
        let witness: Vec<&str> = instance.witness.iter().map(|&v| graph.name(v)).collect();
        print_json(
            out,
            &json!({
                "n": graph.n(),
                "gamma": instance.gamma,
                "value": instance.game_value,
                "witness": witness,
                "thresholds_checked": thresholds.len(),
                "failing_thresholds": failing,
                "ok": ok,
            }),
        )?;
    } else {
        let verdict = if ok { "ok" } else { "mismatch" };
        writeln!(
            out,
            "gamma={} value={} {verdict}",
            instance.gamma, instance.game_value
        )?;
        if let Some(d) = d {
            writeln!(out, "d={d} equivalence={}", failing.is_empty())?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn verify_separation(m: u32, json: bool, out: &mut dyn Write) -> CliResult {
    // Exact equality is only claimed where the brute-force oracle backs it;
    // larger m is computed and reported without a verdict.
    let asserted = m <= SEPARATION_MAX_M;
    let report = if asserted {
        hangman_core::verify_separation(m)?
    } else {
        separation_values(m)?
    };
    let mut fields = report.fields();
    fields.push(("asserted", asserted.to_string()));
    if json {
        let map: serde_json::Map<String, Value> = fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), json_scalar(&v)))
            .collect();
        print_json(out, &Value::Object(map))?;
    } else {
        for (k, v) in fields {
            writeln!(out, "{k}={v}")?;
        }
    }
    if !asserted || report.holds() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn json_scalar(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.to_string()))
}

fn play(args: &PlayArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CliResult {
    let lexicon = load_lexicon(&args.lexicon.lexicon, args.lexicon.lexicon_dir.as_deref())?;
    let style = lexicon.style();
    let mut secret = None;
    let mut setter: Box<dyn SetterStrategy> = match args.setter.as_str() {
        "honest" => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(0));
            let word = lexicon.word(rng.gen_range(0..lexicon.len())).clone();
            secret = Some(word.clone());
            Box::new(HonestSetter::new(word))
        }
        "greedy" => Box::new(GreedySetter),
        "optimal" => Box::new(OptimalSetter::new()),
        other => return Err(ServiceError::UnknownSetter(other.to_string()).into()),
    };
    let mut state = GameState::new(lexicon.clone());
    writeln!(
        out,
        "mask={} failed=0 max_fails={}",
        style.mask(state.mask()),
        args.max_fails
    )?;
    let mut status = "active";
    let mut lines = input.lines();
    while status == "active" {
        let Some(line) = lines.next() else { break };
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let Some(s) = style.parse_symbol(text).filter(|s| s.id() <= lexicon.sigma()) else {
            writeln!(out, "{text}: not a symbol")?;
            continue;
        };
        if !state.remaining().contains(s) {
            writeln!(out, "{text}: already guessed")?;
            continue;
        }
        let reveal = setter.answer(&state, s)?;
        state = state.apply_answer(s, reveal)?;
        status = if state.failed() > args.max_fails {
            "setter_won"
        } else if state.is_solved() {
            "guesser_won"
        } else {
            "active"
        };
        writeln!(
            out,
            "{} {} mask={} failed={}",
            style.symbol(s),
            reveal,
            style.mask(state.mask()),
            state.failed()
        )?;
    }
    let word = match secret {
        Some(w) => w,
        None => state
            .consistent()
            .iter()
            .map(|&i| lexicon.word(i))
            .min()
            .expect("consistent word")
            .clone(),
    };
    writeln!(out, "status={status} word={}", style.word(&word))?;
    Ok(())
}

fn serve(args: &ServeArgs, out: &mut dyn Write) -> CliResult {
    let _ = tracing_subscriber::fmt()
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env()
                .unwrap_or_else(|_| tracing_subscriber::EnvFilter::new("info")),
        )
        .try_init();
    let addr: SocketAddr = format!("{}:{}", args.host, args.port)
        .parse()
        .map_err(|e| CliError::Domain(format!("bad listen address: {e}")))?;
    let service = Arc::new(GameService::new(ServiceConfig {
        lexicon_dir: args.lexicon_dir.clone(),
        idle_timeout: Duration::from_secs(args.idle_secs),
    }));
    writeln!(out, "listening on http://{addr}")?;
    out.flush()?;
    let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    runtime.block_on(hangman_service::serve(service, addr, args.static_dir.clone()))?;
    Ok(())
}
