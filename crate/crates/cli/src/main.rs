//! `syllogism`: decide, enumerate, reduce, quiz and serve from the terminal.
//!
//! Exit codes: 0 valid / success, 1 invalid, 2 usage or input error.

mod output;

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use syllogism_core::diagram::{self, Verdict};
use syllogism_core::game::{finish_session, Answer, ChallengeKind, GameSession, Mode, RankingStore};
use syllogism_core::model::{Figure, Mood};
use syllogism_core::notation::parse_syllogism_or_name;
use syllogism_core::semantics::{oracle_decide, reduce_to_figure1, SemanticsError};
use syllogism_service::{Config, Server};

use output::{EnumRow, Style};

#[derive(Debug, Parser)]
#[command(name = "syllogism", version, about = "Categorical syllogisms: decide, enumerate, reduce, quiz, serve")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a syllogism given as `MAP,SAM=>SAP` or a mnemonic such as Barbara.
    Decide {
        syllogism: String,
        /// Print the piece-by-piece interlock derivation.
        #[arg(long)]
        trace: bool,
        /// Print the first finite countermodel when invalid.
        #[arg(long)]
        countermodel: bool,
    },
    /// List the 256 standard-form moods with their verdicts.
    Enumerate {
        #[arg(long, conflicts_with = "invalid")]
        valid: bool,
        #[arg(long)]
        invalid: bool,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        figure: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Derive a figure-1 mood from a valid syllogism by conversion,
    /// contraposition and obversion.
    Reduce { syllogism: String },
    /// Valid-or-invalid quiz on random syllogisms.
    Quiz {
        #[arg(short = 'n', long = "count", default_value_t = 10)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Use this answer time instead of the measured one (for scripted runs).
        #[arg(long)]
        elapsed_ms: Option<u64>,
        /// Record the score under this name in the ranking file.
        #[arg(long)]
        player: Option<String>,
        #[arg(long, env = "SYLLOGISM_RANKINGS", default_value = syllogism_service::DEFAULT_RANKINGS)]
        rankings: PathBuf,
    },
    /// Run the HTTP API.
    Serve {
        #[arg(long, env = "SYLLOGISM_PORT", default_value_t = syllogism_service::DEFAULT_PORT)]
        port: u16,
        #[arg(long, env = "SYLLOGISM_RANKINGS", default_value = syllogism_service::DEFAULT_RANKINGS)]
        rankings: PathBuf,
        /// Allowed CORS origin; `*` for any, empty for none.
        #[arg(long, env = "SYLLOGISM_CORS_ORIGIN", default_value = "*")]
        cors_origin: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::detect();
    match run(cli.command, style) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, style: Style) -> anyhow::Result<ExitCode> {
    match command {
        Command::Decide {
            syllogism,
            trace,
            countermodel,
        } => decide(&syllogism, trace, countermodel, style),
        Command::Enumerate {
            valid,
            invalid,
            figure,
            format,
        } => {
            let only = match (valid, invalid) {
                (true, _) => Some(Verdict::Valid),
                (_, true) => Some(Verdict::Invalid),
                _ => None,
            };
            let figure = figure.map(|n| Figure::from_number(n).expect("range-checked"));
            enumerate(only, figure, format, style)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { syllogism } => reduce(&syllogism),
        Command::Quiz {
            count,
            seed,
            elapsed_ms,
            player,
            rankings,
        } => quiz(count, seed, elapsed_ms, player, rankings, style),
        Command::Serve {
            port,
            rankings,
            cors_origin,
        } => {
            serve(Config {
                port,
                rankings,
                cors_origin: (!cors_origin.is_empty()).then_some(cors_origin),
                ..Config::default()
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict_code(v: Verdict) -> ExitCode {
    match v {
        Verdict::Valid => ExitCode::SUCCESS,
        Verdict::Invalid => ExitCode::from(1),
    }
}

fn decide(input: &str, trace: bool, countermodel: bool, style: Style) -> anyhow::Result<ExitCode> {
    let s = parse_syllogism_or_name(input)?;
    let decision = diagram::decide(&s)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", style.verdict(decision.verdict))?;
    if trace {
        writeln!(out, "{}", decision.render_trace())?;
    }
    if countermodel && decision.verdict == Verdict::Invalid {
        let model = oracle_decide(&s)
            .countermodel
            .context("oracle found no countermodel for an invalid syllogism")?;
        writeln!(out, "countermodel: {}", serde_json::to_string(&model)?)?;
    }
    Ok(verdict_code(decision.verdict))
}

fn enumerate(only: Option<Verdict>, figure: Option<Figure>, format: Format, style: Style) -> anyhow::Result<()> {
    let rows: Vec<EnumRow> = Mood::all()
        .filter(|m| figure.is_none_or(|f| m.figure == f))
        .map(EnumRow::new)
        .filter(|r| only.is_none_or(|v| r.verdict == v))
        .collect();
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for r in &rows {
                writeln!(out, "{}", r.text_line(style))?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn reduce(input: &str) -> anyhow::Result<ExitCode> {
    let s = parse_syllogism_or_name(input)?;
    let reduction = match reduce_to_figure1(&s) {
        Ok(r) => r,
        Err(SemanticsError::NotValid) => {
            eprintln!("{s} is not valid; only valid syllogisms reduce");
            return Ok(ExitCode::from(1));
        }
        Err(e) => bail!(e),
    };
    let target = reduction.target;
    let name = target.mnemonic().unwrap_or("?");
    let mut out = io::stdout().lock();
    if reduction.steps.is_empty() {
        writeln!(out, "{s} is already figure 1 ({name}, {target})")?;
        return Ok(ExitCode::SUCCESS);
    }
    writeln!(out, "start: {s}")?;
    for line in reduction.lines() {
        writeln!(out, "{line}")?;
    }
    writeln!(out, "target: {name} ({target})")?;
    Ok(ExitCode::SUCCESS)
}

fn quiz(
    count: usize,
    seed: Option<u64>,
    fixed_elapsed: Option<u64>,
    player: Option<String>,
    rankings: PathBuf,
    style: Style,
) -> anyhow::Result<ExitCode> {
    let seed = seed.unwrap_or_else(rand::random);
    let mut session = GameSession::new(Mode::LearningQuiz, seed, count)?;
    let store = player
        .as_ref()
        .map(|_| RankingStore::open(&rankings))
        .transpose()
        .with_context(|| format!("opening ranking file {}", rankings.display()))?;
    let challenges = session.challenges().to_vec();
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    let mut out = io::stdout().lock();
    writeln!(out, "seed {seed}, {count} questions; answer v(alid), i(nvalid) or q(uit)")?;
    'challenges: for (i, c) in challenges.iter().enumerate() {
        debug_assert_eq!(c.kind, ChallengeKind::Judge);
        let started = Instant::now();
        let answer = loop {
            write!(out, "[{}/{}] {}  ? ", i + 1, count, c.syllogism)?;
            out.flush()?;
            let Some(line) = lines.next().transpose()? else {
                writeln!(out)?;
                break 'challenges;
            };
            match line.trim().to_ascii_lowercase().as_str() {
                "q" | "quit" => break 'challenges,
                "v" | "valid" | "i" | "invalid" => break line.parse::<Answer>().expect("infallible"),
                _ => writeln!(out, "please answer v, i or q")?,
            }
        };
        let elapsed = fixed_elapsed.unwrap_or_else(|| started.elapsed().as_millis() as u64);
        let outcome = session.submit_answer(&c.id, answer, elapsed)?;
        if outcome.correct {
            writeln!(out, "{} +{} (streak {})", style.good("correct"), outcome.delta, outcome.streak)?;
        } else {
            writeln!(out, "{}: it is {}", style.bad("wrong"), outcome.expected)?;
        }
    }
    let answered = session.answers().len();
    if answered < count {
        writeln!(out, "stopped after {answered} of {count}")?;
    }
    writeln!(out, "score: {}", session.score())?;
    if let (Some(player), Some(store)) = (player, store) {
        let entry = finish_session(&mut session, &store, &player, true)?;
        let rank = store
            .top(Some(Mode::LearningQuiz), usize::MAX)
            .iter()
            .position(|e| e.session_id == entry.session_id)
            .map_or(0, |p| p + 1);
        writeln!(out, "recorded for {} in {} (rank {rank})", entry.player, store.path().display())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn serve(config: Config) -> anyhow::Result<()> {
    tracing_subscriber::fmt()
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()),
        )
        .with_writer(io::stderr)
        .init();
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let server = Server::bind(&config).await?;
        let addr = server.local_addr()?;
        let mut out = io::stdout().lock();
        writeln!(out, "listening on http://127.0.0.1:{}", addr.port())?;
        out.flush()?;
        drop(out);
        server.run().await?;
        Ok(())
    })
}
