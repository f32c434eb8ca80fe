//! `icg`: play, solve and verify incidence coloring games.
//!
//! Exit codes: 0 success, 2 invalid input, 3 invariant violation, 4 strategy
//! failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use icg_core::forest::{analyze, RootPolicy};
use icg_core::game::{play, EventSink, Status};
use icg_core::graph::{generate, Family};
use icg_core::harness::{
    andres_bounds, lower_bound, run_campaign, theorem_bound, trivial_upper_bound, AlicePlayer, BobPlayer, ExperimentConfig,
    Lookahead, Monitor,
};
use icg_core::opponents::{default_k_range, exact_ig, static_chi_i, SolveLimits, DEFAULT_CHI_CAP};
use icg_core::Graph;

const INVALID: u8 = 2;
const VIOLATION: u8 = 3;
const STRATEGY_FAILURE: u8 = 4;

#[derive(Parser)]
#[command(name = "icg", version, about = "Incidence coloring game toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphSource {
    /// Graph file: a line `n m` followed by `m` lines `u v`.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Generated family: path, cycle, star, wheel, complete, random_tree,
    /// random_forest_union, gnp.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Vec<f64>,
    /// Seed for random families (and the game, for `play`).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GraphSource {
    fn load(&self) -> Result<Graph, String> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                Graph::parse_text(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
            (None, Some(name)) => {
                let family = Family::from_name(name, &self.params).map_err(|e| e.to_string())?;
                generate(&family, self.seed).map_err(|e| e.to_string())
            }
            _ => Err("give --graph FILE or --family NAME".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Play one game and print its outcome.
    Play {
        #[command(flatten)]
        source: GraphSource,
        /// Palette size; the theorem bound when omitted.
        #[arg(long, conflicts_with = "theorem_bound")]
        k: Option<usize>,
        #[arg(long)]
        theorem_bound: bool,
        #[arg(long, default_value = "strategy")]
        alice: AlicePlayer,
        #[arg(long, default_value = "spoiler")]
        bob: BobPlayer,
        #[arg(long, default_value = "first_vertex")]
        root_policy: RootPolicy,
        /// Print the full JSON Lines transcript instead of a summary.
        #[arg(long)]
        trace: bool,
    },
    /// Solve the game exactly for a range of palette sizes.
    Exact {
        #[command(flatten)]
        source: GraphSource,
        /// Inclusive range `lo..hi` (or a single `k`).
        #[arg(long)]
        k_range: Option<String>,
        #[arg(long, default_value_t = SolveLimits::default().max_incidences)]
        max_incidences: usize,
    },
    /// Static incidence chromatic number.
    ChiI {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = DEFAULT_CHI_CAP)]
        cap: usize,
    },
    /// Print a rooted, oriented minimum forest decomposition.
    Decompose {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value = "first_vertex")]
        root_policy: RootPolicy,
        #[arg(long)]
        json: bool,
    },
    /// Palette bounds for given maximum degree and arboricity.
    Bound {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        arboricity: usize,
        /// Also print the degeneracy-based bounds.
        #[arg(long)]
        andres: bool,
        /// Degeneracy for `--andres`; defaults to the arboricity.
        #[arg(long)]
        degeneracy: Option<usize>,
    },
    /// Run a campaign from a TOML config and write its reports.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the output directory of the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Start the HTTP game service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
    },
}

struct Fail(u8, String);

impl From<String> for Fail {
    fn from(s: String) -> Self {
        Fail(INVALID, s)
    }
}

fn parse_k_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad k range {s:?}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}

fn run(cli: Cli) -> Result<(), Fail> {
    let mut out = std::io::stdout().lock();
    let mut say = |line: String| {
        let _ = writeln!(out, "{line}");
    };
    match cli.command {
        Command::Play { source, k, theorem_bound: _, alice, bob, root_policy, trace } => {
            let graph = Arc::new(source.load()?);
            let (_, relations) = analyze(&graph, root_policy).map_err(|e| e.to_string())?;
            let relations = Arc::new(relations);
            let bound = theorem_bound(graph.max_degree(), relations.forest_count()).map_err(|e| e.to_string())?;
            let palette = k.unwrap_or(bound).max(1);
            let covered = alice.follows_strategy() && palette >= bound;
            let mut monitor = covered.then(|| Monitor::new(relations.clone(), "play", true));
            let mut a = alice.build(&relations);
            let mut b = bob.build(&relations, Lookahead::default(), source.seed);
            let sink = monitor.as_mut().map(|m| m as &mut dyn EventSink);
            let played = play(graph.clone(), palette, &mut *a, &mut *b, source.seed, sink);
            let (transcript, failure) = match played {
                Ok(t) => (t, None),
                Err(e) => {
                    let msg = e.to_string();
                    (*e.transcript, Some(msg))
                }
            };
            let violations = monitor.as_ref().map_or(0, |m| m.report().total_violations());
            if trace {
                let mut t = transcript.clone();
                if let Some(m) = &monitor {
                    t.events.extend(m.snapshot_events());
                }
                say(t.to_jsonl().trim_end().to_string());
            } else {
                let outcome = match (&failure, transcript.outcome()) {
                    (Some(f), _) => format!("error: {f}"),
                    (None, Some(Status::AliceWins)) => "alice wins".into(),
                    (None, _) => "bob wins".into(),
                };
                say(format!(
                    "{outcome} after {} moves (palette {palette}, theorem bound {bound}, Δ={}, a={})",
                    transcript.move_count(),
                    graph.max_degree(),
                    relations.forest_count()
                ));
                if covered {
                    say(format!("invariant violations: {violations}"));
                }
            }
            if covered && violations > 0 {
                return Err(Fail(VIOLATION, format!("{violations} invariant violation(s)")));
            }
            if let Some(f) = failure {
                return Err(Fail(STRATEGY_FAILURE, f));
            }
            if covered && transcript.outcome() != Some(Status::AliceWins) {
                return Err(Fail(STRATEGY_FAILURE, "the activation strategy lost at a covered palette".into()));
            }
        }
        Command::Exact { source, k_range, max_incidences } => {
            let graph = source.load()?;
            let range = match k_range {
                Some(s) => parse_k_range(&s)?,
                None => default_k_range(graph.max_degree()),
            };
            let limits = SolveLimits { max_incidences, ..SolveLimits::default() };
            let result = exact_ig(&graph, range, limits).map_err(|e| e.to_string())?;
            for (k, winner) in &result.wins {
                say(format!("k={k} {winner:?}").to_lowercase());
            }
            match result.minimal_winning_k {
                Some(k) => say(format!("minimal k = {k}")),
                None => say("minimal k = none in range".into()),
            }
            if !result.monotone {
                say("note: Alice's wins are not monotone in k".into());
            }
        }
        Command::ChiI { source, cap } => {
            let graph = source.load()?;
            let r = static_chi_i(&graph, cap).map_err(|e| e.to_string())?;
            say(format!("chi_i = {}", r.chi));
        }
        Command::Decompose { source, root_policy, json } => {
            let graph = source.load()?;
            let (dec, _) = analyze(&graph, root_policy).map_err(|e| e.to_string())?;
            if json {
                say(serde_json::to_string_pretty(&dec).expect("decomposition serializes"));
            } else {
                say(format!("forests: {}", dec.forest_count));
                for (f, root) in &dec.roots {
                    say(format!("root of a tree in forest {f}: {root}"));
                }
                for (e, [u, v]) in graph.edges() {
                    let (t, h) = dec.orientation[e.0];
                    say(format!("edge {} {u}-{v}: forest {} oriented {t}->{h}", e.0, dec.forest_of[e.0]));
                }
            }
        }
        Command::Bound { delta, arboricity, andres, degeneracy } => {
            let t = theorem_bound(delta, arboricity).map_err(|e| e.to_string())?;
            say(t.to_string());
            if andres {
                let k = degeneracy.unwrap_or(arboricity);
                let b = andres_bounds(delta, k).map_err(|e| e.to_string())?;
                let flag = |ok: bool| if ok { "applicable" } else { "not applicable" };
                say(format!("andres general (k={k}): {}", b.general.value));
                say(format!("andres large degree: {} ({})", b.large_degree.value, flag(b.large_degree.applicable)));
                say(format!("andres small degree: {} ({})", b.small_degree.value, flag(b.small_degree.applicable)));
                say(format!("andres best: {}", b.best()));
                say(format!("lower bound: {}", lower_bound(delta)));
                say(format!("trivial upper bound: {}", trivial_upper_bound(delta)));
            }
        }
        Command::Verify { config, out: out_dir } => {
            let mut cfg = ExperimentConfig::load(&config).map_err(|e| e.to_string())?;
            if let Some(d) = out_dir {
                cfg.output.dir = Some(d);
            } else if let Some(d) = cfg.output.dir.as_mut().filter(|d| d.is_relative()) {
                if let Some(parent) = config.parent() {
                    *d = parent.join(&*d);
                }
            }
            let report = run_campaign(&cfg).map_err(|e| e.to_string())?;
            let dir = cfg.output_dir();
            let written = report.write(&dir).map_err(|e| Fail(1, e.to_string()))?;
            say(format!("{}: {} games, reports in {}", report.name, report.records.len(), dir.display()));
            for r in report.summary() {
                say(format!(
                    "  {} {} vs {} [{}]: {}/{} Alice wins",
                    r.family, r.alice, r.bob, r.palette_rule, r.alice_wins, r.games
                ));
            }
            let violations = report.invariants.total_violations();
            say(format!("invariant violations: {violations}; files written: {}", written.len()));
            let defects = report.defects().count();
            if defects > 0 {
                let first = report.defects().next().expect("a defect");
                return Err(Fail(STRATEGY_FAILURE, format!("{defects} covered game(s) lost; first {}", first.id)));
            }
            if violations > 0 {
                return Err(Fail(VIOLATION, format!("{violations} invariant violation(s)")));
            }
        }
        Command::Serve { port, host } => {
            let addr = std::net::SocketAddr::new(host, port);
            let rt = tokio::runtime::Runtime::new().map_err(|e| Fail(1, e.to_string()))?;
            say(format!("listening on http://{addr}"));
            rt.block_on(icg_service::serve(addr)).map_err(|e| Fail(1, e.to_string()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("icg: {msg}");
            ExitCode::from(code)
        }
    }
}
