//! Campaign execution: every (instance, palette, Bob) game of a config,
//! run in parallel and merged in game-id order.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::bounds::{andres_bounds, theorem_bound};
use super::config::{Archive, ExperimentConfig};
use super::monitor::{InvariantReport, Monitor};
use super::players::{AlicePlayer, BobPlayer, Lookahead};
use crate::forest::{analyze, DecompositionError, Relations, RootPolicy};
use crate::game::{play, EventSink, Mover, Status, Strategy, Transcript};
use crate::graph::{degeneracy, generate, Family, Graph, GraphError};

/// SplitMix64 step, used to derive independent seeds.
pub fn mix(a: u64, b: u64) -> u64 {
    let mut z = a ^ b.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A generated graph with its decomposition.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    /// Family name and parameters as written in the reports.
    pub family: String,
    pub params: String,
    pub graph_seed: u64,
    pub graph: Arc<Graph>,
    pub relations: Arc<Relations>,
    pub degeneracy: usize,
}

impl Instance {
    pub fn new(label: String, family: &Family, graph_seed: u64, root: RootPolicy) -> Result<Self, CampaignError> {
        let graph = Arc::new(generate(family, graph_seed)?);
        let mut inst = Self::from_graph(label, family.name(), graph, root)?;
        inst.params = family.params_label();
        inst.graph_seed = graph_seed;
        Ok(inst)
    }

    /// An instance on a given graph, reported under family `name`.
    pub fn from_graph(label: String, name: &str, graph: Arc<Graph>, root: RootPolicy) -> Result<Self, CampaignError> {
        let (_, relations) = analyze(&graph, root)?;
        let degeneracy = degeneracy(&graph);
        Ok(Instance {
            label,
            family: name.into(),
            params: String::new(),
            graph_seed: 0,
            graph,
            relations: Arc::new(relations),
            degeneracy,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }

    pub fn arboricity(&self) -> usize {
        self.relations.forest_count()
    }

    pub fn theorem_bound(&self) -> usize {
        theorem_bound(self.max_degree(), self.arboricity()).expect("a ≤ Δ for simple graphs")
    }
}

/// Family, parameters and graph seed.
type GraphKey = (String, String, u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    AliceWins,
    BobWins,
    /// Alice's player reported a failure.
    AliceStuck,
    /// Bob's player reported a failure or played illegally.
    BobError,
}

/// One row of `games.csv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameRecord {
    pub id: String,
    pub family: String,
    pub params: String,
    pub graph_seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub arboricity: usize,
    pub degeneracy: usize,
    pub palette_rule: String,
    pub palette: usize,
    pub theorem_bound: usize,
    pub alice: String,
    pub bob: String,
    pub game_seed: u64,
    pub outcome: Outcome,
    pub moves: usize,
    pub monitored: bool,
    pub violations: u64,
    pub failure: String,
}

impl GameRecord {
    /// A loss of the activation strategy at a palette the theorem covers.
    pub fn is_defect(&self) -> bool {
        self.alice == AlicePlayer::Activation.to_string()
            && self.palette >= self.theorem_bound
            && self.outcome != Outcome::AliceWins
    }
}

#[derive(Debug, Clone)]
pub struct GameResult {
    pub record: GameRecord,
    pub invariants: InvariantReport,
    pub down_brother_answers_off_neutral: u64,
    pub transcript: Transcript,
}

/// Everything a game needs besides the instance.
#[derive(Debug, Clone)]
pub struct GameSetup {
    pub id: String,
    pub palette_rule: String,
    pub palette: usize,
    pub alice: AlicePlayer,
    pub bob: BobPlayer,
    pub lookahead: Lookahead,
    pub game_seed: u64,
    /// Attach the monitors (only honored for the activation strategy).
    pub monitors: bool,
}

pub fn run_game(instance: &Instance, setup: &GameSetup) -> GameResult {
    let alice = setup.alice.build(&instance.relations);
    let bob = setup.bob.build(&instance.relations, setup.lookahead, setup.game_seed);
    run_game_with(instance, setup, alice, bob)
}

/// [`run_game`] with the players supplied by the caller; `setup.alice` and
/// `setup.bob` only label the record and gate the monitors.
pub fn run_game_with(
    instance: &Instance,
    setup: &GameSetup,
    mut alice: Box<dyn Strategy + Send>,
    mut bob: Box<dyn Strategy + Send>,
) -> GameResult {
    let monitored = setup.monitors && setup.alice.follows_strategy();
    let mut monitor = monitored.then(|| Monitor::new(instance.relations.clone(), setup.id.clone(), true));
    let sink = monitor.as_mut().map(|m| m as &mut dyn EventSink);
    let played = play(instance.graph.clone(), setup.palette, &mut *alice, &mut *bob, setup.game_seed, sink);
    let (mut transcript, outcome, failure) = match played {
        Ok(t) => {
            let outcome = if t.outcome() == Some(Status::AliceWins) { Outcome::AliceWins } else { Outcome::BobWins };
            (t, outcome, String::new())
        }
        Err(e) => {
            let outcome = if e.mover == Mover::Alice { Outcome::AliceStuck } else { Outcome::BobError };
            (*e.transcript, outcome, e.kind.to_string())
        }
    };
    let (invariants, off_neutral) = match monitor {
        Some(m) => {
            transcript.events.extend(m.snapshot_events());
            let off = m.down_brother_answers_off_neutral();
            (m.into_report(), off)
        }
        None => (InvariantReport::default(), 0),
    };
    let g = &instance.graph;
    let record = GameRecord {
        id: setup.id.clone(),
        family: instance.family.clone(),
        params: instance.params.clone(),
        graph_seed: instance.graph_seed,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        max_degree: instance.max_degree(),
        arboricity: instance.arboricity(),
        degeneracy: instance.degeneracy,
        palette_rule: setup.palette_rule.clone(),
        palette: setup.palette,
        theorem_bound: instance.theorem_bound(),
        alice: setup.alice.to_string(),
        bob: setup.bob.to_string(),
        game_seed: setup.game_seed,
        outcome,
        moves: transcript.move_count(),
        monitored,
        violations: invariants.total_violations(),
        failure,
    };
    GameResult { record, invariants, down_brother_answers_off_neutral: off_neutral, transcript }
}

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error("graph generation failed: {0}")]
    Graph(#[from] GraphError),
    #[error("decomposition failed: {0}")]
    Decomposition(#[from] DecompositionError),
}

/// Aggregated results of a campaign.
#[derive(Debug, Clone, Default)]
pub struct CampaignReport {
    pub name: String,
    /// Sorted by game id.
    pub records: Vec<GameRecord>,
    pub invariants: InvariantReport,
    pub down_brother_answers_off_neutral: u64,
    /// Archived transcripts by game id.
    pub transcripts: BTreeMap<String, Transcript>,
    /// Instances without edges, which host no game.
    pub skipped: Vec<String>,
}

/// Win counts for one (family, Bob, palette rule) cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub family: String,
    pub alice: String,
    pub bob: String,
    pub palette_rule: String,
    pub games: usize,
    pub alice_wins: usize,
    pub bob_wins: usize,
    pub alice_stuck: usize,
    pub bob_errors: usize,
    pub alice_win_rate: String,
}

/// Theorem bound against the older degeneracy bounds for one (Δ, a, k).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ImprovementRow {
    pub max_degree: usize,
    pub arboricity: usize,
    pub degeneracy: usize,
    pub theorem_bound: usize,
    pub andres_general: usize,
    pub andres_large_degree: Option<usize>,
    pub andres_small_degree: Option<usize>,
    pub andres_best: usize,
    /// `andres_best - theorem_bound`; positive means the theorem is tighter.
    pub improvement: i64,
    pub instances: usize,
}

impl CampaignReport {
    pub fn defects(&self) -> impl Iterator<Item = &GameRecord> {
        self.records.iter().filter(|r| r.is_defect())
    }

    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut cells: BTreeMap<(String, String, String, String), [usize; 4]> = BTreeMap::new();
        for r in &self.records {
            let cell = cells.entry((r.family.clone(), r.alice.clone(), r.bob.clone(), r.palette_rule.clone())).or_default();
            cell[r.outcome as usize] += 1;
        }
        cells
            .into_iter()
            .map(|((family, alice, bob, palette_rule), c)| {
                let games = c.iter().sum::<usize>();
                SummaryRow {
                    family,
                    alice,
                    bob,
                    palette_rule,
                    games,
                    alice_wins: c[0],
                    bob_wins: c[1],
                    alice_stuck: c[2],
                    bob_errors: c[3],
                    alice_win_rate: format!("{:.4}", c[0] as f64 / games as f64),
                }
            })
            .collect()
    }

    pub fn improvement(&self) -> Vec<ImprovementRow> {
        let mut seen: BTreeMap<(usize, usize, usize), BTreeSet<GraphKey>> = BTreeMap::new();
        for r in &self.records {
            seen.entry((r.max_degree, r.arboricity, r.degeneracy)).or_default().insert((
                r.family.clone(),
                r.params.clone(),
                r.graph_seed,
            ));
        }
        seen.into_iter()
            .filter_map(|((delta, a, k), instances)| {
                let t = theorem_bound(delta, a).ok()?;
                let b = andres_bounds(delta, k).ok()?;
                Some(ImprovementRow {
                    max_degree: delta,
                    arboricity: a,
                    degeneracy: k,
                    theorem_bound: t,
                    andres_general: b.general.value,
                    andres_large_degree: b.large_degree.applicable.then_some(b.large_degree.value),
                    andres_small_degree: b.small_degree.applicable.then_some(b.small_degree.value),
                    andres_best: b.best(),
                    improvement: b.best() as i64 - t as i64,
                    instances: instances.len(),
                })
            })
            .collect()
    }
}

/// Generates every instance of the config, in order.
pub fn instances(config: &ExperimentConfig) -> Result<Vec<Instance>, CampaignError> {
    let mut out = Vec::new();
    for (fi, family) in config.families.iter().enumerate() {
        for rep in 0..config.repetitions {
            let graph_seed = mix(mix(config.seed, fi as u64), rep as u64);
            let label = format!("f{fi:02}-r{rep:04}");
            out.push(Instance::new(label, family, graph_seed, config.root)?);
        }
    }
    Ok(out)
}

pub fn run_campaign(config: &ExperimentConfig) -> Result<CampaignReport, CampaignError> {
    let instances = instances(config)?;
    let mut skipped = Vec::new();
    let mut jobs: Vec<(usize, GameSetup)> = Vec::new();
    for (n, inst) in instances.iter().enumerate() {
        if inst.graph.edge_count() == 0 {
            skipped.push(inst.label.clone());
            continue;
        }
        let palettes = config
            .palette
            .palettes(inst.max_degree(), inst.arboricity())
            .expect("decompositions of simple graphs have a ≤ Δ");
        for (pi, (rule, palette)) in palettes.into_iter().enumerate() {
            for (bi, &bob) in config.bobs.iter().enumerate() {
                let id = format!("{}-p{pi:02}-b{bi}", inst.label);
                let game_seed = mix(inst.graph_seed, (pi * 16 + bi) as u64 + 1);
                jobs.push((
                    n,
                    GameSetup {
                        id,
                        palette_rule: rule.clone(),
                        palette,
                        alice: config.alice,
                        bob,
                        lookahead: config.lookahead,
                        game_seed,
                        monitors: config.monitors.enabled && palette >= inst.theorem_bound(),
                    },
                ));
            }
        }
    }
    let run = |(n, setup): &(usize, GameSetup)| run_game(&instances[*n], setup);
    #[cfg(feature = "parallel")]
    let results: Vec<GameResult> = {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<GameResult> = jobs.iter().map(run).collect();

    let mut report = CampaignReport { name: config.name.clone(), skipped, ..CampaignReport::default() };
    for r in results {
        report.invariants.merge(&r.invariants);
        report.down_brother_answers_off_neutral += r.down_brother_answers_off_neutral;
        let keep = match config.output.archive {
            Archive::All => true,
            Archive::Failures => r.record.is_defect() || r.record.violations > 0,
            Archive::None => false,
        };
        if keep {
            report.transcripts.insert(r.record.id.clone(), r.transcript);
        }
        report.records.push(r.record);
    }
    report.records.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(report)
}
