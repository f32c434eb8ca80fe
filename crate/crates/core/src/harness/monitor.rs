//! Invariant monitors over the event stream of a strategy game.
//!
//! A [`Monitor`] mirrors the coloring and Alice's activations from the
//! events it receives, so its verdicts depend only on the transcript prefix
//! and the relations. It never influences play.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::color::{Color, ColorSet};
use crate::forest::{Relation, Relations};
use crate::game::{Event, EventSink, IncidenceRef, Mover, Rule};
use crate::graph::{Graph, IncidenceId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Colored sons plus colored uncles of a down incidence at the moment it
    /// is colored: at most `4a - 2`.
    DownConflicts,
    /// Colored top-sons plus colored down-uncles of a top incidence at the
    /// moment it is colored: at most `5a - 1`.
    TopConflicts,
    /// Every uncolored down incidence has an available color.
    DownAvailable,
    /// A down incidence whose down-brothers carry at least `4a - 1` colors
    /// can reuse one of them.
    DownBrotherReuse,
    /// The palette has at least `Δ + 5a - 2` colors.
    PaletteSize,
    /// `|φ(dB(i))| ≤ ⌊|dB(i)|/2⌋ + 2a` for every incidence.
    DownBrotherColors,
    /// Every uncolored top incidence has an available color.
    TopAvailable,
    /// No incidence is climbed more than twice.
    ClimbLimit,
    /// Alice colors only neutral or active incidences outside neutral moves.
    NeutralOrActive,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::DownConflicts,
        Check::TopConflicts,
        Check::DownAvailable,
        Check::DownBrotherReuse,
        Check::PaletteSize,
        Check::DownBrotherColors,
        Check::TopAvailable,
        Check::ClimbLimit,
        Check::NeutralOrActive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DownConflicts => "down_conflicts",
            Check::TopConflicts => "top_conflicts",
            Check::DownAvailable => "down_available",
            Check::DownBrotherReuse => "down_brother_reuse",
            Check::PaletteSize => "palette_size",
            Check::DownBrotherColors => "down_brother_colors",
            Check::TopAvailable => "top_available",
            Check::ClimbLimit => "climb_limit",
            Check::NeutralOrActive => "neutral_or_active",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    /// Campaign game id, which names the archived transcript.
    pub game: String,
    /// Number of moves played when the violation was observed.
    pub move_index: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStats {
    pub evaluations: u64,
    pub violations: u64,
    /// Smallest `bound - observed` seen.
    pub worst_slack: Option<i64>,
    pub first_violation: Option<Violation>,
}

impl CheckStats {
    fn merge(&mut self, other: &CheckStats) {
        self.evaluations += other.evaluations;
        self.violations += other.violations;
        self.worst_slack = match (self.worst_slack, other.worst_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if let Some(v) = &other.first_violation {
            if self.first_violation.as_ref().is_none_or(|mine| v < mine) {
                self.first_violation = Some(v.clone());
            }
        }
    }
}

/// Counters for every check; `violations == 0` everywhere is the pass
/// condition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub checks: BTreeMap<Check, CheckStats>,
}

impl InvariantReport {
    pub fn get(&self, check: Check) -> CheckStats {
        self.checks.get(&check).cloned().unwrap_or_default()
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.values().map(|s| s.violations).sum()
    }

    pub fn merge(&mut self, other: &InvariantReport) {
        for (check, stats) in &other.checks {
            self.checks.entry(*check).or_default().merge(stats);
        }
    }
}

/// Monitors one game. `strategy_alice` enables the checks that presuppose
/// Alice follows the activation strategy (all of them but the palette
/// check, which is pure arithmetic).
#[derive(Debug, Clone)]
pub struct Monitor {
    relations: Arc<Relations>,
    game: String,
    strategy_alice: bool,
    palette: Color,
    coloring: Vec<Color>,
    active: Vec<bool>,
    moves: usize,
    neutral_cycle: Vec<IncidenceId>,
    last_rule: Option<Rule>,
    /// For each incidence `j`, the incidences whose down-brothers contain `j`.
    in_down_brothers_of: Vec<Vec<IncidenceId>>,
    report: InvariantReport,
    down_brother_answers_off_neutral: u64,
}

impl Monitor {
    pub fn new(relations: Arc<Relations>, game: impl Into<String>, strategy_alice: bool) -> Self {
        let n = relations.incidence_count();
        let mut in_down_brothers_of = vec![Vec::new(); n];
        for i in relations.ordered() {
            for &j in relations.get(i, Relation::DownBrothers) {
                in_down_brothers_of[j.0].push(i);
            }
        }
        let mut report = InvariantReport::default();
        let checks: &[Check] = if strategy_alice { &Check::ALL } else { &[Check::PaletteSize] };
        for &c in checks {
            report.checks.insert(c, CheckStats::default());
        }
        Monitor {
            relations,
            game: game.into(),
            strategy_alice,
            palette: 0,
            coloring: vec![0; n],
            active: vec![false; n],
            moves: 0,
            neutral_cycle: Vec::new(),
            last_rule: None,
            in_down_brothers_of,
            report,
            down_brother_answers_off_neutral: 0,
        }
    }

    pub fn report(&self) -> &InvariantReport {
        &self.report
    }

    pub fn into_report(self) -> InvariantReport {
        self.report
    }

    /// Down-brother answers whose incidence was not neutral when colored.
    /// These are exempt from [`Check::NeutralOrActive`] and counted here.
    pub fn down_brother_answers_off_neutral(&self) -> u64 {
        self.down_brother_answers_off_neutral
    }

    /// One snapshot event per check, for appending to a transcript.
    pub fn snapshot_events(&self) -> Vec<Event> {
        self.report
            .checks
            .iter()
            .map(|(c, s)| Event::Snapshot { check: c.name().into(), evaluations: s.evaluations, violations: s.violations })
            .collect()
    }

    fn observe(&mut self, check: Check, bound: i64, value: i64, detail: impl FnOnce() -> String) {
        let stats = self.report.checks.entry(check).or_default();
        stats.evaluations += 1;
        let slack = bound - value;
        stats.worst_slack = Some(stats.worst_slack.map_or(slack, |s| s.min(slack)));
        if slack < 0 {
            stats.violations += 1;
            if stats.first_violation.is_none() {
                stats.first_violation =
                    Some(Violation { game: self.game.clone(), move_index: self.moves, detail: detail() });
            }
        }
    }

    fn colored(&self, i: IncidenceId, r: Relation) -> i64 {
        self.relations.colored_count(&self.coloring, i, r) as i64
    }

    fn is_neutral(&self, i: IncidenceId) -> bool {
        self.coloring[i.0] == 0 && self.relations.fathers(i).all(|f| self.coloring[f.0] != 0)
    }

    fn available(&self, graph: &Graph, i: IncidenceId) -> ColorSet {
        let mut forbidden = ColorSet::empty();
        for &j in graph.conflicts(i) {
            if self.coloring[j.0] != 0 {
                forbidden.insert(self.coloring[j.0]);
            }
        }
        ColorSet::full(self.palette).difference(&forbidden)
    }

    fn check_coloring_moment(&mut self, graph: &Graph, i: IncidenceId) {
        let a = self.relations.forest_count() as i64;
        let r = IncidenceRef::of(graph, i);
        if self.relations.is_down(i) {
            let value = self.colored(i, Relation::TopSons)
                + self.colored(i, Relation::DownSons)
                + self.colored(i, Relation::TopUncles)
                + self.colored(i, Relation::DownUncles);
            self.observe(Check::DownConflicts, 4 * a - 2, value, || format!("down {r:?}: |S_c|+|U_c| = {value}"));
        } else {
            let value = self.colored(i, Relation::TopSons) + self.colored(i, Relation::DownUncles);
            self.observe(Check::TopConflicts, 5 * a - 1, value, || format!("top {r:?}: |tS_c|+|dU_c| = {value}"));
        }
    }

    fn check_alice_choice(&mut self, graph: &Graph, i: IncidenceId) {
        let in_cycle = self.neutral_cycle.contains(&i);
        let ok = self.is_neutral(i) || self.active[i.0] || in_cycle;
        if !ok && self.last_rule == Some(Rule::DownBrother) {
            self.down_brother_answers_off_neutral += 1;
            return;
        }
        let r = IncidenceRef::of(graph, i);
        self.observe(Check::NeutralOrActive, 0, (!ok) as i64, || format!("{r:?} was neither neutral nor active"));
    }

    fn check_after_move(&mut self, graph: &Graph, moved: IncidenceId) {
        let a = self.relations.forest_count() as i64;
        let rel = self.relations.clone();
        for &i in &self.in_down_brothers_of[moved.0].clone() {
            let size = rel.get(i, Relation::DownBrothers).len() as i64;
            let value = rel.colors_of(&self.coloring, i, Relation::DownBrothers).len() as i64;
            let r = IncidenceRef::of(graph, i);
            self.observe(Check::DownBrotherColors, size / 2 + 2 * a, value, || format!("{r:?}: |φ(dB)| = {value} with |dB| = {size}"));
        }
        for i in rel.ordered() {
            if self.coloring[i.0] != 0 {
                continue;
            }
            let available = self.available(graph, i);
            let r = IncidenceRef::of(graph, i);
            if rel.is_down(i) {
                self.observe(Check::DownAvailable, 0, available.is_empty() as i64, || format!("down {r:?} has no color"));
                let brothers = rel.colors_of(&self.coloring, i, Relation::DownBrothers);
                if brothers.len() as i64 >= 4 * a - 1 {
                    let reusable = available.intersection(&brothers).len() as i64;
                    self.observe(Check::DownBrotherReuse, reusable - 1, 0, || {
                        format!("down {r:?}: none of {} down-brother colors available", brothers.len())
                    });
                }
            } else {
                self.observe(Check::TopAvailable, 0, available.is_empty() as i64, || format!("top {r:?} has no color"));
            }
        }
    }
}

impl EventSink for Monitor {
    fn record(&mut self, graph: &Graph, event: &Event) {
        match event {
            Event::Header { palette, .. } => {
                self.palette = *palette;
                let a = self.relations.forest_count() as i64;
                let need = self.relations.max_degree() as i64 + 5 * a - 2;
                let p = *palette as i64;
                self.observe(Check::PaletteSize, p - need, 0, || format!("palette {p} below Δ + 5a - 2 = {need}"));
            }
            Event::Rule { rule } if self.strategy_alice => self.last_rule = Some(*rule),
            Event::Activate { .. } if self.strategy_alice => {
                if let Some(i) = event.incidence(graph) {
                    if self.coloring[i.0] == 0 {
                        self.active[i.0] = true;
                    }
                }
            }
            Event::Climb { vertex, edge, count } if self.strategy_alice => {
                let count = *count as i64;
                self.observe(Check::ClimbLimit, 2, count, || format!("({vertex}, e{edge}) climbed {count} times"));
            }
            Event::NeutralMove { cycle } if self.strategy_alice => {
                self.neutral_cycle = cycle.iter().filter_map(|r| r.resolve(graph)).collect();
            }
            Event::Move { mover, color, .. } => {
                let Some(i) = event.incidence(graph) else { return };
                if self.strategy_alice {
                    self.check_coloring_moment(graph, i);
                    if *mover == Mover::Alice {
                        self.check_alice_choice(graph, i);
                    }
                }
                self.coloring[i.0] = *color;
                self.active[i.0] = false;
                self.moves += 1;
                self.neutral_cycle.clear();
                self.last_rule = None;
                if self.strategy_alice {
                    self.check_after_move(graph, i);
                }
            }
            _ => {}
        }
    }
}
