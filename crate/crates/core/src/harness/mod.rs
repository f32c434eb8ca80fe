//! Bound formulas, invariant monitors and experiment campaigns.

mod bounds;
mod campaign;
mod config;
mod monitor;
#[cfg(feature = "mutants")]
pub mod mutation;
mod players;
mod report;

pub use bounds::{andres_bounds, lower_bound, theorem_bound, trivial_upper_bound, AndresBounds, BoundError, FlaggedBound};
pub use campaign::{
    instances, mix, run_campaign, run_game, run_game_with, CampaignError, CampaignReport, GameRecord, GameResult, GameSetup,
    ImprovementRow, Instance, Outcome, SummaryRow,
};
pub use config::{Archive, ConfigError, ExperimentConfig, MonitorConfig, OutputConfig, PaletteRule, OUTPUT_DIR_ENV};
pub use monitor::{Check, CheckStats, InvariantReport, Monitor, Violation};
pub use players::{AlicePlayer, BobPlayer, Lookahead};
pub use report::{csv_string, invariant_rows, ReportError, REPORT_SCHEMA};
