//! Campaign configuration, read from TOML.
//!
//! ```toml
//! name = "forests"
//! seed = 7
//! repetitions = 20
//! bobs = ["random", "spoiler", "minimax"]
//! alice = "activation"
//! root = { policy = "first_vertex" }
//!
//! [palette]
//! rule = "theorem"          # or "theorem_offset" with offset = -1,
//!                           # "fixed" with k = 12, "sweep" with ks = [10, 12]
//!
//! [[families]]
//! family = "random_tree"
//! n = 20
//! max_degree = 6
//!
//! [monitors]
//! enabled = true
//!
//! [lookahead]
//! plies = 3
//! beam = 4
//!
//! [output]
//! dir = "campaign-out"      # default: $ICG_OUTPUT_DIR, else ./icg-output
//! archive = "failures"      # "failures", "all" or "none"
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::bounds::{theorem_bound, BoundError};
use super::players::{AlicePlayer, BobPlayer, Lookahead};
use crate::forest::RootPolicy;
use crate::graph::Family;

pub const OUTPUT_DIR_ENV: &str = "ICG_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case", deny_unknown_fields)]
pub enum PaletteRule {
    #[default]
    Theorem,
    TheoremOffset {
        offset: i64,
    },
    Fixed {
        k: usize,
    },
    Sweep {
        ks: Vec<usize>,
    },
}

impl PaletteRule {
    /// `(label, palette)` pairs for one instance. Offsets that drop below
    /// one color yield nothing.
    pub fn palettes(&self, max_degree: usize, arboricity: usize) -> Result<Vec<(String, usize)>, BoundError> {
        Ok(match self {
            PaletteRule::Theorem => vec![("theorem".into(), theorem_bound(max_degree, arboricity)?)],
            PaletteRule::TheoremOffset { offset } => {
                let k = theorem_bound(max_degree, arboricity)? as i64 + offset;
                if k >= 1 {
                    vec![(format!("theorem{offset:+}"), k as usize)]
                } else {
                    Vec::new()
                }
            }
            PaletteRule::Fixed { k } => vec![(format!("k={k}"), *k)],
            PaletteRule::Sweep { ks } => ks.iter().map(|k| (format!("k={k}"), *k)).collect(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Archive {
    None,
    #[default]
    Failures,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonitorConfig {
    pub enabled: bool,
}

impl Default for MonitorConfig {
    fn default() -> Self {
        MonitorConfig { enabled: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: Option<PathBuf>,
    #[serde(default)]
    pub archive: Archive,
}

fn one() -> usize {
    1
}

fn campaign_bobs() -> Vec<BobPlayer> {
    BobPlayer::CAMPAIGN.to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "one")]
    pub repetitions: usize,
    #[serde(default)]
    pub families: Vec<Family>,
    #[serde(default)]
    pub palette: PaletteRule,
    #[serde(default)]
    pub alice: AlicePlayer,
    #[serde(default = "campaign_bobs")]
    pub bobs: Vec<BobPlayer>,
    #[serde(default)]
    pub root: RootPolicy,
    #[serde(default)]
    pub monitors: MonitorConfig,
    #[serde(default)]
    pub lookahead: Lookahead,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid config: {0}")]
    Toml(#[from] toml::de::Error),
}

impl ExperimentConfig {
    pub fn new(name: impl Into<String>, families: Vec<Family>) -> Self {
        ExperimentConfig {
            name: name.into(),
            seed: 0,
            repetitions: 1,
            families,
            palette: PaletteRule::Theorem,
            alice: AlicePlayer::Activation,
            bobs: campaign_bobs(),
            root: RootPolicy::FirstVertex,
            monitors: MonitorConfig::default(),
            lookahead: Lookahead::default(),
            output: OutputConfig::default(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// The configured directory, else `$ICG_OUTPUT_DIR`, else `icg-output`.
    pub fn output_dir(&self) -> PathBuf {
        self.output
            .dir
            .clone()
            .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("icg-output"))
    }
}
