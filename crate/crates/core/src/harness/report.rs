//! Campaign output files. CSV files start with a `# schema=N` comment line;
//! JSON files carry a `schema` field.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::campaign::CampaignReport;
use super::monitor::{Check, InvariantReport};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Serializes `rows` as CSV under a schema comment line.
pub fn csv_string<T: Serialize>(rows: &[T]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv is utf-8");
    Ok(format!("# schema={REPORT_SCHEMA}\n{body}"))
}

#[derive(Debug, Serialize)]
struct InvariantRow {
    check: &'static str,
    evaluations: u64,
    violations: u64,
    worst_slack: Option<i64>,
    first_violation_game: Option<String>,
    first_violation_move: Option<usize>,
}

pub fn invariant_rows(report: &InvariantReport) -> Vec<impl Serialize> {
    Check::ALL
        .iter()
        .filter_map(|&c| report.checks.get(&c).map(|s| (c, s)))
        .map(|(c, s)| InvariantRow {
            check: c.name(),
            evaluations: s.evaluations,
            violations: s.violations,
            worst_slack: s.worst_slack,
            first_violation_game: s.first_violation.as_ref().map(|v| v.game.clone()),
            first_violation_move: s.first_violation.as_ref().map(|v| v.move_index),
        })
        .collect()
}

#[derive(Serialize)]
struct InvariantFile<'a> {
    schema: u32,
    campaign: &'a str,
    down_brother_answers_off_neutral: u64,
    report: &'a InvariantReport,
}

impl CampaignReport {
    pub fn invariants_json(&self) -> String {
        let file = InvariantFile {
            schema: REPORT_SCHEMA,
            campaign: &self.name,
            down_brother_answers_off_neutral: self.down_brother_answers_off_neutral,
            report: &self.invariants,
        };
        serde_json::to_string_pretty(&file).expect("report serializes") + "\n"
    }

    /// Writes `games.csv`, `summary.csv`, `improvement.csv`,
    /// `invariants.csv`, `invariants.json` and one `transcripts/<id>.jsonl`
    /// per archived game. Returns the paths written.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, ReportError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| ReportError::Io { path, source }
        };
        std::fs::create_dir_all(dir).map_err(io(dir))?;
        let files = [
            ("games.csv", csv_string(&self.records)?),
            ("summary.csv", csv_string(&self.summary())?),
            ("improvement.csv", csv_string(&self.improvement())?),
            ("invariants.csv", csv_string(&invariant_rows(&self.invariants))?),
            ("invariants.json", self.invariants_json()),
        ];
        let mut written = Vec::new();
        for (name, text) in files {
            let path = dir.join(name);
            std::fs::write(&path, text).map_err(io(&path))?;
            written.push(path);
        }
        if !self.transcripts.is_empty() {
            let tdir = dir.join("transcripts");
            std::fs::create_dir_all(&tdir).map_err(io(&tdir))?;
            for (id, t) in &self.transcripts {
                let path = tdir.join(format!("{id}.jsonl"));
                let mut f = std::fs::File::create(&path).map_err(io(&path))?;
                f.write_all(t.to_jsonl().as_bytes()).map_err(io(&path))?;
                written.push(path);
            }
        }
        Ok(written)
    }
}
