//! Property-suite runner behind the CLI `verify` command.
//!
//! Each suite re-checks one block of invariants on the requested systems and
//! aggregates into a [`VerifyReport`]. Reports are deterministic functions of
//! `(suite, system, seed)`: all randomness is drawn from per-case
//! seeded generators.

mod appendix_a;
mod appendix_b;
mod section1;
mod section2;
mod section3;
mod section5;
mod section6;
pub(crate) mod util;

use crate::{Error, Result};
use serde::Serialize;
use std::fmt::Display;
use std::path::PathBuf;

/// Outcome of one suite run on one system.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub system: String,
    pub cases_run: u64,
    pub cases_failed: u64,
    pub seed: u64,
    pub failures: Vec<FailureRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub case: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Accumulates case results for one report.
pub(crate) struct Recorder {
    suite: String,
    system: String,
    seed: u64,
    cases_run: u64,
    failures: Vec<FailureRecord>,
}

impl Recorder {
    pub fn new(suite: &str, system: &str, seed: u64) -> Self {
        Recorder {
            suite: suite.to_string(),
            system: system.to_string(),
            seed,
            cases_run: 0,
            failures: Vec::new(),
        }
    }

    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        case: &str,
        inputs: impl Display,
        expected: T,
        got: T,
    ) {
        self.cases_run += 1;
        if expected != got {
            self.failures.push(FailureRecord {
                case: case.to_string(),
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn check_true(&mut self, case: &str, inputs: impl Display, got: bool) {
        self.check_eq(case, inputs, true, got);
    }

    /// Records an error surfaced while constructing a case.
    pub fn error(&mut self, case: &str, inputs: impl Display, err: &Error) {
        self.cases_run += 1;
        self.failures.push(FailureRecord {
            case: case.to_string(),
            inputs: inputs.to_string(),
            expected: "no error".to_string(),
            got: err.to_string(),
        });
    }

    pub fn finish(self) -> VerifyReport {
        VerifyReport {
            suite: self.suite,
            system: self.system,
            cases_failed: self.failures.len() as u64,
            cases_run: self.cases_run,
            seed: self.seed,
            failures: self.failures,
        }
    }
}

/// Where the golden `d(w)` tables come from.
#[derive(Clone, Debug, Default)]
pub enum GoldenSource {
    #[default]
    Embedded,
    Dir(PathBuf),
}

/// Suite parameters.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Scales the randomized portions; suites fall back to their acceptance
    /// defaults when absent.
    pub cases: Option<u64>,
    pub golden: GoldenSource,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: None,
            golden: GoldenSource::Embedded,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    AppendixA,
    AppendixB,
    Section1,
    Section2,
    Section3,
    Section5,
    Section6,
    All,
}

impl SuiteKind {
    pub fn parse(s: &str) -> Option<SuiteKind> {
        match s {
            "appendixA" => Some(SuiteKind::AppendixA),
            "appendixB" => Some(SuiteKind::AppendixB),
            "section1" => Some(SuiteKind::Section1),
            "section2" => Some(SuiteKind::Section2),
            "section3" => Some(SuiteKind::Section3),
            "section5" => Some(SuiteKind::Section5),
            "section6" => Some(SuiteKind::Section6),
            "all" => Some(SuiteKind::All),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::AppendixA => "appendixA",
            SuiteKind::AppendixB => "appendixB",
            SuiteKind::Section1 => "section1",
            SuiteKind::Section2 => "section2",
            SuiteKind::Section3 => "section3",
            SuiteKind::Section5 => "section5",
            SuiteKind::Section6 => "section6",
            SuiteKind::All => "all",
        }
    }

    pub fn default_types(&self) -> Vec<String> {
        let list: &[&str] = match self {
            SuiteKind::AppendixA => &["generic", "B2", "G2"],
            SuiteKind::AppendixB => &["generic", "B2", "G2"],
            SuiteKind::Section1 => &["A1", "A1xA1", "A2", "A3", "B2", "G2", "B3", "C3"],
            SuiteKind::Section2 => &["B2", "G2", "B3"],
            SuiteKind::Section3 => &["A1", "A1xA1", "A1xA1xA1", "B2", "G2", "B3", "C3"],
            SuiteKind::Section5 => &["A1", "A2", "B2", "G2"],
            SuiteKind::Section6 => &["A1", "A1xA1", "B2", "G2", "B3"],
            SuiteKind::All => &[],
        };
        list.iter().map(|s| s.to_string()).collect()
    }
}

/// Runs a suite over the given systems (or its defaults when `types` is
/// empty) and returns one report per system. Jobs run on a worker pool but
/// aggregate in input order, so the output is deterministic.
pub fn run_suite(kind: SuiteKind, types: &[String], cfg: &SuiteConfig) -> Result<Vec<VerifyReport>> {
    let kinds: Vec<SuiteKind> = if kind == SuiteKind::All {
        vec![
            SuiteKind::AppendixA,
            SuiteKind::AppendixB,
            SuiteKind::Section1,
            SuiteKind::Section2,
            SuiteKind::Section3,
            SuiteKind::Section5,
            SuiteKind::Section6,
        ]
    } else {
        vec![kind]
    };
    let mut jobs: Vec<(SuiteKind, String)> = Vec::new();
    for k in kinds {
        let defaults = k.default_types();
        let selected: Vec<String> = if types.is_empty() {
            defaults
        } else {
            types
                .iter()
                .filter(|t| defaults.iter().any(|d| d == *t) || defaults.is_empty())
                .cloned()
                .collect()
        };
        for s in selected {
            jobs.push((k, s));
        }
    }
    use rayon::prelude::*;
    jobs.par_iter()
        .map(|(k, system)| match k {
            SuiteKind::AppendixA => appendix_a::run(system, cfg),
            SuiteKind::AppendixB => appendix_b::run(system, cfg),
            SuiteKind::Section1 => section1::run(system, cfg),
            SuiteKind::Section2 => section2::run(system, cfg),
            SuiteKind::Section3 => section3::run(system, cfg),
            SuiteKind::Section5 => section5::run(system, cfg),
            SuiteKind::Section6 => section6::run(system, cfg),
            SuiteKind::All => unreachable!("expanded above"),
        })
        .collect()
}

/// Embedded golden `d(w)` tables, exposed for the section 3 suite and the
/// CLI.
pub fn embedded_golden(system: &str) -> Option<&'static str> {
    match system {
        "A1" => Some(include_str!("../../golden/v1/d_A1.json")),
        "A1xA1" => Some(include_str!("../../golden/v1/d_A1xA1.json")),
        "B2" => Some(include_str!("../../golden/v1/d_B2.json")),
        "G2" => Some(include_str!("../../golden/v1/d_G2.json")),
        "B3" => Some(include_str!("../../golden/v1/d_B3.json")),
        "C3" => Some(include_str!("../../golden/v1/d_C3.json")),
        _ => None,
    }
}

/// Golden file schema.
#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct GoldenDTable {
    pub system: String,
    pub base_chamber: String,
    pub q: usize,
    pub table: std::collections::BTreeMap<String, i64>,
}

pub fn load_golden(source: &GoldenSource, system: &str) -> Result<Option<GoldenDTable>> {
    let text: Option<String> = match source {
        GoldenSource::Embedded => embedded_golden(system).map(|s| s.to_string()),
        GoldenSource::Dir(dir) => {
            let path = dir.join(format!("d_{system}.json"));
            if path.exists() {
                Some(std::fs::read_to_string(&path).map_err(|e| {
                    Error::Unsupported(format!("cannot read golden file {path:?}: {e}"))
                })?)
            } else {
                None
            }
        }
    };
    match text {
        None => Ok(None),
        Some(t) => {
            let parsed: GoldenDTable = serde_json::from_str(&t)
                .map_err(|e| Error::Unsupported(format!("bad golden file for {system}: {e}")))?;
            Ok(Some(parsed))
        }
    }
}
