//! Inequality verification harness.
//!
//! A registry of 25 claims, each a checkable statement about graph
//! invariants, runs against deterministic corpora and produces one
//! [`ClaimReport`] per claim. Claims carry one of two statuses:
//!
//! * `VERIFIED` claims are expected to hold; any violation fails the suite.
//! * `REPORT-ONLY` claims are recorded but never fail the suite, each for a
//!   stated reason (a statement false as printed, an under-specified family,
//!   or a reconstructed definition).
//!
//! Reports also carry `advisories`: observations attached to a claim that do
//! not gate the suite regardless of the claim's status (for example, a side
//! inequality checked under two plausible readings). Every violation and
//! witness names a replayable fingerprint, a generator-DSL string with the
//! seed included, so any reported instance can be rebuilt with `parse_graph`.
//!
//! Reruns with the same config serialize byte-identically; anything
//! wall-clock-dependent goes to stderr, never into the report.

mod checks;
pub mod corpus;

use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::random::derive_rng;

/// Relative slack used everywhere a real-valued comparison is made: a strict
/// `lhs < rhs` must clear `rhs` by this margin, and a non-strict `lhs <= rhs`
/// may exceed it by as much. Integer-valued claims compare exactly instead.
pub const STRICT_TOL: f64 = 1e-9;

fn slack(rhs: f64) -> f64 {
    STRICT_TOL * rhs.abs().max(1.0)
}

/// Strict `lhs < rhs` with the relative margin.
pub fn strictly_less(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs - slack(rhs)
}

/// Non-strict `lhs <= rhs` with the relative margin.
pub fn leq(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + slack(rhs)
}

/// `lhs == rhs` within the relative margin.
pub fn close(lhs: f64, rhs: f64) -> bool {
    (lhs - rhs).abs() <= slack(rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Verified,
    ReportOnly,
}

impl ClaimStatus {
    pub fn label(self) -> &'static str {
        match self {
            ClaimStatus::Verified => "VERIFIED",
            ClaimStatus::ReportOnly => "REPORT-ONLY",
        }
    }
}

/// One instance on which a checked relation failed (or, in an advisory, was
/// merely observed to fail under some reading).
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Generator-DSL string that rebuilds the instance.
    pub fingerprint: String,
    pub lhs: f64,
    pub rhs: f64,
    pub note: String,
}

/// One instance attaining a claimed equality case.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub fingerprint: String,
    pub value: f64,
    pub note: String,
}

/// Raw output of one claim's checker, before capping and labeling.
#[derive(Debug, Default)]
pub struct ClaimData {
    pub corpus_size: usize,
    pub violations: Vec<Violation>,
    pub advisories: Vec<Violation>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl ClaimData {
    pub fn violation(&mut self, fingerprint: impl Into<String>, lhs: f64, rhs: f64, note: impl Into<String>) {
        self.violations.push(Violation {
            fingerprint: fingerprint.into(),
            lhs,
            rhs,
            note: note.into(),
        });
    }

    pub fn advisory(&mut self, fingerprint: impl Into<String>, lhs: f64, rhs: f64, note: impl Into<String>) {
        self.advisories.push(Violation {
            fingerprint: fingerprint.into(),
            lhs,
            rhs,
            note: note.into(),
        });
    }

    pub fn witness(&mut self, fingerprint: impl Into<String>, value: f64, note: impl Into<String>) {
        self.witnesses.push(Witness { fingerprint: fingerprint.into(), value, note: note.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

/// A registered claim.
pub struct Claim {
    pub id: &'static str,
    pub name: &'static str,
    /// Self-contained statement of what is checked.
    pub statement: &'static str,
    pub status: ClaimStatus,
    /// For report-only claims, why they do not gate the suite.
    pub reason: Option<&'static str>,
    run: fn(&CheckCtx) -> ClaimData,
}

/// Everything a checker may depend on. Checkers derive all randomness from
/// the seed through fixed lanes, so a (seed, quick) pair pins the corpus.
pub struct CheckCtx {
    pub seed: u64,
    pub quick: bool,
}

impl CheckCtx {
    /// Deterministic stream `lane` of the suite seed.
    pub fn rng(&self, lane: u64) -> ChaCha12Rng {
        derive_rng(self.seed, lane)
    }

    /// Corpus budget: `full` normally, `quick` in smoke runs.
    pub fn budget(&self, full: usize, quick: usize) -> usize {
        if self.quick {
            quick
        } else {
            full
        }
    }
}

/// At most this many violations / advisories / witnesses are serialized per
/// claim; totals are always exact.
pub const MAX_LISTED: usize = 25;

/// Finished, serializable result of one claim.
#[derive(Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub name: String,
    pub status: String,
    pub statement: String,
    pub corpus_size: usize,
    pub violations_total: usize,
    /// First [`MAX_LISTED`] violations in corpus order.
    pub violations: Vec<Violation>,
    pub advisories_total: usize,
    pub advisories: Vec<Violation>,
    pub witnesses_total: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    /// True only for a VERIFIED claim with violations.
    pub failed: bool,
}

impl ClaimReport {
    fn from_data(claim: &Claim, mut data: ClaimData) -> Self {
        if let Some(reason) = claim.reason {
            data.notes.insert(0, format!("report-only: {reason}"));
        }
        let failed = claim.status == ClaimStatus::Verified && !data.violations.is_empty();
        let violations_total = data.violations.len();
        let advisories_total = data.advisories.len();
        let witnesses_total = data.witnesses.len();
        data.violations.truncate(MAX_LISTED);
        data.advisories.truncate(MAX_LISTED);
        data.witnesses.truncate(MAX_LISTED);
        ClaimReport {
            id: claim.id.into(),
            name: claim.name.into(),
            status: claim.status.label().into(),
            statement: claim.statement.into(),
            corpus_size: data.corpus_size,
            violations_total,
            violations: data.violations,
            advisories_total,
            advisories: data.advisories,
            witnesses_total,
            witnesses: data.witnesses,
            notes: data.notes,
            failed,
        }
    }
}

/// Suite configuration, readable from TOML. Defaults: seed 7, full budgets,
/// every claim.
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Shrinks every corpus to a smoke-test size.
    pub quick: bool,
    /// Claim ids to run; empty means all.
    pub claims: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 7, quick: false, claims: Vec::new() }
    }
}

impl SuiteConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, HarnessError> {
        toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("bad suite config: {0}")]
    Config(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

/// Whole-suite result.
#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub quick: bool,
    pub claims: Vec<ClaimReport>,
    /// Ids of VERIFIED claims that recorded violations.
    pub failed_claims: Vec<String>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "name",
            "status",
            "corpus_size",
            "violations",
            "advisories",
            "witnesses",
            "result",
        ])
        .expect("csv writes");
        for c in &self.claims {
            let result = if c.failed {
                "FAIL"
            } else if c.status == "VERIFIED" {
                "pass"
            } else {
                "report"
            };
            w.write_record([
                c.id.as_str(),
                c.name.as_str(),
                c.status.as_str(),
                &c.corpus_size.to_string(),
                &c.violations_total.to_string(),
                &c.advisories_total.to_string(),
                &c.witnesses_total.to_string(),
                result,
            ])
            .expect("csv writes");
        }
        String::from_utf8(w.into_inner().expect("csv flushes")).expect("csv is utf-8")
    }
}

/// The full claim registry, in id order.
pub fn registry() -> &'static [Claim] {
    checks::REGISTRY
}

/// Looks a claim up by id (case-insensitive).
pub fn find_claim(id: &str) -> Option<&'static Claim> {
    registry().iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Runs one claim against a context.
pub fn check_claim(claim: &Claim, ctx: &CheckCtx) -> ClaimReport {
    ClaimReport::from_data(claim, (claim.run)(ctx))
}

/// Runs the configured subset of the registry, in parallel, and merges the
/// reports in registry order so the output is independent of scheduling.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let selected: Vec<&Claim> = if config.claims.is_empty() {
        registry().iter().collect()
    } else {
        config
            .claims
            .iter()
            .map(|id| find_claim(id).ok_or_else(|| HarnessError::UnknownClaim(id.clone())))
            .collect::<Result<_, _>>()?
    };
    let ctx = CheckCtx { seed: config.seed, quick: config.quick };
    let claims: Vec<ClaimReport> =
        selected.par_iter().map(|claim| check_claim(claim, &ctx)).collect();
    let failed_claims: Vec<String> =
        claims.iter().filter(|c| c.failed).map(|c| c.id.clone()).collect();
    let passed = failed_claims.is_empty();
    Ok(SuiteReport { seed: config.seed, quick: config.quick, claims, failed_claims, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_well_formed() {
        let reg = registry();
        assert_eq!(reg.len(), 25);
        for (i, claim) in reg.iter().enumerate() {
            assert_eq!(claim.id, format!("C{}", i + 1), "ids run C1..C25 in order");
            assert_eq!(
                claim.reason.is_some(),
                claim.status == ClaimStatus::ReportOnly,
                "{}: exactly the report-only claims carry reasons",
                claim.id
            );
        }
        let names: std::collections::BTreeSet<&str> = reg.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), reg.len(), "names are distinct");
    }

    #[test]
    fn config_parses_and_rejects_unknown_fields() {
        let cfg = SuiteConfig::from_toml_str("seed = 11\nclaims = [\"C1\", \"C6\"]\n").unwrap();
        assert_eq!(cfg.seed, 11);
        assert!(!cfg.quick);
        assert_eq!(cfg.claims, ["C1", "C6"]);
        assert!(SuiteConfig::from_toml_str("sede = 11\n").is_err());
        assert_eq!(SuiteConfig::default().seed, 7);
    }

    #[test]
    fn unknown_claim_id_is_an_error() {
        let cfg = SuiteConfig { claims: vec!["C99".into()], ..SuiteConfig::default() };
        assert!(matches!(run_suite(&cfg), Err(HarnessError::UnknownClaim(_))));
    }

    #[test]
    fn reruns_serialize_identically() {
        let cfg = SuiteConfig { quick: true, claims: vec!["C1".into(), "C6".into()], ..SuiteConfig::default() };
        let a = run_suite(&cfg).unwrap();
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.to_json().len() > 100);
    }
}
