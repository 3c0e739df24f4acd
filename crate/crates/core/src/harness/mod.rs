//! Executable property suites and a seeded counterexample search.
//!
//! Each suite evaluates a list of cases independently (concurrently under
//! the `parallel` feature) and reports failures with witnesses. Suites whose
//! two sides are provably true for every finite ring are labeled
//! [`Evidence::Consistency`]; suites that can tell rings apart are
//! [`Evidence::Discriminating`].

mod falsify;
mod suites;

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::deciders::PropertyReport;
use crate::exec::Strategy;
use crate::expr::{parse, GroupExpr, RingExpr};

pub use falsify::{falsify, generate_instances, GeneratorWeights, SearchConfig};
pub use suites::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Consistency,
    Discriminating,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteFailure {
    pub case: String,
    pub check: String,
    pub expected: Value,
    pub got: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Box<PropertyReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shrunk: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub case: String,
    pub reason: String,
}

/// Outcome of a suite run. The JSON form omits the wall time so that runs
/// with equal parameters serialize identically.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub evidence: Evidence,
    pub attempted: usize,
    pub passed: usize,
    pub failures: Vec<SuiteFailure>,
    pub skipped: Vec<Skip>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub(crate) enum Outcome {
    Pass,
    Fail(Vec<SuiteFailure>),
    Skip(String),
}

pub(crate) fn run_suite<C, F>(
    name: &str,
    evidence: Evidence,
    cases: &[C],
    strategy: Strategy,
    describe: impl Fn(&C) -> String,
    eval: F,
) -> SuiteReport
where
    C: Sync,
    F: Fn(&C) -> Outcome + Sync + Send,
{
    let start = Instant::now();
    let outcomes = strategy.map_slice(cases, |c| eval(c));
    let mut report = SuiteReport {
        suite: name.to_string(),
        evidence,
        attempted: 0,
        passed: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for (case, outcome) in cases.iter().zip(outcomes) {
        match outcome {
            Outcome::Pass => {
                report.attempted += 1;
                report.passed += 1;
            }
            Outcome::Fail(mut fs) => {
                report.attempted += 1;
                // one failure entry per case keeps passed + failures = attempted
                let mut first = fs.remove(0);
                if !fs.is_empty() {
                    first.check = std::iter::once(first.check.clone())
                        .chain(fs.iter().map(|f| f.check.clone()))
                        .collect::<Vec<_>>()
                        .join(", ");
                }
                report.failures.push(first);
            }
            Outcome::Skip(reason) => report.skipped.push(Skip {
                case: describe(case),
                reason,
            }),
        }
    }
    report.failures.sort_by(|a, b| a.case.cmp(&b.case));
    report.skipped.sort_by(|a, b| a.case.cmp(&b.case));
    report.wall_time = start.elapsed();
    report
}

fn exprs(list: &[&str]) -> Vec<RingExpr> {
    list.iter()
        .map(|s| parse(s).expect("built-in expression parses"))
        .collect()
}

/// Rings used by the corpus-wide suites; every one has order at most 512.
pub fn standard_corpus() -> Vec<RingExpr> {
    exprs(&[
        "Z(1)",
        "Z(2)",
        "Z(3)",
        "Z(4)",
        "Z(5)",
        "Z(6)",
        "Z(7)",
        "Z(8)",
        "Z(9)",
        "Z(10)",
        "Z(12)",
        "Z(2) x Z(2)",
        "Z(2) x Z(3)",
        "Z(4) x Z(2)",
        "M(2, Z(2))",
        "M(2, Z(3))",
        "M(2, Z(4))",
        "M(2, Z(2)) x Z(3)",
        "U(2, Z(2))",
        "U(3, Z(2))",
        "U(2, Z(4))",
        "U(2, Z(6))",
        "GR(Z(2), C(2))",
        "GR(Z(4), C(2))",
        "GR(Z(2), C(3))",
        "GR(Z(3), C(2))",
        "GR(Z(3), C(3))",
        "GR(Z(2), S(3))",
        "GR(Z(4), C(4))",
        "GR(Z(2), Q8)",
        "GR(Z(2), C(2) x C(2))",
        "Triv(Z(2))",
        "Triv(Z(3))",
        "Triv(Z(6))",
        "Triv(M(2, Z(2)))",
        "Ks(Z(4), 2)",
        "Ks(Z(2), 0)",
        "Ks(Z(2), 1)",
        "Ks(Z(3), 0)",
        "FM(2, Z(4), 2)",
        "FM(3, Z(2), 0)",
    ])
}

/// The rings the strong nil-clean criterion is checked on.
pub fn diesl_corpus() -> Vec<RingExpr> {
    exprs(&[
        "Z(2)",
        "Z(3)",
        "Z(4)",
        "Z(5)",
        "Z(6)",
        "Z(7)",
        "Z(8)",
        "Z(9)",
        "M(2, Z(2))",
        "M(2, Z(4))",
        "GR(Z(2), C(2))",
        "GR(Z(4), C(2))",
        "Triv(Z(6))",
        "Ks(Z(4), 2)",
    ])
}

/// `(n, G)` pairs for the `Z(n)G` regularity suites.
pub fn default_zng_cases() -> Vec<(u64, GroupExpr)> {
    vec![
        (2, GroupExpr::Cyclic(3)),
        (3, GroupExpr::Cyclic(2)),
        (5, GroupExpr::Cyclic(2)),
        (2, GroupExpr::Cyclic(2)),
        (3, GroupExpr::Cyclic(3)),
        (4, GroupExpr::Cyclic(3)),
        (6, GroupExpr::Cyclic(2)),
    ]
}

/// [`default_zng_cases`] plus `Z(3)S(3)`.
pub fn default_connell_cases() -> Vec<(u64, GroupExpr)> {
    let mut v = default_zng_cases();
    v.push((3, GroupExpr::Symmetric(3)));
    v
}

pub fn default_morita_cases() -> Vec<RingExpr> {
    exprs(&[
        "Ks(Z(4), 2)",
        "Ks(Z(2), 0)",
        "U(2, Z(2))",
        "U(3, Z(2))",
        "U(2, Z(6))",
        "Triv(Z(3))",
        "Triv(Z(6))",
        "FM(2, Z(4), 2)",
    ])
}

pub fn default_group_ring_cases() -> Vec<(RingExpr, GroupExpr)> {
    vec![
        (RingExpr::Zmod(4), GroupExpr::Cyclic(2)),
        (RingExpr::Zmod(2), GroupExpr::Symmetric(3)),
        (RingExpr::Zmod(2), GroupExpr::Cyclic(3)),
        (RingExpr::Zmod(4), GroupExpr::Cyclic(4)),
    ]
}

pub fn default_periodic_cases() -> Vec<(RingExpr, GroupExpr)> {
    vec![
        (RingExpr::Zmod(2), GroupExpr::Symmetric(3)),
        (RingExpr::Zmod(4), GroupExpr::Cyclic(2)),
        (RingExpr::Zmod(6), GroupExpr::Cyclic(1)),
        (RingExpr::Zmod(3), GroupExpr::Cyclic(3)),
    ]
}

pub fn default_matrix_bases() -> Vec<RingExpr> {
    exprs(&["Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(6)", "Triv(Z(2))"])
}
