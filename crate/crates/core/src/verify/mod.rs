//! Corpus-driven verification: every check compares a claimed value against
//! what the engines (or the brute-force oracle) compute, one [`Verdict`]
//! per instance.
//!
//! Runs are deterministic for a fixed [`CorpusSpec`]. Instances are sampled
//! sequentially from seeded generators and then evaluated in parallel; the
//! verdict order follows the instance index.

mod checks;
mod report;
mod spec;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::closed_forms::Claim;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub use report::{write_csv, write_jsonl, write_summary_json};
pub use spec::CorpusSpec;

/// Every check id, in suite order.
pub const CHECKS: &[&str] = &[
    "oracle-wt",
    "oracle-swt",
    "oracle-toll",
    "worked-examples",
    "neighbor-extension",
    "max-interval-decomposition",
    "wtn-two-criterion",
    "lex-same-layer",
    "lex-cross-layer",
    "lex-wtn",
    "lex-wth",
    "corona-same-copy",
    "corona-cross-copies",
    "corona-base-pair",
    "corona-mixed",
    "corona-base-restriction",
    "corona-wtn",
    "corona-wth",
    "gcorona-wtn",
    "cartesian-wtn",
    "strong-wtn-bound",
    "convexity-chain",
    "hull-axioms",
    "wth-le-wtn",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Set(VertexSet),
    Number(usize),
    AtMost(usize),
    Holds(bool),
}

impl Value {
    /// Whether `observed` satisfies `self` read as a claim.
    pub fn accepts(&self, observed: &Value) -> bool {
        match (self, observed) {
            (Value::AtMost(k), Value::Number(x)) => x <= k,
            (a, b) => a == b,
        }
    }
}

impl From<Claim> for Value {
    fn from(c: Claim) -> Value {
        match c {
            Claim::Set(s) => Value::Set(s),
            Claim::Exactly(k) => Value::Number(k),
            Claim::AtMost(k) => Value::AtMost(k),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    /// Graph6 strings of the graph or of the factors.
    pub graphs: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub choices: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub check: &'static str,
    pub index: usize,
    pub instance: Instance,
    pub predicted: Option<Value>,
    pub observed: Option<Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

impl Verdict {
    pub fn compare(check: &'static str, instance: Instance, predicted: Value, observed: Value) -> Verdict {
        let status = if predicted.accepts(&observed) {
            Status::Match
        } else {
            Status::Mismatch
        };
        Verdict {
            check,
            index: 0,
            instance,
            predicted: Some(predicted),
            observed: Some(observed),
            status,
            reason: None,
            runtime_ms: None,
        }
    }

    pub fn skipped(check: &'static str, instance: Instance, reason: impl Into<String>) -> Verdict {
        Verdict {
            check,
            index: 0,
            instance,
            predicted: None,
            observed: None,
            status: Status::Skipped,
            reason: Some(reason.into()),
            runtime_ms: None,
        }
    }

    fn with_reason(mut self, reason: impl Into<String>) -> Verdict {
        self.reason = Some(reason.into());
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.instance.tags.contains(&tag)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
    /// Instances evaluated outside the hypotheses of the claim.
    pub extension: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
    pub checks: Vec<CheckSummary>,
    /// `(check, index)` of every mismatch.
    pub mismatches: Vec<(String, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

impl Summary {
    pub fn all_match(&self) -> bool {
        self.mismatched == 0
    }

    /// 0 when nothing mismatched, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_match() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == id)
    }
}

pub fn summarize(verdicts: &[Verdict]) -> Summary {
    let mut s = Summary::default();
    for v in verdicts {
        let pos = match s.checks.iter().position(|c| c.check == v.check) {
            Some(p) => p,
            None => {
                s.checks.push(CheckSummary {
                    check: v.check.to_string(),
                    ..CheckSummary::default()
                });
                s.checks.len() - 1
            }
        };
        let c = &mut s.checks[pos];
        c.total += 1;
        s.total += 1;
        match v.status {
            Status::Match => {
                c.matched += 1;
                s.matched += 1;
            }
            Status::Mismatch => {
                c.mismatched += 1;
                s.mismatched += 1;
                s.mismatches.push((v.check.to_string(), v.index));
            }
            Status::Skipped => {
                c.skipped += 1;
                s.skipped += 1;
            }
        }
        if v.has_tag("extension") {
            c.extension += 1;
        }
        if let Some(ms) = v.runtime_ms {
            *s.runtime_ms.get_or_insert(0.0) += ms;
        }
    }
    s
}

/// Check ids selected by a suite name: `all`, an exact id, or a family
/// prefix such as `corona` or `oracle`.
pub fn resolve_suite(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(CHECKS.to_vec());
    }
    if let Some(&id) = CHECKS.iter().find(|&&c| c == name) {
        return Ok(vec![id]);
    }
    let prefix = format!("{name}-");
    let ids: Vec<_> = CHECKS.iter().copied().filter(|c| c.starts_with(&prefix)).collect();
    if ids.is_empty() {
        Err(Error::UnknownCheck(name.to_string()))
    } else {
        Ok(ids)
    }
}

pub fn run_check(check: &str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    spec.validate()?;
    let id = *CHECKS
        .iter()
        .find(|&&c| c == check)
        .ok_or_else(|| Error::UnknownCheck(check.to_string()))?;
    let start = Instant::now();
    let mut verdicts = checks::run(id, spec)?;
    for (i, v) in verdicts.iter_mut().enumerate() {
        v.index = i;
        if !spec.timing {
            v.runtime_ms = None;
        }
    }
    if spec.timing {
        log_elapsed(id, start);
    }
    Ok(verdicts)
}

pub fn run_suite(name: &str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for id in resolve_suite(name)? {
        out.extend(run_check(id, spec)?);
    }
    Ok(out)
}

fn log_elapsed(id: &str, start: Instant) {
    eprintln!("{id}: {:.1} s", start.elapsed().as_secs_f64());
}
