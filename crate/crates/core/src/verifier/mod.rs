//! Randomized exact identity testing.
//!
//! Every check draws fresh positive rationals per trial from a generator
//! seeded by `(seed, trial)`, evaluates both sides of an identity and
//! compares them exactly. Trials run in parallel; results are merged by
//! trial index so reports depend only on `(name, trials, seed, bound)`.

mod checks;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exact_arith::{sample_positive, trial_rng, Rational, SampleRng};
use crate::d6_spin_crystal::{PointV1, PointV2, POINT_LEN};

pub use checks::{spot_coefficients_v1, spot_coefficients_v2, CATALOG};

pub const DEFAULT_TRIALS: u64 = 100;
pub const DEFAULT_BOUND: u64 = 20;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Asserted,
    Exploratory,
}

/// A catalog entry.
pub struct CheckDef {
    pub name: &'static str,
    pub severity: Severity,
    pub summary: &'static str,
    /// Set when the identity cannot be formed at all; the check then runs no trials.
    pub inapplicable: Option<&'static str>,
    run: fn(&mut Trial) -> TrialResult,
}

pub fn find_check(name: &str) -> Result<&'static CheckDef> {
    CATALOG
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: String,
    pub trials: u64,
    pub seed: u64,
    pub bound: u64,
    pub severity: Severity,
}

impl CheckSpec {
    pub fn new(name: &str, trials: u64, seed: u64, bound: u64) -> Result<Self> {
        let def = find_check(name)?;
        if trials == 0 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if bound == 0 {
            return Err(Error::domain("bound must be at least 1"));
        }
        Ok(CheckSpec { name: def.name.to_string(), trials, seed, bound, severity: def.severity })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub severity: Severity,
    pub trials: u64,
    pub failures: u64,
    /// First failing trial (lowest index) with its inputs and both sides.
    pub counterexample: Option<Value>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub bound: u64,
    pub checks: Vec<CheckReport>,
    /// True iff every asserted check passed.
    pub pass: bool,
}

impl SuiteReport {
    /// Zeroes the elapsed times so reports compare byte for byte.
    pub fn strip_timing(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }
}

/// Per-trial sampling context. Inputs are recorded as they are drawn so a
/// failure can report exactly what produced it.
pub struct Trial {
    pub index: u64,
    rng: SampleRng,
    bound: u64,
    inputs: Map<String, Value>,
}

impl Trial {
    fn new(seed: u64, index: u64, bound: u64) -> Self {
        Trial { index, rng: trial_rng(seed, index), bound, inputs: Map::new() }
    }

    pub fn scalar(&mut self, label: &str) -> Rational {
        let r = sample_positive(&mut self.rng, self.bound);
        self.inputs.insert(label.to_string(), Value::String(r.to_string()));
        r
    }

    fn values(&mut self) -> [Rational; POINT_LEN] {
        std::array::from_fn(|_| sample_positive(&mut self.rng, self.bound))
    }

    pub fn point_v1(&mut self, label: &str) -> PointV1 {
        let p = PointV1::new(self.values()).expect("positive samples");
        self.inputs.insert(label.to_string(), p.to_json());
        p
    }

    pub fn point_v2(&mut self, label: &str) -> PointV2 {
        let p = PointV2::new(self.values()).expect("positive samples");
        self.inputs.insert(label.to_string(), p.to_json());
        p
    }
}

/// A failed trial: what differed and the two sides.
#[derive(Debug)]
pub struct Failure(Map<String, Value>);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut m = Map::new();
        m.insert("error".into(), Value::String(e.to_string()));
        Failure(m)
    }
}

pub type TrialResult = std::result::Result<(), Failure>;

pub(crate) fn check_eq<T: PartialEq + Serialize>(what: &str, lhs: &T, rhs: &T) -> TrialResult {
    if lhs == rhs {
        return Ok(());
    }
    let mut m = Map::new();
    m.insert("identity".into(), Value::String(what.to_string()));
    m.insert("lhs".into(), serde_json::to_value(lhs).unwrap_or(Value::Null));
    m.insert("rhs".into(), serde_json::to_value(rhs).unwrap_or(Value::Null));
    Err(Failure(m))
}

pub(crate) fn check_positive<T: Serialize>(what: &str, ok: bool, value: &T) -> TrialResult {
    if ok {
        return Ok(());
    }
    let mut m = Map::new();
    m.insert("identity".into(), Value::String(format!("{what} is positive")));
    m.insert("value".into(), serde_json::to_value(value).unwrap_or(Value::Null));
    Err(Failure(m))
}

fn run_trial(def: &CheckDef, seed: u64, index: u64, bound: u64) -> Option<Value> {
    let mut trial = Trial::new(seed, index, bound);
    match (def.run)(&mut trial) {
        Ok(()) => None,
        Err(Failure(mut detail)) => {
            let mut m = Map::new();
            m.insert("trial".into(), Value::from(index));
            m.insert("inputs".into(), Value::Object(std::mem::take(&mut trial.inputs)));
            m.append(&mut detail);
            Some(Value::Object(m))
        }
    }
}

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let def = find_check(&spec.name)?;
    let start = Instant::now();
    if let Some(note) = def.inapplicable {
        return Ok(CheckReport {
            name: def.name.to_string(),
            severity: def.severity,
            trials: 0,
            failures: 0,
            counterexample: None,
            ms: 0,
            note: Some(note.to_string()),
        });
    }
    let outcomes: Vec<Option<Value>> = (0..spec.trials)
        .into_par_iter()
        .map(|t| run_trial(def, spec.seed, t, spec.bound))
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_some()).count() as u64;
    let counterexample = outcomes.into_iter().flatten().next();
    Ok(CheckReport {
        name: def.name.to_string(),
        severity: def.severity,
        trials: spec.trials,
        failures,
        counterexample,
        ms: start.elapsed().as_millis() as u64,
        note: None,
    })
}

/// Names selected by a suite string: `all` or a comma-separated list.
/// Exploratory checks join `all` only when `include_exploratory` is set;
/// naming one explicitly always runs it.
pub fn resolve_suite(suite: &str, include_exploratory: bool) -> Result<Vec<&'static str>> {
    if suite.trim() == "all" {
        return Ok(CATALOG
            .iter()
            .filter(|c| include_exploratory || c.severity == Severity::Asserted)
            .map(|c| c.name)
            .collect());
    }
    let mut names = Vec::new();
    for part in suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let name = find_check(part)?.name;
        if !names.contains(&name) {
            names.push(name);
        }
    }
    if names.is_empty() {
        return Err(Error::UnknownCheck(suite.to_string()));
    }
    Ok(names)
}

pub fn run_suite(
    suite: &str,
    trials: u64,
    seed: u64,
    bound: u64,
    include_exploratory: bool,
) -> Result<SuiteReport> {
    let names = resolve_suite(suite, include_exploratory)?;
    let specs = names
        .iter()
        .map(|n| CheckSpec::new(n, trials, seed, bound))
        .collect::<Result<Vec<_>>>()?;
    let checks = specs.par_iter().map(run_check).collect::<Result<Vec<_>>>()?;
    let pass = checks.iter().all(|c| c.severity == Severity::Exploratory || c.passed());
    Ok(SuiteReport { suite: suite.trim().to_string(), seed, bound, checks, pass })
}
