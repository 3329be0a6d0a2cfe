use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{check_prop31, run_checks, CheckOptions};
use super::enumerate::{enumerate_rationals, enumerate_surds};
use super::{CheckId, CheckResult, Subject, Verdict};
use crate::cf::{DigitStream, RealSpec};
use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// Input family of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    /// Every canonical `p/q ∈ (0,1)` with `q ≤ max_q`, all indices.
    Rationals { max_q: u64 },
    /// `(p + √D)/q ∈ (0,1)`, `D ≤ max_d` non-square, `|p|, q ≤ max_coeff`.
    Surds { max_d: u64, max_coeff: u64, depth: usize },
    /// Seeded uniform digit streams on `1..=max_digit`.
    Streams { count: u64, max_digit: u64, length: usize, seed: u64 },
    /// `x_d = [0; d, 1, 1, d]` for `d_lo ≤ d ≤ d_hi`.
    Prop31 { d_lo: u64, d_hi: u64 },
}

/// A full sweep description. Two runs with equal configs give equal
/// reports whatever the worker count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub family: Family,
    pub checks: Vec<CheckId>,
    /// Worker threads; not part of the report.
    #[serde(skip)]
    pub workers: usize,
    pub twin_expansions: bool,
    /// Overrides the Legendre `max_B` (default `q` for rationals, 1000
    /// otherwise).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub legendre_max_b: Option<u64>,
    /// Findings kept per check in the report.
    pub finding_cap: usize,
}

impl SweepConfig {
    pub fn new(family: Family, checks: Vec<CheckId>) -> Self {
        SweepConfig { family, checks, workers: 1, twin_expansions: false, legendre_max_b: None, finding_cap: 50 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        match self.family {
            Family::Rationals { max_q } if max_q < 2 => return bad(format!("max_q must be at least 2, got {max_q}")),
            Family::Surds { max_d, max_coeff, depth } if max_d < 2 || max_coeff < 1 || depth < 2 => {
                return bad(format!("surds need max_D >= 2, max_coeff >= 1, depth >= 2 (got {max_d}, {max_coeff}, {depth})"))
            }
            Family::Streams { count, max_digit, length, .. } if count < 1 || max_digit < 1 || length < 5 => {
                return bad(format!("streams need count >= 1, max_digit >= 1, length >= 5 (got {count}, {max_digit}, {length})"))
            }
            Family::Prop31 { d_lo, d_hi } if d_lo < 1 || d_lo > d_hi => {
                return bad(format!("prop31 needs 1 <= d_lo <= d_hi, got {d_lo}..{d_hi}"))
            }
            _ => {}
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        if self.checks.is_empty() && !matches!(self.family, Family::Prop31 { .. }) {
            return bad("no checks selected".into());
        }
        if self.legendre_max_b == Some(0) {
            return bad("legendre max_B must be at least 1".into());
        }
        Ok(())
    }
}

/// Verdict tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub pass: u64,
    pub equality: u64,
    pub strict_equality: u64,
    pub both_exceed: u64,
    pub skipped: u64,
    pub violation: u64,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Equality => self.equality += 1,
            Verdict::StrictEquality => self.strict_equality += 1,
            Verdict::BothExceed => self.both_exceed += 1,
            Verdict::Skipped => self.skipped += 1,
            Verdict::Violation => self.violation += 1,
        }
    }

    fn merge(&mut self, o: &VerdictCounts) {
        self.pass += o.pass;
        self.equality += o.equality;
        self.strict_equality += o.strict_equality;
        self.both_exceed += o.both_exceed;
        self.skipped += o.skipped;
        self.violation += o.violation;
    }

    pub fn get(&self, v: Verdict) -> u64 {
        match v {
            Verdict::Pass => self.pass,
            Verdict::Equality => self.equality,
            Verdict::StrictEquality => self.strict_equality,
            Verdict::BothExceed => self.both_exceed,
            Verdict::Skipped => self.skipped,
            Verdict::Violation => self.violation,
        }
    }

    pub fn total(&self) -> u64 {
        Verdict::ALL.iter().map(|&v| self.get(v)).sum()
    }
}

/// Per-check totals and the canonically first findings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub counts: VerdictCounts,
    /// Every non-pass, non-skipped verdict, violations first, capped.
    pub findings: Vec<CheckResult>,
    pub findings_omitted: u64,
}

/// The outcome of [`run_suite`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummaryReport {
    pub config: SweepConfig,
    pub inputs: u64,
    pub results: u64,
    pub checks: BTreeMap<CheckId, CheckSummary>,
    pub violations: u64,
    pub errors: Vec<String>,
    pub errors_omitted: u64,
    pub passed: bool,
    /// Filled in by callers that time the run; `run_suite` leaves it empty
    /// so reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SummaryReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn counts(&self, c: CheckId) -> VerdictCounts {
        self.checks.get(&c).map(|s| s.counts).unwrap_or_default()
    }
}

#[derive(Clone, Debug)]
enum Input {
    Rational(Rational),
    Surd(QuadSurd),
    Stream(u64),
    Prop31(u64),
}

#[derive(Default)]
struct Tally {
    inputs: u64,
    checks: BTreeMap<CheckId, CheckSummary>,
    errors: Vec<String>,
    errors_total: u64,
}

const ERROR_CAP: usize = 100;

impl Tally {
    fn new(checks: &[CheckId]) -> Self {
        Tally { checks: checks.iter().map(|&c| (c, CheckSummary::default())).collect(), ..Tally::default() }
    }

    fn absorb(&mut self, outcome: Result<Vec<CheckResult>>, cap: usize) {
        self.inputs += 1;
        match outcome {
            Ok(rs) => {
                for r in rs {
                    let e = self.checks.entry(r.check).or_default();
                    e.counts.add(r.verdict);
                    if r.verdict.is_finding() {
                        e.findings.push(r);
                        if e.findings.len() > 2 * cap.max(1) {
                            trim(&mut e.findings, cap, &mut e.findings_omitted);
                        }
                    }
                }
            }
            Err(e) => {
                self.errors_total += 1;
                self.errors.push(e.to_string());
                if self.errors.len() > 2 * ERROR_CAP {
                    self.errors.sort();
                    self.errors.truncate(ERROR_CAP);
                }
            }
        }
    }

    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        self.inputs += other.inputs;
        self.errors_total += other.errors_total;
        self.errors.extend(other.errors);
        self.errors.sort();
        self.errors.truncate(ERROR_CAP);
        for (c, s) in other.checks {
            let e = self.checks.entry(c).or_default();
            e.counts.merge(&s.counts);
            e.findings_omitted += s.findings_omitted;
            e.findings.extend(s.findings);
            trim(&mut e.findings, cap, &mut e.findings_omitted);
        }
        self
    }
}

fn trim(v: &mut Vec<CheckResult>, cap: usize, omitted: &mut u64) {
    v.sort();
    if v.len() > cap {
        *omitted += (v.len() - cap) as u64;
        v.truncate(cap);
    }
}

fn inputs(family: &Family) -> Result<Vec<(u64, Input)>> {
    Ok(match *family {
        Family::Rationals { max_q } => enumerate_rationals(max_q)?.map(Input::Rational).enumerate().map(|(i, x)| (i as u64, x)).collect(),
        Family::Surds { max_d, max_coeff, .. } => {
            enumerate_surds(max_d, max_coeff)?.into_iter().map(Input::Surd).enumerate().map(|(i, x)| (i as u64, x)).collect()
        }
        Family::Streams { count, .. } => (0..count).map(|i| (i, Input::Stream(i))).collect(),
        Family::Prop31 { d_lo, d_hi } => (d_lo..=d_hi).map(|d| (d, Input::Prop31(d))).collect(),
    })
}

fn evaluate(cfg: &SweepConfig, ordinal: u64, input: &Input) -> Result<Vec<CheckResult>> {
    let opts = CheckOptions { legendre_max_b: cfg.legendre_max_b, twin: cfg.twin_expansions };
    let subject = match (input, &cfg.family) {
        (Input::Prop31(d), _) => return check_prop31(*d, *d),
        (Input::Rational(x), _) => Subject::from_spec(&RealSpec::rational(x.clone())?, usize::MAX)?,
        (Input::Surd(x), Family::Surds { depth, .. }) => Subject::from_spec(&RealSpec::surd(x.clone())?, *depth)?,
        (Input::Stream(i), Family::Streams { max_digit, length, seed, .. }) => {
            Subject::from_spec(&RealSpec::stream(DigitStream::seeded(*seed, *i, *max_digit)), *length)?
        }
        _ => unreachable!("inputs match their family"),
    };
    let descriptor = subject.descriptor.clone();
    let subject = subject.with_label(descriptor, ordinal);
    run_checks(&subject, &cfg.checks, &opts)
}

/// Runs the configured checks over the family on a dedicated pool.
pub fn run_suite(cfg: &SweepConfig) -> Result<SummaryReport> {
    cfg.validate()?;
    let cap = cfg.finding_cap;
    let mut selected = cfg.checks.clone();
    if matches!(cfg.family, Family::Prop31 { .. }) {
        selected = vec![CheckId::Prop31];
    }
    if cfg.twin_expansions && matches!(cfg.family, Family::Rationals { .. }) && !selected.contains(&CheckId::TwinAgreement)
    {
        selected.push(CheckId::TwinAgreement);
    }
    if !matches!(cfg.family, Family::Rationals { .. }) {
        selected.retain(|&c| c != CheckId::TwinAgreement);
    }
    if matches!(cfg.family, Family::Streams { .. }) {
        selected.retain(|&c| c != CheckId::Jp);
    }
    selected.sort();
    let items = inputs(&cfg.family)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let tally = pool.install(|| {
        items
            .par_iter()
            .fold(
                || Tally::new(&selected),
                |mut t, (ord, input)| {
                    t.absorb(evaluate(cfg, *ord, input), cap);
                    t
                },
            )
            .reduce(|| Tally::new(&selected), |a, b| a.merge(b, cap))
    });
    let violations: u64 = tally.checks.values().map(|s| s.counts.violation).sum();
    let results: u64 = tally.checks.values().map(|s| s.counts.total()).sum();
    let errors_omitted = tally.errors_total - tally.errors.len() as u64;
    let passed = violations == 0 && tally.errors_total == 0;
    Ok(SummaryReport {
        config: cfg.clone(),
        inputs: tally.inputs,
        results,
        checks: tally.checks,
        violations,
        errors: tally.errors,
        errors_omitted,
        passed,
        wall_time_ms: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(family: Family) -> SweepConfig {
        SweepConfig::new(family, CheckId::ALL.to_vec())
    }

    #[test]
    fn small_rational_sweep_is_clean_and_deterministic() {
        let mut c = cfg(Family::Rationals { max_q: 40 });
        c.twin_expansions = true;
        let a = run_suite(&c).unwrap();
        assert!(a.passed, "{}", a.to_json());
        assert_eq!(a.inputs, enumerate_rationals(40).unwrap().count() as u64);
        c.workers = 4;
        let b = run_suite(&c).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.counts(CheckId::TwinAgreement).pass > 0);
    }

    #[test]
    fn stream_sweep_runs() {
        let mut c = cfg(Family::Streams { count: 8, max_digit: 20, length: 12, seed: 42 });
        c.workers = 3;
        let r = run_suite(&c).unwrap();
        assert!(r.passed, "{}", r.to_json());
        assert!(!r.checks.contains_key(&CheckId::Jp));
    }

    #[test]
    fn prop31_family() {
        let r = run_suite(&cfg(Family::Prop31 { d_lo: 1, d_hi: 50 })).unwrap();
        assert!(r.passed);
        assert_eq!(r.counts(CheckId::Prop31).pass, 50);
    }

    #[test]
    fn invalid_configs() {
        for f in [
            Family::Rationals { max_q: 0 },
            Family::Rationals { max_q: 1 },
            Family::Streams { count: 1, max_digit: 3, length: 4, seed: 0 },
            Family::Prop31 { d_lo: 5, d_hi: 4 },
            Family::Surds { max_d: 1, max_coeff: 3, depth: 10 },
        ] {
            assert!(matches!(run_suite(&cfg(f)), Err(Error::Config(_))));
        }
        let mut c = cfg(Family::Rationals { max_q: 5 });
        c.workers = 0;
        assert!(run_suite(&c).is_err());
    }
}
