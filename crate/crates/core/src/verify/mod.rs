//! Verification harness: evaluates every bound over enumerated and sampled
//! inputs with exact comparisons and aggregates the verdicts.

mod checks;
mod enumerate;
mod subject;
mod suite;

pub use checks::{
    check_borel, check_borel_improved, check_difficult_theorem, check_easy_theorem, check_hancl, check_jp,
    check_k_only, check_legendre, check_prop31, check_tong, check_twin_agreement, check_vahlen, run_checks,
    CheckOptions,
};
pub use enumerate::{enumerate_rationals, enumerate_surds, FareyIter};
pub use subject::{Subject, SubjectKind};
pub use suite::{run_suite, CheckSummary, Family, SummaryReport, SweepConfig, VerdictCounts};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cf::Digit;
use crate::error::Error;
use crate::numeric::{QuadSurd, RatInterval};

/// Identifier of one verification check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Vahlen,
    Borel,
    BorelImproved,
    Tong,
    Hancl,
    EasyTheorem,
    DifficultTheorem,
    KOnly,
    Legendre,
    Jp,
    TwinAgreement,
    Prop31,
}

impl CheckId {
    /// Every per-input check, in report order.
    pub const ALL: [CheckId; 11] = [
        CheckId::Vahlen,
        CheckId::Borel,
        CheckId::BorelImproved,
        CheckId::Tong,
        CheckId::Hancl,
        CheckId::EasyTheorem,
        CheckId::DifficultTheorem,
        CheckId::KOnly,
        CheckId::Legendre,
        CheckId::Jp,
        CheckId::TwinAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Vahlen => "vahlen",
            CheckId::Borel => "borel",
            CheckId::BorelImproved => "borel-improved",
            CheckId::Tong => "tong",
            CheckId::Hancl => "hancl",
            CheckId::EasyTheorem => "easy-theorem",
            CheckId::DifficultTheorem => "difficult-theorem",
            CheckId::KOnly => "k-only",
            CheckId::Legendre => "legendre",
            CheckId::Jp => "jp",
            CheckId::TwinAgreement => "twin-agreement",
            CheckId::Prop31 => "prop31",
        }
    }

    /// Parses a comma-separated list; `all` expands to [`CheckId::ALL`].
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>, Error> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "all" {
                out.extend(CheckId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let all = CheckId::ALL.iter().copied().chain([CheckId::Prop31]);
        for c in all {
            if c.as_str() == s {
                return Ok(c);
            }
        }
        // accepted aliases
        match s {
            "hancl-disjunction" => Ok(CheckId::Hancl),
            "easy" => Ok(CheckId::EasyTheorem),
            "difficult" => Ok(CheckId::DifficultTheorem),
            _ => Err(Error::Config(format!("unknown check {s:?}"))),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Outcome of one comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Holds, strictly where the bound is strict.
    Pass,
    /// A non-strict bound is attained.
    Equality,
    /// A strict bound is attained by a rational input (a finding, not a
    /// failure; irrational inputs escalate this to a violation).
    StrictEquality,
    /// Both members of the Hančl disjunction exceed `H(q)` at a
    /// `(a_n, a_{n+1}) = (1, 1)` index.
    BothExceed,
    /// Hypothesis not met or the statement gives no improvement.
    Skipped,
    Violation,
}

impl Verdict {
    pub const ALL: [Verdict; 6] =
        [Verdict::Pass, Verdict::Equality, Verdict::StrictEquality, Verdict::BothExceed, Verdict::Skipped, Verdict::Violation];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Equality => "equality",
            Verdict::StrictEquality => "strict-equality",
            Verdict::BothExceed => "both-exceed",
            Verdict::Skipped => "skipped",
            Verdict::Violation => "violation",
        }
    }

    pub fn is_finding(self) -> bool {
        !matches!(self, Verdict::Pass | Verdict::Skipped)
    }

    fn rank(self) -> u8 {
        // violations sort first in finding lists
        match self {
            Verdict::Violation => 0,
            Verdict::StrictEquality => 1,
            Verdict::BothExceed => 2,
            Verdict::Equality => 3,
            Verdict::Skipped => 4,
            Verdict::Pass => 5,
        }
    }
}

/// Which part of a statement a result refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Upper bound on a minimum.
    Min,
    /// Lower bound on a maximum.
    Max,
    /// The two-sided Hančl statement.
    Disjunction,
    /// An exact identity (JP forward/backward).
    Forward,
    Backward,
    /// A candidate fraction must be a convergent.
    Membership,
    /// Canonical and twin expansions agree.
    Agreement,
    /// Both sides of an equivalence hold together.
    Iff,
}

/// An exact value or a rational enclosure of one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(QuadSurd),
    Enclosure(RatInterval),
}

impl Value {
    /// Exact comparison against `b`; `None` while an enclosure straddles it.
    pub fn cmp_bound(&self, b: &QuadSurd) -> Option<Ordering> {
        match self {
            Value::Exact(x) => Some(x.cmp(b)),
            Value::Enclosure(iv) => iv.cmp_exact(b),
        }
    }

    pub fn min(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a.min(b).clone()),
            (a, b) => Value::Enclosure(a.interval().min(&b.interval())),
        }
    }

    pub fn max(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a.max(b).clone()),
            (a, b) => Value::Enclosure(a.interval().max(&b.interval())),
        }
    }

    fn interval(&self) -> RatInterval {
        match self {
            Value::Exact(x) => crate::numeric::surd_to_interval(x, &crate::numeric::rat(1, 1_000_000_000_000)),
            Value::Enclosure(iv) => iv.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&QuadSurd> {
        match self {
            Value::Exact(x) => Some(x),
            Value::Enclosure(_) => None,
        }
    }

    /// Display-only decimal.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        match self {
            Value::Exact(x) => x.to_f64(),
            Value::Enclosure(iv) => ((iv.lo() + iv.hi()) / crate::numeric::int(2)).to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        match self {
            Value::Exact(x) => m.serialize_entry("exact", x)?,
            Value::Enclosure(iv) => m.serialize_entry("enclosure", iv)?,
        }
        m.end()
    }
}

/// A named value kept for replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Named {
    pub name: String,
    pub value: Value,
}

/// One verdict with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: CheckId,
    pub input: String,
    pub input_ordinal: u64,
    /// The index `n` of `(Θ_{n−1}, Θ_n)`; 0 for per-input checks.
    pub index: usize,
    pub side: Side,
    pub lhs: Option<Value>,
    pub bound: Option<Value>,
    pub strict: bool,
    pub verdict: Verdict,
    /// `(a_{n−1}, a_n, a_{n+1}, a_{n+2})` where defined.
    pub digits: [Option<Digit>; 4],
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Named>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Largest digit or coefficient index the verdict depends on.
    #[serde(skip)]
    pub reach: usize,
}

impl CheckResult {
    fn sort_key(&self) -> (CheckId, u8, u64, usize, Side, &str) {
        (self.check, self.verdict.rank(), self.input_ordinal, self.index, self.side, &self.input)
    }
}

impl PartialOrd for CheckResult {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CheckResult {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}
