use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::subject::MAX_EXTRA;
use super::{CheckId, CheckResult, Named, Side, Subject, SubjectKind, Value, Verdict};
use crate::bounds::{
    borel_improved_bound, difficult_case_bounds, easy_case_bounds, hancl_h, k_only_bounds, BoundReport,
};
use crate::cf::{CfData, Digit, RealSpec};
use crate::error::{Error, Result};
use crate::numeric::{surd_to_interval, QuadSurd, RatInterval, Rational};
use crate::theta::{inv_sqrt5, jp_backward, jp_forward};

/// Extra digits tried, in order, before a stream comparison is declared
/// inconclusive.
const SCHEDULE: [usize; 6] = [10, 20, 40, 80, 160, MAX_EXTRA];

/// Default `max_B` for irrational subjects.
pub(crate) const DEFAULT_LEGENDRE_MAX_B: u64 = 1000;

/// Largest `max_B` accepted by the Legendre scan.
const LEGENDRE_LIMIT: u64 = 1 << 30;

/// Per-run switches for [`run_checks`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// `max_B` for the Legendre scan; defaults to `q` for a rational `p/q`
    /// and 1000 otherwise.
    pub legendre_max_b: Option<u64>,
    /// Also run rational inputs under their twin expansion.
    pub twin: bool,
}

fn decide<T>(s: &Subject, what: impl Fn() -> String, mut f: impl FnMut(usize) -> Option<T>) -> Result<T> {
    if s.is_exact() {
        return f(0).ok_or_else(|| Error::Inconclusive(format!("{}: {}", s.descriptor, what())));
    }
    for extra in SCHEDULE {
        if let Some(v) = f(extra) {
            return Ok(v);
        }
    }
    Err(Error::Inconclusive(format!("{}: {} after {MAX_EXTRA} extra digits", s.descriptor, what())))
}

fn verdict_for(s: &Subject, ord: Ordering, upper: bool, strict: bool) -> Verdict {
    let holds = if upper { Ordering::Less } else { Ordering::Greater };
    if ord == holds {
        Verdict::Pass
    } else if ord == Ordering::Equal {
        if !strict {
            Verdict::Equality
        } else if matches!(s.kind, SubjectKind::Rational | SubjectKind::Point) {
            Verdict::StrictEquality
        } else {
            Verdict::Violation
        }
    } else {
        Verdict::Violation
    }
}

fn blank(s: &Subject, check: CheckId, n: usize, side: Side, reach: usize) -> CheckResult {
    let n = n as isize;
    CheckResult {
        check,
        input: s.descriptor.clone(),
        input_ordinal: s.ordinal,
        index: n as usize,
        side,
        lhs: None,
        bound: None,
        strict: false,
        verdict: Verdict::Pass,
        digits: [s.digit(n - 1), s.digit(n), s.digit(n + 1), s.digit(n + 2)],
        values: Vec::new(),
        note: None,
        reach,
    }
}

fn available(s: &Subject, ks: &[isize]) -> bool {
    ks.iter().all(|&k| k >= 0 && s.theta(k, SCHEDULE[0]).is_some())
}

/// `min`/`max` of `Θ_k, k ∈ ks` against `bound`.
#[allow(clippy::too_many_arguments)]
fn bound_check(
    s: &Subject,
    check: CheckId,
    n: usize,
    side: Side,
    ks: &[isize],
    bound: &QuadSurd,
    strict: bool,
    reach: usize,
) -> Result<Option<CheckResult>> {
    if !available(s, ks) {
        return Ok(None);
    }
    let upper = side == Side::Min;
    let r = decide(
        s,
        || format!("{check} at n = {n}"),
        |extra| {
            let mut vals = ks.iter().map(|&k| s.theta(k, extra));
            let mut acc = vals.next()??;
            for v in vals {
                let v = v?;
                acc = if upper { acc.min(&v) } else { acc.max(&v) };
            }
            let ord = acc.cmp_bound(bound)?;
            let mut res = blank(s, check, n, side, reach);
            res.verdict = verdict_for(s, ord, upper, strict);
            res.lhs = Some(acc);
            res.bound = Some(Value::Exact(bound.clone()));
            res.strict = strict;
            Some(res)
        },
    )?;
    Ok(Some(r))
}

fn report_checks(
    s: &Subject,
    check: CheckId,
    n: usize,
    ks: &[isize],
    report: &BoundReport,
    reach: usize,
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let tag = report.case_tag.as_str();
    if let Some(mut r) = bound_check(s, check, n, Side::Min, ks, &report.min_bound, report.min_strict, reach)? {
        r.note = Some(tag.to_string());
        out.push(r);
    }
    if let Some(max) = &report.max_bound {
        if let Some(mut r) = bound_check(s, check, n, Side::Max, ks, max, report.max_strict, reach)? {
            r.note = Some(tag.to_string());
            out.push(r);
        }
    }
    Ok(out)
}

fn digits_at(s: &Subject, ks: &[isize]) -> Option<Vec<Digit>> {
    ks.iter().map(|&k| s.digit(k)).collect()
}

fn eval_index(check: CheckId, s: &Subject, n: usize) -> Result<Vec<CheckResult>> {
    let i = n as isize;
    let pair = [i - 1, i];
    let triple = [i - 1, i, i + 1];
    let one = |r: Option<CheckResult>| r.into_iter().collect::<Vec<_>>();
    match check {
        CheckId::Vahlen => {
            let half = QuadSurd::from_rational(&Rational::new(1.into(), 2.into()));
            Ok(one(bound_check(s, check, n, Side::Min, &pair, &half, true, n)?))
        }
        CheckId::Borel => Ok(one(bound_check(s, check, n, Side::Min, &triple, &inv_sqrt5(), true, n + 1)?)),
        CheckId::BorelImproved | CheckId::Tong => {
            let Some(a) = s.digit(i + 1) else { return Ok(Vec::new()) };
            let side = if check == CheckId::Tong { Side::Max } else { Side::Min };
            let b = borel_improved_bound(a)?;
            Ok(one(bound_check(s, check, n, side, &triple, &b, false, n + 1)?))
        }
        CheckId::EasyTheorem => {
            let Some(d) = digits_at(s, &[i, i + 1]) else { return Ok(Vec::new()) };
            if !available(s, &pair) {
                return Ok(Vec::new());
            }
            let (m, big_m) = (d[0].min(d[1]), d[0].max(d[1]));
            if big_m == 1 {
                let mut r = blank(s, check, n, Side::Min, n + 1);
                r.verdict = Verdict::Skipped;
                r.note = Some("no-improvement".into());
                return Ok(vec![r]);
            }
            report_checks(s, check, n, &pair, &easy_case_bounds(m, big_m)?, n + 1)
        }
        CheckId::DifficultTheorem => {
            let Some(d) = digits_at(s, &[i - 1, i, i + 1, i + 2]) else { return Ok(Vec::new()) };
            if d[1] != 1 || d[2] != 1 {
                return Ok(Vec::new());
            }
            let (m, big_m) = (d[0].min(d[3]), d[0].max(d[3]));
            report_checks(s, check, n, &pair, &difficult_case_bounds(m, big_m)?, n + 2)
        }
        CheckId::KOnly => {
            let Some(d) = digits_at(s, &[i, i + 1, i + 2]) else { return Ok(Vec::new()) };
            if d[0] != 1 || d[1] != 1 {
                return Ok(Vec::new());
            }
            report_checks(s, check, n, &pair, &k_only_bounds(d[2])?, n + 2)
        }
        CheckId::Hancl => hancl_at(s, n),
        CheckId::Jp => jp_at(s, n),
        CheckId::Legendre | CheckId::TwinAgreement | CheckId::Prop31 => Ok(Vec::new()),
    }
}

fn hancl_at(s: &Subject, n: usize) -> Result<Vec<CheckResult>> {
    let (Some(q0), Some(q1)) = (s.q(n - 1), s.q(n)) else { return Ok(Vec::new()) };
    let i = n as isize;
    if !available(s, &[i - 1, i]) {
        return Ok(Vec::new());
    }
    let h0 = QuadSurd::from_rational(&hancl_h(q0)?);
    let h1 = QuadSurd::from_rational(&hancl_h(q1)?);
    let pattern = s.digit(i) == Some(1) && s.digit(i + 1) == Some(1);
    let r = decide(
        s,
        || format!("hancl at n = {n}"),
        |extra| {
            let t0 = s.theta(i - 1, extra)?;
            let t1 = s.theta(i, extra)?;
            let o0 = t0.cmp_bound(&h0);
            let o1 = t1.cmp_bound(&h1);
            let verdict = if o0 == Some(Ordering::Less) || o1 == Some(Ordering::Less) {
                Verdict::Pass
            } else if o0.is_none() || o1.is_none() {
                return None;
            } else if pattern {
                Verdict::BothExceed
            } else {
                Verdict::Violation
            };
            let mut r = blank(s, CheckId::Hancl, n, Side::Disjunction, n + 1);
            r.verdict = verdict;
            r.strict = true;
            r.lhs = Some(t0);
            r.bound = Some(Value::Exact(h0.clone()));
            r.values = vec![
                Named { name: "theta_n".into(), value: t1 },
                Named { name: "h_q_n".into(), value: Value::Exact(h1.clone()) },
            ];
            Some(r)
        },
    )?;
    Ok(vec![r])
}

fn jp_at(s: &Subject, n: usize) -> Result<Vec<CheckResult>> {
    if !s.is_exact() {
        return Ok(Vec::new());
    }
    let i = n as isize;
    let Some(a) = s.digit(i + 1) else { return Ok(Vec::new()) };
    let (Some(Value::Exact(t0)), Some(Value::Exact(t1)), Some(Value::Exact(t2))) =
        (s.theta(i - 1, 0), s.theta(i, 0), s.theta(i + 1, 0))
    else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (side, got, want) in [
        (Side::Forward, jp_forward(&t0, &t1, a), &t2),
        (Side::Backward, jp_backward(&t1, &t2, a), &t0),
    ] {
        let mut r = blank(s, CheckId::Jp, n, side, n + 1);
        r.bound = Some(Value::Exact(want.clone()));
        match got {
            Ok(v) => {
                r.verdict = if &v == want { Verdict::Pass } else { Verdict::Violation };
                r.lhs = Some(Value::Exact(v));
            }
            Err(e) => {
                r.verdict = Verdict::Violation;
                r.note = Some(e.to_string());
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// Runs `checks` over every eligible index of `s`, then the per-input
/// checks (Legendre, twin agreement).
pub fn run_checks(s: &Subject, checks: &[CheckId], opts: &CheckOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=s.max_n() {
        for &c in checks {
            out.extend(eval_index(c, s, n)?);
        }
    }
    if checks.contains(&CheckId::Legendre) {
        let max_b = match (opts.legendre_max_b, s.exact_value().and_then(QuadSurd::to_rational)) {
            (Some(b), _) => b,
            (None, Some(r)) => r.denom().to_u64().unwrap_or(u64::MAX),
            (None, None) => DEFAULT_LEGENDRE_MAX_B,
        };
        out.extend(legendre(s, max_b)?);
    }
    let twin = opts.twin || checks.contains(&CheckId::TwinAgreement);
    if twin && s.kind == SubjectKind::Rational {
        let extra = twin_run(s, &out, checks, opts)?;
        out.extend(extra);
    }
    Ok(out)
}

fn twin_run(s: &Subject, mine: &[CheckResult], checks: &[CheckId], opts: &CheckOptions) -> Result<Vec<CheckResult>> {
    let (Some(cf), Some(x)) = (s.cf(), s.exact_value().and_then(QuadSurd::to_rational)) else {
        return Ok(Vec::new());
    };
    let Some(twin_cf) = cf.twin() else { return Ok(Vec::new()) };
    let len = cf.len();
    let depth = if s.max_n() >= len { twin_cf.len() } else { s.max_n() };
    let twin = Subject::from_expansion(x, twin_cf, depth)?.with_label(format!("twin:{}", s.descriptor), s.ordinal);
    let inner: Vec<CheckId> = checks.iter().copied().filter(|&c| c != CheckId::TwinAgreement).collect();
    let inner_opts = CheckOptions { twin: false, ..opts.clone() };
    let theirs = run_checks(&twin, &inner, &inner_opts)?;

    let shared = |r: &CheckResult| r.check != CheckId::Legendre && r.reach < len;
    let key = |r: &CheckResult| (r.check, r.index, r.side);
    let a: std::collections::BTreeMap<_, _> = mine.iter().filter(|r| shared(r)).map(|r| (key(r), r.verdict)).collect();
    let b: std::collections::BTreeMap<_, _> =
        theirs.iter().filter(|r| shared(r)).map(|r| (key(r), r.verdict)).collect();
    let mismatches: Vec<String> = a
        .keys()
        .chain(b.keys())
        .filter(|k| a.get(k) != b.get(k))
        .map(|(c, n, side)| format!("{c}@{n}/{side:?}"))
        .collect();
    let mut r = blank(s, CheckId::TwinAgreement, 0, Side::Agreement, 0);
    r.digits = [None; 4];
    r.verdict = if mismatches.is_empty() { Verdict::Pass } else { Verdict::Violation };
    r.note = Some(if mismatches.is_empty() {
        format!("{} shared verdicts agree", a.len())
    } else {
        format!("disagree: {}", mismatches.join(", "))
    });
    let mut out = theirs;
    out.push(r);
    Ok(out)
}

// ----- Legendre -----

fn legendre(s: &Subject, max_b: u64) -> Result<Vec<CheckResult>> {
    let Some(cf) = s.cf() else { return Ok(Vec::new()) };
    if max_b == 0 || max_b > LEGENDRE_LIMIT {
        return Err(Error::InvalidArgument(format!("legendre max_B must be in 1..={LEGENDRE_LIMIT}, got {max_b}")));
    }
    let big_b = BigInt::from(max_b);
    if s.kind != SubjectKind::Rational && *cf.q(cf.len() as isize) <= big_b {
        return Err(Error::InvalidArgument(format!("expansion too short for max_B = {max_b}")));
    }
    let table: Vec<(BigInt, BigInt)> = (0..=cf.len())
        .map(|k| (cf.p(k as isize).clone(), cf.q(k as isize).clone()))
        .take_while(|(_, q)| *q <= big_b)
        .collect();

    let hits: Vec<(BigInt, u64)> = match s.kind {
        SubjectKind::Rational => {
            let x = s.exact_value().and_then(QuadSurd::to_rational).expect("rational subject");
            rational_hits(&x, max_b)
        }
        SubjectKind::Surd => {
            let x = s.exact_value().expect("surd subject").clone();
            let width = Rational::new(BigInt::one(), scale(max_b) << 2);
            let iv = surd_to_interval(&x, &width);
            enclosure_hits(&iv, max_b, |a, b| Some(exact_hit(&x, a, b)))
                .ok_or_else(|| Error::Inconclusive(format!("{}: legendre", s.descriptor)))?
        }
        SubjectKind::Stream => {
            let iv = s.value_enclosure().expect("stream subject");
            enclosure_hits(&iv, max_b, |_, _| None)
                .ok_or_else(|| Error::Inconclusive(format!("{}: legendre", s.descriptor)))?
        }
        SubjectKind::Point => return Ok(Vec::new()),
    };

    let half = QuadSurd::from_rational(&Rational::new(1.into(), 2.into()));
    let mut out = Vec::new();
    for (a, b) in hits {
        let bb = BigInt::from(b);
        if !a.gcd(&bb).is_one() {
            continue;
        }
        let member = table.iter().any(|(p, q)| *p == a && *q == bb);
        let cand = Rational::new(a.clone(), bb.clone());
        let mut r = blank(s, CheckId::Legendre, b as usize, Side::Membership, usize::MAX);
        r.digits = [None; 4];
        r.verdict = if member { Verdict::Pass } else { Verdict::Violation };
        r.strict = true;
        r.lhs = Some(legendre_lhs(s, &cand, &bb));
        r.bound = Some(Value::Exact(half.clone()));
        r.values = vec![Named { name: "candidate".into(), value: Value::Exact(QuadSurd::from_rational(&cand)) }];
        out.push(r);
    }
    Ok(out)
}

fn legendre_lhs(s: &Subject, cand: &Rational, b: &BigInt) -> Value {
    let b2 = Rational::from_integer(b * b);
    if let Some(x) = s.exact_value() {
        let diff = x.checked_sub(&QuadSurd::from_rational(cand)).expect("same field").abs();
        return Value::Exact(QuadSurd::from_rational(&b2).checked_mul(&diff).expect("same field"));
    }
    let iv = s.value_enclosure().expect("stream subject");
    let lo = iv.lo() - cand;
    let hi = iv.hi() - cand;
    let (lo_abs, hi_abs) = (lo.abs() * &b2, hi.abs() * &b2);
    if lo.is_negative() != hi.is_negative() {
        Value::Enclosure(RatInterval::spanning(Rational::zero(), lo_abs.max(hi_abs)))
    } else {
        Value::Enclosure(RatInterval::spanning(lo_abs, hi_abs))
    }
}

/// `A/B` with `B ≤ max_b` and `2B|pB − Aq| < q` for `x = p/q`.
fn rational_hits(x: &Rational, max_b: u64) -> Vec<(BigInt, u64)> {
    let mut out = Vec::new();
    if let (Some(p), Some(q)) = (x.numer().to_i64(), x.denom().to_i64()) {
        let (p, q) = (p as i128, q as i128);
        for b in 1..=max_b {
            let bi = b as i128;
            let a0 = (p * bi).div_euclid(q);
            for a in [a0, a0 + 1] {
                if 2 * bi * (p * bi - a * q).abs() < q {
                    out.push((BigInt::from(a), b));
                }
            }
        }
        return out;
    }
    let (p, q) = (x.numer(), x.denom());
    for b in 1..=max_b {
        let bi = BigInt::from(b);
        let a0 = (p * &bi).div_floor(q);
        for a in [a0.clone(), a0 + 1] {
            if (&bi * 2u32) * (p * &bi - &a * q).abs() < *q {
                out.push((a, b));
            }
        }
    }
    out
}

fn scale_bits(max_b: u64) -> u32 {
    2 * (64 - max_b.leading_zeros()) + 24
}

fn scale(max_b: u64) -> BigInt {
    BigInt::one() << scale_bits(max_b)
}

/// Hits for `x` inside `iv` (width far below `2^-s`), working on the dyadic
/// grid `S = 2^s`. `fallback` settles candidates the grid cannot; `None`
/// when one stays undecided.
fn enclosure_hits(
    iv: &RatInterval,
    max_b: u64,
    fallback: impl Fn(&BigInt, u64) -> Option<bool>,
) -> Option<Vec<(BigInt, u64)>> {
    let sc = scale(max_b);
    let lo = (iv.lo() * Rational::from_integer(sc.clone())).floor().to_integer().to_i128()?;
    let hi = (iv.hi() * Rational::from_integer(sc.clone())).ceil().to_integer().to_i128()?;
    let s = sc.to_i128()?;
    let mut out = Vec::new();
    for b in 1..=max_b {
        let bi = b as i128;
        let a_lo = (lo * bi).div_euclid(s);
        let a_hi = (hi * bi).div_euclid(s) + 1;
        for a in a_lo..=a_hi {
            let dl = lo * bi - a * s;
            let dh = hi * bi - a * s;
            let max_abs = dl.abs().max(dh.abs());
            let min_abs = if dl <= 0 && dh >= 0 { 0 } else { dl.abs().min(dh.abs()) };
            if 2 * bi * max_abs < s {
                out.push((BigInt::from(a), b));
            } else if 2 * bi * min_abs >= s {
                continue;
            } else if fallback(&BigInt::from(a), b)? {
                out.push((BigInt::from(a), b));
            }
        }
    }
    Some(out)
}

fn exact_hit(x: &QuadSurd, a: &BigInt, b: u64) -> bool {
    let bb = BigInt::from(b);
    let cand = QuadSurd::from_rational(&Rational::new(a.clone(), bb.clone()));
    let lhs = QuadSurd::from_int(&bb * &bb).checked_mul(&x.checked_sub(&cand).expect("same field").abs()).expect("same field");
    lhs < QuadSurd::from_rational(&Rational::new(1.into(), 2.into()))
}

// ----- public per-check entry points -----

fn single(x: &RealSpec, depth: usize, checks: &[CheckId]) -> Result<Vec<CheckResult>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    run_checks(&Subject::from_spec(x, depth)?, checks, &CheckOptions::default())
}

/// `min{Θ_{n−1}, Θ_n} < 1/2` for `n ≤ depth`.
pub fn check_vahlen(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::Vahlen])
}

/// `min{Θ_{n−1}, Θ_n, Θ_{n+1}} < 1/√5`, with the digit-dependent forms
/// `min ≤ 1/√(a_{n+1}²+4) ≤ max`.
pub fn check_borel(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::Borel, CheckId::BorelImproved, CheckId::Tong])
}

/// `min{Θ_{n−1}, Θ_n, Θ_{n+1}} ≤ 1/√(a_{n+1}²+4)`.
pub fn check_borel_improved(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::BorelImproved])
}

/// `max{Θ_{n−1}, Θ_n, Θ_{n+1}} ≥ 1/√(a_{n+1}²+4)`.
pub fn check_tong(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::Tong])
}

/// `Θ_{n−1} < H(q_{n−1})` or `Θ_n < H(q_n)`.
pub fn check_hancl(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::Hancl])
}

pub fn check_easy_theorem(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::EasyTheorem])
}

pub fn check_difficult_theorem(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    if depth < 2 {
        return Err(Error::InvalidArgument("depth must be at least 2".into()));
    }
    single(x, depth, &[CheckId::DifficultTheorem])
}

pub fn check_k_only(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::KOnly])
}

/// Both directions of the JP recurrence on every orbit triple.
pub fn check_jp(x: &RealSpec, depth: usize) -> Result<Vec<CheckResult>> {
    single(x, depth, &[CheckId::Jp])
}

/// Every canonical `A/B`, `B ≤ max_b`, with `B²|x − A/B| < 1/2` must be a
/// convergent.
pub fn check_legendre(x: &RealSpec, max_b: u64) -> Result<Vec<CheckResult>> {
    if max_b == 0 {
        return Err(Error::InvalidArgument("max_B must be at least 1".into()));
    }
    // q_k ≥ F_{k+1} ≥ φ^{k−1}, so this many digits push q past max_B
    let depth = 2 * (64 - max_b.leading_zeros() as usize) + 4;
    let s = Subject::from_spec(x, depth)?;
    let opts = CheckOptions { legendre_max_b: Some(max_b), twin: false };
    run_checks(&s, &[CheckId::Legendre], &opts)
}

/// Canonical and twin expansions of a rational give the same verdicts on
/// shared indices.
pub fn check_twin_agreement(x: &Rational) -> Result<Vec<CheckResult>> {
    let s = Subject::from_spec(&RealSpec::rational(x.clone())?, usize::MAX)?;
    let checks: Vec<CheckId> = CheckId::ALL.iter().copied().filter(|c| *c != CheckId::Legendre).collect();
    Ok(run_checks(&s, &checks, &CheckOptions { legendre_max_b: None, twin: true })?
        .into_iter()
        .filter(|r| r.check == CheckId::TwinAgreement)
        .collect())
}

/// For `x_d = [0; d, 1, 1, d]`: `H(q_1) ≤ Θ_1 ∧ H(q_2) ≤ Θ_2` holds iff
/// `d ≥ 4`, and so does `5q ≤ q² + 2` at `q = d + 1`.
pub fn check_prop31(d_lo: u64, d_hi: u64) -> Result<Vec<CheckResult>> {
    if d_lo == 0 || d_lo > d_hi {
        return Err(Error::InvalidArgument(format!("need 1 <= d_lo <= d_hi, got {d_lo}..{d_hi}")));
    }
    (d_lo..=d_hi).map(prop31_one).collect()
}

fn prop31_one(d: u64) -> Result<CheckResult> {
    let cf = CfData::from_digits(&[d, 1, 1, d], true)?;
    let x = cf.convergent(4);
    let theta = |k: isize| {
        let (p, q) = (cf.p(k), cf.q(k));
        (&x - Rational::new(p.clone(), q.clone())).abs() * Rational::from_integer(q * q)
    };
    let (t1, t2) = (theta(1), theta(2));
    let (h1, h2) = (hancl_h(cf.q(1))?, hancl_h(cf.q(2))?);
    let both = h1 <= t1 && h2 <= t2;
    let q = BigInt::from(d) + 1u32;
    let reduced = &q * 5u32 <= &q * &q + 2u32;
    let expected = d >= 4;
    let sq = |r: &Rational| Value::Exact(QuadSurd::from_rational(r));
    Ok(CheckResult {
        check: CheckId::Prop31,
        input: format!("digits:{d},1,1,{d}"),
        input_ordinal: d,
        index: d as usize,
        side: Side::Iff,
        lhs: Some(sq(&t1)),
        bound: Some(sq(&h1)),
        strict: false,
        verdict: if both == expected && reduced == expected { Verdict::Pass } else { Verdict::Violation },
        digits: [Some(d), Some(1), Some(1), Some(d)],
        values: vec![
            Named { name: "theta_2".into(), value: sq(&t2) },
            Named { name: "h_q_2".into(), value: sq(&h2) },
        ],
        note: Some(format!("both_exceed={both} reduced={reduced}")),
        reach: 4,
    })
}
