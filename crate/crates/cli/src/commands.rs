use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};
use thetabound::bounds::{
    borel_bounds, borel_improved_bounds, difficult_case_bounds, easy_case_bounds, hancl_bounds, hancl_nair_constant,
    k_only_bounds, region_i, region_i1, region_psi_h, region_psi_v, region_psi_v1k, vahlen_bounds, BoundReport, Region,
};
use thetabound::cf::{convergents, orbit, rcf_expand_rational, surd_period, Digit, RealSpec};
use thetabound::theta::{mu_measure, theta_direct, theta_from_tv};
use thetabound::verify::{run_suite, CheckId, Family, SummaryReport, SweepConfig, Verdict};
use thetabound::{Error, QuadSurd, Result};

use crate::render::{dec, dec_f64, dec_rat, frac, surd, text, Output, Table};

pub const DEFAULT_IRRATIONAL_DEPTH: usize = 20;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// `a..b`, inclusive on both ends.
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| Error::Parse(format!("expected a..b, got {s:?}")))?;
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad range bound {t:?}")));
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(invalid(format!("empty range {a}..{b}")));
    }
    Ok((a, b))
}

pub fn expand(input: &str, depth: Option<usize>) -> Result<Output> {
    let x = RealSpec::parse(input)?;
    let cf = match &x {
        RealSpec::Rational(r) => {
            let full = rcf_expand_rational(r)?;
            match depth {
                Some(n) if n < full.len() => full.truncated(n),
                _ => full,
            }
        }
        _ => convergents(&x, depth.unwrap_or(DEFAULT_IRRATIONAL_DEPTH))?,
    };
    let truncated = matches!(&x, RealSpec::Rational(r) if rcf_expand_rational(r).map(|f| f.len()).unwrap_or(0) > cf.len());
    let period = match &x {
        RealSpec::Surd(s) => Some(surd_period(s)?),
        _ => None,
    };
    let mut table = Table::new(&["k", "digit", "p", "q", "convergent"]);
    let mut conv = Vec::new();
    for k in 0..=cf.len() {
        let c = cf.convergent(k);
        conv.push(frac(&c));
        table.push(vec![
            k.to_string(),
            cf.digit(k).map(|d| d.to_string()).unwrap_or_default(),
            cf.p(k as isize).to_string(),
            cf.q(k as isize).to_string(),
            dec_rat(&c),
        ]);
    }
    let value = x.exact().filter(QuadSurd::is_rational).map(|v| surd(&v));
    let json = json!({
        "command": "expand",
        "input": x.to_string(),
        "kind": x.kind(),
        "value": value,
        "digits": cf.digits(),
        "convergents": conv,
        "exhausted": matches!(x, RealSpec::Rational(_)) && !truncated,
        "period": period.as_ref().map(|p| json!({
            "preperiod": p.preperiod,
            "period": p.period,
            "digits": p.digits,
        })),
    });
    let mut human = vec![
        format!("input: {x} ({})", x.kind()),
        format!("digits: [{}]", join(cf.digits())),
    ];
    if let Some(v) = x.exact().filter(QuadSurd::is_rational) {
        human.push(format!("value: {v}"));
    }
    if truncated {
        human.push(format!("truncated to {} digits", cf.len()));
    }
    if let Some(p) = &period {
        human.push(format!("period: (preperiod {}, length {}), block [{}]", p.preperiod, p.period, join(&p.digits[p.preperiod..])));
    }
    human.push(table.to_text());
    Ok(Output { json, human: human.join("\n"), table })
}

fn join(ds: &[Digit]) -> String {
    ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn theta(input: &str, range: &str) -> Result<Output> {
    let x = RealSpec::parse(input)?;
    let (n0, mut n1) = parse_range(range)?;
    let mut note = None;
    if let RealSpec::Rational(r) = &x {
        let len = rcf_expand_rational(r)?.len() as u64;
        if n1 > len {
            note = Some(format!("expansion has {len} digits; range truncated at n = {len}"));
            n1 = len;
        }
    }
    let mut table = Table::new(&["n", "theta", "decimal"]);
    let mut rows = Vec::new();
    for n in n0..=n1 {
        let t = theta_direct(&x, n as usize)?;
        rows.push(json!({ "n": n, "theta": surd(&t), "decimal": dec(&t) }));
        table.push(vec![n.to_string(), text(&t), dec(&t)]);
    }
    let json = json!({
        "command": "theta",
        "input": x.to_string(),
        "kind": x.kind(),
        "rows": rows,
        "note": note,
    });
    let mut human = table.to_text();
    if let Some(n) = &note {
        human.push_str(&format!("\nnote: {n}"));
    }
    Ok(Output { json, human, table })
}

pub fn orbit_cmd(input: &str, steps: Option<usize>) -> Result<Output> {
    let x = RealSpec::parse(input)?;
    let n = match (&x, steps) {
        (_, Some(n)) => n,
        (RealSpec::Rational(r), None) => rcf_expand_rational(r)?.len(),
        _ => DEFAULT_IRRATIONAL_DEPTH,
    };
    let o = orbit(&x, n)?;
    let mut table = Table::new(&["k", "digit", "t", "v", "t_decimal", "v_decimal", "theta_prev", "theta"]);
    let mut rows = Vec::new();
    for s in &o.steps {
        let p = s.point()?;
        let th = if s.k >= 1 { Some(theta_from_tv(&p)?) } else { None };
        rows.push(json!({
            "k": s.k,
            "digit": s.digit,
            "t": surd(&p.t),
            "v": surd(&p.v),
            "theta_prev": th.as_ref().map(|t| surd(&t.prev)),
            "theta": th.as_ref().map(|t| surd(&t.curr)),
        }));
        table.push(vec![
            s.k.to_string(),
            s.digit.map(|d| d.to_string()).unwrap_or_default(),
            text(&p.t),
            text(&p.v),
            dec(&p.t),
            dec(&p.v),
            th.as_ref().map(|t| dec(&t.prev)).unwrap_or_default(),
            th.as_ref().map(|t| dec(&t.curr)).unwrap_or_default(),
        ]);
    }
    let json = json!({
        "command": "orbit",
        "input": x.to_string(),
        "kind": x.kind(),
        "exhausted": o.exhausted,
        "steps": rows,
    });
    let mut human = table.to_text();
    if o.exhausted {
        human.push_str(&format!("\nnote: expansion ended after {} digits", o.cf.len()));
    }
    Ok(Output { json, human, table })
}

fn digit_arg(args: &[u64], i: usize, name: &str) -> Result<Digit> {
    args.get(i).copied().ok_or_else(|| invalid(format!("missing parameter {name}")))
}

fn arity(kind: &str, args: &[u64], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(invalid(format!("{kind} takes {n} parameter(s), got {}", args.len())));
    }
    Ok(())
}

pub fn bounds(kind: &str, args: &[u64]) -> Result<Output> {
    if kind == "hancl-nair" {
        arity(kind, args, 1)?;
        let c = hancl_nair_constant(args[0])?;
        let json = json!({
            "command": "bounds",
            "kind": kind,
            "params": args,
            "constant": dec_f64(c),
            "bound": dec_f64(1.0 / c),
        });
        let human = format!("hancl-nair constant at q = {}: {}\nbound 1/c: {}", args[0], dec_f64(c), dec_f64(1.0 / c));
        let mut table = Table::new(&["q", "constant", "bound"]);
        table.push(vec![args[0].to_string(), dec_f64(c), dec_f64(1.0 / c)]);
        return Ok(Output { json, human, table });
    }
    let report: BoundReport = match kind {
        "vahlen" => {
            arity(kind, args, 0)?;
            vahlen_bounds()
        }
        "borel" => {
            arity(kind, args, 0)?;
            borel_bounds()
        }
        "borel-improved" | "tong" => {
            arity(kind, args, 1)?;
            borel_improved_bounds(args[0])?
        }
        "hancl" => {
            arity(kind, args, 1)?;
            hancl_bounds(&BigInt::from(args[0]))?
        }
        "easy" | "difficult" => {
            arity(kind, args, 2)?;
            let (big_m, m) = (digit_arg(args, 0, "M")?, digit_arg(args, 1, "m")?);
            if kind == "easy" {
                easy_case_bounds(m, big_m)?
            } else {
                difficult_case_bounds(m, big_m)?
            }
        }
        "k-only" => {
            arity(kind, args, 1)?;
            k_only_bounds(args[0])?
        }
        other => return Err(invalid(format!("unknown bound kind {other:?}"))),
    };
    let mut json = serde_json::to_value(&report).expect("bound report serializes");
    let obj = json.as_object_mut().expect("object");
    obj.insert("min_decimal".into(), Value::String(dec(&report.min_bound)));
    obj.insert("max_decimal".into(), report.max_bound.as_ref().map(|b| Value::String(dec(b))).unwrap_or(Value::Null));
    let json = json!({ "command": "bounds", "kind": kind, "params": args, "report": json });
    let rel = |strict: bool, lt: bool| match (strict, lt) {
        (true, true) => "<",
        (false, true) => "<=",
        (true, false) => ">",
        (false, false) => ">=",
    };
    let mut human = vec![
        format!("case: {}", report.case_tag.as_str()),
        format!("min {} {} ({})", rel(report.min_strict, true), text(&report.min_bound), dec(&report.min_bound)),
    ];
    if let Some(b) = &report.max_bound {
        human.push(format!("max {} {} ({})", rel(report.max_strict, false), text(b), dec(b)));
    }
    if report.no_improvement {
        human.push("no improvement over the trivial bound".into());
    }
    let mut table = Table::new(&["case", "min_bound", "min_strict", "max_bound", "max_strict", "min_decimal", "max_decimal"]);
    table.push(vec![
        report.case_tag.as_str().into(),
        text(&report.min_bound),
        report.min_strict.to_string(),
        report.max_bound.as_ref().map(text).unwrap_or_default(),
        report.max_strict.to_string(),
        dec(&report.min_bound),
        report.max_bound.as_ref().map(dec).unwrap_or_default(),
    ]);
    Ok(Output { json, human: human.join("\n"), table })
}

/// Builds a region from a kind name and its digit parameters.
pub fn region_of(kind: &str, args: &[u64]) -> Result<Region> {
    match kind {
        "V" => {
            arity(kind, args, 1)?;
            region_psi_v(args[0])
        }
        "H" => {
            arity(kind, args, 1)?;
            region_psi_h(args[0])
        }
        "I" => {
            arity(kind, args, 2)?;
            region_i(args[0], args[1])
        }
        "V1k" => {
            arity(kind, args, 1)?;
            region_psi_v1k(args[0])
        }
        "I1" => {
            arity(kind, args, 2)?;
            region_i1(args[0], args[1])
        }
        "delta" | "full-delta" => {
            arity(kind, args, 0)?;
            Ok(Region::delta())
        }
        "empty" => {
            arity(kind, args, 0)?;
            Ok(Region::from_points(&[]))
        }
        other => Err(invalid(format!("unknown region kind {other:?}"))),
    }
}

pub fn region(kind: &str, args: &[u64]) -> Result<Output> {
    let r = region_of(kind, args)?;
    let mut table = Table::new(&["index", "alpha", "beta", "alpha_decimal", "beta_decimal"]);
    for (i, v) in r.vertices().iter().enumerate() {
        table.push(vec![i.to_string(), v.alpha.to_string(), v.beta.to_string(), dec_rat(&v.alpha), dec_rat(&v.beta)]);
    }
    let json = json!({
        "command": "region",
        "kind": kind,
        "params": args,
        "region": r.to_json(),
        "area": frac(&r.area()),
    });
    let verts: Vec<String> = r.vertices().iter().map(|v| format!("({}, {})", v.alpha, v.beta)).collect();
    let human = format!("{kind} {}: {} vertices\n{}", join(args), verts.len(), verts.join("\n"));
    Ok(Output { json, human, table })
}

pub fn measure(kind: &str, args: &[u64], tol: f64) -> Result<Output> {
    let r = region_of(kind, args)?;
    let m = mu_measure(&r, tol)?;
    let json = json!({
        "command": "measure",
        "kind": kind,
        "params": args,
        "tol": tol,
        "value": m.value,
        "error": m.error,
        "decimal": dec_f64(m.value),
    });
    let human = format!("mu = {} (error estimate {:.3e})", dec_f64(m.value), m.error);
    let mut table = Table::new(&["kind", "value", "error"]);
    table.push(vec![kind.into(), dec_f64(m.value), format!("{:e}", m.error)]);
    Ok(Output { json, human, table })
}

pub struct VerifyArgs {
    pub family: String,
    pub checks: String,
    pub max_q: u64,
    pub max_d: u64,
    pub max_coeff: u64,
    pub depth: usize,
    pub count: u64,
    pub max_digit: u64,
    pub length: usize,
    pub seed: u64,
    pub d_range: String,
    pub workers: usize,
    pub twin: bool,
    pub legendre_max_b: Option<u64>,
    pub finding_cap: usize,
}

pub fn verify(a: &VerifyArgs) -> Result<(Output, SummaryReport)> {
    let family = match a.family.as_str() {
        "rationals" => Family::Rationals { max_q: a.max_q },
        "surds" => Family::Surds { max_d: a.max_d, max_coeff: a.max_coeff, depth: a.depth },
        "streams" => Family::Streams { count: a.count, max_digit: a.max_digit, length: a.length, seed: a.seed },
        "prop31" => {
            let (d_lo, d_hi) = parse_range(&a.d_range)?;
            Family::Prop31 { d_lo, d_hi }
        }
        other => return Err(invalid(format!("unknown family {other:?}"))),
    };
    let checks = if matches!(family, Family::Prop31 { .. }) { Vec::new() } else { CheckId::parse_list(&a.checks)? };
    let mut cfg = SweepConfig::new(family, checks);
    cfg.workers = a.workers;
    cfg.twin_expansions = a.twin;
    cfg.legendre_max_b = a.legendre_max_b;
    cfg.finding_cap = a.finding_cap;
    let start = Instant::now();
    let mut rep = run_suite(&cfg)?;
    rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);

    let mut table =
        Table::new(&["check", "pass", "equality", "strict_equality", "both_exceed", "skipped", "violation"]);
    for (c, s) in &rep.checks {
        let n = &s.counts;
        table.push(vec![
            c.as_str().into(),
            n.pass.to_string(),
            n.equality.to_string(),
            n.strict_equality.to_string(),
            n.both_exceed.to_string(),
            n.skipped.to_string(),
            n.violation.to_string(),
        ]);
    }
    let mut human = vec![
        format!("inputs: {}, verdicts: {}, violations: {}, errors: {}", rep.inputs, rep.results, rep.violations, rep.errors.len() as u64 + rep.errors_omitted),
        table.to_text(),
    ];
    for (c, s) in &rep.checks {
        for f in s.findings.iter().filter(|f| f.verdict == Verdict::Violation) {
            human.push(format!("violation: {} at {} index {} ({})", c, f.input, f.index, format!("{:?}", f.side).to_lowercase()));
        }
    }
    human.extend(rep.errors.iter().map(|e| format!("error: {e}")));
    human.push(format!("{} in {} ms", if rep.passed { "PASSED" } else { "FAILED" }, rep.wall_time_ms.unwrap_or(0)));
    let json = serde_json::to_value(&rep).expect("report serializes");
    Ok((Output { json, human: human.join("\n"), table }, rep))
}
