use std::f64::consts::LN_2;

use super::DeltaPoint;
use crate::bounds::Region;
use crate::error::{Error, Result};

/// `(1/log 2)·(1 − 4αβ)^{−1/2}`.
pub fn mu_density(p: &DeltaPoint) -> Result<f64> {
    let rad = p.radicand()?;
    if !rad.is_positive() {
        return Err(Error::DensitySingularity(rad.to_string()));
    }
    Ok(1.0 / (LN_2 * rad.to_f64().sqrt()))
}

/// Floating-point form of [`mu_density`] for integration.
pub fn mu_density_f64(alpha: f64, beta: f64) -> f64 {
    1.0 / (LN_2 * (1.0 - 4.0 * alpha * beta).sqrt())
}

/// Numeric integral with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureEstimate {
    pub value: f64,
    pub error: f64,
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        kronrod += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

const MAX_DEPTH: u32 = 48;

fn adapt(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> (f64, f64) {
    let (v, e) = gk15(f, a, b);
    if e <= tol || depth >= MAX_DEPTH || b - a <= f64::EPSILON * a.abs().max(1.0) {
        return (v, e);
    }
    let m = 0.5 * (a + b);
    let (v1, e1) = adapt(f, a, m, 0.5 * tol, depth + 1);
    let (v2, e2) = adapt(f, m, b, 0.5 * tol, depth + 1);
    (v1 + v2, e1 + e2)
}

/// Adaptive Gauss–Kronrod (7/15) integration of `f` over `[a, b]`.
pub fn gauss_kronrod(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    if b <= a {
        return (0.0, 0.0);
    }
    adapt(&f, a, b, tol, 0)
}

/// `∫_l^u dβ/√(1 − 4αβ)` in a cancellation-free form.
fn inner(alpha: f64, l: f64, u: f64) -> f64 {
    if u <= l {
        return 0.0;
    }
    let rl = (1.0 - 4.0 * alpha * l).max(0.0).sqrt();
    let ru = (1.0 - 4.0 * alpha * u).max(0.0).sqrt();
    2.0 * (u - l) / (rl + ru)
}

/// Vertical extent of a convex polygon at abscissa `x`.
fn slice(vertices: &[(f64, f64)], x: f64) -> Option<(f64, f64)> {
    let n = vertices.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let (x0, y0) = vertices[i];
        let (x1, y1) = vertices[(i + 1) % n];
        let (xa, xb) = if x0 <= x1 { (x0, x1) } else { (x1, x0) };
        if x < xa || x > xb || xa == xb {
            continue;
        }
        let y = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        lo = lo.min(y);
        hi = hi.max(y);
    }
    (lo <= hi).then_some((lo, hi))
}

/// `μ(region)`: the β-integral is taken in closed form and the α-integral
/// adaptively, split at every vertex abscissa and at `α = 1/2`.
pub fn mu_measure(region: &Region, tol: f64) -> Result<MeasureEstimate> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if !region.within_delta() {
        return Err(Error::OutsideDelta("region leaves the closed triangle".into()));
    }
    let vertices = region.vertices_f64();
    if vertices.len() < 3 || region.is_degenerate() {
        return Ok(MeasureEstimate { value: 0.0, error: 0.0 });
    }
    let mut cuts: Vec<f64> = vertices.iter().map(|v| v.0).collect();
    cuts.push(0.5);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let (amin, amax) = (cuts[0], *cuts.last().unwrap());
    cuts.retain(|&c| c >= amin && c <= amax);
    let pieces = cuts.len() - 1;
    let share = tol * LN_2 / pieces.max(1) as f64;
    let mut value = 0.0;
    let mut error = 0.0;
    for w in cuts.windows(2) {
        let f = |a: f64| slice(&vertices, a).map(|(l, u)| inner(a, l, u)).unwrap_or(0.0);
        // aim well below the caller's tolerance so the estimate is conservative
        let (v, e) = gauss_kronrod(f, w[0], w[1], 1e-3 * share);
        value += v;
        error += e;
    }
    Ok(MeasureEstimate { value: value / LN_2, error: error / LN_2 })
}
