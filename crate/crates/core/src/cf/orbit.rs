use num_traits::Zero;

use super::{convergents, gauss_map, rcf_expand_rational, CfData, Digit, RealSpec, TVPoint};
use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// One orbit point `𝒯^k(x, 0) = (t_k, v_k)`.
#[derive(Clone, Debug)]
pub struct OrbitStep {
    pub k: usize,
    /// `a_k`; absent at `k = 0`.
    pub digit: Option<Digit>,
    /// `T^k(x)` in the kind of the input.
    pub t: RealSpec,
    /// `q_{k-1}/q_k`.
    pub v: Rational,
}

impl OrbitStep {
    /// The exact point; streams have none.
    pub fn point(&self) -> Result<TVPoint> {
        let t = self.t.exact().ok_or(Error::InexactStream)?;
        Ok(TVPoint { t, v: QuadSurd::from_rational(&self.v) })
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub steps: Vec<OrbitStep>,
    pub cf: CfData,
    /// Set when a finite expansion ran out before the requested length.
    pub exhausted: bool,
}

/// `(t_k, v_k)` for `k = 0..=n`, truncated at the end of a finite expansion.
pub fn orbit(x: &RealSpec, n: usize) -> Result<Orbit> {
    let (cf, exhausted) = match x {
        RealSpec::Rational(v) => {
            let cf = rcf_expand_rational(v)?;
            let short = n > cf.len();
            (cf.truncated(n), short)
        }
        _ => (convergents(x, n)?, false),
    };
    let mut steps = Vec::with_capacity(cf.len() + 1);
    let mut t = x.clone();
    for k in 0..=cf.len() {
        if k > 0 {
            t = gauss_map(&t);
        }
        let v = if k == 0 { Rational::zero() } else { cf.past(k) };
        steps.push(OrbitStep { k, digit: cf.digit(k), t: t.clone(), v });
    }
    Ok(Orbit { steps, cf, exhausted })
}
