use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::Value;
use crate::cf::{natural_extension_step, rcf_expand_rational, surd_digits, CfData, Digit, RealSpec, TVPoint};
use crate::error::{Error, Result};
use crate::numeric::{RatInterval, QuadSurd, Rational};
use crate::theta::psi;

/// Largest number of digits consumed beyond an index by stream enclosures.
pub(crate) const MAX_EXTRA: usize = 200;

/// How a subject's values are known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubjectKind {
    /// Finite expansion; `Θ` exact rationals.
    Rational,
    /// Quadratic irrational; `Θ` exact surds.
    Surd,
    /// Digit stream; `Θ` known through rational enclosures.
    Stream,
    /// A bi-infinite 𝒯-orbit started from an exact point `(t_0, v_0)`.
    Point,
}

/// Everything the checks read about one input: digits, `Θ_k`, `q_k`.
///
/// Digits are indexed as in the expansion, `a_1, a_2, …`; point subjects
/// also carry past digits `a_0, a_{−1}, …` read from `v_0`.
pub struct Subject {
    pub descriptor: String,
    pub ordinal: u64,
    pub kind: SubjectKind,
    future: Vec<Digit>,
    past: Vec<Digit>,
    // thetas[k + 1] = Θ_k for exact kinds
    thetas: Vec<Option<QuadSurd>>,
    cf: Option<CfData>,
    exact: Option<QuadSurd>,
    max_n: usize,
    max_theta: usize,
    enclosures: RefCell<HashMap<(usize, usize), RatInterval>>,
}

impl Subject {
    /// Subject for `x`, with indices `n ≤ depth` (all indices of a finite
    /// expansion when `depth` exceeds its length).
    pub fn from_spec(x: &RealSpec, depth: usize) -> Result<Self> {
        match x {
            RealSpec::Rational(r) => Self::from_expansion(r.clone(), rcf_expand_rational(r)?, depth),
            RealSpec::Surd(s) => {
                let cf = CfData::from_digits(&surd_digits(s, depth + 2)?, false)?;
                let mut thetas = vec![None];
                for k in 0..=depth + 1 {
                    thetas.push(Some(theta_from_table(s, &cf, k)?));
                }
                Ok(Subject {
                    descriptor: x.to_string(),
                    ordinal: 0,
                    kind: SubjectKind::Surd,
                    future: cf.digits().to_vec(),
                    past: Vec::new(),
                    thetas,
                    cf: Some(cf),
                    exact: Some(s.clone()),
                    max_n: depth,
                    max_theta: depth + 1,
                    enclosures: RefCell::new(HashMap::new()),
                })
            }
            RealSpec::Stream(st) => {
                let cf = CfData::from_digits(&st.prefix(depth + 2 + MAX_EXTRA), false)?;
                Ok(Subject {
                    descriptor: x.to_string(),
                    ordinal: 0,
                    kind: SubjectKind::Stream,
                    future: cf.digits().to_vec(),
                    past: Vec::new(),
                    thetas: Vec::new(),
                    cf: Some(cf),
                    exact: None,
                    max_n: depth,
                    max_theta: depth + 1,
                    enclosures: RefCell::new(HashMap::new()),
                })
            }
        }
    }

    /// Rational `x` read through a given finite expansion (canonical or
    /// twin).
    pub fn from_expansion(x: Rational, cf: CfData, depth: usize) -> Result<Self> {
        if cf.convergent(cf.len()) != x {
            return Err(Error::InvalidArgument(format!("expansion does not evaluate to {x}")));
        }
        let len = cf.len();
        let exact = QuadSurd::from_rational(&x);
        let mut thetas = vec![None];
        for k in 0..=len {
            let (p, q) = (cf.p(k as isize), cf.q(k as isize));
            let diff = (&x - Rational::new(p.clone(), q.clone())).abs();
            thetas.push(Some(QuadSurd::from_rational(&(diff * Rational::from_integer(q * q)))));
        }
        Ok(Subject {
            descriptor: x.to_string(),
            ordinal: 0,
            kind: SubjectKind::Rational,
            future: cf.digits().to_vec(),
            past: Vec::new(),
            thetas,
            cf: Some(cf),
            exact: Some(exact),
            max_n: depth.min(len),
            max_theta: len,
            enclosures: RefCell::new(HashMap::new()),
        })
    }

    /// The orbit `P_k = 𝒯^k(P_0)` with `(Θ_{k−1}, Θ_k) = Ψ(P_k)`, and digits
    /// `a_{k+1} = ⌊1/t_k⌋`, `a_k = ⌊1/v_k⌋` for the past.
    pub fn from_point(start: &TVPoint, depth: usize) -> Result<Self> {
        let mut p = TVPoint::new(start.t.clone(), start.v.clone())?;
        let mut future = Vec::new();
        let first = psi(&p.t, &p.v)?;
        let mut thetas = vec![Some(first.alpha), Some(first.beta)];
        for _ in 0..=depth {
            if p.t.is_zero() {
                break;
            }
            future.push(crate::cf::digit_from_bigint(&p.t.checked_recip()?.floor())?);
            p = natural_extension_step(&p)?;
            thetas.push(Some(psi(&p.t, &p.v)?.beta));
        }
        let mut past = Vec::new();
        let mut v = start.v.clone();
        while past.len() < 4 && !v.is_zero() {
            let inv = v.checked_recip()?;
            let a = inv.floor();
            past.push(crate::cf::digit_from_bigint(&a)?);
            v = inv.checked_sub(&QuadSurd::from_int(a))?;
        }
        let max_theta = thetas.len() - 2;
        Ok(Subject {
            descriptor: format!("point:({},{})", start.t, start.v),
            ordinal: 0,
            kind: SubjectKind::Point,
            future,
            past,
            thetas,
            cf: None,
            exact: None,
            max_n: depth.min(max_theta),
            max_theta,
            enclosures: RefCell::new(HashMap::new()),
        })
    }

    pub fn with_label(mut self, descriptor: impl Into<String>, ordinal: u64) -> Self {
        self.descriptor = descriptor.into();
        self.ordinal = ordinal;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.kind != SubjectKind::Stream
    }

    /// Checks run at `n = 1..=max_n`.
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `a_k`, or `None` where the digit does not exist.
    pub fn digit(&self, k: isize) -> Option<Digit> {
        if k >= 1 {
            self.future.get(k as usize - 1).copied()
        } else {
            self.past.get((-k) as usize).copied()
        }
    }

    /// `Θ_k`, as an enclosure built from `extra` further digits for streams.
    pub fn theta(&self, k: isize, extra: usize) -> Option<Value> {
        if k < -1 || k > self.max_theta as isize {
            return None;
        }
        if self.kind != SubjectKind::Stream {
            return self.thetas.get((k + 1) as usize)?.clone().map(Value::Exact);
        }
        if k < 0 {
            return None;
        }
        let k = k as usize;
        let key = (k, extra);
        if let Some(iv) = self.enclosures.borrow().get(&key) {
            return Some(Value::Enclosure(iv.clone()));
        }
        let cf = self.cf.as_ref()?;
        let (lo, hi) = x_enclosure(cf, (k + extra.max(1)).min(cf.len()));
        let (p, q) = (cf.p(k as isize), cf.q(k as isize));
        let f = |e: &Rational| {
            let qe = e * Rational::from_integer(q.clone()) - Rational::from_integer(p.clone());
            qe.abs() * Rational::from_integer(q.clone())
        };
        let iv = RatInterval::spanning(f(&lo), f(&hi));
        self.enclosures.borrow_mut().insert(key, iv.clone());
        Some(Value::Enclosure(iv))
    }

    /// `q_k` where defined (not for point subjects).
    pub fn q(&self, k: usize) -> Option<&BigInt> {
        let cf = self.cf.as_ref()?;
        (k <= cf.len()).then(|| cf.q(k as isize))
    }

    /// The expansion backing the subject.
    pub fn cf(&self) -> Option<&CfData> {
        self.cf.as_ref()
    }

    /// Exact value of `x` where known.
    pub fn exact_value(&self) -> Option<&QuadSurd> {
        self.exact.as_ref()
    }

    /// Enclosure of `x` from every available digit.
    pub fn value_enclosure(&self) -> Option<RatInterval> {
        let cf = self.cf.as_ref()?;
        let (lo, hi) = x_enclosure(cf, cf.len());
        Some(RatInterval::spanning(lo, hi))
    }

    /// Length of the finite expansion.
    pub fn expansion_len(&self) -> Option<usize> {
        (self.kind == SubjectKind::Rational).then(|| self.future.len())
    }
}

/// `x` lies between `p_N/q_N` and `(p_N + p_{N−1})/(q_N + q_{N−1})`.
fn x_enclosure(cf: &CfData, n: usize) -> (Rational, Rational) {
    let k = n as isize;
    let a = Rational::new(cf.p(k).clone(), cf.q(k).clone());
    let b = Rational::new(cf.p(k) + cf.p(k - 1), cf.q(k) + cf.q(k - 1));
    (a, b)
}

/// `q_k·|q_k x − p_k|` with one normalization.
fn theta_from_table(x: &QuadSurd, cf: &CfData, k: usize) -> Result<QuadSurd> {
    let (pk, qk) = (cf.p(k as isize), cf.q(k as isize));
    let p = qk * (qk * x.p() - pk * x.q());
    let r = qk * qk * x.r();
    Ok(QuadSurd::with_radicand(p, r, x.d(), x.q().clone()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::DigitStream;
    use crate::numeric::rat;
    use crate::theta::{inv_sqrt5, theta_direct};

    fn golden() -> QuadSurd {
        QuadSurd::new(-1, 1, 5, 2).unwrap()
    }

    #[test]
    fn rational_subject_matches_direct_thetas() {
        let x = RealSpec::rational(rat(201, 20201)).unwrap();
        let s = Subject::from_spec(&x, 100).unwrap();
        assert_eq!(s.max_n(), 4);
        assert_eq!(s.digit(1), Some(100));
        assert_eq!(s.digit(5), None);
        for k in 0..=4 {
            assert_eq!(s.theta(k, 0), Some(Value::Exact(theta_direct(&x, k as usize).unwrap())));
        }
        assert_eq!(s.theta(5, 0), None);
        assert_eq!(s.theta(4, 0), Some(Value::Exact(QuadSurd::zero())));
    }

    #[test]
    fn surd_subject_matches_direct_thetas() {
        let x = RealSpec::surd(golden()).unwrap();
        let s = Subject::from_spec(&x, 12).unwrap();
        for k in 0..=13 {
            assert_eq!(s.theta(k, 0), Some(Value::Exact(theta_direct(&x, k as usize).unwrap())));
        }
    }

    #[test]
    fn stream_enclosures_contain_exact_values() {
        // a periodic stream equal to √2 − 1 = [0; 2, 2, …]
        let st = DigitStream::periodic(vec![], vec![2]);
        let s = Subject::from_spec(&RealSpec::stream(st), 10).unwrap();
        let exact = RealSpec::surd(QuadSurd::new(-1, 1, 2, 1).unwrap()).unwrap();
        for k in 0..=11isize {
            let th = theta_direct(&exact, k as usize).unwrap();
            let Some(Value::Enclosure(iv)) = s.theta(k, 10) else { panic!("stream enclosure") };
            assert!(iv.contains(&th), "k = {k}");
            let Some(Value::Enclosure(wide)) = s.theta(k, 40) else { panic!() };
            assert!(wide.width() < iv.width());
        }
    }

    #[test]
    fn golden_fixed_point_orbit() {
        let g = golden();
        let s = Subject::from_point(&TVPoint::new(g.clone(), g).unwrap(), 6).unwrap();
        for k in -1..=7 {
            assert_eq!(s.theta(k, 0), Some(Value::Exact(inv_sqrt5())));
        }
        for k in -3..=7 {
            assert_eq!(s.digit(k), Some(1), "a_{k}");
        }
        assert!(s.q(1).is_none());
    }

    #[test]
    fn twin_expansion_shares_leading_thetas() {
        let x = rat(3, 7);
        let cf = rcf_expand_rational(&x).unwrap();
        let twin = cf.twin().unwrap();
        let a = Subject::from_expansion(x.clone(), cf.clone(), 50).unwrap();
        let b = Subject::from_expansion(x, twin, 50).unwrap();
        let l = cf.len() as isize;
        for k in 0..l {
            assert_eq!(a.theta(k, 0), b.theta(k, 0));
        }
        assert_ne!(a.theta(l, 0), b.theta(l, 0));
        assert_eq!(b.theta(l + 1, 0), Some(Value::Exact(QuadSurd::zero())));
    }
}
