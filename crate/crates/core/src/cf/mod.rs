//! Regular continued fractions: expansion, convergents, the Gauss map `T`,
//! the natural extension `𝒯`, and the orbit coordinates `(t_n, v_n)`.

mod expansion;
mod orbit;
mod period;
mod stream;

pub use expansion::{convergents, past_v, rcf_expand_rational, surd_digits, CfData};
pub use orbit::{orbit, Orbit, OrbitStep};
pub use period::{surd_period, Period};
pub use stream::DigitStream;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{parse_rational, QuadSurd, Rational};

/// A partial quotient.
pub type Digit = u64;

pub(crate) fn digit_from_bigint(n: &BigInt) -> Result<Digit> {
    n.to_u64().ok_or(Error::DigitOverflow)
}

/// An input `x ∈ [0, 1)` in one of the three supported forms.
#[derive(Clone, Debug)]
pub enum RealSpec {
    Rational(Rational),
    Surd(QuadSurd),
    Stream(DigitStream),
}

impl RealSpec {
    pub fn rational(x: Rational) -> Result<Self> {
        if x.is_negative() || x >= Rational::one() {
            return Err(Error::OutOfRange(format!("{x} is not in [0,1)")));
        }
        Ok(RealSpec::Rational(x))
    }

    /// Accepts an irrational surd in `(0,1)`; rational-valued surds become
    /// the rational kind.
    pub fn surd(x: QuadSurd) -> Result<Self> {
        if let Some(v) = x.to_rational() {
            return Self::rational(v);
        }
        if x.is_negative() || x >= QuadSurd::one() {
            return Err(Error::OutOfRange(format!("{x} is not in (0,1)")));
        }
        Ok(RealSpec::Surd(x))
    }

    pub fn stream(s: DigitStream) -> Self {
        RealSpec::Stream(s)
    }

    /// `[0; a_1, …, a_n]` as a rational.
    pub fn from_digits(digits: &[Digit]) -> Result<Self> {
        let cf = CfData::from_digits(digits, true)?;
        Self::rational(cf.convergent(cf.len()))
    }

    /// Parses `"p/q"`, `"surd:(p,r,d,q)"` or `"digits:a1,a2,…"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("surd:") {
            return Self::surd(QuadSurd::parse_tuple(rest)?);
        }
        if let Some(rest) = text.strip_prefix("digits:") {
            let digits: Vec<Digit> = rest
                .split(',')
                .map(|t| t.trim())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<Digit>().map_err(|_| Error::Parse(format!("bad digit {t:?}"))))
                .collect::<Result<_>>()?;
            if digits.is_empty() {
                return Err(Error::EmptyDigits);
            }
            return Self::from_digits(&digits);
        }
        Self::rational(parse_rational(text)?)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RealSpec::Rational(_) => "rational",
            RealSpec::Surd(_) => "surd",
            RealSpec::Stream(_) => "stream",
        }
    }

    /// The exact value, unavailable for streams.
    pub fn exact(&self) -> Option<QuadSurd> {
        match self {
            RealSpec::Rational(x) => Some(QuadSurd::from_rational(x)),
            RealSpec::Surd(x) => Some(x.clone()),
            RealSpec::Stream(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RealSpec::Rational(x) if x.is_zero())
    }
}

impl fmt::Display for RealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealSpec::Rational(x) => write!(f, "{x}"),
            RealSpec::Surd(x) => write!(f, "surd:({},{},{},{})", x.p(), x.r(), x.d(), x.q()),
            RealSpec::Stream(s) => write!(f, "{}", s.label()),
        }
    }
}

/// `T(x) = 1/x − ⌊1/x⌋`, with `T(0) = 0`.
pub fn gauss_map(x: &RealSpec) -> RealSpec {
    match x {
        RealSpec::Rational(v) => {
            if v.is_zero() {
                RealSpec::Rational(Rational::zero())
            } else {
                RealSpec::Rational(v.recip().fract())
            }
        }
        RealSpec::Surd(v) => RealSpec::Surd(gauss_surd(v)),
        RealSpec::Stream(s) => RealSpec::Stream(s.shifted(1)),
    }
}

/// Gauss map on an irrational surd in `(0,1)`.
pub(crate) fn gauss_surd(v: &QuadSurd) -> QuadSurd {
    v.checked_recip().expect("nonzero surd").fract()
}

/// A point `(t, v)` of `Ω = [0,1) × [0,1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TVPoint {
    pub t: QuadSurd,
    pub v: QuadSurd,
}

impl TVPoint {
    pub fn new(t: QuadSurd, v: QuadSurd) -> Result<Self> {
        if t.is_negative() || t >= QuadSurd::one() {
            return Err(Error::OutOfRange(format!("t = {t} is not in [0,1)")));
        }
        if v.is_negative() || v > QuadSurd::one() {
            return Err(Error::OutOfRange(format!("v = {v} is not in [0,1]")));
        }
        Ok(TVPoint { t, v })
    }

    pub fn from_rationals(t: Rational, v: Rational) -> Result<Self> {
        Self::new(QuadSurd::from_rational(&t), QuadSurd::from_rational(&v))
    }
}

/// `𝒯(t, v) = (T(t), 1/(⌊1/t⌋ + v))`, fixing the line `t = 0`.
pub fn natural_extension_step(p: &TVPoint) -> Result<TVPoint> {
    if p.t.is_zero() {
        return Ok(p.clone());
    }
    let inv = p.t.checked_recip()?;
    let a = QuadSurd::from_int(inv.floor());
    let t = inv.checked_sub(&a)?;
    let v = a.checked_add(&p.v)?.checked_recip()?;
    Ok(TVPoint { t, v })
}
