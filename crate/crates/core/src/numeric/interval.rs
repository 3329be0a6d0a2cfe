use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{QuadSurd, Rational};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatInterval {
    #[serde(with = "super::serde_frac")]
    lo: Rational,
    #[serde(with = "super::serde_frac")]
    hi: Rational,
}

impl RatInterval {
    /// Interval spanning both endpoints in whichever order they come.
    pub fn spanning(a: Rational, b: Rational) -> Self {
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &QuadSurd) -> bool {
        QuadSurd::from_rational(&self.lo) <= *x && *x <= QuadSurd::from_rational(&self.hi)
    }

    /// Where the whole interval sits relative to `x`; `None` when `x` is
    /// inside it and the comparison cannot be decided.
    pub fn cmp_exact(&self, x: &QuadSurd) -> Option<Ordering> {
        if QuadSurd::from_rational(&self.hi) < *x {
            Some(Ordering::Less)
        } else if QuadSurd::from_rational(&self.lo) > *x {
            Some(Ordering::Greater)
        } else if self.lo == self.hi {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        RatInterval {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).min(&other.hi).clone(),
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        RatInterval {
            lo: (&self.lo).max(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }
}

/// Rational enclosure of a surd with width at most `width`.
pub fn surd_to_interval(x: &QuadSurd, width: &Rational) -> RatInterval {
    assert!(width.is_positive(), "enclosure width must be positive");
    if let Some(v) = x.to_rational() {
        return RatInterval::point(v);
    }
    // value = (p + r√d)/q; scale by n so that 1/(q·n) <= width.
    let q = x.q();
    let n = {
        let need = (Rational::one() / (width * Rational::from_integer(q.clone()))).ceil();
        need.to_integer().max(BigInt::one())
    };
    let scaled = x.r() * x.r() * x.d() * &n * &n;
    let root = scaled.sqrt();
    // |r|·√d·n lies in (root, root + 1)
    let (a, b) = if x.r().is_negative() {
        (-(&root + 1u32), -root)
    } else {
        (root.clone(), root + 1u32)
    };
    let base = x.p() * &n;
    let den = q * &n;
    let lo = Rational::new(&base + a, den.clone());
    let hi = Rational::new(&base + b, den);
    RatInterval { lo, hi }
}
