use std::collections::HashMap;

use num_bigint::BigInt;

use super::{digit_from_bigint, Digit};
use crate::error::{Error, Result};
use crate::numeric::QuadSurd;

/// Eventually periodic digit pattern: `preperiod` leading digits followed by
/// a repeating block of `period` digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Period {
    pub preperiod: usize,
    pub period: usize,
    /// The first `preperiod + period` digits.
    pub digits: Vec<Digit>,
}

impl Period {
    /// `a_k` for any `k >= 1`.
    pub fn digit(&self, k: usize) -> Digit {
        assert!(k >= 1, "digits are indexed from 1");
        let i = k - 1;
        if i < self.preperiod {
            self.digits[i]
        } else {
            self.digits[self.preperiod + (i - self.preperiod) % self.period]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<Digit> {
        (1..=n).map(|k| self.digit(k)).collect()
    }
}

/// Guard against runaway inputs; real periods are far shorter.
const MAX_STEPS: usize = 1 << 20;

/// Detects the period of an irrational surd in `(0,1)` by exact repetition of
/// its Gauss-map states.
pub fn surd_period(x: &QuadSurd) -> Result<Period> {
    if x.is_rational() || x.is_negative() || *x >= QuadSurd::one() {
        return Err(Error::OutOfRange(format!("{x} is not an irrational surd in (0,1)")));
    }
    let mut seen: HashMap<(BigInt, BigInt, BigInt), usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut t = x.clone();
    for step in 0..MAX_STEPS {
        let key = (t.p().clone(), t.r().clone(), t.q().clone());
        if let Some(&first) = seen.get(&key) {
            return Ok(Period { preperiod: first, period: step - first, digits });
        }
        seen.insert(key, step);
        let inv = t.checked_recip()?;
        digits.push(digit_from_bigint(&inv.floor())?);
        t = inv.fract();
    }
    Err(Error::InvalidArgument(format!("no period found within {MAX_STEPS} steps")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::surd_digits;

    #[test]
    fn golden_is_purely_periodic() {
        let g = QuadSurd::new(-1, 1, 5, 2).unwrap();
        let p = surd_period(&g).unwrap();
        assert_eq!((p.preperiod, p.period), (0, 1));
        assert_eq!(p.prefix(6), vec![1; 6]);
    }

    #[test]
    fn sqrt2_minus_one() {
        let x = QuadSurd::new(-1, 1, 2, 1).unwrap();
        let p = surd_period(&x).unwrap();
        assert_eq!((p.preperiod, p.period), (0, 1));
        assert_eq!(p.digit(5), 2);
    }

    #[test]
    fn preperiodic_input() {
        // 1/√7 = [0; 2, 1, 1, 1, 4, …] with period (1,1,1,4)
        let x = QuadSurd::new(0, 1, 7, 7).unwrap();
        let p = surd_period(&x).unwrap();
        assert_eq!(p.preperiod, 1);
        assert_eq!(p.period, 4);
        assert_eq!(p.prefix(9), vec![2, 1, 1, 1, 4, 1, 1, 1, 4]);
    }

    #[test]
    fn replay_matches_direct_expansion() {
        for d in [2i64, 3, 5, 6, 7, 10, 13, 19, 21, 22, 29, 31, 43, 46, 94] {
            for q in 1..=9i64 {
                for p in -9..=9i64 {
                    let Ok(x) = QuadSurd::new(p, 1, d, q) else { continue };
                    if x.is_negative() || x >= QuadSurd::one() {
                        continue;
                    }
                    let per = surd_period(&x).unwrap();
                    let n = per.preperiod + 3 * per.period + 5;
                    assert_eq!(per.prefix(n), surd_digits(&x, n).unwrap(), "x = {x}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_surds() {
        assert!(surd_period(&QuadSurd::from_int(0)).is_err());
        assert!(surd_period(&QuadSurd::new(1, 1, 5, 2).unwrap()).is_err());
    }
}
