//! Approximation coefficients `Θ_n`, the map `Ψ` onto the triangle `Δ`, its
//! inverse, the conjugated map `F`, the Jurkat–Peyerimhoff recurrences and
//! the invariant density `μ`.

mod measure;

pub use measure::{gauss_kronrod, mu_density, mu_density_f64, mu_measure, MeasureEstimate};

use num_bigint::BigInt;
use num_traits::One;

use crate::cf::{convergents, natural_extension_step, Digit, RealSpec, TVPoint};
use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// `(Θ_{n-1}, Θ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPair {
    pub prev: QuadSurd,
    pub curr: QuadSurd,
}

/// A point `(α, β)` of the closed triangle `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPoint {
    pub alpha: QuadSurd,
    pub beta: QuadSurd,
}

impl DeltaPoint {
    pub fn new(alpha: QuadSurd, beta: QuadSurd) -> Result<Self> {
        let p = DeltaPoint { alpha, beta };
        if !p.in_delta() {
            return Err(Error::OutsideDelta(format!("({}, {})", p.alpha, p.beta)));
        }
        Ok(p)
    }

    pub fn from_rationals(alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(QuadSurd::from_rational(&alpha), QuadSurd::from_rational(&beta))
    }

    pub fn in_delta(&self) -> bool {
        !self.alpha.is_negative()
            && !self.beta.is_negative()
            && self.alpha.checked_add(&self.beta).map(|s| s <= QuadSurd::one()).unwrap_or(false)
    }

    /// `1 − 4αβ`.
    pub fn radicand(&self) -> Result<QuadSurd> {
        let four_ab = QuadSurd::from_int(4).checked_mul(&self.alpha.checked_mul(&self.beta)?)?;
        QuadSurd::one().checked_sub(&four_ab)
    }
}

/// `Θ_n(x) = q_n² |x − p_n/q_n|`; `Θ_0 = x`.
pub fn theta_direct(x: &RealSpec, n: usize) -> Result<QuadSurd> {
    let value = x.exact().ok_or(Error::InexactStream)?;
    let cf = convergents(x, n)?;
    let k = n as isize;
    let (p, q) = (cf.p(k), cf.q(k));
    let diff = value.checked_sub(&QuadSurd::from_rational(&Rational::new(p.clone(), q.clone())))?;
    Ok(QuadSurd::from_int(q * q).checked_mul(&diff.abs())?)
}

/// `(v/(1+tv), t/(1+tv))`.
pub fn theta_from_tv(p: &TVPoint) -> Result<ThetaPair> {
    let d = psi(&p.t, &p.v)?;
    Ok(ThetaPair { prev: d.alpha, curr: d.beta })
}

/// `Ψ(t, v) = (v/(1+tv), t/(1+tv))`.
pub fn psi(t: &QuadSurd, v: &QuadSurd) -> Result<DeltaPoint> {
    let den = QuadSurd::one().checked_add(&t.checked_mul(v)?)?;
    Ok(DeltaPoint { alpha: v.checked_div(&den)?, beta: t.checked_div(&den)? })
}

/// `Ψ(t, v)` for rational coordinates, staying in `ℚ`.
pub fn psi_rational(t: &Rational, v: &Rational) -> (Rational, Rational) {
    let den = Rational::one() + t * v;
    (v / &den, t / &den)
}

/// `Ψ⁻¹(α, β) = (β s, α s)` with `s = 2/(1 + √(1 − 4αβ))`, the root of
/// `αβ s² − s + 1 = 0` that tends to 1 as `αβ → 0`.
pub fn psi_inverse(p: &DeltaPoint) -> Result<(QuadSurd, QuadSurd)> {
    let rad = p.radicand()?;
    if rad.is_negative() {
        return Err(Error::OutsidePsiImage(rad.to_string()));
    }
    let root = rad.sqrt()?;
    let s = QuadSurd::from_int(2).checked_div(&QuadSurd::one().checked_add(&root)?)?;
    Ok((p.beta.checked_mul(&s)?, p.alpha.checked_mul(&s)?))
}

fn realizable_root(a: &QuadSurd, b: &QuadSurd) -> Result<QuadSurd> {
    let four_ab = QuadSurd::from_int(4).checked_mul(&a.checked_mul(b)?)?;
    let rad = QuadSurd::one().checked_sub(&four_ab)?;
    if rad.is_negative() {
        return Err(Error::NotRealizable(rad.to_string()));
    }
    rad.sqrt()
}

fn jp_step(outer: &QuadSurd, middle: &QuadSurd, a: Digit) -> Result<QuadSurd> {
    if a == 0 {
        return Err(Error::InvalidDigit(a.to_string()));
    }
    let root = realizable_root(outer, middle)?;
    let a = QuadSurd::from_int(BigInt::from(a));
    let a2 = a.checked_mul(&a)?;
    outer.checked_add(&a.checked_mul(&root)?)?.checked_sub(&a2.checked_mul(middle)?)
}

/// `Θ_{n+1} = Θ_{n−1} + a√(1 − 4Θ_{n−1}Θ_n) − a²Θ_n` with `a = a_{n+1}`.
pub fn jp_forward(theta_prev: &QuadSurd, theta_curr: &QuadSurd, a: Digit) -> Result<QuadSurd> {
    jp_step(theta_prev, theta_curr, a)
}

/// `Θ_{n−1} = Θ_{n+1} + a√(1 − 4Θ_nΘ_{n+1}) − a²Θ_n` with `a = a_{n+1}`.
pub fn jp_backward(theta_curr: &QuadSurd, theta_next: &QuadSurd, a: Digit) -> Result<QuadSurd> {
    jp_step(theta_next, theta_curr, a)
}

/// `F = Ψ ∘ 𝒯 ∘ Ψ⁻¹`.
pub fn f_map(p: &DeltaPoint) -> Result<DeltaPoint> {
    let (t, v) = psi_inverse(p)?;
    // Ψ⁻¹ may land on the closed edge t = 1, so the step runs unvalidated.
    let next = natural_extension_step(&TVPoint { t, v })?;
    psi(&next.t, &next.v)
}

/// `1/√5`.
pub fn inv_sqrt5() -> QuadSurd {
    QuadSurd::new(0, 1, 5, 5).expect("valid surd")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::orbit;
    use crate::numeric::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(x: Rational) -> QuadSurd {
        QuadSurd::from_rational(&x)
    }

    fn golden() -> QuadSurd {
        QuadSurd::new(-1, 1, 5, 2).unwrap()
    }

    #[test]
    fn theta_direct_x100() {
        let x = RealSpec::rational(rat(201, 20201)).unwrap();
        assert_eq!(theta_direct(&x, 1).unwrap(), q(rat(10100, 20201)));
        assert_eq!(theta_direct(&x, 2).unwrap(), q(rat(10100, 20201)));
        assert_eq!(theta_direct(&x, 3).unwrap(), q(rat(201, 20201)));
        assert!(theta_direct(&x, 4).unwrap().is_zero());
        assert_eq!(theta_direct(&x, 5), Err(Error::ExpansionExhausted(4)));
        assert_eq!(theta_direct(&x, 0).unwrap(), q(rat(201, 20201)));
    }

    #[test]
    fn theta_from_tv_examples() {
        let p = TVPoint::from_rationals(rat(100, 101), rat(100, 101)).unwrap();
        let pair = theta_from_tv(&p).unwrap();
        assert_eq!(pair.prev, q(rat(10100, 20201)));
        assert_eq!(pair.curr, q(rat(10100, 20201)));
        let p = TVPoint::from_rationals(rat(0, 1), rat(3, 7)).unwrap();
        let pair = theta_from_tv(&p).unwrap();
        assert_eq!((pair.prev, pair.curr), (q(rat(3, 7)), QuadSurd::zero()));
        let gg = TVPoint::new(golden(), golden()).unwrap();
        let pair = theta_from_tv(&gg).unwrap();
        assert_eq!(pair.prev, inv_sqrt5());
        assert_eq!(pair.curr, inv_sqrt5());
        assert_eq!(inv_sqrt5().to_string(), "√5/5");
    }

    #[test]
    fn psi_examples() {
        let d = psi(&q(rat(1, 1)), &q(rat(1, 1))).unwrap();
        assert_eq!((d.alpha, d.beta), (q(rat(1, 2)), q(rat(1, 2))));
        let d = psi(&q(rat(1, 2)), &QuadSurd::zero()).unwrap();
        assert_eq!((d.alpha, d.beta), (QuadSurd::zero(), q(rat(1, 2))));
        let d = psi(&q(rat(1, 3)), &q(rat(1, 1))).unwrap();
        assert_eq!((d.alpha, d.beta), (q(rat(3, 4)), q(rat(1, 4))));
        assert_eq!(psi_rational(&rat(1, 3), &rat(1, 1)), (rat(3, 4), rat(1, 4)));
    }

    #[test]
    fn psi_inverse_examples() {
        let p = DeltaPoint::from_rationals(rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(psi_inverse(&p).unwrap(), (q(rat(1, 1)), q(rat(1, 1))));
        let p = DeltaPoint::from_rationals(rat(0, 1), rat(1, 2)).unwrap();
        assert_eq!(psi_inverse(&p).unwrap(), (q(rat(1, 2)), QuadSurd::zero()));
        let p = DeltaPoint::from_rationals(rat(2, 5), rat(2, 5)).unwrap();
        assert_eq!(psi_inverse(&p).unwrap(), (q(rat(1, 2)), q(rat(1, 2))));
        // 1 − 4αβ < 0 needs a point outside Δ
        let out = DeltaPoint { alpha: q(rat(3, 4)), beta: q(rat(3, 4)) };
        assert!(matches!(psi_inverse(&out), Err(Error::OutsidePsiImage(_))));
        assert!(DeltaPoint::from_rationals(rat(3, 4), rat(3, 4)).is_err());
    }

    #[test]
    fn psi_inverse_irrational_branch() {
        // (1/3, 1/3) has 1 − 4αβ = 5/9, so (t, v) lands in ℚ(√5).
        let p = DeltaPoint::from_rationals(rat(1, 3), rat(1, 3)).unwrap();
        let (t, v) = psi_inverse(&p).unwrap();
        assert!(!t.is_rational());
        assert_eq!(t, v);
        let back = psi(&t, &v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn jp_examples() {
        let s = inv_sqrt5();
        assert_eq!(jp_forward(&s, &s, 1).unwrap(), s);
        assert_eq!(jp_backward(&s, &s, 1).unwrap(), s);
        let t1 = q(rat(10100, 20201));
        let t3 = q(rat(201, 20201));
        assert_eq!(jp_forward(&t1, &t1, 1).unwrap(), t3);
        assert_eq!(jp_backward(&t1, &t3, 1).unwrap(), t1);
        let v = q(rat(2, 7));
        assert_eq!(jp_forward(&v, &QuadSurd::zero(), 3).unwrap(), q(rat(23, 7)));
        assert_eq!(jp_backward(&QuadSurd::zero(), &v, 3).unwrap(), q(rat(23, 7)));
        let bad = q(rat(3, 4));
        assert!(matches!(jp_forward(&bad, &bad, 1), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn f_map_examples() {
        let s = inv_sqrt5();
        let fixed = DeltaPoint { alpha: s.clone(), beta: s.clone() };
        assert_eq!(f_map(&fixed).unwrap(), fixed);
        let t1 = q(rat(10100, 20201));
        let img = f_map(&DeltaPoint { alpha: t1.clone(), beta: t1.clone() }).unwrap();
        assert_eq!(img.alpha, t1);
        assert_eq!(img.beta, q(rat(201, 20201)));
        let img = f_map(&DeltaPoint::from_rationals(rat(0, 1), rat(1, 2)).unwrap()).unwrap();
        assert_eq!(img.alpha, q(rat(1, 2)));
    }

    #[test]
    fn orbit_thetas_agree() {
        for den in 2..=60i64 {
            for num in 1..den {
                if num_integer::gcd(num, den) != 1 {
                    continue;
                }
                let x = RealSpec::rational(rat(num, den)).unwrap();
                let o = orbit(&x, 100).unwrap();
                for step in &o.steps[1..] {
                    let pair = theta_from_tv(&step.point().unwrap()).unwrap();
                    assert_eq!(pair.prev, theta_direct(&x, step.k - 1).unwrap());
                    assert_eq!(pair.curr, theta_direct(&x, step.k).unwrap());
                }
            }
        }
        let x = RealSpec::surd(QuadSurd::new(-4, 1, 19, 3).unwrap()).unwrap();
        let o = orbit(&x, 25).unwrap();
        for step in &o.steps[1..] {
            let pair = theta_from_tv(&step.point().unwrap()).unwrap();
            assert_eq!(pair.curr, theta_direct(&x, step.k).unwrap());
            let sum = pair.prev.checked_add(&pair.curr).unwrap();
            assert!(sum < QuadSurd::one());
        }
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let den: i64 = rng.gen_range(2..500);
            let t = rat(rng.gen_range(0..den), den);
            let v = rat(rng.gen_range(0..=den), den);
            let (tq, vq) = (q(t.clone()), q(v.clone()));
            let d = psi(&tq, &vq).unwrap();
            assert!(d.in_delta());
            assert_eq!(psi_inverse(&d).unwrap(), (tq.clone(), vq.clone()));
            let step = natural_extension_step(&TVPoint { t: tq, v: vq }).unwrap();
            assert_eq!(f_map(&d).unwrap(), psi(&step.t, &step.v).unwrap());
            let a: i64 = rng.gen_range(1..400);
            let b: i64 = rng.gen_range(0..a.min(400 - a).max(1));
            let p = DeltaPoint::from_rationals(rat(a, 800), rat(b, 800)).unwrap();
            let (t, v) = psi_inverse(&p).unwrap();
            assert_eq!(psi(&t, &v).unwrap(), p);
        }
    }
}
