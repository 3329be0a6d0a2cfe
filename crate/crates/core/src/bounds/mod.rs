//! Closed-form bounds on consecutive approximation coefficients and the
//! exact polygons in `Δ` they are read off from.

mod region;

pub use region::{
    delta_1k_interval, i1_corners, i1_vertices, i_corners, i_vertices, psi_v1k_lines, psi_v_lines,
    region_i, region_i1, region_psi_h, region_psi_v, region_psi_v1k, CellInterval, Edge, Region, Vertex,
};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::cf::Digit;
use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// `H(q) = (2 + 2(q−1)/(q²(q+1)))⁻¹ = q²(q+1) / (2q²(q+1) + 2(q−1))`.
pub fn hancl_h(q: &BigInt) -> Result<Rational> {
    if *q < BigInt::from(1) {
        return Err(Error::InvalidArgument(format!("H(q) needs q >= 1, got {q}")));
    }
    let q2q1 = q * q * (q + 1u32);
    let den = &q2q1 * 2u32 + (q - 1u32) * 2u32;
    Ok(Rational::new(q2q1, den))
}

/// `√5 + (4 − 5√5 + √61)/(2q²)`; its reciprocal is the associated
/// Borel-type bound.
pub fn hancl_nair_constant(q: u64) -> Result<f64> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let s5 = 5f64.sqrt();
    let q = q as f64;
    Ok(s5 + (4.0 - 5.0 * s5 + 61f64.sqrt()) / (2.0 * q * q))
}

/// `1/√(a² + 4)`.
pub fn borel_improved_bound(a: Digit) -> Result<QuadSurd> {
    if a == 0 {
        return Err(Error::InvalidDigit(a.to_string()));
    }
    let a = BigInt::from(a);
    let n = &a * &a + 4u32;
    QuadSurd::sqrt_rational(&Rational::new(BigInt::from(1), n))
}

/// Which statement a [`BoundReport`] encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    EasyI,
    EasyIi,
    DifficultI,
    DifficultIi,
    KOnly,
    Vahlen,
    Borel,
    BorelImproved,
    Tong,
    Hancl,
    HanclNair,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::EasyI => "easy-i",
            CaseTag::EasyIi => "easy-ii",
            CaseTag::DifficultI => "difficult-i",
            CaseTag::DifficultIi => "difficult-ii",
            CaseTag::KOnly => "k-only",
            CaseTag::Vahlen => "vahlen",
            CaseTag::Borel => "borel",
            CaseTag::BorelImproved => "borel-improved",
            CaseTag::Tong => "tong",
            CaseTag::Hancl => "hancl",
            CaseTag::HanclNair => "hancl-nair",
        }
    }
}

/// A claimed upper bound on a minimum and, where the statement has one, a
/// lower bound on a maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub case_tag: CaseTag,
    #[serde(serialize_with = "ser_surd")]
    pub min_bound: QuadSurd,
    /// `min < bound` rather than `min <= bound`.
    pub min_strict: bool,
    #[serde(serialize_with = "ser_opt_surd")]
    pub max_bound: Option<QuadSurd>,
    /// `max > bound` rather than `max >= bound`.
    pub max_strict: bool,
    /// The statement gives nothing beyond the Vahlen bound.
    pub no_improvement: bool,
}

fn ser_surd<S: Serializer>(x: &QuadSurd, s: S) -> std::result::Result<S::Ok, S::Error> {
    x.serialize(s)
}

fn ser_opt_surd<S: Serializer>(x: &Option<QuadSurd>, s: S) -> std::result::Result<S::Ok, S::Error> {
    x.serialize(s)
}

fn r(n: u64, d: u64) -> QuadSurd {
    QuadSurd::from_rational(&Rational::new(n.into(), d.into()))
}

fn ordered(m: Digit, big_m: Digit) -> Result<()> {
    if m == 0 || m > big_m {
        return Err(Error::InvalidArgument(format!("need 1 <= m <= M, got m = {m}, M = {big_m}")));
    }
    Ok(())
}

/// Bounds when `m = min{a_n, a_{n+1}}`, `M = max{a_n, a_{n+1}}`.
pub fn easy_case_bounds(m: Digit, big_m: Digit) -> Result<BoundReport> {
    ordered(m, big_m)?;
    if m == big_m {
        let k = m + 1;
        Ok(BoundReport {
            case_tag: CaseTag::EasyI,
            min_bound: r(m, m * m + 1),
            min_strict: false,
            max_bound: Some(r(k, k * k + 1)),
            max_strict: false,
            no_improvement: m == 1,
        })
    } else {
        let den = (m + 1) * big_m + 1;
        Ok(BoundReport {
            case_tag: CaseTag::EasyIi,
            min_bound: r(m + 1, den),
            min_strict: false,
            max_bound: Some(r(big_m, den)),
            max_strict: false,
            no_improvement: false,
        })
    }
}

/// Bounds when `(a_n, a_{n+1}) = (1, 1)`, `m = min{a_{n−1}, a_{n+2}}`,
/// `M = max{a_{n−1}, a_{n+2}}`.
pub fn difficult_case_bounds(m: Digit, big_m: Digit) -> Result<BoundReport> {
    ordered(m, big_m)?;
    if m == big_m {
        let (a, b) = (m + 1, m + 2);
        Ok(BoundReport {
            case_tag: CaseTag::DifficultI,
            min_bound: r(a * b, a * a + b * b),
            min_strict: false,
            max_bound: Some(r(m * a, m * m + a * a)),
            max_strict: true,
            no_improvement: false,
        })
    } else {
        let den = (m + 1) * big_m + (m + 2) * (big_m + 1);
        Ok(BoundReport {
            case_tag: CaseTag::DifficultIi,
            min_bound: r((m + 1) * (big_m + 1), den),
            min_strict: true,
            max_bound: Some(r((m + 2) * big_m, den)),
            max_strict: true,
            no_improvement: false,
        })
    }
}

/// Bounds when `a_n = a_{n+1} = 1` and `a_{n+2} = k`.
pub fn k_only_bounds(k: Digit) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let (a, b) = (k + 1, k + 2);
    Ok(BoundReport {
        case_tag: CaseTag::KOnly,
        min_bound: r(a * b, a * a + b * b),
        min_strict: true,
        max_bound: Some(r(k * a, k * k + a * a)),
        max_strict: true,
        no_improvement: false,
    })
}

/// `min{Θ_{n−1}, Θ_n} < 1/2`.
pub fn vahlen_bounds() -> BoundReport {
    BoundReport {
        case_tag: CaseTag::Vahlen,
        min_bound: r(1, 2),
        min_strict: true,
        max_bound: None,
        max_strict: false,
        no_improvement: false,
    }
}

/// `min{Θ_{n−1}, Θ_n, Θ_{n+1}} < 1/√5`.
pub fn borel_bounds() -> BoundReport {
    BoundReport {
        case_tag: CaseTag::Borel,
        min_bound: crate::theta::inv_sqrt5(),
        min_strict: true,
        max_bound: None,
        max_strict: false,
        no_improvement: false,
    }
}

/// `min ≤ 1/√(a²+4) ≤ max` over `Θ_{n−1}, Θ_n, Θ_{n+1}` with `a = a_{n+1}`;
/// the lower bound on the max is Tong's.
pub fn borel_improved_bounds(a: Digit) -> Result<BoundReport> {
    let b = borel_improved_bound(a)?;
    Ok(BoundReport {
        case_tag: CaseTag::BorelImproved,
        min_bound: b.clone(),
        min_strict: false,
        max_bound: Some(b),
        max_strict: false,
        no_improvement: false,
    })
}

/// `Θ_{n−1} < H(q_{n−1})` or `Θ_n < H(q_n)`; reported with `H(q)` as the
/// bound for the smaller denominator.
pub fn hancl_bounds(q: &BigInt) -> Result<BoundReport> {
    Ok(BoundReport {
        case_tag: CaseTag::Hancl,
        min_bound: QuadSurd::from_rational(&hancl_h(q)?),
        min_strict: true,
        max_bound: None,
        max_strict: false,
        no_improvement: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, render_decimal};
    use crate::theta::psi_rational;

    fn qr(n: i64, d: i64) -> QuadSurd {
        QuadSurd::from_rational(&rat(n, d))
    }

    #[test]
    fn hancl_values() {
        let h = |q: i64| hancl_h(&BigInt::from(q)).unwrap();
        assert_eq!(render_decimal(&h(610), 7), "0.4999987");
        assert_eq!(render_decimal(&h(100), 6), "0.499951");
        assert_eq!(render_decimal(&h(101), 6), "0.499952");
        assert_eq!(h(1), rat(1, 2));
        assert!(hancl_h(&BigInt::from(0)).is_err());
        let half = rat(1, 2);
        let mut prev = h(2);
        for q in (3..1_000_000i64).step_by(997) {
            let cur = h(q);
            assert!(cur > prev && cur < half);
            prev = cur;
        }
        for q in 2..200 {
            assert!(h(q) < h(q + 1));
        }
        assert!(&half - h(1_000_000_000) < rat(1, 1_000_000_000_000_000));
    }

    #[test]
    fn hancl_nair_values() {
        let s5 = 5f64.sqrt();
        assert!((hancl_nair_constant(1_000_000_000).unwrap() - s5).abs() < 1e-15);
        let c1 = hancl_nair_constant(1).unwrap();
        assert!((c1 - (s5 + (4.0 - 5.0 * s5 + 61f64.sqrt()) / 2.0)).abs() < 1e-15);
        assert!((c1 - 2.551023).abs() < 1e-6);
        let c10 = hancl_nair_constant(10).unwrap();
        assert!((c10 - (s5 + (4.0 - 5.0 * s5 + 61f64.sqrt()) / 200.0)).abs() < 1e-15);
        for q in 1..100 {
            assert!(hancl_nair_constant(q).unwrap() > s5);
        }
        assert!(hancl_nair_constant(0).is_err());
    }

    #[test]
    fn borel_improved_values() {
        assert_eq!(borel_improved_bound(1).unwrap(), crate::theta::inv_sqrt5());
        let b2 = borel_improved_bound(2).unwrap();
        assert_eq!(&b2 * &b2, qr(1, 8));
        let b3 = borel_improved_bound(3).unwrap();
        assert_eq!(&b3 * &b3, qr(1, 13));
        assert!(b3.is_positive());
    }

    #[test]
    fn easy_examples() {
        let b = easy_case_bounds(2, 2).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(2, 5), qr(3, 10)));
        let b = easy_case_bounds(1, 2).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(2, 5), qr(2, 5)));
        let b = easy_case_bounds(1, 1).unwrap();
        assert_eq!(b.min_bound, qr(1, 2));
        assert!(b.no_improvement);
        let b = easy_case_bounds(1, 100).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(2, 201), qr(100, 201)));
        assert!(easy_case_bounds(3, 2).is_err());
    }

    #[test]
    fn difficult_examples() {
        let b = difficult_case_bounds(1, 1).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(6, 13), qr(2, 5)));
        assert!(!b.min_strict && b.max_strict);
        let b = difficult_case_bounds(1, 2).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(6, 13), qr(6, 13)));
        let b = difficult_case_bounds(1, 3).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(4, 9), qr(1, 2)));
        assert!(b.min_strict && b.max_strict);
        assert!(difficult_case_bounds(0, 2).is_err());
    }

    #[test]
    fn k_only_examples() {
        let b = k_only_bounds(1).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(6, 13), qr(2, 5)));
        let b = k_only_bounds(2).unwrap();
        assert_eq!((b.min_bound, b.max_bound.unwrap()), (qr(12, 25), qr(6, 13)));
        let mut prev = QuadSurd::zero();
        for k in 1..200 {
            let b = k_only_bounds(k).unwrap().min_bound;
            assert!(b > prev && b < qr(1, 2));
            prev = b;
        }
        assert!(qr(1, 2) - prev < qr(1, 100_000));
        assert!(k_only_bounds(0).is_err());
    }

    #[test]
    fn k_only_is_the_diagonal_crossing() {
        for k in 1..=12u64 {
            let (bottom, top, _) = psi_v1k_lines(k);
            let b = k_only_bounds(k).unwrap();
            let v = Vertex::new(b.min_bound.to_rational().unwrap(), b.min_bound.to_rational().unwrap());
            assert!(top.contains(&v));
            let w = b.max_bound.unwrap().to_rational().unwrap();
            assert!(bottom.contains(&Vertex::new(w.clone(), w)));
        }
    }

    #[test]
    fn bounds_are_vertex_coordinates() {
        for bm in 1..=12u64 {
            for m in 1..bm {
                let tl = &i_vertices(bm, m)[0];
                let e = easy_case_bounds(m, bm).unwrap();
                assert_eq!(e.min_bound.to_rational().unwrap(), tl.beta);
                assert_eq!(e.max_bound.unwrap().to_rational().unwrap(), tl.alpha);
                let (al, be) = psi_rational(&Rational::new(bm.into(), (bm + 1).into()), &Rational::new((m + 1).into(), (m + 2).into()));
                let d = difficult_case_bounds(m, bm).unwrap();
                assert_eq!(d.min_bound.to_rational().unwrap(), al);
                assert_eq!(d.max_bound.unwrap().to_rational().unwrap(), be);
            }
            let e = easy_case_bounds(bm, bm).unwrap();
            assert_eq!(e.min_bound.to_rational().unwrap(), i_vertices(bm, bm)[1].alpha);
            assert_eq!(e.max_bound.unwrap().to_rational().unwrap(), i_vertices(bm, bm)[2].alpha);
            let d = difficult_case_bounds(bm, bm).unwrap();
            assert_eq!(d.min_bound.to_rational().unwrap(), i1_vertices(bm, bm)[0].alpha);
            assert_eq!(d.max_bound.unwrap().to_rational().unwrap(), i1_vertices(bm, bm)[2].alpha);
        }
    }

    #[test]
    fn reports_are_in_range() {
        let half = qr(1, 2);
        for m in 1..=12 {
            for bm in m..=12 {
                for rep in [easy_case_bounds(m, bm).unwrap(), difficult_case_bounds(m, bm).unwrap()] {
                    assert!(rep.min_bound.is_positive() && rep.min_bound <= half);
                    assert!(rep.max_bound.unwrap().is_positive());
                }
            }
        }
    }
}
