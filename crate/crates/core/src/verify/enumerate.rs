use num_bigint::BigInt;
use num_integer::Roots;

use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// The Farey sequence `F_n` without its endpoints, in increasing order,
/// generated by the next-term recurrence.
#[derive(Clone, Debug)]
pub struct FareyIter {
    n: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

impl FareyIter {
    pub fn new(n: u64) -> Self {
        FareyIter { n, a: 0, b: 1, c: 1, d: n }
    }
}

impl Iterator for FareyIter {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        if self.c >= self.d || self.n < 2 {
            return None;
        }
        let out = (self.c, self.d);
        let k = (self.n + self.b) / self.d;
        let (c, d) = (k * self.c - self.a, k * self.d - self.b);
        (self.a, self.b, self.c, self.d) = (self.c, self.d, c, d);
        Some(out)
    }
}

/// Every canonical `p/q ∈ (0,1)` with `q ≤ max_q`, each once.
pub fn enumerate_rationals(max_q: u64) -> Result<impl Iterator<Item = Rational>> {
    if max_q < 2 {
        return Err(Error::Config(format!("max_q must be at least 2, got {max_q}")));
    }
    Ok(FareyIter::new(max_q).map(|(p, q)| Rational::new(p.into(), q.into())))
}

/// Every irrational `(p + √D)/q ∈ (0,1)` with non-square `2 ≤ D ≤ max_d`,
/// `|p| ≤ max_coeff`, `1 ≤ q ≤ max_coeff`, deduplicated and sorted by
/// `(d, q, p, r)` of the canonical form.
pub fn enumerate_surds(max_d: u64, max_coeff: u64) -> Result<Vec<QuadSurd>> {
    if max_d < 2 || max_coeff < 1 {
        return Err(Error::Config(format!("need max_D >= 2 and max_coeff >= 1, got {max_d}, {max_coeff}")));
    }
    let c = max_coeff as i64;
    let mut out = Vec::new();
    for d in 2..=max_d {
        let s = d.sqrt();
        if s * s == d {
            continue;
        }
        for q in 1..=c {
            for p in -c..=c {
                let x = QuadSurd::new(p, 1, d as i64, q)?;
                if x.is_positive() && x < QuadSurd::one() {
                    out.push(x);
                }
            }
        }
    }
    let key = |x: &QuadSurd| -> (BigInt, BigInt, BigInt, BigInt) { (x.d().clone(), x.q().clone(), x.p().clone(), x.r().clone()) };
    out.sort_by_key(key);
    out.dedup();
    Ok(out)
}
