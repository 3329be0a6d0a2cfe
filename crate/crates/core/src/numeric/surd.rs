use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{exact_isqrt, rational_sqrt, Rational};
use crate::error::{Error, Result};

/// Exact real number `(p + r·√d) / q`.
///
/// Canonical form: `q > 0`, `gcd(p, r, q) = 1`. A value with `r = 0` is a
/// rational and stores `d = 0`. Otherwise `d >= 2` is not a perfect square
/// and carries no square factor below 1000.
///
/// Arithmetic requires both operands to live in the same field `ℚ(√d)` (or
/// one of them to be rational). Ordering is total: values from different
/// fields are compared by an exact sign test.
#[derive(Clone, Debug)]
pub struct QuadSurd {
    p: BigInt,
    r: BigInt,
    d: BigInt,
    q: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurdOp {
    Add,
    Sub,
    Mul,
    Div,
    Recip,
}

/// Square factors `k²` with `k` below this bound are pulled out of radicands.
const SQUARE_STRIP_LIMIT: u32 = 1000;

fn strip_squares(d: BigInt) -> (BigInt, BigInt) {
    let mut d = d;
    let mut outside = BigInt::one();
    let mut k = 2u32;
    while k < SQUARE_STRIP_LIMIT {
        let kk = BigInt::from(k * k);
        if kk > d {
            break;
        }
        while (&d % &kk).is_zero() {
            d /= &kk;
            outside *= k;
        }
        k += 1;
    }
    if let Some(s) = exact_isqrt(&d) {
        outside *= s;
        d = BigInt::one();
    }
    (outside, d)
}

/// Sign of `p + r·√d` for `d` not a perfect square.
fn sign_linear(p: &BigInt, r: &BigInt, d: &BigInt) -> Ordering {
    let sp = p.sign_cmp();
    let sr = r.sign_cmp();
    if sr == Ordering::Equal || d.is_zero() {
        return sp;
    }
    if sp == Ordering::Equal || sp == sr {
        return sr;
    }
    // bit lengths often settle p² against r²d without multiplying
    let (bp, br, bd) = (p.bits(), r.bits(), d.bits());
    if 2 * bp > 2 * br + bd + 1 {
        return sp;
    }
    if 2 * bp + 1 < 2 * br + bd - 1 {
        return sr;
    }
    let pp = p * p;
    let rrd = r * r * d;
    match pp.cmp(&rrd) {
        Ordering::Greater => sp,
        Ordering::Less => sr,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl QuadSurd {
    /// Builds `(p + r·√d)/q` in canonical form.
    pub fn new(
        p: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: impl Into<BigInt>,
        q: impl Into<BigInt>,
    ) -> Result<Self> {
        let (p, r, d, q) = (p.into(), r.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::OutOfRange(format!("negative radicand {d}")));
        }
        if r.is_zero() || d.is_zero() {
            return Ok(Self::normalized(p, BigInt::zero(), BigInt::zero(), q));
        }
        let (outside, d) = strip_squares(d);
        let r = r * outside;
        if d.is_one() {
            Ok(Self::normalized(p + r, BigInt::zero(), BigInt::zero(), q))
        } else {
            Ok(Self::normalized(p, r, d, q))
        }
    }

    /// `(p + r√d)/q` for a radicand already in canonical form.
    pub(crate) fn with_radicand(p: BigInt, r: BigInt, d: &BigInt, q: BigInt) -> Self {
        if r.is_zero() || d.is_zero() {
            return Self::normalized(p, BigInt::zero(), BigInt::zero(), q);
        }
        Self::normalized(p, r, d.clone(), q)
    }

    fn normalized(mut p: BigInt, mut r: BigInt, mut d: BigInt, mut q: BigInt) -> Self {
        debug_assert!(!q.is_zero());
        if q.is_negative() {
            p = -p;
            r = -r;
            q = -q;
        }
        let g = p.gcd(&r).gcd(&q);
        if !g.is_one() {
            p /= &g;
            r /= &g;
            q /= &g;
        }
        if r.is_zero() {
            d = BigInt::zero();
        }
        QuadSurd { p, r, d, q }
    }

    pub fn from_rational(x: &Rational) -> Self {
        QuadSurd {
            p: x.numer().clone(),
            r: BigInt::zero(),
            d: BigInt::zero(),
            q: x.denom().clone(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QuadSurd { p: n.into(), r: BigInt::zero(), d: BigInt::zero(), q: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√x` for a nonnegative rational: rational when `x` is a rational
    /// square, otherwise `√(num·den)/den`.
    pub fn sqrt_rational(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::NotRepresentable(x.to_string()));
        }
        if let Some(s) = rational_sqrt(x) {
            return Ok(Self::from_rational(&s));
        }
        Self::new(0, 1, x.numer() * x.denom(), x.denom().clone())
    }

    /// Exact nonnegative square root inside `ℚ(√d)`, when one exists.
    ///
    /// For an irrational radicand `(A + B√d)` this denests
    /// `√(A + B√d) = u + w√d` with `u² + w²d = A`, `2uw = B`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::NotRepresentable(self.to_string()));
        }
        if let Some(x) = self.to_rational() {
            return Self::sqrt_rational(&x);
        }
        // x = (p + r√d)/q = (p q + r q √d)/q²; work with A + B√d over q².
        let a = &self.p * &self.q;
        let b = &self.r * &self.q;
        let n = &a * &a - &b * &b * &self.d;
        let not_rep = || Error::NotRepresentable(self.to_string());
        let root_n = exact_isqrt(&n).ok_or_else(not_rep)?;
        // u² = (A ± √N)/2; u rational with u·w = B/2.
        for cand in [&a + &root_n, &a - &root_n] {
            let u2 = Rational::new(cand, BigInt::from(2));
            if u2.is_zero() || u2.is_negative() {
                continue;
            }
            let Some(u) = rational_sqrt(&u2) else { continue };
            let w = Rational::new(b.clone(), BigInt::from(2)) / &u;
            let scale = Rational::new(BigInt::one(), self.q.clone());
            let u = u * &scale;
            let w = w * &scale;
            // put u + w√d over a common denominator
            let den = u.denom().lcm(w.denom());
            let pu = u.numer() * (&den / u.denom());
            let pw = w.numer() * (&den / w.denom());
            let mut root = Self::normalized(pu, pw, self.d.clone(), den);
            if root.is_negative() {
                root = -root;
            }
            debug_assert_eq!(&root * &root, *self);
            return Ok(root);
        }
        Err(not_rep())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    /// Radicand; zero for rational values.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.r.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.p.clone(), self.q.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.r.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        sign_linear(&self.p, &self.r, &self.d)
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn conj(&self) -> Self {
        QuadSurd { p: self.p.clone(), r: -&self.r, d: self.d.clone(), q: self.q.clone() }
    }

    /// Field norm `(p² − r²d)/q²`.
    pub fn norm(&self) -> Rational {
        Rational::new(&self.p * &self.p - &self.r * &self.r * &self.d, &self.q * &self.q)
    }

    /// Exact `⌊x⌋`, using integer square roots only.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.p.div_floor(&self.q);
        }
        // r√d lies strictly between consecutive integers s and s + 1.
        let root = (&self.r * &self.r * &self.d).sqrt();
        let s = if self.r.is_negative() { -root - 1 } else { root };
        (&self.p + s).div_floor(&self.q)
    }

    /// Fractional part `x − ⌊x⌋`.
    pub fn fract(&self) -> Self {
        let f = self.floor();
        Self::normalized(&self.p - f * &self.q, self.r.clone(), self.d.clone(), self.q.clone())
    }

    /// Brings both operands to a common radicand.
    fn aligned(&self, other: &Self) -> Result<(BigInt, [BigInt; 3], [BigInt; 3])> {
        let mine = [self.p.clone(), self.r.clone(), self.q.clone()];
        let theirs = [other.p.clone(), other.r.clone(), other.q.clone()];
        if other.is_rational() {
            return Ok((self.d.clone(), mine, theirs));
        }
        if self.is_rational() || self.d == other.d {
            return Ok((other.d.clone(), mine, theirs));
        }
        // √d2 = (k/d1)·√d1 whenever d1·d2 = k².
        match exact_isqrt(&(&self.d * &other.d)) {
            Some(k) => {
                let d1 = &self.d;
                let converted = [&other.p * d1, &other.r * k, &other.q * d1];
                Ok((self.d.clone(), mine, converted))
            }
            None => Err(Error::IncompatibleFields(self.d.to_string(), other.d.to_string())),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (d, [p1, r1, q1], [p2, r2, q2]) = self.aligned(other)?;
        if q1 == q2 {
            return Ok(Self::normalized(p1 + p2, r1 + r2, d, q1));
        }
        Ok(Self::normalized(&p1 * &q2 + &p2 * &q1, r1 * &q2 + r2 * &q1, d, q1 * q2))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (d, [p1, r1, q1], [p2, r2, q2]) = self.aligned(other)?;
        let p = &p1 * &p2 + &r1 * &r2 * &d;
        let r = p1 * r2 + p2 * r1;
        Ok(Self::normalized(p, r, d, q1 * q2))
    }

    pub fn checked_recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // q/(p + r√d) = q(p − r√d)/(p² − r²d)
        let den = &self.p * &self.p - &self.r * &self.r * &self.d;
        Ok(Self::normalized(&self.q * &self.p, -(&self.q * &self.r), self.d.clone(), den))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // validate the field before inverting
        self.aligned(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    /// Rational interval approximation helpers live in `interval.rs`; this
    /// is the display/float path only.
    pub fn to_f64(&self) -> f64 {
        if let Some(x) = self.to_rational() {
            return x.to_f64().unwrap_or(f64::NAN);
        }
        let width = Rational::new(BigInt::one(), BigInt::from(10).pow(24));
        let iv = super::surd_to_interval(self, &width);
        iv.lo().to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `"(p,r,d,q)"`.
    pub fn parse_tuple(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("expected (p,r,d,q), got {s:?}"));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
        let parts: Vec<BigInt> = inner
            .split(',')
            .map(|t| t.trim().parse::<BigInt>().map_err(|_| err()))
            .collect::<Result<_>>()?;
        let [p, r, d, q]: [BigInt; 4] = parts.try_into().map_err(|_| err())?;
        Self::new(p, r, d, q)
    }

    /// Total comparison, including values from unrelated fields.
    fn compare(&self, other: &Self) -> Ordering {
        if let Ok((d, [p1, r1, q1], [p2, r2, q2])) = self.aligned(other) {
            // sign of x − y without normalizing the difference
            return sign_linear(&(&p1 * &q2 - &p2 * &q1), &(r1 * &q2 - r2 * &q1), &d);
        }
        // sign(A + B√x + C√y) with x·y not a square.
        let a = &self.p * &other.q - &other.p * &self.q;
        let b = &self.r * &other.q;
        let c = -(&other.r * &self.q);
        let (x, y) = (&self.d, &other.d);
        let su = {
            let sb = b.sign_cmp();
            let sc = c.sign_cmp();
            if sb == sc || sc == Ordering::Equal {
                sb
            } else if sb == Ordering::Equal {
                sc
            } else if &b * &b * x > &c * &c * y {
                sb
            } else {
                sc
            }
        };
        let sa = a.sign_cmp();
        if sa == Ordering::Equal || su == Ordering::Equal || sa == su {
            return if sa == Ordering::Equal { su } else { sa };
        }
        // Opposite signs: compare A² with (B√x + C√y)².
        let lead = &a * &a - &b * &b * x - &c * &c * y;
        let cross = -(BigInt::from(2) * &b * &c);
        match sign_linear(&lead, &cross, &(x * y)) {
            Ordering::Greater => sa,
            _ => su,
        }
    }
}

/// Applies one [`SurdOp`]; `Recip` ignores `b`.
pub fn surd_arith(op: SurdOp, a: &QuadSurd, b: &QuadSurd) -> Result<QuadSurd> {
    match op {
        SurdOp::Add => a.checked_add(b),
        SurdOp::Sub => a.checked_sub(b),
        SurdOp::Mul => a.checked_mul(b),
        SurdOp::Div => a.checked_div(b),
        SurdOp::Recip => a.checked_recip(),
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for QuadSurd {}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for QuadSurd {
    fn from(x: Rational) -> Self {
        QuadSurd::from_rational(&x)
    }
}

impl From<&Rational> for QuadSurd {
    fn from(x: &Rational) -> Self {
        QuadSurd::from_rational(x)
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { p: -&self.p, r: -&self.r, d: self.d.clone(), q: self.q.clone() }
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        -&self
    }
}

// Operator forms panic on field mismatch or zero division, like integer
// division does; the `checked_*` methods report those as errors.
macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadSurd> for &QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl $trait<QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: QuadSurd) -> QuadSurd {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadSurd> for &QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: QuadSurd) -> QuadSurd {
                self.$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

/// JSON form: a rational as `["num","den"]`, otherwise
/// `{"surd": ["p","r","d","q"]}`.
impl serde::Serialize for QuadSurd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        if self.is_rational() {
            return [self.p.to_string(), self.q.to_string()].serialize(s);
        }
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("surd", &[self.p.to_string(), self.r.to_string(), self.d.to_string(), self.q.to_string()])?;
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for QuadSurd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Frac([String; 2]),
            Surd { surd: [String; 4] },
        }
        let parse = |t: &str| t.parse::<BigInt>().map_err(serde::de::Error::custom);
        match Repr::deserialize(d)? {
            Repr::Frac([n, q]) => Self::new(parse(&n)?, 0, 0, parse(&q)?).map_err(serde::de::Error::custom),
            Repr::Surd { surd: [p, r, dd, q] } => {
                Self::new(parse(&p)?, parse(&r)?, parse(&dd)?, parse(&q)?).map_err(serde::de::Error::custom)
            }
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q_suffix = if self.q.is_one() { String::new() } else { format!("/{}", self.q) };
        if self.is_rational() {
            return write!(f, "{}{}", self.p, q_suffix);
        }
        let radical = if self.r.abs().is_one() {
            format!("√{}", self.d)
        } else {
            format!("{}√{}", self.r.abs(), self.d)
        };
        let numerator = if self.p.is_zero() {
            if self.r.is_negative() {
                format!("-{radical}")
            } else {
                radical
            }
        } else {
            let sign = if self.r.is_negative() { '-' } else { '+' };
            format!("{}{}{}", self.p, sign, radical)
        };
        if self.q.is_one() {
            write!(f, "{numerator}")
        } else if self.p.is_zero() {
            write!(f, "{numerator}{q_suffix}")
        } else {
            write!(f, "({numerator}){q_suffix}")
        }
    }
}
