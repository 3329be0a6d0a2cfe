use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{digit_from_bigint, Digit, RealSpec};
use crate::error::{Error, Result};
use crate::numeric::{QuadSurd, Rational};

/// Digits `a_1..a_n` with the convergent table `(p_k, q_k)`, `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfData {
    digits: Vec<Digit>,
    // p[k + 1] = p_k, starting from the seeds p_{-1} = 1, q_{-1} = 0
    p: Vec<BigInt>,
    q: Vec<BigInt>,
    exhausted: bool,
}

impl CfData {
    fn empty() -> Self {
        CfData {
            digits: Vec::new(),
            p: vec![BigInt::one(), BigInt::zero()],
            q: vec![BigInt::zero(), BigInt::one()],
            exhausted: false,
        }
    }

    /// Builds the table for `digits`; `exhausted` marks a complete finite
    /// expansion.
    pub fn from_digits(digits: &[Digit], exhausted: bool) -> Result<Self> {
        let mut cf = Self::empty();
        for &a in digits {
            cf.push(a)?;
        }
        cf.exhausted = exhausted;
        Ok(cf)
    }

    /// Appends `a_{n+1}`.
    pub fn push(&mut self, a: Digit) -> Result<()> {
        if a == 0 {
            return Err(Error::InvalidDigit(a.to_string()));
        }
        let n = self.p.len();
        let p = &self.p[n - 1] * a + &self.p[n - 2];
        let q = &self.q[n - 1] * a + &self.q[n - 2];
        self.digits.push(a);
        self.p.push(p);
        self.q.push(q);
        Ok(())
    }

    /// Number of digits `n`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    /// `a_k` for `1 <= k <= n`.
    pub fn digit(&self, k: usize) -> Option<Digit> {
        k.checked_sub(1).and_then(|i| self.digits.get(i)).copied()
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    /// `p_k` for `-1 <= k <= n`.
    pub fn p(&self, k: isize) -> &BigInt {
        &self.p[(k + 1) as usize]
    }

    /// `q_k` for `-1 <= k <= n`.
    pub fn q(&self, k: isize) -> &BigInt {
        &self.q[(k + 1) as usize]
    }

    /// `p_k / q_k`.
    pub fn convergent(&self, k: usize) -> Rational {
        Rational::new(self.p(k as isize).clone(), self.q(k as isize).clone())
    }

    /// All convergents `p_k/q_k` for `k = 1..=n`.
    pub fn convergent_list(&self) -> Vec<Rational> {
        (1..=self.len()).map(|k| self.convergent(k)).collect()
    }

    /// `v_k = q_{k-1}/q_k`, with `v_0 = 0`.
    pub fn past(&self, k: usize) -> Rational {
        Rational::new(self.q(k as isize - 1).clone(), self.q(k as isize).clone())
    }

    /// The first `n` digits.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        CfData {
            digits: self.digits[..n].to_vec(),
            p: self.p[..n + 2].to_vec(),
            q: self.q[..n + 2].to_vec(),
            exhausted: self.exhausted && n == self.len(),
        }
    }

    /// The other expansion of the same rational: `[…, a_m]` with `a_m >= 2`
    /// becomes `[…, a_m − 1, 1]`, and `[…, a_m, 1]` folds back. `None` for 0.
    pub fn twin(&self) -> Option<Self> {
        let last = *self.digits.last()?;
        let mut digits = self.digits.clone();
        if last >= 2 {
            digits.pop();
            digits.push(last - 1);
            digits.push(1);
        } else {
            digits.pop();
            match digits.last_mut() {
                Some(prev) => *prev += 1,
                None => return None,
            }
        }
        Self::from_digits(&digits, self.exhausted).ok()
    }
}

/// The canonical finite expansion of a rational in `[0,1)`.
pub fn rcf_expand_rational(x: &Rational) -> Result<CfData> {
    if x.is_negative() || *x >= Rational::one() {
        return Err(Error::OutOfRange(format!("{x} is not in [0,1)")));
    }
    let mut cf = CfData::empty();
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    while !num.is_zero() {
        let (a, rem) = den.div_rem(&num);
        cf.push(digit_from_bigint(&a)?)?;
        den = num;
        num = rem;
    }
    cf.exhausted = true;
    Ok(cf)
}

/// First `n` digits of an irrational surd in `(0,1)`.
pub fn surd_digits(x: &QuadSurd, n: usize) -> Result<Vec<Digit>> {
    let mut out = Vec::with_capacity(n);
    let mut t = x.clone();
    for _ in 0..n {
        let inv = t.checked_recip()?;
        out.push(digit_from_bigint(&inv.floor())?);
        t = inv.fract();
    }
    Ok(out)
}

/// Convergent table up to index `n`.
pub fn convergents(x: &RealSpec, n: usize) -> Result<CfData> {
    match x {
        RealSpec::Rational(v) => {
            let cf = rcf_expand_rational(v)?;
            if n > cf.len() {
                return Err(Error::ExpansionExhausted(cf.len()));
            }
            Ok(cf.truncated(n))
        }
        RealSpec::Surd(v) => CfData::from_digits(&surd_digits(v, n)?, false),
        RealSpec::Stream(s) => CfData::from_digits(&s.prefix(n), false),
    }
}

/// `v_n = [0; a_n, …, a_1]`, cross-checked against `q_{n-1}/q_n`.
pub fn past_v(digits: &[Digit]) -> Result<Rational> {
    if digits.is_empty() {
        return Err(Error::EmptyDigits);
    }
    let mut v = Rational::zero();
    for &a in digits {
        if a == 0 {
            return Err(Error::InvalidDigit(a.to_string()));
        }
        v = (Rational::from_integer(BigInt::from(a)) + v).recip();
    }
    let cf = CfData::from_digits(digits, false)?;
    let via_table = cf.past(cf.len());
    assert_eq!(v, via_table, "reversed expansion disagrees with q_(n-1)/q_n");
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn golden() -> RealSpec {
        RealSpec::surd(QuadSurd::new(-1, 1, 5, 2).unwrap()).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(rcf_expand_rational(&rat(201, 20201)).unwrap().digits(), &[100, 1, 1, 100]);
        let zero = rcf_expand_rational(&rat(0, 1)).unwrap();
        assert!(zero.is_empty());
        assert_eq!(zero.convergent(0), rat(0, 1));
        assert_eq!(rcf_expand_rational(&rat(2, 5)).unwrap().digits(), &[2, 2]);
        assert!(matches!(rcf_expand_rational(&rat(1, 1)), Err(Error::OutOfRange(_))));
        assert!(matches!(rcf_expand_rational(&rat(-1, 3)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn convergent_examples() {
        let x = RealSpec::rational(rat(201, 20201)).unwrap();
        let cf = convergents(&x, 4).unwrap();
        assert_eq!(cf.convergent_list(), vec![rat(1, 100), rat(1, 101), rat(2, 201), rat(201, 20201)]);
        assert!(cf.exhausted());
        assert_eq!(convergents(&x, 5), Err(Error::ExpansionExhausted(4)));
        assert_eq!(Error::ExpansionExhausted(4).to_string(), "expansion exhausted after 4 partial quotients");
        let cf = convergents(&golden(), 5).unwrap();
        assert_eq!(cf.convergent_list(), vec![rat(1, 1), rat(1, 2), rat(2, 3), rat(3, 5), rat(5, 8)]);
        let zero = RealSpec::rational(rat(0, 1)).unwrap();
        assert_eq!(convergents(&zero, 0).unwrap().convergent(0), rat(0, 1));
    }

    #[test]
    fn past_examples() {
        assert_eq!(past_v(&[100, 1]).unwrap(), rat(100, 101));
        assert_eq!(past_v(&[5]).unwrap(), rat(1, 5));
        assert_eq!(past_v(&[1, 1, 1, 1]).unwrap(), rat(3, 5));
        assert_eq!(past_v(&[]), Err(Error::EmptyDigits));
        assert!(past_v(&[2, 0]).is_err());
    }

    #[test]
    fn twins() {
        let cf = rcf_expand_rational(&rat(2, 5)).unwrap();
        let tw = cf.twin().unwrap();
        assert_eq!(tw.digits(), &[2, 1, 1]);
        assert_eq!(tw.convergent(tw.len()), rat(2, 5));
        assert_eq!(tw.twin().unwrap().digits(), &[2, 2]);
        assert!(rcf_expand_rational(&rat(0, 1)).unwrap().twin().is_none());
        // 1/2 = [2] = [1,1]
        let half = rcf_expand_rational(&rat(1, 2)).unwrap().twin().unwrap();
        assert_eq!(half.digits(), &[1, 1]);
    }

    fn fib(k: usize) -> BigInt {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..k {
            let c = &a + &b;
            a = b;
            b = c;
        }
        a
    }

    fn check_table(cf: &CfData) {
        for k in 0..=cf.len() as isize {
            let det = cf.p(k) * cf.q(k - 1) - cf.p(k - 1) * cf.q(k);
            let expected = if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(det, BigInt::from(expected), "determinant at k={k}");
            if k >= 1 {
                assert!(cf.p(k).gcd(cf.q(k)).is_one());
                assert!(*cf.q(k) >= fib(k as usize + 1));
                if k >= 2 {
                    assert!(cf.q(k) > cf.q(k - 1));
                }
            }
        }
    }

    #[test]
    fn sandwich_for_surds() {
        let x = QuadSurd::new(-3, 1, 13, 2).unwrap();
        let spec = RealSpec::surd(x.clone()).unwrap();
        let cf = convergents(&spec, 40).unwrap();
        check_table(&cf);
        for k in 0..=cf.len() {
            let diff = &x - &QuadSurd::from_rational(&cf.convergent(k));
            assert_eq!(diff.is_positive(), k % 2 == 0, "k={k}");
        }
    }

    proptest! {
        #[test]
        fn expansion_round_trips(num in 0u64..5000, den in 1u64..5000) {
            prop_assume!(num < den);
            let x = Rational::new(BigInt::from(num), BigInt::from(den));
            let cf = rcf_expand_rational(&x).unwrap();
            check_table(&cf);
            prop_assert_eq!(cf.convergent(cf.len()), x.clone());
            if let Some(&last) = cf.digits().last() {
                prop_assert!(last >= 2);
            }
            if let Some(tw) = cf.twin() {
                check_table(&tw);
                prop_assert_eq!(tw.convergent(tw.len()), x);
            }
        }

        #[test]
        fn past_matches_table(digits in proptest::collection::vec(1u64..30, 1..12)) {
            let v = past_v(&digits).unwrap();
            let cf = CfData::from_digits(&digits, false).unwrap();
            prop_assert_eq!(v, cf.past(cf.len()));
        }
    }
}
