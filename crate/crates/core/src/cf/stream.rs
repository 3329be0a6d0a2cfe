use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Digit;

struct StreamState {
    source: Box<dyn FnMut() -> Digit>,
    cache: Vec<Digit>,
}

/// Lazily generated partial quotients `a_1, a_2, …` of an irrational number
/// that has no closed form.
///
/// Clones share one digit cache; a stream and its Gauss-map shifts all read
/// from the same generator. Single-threaded by construction.
#[derive(Clone)]
pub struct DigitStream {
    state: Rc<RefCell<StreamState>>,
    offset: usize,
    label: Rc<str>,
}

impl DigitStream {
    /// Wraps a generator; every produced digit must be at least 1.
    pub fn from_fn(label: impl Into<String>, source: impl FnMut() -> Digit + 'static) -> Self {
        let label: String = label.into();
        DigitStream {
            state: Rc::new(RefCell::new(StreamState { source: Box::new(source), cache: Vec::new() })),
            offset: 0,
            label: label.into(),
        }
    }

    /// Uniform digits in `1..=max_digit` from a ChaCha8 generator. The pair
    /// `(seed, index)` fully determines the sequence.
    pub fn seeded(seed: u64, index: u64, max_digit: Digit) -> Self {
        assert!(max_digit >= 1, "max_digit must be at least 1");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Self::from_fn(format!("stream(seed={seed},index={index},max_digit={max_digit})"), move || {
            rng.gen_range(1..=max_digit)
        })
    }

    /// `pre` followed by `period` repeated forever.
    pub fn periodic(pre: Vec<Digit>, period: Vec<Digit>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        let label = format!("stream(pre={pre:?},period={period:?})");
        let mut k = 0usize;
        Self::from_fn(label, move || {
            let d = if k < pre.len() { pre[k] } else { period[(k - pre.len()) % period.len()] };
            k += 1;
            d
        })
    }

    /// `a_k` for `k >= 1`.
    pub fn digit(&self, k: usize) -> Digit {
        assert!(k >= 1, "digits are indexed from 1");
        let idx = self.offset + k - 1;
        let mut st = self.state.borrow_mut();
        while st.cache.len() <= idx {
            let d = (st.source)();
            assert!(d >= 1, "digit stream produced {d}; partial quotients must be >= 1");
            st.cache.push(d);
        }
        st.cache[idx]
    }

    /// `a_1..=a_n`.
    pub fn prefix(&self, n: usize) -> Vec<Digit> {
        (1..=n).map(|k| self.digit(k)).collect()
    }

    /// The stream of `T^n(x)`.
    pub fn shifted(&self, n: usize) -> Self {
        DigitStream { state: Rc::clone(&self.state), offset: self.offset + n, label: Rc::clone(&self.label) }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn label(&self) -> String {
        if self.offset == 0 {
            self.label.to_string()
        } else {
            format!("T^{}({})", self.offset, self.label)
        }
    }
}

impl fmt::Debug for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DigitStream").field("label", &self.label).field("offset", &self.offset).finish()
    }
}
