//! Finitely supported integer sequences indexed by degree.
//!
//! Every object the library stores (second differences of Hilbert functions,
//! deficiency module dimensions, postulation characters, kernel dimensions)
//! is zero outside a finite window, so a [`FinSeq`] keeps an offset plus the
//! dense window between its first and last nonzero entries.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A degree (twist) in the graded ring.
pub type Degree = i64;

/// Integer sequence `t ↦ s(t)` that vanishes outside a finite window.
///
/// The stored window is always canonical: its first and last entries are
/// nonzero, and the zero sequence is stored as `offset = 0, values = []`.
/// Equality of canonical sequences is therefore pointwise equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "RawFinSeq")]
pub struct FinSeq {
    offset: Degree,
    values: Vec<i64>,
}

#[derive(Deserialize)]
struct RawFinSeq {
    #[serde(default)]
    offset: Degree,
    #[serde(default)]
    values: Vec<i64>,
}

impl From<RawFinSeq> for FinSeq {
    fn from(raw: RawFinSeq) -> Self {
        FinSeq::new(raw.offset, raw.values)
    }
}

impl FinSeq {
    /// Builds a sequence with `values[i]` placed at degree `offset + i`,
    /// then trims leading and trailing zeros.
    pub fn new(offset: Degree, values: Vec<i64>) -> Self {
        let mut s = FinSeq { offset, values };
        s.canonicalize();
        s
    }

    pub fn zero() -> Self {
        FinSeq::default()
    }

    /// Single nonzero entry `value` at degree `t`.
    pub fn singleton(t: Degree, value: i64) -> Self {
        FinSeq::new(t, vec![value])
    }

    /// Samples `f` on the inclusive window `[lo, hi]`; zero elsewhere.
    pub fn from_fn(lo: Degree, hi: Degree, mut f: impl FnMut(Degree) -> i64) -> Self {
        if hi < lo {
            return FinSeq::zero();
        }
        FinSeq::new(lo, (lo..=hi).map(&mut f).collect())
    }

    fn canonicalize(&mut self) {
        let Some(first) = self.values.iter().position(|&v| v != 0) else {
            self.offset = 0;
            self.values.clear();
            return;
        };
        let last = self.values.iter().rposition(|&v| v != 0).unwrap();
        self.values.truncate(last + 1);
        self.values.drain(..first);
        self.offset += first as Degree;
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn offset(&self) -> Degree {
        self.offset
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest degree with a nonzero entry.
    pub fn min_support(&self) -> Option<Degree> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Largest degree with a nonzero entry.
    pub fn max_support(&self) -> Option<Degree> {
        (!self.is_zero()).then(|| self.offset + self.values.len() as Degree - 1)
    }

    pub fn value_at(&self, t: Degree) -> i64 {
        let i = t - self.offset;
        if i < 0 {
            return 0;
        }
        self.values.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(degree, value)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (Degree, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(i, &v)| (self.offset + i as Degree, v))
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    /// `s(t - k)`: moves every entry `k` degrees to the right.
    pub fn shift(&self, k: Degree) -> Self {
        if self.is_zero() {
            return FinSeq::zero();
        }
        FinSeq {
            offset: self.offset + k,
            values: self.values.clone(),
        }
    }

    /// First difference `t ↦ s(t) − s(t−1)`.
    pub fn diff(&self) -> Self {
        let Some(hi) = self.max_support() else {
            return FinSeq::zero();
        };
        FinSeq::from_fn(self.offset, hi + 1, |t| self.value_at(t) - self.value_at(t - 1))
    }

    /// Partial sums `t ↦ Σ_{u ≤ t} s(u)`.
    pub fn cumsum(&self) -> PartialSums {
        let mut acc = 0;
        let values = self
            .values
            .iter()
            .map(|v| {
                acc += v;
                acc
            })
            .collect();
        PartialSums {
            offset: self.offset,
            values,
            tail: acc,
        }
    }

    /// Entries restricted to `[lo, hi]`, in degree order (zeros included).
    pub fn window(&self, lo: Degree, hi: Degree) -> Vec<i64> {
        (lo..=hi).map(|t| self.value_at(t)).collect()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Self {
        let lo = match (self.min_support(), other.min_support()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return FinSeq::zero(),
        };
        let hi = self.max_support().unwrap_or(lo).max(other.max_support().unwrap_or(lo));
        FinSeq::from_fn(lo, hi, |t| op(self.value_at(t), other.value_at(t)))
    }
}

impl fmt::Debug for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "FinSeq(0)");
        }
        write!(f, "FinSeq@{}{:?}", self.offset, self.values)
    }
}

impl fmt::Display for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({}) @ {}", body.join(", "), self.offset)
    }
}

impl Add for &FinSeq {
    type Output = FinSeq;
    fn add(self, rhs: &FinSeq) -> FinSeq {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &FinSeq {
    type Output = FinSeq;
    fn sub(self, rhs: &FinSeq) -> FinSeq {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &FinSeq {
    type Output = FinSeq;
    fn neg(self) -> FinSeq {
        FinSeq {
            offset: self.offset,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// Eventually constant sequence produced by [`FinSeq::cumsum`].
///
/// Zero below `offset`, equal to `tail` from the last stored degree on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSums {
    offset: Degree,
    values: Vec<i64>,
    tail: i64,
}

impl PartialSums {
    pub fn at(&self, t: Degree) -> i64 {
        let i = t - self.offset;
        if i < 0 {
            0
        } else {
            self.values.get(i as usize).copied().unwrap_or(self.tail)
        }
    }

    /// The eventual constant value.
    pub fn limit(&self) -> i64 {
        self.tail
    }

    /// First difference of the accessor, which recovers the summed sequence.
    pub fn diff(&self) -> FinSeq {
        if self.values.is_empty() {
            return FinSeq::zero();
        }
        let hi = self.offset + self.values.len() as Degree;
        FinSeq::from_fn(self.offset, hi, |t| self.at(t) - self.at(t - 1))
    }
}

/// `dim_k S_t` for `S = k[x_0, …, x_n]`: `C(t+n, n)` for `t ≥ 0`, else 0.
pub fn ambient_dim(t: Degree, n: u32) -> i64 {
    assert!(n >= 1, "ambient dimension must be at least 1");
    if t < 0 {
        return 0;
    }
    // C(t+n, n) built up one factor at a time; each partial product is itself a binomial.
    let mut acc: i64 = 1;
    for k in 1..=n as i64 {
        acc = acc * (t + k) / k;
    }
    acc
}
