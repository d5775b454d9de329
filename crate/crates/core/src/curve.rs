//! Numerical model of a locally Cohen–Macaulay curve in P³.
//!
//! A curve is represented by the second difference of its Hilbert function
//! together with the dimensions of its deficiency module `h¹(I_C(t))`. Every
//! other invariant used by the library is derived from this pair:
//!
//! ```text
//! H(C,t)  = Σ_{v ≤ t} (t − v + 1) Δ²H(C,v)
//! P(C,t)  = d·t + 1 − g
//! h²(t)   = H(C,t) − P(C,t) + h¹(t)
//! ```
//!
//! `h²` has infinite support (it equals `−P(C,t)` for `t ≪ 0`), so it is never
//! stored.

use serde::{Deserialize, Serialize};

use crate::error::{LiaisonError, Result};
use crate::seq::{ambient_dim, Degree, FinSeq};

/// `(Δ²H, h¹)` of a curve in P³.
///
/// Two curves are considered the same when both sequences agree; deformation
/// through curves with constant cohomology is modelled as this equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveInvariants {
    delta2: FinSeq,
    #[serde(default)]
    h1: FinSeq,
}

/// Bounds on `ω(I)`, the largest degree of a minimal generator.
///
/// `ω` is not a function of `(Δ²H, h¹)`: two chains can produce identical
/// numerical data with different `ω`. Hence an interval, certified exact only
/// when a construction pins it down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDegreeInterval {
    pub lower: Option<Degree>,
    pub upper: Degree,
    pub certified_exact: bool,
}

impl GeneratorDegreeInterval {
    pub fn bounded(lower: Option<Degree>, upper: Degree) -> Self {
        debug_assert!(lower.is_none_or(|l| l <= upper));
        GeneratorDegreeInterval {
            lower,
            upper,
            certified_exact: false,
        }
    }

    pub fn exact(value: Degree) -> Self {
        GeneratorDegreeInterval {
            lower: Some(value),
            upper: value,
            certified_exact: true,
        }
    }

    /// The certified value, if any.
    pub fn value(&self) -> Option<Degree> {
        self.certified_exact.then_some(self.upper)
    }
}

/// One failed consistency check reported by [`CurveInvariants::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: &'static str,
    pub degree: Option<Degree>,
    pub detail: String,
}

impl Violation {
    fn new(check: &'static str, degree: Option<Degree>, detail: impl Into<String>) -> Self {
        Violation {
            check,
            degree,
            detail: detail.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.degree {
            Some(t) => write!(f, "{} at t={}: {}", self.check, t, self.detail),
            None => write!(f, "{}: {}", self.check, self.detail),
        }
    }
}

/// Derived invariants in one record, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSummary {
    pub degree: i64,
    pub genus: i64,
    pub e: Degree,
    pub sigma: Degree,
    pub alpha: Degree,
    pub r_a: Option<Degree>,
    pub r_o: Option<Degree>,
    pub diam: i64,
    pub s: Degree,
    pub t: Degree,
    pub numreg: Degree,
    pub gamma: FinSeq,
    pub equal_cohomology: Option<bool>,
}

impl CurveInvariants {
    /// Wraps the data without checking it. Use [`CurveInvariants::validate`]
    /// (or [`CurveInvariants::try_new`]) before trusting derived invariants.
    pub fn from_parts(delta2: FinSeq, h1: FinSeq) -> Self {
        CurveInvariants { delta2, h1 }
    }

    pub fn try_new(delta2: FinSeq, h1: FinSeq) -> Result<Self> {
        let c = CurveInvariants::from_parts(delta2, h1);
        let violations = c.validate();
        if let Some(v) = violations.first() {
            return Err(LiaisonError::InvalidData(v.to_string()));
        }
        Ok(c)
    }

    /// Arithmetically Cohen–Macaulay curve with the given second difference.
    pub fn acm(delta2: FinSeq) -> Self {
        CurveInvariants::from_parts(delta2, FinSeq::zero())
    }

    pub fn delta2(&self) -> &FinSeq {
        &self.delta2
    }

    pub fn h1(&self) -> &FinSeq {
        &self.h1
    }

    pub fn is_acm(&self) -> bool {
        self.h1.is_zero()
    }

    pub fn degree(&self) -> i64 {
        self.delta2.sum()
    }

    pub fn hilbert(&self, t: Degree) -> i64 {
        self.delta2
            .iter()
            .take_while(|&(v, _)| v <= t)
            .map(|(v, x)| (t - v + 1) * x)
            .sum()
    }

    /// `Δ¹H(C,t)`.
    pub fn delta1(&self, t: Degree) -> i64 {
        self.delta2.iter().take_while(|&(v, _)| v <= t).map(|(_, x)| x).sum()
    }

    pub fn sigma(&self) -> Degree {
        self.delta2.max_support().map_or(0, |t| t + 1)
    }

    /// Arithmetic genus, read off where `H(C,t)` is already linear and the
    /// deficiency module has vanished.
    pub fn genus(&self) -> i64 {
        let t = self.stable_degree();
        self.degree() * t + 1 - self.hilbert(t)
    }

    fn stable_degree(&self) -> Degree {
        let mut t = self.sigma();
        if let Some(ro) = self.h1.max_support() {
            t = t.max(ro + 1);
        }
        t
    }

    /// Hilbert polynomial `P(C,t) = d·t + 1 − g`.
    pub fn hilbert_poly(&self, t: Degree) -> i64 {
        self.degree() * t + 1 - self.genus()
    }

    pub fn h1_at(&self, t: Degree) -> i64 {
        self.h1.value_at(t)
    }

    /// `h²(I_C(t)) = H(C,t) − P(C,t) + h¹(I_C(t))`.
    pub fn h2(&self, t: Degree) -> i64 {
        self.hilbert(t) - self.hilbert_poly(t) + self.h1.value_at(t)
    }

    pub fn r_a(&self) -> Result<Degree> {
        self.h1.min_support().ok_or(LiaisonError::Acm("r_a"))
    }

    pub fn r_o(&self) -> Result<Degree> {
        self.h1.max_support().ok_or(LiaisonError::Acm("r_o"))
    }

    /// Number of degrees from `r_a` to `r_o` inclusive; 0 for ACM curves.
    pub fn diam(&self) -> i64 {
        match (self.h1.min_support(), self.h1.max_support()) {
            (Some(a), Some(o)) => o - a + 1,
            _ => 0,
        }
    }

    /// Index of speciality `e(C) = max{t : h²(I_C(t)) ≠ 0}`.
    ///
    /// `h²` vanishes above `max(σ, r_o)`, and below `min(0, r_a) − |g| − 2`
    /// it equals `−P(C,t) > 0`, so the downward scan is bounded. Requires
    /// positive degree.
    pub fn e_index(&self) -> Degree {
        let top = self.stable_degree();
        let g = self.genus();
        let floor = self.h1.min_support().unwrap_or(0).min(0) - g.abs() - 2;
        let mut t = top;
        while t >= floor {
            if self.h2(t) != 0 {
                return t;
            }
            t -= 1;
        }
        floor - 1
    }

    /// Least degree of a form in `I_C`: first `t` with `H(C,t) < dim S_t`.
    pub fn alpha(&self) -> Degree {
        let mut t = 0;
        loop {
            if self.hilbert(t) < ambient_dim(t, 3) {
                return t;
            }
            t += 1;
        }
    }

    /// Postulation character `γ_C(n) = −Δ³H(C,n)`.
    pub fn gamma(&self) -> FinSeq {
        -&self.delta2.diff()
    }

    /// `s(C) = min{n ≥ 0 : γ_C(n) ≥ 0}`; equals `α`.
    pub fn s_inv(&self) -> Degree {
        let gamma = self.gamma();
        (0..).find(|&n| gamma.value_at(n) >= 0).unwrap()
    }

    /// `t(C) = min{n : γ_C(n) > 0}`.
    pub fn t_inv(&self) -> Degree {
        let gamma = self.gamma();
        let hi = gamma.max_support().unwrap_or(0);
        (0..=hi).find(|&n| gamma.value_at(n) > 0).unwrap_or(hi + 1)
    }

    /// Castelnuovo–Mumford style bound: `max(e, r_o) + 3`, or `σ` when ACM.
    pub fn numreg(&self) -> Degree {
        match self.h1.max_support() {
            Some(ro) => self.e_index().max(ro) + 3,
            None => self.sigma(),
        }
    }

    /// `e = r_o` and `h¹ = h²` on `[r_a, r_o]`.
    pub fn equal_cohomology(&self) -> Result<bool> {
        let ra = self.r_a()?;
        let ro = self.r_o()?;
        Ok(self.e_index() == ro && (ra..=ro).all(|t| self.h2(t) == self.h1_at(t)))
    }

    /// `e = r_o` and `h¹ = h²` in the last `r` degrees of the module.
    pub fn equal_in_last(&self, r: i64) -> Result<bool> {
        let ro = self.r_o()?;
        let diam = self.diam();
        if r < 1 || r > diam {
            return Err(LiaisonError::Precondition(format!(
                "number of places r = {r} must lie in 1..={diam}"
            )));
        }
        Ok(self.e_index() == ro && (ro - r + 1..=ro).all(|t| self.h2(t) == self.h1_at(t)))
    }

    pub fn summary(&self) -> CurveSummary {
        CurveSummary {
            degree: self.degree(),
            genus: self.genus(),
            e: self.e_index(),
            sigma: self.sigma(),
            alpha: self.alpha(),
            r_a: self.r_a().ok(),
            r_o: self.r_o().ok(),
            diam: self.diam(),
            s: self.s_inv(),
            t: self.t_inv(),
            numreg: self.numreg(),
            gamma: self.gamma(),
            equal_cohomology: self.equal_cohomology().ok(),
        }
    }

    /// Consistency checks on the numerical data. Never panics; an empty list
    /// means the data is usable.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Some(lo) = self.delta2.min_support() {
            if lo < 0 {
                out.push(Violation::new(
                    "delta2-support",
                    Some(lo),
                    "second difference must vanish in negative degrees",
                ));
            }
        }
        if self.delta2.value_at(0) != 1 {
            out.push(Violation::new(
                "hilbert-at-zero",
                Some(0),
                format!("H(C,0) must be 1, got {}", self.delta2.value_at(0)),
            ));
        }
        if self.degree() < 1 {
            out.push(Violation::new(
                "degree",
                None,
                format!("degree must be positive, got {}", self.degree()),
            ));
        }
        for (t, v) in self.h1.iter() {
            if v < 0 {
                out.push(Violation::new("h1-nonnegative", Some(t), format!("h1 = {v}")));
            }
        }
        if !out.is_empty() {
            return out;
        }

        let d = self.degree();
        let mut t = 0;
        loop {
            let h = self.hilbert(t);
            let s = ambient_dim(t, 3);
            if h < 0 || h > s {
                out.push(Violation::new(
                    "hilbert-range",
                    Some(t),
                    format!("H(C,t) = {h} outside [0, dim S_t = {s}]"),
                ));
                break;
            }
            // Past σ, H grows by d per step while dim S_t grows by C(t+3,2).
            if t >= self.sigma() && ambient_dim(t + 1, 2) >= d {
                break;
            }
            t += 1;
        }

        let lo = self.h1.min_support().unwrap_or(0).min(0) - 3;
        let hi = self.numreg() + 1;
        for t in lo..=hi {
            let h2 = self.h2(t);
            if h2 < 0 {
                out.push(Violation::new("h2-nonnegative", Some(t), format!("h2 = {h2}")));
            }
        }
        // Below the window h² = −P(C,t), which only grows as t decreases.
        if -self.hilbert_poly(lo - 1) < 0 {
            out.push(Violation::new(
                "h2-nonnegative",
                Some(lo - 1),
                format!("h2 = {}", -self.hilbert_poly(lo - 1)),
            ));
        }

        let g = self.genus();
        let stable = self.e_index().max(self.h1.max_support().unwrap_or(Degree::MIN)) + 1;
        for t in stable..stable + 3 {
            let g_t = d * t + 1 - self.hilbert(t);
            if g_t != g {
                out.push(Violation::new(
                    "genus-consistency",
                    Some(t),
                    format!("d·t + 1 − H(C,t) = {g_t}, expected {g}"),
                ));
            }
        }

        // H = P + h² − h¹ taken to second differences: Δ²H = Δ²h² − Δ²h¹.
        let h2_seq = FinSeq::from_fn(lo - 2, hi + 2, |t| self.h2(t));
        let d2h2 = h2_seq.diff().diff();
        let d2h1 = self.h1.diff().diff();
        for t in lo..=hi + 2 {
            let lhs = self.delta2.value_at(t);
            let rhs = d2h2.value_at(t) - d2h1.value_at(t);
            if lhs != rhs {
                out.push(Violation::new(
                    "second-difference-identity",
                    Some(t),
                    format!("Δ²H = {lhs} but Δ²h² − Δ²h¹ = {rhs}"),
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_skew_lines_invariants() {
        let c = fixtures::two_skew_lines();
        assert!(c.validate().is_empty());
        assert_eq!(c.degree(), 2);
        assert_eq!(c.hilbert(1), 4);
        assert_eq!(c.hilbert(-1), 0);
        assert_eq!(c.genus(), -1);
        assert_eq!(c.h2(-2), 2);
        assert_eq!(c.e_index(), -2);
        assert_eq!(c.r_a().unwrap(), 0);
        assert_eq!(c.r_o().unwrap(), 0);
        assert_eq!(c.diam(), 1);
        assert_eq!(c.sigma(), 3);
        assert_eq!(c.alpha(), 2);
        assert_eq!(c.gamma(), FinSeq::new(0, vec![-1, -1, 3, -1]));
        assert_eq!((c.s_inv(), c.t_inv()), (2, 2));
        assert_eq!(c.numreg(), 3);
        assert!(!c.equal_cohomology().unwrap());
    }

    #[test]
    fn l41_minimal_invariants() {
        let c = fixtures::l41_minimal();
        assert!(c.validate().is_empty(), "{:?}", c.validate());
        assert_eq!(c.degree(), 52);
        assert_eq!(c.hilbert(9), 220);
        assert_eq!(c.hilbert(12), 377);
        assert_eq!(c.genus(), 248);
        assert_eq!(c.h2(7), 3);
        assert_eq!(c.e_index(), 7);
        assert_eq!((c.r_a().unwrap(), c.r_o().unwrap(), c.diam()), (8, 9, 2));
        assert_eq!(c.sigma(), 12);
        assert_eq!(c.alpha(), 10);
        let mut gamma = vec![-1; 10];
        gamma.extend([12, -1, -1]);
        assert_eq!(c.gamma(), FinSeq::new(0, gamma));
        assert_eq!((c.s_inv(), c.t_inv()), (10, 10));
        assert_eq!(c.numreg(), 12);
        assert!(!c.equal_cohomology().unwrap());
        assert!(!c.equal_in_last(1).unwrap());
    }

    #[test]
    fn small_equal_cohomology_curve() {
        let c = fixtures::two_skew_lines_min_eqcoh();
        assert!(c.validate().is_empty());
        assert_eq!(c.genus(), 3);
        assert_eq!(c.h2(1), 1);
        assert_eq!(c.e_index(), 1);
        assert!(c.equal_cohomology().unwrap());
        assert!(c.equal_in_last(1).unwrap());
    }

    #[test]
    fn acm_curve_invariants() {
        let c = CurveInvariants::acm(FinSeq::new(0, vec![1, 2, 2]));
        assert!(c.validate().is_empty());
        assert_eq!(c.diam(), 0);
        assert_eq!(c.sigma(), 3);
        assert_eq!(c.numreg(), 3);
        assert_eq!(c.gamma(), FinSeq::new(0, vec![-1, -1, 0, 2]));
        assert_eq!((c.s_inv(), c.t_inv()), (2, 3));
        assert_eq!(c.r_a(), Err(LiaisonError::Acm("r_a")));
        assert!(c.equal_cohomology().is_err());
    }

    #[test]
    fn equal_in_last_range_checked() {
        let c = fixtures::l41_minimal();
        assert!(c.equal_in_last(0).is_err());
        assert!(c.equal_in_last(3).is_err());
    }

    #[test]
    fn validate_flags_negative_h2() {
        // Two skew lines declared ACM: h2(0) = H(0) − P(0) = 1 − 2.
        let c = CurveInvariants::acm(FinSeq::new(0, vec![1, 2, -1]));
        let v = c.validate();
        assert!(v
            .iter()
            .any(|v| v.check == "h2-nonnegative" && v.degree == Some(0) && v.detail == "h2 = -1"));
    }

    #[test]
    fn oversized_module_is_numerically_consistent() {
        // h1 enters h2 additively, so raising h1 never breaks the identities.
        let c = CurveInvariants::from_parts(
            FinSeq::new(0, vec![1, 2, -1]),
            FinSeq::singleton(0, 5),
        );
        assert!(c.validate().is_empty());
        assert_eq!(c.h2(0), 4);
    }

    #[test]
    fn validate_flags_bad_constant_term() {
        let c = CurveInvariants::acm(FinSeq::new(0, vec![2, 1]));
        assert!(c.validate().iter().any(|v| v.check == "hilbert-at-zero"));
        assert!(CurveInvariants::try_new(FinSeq::new(0, vec![2, 1]), FinSeq::zero()).is_err());
    }

    #[test]
    fn serde_shape() {
        let c = fixtures::two_skew_lines();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"delta2":{"offset":0,"values":[1,2,-1]},"h1":{"offset":0,"values":[1]}}"#
        );
        let back: CurveInvariants = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
