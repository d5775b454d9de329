//! Postulation characters, the `θ` character of a dominating curve, and
//! numerical screens for integral curves in a liaison class.

use serde::{Deserialize, Serialize};

use crate::bdl::{BasicDoubleLink, Chain};
use crate::curve::CurveInvariants;
use crate::eqcoh::{class_has_eqcoh, construct_min_eqcoh, ClassData};
use crate::error::{LiaisonError, Result};
use crate::genbound::{buchsbaum_criterion, maxcorank_inequalities};
use crate::seq::{Degree, FinSeq};
use crate::verdict::Verdict;

/// `θ_C` together with the interval `[t(C₀)+h, t₁(C₀)+h−1]` it is tested
/// against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaProfile {
    pub theta: FinSeq,
    pub height: i64,
    /// Present only when `t₁(C₀)` is known; may be empty (`lo > hi`).
    pub interval: Option<(Degree, Degree)>,
}

impl ThetaProfile {
    pub fn connected_about(&self) -> Result<bool> {
        let (a, b) = self.interval.ok_or(LiaisonError::MissingInput("t1"))?;
        Ok(connected_about(&self.theta, a, b))
    }
}

fn interval(c0: &CurveInvariants, h: i64, t1: Option<Degree>) -> Option<(Degree, Degree)> {
    t1.map(|t1| (c0.t_inv() + h, t1 + h - 1))
}

/// `θ_C(n)`: `γ_C(n)` on `[s(C), s(C₀)+h)`, `γ_C(n) − γ_{C₀}(n−h)` from
/// `s(C₀)+h` on, zero below `s(C)`.
///
/// Domination is checked numerically: `h¹(C)` must be `h¹(C₀)` moved up by
/// `h`.
pub fn compute_theta(
    c: &CurveInvariants,
    c0: &CurveInvariants,
    h: i64,
    t1: Option<Degree>,
) -> Result<ThetaProfile> {
    if c.h1() != &c0.h1().shift(h) {
        return Err(LiaisonError::Domination(format!(
            "h1 = {} is not h1(C0) = {} shifted by {h}",
            c.h1(),
            c0.h1()
        )));
    }
    let gc = c.gamma();
    let g0 = c0.gamma();
    let s = c.s_inv();
    let split = c0.s_inv() + h;
    let hi = c.sigma().max(c0.sigma() + h) + 1;
    let theta = FinSeq::from_fn(s, hi, |n| {
        if n < split {
            gc.value_at(n)
        } else {
            gc.value_at(n) - g0.value_at(n - h)
        }
    });
    Ok(ThetaProfile {
        theta,
        height: h,
        interval: interval(c0, h, t1),
    })
}

/// Closed form of `θ` for the minimal equal-cohomology curve at height `h`:
/// `−γ_{C₀}(n−h)` for `r_a(C₀)+h+2 < n ≤ σ(C₀)+h`, zero elsewhere.
pub fn min_eqcoh_theta(cd: &ClassData) -> Result<ThetaProfile> {
    let c0 = &cd.minimal;
    if !class_has_eqcoh(cd, c0.diam())? {
        return Err(LiaisonError::Precondition(
            "class has no curve with equal cohomology".into(),
        ));
    }
    let ra = c0.r_a()?;
    let h = -c0.delta2().value_at(ra + 2);
    let g0 = c0.gamma();
    let theta = FinSeq::from_fn(ra + h + 3, c0.sigma() + h, |n| -g0.value_at(n - h));
    Ok(ThetaProfile {
        theta,
        height: h,
        interval: interval(c0, h, cd.t1),
    })
}

/// For `n > a`: `θ(n) > 0 ⇒ θ(n−1) > 0`.
pub fn connected_geq(theta: &FinSeq, a: Degree) -> bool {
    theta
        .iter()
        .filter(|&(n, v)| n > a && v > 0)
        .all(|(n, _)| theta.value_at(n - 1) > 0)
}

/// For `n < b`: `θ(n) > 0 ⇒ θ(n+1) > 0`.
pub fn connected_leq(theta: &FinSeq, b: Degree) -> bool {
    theta
        .iter()
        .filter(|&(n, v)| n < b && v > 0)
        .all(|(n, _)| theta.value_at(n + 1) > 0)
}

/// Connected in degrees `≥ a` and `≤ b`, and positive on `[a, b]`.
pub fn connected_about(theta: &FinSeq, a: Degree, b: Degree) -> bool {
    connected_geq(theta, a) && connected_leq(theta, b) && (a..=b).all(|n| theta.value_at(n) > 0)
}

/// `Δ²H(C₀, r_a+2) < Δ²H(C₀, r_a+3) < … < Δ²H(C₀, σ−1) < 0`.
pub fn strict_tail(c0: &CurveInvariants) -> Result<(bool, Vec<i64>)> {
    let ra = c0.r_a()?;
    let tail = c0.delta2().window(ra + 2, c0.sigma() - 1);
    let holds = tail.windows(2).all(|w| w[0] < w[1]) && tail.last().is_none_or(|&v| v < 0);
    Ok((holds, tail))
}

/// Outcome of the search for an equal-cohomology curve with connected `θ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaCohDecision {
    pub exists: bool,
    pub conditions: Vec<Verdict>,
    pub witness: Option<ThetaWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaWitness {
    pub chain: Chain,
    pub curve: CurveInvariants,
    pub theta: ThetaProfile,
    /// The curve has equal cohomology and its `θ` is connected about the
    /// interval.
    pub verified: bool,
}

/// Decides whether the class contains a curve with equal cohomology whose
/// `θ` is connected about `[t(C₀)+h, t₁(C₀)+h−1]`, for `t(C₀) < t₁(C₀)`.
///
/// When it does, the witness is the minimal equal-cohomology curve followed
/// by `r_a(C₀) + 3 − t(C₀)` links of degree `r_a(C₀) + h + 3`.
pub fn theta_coh_decision(cd: &ClassData) -> Result<ThetaCohDecision> {
    let c0 = &cd.minimal;
    let t1 = cd.require_t1()?;
    let t0 = c0.t_inv();
    if t0 >= t1 {
        return Err(LiaisonError::Precondition(format!(
            "t(C0) = {t0} is not below t1 = {t1}; use the trivial-case check"
        )));
    }
    let sigma = c0.sigma();
    let has_eqcoh = class_has_eqcoh(cd, c0.diam())?;
    let (strict, tail) = strict_tail(c0)?;
    let conditions = vec![
        Verdict::new(
            "class has equal cohomology curves",
            has_eqcoh,
            "tail of Δ²H(C0) non-decreasing and non-positive, e ≤ r_o",
            "existence of equal-cohomology curves",
        ),
        Verdict::new(
            "t1 ≤ σ + 1",
            t1 <= sigma + 1,
            format!("t1 = {t1}, σ(C0) = {sigma}"),
            "equal cohomology with connected θ",
        ),
        Verdict::new(
            "strict negative tail",
            strict,
            format!("Δ²H(C0, r_a+2 ..= σ−1) = {tail:?}"),
            "equal cohomology with connected θ",
        ),
    ];
    let exists = conditions.iter().all(|v| v.holds);
    let witness = if exists {
        Some(theta_witness(cd, t0, t1)?)
    } else {
        None
    };
    Ok(ThetaCohDecision {
        exists,
        conditions,
        witness,
    })
}

fn theta_witness(cd: &ClassData, t0: Degree, t1: Degree) -> Result<ThetaWitness> {
    let c0 = &cd.minimal;
    let min = construct_min_eqcoh(cd)?;
    let h = min.height as i64;
    let ra = c0.r_a()?;
    let extra = (ra + 3 - t0).max(0);
    let mut links = min.chain.links.clone();
    links.extend((0..extra).map(|_| BasicDoubleLink::unit(ra + h + 3)));
    let chain = Chain::new(c0.clone(), links)?;
    let curve = chain.result()?;
    let theta = compute_theta(&curve, c0, h + extra, Some(t1))?;
    let verified = curve.equal_cohomology()? && theta.connected_about()?;
    Ok(ThetaWitness {
        chain,
        curve,
        theta,
        verified,
    })
}

/// The minimal equal-cohomology curve has connected `θ` exactly when `C₀`
/// itself has equal cohomology and `t(C₀) = t₁(C₀)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialCase {
    pub holds: bool,
    /// `θ` of the minimal equal-cohomology curve is connected about its
    /// interval.
    pub theta_connected: bool,
    pub consistent: bool,
}

pub fn trivial_case_check(cd: &ClassData) -> Result<TrivialCase> {
    let c0 = &cd.minimal;
    let t1 = cd.require_t1()?;
    let holds = c0.equal_cohomology()? && c0.t_inv() == t1;
    let theta_connected = min_eqcoh_theta(cd)?.connected_about()?;
    Ok(TrivialCase {
        holds,
        theta_connected,
        consistent: holds == theta_connected,
    })
}

/// Result of the necessary conditions for an integral curve with a
/// generator of maximal degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegralStatus {
    /// Necessary conditions met; existence is not claimed.
    Possibly,
    RuledOut,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralVerdict {
    pub status: IntegralStatus,
    pub conditions: Vec<Verdict>,
}

/// Necessary conditions for the class to contain an integral curve with
/// `ω = σ + diam`, assuming `t(C₀) < t₁(C₀)`.
pub fn integral_necessary(cd: &ClassData) -> Result<IntegralVerdict> {
    let c0 = &cd.minimal;
    if let Some(t1) = cd.t1 {
        if c0.t_inv() >= t1 {
            return Ok(IntegralVerdict {
                status: IntegralStatus::NotApplicable,
                conditions: vec![Verdict::new(
                    "t(C0) < t1",
                    false,
                    format!("t(C0) = {} and t1 = {t1}", c0.t_inv()),
                    "integral curves with a generator of maximal degree",
                )],
            });
        }
    }
    let (strict, tail) = strict_tail(c0)?;
    let mut conditions = vec![Verdict::new(
        "strict negative tail",
        strict,
        format!("Δ²H(C0, r_a+2 ..= σ−1) = {tail:?}"),
        "integral curves with a generator of maximal degree",
    )];
    if let Some(dims) = cd.buchsbaum_values() {
        conditions.push(Verdict::new(
            "strict Buchsbaum dimensions",
            buchsbaum_criterion(dims, true)?,
            format!("n_i > 3 n_(i+1) on {dims:?}"),
            "Buchsbaum classes with integral maximal-generator curves",
        ));
    }
    if c0.e_index() < c0.r_a()? {
        conditions.push(Verdict::new(
            "strict maximal-corank inequality",
            maxcorank_inequalities(c0.h1(), true),
            format!("h1(t) > 3h1(t+1) − 3h1(t+2) + h1(t+3) on h1 = {}", c0.h1()),
            "maximal-corank classes with integral maximal-generator curves",
        ));
    }
    let status = if conditions.iter().all(|v| v.holds) {
        IntegralStatus::Possibly
    } else {
        IntegralStatus::RuledOut
    };
    Ok(IntegralVerdict { status, conditions })
}
