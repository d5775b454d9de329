//! Bounds on the largest degree `ω` of a minimal generator, and which
//! liaison classes contain a curve attaining `ω = σ + diam`.

use serde::{Deserialize, Serialize};

use crate::bdl::{apply_bdl, BasicDoubleLink, Chain};
use crate::curve::{CurveInvariants, GeneratorDegreeInterval};
use crate::eqcoh::{construct_equal_in_last, tail, ClassData};
use crate::error::{LiaisonError, Result};
use crate::seq::{Degree, FinSeq};
use crate::verdict::Verdict;

/// Cohomological diameters of a locally Cohen–Macaulay subscheme `V ⊂ Pⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDiameters {
    pub ambient_n: i64,
    pub dim_v: i64,
    pub sigma_v: Degree,
    /// `diam H^i_*(I_V)` for `i = 1..=dim_v`.
    pub diams: Vec<i64>,
}

impl CohomologyDiameters {
    pub fn of_curve(c: &CurveInvariants) -> Self {
        CohomologyDiameters {
            ambient_n: 3,
            dim_v: 1,
            sigma_v: c.sigma(),
            diams: vec![c.diam()],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim_v < 1 || self.ambient_n <= self.dim_v {
            return Err(LiaisonError::InvalidData(format!(
                "need 1 ≤ dim V < n, got dim V = {}, n = {}",
                self.dim_v, self.ambient_n
            )));
        }
        if self.diams.len() != self.dim_v as usize {
            return Err(LiaisonError::InvalidData(format!(
                "expected {} diameters, got {}",
                self.dim_v,
                self.diams.len()
            )));
        }
        if self.diams.iter().any(|&d| d < 0) {
            return Err(LiaisonError::InvalidData("diameters must be nonnegative".into()));
        }
        Ok(())
    }
}

/// `dim_k K_t` for the kernel of a general linear form on the deficiency
/// module. Supplied by the caller; equal to the module for Buchsbaum curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelProfile {
    pub dims: FinSeq,
}

impl KernelProfile {
    pub fn new(dims: FinSeq) -> Self {
        KernelProfile { dims }
    }

    pub fn diam(&self) -> i64 {
        match (self.dims.min_support(), self.dims.max_support()) {
            (Some(a), Some(b)) => b - a + 1,
            _ => 0,
        }
    }

    fn check_against(&self, c: &CurveInvariants) -> Result<()> {
        for (t, k) in self.dims.iter() {
            if k < 0 || k > c.h1_at(t) {
                return Err(LiaisonError::InvalidData(format!(
                    "kernel dimension {k} at t={t} outside [0, h1 = {}]",
                    c.h1_at(t)
                )));
            }
        }
        Ok(())
    }
}

/// `ω(I_C) ≤ σ(C) + diam H¹_*`.
pub fn omega_bound_curve(c: &CurveInvariants) -> Degree {
    c.sigma() + c.diam()
}

/// `ω(I_V) ≤ σ(V) + max_i diam H^i_*`; for surfaces only the `H²` diameter
/// counts.
pub fn omega_bound_general(cd: &CohomologyDiameters) -> Result<Degree> {
    cd.validate()?;
    let extra = if cd.dim_v == 2 {
        cd.diams[1]
    } else {
        cd.diams.iter().copied().max().unwrap()
    };
    Ok(cd.sigma_v + extra)
}

/// Necessary condition for `ω = σ + k`: `e = r_o` and `h¹ = h²` on
/// `[e − k + 1, e]`.
pub fn necessary_for_omega(c: &CurveInvariants, k: i64) -> Result<bool> {
    if k <= 0 {
        return Err(LiaisonError::Precondition(format!("k must be positive, got {k}")));
    }
    let ro = c.r_o()?;
    let e = c.e_index();
    Ok(e == ro && (e - k + 1..=e).all(|t| c.h1_at(t) == c.h2(t)))
}

/// A chain whose last link is a minimal generator of degree `σ + diam`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxGeneratorConstruction {
    pub chain: Chain,
    pub result: CurveInvariants,
    pub omega: GeneratorDegreeInterval,
    pub notes: Vec<String>,
}

/// Precondition of [`construct_max_generator`]: `e(C₀) ≤ r_o(C₀)` and
/// `Δ²H(C₀, r_a+2) ≤ … ≤ Δ²H(C₀, r_o+2) < 0`.
pub fn max_generator_precondition(cd: &ClassData) -> Result<()> {
    let c0 = &cd.minimal;
    let diam = c0.diam();
    if diam == 0 {
        return Err(LiaisonError::Acm("maximal generator construction"));
    }
    let ro = c0.r_o()?;
    let e = c0.e_index();
    if e > ro {
        return Err(LiaisonError::Precondition(format!(
            "e(C0) = {e} exceeds r_o(C0) = {ro}"
        )));
    }
    let tail = tail(c0, diam)?;
    if let Some(i) = (1..tail.len()).find(|&i| tail[i - 1] > tail[i]) {
        return Err(LiaisonError::Precondition(format!(
            "tail {tail:?} of the second difference decreases at position {}",
            i + 1
        )));
    }
    let last = *tail.last().unwrap();
    if last == 0 {
        return Err(LiaisonError::Precondition(format!(
            "bound not achievable by this construction; last tail entry is 0 (tail {tail:?})"
        )));
    }
    if last > 0 {
        return Err(LiaisonError::Precondition(format!(
            "tail {tail:?} of the second difference is not negative"
        )));
    }
    Ok(())
}

/// Raises the tail of `Δ²H(C₀)` to `(−1, …, −1)`, then adds one link whose
/// bump covers the whole shifted tail. That final form is a minimal generator
/// of degree `σ + diam`.
pub fn construct_max_generator(cd: &ClassData) -> Result<MaxGeneratorConstruction> {
    max_generator_precondition(cd)?;
    let c0 = &cd.minimal;
    let r = c0.diam();
    let eq = construct_equal_in_last(cd, r)?;
    let mut links = eq.chain.links.clone();
    let last = links.pop().expect("negative tail needs at least one link");
    let stages = eq.chain.stages()?;
    let before = &stages[stages.len() - 2];
    let f = before.r_o()? + 4;
    if last.f != f {
        return Err(LiaisonError::Precondition(format!(
            "final link degree {} does not cover the tail exactly (expected {f})",
            last.f
        )));
    }
    let m = eq.height as i64;
    let mut notes = eq.notes;
    notes.push(format!(
        "final link degree r_o(C0) + m + 3 = {f}; r_o(C0) + m + 4 would give {}",
        f + 1
    ));
    links.push(BasicDoubleLink::unit(f));
    let result = apply_bdl(before, BasicDoubleLink::unit(f))?;
    debug_assert_eq!(f, c0.r_o()? + m + 3);
    let bound = omega_bound_curve(&result);
    if bound != f {
        return Err(LiaisonError::Precondition(format!(
            "certified generator degree {f} differs from σ + diam = {bound}"
        )));
    }
    Ok(MaxGeneratorConstruction {
        chain: Chain {
            base: c0.clone(),
            links,
        },
        result,
        omega: GeneratorDegreeInterval::exact(f),
        notes,
    })
}

/// `h¹(t) ≥ 3h¹(t+1) − 3h¹(t+2) + h¹(t+3)` for `t = r_a..=r_o` (or `>` when
/// `strict`).
pub fn maxcorank_inequalities(h1: &FinSeq, strict: bool) -> bool {
    let (Some(ra), Some(ro)) = (h1.min_support(), h1.max_support()) else {
        return true;
    };
    (ra..=ro).all(|t| {
        let lhs = h1.value_at(t);
        let rhs = 3 * h1.value_at(t + 1) - 3 * h1.value_at(t + 2) + h1.value_at(t + 3);
        if strict {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    })
}

/// For a class whose minimal curve has maximal corank (`e < r_a`), whether it
/// contains a curve with `ω = σ + diam`.
pub fn maxcorank_criterion(cd: &ClassData) -> Result<bool> {
    let c0 = &cd.minimal;
    let ra = c0.r_a()?;
    let e = c0.e_index();
    if e >= ra {
        return Err(LiaisonError::Precondition(format!(
            "minimal curve does not have maximal corank: e = {e} ≥ r_a = {ra}"
        )));
    }
    Ok(maxcorank_inequalities(c0.h1(), false))
}

/// Buchsbaum class `(n₁, …, n_r)`: `n_i ≥ 3 n_{i+1}` (or `>` when `strict`).
pub fn buchsbaum_criterion(dims: &[i64], strict: bool) -> Result<bool> {
    match (dims.first(), dims.last()) {
        (Some(&a), Some(&b)) if a > 0 && b > 0 && dims.iter().all(|&n| n >= 0) => {}
        _ => {
            return Err(LiaisonError::InvalidData(format!(
                "module dimensions {dims:?} need positive ends and no negative entries"
            )))
        }
    }
    Ok(dims.windows(2).all(|w| {
        if strict {
            w[0] > 3 * w[1]
        } else {
            w[0] >= 3 * w[1]
        }
    }))
}

/// Quick reasons a class cannot contain a curve with `ω = σ + diam`. Each
/// verdict holds when the class passes that screen.
pub fn obstruction_screens(cd: &ClassData, kernel: Option<&KernelProfile>) -> Vec<Verdict> {
    let c0 = &cd.minimal;
    let mut out = Vec::new();
    let diam = c0.diam();
    if diam == 0 {
        out.push(Verdict::new(
            "nonzero-module",
            false,
            "ACM class: no deficiency module, the bound reduces to ω ≤ σ",
            "generator degree bound",
        ));
        return out;
    }
    let ro = c0.r_o().unwrap();
    let alpha = c0.alpha();
    let max_rank = ro < alpha;
    let blocked = max_rank && diam >= 3;
    out.push(Verdict::new(
        "maximal-rank screen",
        !blocked,
        if blocked {
            format!("r_o = {ro} < α = {alpha} and diam = {diam} ≥ 3")
        } else if max_rank {
            format!("maximal rank but diam = {diam} < 3")
        } else {
            format!("not maximal rank: r_o = {ro} ≥ α = {alpha}")
        },
        "maximal rank persists along the class",
    ));

    let auto;
    let kernel = match (kernel, &cd.buchsbaum_dims) {
        (Some(k), _) => Some(k),
        (None, Some(dims)) => {
            auto = KernelProfile::new(dims.clone());
            Some(&auto)
        }
        (None, None) => None,
    };
    match kernel {
        Some(k) => {
            let dk = k.diam();
            out.push(Verdict::new(
                "kernel screen",
                dk >= diam,
                format!("diam K = {dk}, diam M = {diam}"),
                "refined bound ω ≤ σ + diam K",
            ));
        }
        None => out.push(Verdict::new(
            "kernel screen",
            true,
            "no kernel profile supplied; screen not applied",
            "refined bound ω ≤ σ + diam K",
        )),
    }

    let pre = max_generator_precondition(cd);
    out.push(Verdict::new(
        "tail screen",
        pre.is_ok(),
        match pre {
            Ok(()) => "tail of Δ²H(C0) is non-decreasing and strictly negative".to_string(),
            Err(e) => e.to_string(),
        },
        "maximal generator construction",
    ));
    out
}

/// Window and floors forced on `dim K_t` by equal cohomology in the last `r`
/// places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelConstraints {
    /// `[r_o − r + 1, r_o]`, empty when `r = 1`.
    pub window: Option<(Degree, Degree)>,
    /// Least dimensions compatible with `K_t > K_{t+1} > 0` on the window.
    pub floors: FinSeq,
    /// `σ + diam K` when a profile is supplied.
    pub refined_bound: Option<Degree>,
}

/// Equal cohomology in the last `r ≥ 2` places forces
/// `dim K_t > dim K_{t+1} > 0` for `t = r_o−r+1 ..= r_o−1`.
pub fn kernel_constraints(
    c: &CurveInvariants,
    r: i64,
    kernel: Option<&KernelProfile>,
) -> Result<KernelConstraints> {
    if !c.equal_in_last(r)? {
        return Err(LiaisonError::Precondition(format!(
            "curve does not have equal cohomology in the last {r} places"
        )));
    }
    let ro = c.r_o()?;
    let (window, floors) = if r >= 2 {
        let lo = ro - r + 1;
        (Some((lo, ro)), FinSeq::from_fn(lo, ro, |t| ro - t + 1))
    } else {
        (None, FinSeq::zero())
    };
    let refined_bound = match kernel {
        Some(k) => {
            k.check_against(c)?;
            for t in ro - r + 1..ro {
                let (a, b) = (k.dims.value_at(t), k.dims.value_at(t + 1));
                if !(a > b && b > 0) {
                    return Err(LiaisonError::InvalidData(format!(
                        "kernel dimensions must satisfy K_t > K_(t+1) > 0 at t={t}, got {a}, {b}"
                    )));
                }
            }
            Some(c.sigma() + k.diam())
        }
        None => None,
    };
    Ok(KernelConstraints {
        window,
        floors,
        refined_bound,
    })
}

/// `Δ¹H(Z,t) = Δ²H(C,t) − Δ¹K(t−1)` for a general plane section `Z`.
///
/// Rejects pairs `(C, K)` for which `Z` could not be a set of points in the
/// plane, or which break the kernel conditions of equal cohomology.
pub fn hyperplane_section(c: &CurveInvariants, kernel: &KernelProfile) -> Result<FinSeq> {
    kernel.check_against(c)?;
    let dk = kernel.dims.diff();
    let hi = c.sigma().max(kernel.dims.max_support().map_or(0, |t| t + 2)) + 1;
    let section = FinSeq::from_fn(0, hi, |t| c.delta2().value_at(t) - dk.value_at(t - 1));
    if let Some((t, v)) = section.iter().find(|&(_, v)| v < 0) {
        return Err(LiaisonError::InvalidData(format!(
            "Δ¹H(Z,{t}) = {v} is negative"
        )));
    }
    // Δ¹H(Z,t) = t + 1 up to the least degree of a curve through Z, and is
    // non-increasing from there on.
    let start = (0..=hi)
        .find(|&t| section.value_at(t) < t + 1)
        .unwrap_or(hi);
    for t in start.max(1)..=hi {
        if section.value_at(t) > section.value_at(t - 1) && t > start {
            return Err(LiaisonError::InvalidData(format!(
                "Δ¹H(Z,t) increases at t={t}: {} → {}",
                section.value_at(t - 1),
                section.value_at(t)
            )));
        }
    }
    if !c.is_acm() {
        let places = (2..=c.diam()).rev().find(|&r| c.equal_in_last(r).unwrap_or(false));
        if let Some(r) = places {
            kernel_constraints(c, r, Some(kernel))?;
        }
    }
    Ok(section)
}
