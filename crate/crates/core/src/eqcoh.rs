//! Curves with equal cohomology inside an even liaison class.
//!
//! A curve has equal cohomology when `e = r_o` and `h¹ = h²` on the whole
//! module window, which is the same as `Δ²H(C,t) = 0` for `t ≥ r_a + 2`. The
//! class contains such curves exactly when the tail of `Δ²H` of its minimal
//! curve is non-decreasing and non-positive; the constructions below raise
//! that tail with `(1, d)` links until it vanishes.

use serde::{Deserialize, Serialize};

use crate::bdl::{enumerate_levels, BasicDoubleLink, Chain, ChainOutcome, EnumOptions};
use crate::curve::CurveInvariants;
use crate::error::{LiaisonError, Result};
use crate::par::Execution;
use crate::seq::{Degree, FinSeq};

/// An even liaison class, given by its minimal curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub minimal: CurveInvariants,
    /// Component dimensions of a Buchsbaum deficiency module, placed at the
    /// degrees of `h¹` of the minimal curve.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buchsbaum_dims: Option<FinSeq>,
    /// `t₁(C₀)`: least degree of a surface meeting a minimal-degree surface
    /// through `C₀` properly. Not computable from Hilbert data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<Degree>,
}

impl ClassData {
    pub fn new(minimal: CurveInvariants) -> Self {
        ClassData {
            minimal,
            buchsbaum_dims: None,
            t1: None,
        }
    }

    /// Buchsbaum class: the module dimensions are those of `h¹`.
    pub fn buchsbaum(minimal: CurveInvariants) -> Self {
        let dims = minimal.h1().clone();
        ClassData {
            minimal,
            buchsbaum_dims: Some(dims),
            t1: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(v) = self.minimal.validate().first() {
            return Err(LiaisonError::InvalidData(v.to_string()));
        }
        if let Some(dims) = &self.buchsbaum_dims {
            if dims != self.minimal.h1() {
                return Err(LiaisonError::InvalidData(format!(
                    "Buchsbaum dimensions {dims} differ from h1 of the minimal curve {}",
                    self.minimal.h1()
                )));
            }
            if dims.is_zero() || dims.iter().any(|(_, v)| v < 0) {
                return Err(LiaisonError::InvalidData(
                    "Buchsbaum dimensions must be nonnegative with positive ends".into(),
                ));
            }
        }
        if let Some(t1) = self.t1 {
            let t = self.minimal.t_inv();
            if t1 < t {
                return Err(LiaisonError::InvalidData(format!(
                    "t1 = {t1} is below t(C0) = {t}"
                )));
            }
        }
        Ok(())
    }

    pub fn require_t1(&self) -> Result<Degree> {
        self.t1.ok_or(LiaisonError::MissingInput("t1"))
    }

    pub fn buchsbaum_values(&self) -> Option<&[i64]> {
        self.buchsbaum_dims.as_ref().map(|d| d.values())
    }
}

/// `Δ²H(C, r_o−r+3 ..= r_o+2)`: the last `r` entries that must vanish for
/// equal cohomology in the last `r` places.
pub fn tail(c: &CurveInvariants, r: i64) -> Result<Vec<i64>> {
    let ro = c.r_o()?;
    Ok(c.delta2().window(ro - r + 3, ro + 2))
}

fn check_places(c: &CurveInvariants, r: i64) -> Result<()> {
    let diam = c.diam();
    if diam == 0 {
        return Err(LiaisonError::Acm("equal cohomology"));
    }
    if r < 1 || r > diam {
        return Err(LiaisonError::Precondition(format!(
            "number of places r = {r} must lie in 1..={diam}"
        )));
    }
    Ok(())
}

/// Whether the class contains a curve with equal cohomology in the last `r`
/// places: `e(C₀) ≤ r_o(C₀)` and the tail of `Δ²H(C₀)` is non-decreasing and
/// non-positive.
pub fn class_has_eqcoh(cd: &ClassData, r: i64) -> Result<bool> {
    let c0 = &cd.minimal;
    check_places(c0, r)?;
    let tail = tail(c0, r)?;
    let monotone = tail.windows(2).all(|w| w[0] <= w[1]);
    Ok(c0.e_index() <= c0.r_o()? && monotone && *tail.last().unwrap() <= 0)
}

/// A chain from the class minimal curve to a curve with (partial) equal
/// cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqCohConstruction {
    pub chain: Chain,
    pub result: CurveInvariants,
    pub height: usize,
    pub places: i64,
    /// No shorter chain reaches equal cohomology in these places.
    pub certified_min_height: bool,
    pub notes: Vec<String>,
}

/// Degree of the next link: the bump `0..=d−1` must reach the shifted tail
/// entries `t₁ … t_{s−1}` and stop before `t_s`, where `s` is the first strict
/// increase in the tail (or `r + 1` when the tail is flat).
fn next_link_degree(c: &CurveInvariants, r: i64) -> Result<(Degree, i64)> {
    let ro = c.r_o()?;
    let tail = tail(c, r)?;
    let s = (1..tail.len())
        .find(|&i| tail[i - 1] < tail[i])
        .map_or(r + 1, |i| i as i64 + 1);
    Ok((ro - r + s + 3, s))
}

/// Raises the tail of `Δ²H(C₀)` to zero, one `(1, d)` link at a time.
///
/// Every link raises the first tail entry by one, so the height is
/// `−Δ²H(C₀, r_o−r+3)`, which is minimal.
pub fn construct_equal_in_last(cd: &ClassData, r: i64) -> Result<EqCohConstruction> {
    if !class_has_eqcoh(cd, r)? {
        return Err(LiaisonError::Precondition(format!(
            "class has no curve with equal cohomology in the last {r} places"
        )));
    }
    let mut current = cd.minimal.clone();
    let mut links = Vec::new();
    let mut notes = Vec::new();
    while tail(&current, r)?.iter().any(|&v| v != 0) {
        let (d, s) = next_link_degree(&current, r)?;
        let alpha = current.alpha();
        if d < alpha {
            return Err(LiaisonError::NoSurface { f: d, alpha });
        }
        let alternative = current.r_o()? - r + s + 1;
        notes.push(format!(
            "link {}: degree {d} from the bump window (s = {s}); r_o − r + s + 1 would give {alternative}",
            links.len() + 1
        ));
        links.push(BasicDoubleLink::unit(d));
        current = crate::bdl::apply_bdl(&current, BasicDoubleLink::unit(d))?;
    }
    let chain = Chain {
        base: cd.minimal.clone(),
        links,
    };
    Ok(EqCohConstruction {
        height: chain.len(),
        chain,
        result: current,
        places: r,
        certified_min_height: true,
        notes,
    })
}

/// The minimal curve with equal cohomology in the class.
pub fn construct_min_eqcoh(cd: &ClassData) -> Result<EqCohConstruction> {
    construct_equal_in_last(cd, cd.minimal.diam())
}

/// Degrees `d` such that `C:(1,d)` again has equal cohomology:
/// `α(C) ≤ d ≤ r_a(C) + 3`.
pub fn admissible_next_degrees(c: &CurveInvariants) -> Result<(Degree, Degree)> {
    if !c.equal_cohomology()? {
        return Err(LiaisonError::Precondition(
            "curve does not have equal cohomology".into(),
        ));
    }
    Ok((c.alpha(), c.r_a()? + 3))
}

/// Equal-cohomology curves at one height above the class minimal curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqCohLevel {
    pub shift: usize,
    pub min_height: usize,
    /// Full degree sequences from `C₀`, one representative per curve.
    pub curves: Vec<ChainOutcome>,
    pub status: String,
}

/// All equal-cohomology curves at height `shift`, reached from the minimal
/// one by admissible links and deduplicated by `(Δ²H, h¹)`.
pub fn enumerate_eqcoh(cd: &ClassData, shift: usize) -> Result<EqCohLevel> {
    enumerate_eqcoh_with(cd, shift, Execution::default())
}

pub fn enumerate_eqcoh_with(cd: &ClassData, shift: usize, exec: Execution) -> Result<EqCohLevel> {
    Ok(enumerate_eqcoh_levels(cd, shift, exec)?.pop().unwrap())
}

/// Levels `min_height ..= max_shift` (or a single empty level when
/// `max_shift` is below the minimal height).
pub fn enumerate_eqcoh_levels(
    cd: &ClassData,
    max_shift: usize,
    exec: Execution,
) -> Result<Vec<EqCohLevel>> {
    let min = construct_min_eqcoh(cd)?;
    let h0 = min.height;
    if max_shift < h0 {
        return Ok(vec![EqCohLevel {
            shift: max_shift,
            min_height: h0,
            curves: Vec::new(),
            status: format!("no equal-cohomology curve below height {h0}"),
        }]);
    }
    let extra = max_shift - h0;
    let cap = min.result.r_a()? + 3 + extra.saturating_sub(1) as Degree;
    let prune = |c: &CurveInvariants| !c.equal_cohomology().unwrap_or(false);
    let opts = EnumOptions {
        dedup: true,
        exec,
        prune: Some(&prune),
    };
    let prefix = min.chain.degrees();
    let levels = enumerate_levels(&min.result, extra, cap, &opts);
    Ok(levels
        .into_iter()
        .enumerate()
        .map(|(i, outcomes)| {
            let curves: Vec<ChainOutcome> = outcomes
                .into_iter()
                .map(|o| ChainOutcome {
                    degrees: prefix.iter().chain(&o.degrees).copied().collect(),
                    curve: o.curve,
                })
                .collect();
            EqCohLevel {
                shift: h0 + i,
                min_height: h0,
                status: format!("{} curve(s)", curves.len()),
                curves,
            }
        })
        .collect())
}

/// Exhaustive search over `(1, d)` chains from `c0` of height `≤ height`
/// and degrees `≤ cap` for a curve with equal cohomology in the last `r`
/// places. Returns the first hit in (height, lexicographic) order.
///
/// States with a positive entry of `Δ²H` at `t ≥ r_o − r + 3` are dropped: a
/// `(1, d)` link never lowers an entry there, so they cannot reach the goal.
pub fn search_equal_in_last(
    c0: &CurveInvariants,
    r: i64,
    height: usize,
    cap: Degree,
    exec: Execution,
) -> Result<Option<ChainOutcome>> {
    check_places(c0, r)?;
    let hopeless = |c: &CurveInvariants| {
        let ro = c.r_o().unwrap_or(Degree::MAX);
        c.delta2().iter().any(|(t, v)| t >= ro - r + 3 && v > 0)
    };
    let goal = |c: &CurveInvariants| c.equal_in_last(r).unwrap_or(false);
    if goal(c0) {
        return Ok(Some(ChainOutcome {
            degrees: Vec::new(),
            curve: c0.clone(),
        }));
    }
    if hopeless(c0) {
        return Ok(None);
    }
    let opts = EnumOptions {
        dedup: true,
        exec,
        prune: Some(&hopeless),
    };
    Ok(enumerate_levels(c0, height, cap, &opts)
        .into_iter()
        .flatten()
        .find(|o| goal(&o.curve)))
}

/// Every curve with equal cohomology reachable from `c0` by exactly
/// `height` links of degree `≤ cap`, one representative chain each.
pub fn brute_force_eqcoh(
    c0: &CurveInvariants,
    height: usize,
    cap: Degree,
    exec: Execution,
) -> Result<Vec<ChainOutcome>> {
    let r = c0.diam();
    check_places(c0, r)?;
    let hopeless = |c: &CurveInvariants| {
        let ro = c.r_o().unwrap_or(Degree::MAX);
        c.delta2().iter().any(|(t, v)| t >= ro - r + 3 && v > 0)
    };
    let opts = EnumOptions {
        dedup: true,
        exec,
        prune: Some(&hopeless),
    };
    Ok(enumerate_levels(c0, height, cap, &opts)
        .pop()
        .unwrap()
        .into_iter()
        .filter(|o| o.curve.equal_cohomology().unwrap_or(false))
        .collect())
}

/// Number of equal-cohomology curves at height `shift` in a Buchsbaum class:
/// `2^(shift − s)` with `s` the minimal height.
pub fn buchsbaum_count(cd: &ClassData, shift: usize) -> Result<u64> {
    if cd.buchsbaum_dims.is_none() {
        return Err(LiaisonError::Unsupported(
            "closed-form count needs a Buchsbaum class; use enumerate_eqcoh".into(),
        ));
    }
    let s = construct_min_eqcoh(cd)?.height;
    if shift < s {
        return Err(LiaisonError::Precondition(format!(
            "shift {shift} is below the minimal equal-cohomology height {s}"
        )));
    }
    let k = u32::try_from(shift - s)
        .ok()
        .filter(|&k| k < 64)
        .ok_or_else(|| LiaisonError::Unsupported(format!("count 2^{} overflows", shift - s)))?;
    Ok(1u64 << k)
}
