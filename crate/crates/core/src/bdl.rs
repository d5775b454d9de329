//! Basic double links `C:(g,f) → Z` and chains of them.
//!
//! `I_Z = G·I_C + (F)` with `deg G = g`, `deg F = f`, `F ∈ I_C`, sits in
//!
//! ```text
//! 0 → S(−g−f) → I_C(−g) ⊕ S(−f) → I_Z → 0
//! ```
//!
//! so `dim [I_Z]_t = dim [I_C]_{t−g} + dim S_{t−f} − dim S_{t−f−g}` and the
//! deficiency module moves `g` degrees to the right. Only degrees of the
//! forms are tracked; `f ≥ α(C)` stands in for the existence of `F`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::curve::{CurveInvariants, GeneratorDegreeInterval};
use crate::error::{LiaisonError, Result};
use crate::par::{self, Execution};
use crate::seq::{ambient_dim, Degree, FinSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Degree, Degree)", into = "(Degree, Degree)")]
pub struct BasicDoubleLink {
    pub g: Degree,
    pub f: Degree,
}

impl BasicDoubleLink {
    /// The `(1, f)` links used throughout the structure theory.
    pub fn unit(f: Degree) -> Self {
        BasicDoubleLink { g: 1, f }
    }
}

impl From<(Degree, Degree)> for BasicDoubleLink {
    fn from((g, f): (Degree, Degree)) -> Self {
        BasicDoubleLink { g, f }
    }
}

impl From<BasicDoubleLink> for (Degree, Degree) {
    fn from(l: BasicDoubleLink) -> Self {
        (l.g, l.f)
    }
}

/// Applies one basic double link.
pub fn apply_bdl(c: &CurveInvariants, link: BasicDoubleLink) -> Result<CurveInvariants> {
    if link.g < 1 {
        return Err(LiaisonError::Precondition(format!(
            "degree of G must be positive, got {}",
            link.g
        )));
    }
    let alpha = c.alpha();
    if link.f < alpha {
        return Err(LiaisonError::NoSurface { f: link.f, alpha });
    }
    let delta2 = if link.g == 1 {
        unit_link_delta2(c.delta2(), link.f)
    } else {
        general_link_delta2(c, link)
    };
    Ok(CurveInvariants::from_parts(delta2, c.h1().shift(link.g)))
}

/// `Δ²H(Z,t) = Δ²H(C,t−1) + [0 ≤ t ≤ f−1]`.
///
/// The bump starts at `t = 0`: `Δ³H` of a degree-`f` surface is 1 on
/// `0..=f−1`, and starting at 1 would give `H(Z,0) = 0`.
fn unit_link_delta2(delta2: &FinSeq, f: Degree) -> FinSeq {
    &delta2.shift(1) + &FinSeq::new(0, vec![1; f as usize])
}

/// Second difference of `H(Z,t) = dim S_t − dim [I_Z]_t` from the dimension
/// count of the exact sequence, for any `g`.
fn general_link_delta2(c: &CurveInvariants, link: BasicDoubleLink) -> FinSeq {
    let BasicDoubleLink { g, f } = link;
    let s = |t: Degree| ambient_dim(t, 3);
    let ideal_c = |t: Degree| s(t) - c.hilbert(t);
    let hilbert_z = |t: Degree| s(t) - (ideal_c(t - g) + s(t - f) - s(t - f - g));
    let hi = (c.sigma() + g).max(f + g) + 2;
    let h = FinSeq::from_fn(-2, hi, hilbert_z);
    // H(Z,t) is linear past hi, so second differences vanish there; trim the
    // spurious edge produced by sampling on a finite window.
    let d2 = h.diff().diff();
    FinSeq::from_fn(0, hi, |t| d2.value_at(t))
}

/// Bounds on `ω(I_Z)` after one link, given bounds on `ω(I_C)`.
///
/// From the exact sequence, `ω(I_Z) ≤ max(ω(I_C) + g, f)`, and never more
/// than `σ(Z) + diam(Z)`. `F` is always a minimal generator of `I_Z`, so
/// `ω(I_Z) ≥ f`; when `f` is below every generator degree of `I_C`, `G` times
/// the top generator stays minimal and `ω(I_Z) ≥ ω(I_C) + g`. `certified`
/// records that `F` is known to be the top-degree generator.
pub fn track_omega(
    before: GeneratorDegreeInterval,
    c: &CurveInvariants,
    link: BasicDoubleLink,
    certified: bool,
) -> Result<GeneratorDegreeInterval> {
    let z = apply_bdl(c, link)?;
    if certified {
        return Ok(GeneratorDegreeInterval::exact(link.f));
    }
    let upper = (before.upper + link.g)
        .max(link.f)
        .min(z.sigma() + z.diam());
    let carried = before
        .lower
        .filter(|&l| link.f < l)
        .map_or(link.f, |l| l + link.g);
    let lower = carried.max(link.f).max(z.alpha()).min(upper);
    Ok(if lower == upper {
        GeneratorDegreeInterval::exact(upper)
    } else {
        GeneratorDegreeInterval::bounded(Some(lower), upper)
    })
}

/// Interval for a curve with no construction history: `α ≤ ω ≤ σ + diam`.
pub fn initial_omega(c: &CurveInvariants) -> GeneratorDegreeInterval {
    GeneratorDegreeInterval::bounded(Some(c.alpha()), c.sigma() + c.diam())
}

/// A base curve with an ordered list of basic double links.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub base: CurveInvariants,
    pub links: Vec<BasicDoubleLink>,
}

impl Chain {
    pub fn new(base: CurveInvariants, links: Vec<BasicDoubleLink>) -> Result<Self> {
        let chain = Chain { base, links };
        chain.stages()?;
        Ok(chain)
    }

    /// Chain of `(1, d_i)` links.
    pub fn unit(base: CurveInvariants, degrees: &[Degree]) -> Result<Self> {
        Chain::new(base, degrees.iter().map(|&f| BasicDoubleLink::unit(f)).collect())
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.links.iter().all(|l| l.g == 1)
    }

    /// `d_i` of a chain of `(1, d_i)` links.
    pub fn degrees(&self) -> Vec<Degree> {
        self.links.iter().map(|l| l.f).collect()
    }

    /// `C_0, C_1, …, C_m`.
    pub fn stages(&self) -> Result<Vec<CurveInvariants>> {
        let mut out = Vec::with_capacity(self.links.len() + 1);
        out.push(self.base.clone());
        for &link in &self.links {
            let next = apply_bdl(out.last().unwrap(), link)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn result(&self) -> Result<CurveInvariants> {
        Ok(self.stages()?.pop().unwrap())
    }

    /// Carries `initial` through every link; the last link's form is certified
    /// as the top-degree generator when `certify_last` is set.
    pub fn track_omega(
        &self,
        initial: GeneratorDegreeInterval,
        certify_last: bool,
    ) -> Result<GeneratorDegreeInterval> {
        let stages = self.stages()?;
        let n = self.links.len();
        let mut acc = initial;
        for (i, &link) in self.links.iter().enumerate() {
            acc = track_omega(acc, &stages[i], link, certify_last && i + 1 == n)?;
        }
        Ok(acc)
    }

    fn require_unit(&self, what: &str) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(LiaisonError::Unsupported(format!(
                "{what} is only defined for chains of (1, d) links"
            )))
        }
    }
}

/// `δ(chain, t, s)`: how many of the first `s` links still contribute a
/// bump at degree `t` of `C_s`.
///
/// Link `i` (1-based) of degree `d_i` contributes to `Δ²H(C_s, t)` exactly
/// when `s − i ≤ t ≤ d_i + s − i − 1`, i.e. `d_i ≥ t − s + i + 1` together with
/// the floor `t ≥ s − i` coming from the bump starting in degree 0.
pub fn delta_count(chain: &Chain, t: Degree, s: usize) -> Result<i64> {
    chain.require_unit("delta count")?;
    if s > chain.len() {
        return Err(LiaisonError::Precondition(format!(
            "stage {s} exceeds chain length {}",
            chain.len()
        )));
    }
    let s_deg = s as Degree;
    Ok(chain.links[..s]
        .iter()
        .enumerate()
        .filter(|(j, link)| {
            let i = *j as Degree + 1;
            t >= s_deg - i && link.f > t - s_deg + i
        })
        .count() as i64)
}

/// Checks `Δ²H(C_s, t) = Δ²H(C_0, t−s) + δ(chain, t, s)` at every stage on a
/// window covering all nonzero terms. Returns the first failing `(s, t)`.
pub fn verify_chain_formula(chain: &Chain) -> Result<Option<(usize, Degree)>> {
    chain.require_unit("chain formula")?;
    let stages = chain.stages()?;
    let base = &stages[0];
    for (s, cs) in stages.iter().enumerate() {
        let hi = cs.sigma().max(base.sigma() + s as Degree) + 2;
        for t in -2..=hi {
            let lhs = cs.delta2().value_at(t);
            let rhs = base.delta2().value_at(t - s as Degree) + delta_count(chain, t, s)?;
            if lhs != rhs {
                return Ok(Some((s, t)));
            }
        }
    }
    Ok(None)
}

/// Rewrites links `i, i+1` of degrees `b₁ < b₂` as `b₂ − 1, b₁ + 1`.
pub fn flip(chain: &Chain, i: usize) -> Result<Chain> {
    chain.require_unit("flip")?;
    if i + 1 >= chain.len() {
        return Err(LiaisonError::Precondition(format!(
            "flip position {i} needs links {i} and {} in a chain of length {}",
            i + 1,
            chain.len()
        )));
    }
    let (b1, b2) = (chain.links[i].f, chain.links[i + 1].f);
    if b1 >= b2 {
        return Err(LiaisonError::Precondition(format!(
            "flip not applicable: degrees {b1}, {b2} are not strictly increasing"
        )));
    }
    let mut links = chain.links.clone();
    links[i] = BasicDoubleLink::unit(b2 - 1);
    links[i + 1] = BasicDoubleLink::unit(b1 + 1);
    Chain::new(chain.base.clone(), links)
}

/// One chain found by the enumerator, with the curve it produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOutcome {
    pub degrees: Vec<Degree>,
    pub curve: CurveInvariants,
}

/// Dead-state filter for the enumerator: return `true` to drop a curve and
/// everything above it.
pub type Prune<'a> = &'a (dyn Fn(&CurveInvariants) -> bool + Sync);

#[derive(Clone, Copy, Default)]
pub struct EnumOptions<'a> {
    /// Keep one chain (the lexicographically smallest) per resulting curve.
    pub dedup: bool,
    pub exec: Execution,
    pub prune: Option<Prune<'a>>,
}

/// Every chain of `height` unit links with `α`-feasible degrees `≤ cap`, in
/// lexicographic order of the degree sequence.
pub fn enumerate_chains(base: &CurveInvariants, height: usize, cap: Degree) -> Vec<ChainOutcome> {
    enumerate_chains_with(base, height, cap, &EnumOptions::default())
}

pub fn enumerate_chains_with(
    base: &CurveInvariants,
    height: usize,
    cap: Degree,
    opts: &EnumOptions<'_>,
) -> Vec<ChainOutcome> {
    enumerate_levels(base, height, cap, opts).pop().unwrap()
}

/// Like [`enumerate_chains_with`] but returns every level `0..=height`.
pub fn enumerate_levels(
    base: &CurveInvariants,
    height: usize,
    cap: Degree,
    opts: &EnumOptions<'_>,
) -> Vec<Vec<ChainOutcome>> {
    let root = ChainOutcome {
        degrees: Vec::new(),
        curve: base.clone(),
    };
    let mut levels = vec![vec![root]];
    for _ in 0..height {
        let frontier = levels.last().unwrap();
        let children = par::flat_map(frontier, opts.exec, |node| {
            let alpha = node.curve.alpha();
            (alpha..=cap)
                .filter_map(|f| {
                    let curve = apply_bdl(&node.curve, BasicDoubleLink::unit(f)).ok()?;
                    if opts.prune.is_some_and(|p| p(&curve)) {
                        return None;
                    }
                    let mut degrees = node.degrees.clone();
                    degrees.push(f);
                    Some(ChainOutcome { degrees, curve })
                })
                .collect()
        });
        let next = if opts.dedup {
            let mut seen = HashSet::new();
            children
                .into_iter()
                .filter(|o| seen.insert(o.curve.clone()))
                .collect()
        } else {
            children
        };
        levels.push(next);
    }
    levels
}
