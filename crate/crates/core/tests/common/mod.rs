//! Random valid curves and chains shared by the integration tests.
#![allow(dead_code)]

use liaison_core::bdl::{BasicDoubleLink, Chain};
use liaison_core::{CurveInvariants, Degree, FinSeq};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `h²(t)` of the curve with `Δ²H = delta2` and no deficiency module:
/// `Σ_{v ≥ t+2} (v − t − 1) Δ²H(v)`.
pub fn h2_without_module(delta2: &FinSeq, t: Degree) -> i64 {
    delta2
        .iter()
        .filter(|&(v, _)| v >= t + 2)
        .map(|(v, x)| (v - t - 1) * x)
        .sum()
}

/// Second difference made of a rising part and a short negative tail, with
/// at most 8 entries of absolute value at most 6.
fn random_delta2(rng: &mut impl Rng) -> FinSeq {
    let rise = rng.gen_range(2..=6usize);
    let mut values = vec![1i64];
    for i in 1..rise {
        let prev = values[i - 1];
        let next = if rng.gen_bool(0.8) { prev + 1 } else { prev };
        values.push(next.min(i as i64 + 1).min(6));
    }
    let tail_len = rng.gen_range(0..=(8 - rise).min(3));
    for _ in 0..tail_len {
        values.push(-rng.gen_range(0..=3i64));
    }
    if rng.gen_bool(0.15) {
        let i = rng.gen_range(1..values.len());
        values[i] = rng.gen_range(-6..=6);
    }
    FinSeq::new(0, values)
}

/// A random valid curve with a nonzero module supported on at most 3
/// degrees, entries at most 6. Retries until the data validates.
pub fn random_curve(rng: &mut impl Rng) -> CurveInvariants {
    loop {
        if let Some(c) = try_random_curve(rng) {
            return c;
        }
    }
}

fn try_random_curve(rng: &mut impl Rng) -> Option<CurveInvariants> {
    let delta2 = random_delta2(rng);
    if delta2.sum() < 1 {
        return None;
    }
    let sigma = delta2.max_support().unwrap() + 1;
    // h¹ must cover the places where h² would otherwise be negative.
    let need = FinSeq::from_fn(-12, sigma + 2, |t| (-h2_without_module(&delta2, t)).max(0));
    let (lo, hi) = match (need.min_support(), need.max_support()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            let a = rng.gen_range(-1..=sigma);
            (a, a)
        }
    };
    if hi - lo + 1 > 3 {
        return None;
    }
    let width = rng.gen_range(hi - lo + 1..=3);
    let start = rng.gen_range(hi - width + 1..=lo);
    let h1 = FinSeq::from_fn(start, start + width - 1, |t| {
        let extra = if rng.gen_bool(0.5) { rng.gen_range(0..=2) } else { 0 };
        need.value_at(t) + extra
    });
    if h1.is_zero() || h1.values().iter().any(|&v| v > 6) {
        return None;
    }
    let c = CurveInvariants::from_parts(delta2, h1);
    c.validate().is_empty().then_some(c)
}

/// A random chain of `(1, d)` links of length `1..=max_len`, each degree
/// drawn from `[α, α + 4]` of the current curve.
pub fn random_chain(rng: &mut impl Rng, base: CurveInvariants, max_len: usize) -> Chain {
    let len = rng.gen_range(1..=max_len);
    let mut current = base.clone();
    let mut links = Vec::with_capacity(len);
    for _ in 0..len {
        let alpha = current.alpha();
        let link = BasicDoubleLink::unit(rng.gen_range(alpha..=alpha + 4));
        current = liaison_core::apply_bdl(&current, link).unwrap();
        links.push(link);
    }
    Chain::new(base, links).unwrap()
}
