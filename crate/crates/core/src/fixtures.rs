//! Reference curves and liaison classes used by tests, benches and the CLI.

use crate::curve::CurveInvariants;
use crate::eqcoh::ClassData;
use crate::seq::FinSeq;

fn curve(delta2: &[i64], h1_offset: i64, h1: &[i64]) -> CurveInvariants {
    CurveInvariants::from_parts(FinSeq::new(0, delta2.to_vec()), FinSeq::new(h1_offset, h1.to_vec()))
}

/// Two disjoint lines: `H = 1, 4, 6, 8, …`, `h¹ = 1` in degree 0.
pub fn two_skew_lines() -> CurveInvariants {
    curve(&[1, 2, -1], 0, &[1])
}

/// Minimal equal-cohomology curve in the class of two skew lines.
pub fn two_skew_lines_min_eqcoh() -> CurveInvariants {
    curve(&[1, 2, 3], 1, &[1])
}

/// Minimal curve of the Buchsbaum class with module dimensions `(4, 1)`.
pub fn l41_minimal() -> CurveInvariants {
    let mut d: Vec<i64> = (1..=10).collect();
    d.extend([-2, -1]);
    curve(&d, 8, &[4, 1])
}

/// Minimal equal-cohomology curve of the `(4, 1)` Buchsbaum class.
pub fn l41_min_eqcoh() -> CurveInvariants {
    let d: Vec<i64> = (1..=12).collect();
    curve(&d, 10, &[4, 1])
}

/// ACM curve with `Δ²H = (1, 2, 2)`.
pub fn acm_example() -> CurveInvariants {
    CurveInvariants::acm(FinSeq::new(0, vec![1, 2, 2]))
}

/// Minimal curve whose second difference ends in the flat tail `−1, −1`.
pub fn flat_tail() -> CurveInvariants {
    curve(&[1, 2, 3, 4, 5, -1, -1], 3, &[3, 1])
}

/// Minimal curve whose tail `Δ²H(r_a+2..=r_o+2)` is `(−1, 0)`.
pub fn trailing_zero() -> CurveInvariants {
    curve(&[1, 2, 3, 4, -1], 2, &[1, 1])
}

/// Module of diameter 3 with a gap, and `r_o < α` (maximal rank).
pub fn maxrank_diam3() -> CurveInvariants {
    curve(&[1, 2, 3, 4, 5, 6], 1, &[1, 0, 1])
}

pub fn two_skew_lines_class() -> ClassData {
    ClassData::buchsbaum(two_skew_lines())
}

/// The `(4, 1)` Buchsbaum class, optionally with `t₁(C₀)`.
pub fn l41_class(t1: Option<i64>) -> ClassData {
    ClassData {
        t1,
        ..ClassData::buchsbaum(l41_minimal())
    }
}

pub fn flat_tail_class() -> ClassData {
    ClassData::new(flat_tail())
}

pub fn trailing_zero_class() -> ClassData {
    ClassData::new(trailing_zero())
}

pub fn maxrank_diam3_class() -> ClassData {
    ClassData::new(maxrank_diam3())
}

/// Every shipped class with a file-friendly name.
pub fn all_classes() -> Vec<(&'static str, ClassData)> {
    vec![
        ("two_skew_lines", two_skew_lines_class()),
        ("l41", l41_class(Some(11))),
        ("acm", ClassData::new(acm_example())),
        ("flat_tail", flat_tail_class()),
        ("trailing_zero", trailing_zero_class()),
        ("maxrank_diam3", maxrank_diam3_class()),
    ]
}
