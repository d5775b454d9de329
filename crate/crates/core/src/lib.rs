//! Numerical liaison theory for space curves.
//!
//! A curve in P³ is modelled by the second difference of its Hilbert function
//! and the dimensions of its deficiency module. On that data the crate
//! simulates basic double links exactly, decides which even liaison classes
//! contain curves with equal cohomology or with a minimal generator of degree
//! `σ + diam`, and screens classes for integral candidates.

pub mod bdl;
pub mod curve;
pub mod eqcoh;
pub mod error;
pub mod fixtures;
pub mod genbound;
pub mod integrality;
pub mod par;
pub mod seq;
pub mod verdict;

pub use bdl::{apply_bdl, BasicDoubleLink, Chain, ChainOutcome};
pub use curve::{CurveInvariants, CurveSummary, GeneratorDegreeInterval, Violation};
pub use eqcoh::ClassData;
pub use error::{LiaisonError, Result};
pub use par::Execution;
pub use seq::{ambient_dim, Degree, FinSeq};
pub use verdict::Verdict;
