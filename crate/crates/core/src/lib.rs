//! Zeros of Alexander polynomials of two-bridge knots and links.
//!
//! Words are even continued fractions `[2a₁, …, 2a_m]` stored as the halves
//! `aᵢ`. From a word the crate builds the Seifert matrix, the companion
//! matrix and `Δ(t)`, locates the zeros, and proves bounds on their real
//! parts with exact Lyapunov certificates.

pub mod error;
pub mod exactmath;
pub mod families;
pub mod roots;
pub mod seifert;
mod serde_util;
pub mod stability;
pub mod sweep;
pub mod twobridge;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use exactmath::{
    ldlt_positive_definite, parse_rational, rat, rat_int, sturm_real_root_count, symmetric_fold,
    symmetric_unfold, Endpoint, IntPoly, PdVerdict, RatMatrix, Rational,
};
pub use families::{
    family_cf, fibonacci_poly, lambda_mu_polys, p_poly, q_poly, remark2_extremal, theorem5_verify,
    FamilyReport,
};
pub use roots::{find_zeros, zero_report, ZeroReport, ZeroSet, DEFAULT_TOL};
pub use seifert::{
    alexander_poly, companion_matrix, normalized_alexander, seifert_matrix, symmetric_companion,
    symmetric_companion_eigenvalues, CompanionMatrix, SeifertMatrix,
};
pub use stability::{
    lyapunov_certificate, positivity_lemma_check, theorem4_check, theorem_blocks, BlockReport,
    BlockTheorem, BoundSide, CertificateReport, VChoice,
};
pub use sweep::{knot_record, run_sweep, KnotRecord, SweepConfig, SweepSummary};
pub use twobridge::{
    cf_to_fraction, classify, even_cf_expand, normalize_fraction, CfWord, Classification,
};
