//! Exact arithmetic: rationals, dense integer polynomials, Sturm chains,
//! palindromic folding and rational LDLᵀ factorization.

mod fold;
mod matrix;
mod poly;
mod rational;
mod sturm;

pub use fold::{palindrome_sign, symmetric_fold, symmetric_unfold, PalindromeSign};
pub use matrix::{ldlt_positive_definite, PdVerdict, RatMatrix};
pub use poly::IntPoly;
pub use rational::{parse_rational, rat, rat_int, rational_to_f64, Rational};
pub use sturm::{
    isolate_real_roots, refine_root, sturm_real_root_count, Endpoint, SturmChain,
};
