//! The family `r(m, c) = [2c, −2c, …, (−1)^{m−1}2c]` and its polynomial
//! recurrences.
//!
//! Variables: `t` for `Δ`, `x = t + 1/t` after folding, `y = c²x − (2c² + 2)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_int, symmetric_fold, sturm_real_root_count, Endpoint, IntPoly, Rational};
use crate::roots::find_zeros;
use crate::seifert::alexander_poly;
use crate::twobridge::CfWord;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `c(t − 1)`
fn step(c: i64) -> IntPoly {
    IntPoly::linear(c, -c)
}

/// `P₀ = 1`, `P₁ = c(t − 1)`, `Pₘ = c(t − 1)Pₘ₋₁ − tPₘ₋₂`.
pub fn p_poly(m: usize, c: i64) -> IntPoly {
    p_sequence(m, c).pop().expect("non-empty")
}

/// `P₀, …, P_n`
pub fn p_sequence(n: usize, c: i64) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one()];
    if n == 0 {
        return out;
    }
    out.push(step(c));
    let (s, t) = (step(c), IntPoly::var());
    for k in 2..=n {
        let next = &(&s * &out[k - 1]) - &(&t * &out[k - 2]);
        out.push(next);
    }
    out
}

/// `Q₀ = c`, `Q₂ₘ = cP₂ₘ − tQ₂ₘ₋₂`, so that `P₂ₘ₊₁ = (t − 1)Q₂ₘ`.
pub fn q_poly(index: usize, c: i64) -> Result<IntPoly> {
    if !index.is_multiple_of(2) {
        return Err(Error::OddIndex(index));
    }
    let ps = p_sequence(index, c);
    let t = IntPoly::var();
    let mut q = IntPoly::constant(big(c));
    for j in (2..=index).step_by(2) {
        q = &ps[j].scale(&big(c)) - &(&t * &q);
    }
    Ok(q)
}

/// `xₖ = y·xₖ₋₁ − xₖ₋₂` from the given seeds, `x₀ … x_n`.
fn chebyshev_like(n: usize, x0: IntPoly, x1: IntPoly) -> Vec<IntPoly> {
    let y = IntPoly::var();
    let mut out = vec![x0, x1];
    for k in 2..=n {
        let next = &(&y * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `μ₀ … μ_n` with `μ₀ = c`, `μ₁ = cy`.
pub fn mu_sequence(n: usize, c: i64) -> Vec<IntPoly> {
    chebyshev_like(n, IntPoly::constant(big(c)), IntPoly::monomial(big(c), 1))
}

/// `(λₘ, μₘ)` in `y`, with `λ₀ = 1`, `λ₁ = y + 1`, `μ₀ = c`, `μ₁ = cy`.
pub fn lambda_mu_polys(m: usize, c: i64) -> (IntPoly, IntPoly) {
    let lambda = chebyshev_like(m, IntPoly::one(), IntPoly::linear(1, 1)).pop().expect("non-empty");
    let mu = mu_sequence(m, c).pop().expect("non-empty");
    (lambda, mu)
}

/// `f₁ = 1`, `f₂ = y`, `fₙ = y·fₙ₋₁ + fₙ₋₂`.
pub fn fibonacci_poly(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("Fibonacci polynomials start at f_1".into()));
    }
    let y = IntPoly::var();
    let (mut prev, mut cur) = (IntPoly::one(), y.clone());
    if n == 1 {
        return Ok(prev);
    }
    for _ in 2..n {
        let next = &(&y * &cur) + &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `i⁻ᵐ·f_{m+1}(iy)` as an integer polynomial: the `yᵏ` coefficient is
/// `(−1)^{(k−m)/2}·[yᵏ]f_{m+1}`, and `f_{m+1}` only has terms with `k ≡ m (mod 2)`.
pub fn rotated_fibonacci(m: usize) -> IntPoly {
    let f = fibonacci_poly(m + 1).expect("m + 1 ≥ 1");
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            assert!(a == &BigInt::from(0) || (m - k).is_multiple_of(2), "f_{} has a term of wrong parity", m + 1);
            if ((m - k) / 2).is_multiple_of(2) {
                a.clone()
            } else {
                -a
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

/// `[c, −c, c, …]` of length `m`; the half-coefficient form of `r(m, c)`.
pub fn family_cf(m: usize, c: i64) -> Result<CfWord> {
    if c < 1 {
        return Err(Error::InvalidArgument(format!("c must be positive, got {c}")));
    }
    CfWord::new((0..m).map(|i| if i % 2 == 0 { c } else { -c }).collect())
}

/// `y = c²x − (2c² + 2)` as a polynomial in `x`.
pub fn y_of_x(c: i64) -> IntPoly {
    IntPoly::linear(c * c, -(2 * c * c + 2))
}

/// All zeros of `p` are real, simple and lie in `(lo, hi)`, decided exactly.
pub fn zeros_in_interval(p: &IntPoly, lo: &Rational, hi: &Rational) -> Result<bool> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = sturm_real_root_count(p, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone()))?;
    Ok(n == d && p.sign_at(hi) != 0 && p.squarefree_part().degree() == Some(d))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyBounds {
    /// `((√(1+c²) − 1)/c)²`
    pub lower: String,
    /// `((√(1+c²) + 1)/c)²`
    pub upper: String,
    #[serde(serialize_with = "crate::serde_util::f64_17")]
    pub lower_approx: f64,
    #[serde(serialize_with = "crate::serde_util::f64_17")]
    pub upper_approx: f64,
}

impl FamilyBounds {
    pub fn new(c: i64) -> Self {
        let s = ((1 + c * c) as f64).sqrt();
        let cf = c as f64;
        FamilyBounds {
            lower: format!("((sqrt({})-1)/{c})^2", 1 + c * c),
            upper: format!("((sqrt({})+1)/{c})^2", 1 + c * c),
            lower_approx: ((s - 1.0) / cf).powi(2),
            upper_approx: ((s + 1.0) / cf).powi(2),
        }
    }

    /// The bounds are reciprocal, so under `x = t + 1/t` the open interval
    /// maps onto `(2, 2 + 4/c²)`.
    pub fn folded_upper(c: i64) -> Rational {
        rat_int(2) + rat(4, c * c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyChecks {
    pub identity_chain: bool,
    pub cosine_zeros: bool,
    pub interlacing: bool,
    pub mu_at_minus2: bool,
    pub zeros_in_bounds: bool,
}

impl FamilyChecks {
    pub fn all(&self) -> bool {
        self.identity_chain && self.cosine_zeros && self.interlacing && self.mu_at_minus2 && self.zeros_in_bounds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub m: usize,
    pub c: i64,
    /// `P₂ₘ`
    #[serde(skip)]
    pub p: IntPoly,
    /// `Q₂ₘ`
    #[serde(skip)]
    pub q: IntPoly,
    #[serde(skip)]
    pub lambda: IntPoly,
    #[serde(skip)]
    pub mu: IntPoly,
    pub bounds: FamilyBounds,
    pub checks: FamilyChecks,
}

const COSINE_TOL: f64 = 1e-10;

/// Runs every check on `P₂ₘ`, `Q₂ₘ`, `λₘ` and `μₘ`.
pub fn theorem5_verify(m: usize, c: i64) -> Result<FamilyReport> {
    if m < 1 || c < 1 {
        return Err(Error::InvalidArgument(format!("need m ≥ 1 and c ≥ 1, got m = {m}, c = {c}")));
    }
    let ps = p_sequence(2 * m + 1, c);
    let p = ps[2 * m].clone();
    let q = q_poly(2 * m, c)?;
    let mus = mu_sequence(2 * m + 1, c);
    let (lambda, mu) = lambda_mu_polys(m, c);

    let identity_chain = identity_chain(m, c, &ps, &q, &lambda, &mus)?;
    let mu_zeros = real_zeros(&mus[m])?;
    let cosine_zeros = mu_zeros.len() == m
        && mu_zeros.iter().zip(cosine_nodes(m)).all(|(z, y)| (z - y).abs() < COSINE_TOL);
    let interlacing = interlaces(&real_zeros(&mus[m - 1])?, &mu_zeros);
    let mu_at_minus2 = mus[2 * m].eval_i64(-2) == big((2 * m as i64 + 1) * c)
        && mus[2 * m + 1].eval_i64(-2) == big(-(2 * m as i64 + 2) * c);
    let upper = FamilyBounds::folded_upper(c);
    let zeros_in_bounds = zeros_in_interval(&symmetric_fold(&p)?, &rat_int(2), &upper)?
        && zeros_in_interval(&symmetric_fold(&q)?, &rat_int(2), &upper)?;

    Ok(FamilyReport {
        m,
        c,
        p,
        q,
        lambda,
        mu,
        bounds: FamilyBounds::new(c),
        checks: FamilyChecks { identity_chain, cosine_zeros, interlacing, mu_at_minus2, zeros_in_bounds },
    })
}

fn identity_chain(m: usize, c: i64, ps: &[IntPoly], q: &IntPoly, lambda: &IntPoly, mus: &[IntPoly]) -> Result<bool> {
    let t_minus_1 = IntPoly::linear(1, -1);
    let link = ps[2 * m + 1] == &t_minus_1 * q;
    let lambda_mu = lambda.scale(&big(c)) == &mus[m] + &mus[m - 1];
    let y = y_of_x(c);
    let fold_p = symmetric_fold(&ps[2 * m])? == lambda.compose(&y);
    let fold_q = symmetric_fold(q)? == mus[m].compose(&y);
    let fib = rotated_fibonacci(m).scale(&big(c)) == mus[m];
    let pipeline = [2 * m, 2 * m + 1].iter().all(|&k| {
        let delta = alexander_poly(&family_cf(k, c).expect("c ≥ 1, k ≥ 1"));
        ps[k] == delta || ps[k] == -delta
    });
    Ok(link && lambda_mu && fold_p && fold_q && fib && pipeline)
}

/// `2cos(kπ/(m+1))` for `k = m, …, 1` (ascending).
pub fn cosine_nodes(m: usize) -> Vec<f64> {
    (1..=m)
        .rev()
        .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (m + 1) as f64).cos())
        .collect()
}

fn real_zeros(p: &IntPoly) -> Result<Vec<f64>> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let zs = find_zeros(p, 1e-13)?;
    Ok(zs.zeros().iter().filter(|z| z.im == 0.0).map(|z| z.re).collect())
}

/// `inner` (ascending, length `n − 1`) strictly interlaces `outer` (length `n`).
fn interlaces(inner: &[f64], outer: &[f64]) -> bool {
    inner.len() + 1 == outer.len() && inner.iter().enumerate().all(|(k, z)| outer[k] < *z && *z < outer[k + 1])
}

/// `λₘ(y)` for `c = 1` by its recurrence in floating point.
fn lambda_f64(m: usize, y: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, y + 1.0);
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = y * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Largest real zero of `P₂ₘ` for `c = 1`.
///
/// The largest zero of `λₘ` lies between `y₂⁽ᵐ⁾` and `y₁⁽ᵐ⁾`, where
/// `yₖ⁽ᵐ⁾ = 2cos(kπ/(m+1))`; it is found by bisection and mapped back through
/// `x = y + 4`, `t = (x + √(x² − 4))/2`. Working in `y` avoids the huge
/// coefficients of `P₂ₘ`.
pub fn remark2_extremal(m: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let node = |k: usize| 2.0 * (k as f64 * std::f64::consts::PI / (m + 1) as f64).cos();
    let (mut lo, mut hi) = (node(2), node(1));
    let s_lo = lambda_f64(m, lo).signum();
    if s_lo == lambda_f64(m, hi).signum() {
        return Err(Error::NoConvergence(0));
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = lambda_f64(m, mid);
        if v == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if v.signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi) + 4.0;
    Ok(0.5 * (x + (x * x - 4.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_poly(0, 5), IntPoly::one());
        assert_eq!(p_poly(1, 3), p(&[-3, 3]));
        assert_eq!(p_poly(2, 1), p(&[1, -3, 1]));
        assert_eq!(p_poly(4, 1), p(&[1, -7, 13, -7, 1]));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(0, 4).unwrap(), p(&[4]));
        assert_eq!(q_poly(2, 1).unwrap(), p(&[1, -4, 1]));
        for c in 1..=4 {
            let q2 = q_poly(2, c).unwrap();
            assert_eq!(&IntPoly::linear(1, -1) * &q2, p_poly(3, c));
        }
        assert_eq!(q_poly(3, 1), Err(Error::OddIndex(3)));
    }

    #[test]
    fn lambda_mu_examples() {
        let (l1, m1) = lambda_mu_polys(1, 3);
        assert_eq!((l1, m1), (p(&[1, 1]), p(&[0, 3])));
        let (l2, m2) = lambda_mu_polys(2, 3);
        assert_eq!(l2, p(&[-1, 1, 1]));
        assert_eq!(m2, p(&[-3, 0, 3]));
        let (l2, _) = lambda_mu_polys(2, 1);
        assert_eq!(l2.compose(&y_of_x(1)), p(&[11, -7, 1]));
        assert_eq!(symmetric_fold(&p_poly(4, 1)).unwrap(), p(&[11, -7, 1]));
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci_poly(1).unwrap(), IntPoly::one());
        assert_eq!(fibonacci_poly(2).unwrap(), p(&[0, 1]));
        assert_eq!(fibonacci_poly(3).unwrap(), p(&[1, 0, 1]));
        assert_eq!(rotated_fibonacci(2), p(&[-1, 0, 1]));
        assert!(fibonacci_poly(0).is_err());
    }

    #[test]
    fn theorem5_examples() {
        let r = theorem5_verify(2, 1).unwrap();
        assert!(r.checks.all(), "{:?}", r.checks);
        assert!((r.bounds.lower_approx - 0.171_572_875_253_809_9).abs() < 1e-12);
        assert!((r.bounds.upper_approx - 5.828_427_124_746_19).abs() < 1e-12);
        for c in 1..=4 {
            assert!(theorem5_verify(1, c).unwrap().checks.all());
        }
        assert_eq!(mu_sequence(3, 2)[3].eval_i64(-2), big(-8));
    }

    #[test]
    fn report_json_keys() {
        let v = serde_json::to_value(theorem5_verify(3, 2).unwrap()).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["bounds", "c", "checks", "m"]);
    }

    #[test]
    fn family_word_matches_alexander() {
        assert_eq!(family_cf(3, 2).unwrap().a(), &[2, -2, 2]);
        assert!(family_cf(3, 0).is_err());
    }

    #[test]
    fn remark2_small() {
        assert!((remark2_extremal(1).unwrap() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        let x = (7.0 + 5f64.sqrt()) / 2.0;
        let t = (x + (x * x - 4.0).sqrt()) / 2.0;
        assert!((remark2_extremal(2).unwrap() - t).abs() < 1e-12);
        assert!((t - 4.3902).abs() < 1e-4);
    }

    #[test]
    fn remark2_agrees_with_root_finder() {
        for m in 1..=8 {
            let zs = find_zeros(&p_poly(2 * m, 1), 1e-13).unwrap();
            let top = zs.zeros().iter().map(|z| z.re).fold(f64::MIN, f64::max);
            assert!((remark2_extremal(m).unwrap() - top).abs() < 1e-9, "m = {m}");
        }
    }
}
