//! Numeric zeros of integer polynomials, cross-checked against exact
//! real-root counts, and the bound predicates evaluated on them.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{
    isolate_real_roots, rational_to_f64, refine_root, IntPoly, Rational,
};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 200;
/// Zeros closer than this to the real axis are candidates for real zeros.
pub const REAL_SNAP: f64 = 1e-7;
pub const RESIDUAL_LIMIT: f64 = 1e-9;

/// All complex zeros of a polynomial, with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    zeros: Vec<Complex64>,
    residuals: Vec<f64>,
    real_count_exact: usize,
}

impl ZeroSet {
    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    /// `|p(z)| / Σ|cᵢ||z|ⁱ` for each zero.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Real zeros with multiplicity, from Sturm counts on the squarefree factors.
    pub fn real_count_exact(&self) -> usize {
        self.real_count_exact
    }

    pub fn real_count_numeric(&self) -> usize {
        self.zeros.iter().filter(|z| z.im.abs() < REAL_SNAP).count()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

/// Finds every zero of `p` (degree ≥ 1).
///
/// The factors `t − 1` and `t` are split off exactly, the rest is broken into
/// squarefree factors. On each factor the real zeros are isolated and
/// bisected exactly; when complex zeros remain, Aberth–Ehrlich iteration
/// locates all zeros, the ones nearest the real axis are matched against the
/// exact real zeros and the others are Newton polished. Disagreement between
/// the numeric and exact real counts is an error.
pub fn find_zeros(p: &IntPoly, tol: f64) -> Result<ZeroSet> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::InvalidArgument("constant polynomial has no zeros".into()));
    }
    if !(tol > 1e-15 && tol < 1e-6) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} outside (1e-15, 1e-6)")));
    }
    let mut rest = p.clone();
    let mut zeros = Vec::with_capacity(deg);
    let mut real_count = 0;
    let t_minus_1 = IntPoly::linear(1, -1);
    while rest.degree() > Some(0) && rest.eval(&BigInt::one()).is_zero() {
        rest = rest.div_exact(&t_minus_1).expect("t - 1 divides");
        zeros.push(Complex64::new(1.0, 0.0));
        real_count += 1;
    }
    while rest.degree() > Some(0) && rest.coeff(0).is_zero() {
        rest = rest.div_exact(&IntPoly::var()).expect("t divides");
        zeros.push(Complex64::new(0.0, 0.0));
        real_count += 1;
    }
    for (factor, mult) in rest.squarefree_decomposition() {
        let (roots, nreal) = squarefree_zeros(&factor, tol)?;
        real_count += mult * nreal;
        for _ in 0..mult {
            zeros.extend_from_slice(&roots);
        }
    }
    debug_assert_eq!(zeros.len(), deg);
    zeros.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residuals: Vec<f64> = zeros.iter().map(|&z| relative_residual(p, z)).collect();
    if let Some((z, r)) = zeros.iter().zip(&residuals).find(|(_, r)| **r >= RESIDUAL_LIMIT) {
        return Err(Error::RootCheck(format!("residual {r:e} at {z} for {p}")));
    }
    let set = ZeroSet { zeros, residuals, real_count_exact: real_count };
    if set.real_count_numeric() != set.real_count_exact {
        return Err(Error::RootCheck(format!(
            "{} numerically real zeros but {} exact for {p}",
            set.real_count_numeric(),
            set.real_count_exact
        )));
    }
    Ok(set)
}

/// `|p(z)| / Σ|cᵢ||z|ⁱ`
pub fn relative_residual(p: &IntPoly, z: Complex64) -> f64 {
    let c = p.to_f64_coeffs();
    let r = z.norm();
    let mut val = Complex64::zero();
    let mut scale = 0.0;
    for &ci in c.iter().rev() {
        val = val * z + ci;
        scale = scale * r + ci.abs();
    }
    if scale == 0.0 {
        0.0
    } else {
        val.norm() / scale
    }
}

/// Zeros of a squarefree primitive factor, and its exact real-zero count.
fn squarefree_zeros(f: &IntPoly, tol: f64) -> Result<(Vec<Complex64>, usize)> {
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return Ok((Vec::new(), 0));
    }
    if d == 1 {
        let root = Rational::new(-f.coeff(0), f.coeff(1));
        return Ok((vec![Complex64::new(rational_to_f64(&root), 0.0)], 1));
    }
    let reals = exact_real_zeros(f, tol)?;
    let nreal = reals.len();
    if nreal == d {
        return Ok((reals.into_iter().map(|x| Complex64::new(x, 0.0)).collect(), nreal));
    }
    let mut approx = aberth(f, tol)?;
    approx.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    let (near_real, complex) = approx.split_at(nreal);
    if let Some(z) = near_real.iter().find(|z| z.im.abs() >= REAL_SNAP) {
        return Err(Error::RootCheck(format!(
            "exact count says {nreal} real zeros but {z} is off the axis in {f}"
        )));
    }
    if let Some(z) = complex.iter().find(|z| z.im.abs() < REAL_SNAP) {
        return Err(Error::RootCheck(format!(
            "{z} looks real but the exact count is {nreal} for {f}"
        )));
    }
    let coeffs = f.to_f64_coeffs();
    let mut out: Vec<Complex64> = reals.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
    out.extend(pair_conjugates(complex, &coeffs)?);
    Ok((out, nreal))
}

/// Exactly isolated real zeros. Each isolating interval is shrunk exactly
/// to a relative width of `2⁻¹⁰`, then bisected in floating point without
/// leaving it, down to relative width `tol`.
fn exact_real_zeros(f: &IntPoly, tol: f64) -> Result<Vec<f64>> {
    isolate_real_roots(f)?
        .into_iter()
        .map(|(lo, hi)| {
            let scale = rational_to_f64(&lo).abs().max(rational_to_f64(&hi).abs()).max(1.0);
            let bits = (-(COARSE_WIDTH / scale).log2()).ceil().max(1.0) as usize;
            let width = Rational::new(BigInt::one(), BigInt::one() << bits);
            let (a, b) = refine_root(f, &lo, &hi, &width);
            if a == b {
                return Ok(rational_to_f64(&a));
            }
            Ok(float_bisect(f, rational_to_f64(&a), rational_to_f64(&b), f.sign_at(&b), tol))
        })
        .collect()
}

const COARSE_WIDTH: f64 = 1.0 / 1024.0;

/// Bisection on `[a, b]`; `hi_sign` is the exact sign at `b`. The sign at a
/// midpoint comes from floating-point Horner unless `|p|` is within its
/// rounding bound, in which case it is evaluated exactly.
fn float_bisect(f: &IntPoly, mut a: f64, mut b: f64, hi_sign: i8, tol: f64) -> f64 {
    let c = f.to_f64_coeffs();
    let slack = 4.0 * c.len() as f64 * f64::EPSILON;
    while b - a > tol * a.abs().max(b.abs()).max(1.0) {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let (mut v, mut bound) = (0.0f64, 0.0f64);
        for &ci in c.iter().rev() {
            v = v * mid + ci;
            bound = bound * mid.abs() + ci.abs();
        }
        let sign = if v.abs() > slack * bound {
            if v > 0.0 { 1 } else { -1 }
        } else {
            f.sign_at(&Rational::from_float(mid).expect("finite"))
        };
        match sign {
            0 => return mid,
            s if s == hi_sign => b = mid,
            _ => a = mid,
        }
    }
    0.5 * (a + b)
}

fn horner_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let r = z.norm();
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    let mut scale = 0.0;
    for &ci in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ci;
        scale = scale * r + ci.abs();
    }
    (p, dp, scale)
}

/// Aberth–Ehrlich simultaneous iteration (Gauss–Seidel sweep) from points on
/// the Cauchy-bound circle. A zero is settled once its relative step is below
/// `tol` or its value is at rounding level.
pub fn aberth(f: &IntPoly, tol: f64) -> Result<Vec<Complex64>> {
    let c = f.to_f64_coeffs();
    let n = c.len() - 1;
    let lead = c[n].abs();
    let radius = 1.0 + c[..n].iter().map(|x| x.abs() / lead).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        for k in 0..n {
            let (p, dp, scale) = horner_with_derivative(&c, z[k]);
            if p.norm() <= 8.0 * f64::EPSILON * scale {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let mut step = ratio / (Complex64::one() - ratio * sum);
            if !step.is_finite() {
                step = Complex64::new(tol, tol) * z[k].norm().max(1.0);
            }
            z[k] -= step;
            done[k] = step.norm() <= tol * z[k].norm().max(1.0);
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence(MAX_ITERATIONS))
}

fn newton_polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (p, dp, _) = horner_with_derivative(c, z);
        let step = p / dp;
        if !step.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

/// Matches each zero with its conjugate and replaces both with an exactly
/// conjugate pair.
fn pair_conjugates(zs: &[Complex64], coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let mut upper: Vec<Complex64> = zs.iter().filter(|z| z.im > 0.0).map(|&z| newton_polish(coeffs, z)).collect();
    let mut lower: Vec<Complex64> = zs.iter().filter(|z| z.im < 0.0).map(|&z| newton_polish(coeffs, z)).collect();
    if upper.len() != lower.len() {
        return Err(Error::RootCheck("complex zeros do not pair up".into()));
    }
    let mut out = Vec::with_capacity(zs.len());
    for z in upper.drain(..) {
        let (idx, dist) = lower
            .iter()
            .enumerate()
            .map(|(i, w)| (i, (w.conj() - z).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("same length");
        if dist > 1e-6 * z.norm().max(1.0) {
            return Err(Error::RootCheck(format!("{z} has no conjugate partner")));
        }
        let w = lower.swap_remove(idx);
        let avg = Complex64::new((z.re + w.re) / 2.0, (z.im - w.im) / 2.0);
        out.push(avg);
        out.push(avg.conj());
    }
    Ok(out)
}

/// Bound predicates evaluated on a zero set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroReport {
    pub min_re: f64,
    pub max_re: f64,
    /// `min_re > −1`
    pub hoste_ok: bool,
    /// `−3 < min_re` and `max_re < 6`
    pub thm1_ok: bool,
    pub all_real: bool,
    pub all_positive_real: bool,
    /// Closed under `z ↦ 1/z`.
    pub reciprocal_paired: bool,
}

pub fn zero_report(zs: &ZeroSet) -> ZeroReport {
    let re = zs.zeros.iter().map(|z| z.re);
    let min_re = re.clone().fold(f64::INFINITY, f64::min);
    let max_re = re.fold(f64::NEG_INFINITY, f64::max);
    let all_real = zs.zeros.iter().all(|z| z.im == 0.0);
    ZeroReport {
        min_re,
        max_re,
        hoste_ok: min_re > -1.0,
        thm1_ok: min_re > -3.0 && max_re < 6.0,
        all_real,
        all_positive_real: all_real && zs.zeros.iter().all(|z| z.re > 0.0),
        reciprocal_paired: reciprocal_paired(&zs.zeros, 1e-6),
    }
}

fn reciprocal_paired(zeros: &[Complex64], tol: f64) -> bool {
    let mut pool: Vec<Complex64> = zeros.to_vec();
    while let Some(z) = pool.pop() {
        if z.norm() == 0.0 {
            return false;
        }
        let target = z.inv();
        if (target - z).norm() <= tol * target.norm().max(1.0) {
            continue;
        }
        let Some(idx) = pool
            .iter()
            .position(|w| (w - target).norm() <= tol * target.norm().max(1.0))
        else {
            return false;
        };
        pool.swap_remove(idx);
    }
    true
}
