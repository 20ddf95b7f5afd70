//! Seifert matrix `U`, companion matrix `A = U⁻¹Uᵀ`, and the Alexander
//! polynomial `Δ(t) = det(tU − Uᵀ)` of a two-bridge word.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_int, IntPoly, RatMatrix, Rational};
use crate::twobridge::{classify, CfWord};

/// Banded integer Seifert matrix: diagonal `aᵢ`, and every even row `i`
/// carries `−1` at column `i−1` and `+1` at column `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix(RatMatrix);

impl SeifertMatrix {
    pub fn inner(&self) -> &RatMatrix {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix(RatMatrix);

impl CompanionMatrix {
    pub fn inner(&self) -> &RatMatrix {
        &self.0
    }
}

pub fn seifert_matrix(w: &CfWord) -> SeifertMatrix {
    let m = w.len();
    let mut u = RatMatrix::zeros(m);
    for i in 1..=m {
        u.set(i - 1, i - 1, rat_int(w.at(i)));
        if i % 2 == 0 {
            u.set(i - 1, i - 2, rat_int(-1));
            if i < m {
                u.set(i - 1, i, rat_int(1));
            }
        }
    }
    SeifertMatrix(u)
}

/// Closed-form `A = U⁻¹Uᵀ`. Odd rows are `(1/aᵢ, 1, −1/aᵢ)` around the
/// diagonal; even rows are
/// `(1/(aᵢ₋₁aᵢ), 1/aᵢ, 1 − 1/(aᵢ₋₁aᵢ) − 1/(aᵢaᵢ₊₁), −1/aᵢ, 1/(aᵢaᵢ₊₁))`,
/// with every term that mentions a missing index dropped.
pub fn companion_matrix(w: &CfWord) -> CompanionMatrix {
    let m = w.len();
    let a = |i: usize| w.at(i);
    let mut c = RatMatrix::zeros(m);
    let mut put = |i: usize, j: usize, v: Rational| {
        if (1..=m).contains(&j) {
            c.set(i - 1, j - 1, v);
        }
    };
    for i in 1..=m {
        if i % 2 == 1 {
            put(i, i, rat_int(1));
            if i > 1 {
                put(i, i - 1, rat(1, a(i)));
            }
            if i < m {
                put(i, i + 1, rat(-1, a(i)));
            }
        } else {
            let left = rat(1, a(i - 1) * a(i));
            let mut diag = rat_int(1) - &left;
            if i >= 3 {
                put(i, i - 2, left);
            }
            put(i, i - 1, rat(1, a(i)));
            if i < m {
                let right = rat(1, a(i) * a(i + 1));
                diag -= &right;
                put(i, i + 1, rat(-1, a(i)));
                put(i, i + 2, right);
            }
            put(i, i, diag);
        }
    }
    CompanionMatrix(c)
}

/// `det(tU − Uᵀ)` by the three-term recurrence for tridiagonal determinants,
/// `Dₖ = Mₖₖ·Dₖ₋₁ − Mₖ,ₖ₋₁·Mₖ₋₁,ₖ·Dₖ₋₂`, over `Z[t]`.
///
/// The result is raw: degree `m`, leading coefficient `∏aᵢ`.
pub fn alexander_poly(w: &CfWord) -> IntPoly {
    let u = seifert_matrix(w);
    let u = u.inner();
    let int = |r: &Rational| r.to_integer();
    // tU − Uᵀ at (i, j)
    let entry = |i: usize, j: usize| {
        IntPoly::new(vec![-int(u.get(j, i)), int(u.get(i, j))])
    };
    let m = w.len();
    let mut prev = IntPoly::one();
    let mut cur = entry(0, 0);
    for k in 1..m {
        let next = &(&entry(k, k) * &cur) - &(&(&entry(k, k - 1) * &entry(k - 1, k)) * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Divides out the content and makes the leading coefficient positive.
pub fn normalized_alexander(delta: &IntPoly) -> IntPoly {
    delta.primitive_part()
}

/// The real symmetric companion matrix of `Δ` for words whose adjacent
/// entries alternate in sign. With `aᵢ = |wᵢ|` and `sᵢ = 1/√(aᵢaᵢ₊₁)`:
///
/// - odd `i`: `Aᵢᵢ = 1`;
/// - even `i`: `Aᵢᵢ = 1 + 1/(aᵢ₋₁aᵢ) + 1/(aᵢaᵢ₊₁)`;
/// - `Aᵢ,ᵢ₊₁ = −sᵢ` for odd `i`, `+sᵢ` for even `i`;
/// - even `i`: `Aᵢ,ᵢ₊₂ = −sᵢ·sᵢ₊₁`.
///
/// Entries are irrational, so this is the one floating-point construction.
/// A word that starts with a negative entry is the mirror of its negation
/// and has the same `Δ` up to sign.
pub fn symmetric_companion(w: &CfWord) -> Result<DMatrix<f64>> {
    if !classify(w).thm2_applicable {
        return Err(Error::NotApplicable(format!(
            "symmetric companion needs alternating signs, got [{w}]"
        )));
    }
    let a: Vec<f64> = w.magnitudes().iter().map(|&x| x as f64).collect();
    let m = a.len();
    let s = |i: usize| 1.0 / (a[i] * a[i + 1]).sqrt();
    let mut out = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        // zero-based i is odd in one-based terms when i is even
        let odd = i % 2 == 0;
        if odd {
            out[(i, i)] = 1.0;
        } else {
            let mut d = 1.0 + 1.0 / (a[i - 1] * a[i]);
            if i + 1 < m {
                d += 1.0 / (a[i] * a[i + 1]);
            }
            out[(i, i)] = d;
            if i + 2 < m {
                let v = -s(i) * s(i + 1);
                out[(i, i + 2)] = v;
                out[(i + 2, i)] = v;
            }
        }
        if i + 1 < m {
            let v = if odd { -s(i) } else { s(i) };
            out[(i, i + 1)] = v;
            out[(i + 1, i)] = v;
        }
    }
    Ok(out)
}

/// Eigenvalues of [`symmetric_companion`], ascending.
pub fn symmetric_companion_eigenvalues(w: &CfWord) -> Result<Vec<f64>> {
    let m = symmetric_companion(w)?;
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// `∏ aᵢ` as a big integer.
pub fn word_product(w: &CfWord) -> BigInt {
    w.a().iter().fold(BigInt::one(), |acc, &x| acc * x)
}
