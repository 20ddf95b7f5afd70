use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalindromeSign {
    Plus,
    Minus,
}

/// `Some(s)` when `tⁿ·p(1/t) = s·p(t)`, `None` when `p` is not (anti)palindromic.
pub fn palindrome_sign(p: &IntPoly) -> Result<Option<PalindromeSign>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = p.coeffs();
    let n = c.len();
    if (0..n).all(|i| c[i] == c[n - 1 - i]) {
        Ok(Some(PalindromeSign::Plus))
    } else if (0..n).all(|i| c[i] == -&c[n - 1 - i]) {
        Ok(Some(PalindromeSign::Minus))
    } else {
        Ok(None)
    }
}

/// For palindromic `p` of degree `2m`, returns `q` of degree `m` with
/// `p(t) = tᵐ·q(t + 1/t)`.
///
/// `t⁻ᵐp(t) = c_m + Σₖ c_{m+k}(tᵏ + t⁻ᵏ)` and `tᵏ + t⁻ᵏ = sₖ(x)` with
/// `s₀ = 2, s₁ = x, sₖ = x·sₖ₋₁ − sₖ₋₂`.
pub fn symmetric_fold(p: &IntPoly) -> Result<IntPoly> {
    if palindrome_sign(p)? != Some(PalindromeSign::Plus) {
        return Err(Error::NotFoldable("not palindromic"));
    }
    let n = p.degree().unwrap();
    if !n.is_multiple_of(2) {
        return Err(Error::NotFoldable("odd degree"));
    }
    let m = n / 2;
    let x = IntPoly::var();
    let mut q = IntPoly::constant(p.coeff(m));
    let mut prev = IntPoly::constant(BigInt::from(2));
    let mut cur = x.clone();
    for k in 1..=m {
        q = &q + &cur.scale(&p.coeff(m + k));
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(q)
}

/// Inverse of [`symmetric_fold`]: `tᵐ·q(t + 1/t) = Σ qₖ tᵐ⁻ᵏ (t² + 1)ᵏ`.
pub fn symmetric_unfold(q: &IntPoly, m: usize) -> Result<IntPoly> {
    let Some(deg) = q.degree() else {
        return Ok(IntPoly::zero());
    };
    if deg > m {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} exceeds unfold order {m}"
        )));
    }
    let t2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut pow = IntPoly::one();
    let mut out = IntPoly::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &pow.scale(c).shift(m - k);
        }
        pow = &pow * &t2p1;
    }
    Ok(out)
}
