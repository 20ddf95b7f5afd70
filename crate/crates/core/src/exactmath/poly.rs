use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{sign_of, Rational};

/// Dense integer polynomial, coefficients in ascending order of degree.
/// Trailing zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·tᵏ`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `a·t + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `tᵏ`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` computed with integer arithmetic only: for `x = n/d`
    /// with `d > 0` this is the sign of `Σ cᵢ nⁱ dᵏ⁻ⁱ`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let Some((lead, rest)) = self.coeffs.split_last() else {
            return 0;
        };
        let (n, d) = (x.numer(), x.denom());
        if d.is_one() {
            return sign_of(&self.eval(n));
        }
        let mut acc = lead.clone();
        let mut dpow = BigInt::one();
        for c in rest.iter().rev() {
            dpow *= d;
            acc = acc * n + c * &dpow;
        }
        sign_of(&acc)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64_coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.to_f64_coeffs()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `self(inner(t))`
    pub fn compose(&self, inner: &IntPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Coefficient list reversed, i.e. `tⁿ·p(1/t)` for `n = deg p`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Remainder of `self·L^δ` by `divisor`, where `L = |lc(divisor)|`.
    /// The positive multiplier keeps signs intact, which Sturm chains rely on.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading().unwrap();
        let l = lc.abs();
        let sgn = BigInt::from(sign_of(lc));
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let f = r.leading().unwrap() * &sgn;
            r = &r.scale(&l) - &divisor.scale(&f).shift(dr - dd);
        }
        r
    }

    /// Exact quotient in `Z[t]`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<Self> {
        let dd = divisor.degree()?;
        let lc = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (f, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&f).shift(dr - dd);
            q[dr - dd] = f;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.degree() == Some(0) {
            return Self::one();
        }
        a
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let p = self.primitive_part();
        if p.degree().unwrap_or(0) == 0 {
            return p;
        }
        let g = p.gcd(&p.derivative());
        p.div_exact(&g).expect("gcd divides").primitive_part()
    }

    /// Yun's algorithm: `p = content · Π fᵢⁱ` with every `fᵢ` squarefree,
    /// primitive and pairwise coprime. Constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let p = self.primitive_part();
        let mut out = Vec::new();
        if p.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0).expect("gcd divides");
        let c = dp.div_exact(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.div_exact(&a).expect("gcd divides");
            let nc = d.div_exact(&a).expect("gcd divides");
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &nc - &nb.derivative();
            b = nb;
            i += 1;
        }
        out
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&mono);
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
