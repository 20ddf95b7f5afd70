//! Two-bridge fractions `β/α` and their even continued fraction words.
//!
//! `β/α = 1/(2a₁ − 1/(2a₂ − … − 1/(2a_m)))` is written `[2a₁, …, 2a_m]`; a
//! [`CfWord`] stores the half-coefficients `aᵢ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Nonempty list of nonzero half-coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CfWord(Vec<i64>);

impl CfWord {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if let Some(i) = a.iter().position(|&x| x == 0) {
            return Err(Error::InvalidWord(format!("entry {} is zero", i + 1)));
        }
        Ok(CfWord(a))
    }

    pub fn a(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// One-based access, matching the usual `a₁ … a_m` indexing.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// `εᵢ = sign(aᵢ)`, one-based.
    pub fn eps(&self, i: usize) -> i64 {
        self.at(i).signum()
    }

    pub fn magnitudes(&self) -> Vec<i64> {
        self.0.iter().map(|x| x.abs()).collect()
    }

    pub fn negated(&self) -> CfWord {
        CfWord(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_knot(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    /// Lengths of the maximal runs of equal sign.
    pub fn sign_runs(&self) -> Vec<usize> {
        let mut runs: Vec<usize> = Vec::new();
        let mut prev = 0;
        for &x in &self.0 {
            let s = x.signum();
            if s == prev {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                prev = s;
            }
        }
        runs
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for CfWord {
    type Err = Error;

    /// Comma-separated signed integers, e.g. `"1,-1,2"`. Brackets and
    /// whitespace are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let a = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidWord(format!("bad entry {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        CfWord::new(a)
    }
}

impl Serialize for CfWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_fraction(beta: &BigInt, alpha: &BigInt) -> Result<()> {
    if !(beta.is_positive() && beta < alpha) {
        return Err(Error::OutOfRange(format!("{beta}/{alpha}")));
    }
    if !beta.gcd(alpha).is_one() {
        return Err(Error::NotReduced { numerator: beta.to_string(), denominator: alpha.to_string() });
    }
    Ok(())
}

/// Returns `(β, α)` unchanged when one of them is even, otherwise the
/// mirror fraction `(α − β, α)`. The second component reports whether the
/// mirror was taken.
pub fn normalize_fraction(beta: &BigInt, alpha: &BigInt) -> Result<((BigInt, BigInt), bool)> {
    check_fraction(beta, alpha)?;
    if beta.is_odd() && alpha.is_odd() {
        Ok(((alpha - beta, alpha.clone()), true))
    } else {
        Ok(((beta.clone(), alpha.clone()), false))
    }
}

/// The unique even continued fraction of `β/α`. Exactly one of `β`, `α`
/// must be even.
pub fn even_cf_expand(beta: &BigInt, alpha: &BigInt) -> Result<CfWord> {
    check_fraction(beta, alpha)?;
    if beta.is_odd() && alpha.is_odd() {
        return Err(Error::ParityError);
    }
    let mut v = Rational::new(beta.clone(), alpha.clone());
    let mut a = Vec::new();
    while !v.is_zero() {
        let inv = v.recip();
        let fl = inv.floor().to_integer();
        let even = if fl.is_even() { fl } else { fl + 1 };
        let next = Rational::from_integer(even.clone()) - &inv;
        // |2a − 1/v| = 1 only if 1/v is an odd integer.
        if next.abs() >= Rational::one() {
            return Err(Error::ParityError);
        }
        let half = (even / BigInt::from(2))
            .to_i64()
            .ok_or_else(|| Error::InvalidArgument("partial quotient exceeds i64".into()))?;
        a.push(half);
        v = next;
    }
    CfWord::new(a)
}

/// Evaluates the word bottom-up. Returns `(β, α)` in lowest terms with
/// `α > 0`; `β` carries the sign of the value.
pub fn cf_to_fraction(w: &CfWord) -> Result<(BigInt, BigInt)> {
    let mut tail = Rational::zero();
    for &a in w.a().iter().rev() {
        let denom = Rational::from_integer(BigInt::from(2 * a)) - tail;
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tail = denom.recip();
    }
    Ok((tail.numer().clone(), tail.denom().clone()))
}

/// Boolean invariants read directly off a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_knot: bool,
    pub is_link: bool,
    /// All entries of one sign.
    pub special_alternating: bool,
    /// All `|aᵢ| = 1`.
    pub fibered: bool,
    /// All adjacent products negative.
    pub alternating_diagram: bool,
    pub thm2_applicable: bool,
    /// No adjacent pair with `aᵢaᵢ₊₁ = 1`.
    pub thm3_applicable: bool,
    /// `thm3_applicable` and every `|aᵢ| > 1`.
    pub thm3_strong: bool,
    /// Fibered with every maximal equal-sign run of length at most 2.
    pub thm4_applicable: bool,
}

pub fn classify(w: &CfWord) -> Classification {
    let a = w.a();
    let pairs = || a.windows(2).map(|p| p[0] * p[1]);
    let is_knot = w.is_knot();
    let alternating_diagram = pairs().all(|x| x < 0);
    let thm3_applicable = pairs().all(|x| x != 1);
    let fibered = a.iter().all(|x| x.abs() == 1);
    Classification {
        is_knot,
        is_link: !is_knot,
        special_alternating: a.iter().all(|&x| x > 0) || a.iter().all(|&x| x < 0),
        fibered,
        alternating_diagram,
        thm2_applicable: alternating_diagram,
        thm3_applicable,
        thm3_strong: thm3_applicable && a.iter().all(|x| x.abs() > 1),
        thm4_applicable: fibered && w.sign_runs().iter().all(|&k| k <= 2),
    }
}
