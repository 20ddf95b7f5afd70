use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::IntPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

impl Endpoint {
    fn le(&self, other: &Endpoint) -> bool {
        use Endpoint::*;
        match (self, other) {
            (NegInfinity, _) | (_, PosInfinity) => true,
            (At(a), At(b)) => a <= b,
            _ => false,
        }
    }
}

impl From<Rational> for Endpoint {
    fn from(r: Rational) -> Self {
        Endpoint::At(r)
    }
}

/// Signed remainder sequence `p, p′, −rem(p, p′), …` with every term after
/// the second reduced to its primitive part (a positive rescaling).
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(SturmChain { polys });
        }
        polys.push(d);
        loop {
            let n = polys.len();
            let r = polys[n - 2].pseudo_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            let g = r.content();
            polys.push(IntPoly::new(r.coeffs().iter().map(|c| -(c / &g)).collect()));
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn variations(&self, at: &Endpoint) -> usize {
        let signs = self.polys.iter().map(|q| match at {
            Endpoint::At(x) => q.sign_at(x),
            Endpoint::PosInfinity => lead_sign(q),
            Endpoint::NegInfinity => {
                let s = lead_sign(q);
                if q.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`; requires the chain's polynomial squarefree.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

fn lead_sign(q: &IntPoly) -> i8 {
    match q.leading() {
        Some(c) if c.is_positive() => 1,
        Some(c) if c.is_negative() => -1,
        _ => 0,
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`. `p` is reduced to its
/// squarefree part first.
pub fn sturm_real_root_count(p: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.le(hi) || lo == hi {
        return Err(Error::EmptyInterval);
    }
    let chain = SturmChain::new(&p.squarefree_part())?;
    Ok(chain.count(lo, hi))
}

/// `1 + ⌈max|cᵢ| / |cₙ|⌉`, an integer bound on the modulus of every root.
fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lead = p.leading().unwrap().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigInt::one() + (max + &lead - BigInt::one()) / lead
}

/// Disjoint half-open intervals `(lo, hi]`, one per distinct real root of
/// `p`, sorted increasingly.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<(Rational, Rational)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf)?;
    let b = Rational::from_integer(cauchy_bound(&sf));
    let lo = -b.clone();
    let v_lo = chain.variations(&Endpoint::At(lo.clone()));
    let v_hi = chain.variations(&Endpoint::At(b.clone()));
    let mut out = Vec::new();
    let mut stack = vec![(lo, v_lo, b, v_hi)];
    while let Some((a, va, b, vb)) = stack.pop() {
        let n = va - vb;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
        let vm = chain.variations(&Endpoint::At(mid.clone()));
        stack.push((a, va, mid.clone(), vm));
        stack.push((mid, vm, b, vb));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Shrinks an isolating interval `(lo, hi]` of a simple root of squarefree
/// `p` until `hi − lo ≤ width` by sign bisection. Returns a degenerate
/// interval when the root is hit exactly.
pub fn refine_root(
    p: &IntPoly,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> (Rational, Rational) {
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let sb = p.sign_at(&b);
    if sb == 0 {
        return (b.clone(), b);
    }
    let two = Rational::from_integer(BigInt::from(2));
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match p.sign_at(&mid) {
            0 => return (mid.clone(), mid),
            s if s == sb => b = mid,
            _ => a = mid,
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    const ALL: (Endpoint, Endpoint) = (Endpoint::NegInfinity, Endpoint::PosInfinity);

    #[test]
    fn counts_from_examples() {
        assert_eq!(sturm_real_root_count(&p(&[1, -1, 1]), &ALL.0, &ALL.1).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&p(&[-1, 1]), &ALL.0, &ALL.1).unwrap(), 1);
        let unit = (Endpoint::At(rat_int(0)), Endpoint::At(rat_int(1)));
        assert_eq!(sturm_real_root_count(&p(&[1, -3, 1]), &unit.0, &unit.1).unwrap(), 1);
    }

    #[test]
    fn half_open_interval() {
        // roots 1, 2
        let q = p(&[2, -3, 1]);
        let c = |a, b| sturm_real_root_count(&q, &Endpoint::At(rat_int(a)), &Endpoint::At(rat_int(b))).unwrap();
        assert_eq!(c(1, 2), 1);
        assert_eq!(c(0, 1), 1);
        assert_eq!(c(0, 2), 2);
        assert_eq!(c(2, 3), 0);
    }

    #[test]
    fn multiple_roots_counted_once() {
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        assert_eq!(sturm_real_root_count(&q, &ALL.0, &ALL.1).unwrap(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(sturm_real_root_count(&IntPoly::zero(), &ALL.0, &ALL.1), Err(Error::ZeroPolynomial));
        let x = Endpoint::At(rat(1, 2));
        assert_eq!(sturm_real_root_count(&p(&[1, 1]), &x, &x), Err(Error::EmptyInterval));
        assert_eq!(sturm_real_root_count(&p(&[1, 1]), &ALL.1, &ALL.0), Err(Error::EmptyInterval));
    }

    #[test]
    fn constant_has_no_roots() {
        assert_eq!(sturm_real_root_count(&p(&[7]), &ALL.0, &ALL.1).unwrap(), 0);
        assert!(isolate_real_roots(&p(&[7])).unwrap().is_empty());
    }

    #[test]
    fn isolation_and_refinement() {
        // (t^2 - 2)(t + 3)(t - 1/2)
        let q = &(&p(&[-2, 0, 1]) * &p(&[3, 1])) * &p(&[-1, 2]);
        let iv = isolate_real_roots(&q).unwrap();
        assert_eq!(iv.len(), 4);
        let sf = q.squarefree_part();
        let expect = [-3.0, -2f64.sqrt(), 0.5, 2f64.sqrt()];
        for ((a, b), e) in iv.iter().zip(expect) {
            let (a, b) = refine_root(&sf, a, b, &rat(1, 1 << 40));
            let mid = crate::exactmath::rational_to_f64(&((a + b) / rat_int(2)));
            assert!((mid - e).abs() < 1e-11, "{mid} vs {e}");
        }
    }
}
