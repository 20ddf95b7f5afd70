use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::rational::{rat_int, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// Small dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(RatMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        RatMatrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![rat_int(1); n])
    }

    pub fn diagonal(d: Vec<Rational>) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RatMatrix { n: self.n, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_tridiagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i.abs_diff(j) <= 1 || self.get(i, j).is_zero()))
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.iter().map(rational_to_f64).collect()).collect()
    }

    fn check_dims(&self, other: &RatMatrix) {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.check_dims(rhs);
        RatMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self.check_dims(rhs);
        RatMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.check_dims(rhs);
        let n = self.n;
        let mut out = RatMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Outcome of an exact LDLᵀ positive-definiteness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PdVerdict {
    /// All `m` pivots are positive.
    PositiveDefinite {
        #[serde(serialize_with = "crate::serde_util::rationals")]
        pivots: Vec<Rational>,
    },
    /// Pivot number `index` (one-based) is zero or negative. `pivots` holds
    /// every pivot up to and including the failing one.
    NotPositiveDefinite {
        index: usize,
        #[serde(serialize_with = "crate::serde_util::rationals")]
        pivots: Vec<Rational>,
    },
}

impl PdVerdict {
    pub fn is_pd(&self) -> bool {
        matches!(self, PdVerdict::PositiveDefinite { .. })
    }

    pub fn pivots(&self) -> &[Rational] {
        match self {
            PdVerdict::PositiveDefinite { pivots } | PdVerdict::NotPositiveDefinite { pivots, .. } => pivots,
        }
    }
}

/// Exact LDLᵀ without pivoting. A nonpositive pivot at step `i` is a
/// disproof of positive definiteness (Sylvester's criterion on the leading
/// minors), so the factorization stops there.
pub fn ldlt_positive_definite(m: &RatMatrix) -> Result<PdVerdict> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.dim();
    let mut l = vec![vec![Rational::zero(); n]; n];
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = m.get(j, j).clone();
        for k in 0..j {
            if !l[j][k].is_zero() {
                dj -= &l[j][k] * &l[j][k] * &d[k];
            }
        }
        let bad = !dj.is_positive();
        d.push(dj);
        if bad {
            return Ok(PdVerdict::NotPositiveDefinite { index: j + 1, pivots: d });
        }
        for i in j + 1..n {
            let mut s = m.get(i, j).clone();
            for k in 0..j {
                if !l[i][k].is_zero() && !l[j][k].is_zero() {
                    s -= &l[i][k] * &l[j][k] * &d[k];
                }
            }
            l[i][j] = s / &d[j];
        }
    }
    Ok(PdVerdict::PositiveDefinite { pivots: d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn ldlt_examples() {
        assert_eq!(
            ldlt_positive_definite(&m(&[&[2, 1], &[1, 1]])).unwrap(),
            PdVerdict::PositiveDefinite { pivots: vec![rat(2, 1), rat(1, 2)] }
        );
        let v = ldlt_positive_definite(&m(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(v, PdVerdict::NotPositiveDefinite { index: 2, pivots: vec![rat(1, 1), rat(-3, 1)] });
        assert_eq!(
            ldlt_positive_definite(&m(&[&[4, 0], &[0, 2]])).unwrap(),
            PdVerdict::PositiveDefinite { pivots: vec![rat(4, 1), rat(2, 1)] }
        );
    }

    #[test]
    fn ldlt_zero_pivot_and_asymmetry() {
        let v = ldlt_positive_definite(&m(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(v, PdVerdict::NotPositiveDefinite { index: 1, pivots: vec![rat(0, 1)] });
        assert_eq!(ldlt_positive_definite(&m(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn construction() {
        assert_eq!(RatMatrix::new(vec![]), Err(Error::NotSquare));
        assert_eq!(RatMatrix::new(vec![vec![rat(1, 1)], vec![]]), Err(Error::NotSquare));
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &RatMatrix::identity(2), a);
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert!(m(&[&[1, 2, 0], &[2, 1, 3], &[0, 3, 1]]).is_tridiagonal());
        assert!(!m(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 1]]).is_tridiagonal());
    }
}
