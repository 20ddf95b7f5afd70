//! Lyapunov-style certificates for bounds on the real parts of the zeros.
//!
//! With `A` the companion matrix of `Δ`, every zero satisfies `Re > −k` when
//! `W = V(kE + A) + (kE + Aᵀ)V` is positive definite for some positive
//! definite `V`, and `Re < q` when `W = V(qE − A) + (qE − Aᵀ)V` is. A
//! certificate fixes `V`, so a negative verdict only means "uncertified".

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactmath::{ldlt_positive_definite, rat, rat_int, PdVerdict, RatMatrix, Rational};
use crate::seifert::companion_matrix;
use crate::twobridge::{classify, CfWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundSide {
    /// Certify `Re(α) > −k`.
    Lower(Rational),
    /// Certify `Re(α) < q`.
    Upper(Rational),
}

impl BoundSide {
    pub fn value(&self) -> &Rational {
        match self {
            BoundSide::Lower(k) | BoundSide::Upper(k) => k,
        }
    }

    pub fn statement(&self) -> String {
        match self {
            BoundSide::Lower(k) => format!("all zeros satisfy Re > -{k}"),
            BoundSide::Upper(q) => format!("all zeros satisfy Re < {q}"),
        }
    }

    /// Whether `re` satisfies the bound this side describes.
    pub fn admits(&self, re: f64) -> bool {
        let b = crate::exactmath::rational_to_f64(self.value());
        match self {
            BoundSide::Lower(_) => re > -b,
            BoundSide::Upper(_) => re < b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VChoice {
    Identity,
    /// `V = diag(|a₁|, …, |a_m|)`
    DiagA,
}

impl fmt::Display for VChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VChoice::Identity => "identity",
            VChoice::DiagA => "diag-a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub kind: BoundSide,
    pub v_choice: VChoice,
    pub w: RatMatrix,
    pub verdict: PdVerdict,
    pub implied_statement: String,
}

impl CertificateReport {
    pub fn certified(&self) -> bool {
        self.verdict.is_pd()
    }

    /// `{"kind", "k", "v", "pivots", "verdict", "implied"}`; pivots and the
    /// bound are exact decimal fraction strings.
    pub fn to_json(&self) -> serde_json::Value {
        let kind = match self.kind {
            BoundSide::Lower(_) => "lower",
            BoundSide::Upper(_) => "upper",
        };
        let verdict = &self.verdict;
        let mut out = json!({
            "kind": kind,
            "k": self.kind.value().to_string(),
            "v": self.v_choice.to_string(),
            "pivots": verdict.pivots().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "verdict": if verdict.is_pd() { "positive_definite" } else { "not_positive_definite" },
            "implied": self.implied_statement,
        });
        if let PdVerdict::NotPositiveDefinite { index, .. } = verdict {
            out["failed_pivot"] = json!(index);
        }
        out
    }
}

/// Builds `W` for the given side and `V`, and decides positive definiteness
/// exactly.
pub fn lyapunov_certificate(w: &CfWord, side: BoundSide, v: VChoice) -> Result<CertificateReport> {
    if !side.value().is_positive() {
        return Err(Error::InvalidArgument(format!("bound must be positive, got {}", side.value())));
    }
    let a = companion_matrix(w);
    let a = a.inner();
    let m = w.len();
    let shift = RatMatrix::identity(m).scale(side.value());
    let core = match side {
        BoundSide::Lower(_) => &shift + a,
        BoundSide::Upper(_) => &shift - a,
    };
    let vm = match v {
        VChoice::Identity => RatMatrix::identity(m),
        VChoice::DiagA => RatMatrix::diagonal(w.magnitudes().into_iter().map(rat_int).collect()),
    };
    let wm = &(&vm * &core) + &(&core.transpose() * &vm);
    let verdict = ldlt_positive_definite(&wm)?;
    let implied_statement = if verdict.is_pd() {
        side.statement()
    } else {
        format!("uncertified ({} not established with V = {v})", side.statement())
    };
    Ok(CertificateReport { kind: side, v_choice: v, w: wm, verdict, implied_statement })
}

/// Diagonal-dominance test for a symmetric tridiagonal matrix:
/// (i) every diagonal entry positive, (ii) `aⱼⱼ ≥ |aⱼ,ⱼ₋₁| + |aⱼ,ⱼ₊₁|` for
/// all `j`, and (iii) in every block split off by a zero off-diagonal entry
/// some row is strictly dominant. Any matrix passing is positive definite.
pub fn positivity_lemma_check(n: &RatMatrix) -> Result<bool> {
    if !n.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !n.is_tridiagonal() {
        return Err(Error::NotTridiagonal);
    }
    let size = n.dim();
    let off = |j: usize| -> Rational {
        let mut s = Rational::zero();
        if j > 0 {
            s += n.get(j, j - 1).abs();
        }
        if j + 1 < size {
            s += n.get(j, j + 1).abs();
        }
        s
    };
    let mut block_strict = false;
    for j in 0..size {
        let d = n.get(j, j);
        if !d.is_positive() {
            return Ok(false);
        }
        let o = off(j);
        if d < &o {
            return Ok(false);
        }
        block_strict |= d > &o;
        let block_ends = j + 1 == size || n.get(j, j + 1).is_zero();
        if block_ends {
            if !block_strict {
                return Ok(false);
            }
            block_strict = false;
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockTheorem {
    /// `2kE + A + Aᵀ` with `k = 3`.
    T1Lower,
    /// `2qE − (A + Aᵀ)` with `q = 6`.
    T1Upper,
    /// `V(E + A) + (E + Aᵀ)V` with `V = diag|aᵢ|`.
    T3,
    /// Fibered specialization of `T3`.
    T4,
}

/// Congruence-reduced form of a certificate matrix: after eliminating the
/// odd-indexed rows it splits as `diag(diag_blocks) ⊕ N` where `N` is the
/// symmetric tridiagonal matrix with diagonal `tri_diag` and off-diagonal
/// `tri_off`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub theorem: BlockTheorem,
    pub diag_blocks: Vec<Rational>,
    pub tri_diag: Vec<Rational>,
    pub tri_off: Vec<Rational>,
    pub lemma_ok: bool,
}

impl BlockReport {
    fn finish(theorem: BlockTheorem, diag_blocks: Vec<Rational>, tri_diag: Vec<Rational>, tri_off: Vec<Rational>) -> Self {
        let mut report = BlockReport { theorem, diag_blocks, tri_diag, tri_off, lemma_ok: false };
        report.lemma_ok = report.diag_blocks.iter().all(Signed::is_positive)
            && report
                .tridiagonal()
                .map(|n| positivity_lemma_check(&n).expect("tridiagonal by construction"))
                .unwrap_or(true);
        report
    }

    /// The tridiagonal block `N`, or `None` when it is empty (`m = 1`).
    pub fn tridiagonal(&self) -> Option<RatMatrix> {
        let l = self.tri_diag.len();
        if l == 0 {
            return None;
        }
        let mut n = RatMatrix::diagonal(self.tri_diag.clone());
        for (j, b) in self.tri_off.iter().enumerate() {
            n.set(j, j + 1, b.clone());
            n.set(j + 1, j, b.clone());
        }
        Some(n)
    }
}

/// Block quantities for the fixed bounds: `k = 3`, `q = 6`, and the
/// `V = diag|aᵢ|`, `k = 1` certificate.
pub fn theorem_blocks(w: &CfWord, theorem: BlockTheorem) -> Result<BlockReport> {
    match theorem {
        BlockTheorem::T1Lower => t1_lower_blocks(w, &rat_int(3)),
        BlockTheorem::T1Upper => t1_upper_blocks(w, &rat_int(6)),
        BlockTheorem::T3 => {
            if !classify(w).thm3_applicable {
                return Err(Error::NotApplicable(format!("[{w}] has adjacent entries with product 1")));
            }
            Ok(t3_blocks(w, BlockTheorem::T3))
        }
        BlockTheorem::T4 => {
            if !classify(w).fibered {
                return Err(Error::NotApplicable(format!("[{w}] is not fibered")));
            }
            Ok(t3_blocks(w, BlockTheorem::T4))
        }
    }
}

/// Shared pieces of `A + Aᵀ`: `bⱼ = −1/aⱼ + 1/aⱼ₊₁` and
/// `dⱼ = 1/(a₂ⱼa₂ⱼ₊₁) + 1/(a₂ⱼ₊₁a₂ⱼ₊₂)`, plus the pair sums
/// `pⱼ = 1/(a₂ⱼ₋₁a₂ⱼ) + 1/(a₂ⱼa₂ⱼ₊₁)` (second term dropped past the end).
struct SumParts {
    m: usize,
    b: Vec<Rational>,
    d: Vec<Rational>,
    p: Vec<Rational>,
}

impl SumParts {
    fn new(w: &CfWord) -> Self {
        let m = w.len();
        let a = |i: usize| w.at(i);
        let l = m / 2;
        let b = (1..m).map(|j| rat(-1, a(j)) + rat(1, a(j + 1))).collect();
        let d = (1..l).map(|j| rat(1, a(2 * j) * a(2 * j + 1)) + rat(1, a(2 * j + 1) * a(2 * j + 2))).collect();
        let p = (1..=l)
            .map(|j| {
                let mut s = rat(1, a(2 * j - 1) * a(2 * j));
                if 2 * j < m {
                    s += rat(1, a(2 * j) * a(2 * j + 1));
                }
                s
            })
            .collect();
        SumParts { m, b, d, p }
    }

    /// One-based `bⱼ`, zero past the end.
    fn b(&self, j: usize) -> Rational {
        self.b.get(j - 1).cloned().unwrap_or_default()
    }

    fn l(&self) -> usize {
        self.m / 2
    }
}

/// Blocks of `A₀ = 2kE + A + Aᵀ`: odd rows give `2k + 2`; the reduced
/// tridiagonal block has
/// `αⱼ = cⱼ − b²₂ⱼ₋₁/(2k+2) − b²₂ⱼ/(2k+2)` with `cⱼ = 2k + 2 − 2pⱼ`, and
/// `βⱼ = dⱼ − b₂ⱼb₂ⱼ₊₁/(2k+2)`.
pub fn t1_lower_blocks(w: &CfWord, k: &Rational) -> Result<BlockReport> {
    if !k.is_positive() {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let parts = SumParts::new(w);
    let s = k * rat_int(2) + rat_int(2);
    Ok(reduce_t1(&parts, BlockTheorem::T1Lower, &s, false))
}

/// Blocks of `B₀ = 2qE − (A + Aᵀ)`: odd rows give `2q − 2`;
/// `γⱼ = eⱼ − b²₂ⱼ₋₁/(2q−2) − b²₂ⱼ/(2q−2)` with `eⱼ = 2q − 2 + 2pⱼ`, and
/// `δⱼ = −dⱼ − b₂ⱼb₂ⱼ₊₁/(2q−2)`.
pub fn t1_upper_blocks(w: &CfWord, q: &Rational) -> Result<BlockReport> {
    if q <= &rat_int(1) {
        return Err(Error::InvalidArgument(format!("q must exceed 1, got {q}")));
    }
    let parts = SumParts::new(w);
    let s = q * rat_int(2) - rat_int(2);
    Ok(reduce_t1(&parts, BlockTheorem::T1Upper, &s, true))
}

fn reduce_t1(parts: &SumParts, theorem: BlockTheorem, s: &Rational, upper: bool) -> BlockReport {
    let m = parts.m;
    let l = parts.l();
    let diag_blocks = vec![s.clone(); m - l];
    let two = rat_int(2);
    let tri_diag = (1..=l)
        .map(|j| {
            let c = if upper { s + &two * &parts.p[j - 1] } else { s - &two * &parts.p[j - 1] };
            let b1 = parts.b(2 * j - 1);
            let b2 = parts.b(2 * j);
            c - (&b1 * &b1 + &b2 * &b2) / s
        })
        .collect();
    let tri_off = (1..l)
        .map(|j| {
            let d = &parts.d[j - 1];
            let bb = parts.b(2 * j) * parts.b(2 * j + 1) / s;
            if upper {
                -d - bb
            } else {
                d - bb
            }
        })
        .collect();
    BlockReport::finish(theorem, diag_blocks, tri_diag, tri_off)
}

/// Blocks of `W = V(E + A) + (E + Aᵀ)V`, `V = diag(aᵢ)`, written for
/// `wᵢ = εᵢaᵢ` with `aᵢ > 0`:
///
/// `α₂ᵢ = 4a₂ᵢ − (3/2)ε₂ᵢ₋₁,₂ᵢ/a₂ᵢ₋₁ − 1/(2a₂ᵢ₋₁) − (3/2)ε₂ᵢ,₂ᵢ₊₁/a₂ᵢ₊₁ − 1/(2a₂ᵢ₊₁)`
/// (last pair absent when `2i = m`), and
/// `β₂ᵢ = (3/4)(ε₂ᵢ,₂ᵢ₊₁ + ε₂ᵢ₊₁,₂ᵢ₊₂)/a₂ᵢ₊₁ + (ε₂ᵢ,₂ᵢ₊₂ + 1)/(4a₂ᵢ₊₁)`.
fn t3_blocks(w: &CfWord, theorem: BlockTheorem) -> BlockReport {
    let m = w.len();
    let l = m / 2;
    let a = |i: usize| w.at(i).abs();
    let e = |i: usize, j: usize| w.eps(i) * w.eps(j);
    let diag_blocks = (1..=m).step_by(2).map(|i| rat_int(4 * a(i))).collect();
    let side = |i: usize, nb: usize| rat(3 * e(i, nb), 2 * a(nb)) + rat(1, 2 * a(nb));
    let tri_diag = (1..=l)
        .map(|i| {
            let mut v = rat_int(4 * a(2 * i)) - side(2 * i, 2 * i - 1);
            if 2 * i < m {
                v -= side(2 * i, 2 * i + 1);
            }
            v
        })
        .collect();
    let tri_off = (1..l)
        .map(|i| {
            let c = 2 * i + 1;
            rat(3 * (e(2 * i, c) + e(c, 2 * i + 2)), 4 * a(c)) + rat(e(2 * i, 2 * i + 2) + 1, 4 * a(c))
        })
        .collect();
    BlockReport::finish(theorem, diag_blocks, tri_diag, tri_off)
}

/// `W = V(E + A) + (E + Aᵀ)V` with `V = diag(aᵢ)` assembled entry by entry
/// from the sign decomposition `wᵢ = εᵢaᵢ`:
/// odd `i`: `Wᵢᵢ = 4aᵢ`; even `i`: `Wᵢᵢ = 4aᵢ − 2εᵢ₋₁,ᵢ/aᵢ₋₁ − 2εᵢ,ᵢ₊₁/aᵢ₊₁`;
/// `Wᵢ,ᵢ₊₁ = −εᵢ + εᵢ₊₁`; even `i`: `Wᵢ,ᵢ₊₂ = (εᵢ,ᵢ₊₁ + εᵢ₊₁,ᵢ₊₂)/aᵢ₊₁`.
pub fn theorem3_w_display(w: &CfWord) -> RatMatrix {
    let m = w.len();
    let a = |i: usize| w.at(i).abs();
    let e = |i: usize, j: usize| w.eps(i) * w.eps(j);
    let mut out = RatMatrix::zeros(m);
    let mut sym = |i: usize, j: usize, v: Rational| {
        out.set(i - 1, j - 1, v.clone());
        out.set(j - 1, i - 1, v);
    };
    for i in 1..=m {
        if i % 2 == 1 {
            sym(i, i, rat_int(4 * a(i)));
        } else {
            let mut d = rat_int(4 * a(i)) - rat(2 * e(i - 1, i), a(i - 1));
            if i < m {
                d -= rat(2 * e(i, i + 1), a(i + 1));
            }
            sym(i, i, d);
            if i + 2 <= m {
                sym(i, i + 2, rat(e(i, i + 1) + e(i + 1, i + 2), a(i + 1)));
            }
        }
        if i < m {
            sym(i, i + 1, rat_int(w.eps(i + 1) - w.eps(i)));
        }
    }
    out
}

/// The elimination matrix `P` for which `P·M·Pᵀ` splits into the diagonal
/// odd-row part and the tridiagonal block on the even rows: row `2j` of `P`
/// carries `−M₂ⱼ,₂ⱼ±₁ / M₂ⱼ±₁,₂ⱼ±₁` at the neighbouring odd columns.
pub fn odd_row_elimination(mm: &RatMatrix) -> RatMatrix {
    let n = mm.dim();
    let mut p = RatMatrix::identity(n);
    for r in (1..n).step_by(2) {
        for c in [r - 1, r + 1] {
            if c < n {
                p.set(r, c, -(mm.get(r, c) / mm.get(c, c)));
            }
        }
    }
    p
}

/// Fibered words whose sign runs have length 1 or 2. Interior blocks take
/// `α₂ᵢ ∈ {3, 6}`, the closing block of an even-length word
/// (one neighbour only) takes `α_m ∈ {2, 5}`, and `β₂ᵢ ∈ {0, −1}`.
pub fn theorem4_check(w: &CfWord) -> Result<bool> {
    let c = classify(w);
    if !c.fibered {
        return Err(Error::NotApplicable(format!("[{w}] is not fibered")));
    }
    if !c.thm4_applicable {
        return Ok(false);
    }
    let r = t3_blocks(w, BlockTheorem::T4);
    let m = w.len();
    let in_set = |x: &Rational, set: &[i64]| set.iter().any(|&v| x == &rat_int(v));
    let alphas_ok = r.tri_diag.iter().enumerate().all(|(idx, x)| {
        let i = idx + 1;
        if 2 * i == m {
            in_set(x, &[2, 5])
        } else {
            in_set(x, &[3, 6])
        }
    });
    let betas_ok = r.tri_off.iter().all(|x| in_set(x, &[0, -1]));
    Ok(alphas_ok && betas_ok && r.lemma_ok)
}
