//! Exhaustive runs over all words up to a length and entry bound.
//!
//! Words are visited by length, then lexicographically with entries in
//! numeric order `−A, …, −1, 1, …, A`. Records are written in that order
//! whatever the worker count, so outputs are byte-identical across `jobs`.

use std::collections::BTreeMap;
use std::io::Write;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{ldlt_positive_definite, rat_int, RatMatrix};
use crate::roots::{find_zeros, zero_report, ZeroReport, DEFAULT_TOL};
use crate::seifert::{alexander_poly, companion_matrix};
use crate::stability::{
    lyapunov_certificate, theorem4_check, theorem_blocks, BlockTheorem, BoundSide, VChoice,
};
use crate::twobridge::{cf_to_fraction, classify, CfWord, Classification};

pub const MAX_LEN: usize = 12;
pub const MAX_ENTRY: i64 = 6;
const CHUNK: usize = 2048;
/// Required separation between a certified bound and the computed zeros.
pub const SOUNDNESS_MARGIN: f64 = 1e-9;

/// Everything computed for one word. Serializes to one JSONL line.
#[derive(Debug, Clone, Serialize)]
pub struct KnotRecord {
    pub cf: CfWord,
    pub beta: String,
    pub alpha: String,
    pub m: usize,
    pub flags: Classification,
    pub delta: Vec<String>,
    #[serde(serialize_with = "crate::serde_util::complex_pairs")]
    pub zeros: Vec<Complex64>,
    #[serde(serialize_with = "crate::serde_util::f64_17")]
    pub min_re: f64,
    #[serde(serialize_with = "crate::serde_util::f64_17")]
    pub max_re: f64,
    pub hoste_ok: bool,
    pub thm1_ok: bool,
    pub certs: BTreeMap<&'static str, Cert>,
    #[serde(skip)]
    pub report: ZeroReport,
    /// Certified bounds contradicted by the zeros, or block reports whose
    /// `W` is not positive definite.
    #[serde(skip)]
    pub unsound: Vec<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cert {
    Certified,
    Uncertified,
}

impl From<bool> for Cert {
    fn from(ok: bool) -> Self {
        if ok {
            Cert::Certified
        } else {
            Cert::Uncertified
        }
    }
}

impl KnotRecord {
    pub fn cert(&self, name: &str) -> Option<Cert> {
        self.certs.get(name).copied()
    }
}

/// The `i`-th word of length `m` with entries bounded by `max_a`.
pub fn word_at(m: usize, max_a: i64, mut i: u64) -> CfWord {
    let base = 2 * max_a as u64;
    let mut a = vec![0i64; m];
    for slot in a.iter_mut().rev() {
        let d = (i % base) as i64;
        i /= base;
        *slot = if d < max_a { d - max_a } else { d - max_a + 1 };
    }
    CfWord::new(a).expect("entries are non-zero")
}

/// `Σ (2·max_a)^m` over `1 ≤ m ≤ max_m`.
pub fn word_count(max_m: usize, max_a: i64) -> u64 {
    (1..=max_m as u32).map(|m| (2 * max_a as u64).pow(m)).sum()
}

/// All words in sweep order.
pub fn enumerate_words(max_m: usize, max_a: i64) -> impl Iterator<Item = CfWord> {
    (1..=max_m).flat_map(move |m| (0..(2 * max_a as u64).pow(m as u32)).map(move |i| word_at(m, max_a, i)))
}

/// Computes the record and enforces the hard invariants: `|Δ(−1)| = α`,
/// `deg Δ = m`, reciprocal pairing of the zeros, and the `(−3, 6)` strip.
pub fn knot_record(w: &CfWord) -> Result<KnotRecord> {
    let fail = |what: String| Error::Invariant { word: w.to_string(), what };
    let m = w.len();
    let (beta, alpha) = cf_to_fraction(w)?;
    let delta = alexander_poly(w);
    if delta.degree() != Some(m) {
        return Err(fail(format!("degree of {delta} is not {m}")));
    }
    if delta.eval_i64(-1).abs() != alpha {
        return Err(fail(format!("|Δ(-1)| = {} but alpha = {alpha}", delta.eval_i64(-1).abs())));
    }
    let zs = find_zeros(&delta, DEFAULT_TOL)?;
    let report = zero_report(&zs);
    if !report.reciprocal_paired {
        return Err(fail("zeros are not closed under z -> 1/z".into()));
    }
    if !report.thm1_ok {
        return Err(fail(format!("zeros leave the strip: min_re {}, max_re {}", report.min_re, report.max_re)));
    }

    let flags = classify(w);
    let mut certs = BTreeMap::new();
    let mut unsound = Vec::new();
    let mut judge = |name: &'static str, ok: bool, side: Option<BoundSide>, w_matrix: Option<RatMatrix>| -> Result<()> {
        certs.insert(name, Cert::from(ok));
        if ok {
            let holds = match side {
                Some(BoundSide::Lower(k)) => {
                    report.min_re > -crate::exactmath::rational_to_f64(&k) + SOUNDNESS_MARGIN
                }
                Some(BoundSide::Upper(q)) => {
                    report.max_re < crate::exactmath::rational_to_f64(&q) - SOUNDNESS_MARGIN
                }
                None => true,
            };
            let pd = match w_matrix {
                Some(wm) => ldlt_positive_definite(&wm)?.is_pd(),
                None => true,
            };
            if !holds || !pd {
                unsound.push(name);
            }
        }
        Ok(())
    };

    let a = companion_matrix(w);
    let sym = a.inner() + &a.inner().transpose();
    let eye = RatMatrix::identity(m);
    let t1l = theorem_blocks(w, BlockTheorem::T1Lower)?;
    judge("t1_lower", t1l.lemma_ok, Some(BoundSide::Lower(rat_int(3))), Some(&eye.scale(&rat_int(6)) + &sym))?;
    let t1u = theorem_blocks(w, BlockTheorem::T1Upper)?;
    judge("t1_upper", t1u.lemma_ok, Some(BoundSide::Upper(rat_int(6))), Some(&eye.scale(&rat_int(12)) - &sym))?;
    if flags.thm3_applicable {
        let t3 = theorem_blocks(w, BlockTheorem::T3)?;
        let direct = lyapunov_certificate(w, BoundSide::Lower(rat_int(1)), VChoice::DiagA)?;
        judge("t3", t3.lemma_ok, Some(BoundSide::Lower(rat_int(1))), Some(direct.w))?;
    }
    if flags.thm3_strong {
        let c = lyapunov_certificate(w, BoundSide::Upper(rat_int(3)), VChoice::DiagA)?;
        judge("t3_upper3", c.certified(), Some(BoundSide::Upper(rat_int(3))), None)?;
    }
    if flags.thm4_applicable {
        judge("t4", theorem4_check(w)?, Some(BoundSide::Lower(rat_int(1))), None)?;
    }
    let id = lyapunov_certificate(w, BoundSide::Lower(rat_int(1)), VChoice::Identity)?;
    judge("lower1_identity", id.certified(), Some(BoundSide::Lower(rat_int(1))), None)?;

    Ok(KnotRecord {
        cf: w.clone(),
        beta: beta.to_string(),
        alpha: alpha.to_string(),
        m,
        flags,
        delta: delta.coeffs().iter().map(|c| c.to_string()).collect(),
        zeros: zs.zeros().to_vec(),
        min_re: report.min_re,
        max_re: report.max_re,
        hoste_ok: report.hoste_ok,
        thm1_ok: report.thm1_ok,
        certs,
        report,
        unsound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_m: usize,
    pub max_a: i64,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_LEN).contains(&self.max_m) {
            return Err(Error::InvalidArgument(format!("max-m must be in 1..={MAX_LEN}, got {}", self.max_m)));
        }
        if !(1..=MAX_ENTRY).contains(&self.max_a) {
            return Err(Error::InvalidArgument(format!("max-a must be in 1..={MAX_ENTRY}, got {}", self.max_a)));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be positive".into()));
        }
        Ok(())
    }
}

/// A word together with the value that made it notable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub cf: String,
    #[serde(serialize_with = "crate::serde_util::f64_17")]
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub records: u64,
    pub hoste_violations: u64,
    pub thm1_violations: u64,
    /// Certified bounds contradicted numerically; must stay zero.
    pub soundness_violations: u64,
    /// Real zeros `≤ 0`; must stay zero for alternating words.
    pub nonpositive_real_zeros: u64,
    /// Words whose reduced blocks miss the dominance test, per block family.
    pub lemma_failures: BTreeMap<&'static str, u64>,
    /// Smallest of `min_re + 3` and `6 − max_re` over the corpus.
    pub thm1_margin: Option<Witness>,
    pub min_re: Option<Witness>,
    pub max_re: Option<Witness>,
    /// Words with `min_re ≤ −1`, in sweep order.
    pub hoste_witnesses: Vec<Witness>,
    pub unsound_witnesses: Vec<String>,
}

impl SweepSummary {
    fn new() -> Self {
        SweepSummary {
            records: 0,
            hoste_violations: 0,
            thm1_violations: 0,
            soundness_violations: 0,
            nonpositive_real_zeros: 0,
            lemma_failures: ["t1_lower", "t1_upper", "t3", "t3_upper3", "t4"].into_iter().map(|k| (k, 0)).collect(),
            thm1_margin: None,
            min_re: None,
            max_re: None,
            hoste_witnesses: Vec::new(),
            unsound_witnesses: Vec::new(),
        }
    }

    fn absorb(&mut self, r: &KnotRecord) {
        const KEEP: usize = 100;
        self.records += 1;
        let name = r.cf.to_string();
        if !r.hoste_ok {
            self.hoste_violations += 1;
            if self.hoste_witnesses.len() < KEEP {
                self.hoste_witnesses.push(Witness { cf: name.clone(), value: r.min_re });
            }
        }
        if !r.thm1_ok {
            self.thm1_violations += 1;
        }
        if !r.unsound.is_empty() {
            self.soundness_violations += 1;
            if self.unsound_witnesses.len() < KEEP {
                self.unsound_witnesses.push(format!("{name}: {}", r.unsound.join(" ")));
            }
        }
        if r.zeros.iter().any(|z| z.im == 0.0 && z.re <= 0.0) {
            self.nonpositive_real_zeros += 1;
        }
        for (k, count) in self.lemma_failures.iter_mut() {
            if r.cert(k) == Some(Cert::Uncertified) {
                *count += 1;
            }
        }
        let margin = (r.min_re + 3.0).min(6.0 - r.max_re);
        keep_extreme(&mut self.thm1_margin, &name, margin, |new, old| new < old);
        keep_extreme(&mut self.min_re, &name, r.min_re, |new, old| new < old);
        keep_extreme(&mut self.max_re, &name, r.max_re, |new, old| new > old);
    }

    /// Any hard or certificate failure (Hoste excluded: it is empirical).
    pub fn clean(&self) -> bool {
        self.thm1_violations == 0
            && self.soundness_violations == 0
            && self.nonpositive_real_zeros == 0
            && self.lemma_failures.values().all(Zero::is_zero)
    }
}

fn keep_extreme(slot: &mut Option<Witness>, cf: &str, value: f64, better: impl Fn(f64, f64) -> bool) {
    if slot.as_ref().is_none_or(|w| better(value, w.value)) {
        *slot = Some(Witness { cf: cf.to_string(), value });
    }
}

/// Runs the sweep, writing one JSON record per line to `out` and, when
/// given, `re,im,cf` rows for every zero to `plot`.
pub fn run_sweep(cfg: SweepConfig, out: &mut dyn Write, plot: Option<&mut dyn Write>) -> Result<SweepSummary> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut summary = SweepSummary::new();
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    let mut plot = plot.map(csv::Writer::from_writer);
    if let Some(p) = plot.as_mut() {
        p.write_record(["re", "im", "cf"]).map_err(csv_err)?;
    }
    for m in 1..=cfg.max_m {
        let total = (2 * cfg.max_a as u64).pow(m as u32);
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK as u64).min(total);
            let records: Vec<KnotRecord> = pool.install(|| {
                (start..end)
                    .into_par_iter()
                    .map(|i| knot_record(&word_at(m, cfg.max_a, i)))
                    .collect::<Result<_>>()
            })?;
            for r in &records {
                let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
                writeln!(out, "{line}")?;
                if let Some(p) = plot.as_mut() {
                    let cf = r.cf.to_string();
                    for z in &r.zeros {
                        let (re, im) = (crate::serde_util::sig17(z.re), crate::serde_util::sig17(z.im));
                        p.write_record([re.get(), im.get(), cf.as_str()]).map_err(csv_err)?;
                    }
                }
                summary.absorb(r);
            }
            start = end;
        }
    }
    out.flush()?;
    if let Some(p) = plot.as_mut() {
        p.flush()?;
    }
    Ok(summary)
}
