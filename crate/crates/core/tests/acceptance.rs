//! Acceptance criteria 1-10. Each test prints one `PASS`/`FAIL` line.
//! Run with `--nocapture` to see them.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use alexzero::exactmath::{sturm_real_root_count, Endpoint};
use alexzero::families::{mu_sequence, zeros_in_interval};
use alexzero::stability::BlockTheorem;
use alexzero::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

const ZERO_TOL: f64 = 1e-10;
const EIGEN_TOL: f64 = 1e-8;
const COSINE_TOL: f64 = 1e-10;
const REMARK2_LO: f64 = 5.8274;
const REMARK2_HI: f64 = 5.8284272;
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const REMARK2_BUDGET: Duration = Duration::from_secs(10);
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(1);

fn verdict(n: u32, title: &str, ok: bool, detail: &str) {
    println!("criterion {n:>2} {}: {title} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {title}: {detail}");
}

fn word(a: &[i64]) -> CfWord {
    CfWord::new(a.to_vec()).unwrap()
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

struct SweepRun {
    summary: SweepSummary,
    elapsed: Duration,
}

/// The max_m = 6, max_a = 3 sweep on 4 workers, shared by criteria 3, 5, 10.
fn full_sweep() -> &'static SweepRun {
    static RUN: OnceLock<SweepRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let mut sink = std::io::sink();
        let summary = run_sweep(SweepConfig { max_m: 6, max_a: 3, jobs: 4 }, &mut sink, None)
            .expect("sweep hard invariants");
        SweepRun { summary, elapsed: start.elapsed() }
    })
}

/// Every reduced `β/α` with `α ≤ 200`: fractions with an even entry directly,
/// odd/odd fractions after mirror normalization.
#[test]
fn criterion_01_round_trip() {
    let start = Instant::now();
    let (mut direct, mut mirrored) = (0u32, 0u32);
    let mut bad = Vec::new();
    for alpha in 2..=200i64 {
        for beta in 1..alpha {
            if beta.gcd(&alpha) != 1 {
                continue;
            }
            let ((b, a), was_mirrored) = normalize_fraction(&BigInt::from(beta), &BigInt::from(alpha)).unwrap();
            if was_mirrored {
                mirrored += 1;
            } else {
                direct += 1;
            }
            let w = even_cf_expand(&b, &a).unwrap();
            if cf_to_fraction(&w).unwrap() != (b, a) {
                bad.push(format!("{beta}/{alpha}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "even continued fraction round trip",
        bad.is_empty() && direct + mirrored > 12_000 && elapsed < ROUND_TRIP_BUDGET,
        &format!("{direct} direct + {mirrored} mirrored fractions, {} mismatches, {elapsed:.2?}", bad.len()),
    );
}

#[test]
fn criterion_02_golden() {
    let h = 3f64.sqrt() / 2.0;
    let s5 = 5f64.sqrt();
    let trefoil = alexander_poly(&word(&[1, 1]));
    let figure8 = alexander_poly(&word(&[1, -1]));
    let zt = find_zeros(&trefoil, DEFAULT_TOL).unwrap();
    let zf = find_zeros(&figure8, DEFAULT_TOL).unwrap();
    let close = |z: num_complex::Complex64, re: f64, im: f64| (z.re - re).abs() < ZERO_TOL && (z.im - im).abs() < ZERO_TOL;
    let ok = trefoil == poly(&[1, -1, 1])
        && (figure8 == poly(&[1, -3, 1]) || figure8 == poly(&[-1, 3, -1]))
        && close(zt.zeros()[0], 0.5, -h)
        && close(zt.zeros()[1], 0.5, h)
        && close(zf.zeros()[0], (3.0 - s5) / 2.0, 0.0)
        && close(zf.zeros()[1], (3.0 + s5) / 2.0, 0.0)
        && trefoil.eval_i64(-1).abs() == BigInt::from(3)
        && figure8.eval_i64(-1).abs() == BigInt::from(5);
    verdict(2, "trefoil and figure-eight invariants", ok, &format!("Δ = {trefoil}; Δ = {figure8}"));
}

#[test]
fn criterion_03_theorem1_sweep() {
    let run = full_sweep();
    let s = &run.summary;
    let margin = s.thm1_margin.as_ref().unwrap();
    let ok = s.records == 55_986
        && s.thm1_violations == 0
        && s.lemma_failures["t1_lower"] == 0
        && s.lemma_failures["t1_upper"] == 0
        && s.soundness_violations == 0
        && run.elapsed < SWEEP_BUDGET;
    verdict(
        3,
        "every zero in -3 < Re < 6, T1 blocks pass the dominance test",
        ok,
        &format!(
            "{} words, {} violations, smallest margin {:.6} at [{}], {:.1?}",
            s.records, s.thm1_violations, margin.value, margin.cf, run.elapsed
        ),
    );
}

fn alternating_words(m: usize, max_a: i64) -> Vec<CfWord> {
    let mut out = Vec::new();
    let n = max_a.pow(m as u32);
    for first in [1i64, -1] {
        for mut i in 0..n {
            let mut a = vec![0; m];
            for (k, slot) in a.iter_mut().enumerate() {
                let mag = i % max_a + 1;
                i /= max_a;
                *slot = if k % 2 == 0 { first * mag } else { -first * mag };
            }
            out.push(CfWord::new(a).unwrap());
        }
    }
    out
}

#[test]
fn criterion_04_theorem2() {
    let mut count = 0;
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for m in 1..=8 {
        for w in alternating_words(m, 3) {
            count += 1;
            let delta = alexander_poly(&w);
            let all = sturm_real_root_count(&delta, &Endpoint::NegInfinity, &Endpoint::PosInfinity).unwrap();
            let positive = sturm_real_root_count(&delta, &Endpoint::At(rat_int(0)), &Endpoint::PosInfinity).unwrap();
            let mut zeros: Vec<f64> = find_zeros(&delta, DEFAULT_TOL).unwrap().zeros().iter().map(|z| z.re).collect();
            zeros.sort_by(f64::total_cmp);
            let eig = symmetric_companion_eigenvalues(&w).unwrap();
            let diff = zeros.iter().zip(&eig).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            worst = worst.max(diff);
            if all != m || positive != m || eig.len() != m || diff >= EIGEN_TOL {
                bad.push(w.to_string());
            }
        }
    }
    verdict(
        4,
        "alternating-sign words have m positive real zeros, matching symmetric eigenvalues",
        bad.is_empty() && count == 19_680,
        &format!("{count} words, {} failures, max eigenvalue gap {worst:.1e}", bad.len()),
    );
}

#[test]
fn criterion_05_theorem3() {
    let s = &full_sweep().summary;
    let ok = s.lemma_failures["t3"] == 0 && s.lemma_failures["t3_upper3"] == 0 && s.soundness_violations == 0;
    verdict(
        5,
        "T3 blocks pass; strong words certify Re < 3 with V = diag|a|",
        ok,
        &format!(
            "t3 failures {}, upper-3 failures {}, unsound {}",
            s.lemma_failures["t3"], s.lemma_failures["t3_upper3"], s.soundness_violations
        ),
    );
}

#[test]
fn criterion_06_theorem4() {
    let mut count = 0;
    let mut bad = Vec::new();
    for m in 1..=10usize {
        for bits in 0..(1u32 << m) {
            let a: Vec<i64> = (0..m).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
            let w = CfWord::new(a).unwrap();
            if !classify(&w).thm4_applicable {
                continue;
            }
            count += 1;
            let r = theorem_blocks(&w, BlockTheorem::T4).unwrap();
            let alphas = r.tri_diag.iter().enumerate().all(|(i, x)| {
                let allowed: &[i64] = if 2 * (i + 1) == m { &[2, 5] } else { &[3, 6] };
                allowed.iter().any(|&v| x == &rat_int(v))
            });
            let betas = r.tri_off.iter().all(|x| x == &rat_int(0) || x == &rat_int(-1));
            if !(theorem4_check(&w).unwrap() && alphas && betas && r.lemma_ok) {
                bad.push(w.to_string());
            }
        }
    }
    verdict(
        6,
        "fibered words with runs ≤ 2 pass with alpha in {3,6} ({2,5} closing) and beta in {0,-1}",
        bad.is_empty() && count > 0,
        &format!("{count} words, failures {bad:?}"),
    );
}

#[test]
fn criterion_07_theorem5() {
    let mut bad = Vec::new();
    for c in 1..=4 {
        for m in 1..=12 {
            let r = theorem5_verify(m, c).unwrap();
            let mu2m = mu_sequence(2 * m, c)[2 * m].eval_i64(-2);
            if !r.checks.all() || mu2m != BigInt::from((2 * m as i64 + 1) * c) {
                bad.push(format!("(m={m}, c={c}): {:?}", r.checks));
            }
        }
    }
    // all zeros of P_2m in (0.96, 1.05) for c = 50
    let (lo, hi) = (rat(24, 25), rat(21, 20));
    let corollary: Vec<usize> = (1..=12).filter(|&m| !zeros_in_interval(&p_poly(2 * m, 50), &lo, &hi).unwrap()).collect();
    verdict(
        7,
        "identity chain, cosine zeros, interlacing, mu(-2), zeros inside bounds; c = 50 corollary",
        bad.is_empty() && corollary.is_empty(),
        &format!("48 (m, c) pairs, failures {bad:?}; corollary failures {corollary:?} (cosine tol {COSINE_TOL:e})"),
    );
}

#[test]
fn criterion_08_remark2() {
    let start = Instant::now();
    let seq: Vec<f64> = (1..=50).map(|m| remark2_extremal(m).unwrap()).collect();
    let v300 = remark2_extremal(300).unwrap();
    let elapsed = start.elapsed();
    let increasing = seq.windows(2).all(|p| p[0] < p[1]);
    let below = seq.iter().all(|&x| x < 3.0 + 8f64.sqrt());
    let ok = increasing && below && v300 > REMARK2_LO && v300 < REMARK2_HI && elapsed < REMARK2_BUDGET;
    verdict(
        8,
        "largest zero increases towards 3 + sqrt 8",
        ok,
        &format!("m = 300 gives {v300:.7}, increasing {increasing}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_09_adversarial() {
    let mut notes = Vec::new();
    let mut ok = true;
    for a in 1..=5i64 {
        let p = poly(&[1, a, -(2 * a + 1), a, 1]);
        let sign = p.sign_at(&rat_int(-(a + 1)));
        let zs = find_zeros(&p, DEFAULT_TOL).unwrap();
        let min_re = zs.zeros().iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        ok &= sign < 0 && min_re < -((a + 1) as f64);
        notes.push(format!("a={a}: min Re {min_re:.4}"));
    }
    for a in 4..=8i64 {
        let p = poly(&[1, -2 * a, 4 * a - 1, -2 * a, 1]);
        let sign = p.sign_at(&rat_int(a));
        let zs = find_zeros(&p, DEFAULT_TOL).unwrap();
        let max_real = zs.zeros().iter().filter(|z| z.im == 0.0).map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
        ok &= sign < 0 && max_real > a as f64;
        notes.push(format!("a={a}: max real {max_real:.4}"));
    }
    verdict(9, "fixtures escape the conjectured and proven regions", ok, &notes.join(", "));
}

#[test]
fn criterion_10_hoste() {
    let s = &full_sweep().summary;
    let min = s.min_re.as_ref().unwrap();
    verdict(
        10,
        "no zero with Re ≤ -1 in the sweep",
        s.hoste_violations == 0,
        &format!(
            "{} violations {:?}; smallest real part {:.6} at [{}]",
            s.hoste_violations,
            s.hoste_witnesses.iter().map(|w| &w.cf).collect::<Vec<_>>(),
            min.value,
            min.cf
        ),
    );
}
