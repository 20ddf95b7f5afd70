//! Independent recomputations of derived values.

use alexzero::exactmath::rational_to_f64;
use alexzero::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn word(a: &[i64]) -> CfWord {
    CfWord::new(a.to_vec()).unwrap()
}

fn sample_words() -> Vec<CfWord> {
    alexzero::sweep::enumerate_words(4, 2)
        .chain([word(&[3, -1, 2, 2, -5]), word(&[1, 1, 1, 1, 1, 1, 1]), word(&[-2, 4, 1, -1, 3, 6])])
        .collect()
}

fn rows(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.rows().map(|r| r.to_vec()).collect()
}

/// Determinant by Gaussian elimination with row swaps.
fn det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        d *= a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    d
}

/// `A⁻¹B` by Gauss–Jordan elimination on `[A | B]`.
fn solve(a: Vec<Vec<Rational>>, b: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a.into_iter().zip(b).map(|(mut x, y)| {
        x.extend(y);
        x
    }).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero()).expect("invertible");
        aug.swap(piv, col);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= p.clone();
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let v = &f * &aug[col][c];
                    aug[r][c] -= v;
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[test]
fn alexander_matches_determinant_at_sample_points() {
    for w in sample_words() {
        let u = rows(seifert_matrix(&w).inner());
        let delta = alexander_poly(&w);
        let m = w.len();
        for t in -2..=m as i64 + 2 {
            let tr = rat_int(t);
            let mat = (0..m)
                .map(|i| (0..m).map(|j| &tr * &u[i][j] - &u[j][i]).collect())
                .collect();
            assert_eq!(det(mat), Rational::from_integer(delta.eval_i64(t)), "[{w}] at t = {t}");
        }
    }
}

#[test]
fn companion_is_inverse_seifert_times_transpose() {
    for w in sample_words() {
        let u = seifert_matrix(&w);
        let u = u.inner();
        let expect = solve(rows(u), rows(&u.transpose()));
        assert_eq!(rows(companion_matrix(&w).inner()), expect, "[{w}]");
    }
}

#[test]
fn alexander_is_characteristic_polynomial_of_companion() {
    // det(tE − A) · det U = Δ(t)
    for w in sample_words() {
        let a = rows(companion_matrix(&w).inner());
        let det_u = det(rows(seifert_matrix(&w).inner()));
        let delta = alexander_poly(&w);
        let m = w.len();
        for t in [-3i64, 0, 2, 5] {
            let mat = (0..m)
                .map(|i| (0..m).map(|j| if i == j { rat_int(t) - &a[i][j] } else { -a[i][j].clone() }).collect())
                .collect();
            assert_eq!(det(mat) * &det_u, Rational::from_integer(delta.eval_i64(t)), "[{w}]");
        }
    }
}

/// `β/α = M(0)` for the product `M` of the Möbius maps `x ↦ 1/(2aᵢ − x)`,
/// each `[[0, 1], [−1, 2aᵢ]]`.
fn convergent(w: &CfWord) -> (BigInt, BigInt) {
    let (mut p00, mut p01, mut p10, mut p11) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for &a in w.a() {
        let two_a = BigInt::from(2 * a);
        let n01 = &p00 + &two_a * &p01;
        let n11 = &p10 + &two_a * &p11;
        (p00, p01, p10, p11) = (-p01, n01, -p11, n11);
    }
    let g = num_integer::Integer::gcd(&p01, &p11);
    let (mut b, mut a) = (p01 / &g, p11 / &g);
    if a < BigInt::zero() {
        a = -a;
        b = -b;
    }
    (b, a)
}

#[test]
fn fraction_matches_convergents() {
    for w in sample_words() {
        assert_eq!(cf_to_fraction(&w).unwrap(), convergent(&w), "[{w}]");
    }
}

#[test]
fn quadratic_zeros_by_formula() {
    for (a, b, c) in [(1i64, -1i64, 1i64), (-1, 3, -1), (2, -5, 2), (3, -2, 3)] {
        let zs = find_zeros(&IntPoly::from_i64s(&[c, b, a]), DEFAULT_TOL).unwrap();
        let disc = (b * b - 4 * a * c) as f64;
        let (af, bf) = (a as f64, b as f64);
        let mut expect: Vec<(f64, f64)> = if disc >= 0.0 {
            vec![((-bf - disc.sqrt()) / (2.0 * af), 0.0), ((-bf + disc.sqrt()) / (2.0 * af), 0.0)]
        } else {
            let im = (-disc).sqrt() / (2.0 * af).abs();
            vec![(-bf / (2.0 * af), -im), (-bf / (2.0 * af), im)]
        };
        expect.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        for (z, (re, im)) in zs.zeros().iter().zip(expect) {
            assert!((z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-12, "{z} vs {re}+{im}i");
        }
    }
}

#[test]
fn remark2_matches_closed_form() {
    // λₘ(2cos θ) = 2 sin((2m+1)θ/2) cos(θ/2) / sin θ, so the largest zero is
    // y = 2cos(2π/(2m+1)).
    for m in (1..=60).chain([100, 300, 1000]) {
        let y = 2.0 * (2.0 * std::f64::consts::PI / (2 * m + 1) as f64).cos();
        let x = y + 4.0;
        let t = (x + (x * x - 4.0).sqrt()) / 2.0;
        let got = remark2_extremal(m).unwrap();
        assert!((got - t).abs() < 1e-11, "m = {m}: {got} vs {t}");
    }
}

#[test]
fn theorem5_bounds_for_c1() {
    let b = alexzero::families::FamilyBounds::new(1);
    let s2 = 2f64.sqrt();
    assert!((b.lower_approx - (s2 - 1.0).powi(2)).abs() < 1e-15);
    assert!((b.upper_approx - (s2 + 1.0).powi(2)).abs() < 1e-14);
    assert!((b.lower_approx * b.upper_approx - 1.0).abs() < 1e-14);
    let x = rational_to_f64(&alexzero::families::FamilyBounds::folded_upper(1));
    assert!((b.upper_approx + 1.0 / b.upper_approx - x).abs() < 1e-13);
}

#[test]
fn family_polys_match_pipeline() {
    for c in 1..=4 {
        for m in 1..=12 {
            let delta = alexander_poly(&family_cf(m, c).unwrap());
            let p = p_poly(m, c);
            assert!(p == delta || p == -delta, "m = {m}, c = {c}");
        }
    }
}

#[test]
fn families_identities_to_twenty() {
    for c in 1..=4 {
        for m in 1..=20 {
            let r = theorem5_verify(m, c).unwrap();
            assert!(r.checks.identity_chain && r.checks.mu_at_minus2, "m = {m}, c = {c}");
        }
    }
    for m in 2..=30 {
        let r = theorem5_verify(m, 1).unwrap();
        assert!(r.checks.cosine_zeros && r.checks.interlacing, "m = {m}");
    }
}

#[test]
fn mirror_fraction_of_a_link_changes_delta() {
    // 1/4 and 3/4 are mirror fractions of the same unoriented link, but the
    // induced orientations differ and so does Δ.
    let a = alexander_poly(&even_cf_expand(&BigInt::from(1), &BigInt::from(4)).unwrap());
    let b = alexander_poly(&even_cf_expand(&BigInt::from(3), &BigInt::from(4)).unwrap());
    assert_eq!(a, IntPoly::from_i64s(&[-2, 2]));
    assert_eq!(b, IntPoly::from_i64s(&[-1, 1, -1, 1]));
    // For knots the mirror of a one-even fraction is odd/odd and normalizes back.
    let ((nb, na), mirrored) = normalize_fraction(&BigInt::from(5 - 2), &BigInt::from(5)).unwrap();
    assert!(mirrored);
    assert_eq!((nb, na), (BigInt::from(2), BigInt::from(5)));
}
