//! The sum rule checked exhaustively in exact arithmetic, with an
//! independent floating-point brute force and the intermediate identities.

use std::f64::consts::PI;

use cgsum::integrals::{quad_gauss, sin4_fourier};
use cgsum::sumrule::{
    fourier_side, fourier_side_closed_form, lhs_3j_exact, lhs_cg_exact, lhs_exact, rhs_3j, rhs_cg,
    specialized_integral_closed_form, specialized_integral_moment, verify_with, weight_exact, Form,
    SumOptions,
};
use cgsum::wigner::clebsch_gordan;
use cgsum::{BigRational, HalfInt};

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

#[test]
fn main_theorem_both_forms() {
    for two_j in 1..=20 {
        for k in 0..=two_j as u64 {
            let j = h(two_j);
            assert_eq!(
                lhs_cg_exact(j, k).unwrap(),
                rhs_cg(j, k).unwrap(),
                "CG 2j={two_j} k={k}"
            );
            assert_eq!(
                lhs_3j_exact(j, k).unwrap(),
                rhs_3j(j, k).unwrap(),
                "3j 2j={two_j} k={k}"
            );
        }
    }
}

#[test]
fn forms_differ_by_dimension() {
    for two_j in 1..=16 {
        for k in 0..=two_j as u64 + 2 {
            let j = h(two_j);
            let dim = BigRational::from_integer((two_j + 1).into());
            assert_eq!(
                lhs_cg_exact(j, k).unwrap(),
                dim * lhs_3j_exact(j, k).unwrap()
            );
        }
    }
}

#[test]
fn triangle_violation_annihilates_both_sides() {
    for two_j in 1..=20 {
        for k in [two_j as u64 + 1, two_j as u64 + 2] {
            let j = h(two_j);
            for form in Form::BOTH {
                let opts = SumOptions::default();
                assert_eq!(
                    lhs_exact(j, k, form, &opts).unwrap(),
                    BigRational::from_integer(0.into())
                );
            }
            assert_eq!(rhs_cg(j, k).unwrap(), BigRational::from_integer(0.into()));
            assert_eq!(rhs_3j(j, k).unwrap(), BigRational::from_integer(0.into()));
        }
    }
}

#[test]
fn truncation_does_not_change_reports() {
    let full = SumOptions {
        skip_zero_weights: false,
    };
    let truncated = SumOptions {
        skip_zero_weights: true,
    };
    for two_j in 1..=8 {
        for k in 0..=two_j as u64 + 2 {
            for form in Form::BOTH {
                let mut a = verify_with(h(two_j), k, form, &full).unwrap();
                let mut b = verify_with(h(two_j), k, form, &truncated).unwrap();
                a.elapsed = Default::default();
                b.elapsed = Default::default();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn every_pair_is_rational_without_truncation() {
    // The untruncated sum converts every product, so an irrational one would error.
    let full = SumOptions {
        skip_zero_weights: false,
    };
    for two_j in 1..=20 {
        for k in 0..=two_j as u64 + 2 {
            for form in Form::BOTH {
                assert!(
                    lhs_exact(h(two_j), k, form, &full).is_ok(),
                    "2j={two_j} k={k}"
                );
            }
        }
    }
}

/// `Σ_{m,m'} (-1)^(m-m') C_m C_m' / ((2+m-m')! (2-m+m')!)` in plain floats.
fn brute_force_cg(two_j: i64, k: i64) -> f64 {
    let fact = |n: i64| (1..=n).product::<i64>() as f64;
    let column: Vec<f64> = (-two_j..=two_j)
        .step_by(2)
        .map(|tm| {
            clebsch_gordan(h(two_j), h(tm), h(2 * k), h(0), h(two_j), h(tm))
                .unwrap()
                .to_f64()
        })
        .collect();
    let mut total = 0.0;
    for (i, a) in column.iter().enumerate() {
        for (ip, b) in column.iter().enumerate() {
            let d = i as i64 - ip as i64;
            if d.abs() <= 2 {
                let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
                total += sign * a * b / (fact(2 + d) * fact(2 - d));
            }
        }
    }
    total
}

#[test]
fn exact_sums_match_float_brute_force() {
    for two_j in 1..=12 {
        for k in 0..=two_j + 2 {
            let exact = lhs_cg_exact(h(two_j), k as u64).unwrap();
            let exact = exact.numer().to_string().parse::<f64>().unwrap()
                / exact.denom().to_string().parse::<f64>().unwrap();
            let brute = brute_force_cg(two_j, k);
            assert!(
                (exact - brute).abs() < 1e-12,
                "2j={two_j} k={k}: {exact} vs {brute}"
            );
        }
    }
}

#[test]
fn specialized_integral_chain_closes() {
    for two_j in 1..=12 {
        for k in 0..=two_j as u64 {
            let j = h(two_j);
            assert_eq!(
                specialized_integral_closed_form(j, k).unwrap(),
                specialized_integral_moment(j, k).unwrap(),
                "2j={two_j} k={k}"
            );
            assert_eq!(
                fourier_side(j, k).unwrap(),
                fourier_side_closed_form(j, k).unwrap()
            );
        }
    }
}

#[test]
fn sin4_coefficients_are_scaled_weights() {
    let three_halves = BigRational::new(3.into(), 2.into());
    for d in -6..=6i64 {
        let sign = BigRational::from_integer(if d % 2 == 0 { 1 } else { -1 }.into());
        let expected = &three_halves * sign * weight_exact(d);
        assert_eq!(sin4_fourier(d).coefficient(), &expected, "d={d}");
    }
}

#[test]
fn sin4_coefficients_match_quadrature() {
    for d in -4..=4i64 {
        let f = |e: f64| (2.0 * d as f64 * e).cos() * e.sin().powi(4);
        let r = quad_gauss(f, 0.0, PI, 32).unwrap();
        assert!((r.value - sin4_fourier(d).to_f64()).abs() < 1e-10, "d={d}");
    }
}
