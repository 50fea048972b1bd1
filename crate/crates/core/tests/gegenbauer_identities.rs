//! Closed-form Gegenbauer norms against the moment integrator.

use cgsum::gegenbauer::{
    gegenbauer_norm_general, gegenbauer_norm_mu1, gegenbauer_norm_orthogonality,
    gegenbauer_poly_int, poly_derivative, PiRational,
};
use cgsum::integrals::weighted_poly_integral;
use cgsum::{BigRational, Error};

fn squared_norm(n: usize, alpha: u64, q: u64) -> PiRational {
    let c = gegenbauer_poly_int(n, alpha);
    weighted_poly_integral(&(&c * &c), q)
}

#[test]
fn off_diagonal_products_vanish() {
    for alpha in 1..=5 {
        for r in 1..=10 {
            for n in 0..r {
                let product = &gegenbauer_poly_int(n, alpha) * &gegenbauer_poly_int(r, alpha);
                assert!(
                    weighted_poly_integral(&product, alpha - 1).is_zero(),
                    "n={n} r={r} alpha={alpha}"
                );
            }
        }
    }
}

#[test]
fn orthogonality_norm_matches_integrator() {
    for alpha in 1..=5 {
        for n in 0..=10 {
            assert_eq!(
                gegenbauer_norm_orthogonality(n, alpha).unwrap(),
                squared_norm(n as usize, alpha, alpha - 1),
                "n={n} alpha={alpha}"
            );
        }
    }
}

#[test]
fn mu1_norm_matches_integrator() {
    for alpha in 1..=6 {
        for n in 0..=12 {
            if (alpha, n) == (1, 0) {
                assert!(matches!(
                    gegenbauer_norm_mu1(n, alpha),
                    Err(Error::DegenerateCase(_))
                ));
                continue;
            }
            assert_eq!(
                gegenbauer_norm_mu1(n, alpha).unwrap(),
                squared_norm(n as usize, alpha, alpha),
                "n={n} alpha={alpha}"
            );
        }
    }
}

#[test]
fn general_norm_matches_integrator_on_its_domain() {
    let mut checked = 0;
    for mu in 0..=3 {
        for alpha in 1..=5 {
            for n in 0..=8 {
                let closed = gegenbauer_norm_general(n, alpha, mu);
                if alpha <= mu {
                    assert!(
                        matches!(closed, Err(Error::Domain(_))),
                        "n={n} alpha={alpha} mu={mu}"
                    );
                    continue;
                }
                let expected = squared_norm(n as usize, alpha, alpha + mu - 1);
                assert_eq!(closed.unwrap(), expected, "n={n} alpha={alpha} mu={mu}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 9 * (5 + 4 + 3 + 2));
}

#[test]
fn general_norm_collapses_at_mu_zero() {
    for alpha in 1..=5 {
        for n in 0..=8 {
            assert_eq!(
                gegenbauer_norm_general(n, alpha, 0).unwrap(),
                gegenbauer_norm_orthogonality(n, alpha).unwrap()
            );
        }
    }
}

#[test]
fn degenerate_mu1_point_has_direct_value() {
    let direct = squared_norm(0, 1, 1);
    assert_eq!(
        direct,
        PiRational::new(BigRational::new(3.into(), 8.into()))
    );
}

#[test]
fn derivative_lowers_degree_and_raises_alpha() {
    for alpha in 1..=5u64 {
        for n in 1..=12usize {
            let expected = gegenbauer_poly_int(n - 1, alpha + 1)
                .scale(&BigRational::from_integer((2 * alpha).into()));
            assert_eq!(poly_derivative(&gegenbauer_poly_int(n, alpha)), expected);
        }
    }
}
