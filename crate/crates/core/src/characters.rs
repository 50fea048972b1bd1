//! Characters and generalized characters of the rotation group.
//!
//! The generalized character of order `k` of the spin-`j` representation is
//!
//! ```text
//! χ_k^j(ω) = √[(2j+1)(2j-k)!/(2j+k+1)!] · sin^k(ω/2) · (d/dx)^k χ^j,   x = cos(ω/2)
//! ```
//!
//! and is computed here three ways: by differentiating the character
//! polynomial, from a Gegenbauer polynomial `C_{2j-k}^(k+1)`, and pointwise as
//! a Fourier sum weighted by Clebsch-Gordan coefficients. All functions take
//! the rotation angle `ω ∈ [0, 2π]` in radians.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arith::{factorial, integer, sqrt_to_rational, HalfInt, SqrtRational};
use crate::error::{Error, Result};
use crate::gegenbauer::{gegenbauer_poly_int, poly_derivative, PiRational, PolyRational};
use crate::integrals::weighted_poly_integral;
use crate::wigner::clebsch_gordan;

/// `√prefactor_radicand · sin^sin_power(ω/2) · poly(cos(ω/2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    pub j: HalfInt,
    pub k: u64,
    pub prefactor_radicand: BigRational,
    pub poly: PolyRational,
    pub sin_power: u64,
}

impl CharacterPoly {
    pub fn eval(&self, omega: f64) -> f64 {
        let half = 0.5 * omega;
        let pref = self.prefactor_radicand.to_f64().unwrap_or(f64::NAN).sqrt();
        pref * half.sin().powi(self.sin_power as i32) * self.poly.eval_f64(half.cos())
    }
}

/// `χ^j(ω) = sin((2j+1)ω/2) / sin(ω/2)`, using `Σ_m cos(mω)` near the
/// removable singularities at `ω = 0` and `ω = 2π`.
pub fn character(j: HalfInt, omega: f64) -> f64 {
    let s = (0.5 * omega).sin();
    if s.abs() < 1e-10 {
        return j.projections().map(|m| (m.to_f64() * omega).cos()).sum();
    }
    ((j.twice() + 1) as f64 * 0.5 * omega).sin() / s
}

/// `χ^j` as a polynomial in `x = cos(ω/2)`: the Chebyshev polynomial of the
/// second kind `U_{2j} = C_{2j}^(1)`.
pub fn character_poly(j: HalfInt) -> Result<PolyRational> {
    if j < HalfInt::ZERO {
        return Err(Error::domain(format!("negative angular momentum j={j}")));
    }
    Ok(gegenbauer_poly_int(j.twice() as usize, 1))
}

fn check_order(j: HalfInt, k: i64) -> Result<u64> {
    if j < HalfInt::ZERO {
        return Err(Error::domain(format!("negative angular momentum j={j}")));
    }
    if k < 0 || k > j.twice() {
        return Err(Error::domain(format!(
            "order k={k} outside 0..=2j for j={j}"
        )));
    }
    Ok(k as u64)
}

/// `(2j+1)(2j-k)!/(2j+k+1)!`
fn prefactor_radicand(j: HalfInt, k: u64) -> BigRational {
    let two_j = j.twice() as u64;
    BigRational::new(
        BigInt::from(two_j + 1) * &*factorial(two_j - k),
        (*factorial(two_j + k + 1)).clone(),
    )
}

/// `χ_k^j` evaluated as `i^k Σ_m e^(-imω) <j m k 0 | j m>`.
///
/// The imaginary part cancels between `m` and `-m`; a residual larger than
/// `1e-12 (1 + |value|)` is an internal error and panics.
pub fn gen_character_via_cg(j: HalfInt, k: i64, omega: f64) -> Result<f64> {
    let k = check_order(j, k)?;
    let kh = HalfInt::from_int(k as i64);
    let (mut re, mut im) = (0.0, 0.0);
    for m in j.projections() {
        let c = clebsch_gordan(j, m, kh, HalfInt::ZERO, j, m)?.to_f64();
        let phase = m.to_f64() * omega;
        re += c * phase.cos();
        im -= c * phase.sin();
    }
    let (value, residual) = match k % 4 {
        0 => (re, im),
        1 => (-im, re),
        2 => (-re, -im),
        _ => (im, -re),
    };
    assert!(
        residual.abs() <= 1e-12 * (1.0 + value.abs()),
        "imaginary residual {residual} for j={j}, k={k}, omega={omega}"
    );
    Ok(value)
}

/// `χ_k^j = (2k)!! √[(2j+1)(2j-k)!/(2j+k+1)!] sin^k(ω/2) C_{2j-k}^(k+1)(cos(ω/2))`.
pub fn gen_character_via_gegenbauer(j: HalfInt, k: i64) -> Result<CharacterPoly> {
    let k = check_order(j, k)?;
    // (2k)!! = 2^k k!
    let double_factorial = BigInt::from(2).pow(k as u32) * &*factorial(k);
    let c = gegenbauer_poly_int((j.twice() as u64 - k) as usize, k + 1);
    Ok(CharacterPoly {
        j,
        k,
        prefactor_radicand: prefactor_radicand(j, k),
        poly: c.scale(&BigRational::from_integer(double_factorial)),
        sin_power: k,
    })
}

/// `χ_k^j` from the k-fold derivative of `χ^j` with respect to `cos(ω/2)`.
pub fn gen_character_via_derivative(j: HalfInt, k: i64) -> Result<CharacterPoly> {
    let k = check_order(j, k)?;
    let mut poly = character_poly(j)?;
    for _ in 0..k {
        poly = poly_derivative(&poly);
    }
    Ok(CharacterPoly {
        j,
        k,
        prefactor_radicand: prefactor_radicand(j, k),
        poly,
        sin_power: k,
    })
}

/// `∫₀^{2π} χ_k^j(ω) χ_k^{j'}(ω) sin²(ω/2) dω` in exact arithmetic.
///
/// With `x = cos(ω/2)` the integral becomes
/// `2 √(pref_j pref_j') ∫ poly_j poly_j' (1-x²)^(k+1/2) dx`.
pub fn gen_char_orthogonality_exact(j: HalfInt, jprime: HalfInt, k: i64) -> Result<PiRational> {
    let a = gen_character_via_gegenbauer(j, k)?;
    let b = gen_character_via_gegenbauer(jprime, k)?;
    let integral = weighted_poly_integral(&(&a.poly * &b.poly), a.k);
    if integral.is_zero() {
        return Ok(integral);
    }
    let pref = SqrtRational::new(1, &a.prefactor_radicand * &b.prefactor_radicand)?;
    let root = sqrt_to_rational(&pref).map_err(|_| {
        Error::domain(format!(
            "prefactor product for j={j}, j'={jprime}, k={k} is irrational but the integral is nonzero"
        ))
    })?;
    Ok(integral.scale(&(root * integer(2))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use num_traits::One;
    use std::f64::consts::PI;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn character_examples() {
        for two_j in 0..8 {
            assert_eq!(character(h(two_j), 0.0), (two_j + 1) as f64);
            let at_2pi = character(h(two_j), 2.0 * PI);
            let expected = if two_j % 2 == 0 { 1.0 } else { -1.0 } * (two_j + 1) as f64;
            assert!((at_2pi - expected).abs() < 1e-9);
        }
        assert_eq!(character(h(0), 1.234), 1.0);
        assert!(character(h(1), PI).abs() < 1e-15);
    }

    #[test]
    fn character_matches_exponential_sum() {
        for two_j in 0..10 {
            for t in 1..20 {
                let omega = 2.0 * PI * t as f64 / 20.0;
                let sum: f64 = h(two_j)
                    .projections()
                    .map(|m| (m.to_f64() * omega).cos())
                    .sum();
                assert!((character(h(two_j), omega) - sum).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn gegenbauer_route_examples() {
        let c = gen_character_via_gegenbauer(h(1), 0).unwrap();
        assert_eq!(c.poly, PolyRational::from_integers(&[0, 2]));
        assert_eq!(c.prefactor_radicand, BigRational::one());

        let c = gen_character_via_gegenbauer(h(2), 2).unwrap();
        assert_eq!(c.poly, PolyRational::from_integers(&[8]));
        assert_eq!(c.prefactor_radicand, rational(1, 40));
        assert_eq!(c.sin_power, 2);

        let c = gen_character_via_gegenbauer(h(0), 0).unwrap();
        assert_eq!(c.poly, PolyRational::from_integers(&[1]));
        assert_eq!(c.prefactor_radicand, BigRational::one());
    }

    #[test]
    fn derivative_route_examples() {
        let d = gen_character_via_derivative(h(2), 1).unwrap();
        assert_eq!(d.poly, PolyRational::from_integers(&[0, 8]));
        assert_eq!(d, gen_character_via_gegenbauer(h(2), 1).unwrap());
        assert_eq!(
            gen_character_via_derivative(h(3), 3).unwrap(),
            gen_character_via_gegenbauer(h(3), 3).unwrap()
        );
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(
            gen_character_via_gegenbauer(h(1), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gen_character_via_derivative(h(2), -1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gen_character_via_cg(h(2), 3, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cg_route_special_values() {
        for two_j in 0..8 {
            for t in 0..=8 {
                let omega = 2.0 * PI * t as f64 / 8.0;
                let v = gen_character_via_cg(h(two_j), 0, omega).unwrap();
                assert!((v - character(h(two_j), omega)).abs() < 1e-12);
            }
            for k in 1..=two_j {
                assert!(gen_character_via_cg(h(two_j), k, 0.0).unwrap().abs() < 1e-12);
            }
        }
        let via_poly = gen_character_via_gegenbauer(h(2), 2).unwrap().eval(PI);
        let via_cg = gen_character_via_cg(h(2), 2, PI).unwrap();
        assert!((via_poly - via_cg).abs() < 1e-12);
    }

    #[test]
    fn polynomial_parity_follows_degree() {
        for two_j in 0..=12 {
            for k in 0..=two_j {
                let c = gen_character_via_gegenbauer(h(two_j), k).unwrap();
                assert_eq!(c.poly.degree(), Some((two_j - k) as usize));
                assert_eq!(c.poly.parity(), Some(((two_j - k) % 2) as usize));
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        let pi = PiRational::new(BigRational::one());
        for two_j in 0..=6 {
            for k in 0..=two_j {
                assert_eq!(
                    gen_char_orthogonality_exact(h(two_j), h(two_j), k).unwrap(),
                    pi
                );
            }
        }
        assert!(gen_char_orthogonality_exact(h(2), h(4), 1)
            .unwrap()
            .is_zero());
        assert!(gen_char_orthogonality_exact(h(2), h(4), 3).is_err());
    }

    #[test]
    fn orthogonality_agrees_with_quadrature() {
        let j = h(3);
        let c = gen_character_via_gegenbauer(j, 2).unwrap();
        let f = |w: f64| c.eval(w).powi(2) * (0.5 * w).sin().powi(2);
        let r = crate::integrals::quad_gauss(f, 0.0, 2.0 * PI, 40).unwrap();
        let exact = gen_char_orthogonality_exact(j, j, 2).unwrap().to_f64();
        assert!((r.value - exact).abs() <= 1e-10);
    }
}
