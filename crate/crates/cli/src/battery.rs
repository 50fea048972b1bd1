//! `integrals-check`: the supporting integral identities, each checked by
//! exact equality between two independent computations.

use std::io::Write;

use cgsum::characters::gen_char_orthogonality_exact;
use cgsum::gegenbauer::{
    gegenbauer_norm_general, gegenbauer_norm_mu1, gegenbauer_norm_orthogonality,
    gegenbauer_poly_int, PiRational,
};
use cgsum::integrals::{sin4_fourier, weighted_poly_integral};
use cgsum::sumrule::{
    fourier_side, fourier_side_closed_form, specialized_integral_closed_form,
    specialized_integral_moment, weight_exact,
};
use cgsum::{BigRational, HalfInt, Result};

use crate::CliResult;

struct Check {
    name: &'static str,
    cases: Vec<Box<dyn Fn() -> Result<bool>>>,
}

fn squared_norm(n: u64, alpha: u64, q: u64) -> PiRational {
    let c = gegenbauer_poly_int(n as usize, alpha);
    weighted_poly_integral(&(&c * &c), q)
}

fn checks() -> Vec<Check> {
    let h = HalfInt::from_twice;
    let mut all = Vec::new();

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    for alpha in 1..=5u64 {
        for r in 0..=10u64 {
            for n in 0..=r {
                cases.push(Box::new(move || {
                    let product = &gegenbauer_poly_int(n as usize, alpha)
                        * &gegenbauer_poly_int(r as usize, alpha);
                    let integral = weighted_poly_integral(&product, alpha - 1);
                    Ok(if n == r {
                        integral == gegenbauer_norm_orthogonality(n, alpha)?
                    } else {
                        integral.is_zero()
                    })
                }));
            }
        }
    }
    all.push(Check {
        name: "gegenbauer orthogonality, n,r <= 10, alpha <= 5",
        cases,
    });

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    for alpha in 1..=6u64 {
        for n in 0..=12u64 {
            if (alpha, n) != (1, 0) {
                cases.push(Box::new(move || {
                    Ok(gegenbauer_norm_mu1(n, alpha)? == squared_norm(n, alpha, alpha))
                }));
            }
        }
    }
    cases.push(Box::new(|| {
        let degenerate = matches!(
            gegenbauer_norm_mu1(0, 1),
            Err(cgsum::Error::DegenerateCase(_))
        );
        Ok(degenerate
            && squared_norm(0, 1, 1) == PiRational::new(BigRational::new(3.into(), 8.into())))
    }));
    all.push(Check {
        name: "raised-weight norm, n <= 12, alpha <= 6",
        cases,
    });

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    for mu in 0..=3u64 {
        for alpha in (mu + 1)..=5 {
            for n in 0..=8u64 {
                cases.push(Box::new(move || {
                    Ok(gegenbauer_norm_general(n, alpha, mu)?
                        == squared_norm(n, alpha, alpha + mu - 1))
                }));
            }
        }
    }
    all.push(Check {
        name: "general-weight norm, n <= 8, alpha <= 5, mu <= 3",
        cases,
    });

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    for two_j in 1..=12i64 {
        for k in 0..=two_j as u64 {
            cases.push(Box::new(move || {
                let j = h(two_j);
                Ok(
                    specialized_integral_closed_form(j, k)? == specialized_integral_moment(j, k)?
                        && fourier_side(j, k)? == fourier_side_closed_form(j, k)?,
                )
            }));
        }
    }
    all.push(Check {
        name: "specialized integral and Fourier side, 2j <= 12",
        cases,
    });

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    for d in -6..=6i64 {
        cases.push(Box::new(move || {
            let sign = BigRational::from_integer(if d % 2 == 0 { 1 } else { -1 }.into());
            let expected = BigRational::new(3.into(), 2.into()) * sign * weight_exact(d);
            Ok(sin4_fourier(d).coefficient() == &expected)
        }));
    }
    all.push(Check {
        name: "sin^4 Fourier coefficients, |d| <= 6",
        cases,
    });

    let mut cases: Vec<Box<dyn Fn() -> Result<bool>>> = Vec::new();
    let pi = PiRational::new(BigRational::from_integer(1.into()));
    for two_j in 0..=10i64 {
        for two_jp in 0..=10i64 {
            for k in 0..=two_j.min(two_jp) {
                let pi = pi.clone();
                cases.push(Box::new(move || {
                    let v = gen_char_orthogonality_exact(h(two_j), h(two_jp), k)?;
                    Ok(if two_j == two_jp {
                        v == pi
                    } else {
                        v.is_zero()
                    })
                }));
            }
        }
    }
    all.push(Check {
        name: "generalized character orthonormality, 2j, 2j' <= 10",
        cases,
    });

    all
}

pub fn run(out: &mut impl Write) -> CliResult<i32> {
    let mut all_ok = true;
    for check in checks() {
        let total = check.cases.len();
        let passed = check
            .cases
            .iter()
            .filter(|c| matches!(c(), Ok(true)))
            .count();
        let tag = if passed == total { "ok" } else { "FAIL" };
        all_ok &= passed == total;
        writeln!(out, "[{tag}] {} ({passed}/{total})", check.name)?;
    }
    Ok(if all_ok { 0 } else { 1 })
}
