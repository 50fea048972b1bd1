//! Clebsch-Gordan coefficients and Wigner 3j symbols in exact arithmetic.
//!
//! Coefficients follow the Condon-Shortley phase convention and are evaluated
//! with Racah's single-sum formula. The square-root prefactor is accumulated
//! as a prime factorization; the alternating sum as a big rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{factorial, factorial_factored, HalfInt, PrimeFactorization, SqrtRational};
use crate::error::{Error, Result};

/// `|j1 - j2| <= j3 <= j1 + j2` with `j1 + j2 + j3` an integer.
pub fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    (j1 + j2 + j3).is_integer() && (j1 - j2).abs() <= j3 && j3 <= j1 + j2
}

fn check_pair(name: &str, j: HalfInt, m: HalfInt) -> Result<()> {
    if j < HalfInt::ZERO {
        return Err(Error::domain(format!(
            "{name}: negative angular momentum j={j}"
        )));
    }
    if m.abs() > j {
        return Err(Error::domain(format!("{name}: |m| > j (j={j}, m={m})")));
    }
    if !j.same_parity(m) {
        return Err(Error::domain(format!(
            "{name}: j and m must both be integer or both half-integer (j={j}, m={m})"
        )));
    }
    Ok(())
}

// Only called on differences that are known to be nonnegative integers.
fn nonneg(h: HalfInt) -> u64 {
    let v = h.as_integer().expect("integer factorial argument");
    debug_assert!(v >= 0, "negative factorial argument {v}");
    v as u64
}

/// `<j1 m1 j2 m2 | j3 m3>`.
pub fn clebsch_gordan(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j3: HalfInt,
    m3: HalfInt,
) -> Result<SqrtRational> {
    check_pair("j1/m1", j1, m1)?;
    check_pair("j2/m2", j2, m2)?;
    check_pair("j3/m3", j3, m3)?;
    if m1 + m2 != m3 || !triangle_ok(j1, j2, j3) {
        return Ok(SqrtRational::zero());
    }

    let mut radicand = PrimeFactorization::of_integer((j3.twice() + 1) as u64);
    for h in [j1 + j2 - j3, j1 - j2 + j3, j2 + j3 - j1] {
        radicand.mul_assign(&factorial_factored(nonneg(h)));
    }
    radicand.div_assign(&factorial_factored(nonneg(j1 + j2 + j3 + HalfInt::ONE)));
    for h in [j1 + m1, j1 - m1, j2 + m2, j2 - m2, j3 + m3, j3 - m3] {
        radicand.mul_assign(&factorial_factored(nonneg(h)));
    }

    let as_int = |h: HalfInt| h.as_integer().expect("integer summation bound");
    let t_min = 0.max(as_int(j2 - j3 - m1)).max(as_int(j1 - j3 + m2));
    let t_max = as_int(j1 + j2 - j3)
        .min(as_int(j1 - m1))
        .min(as_int(j2 + m2));

    let mut sum = BigRational::zero();
    for t in t_min..=t_max {
        let th = HalfInt::from_int(t);
        let mut den = BigInt::from(1);
        for h in [
            th,
            j1 + j2 - j3 - th,
            j1 - m1 - th,
            j2 + m2 - th,
            j3 - j2 + m1 + th,
            j3 - j1 - m2 + th,
        ] {
            den *= &*factorial(nonneg(h));
        }
        let term = BigRational::new(BigInt::from(if t % 2 == 0 { 1 } else { -1 }), den);
        sum += term;
    }

    if sum.is_zero() {
        return Ok(SqrtRational::zero());
    }
    let sign = if sum.is_negative() { -1 } else { 1 };
    SqrtRational::new(sign, &sum * &sum * radicand.to_rational())
}

/// Arguments of a 3j symbol `(j1 j2 j3; m1 m2 m3)`, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThreeJArgs {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m3: HalfInt,
}

impl ThreeJArgs {
    pub fn new(j: [HalfInt; 3], m: [HalfInt; 3]) -> Result<Self> {
        check_pair("j1/m1", j[0], m[0])?;
        check_pair("j2/m2", j[1], m[1])?;
        check_pair("j3/m3", j[2], m[2])?;
        Ok(ThreeJArgs {
            j1: j[0],
            j2: j[1],
            j3: j[2],
            m1: m[0],
            m2: m[1],
            m3: m[2],
        })
    }

    /// Builds the arguments from doubled values `[2j1, 2j2, 2j3]`, `[2m1, 2m2, 2m3]`.
    pub fn from_twice(two_j: [i64; 3], two_m: [i64; 3]) -> Result<Self> {
        Self::new(
            two_j.map(HalfInt::from_twice),
            two_m.map(HalfInt::from_twice),
        )
    }

    /// Columns in reverse order: `(j3 j2 j1; m3 m2 m1)`.
    pub fn reversed(&self) -> Self {
        ThreeJArgs {
            j1: self.j3,
            j2: self.j2,
            j3: self.j1,
            m1: self.m3,
            m2: self.m2,
            m3: self.m1,
        }
    }
}

/// `(-1)^n` for integer `n` given as a [`HalfInt`].
fn phase(n: HalfInt) -> i8 {
    match n.as_integer() {
        Some(v) if v.rem_euclid(2) == 0 => 1,
        Some(_) => -1,
        None => unreachable!("phase exponent {n} is not an integer"),
    }
}

fn apply_phase(value: SqrtRational, sign: i8) -> SqrtRational {
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// The 3j symbol, via
/// `(j1 j2 j3; m1 m2 m3) = (-1)^(j1-j2-m3) <j1 m1 j2 m2 | j3 -m3> / √(2j3+1)`.
pub fn wigner_3j(args: &ThreeJArgs) -> Result<SqrtRational> {
    let ThreeJArgs {
        j1,
        j2,
        j3,
        m1,
        m2,
        m3,
    } = *args;
    if m1 + m2 + m3 != HalfInt::ZERO || !triangle_ok(j1, j2, j3) {
        return Ok(SqrtRational::zero());
    }
    let cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3)?;
    let norm = SqrtRational::new(1, BigRational::new(1.into(), BigInt::from(j3.twice() + 1)))?;
    Ok(apply_phase(&cg * &norm, phase(j1 - j2 - m3)))
}

/// The symbol with its columns reversed and the phase `(-1)^(j1+j2+j3)`
/// applied. Equal to `wigner_3j(args)` by the column-reversal symmetry.
pub fn symmetry_3j_reverse(args: &ThreeJArgs) -> Result<SqrtRational> {
    let reversed = wigner_3j(&args.reversed())?;
    if reversed.is_zero() {
        return Ok(reversed);
    }
    Ok(apply_phase(reversed, phase(args.j1 + args.j2 + args.j3)))
}

/// Converts a 3j value back into the CG coefficient `<j1 m1 j2 m2 | j3 -m3>`.
pub fn cg_from_3j(args: &ThreeJArgs, three_j: &SqrtRational) -> SqrtRational {
    if three_j.is_zero() {
        return SqrtRational::zero();
    }
    let scale = SqrtRational::new(
        1,
        BigRational::from_integer(BigInt::from(args.j3.twice() + 1)),
    )
    .expect("positive scale");
    apply_phase(three_j * &scale, phase(args.j1 - args.j2 - args.m3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, sqrt_mul, sqrt_sum, sqrt_to_rational};

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn cg2(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> SqrtRational {
        clebsch_gordan(h(a), h(b), h(c), h(d), h(e), h(f)).unwrap()
    }

    fn s(sign: i8, n: i64, d: i64) -> SqrtRational {
        SqrtRational::new(sign, rational(n, d)).unwrap()
    }

    #[test]
    fn triangle_examples() {
        assert!(triangle_ok(h(2), h(0), h(2)));
        assert!(!triangle_ok(h(2), h(6), h(2)));
        assert!(triangle_ok(h(1), h(2), h(1)));
        assert!(!triangle_ok(h(1), h(1), h(1)));
    }

    #[test]
    fn coupling_with_scalar_is_one() {
        for two_j in 0..8 {
            for m in h(two_j).projections() {
                let v = clebsch_gordan(h(two_j), m, h(0), h(0), h(two_j), m).unwrap();
                assert_eq!(v, SqrtRational::one());
            }
        }
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(cg2(2, 0, 4, 0, 2, 0), s(-1, 2, 5));
        assert_eq!(cg2(2, 2, 4, 0, 2, 2), s(1, 1, 10));
        assert_eq!(cg2(2, -2, 4, 0, 2, -2), s(1, 1, 10));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            clebsch_gordan(h(2), h(4), h(0), h(0), h(2), h(4)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            clebsch_gordan(h(2), h(1), h(1), h(1), h(2), h(2)),
            Err(Error::Domain(_))
        ));
        assert!(ThreeJArgs::from_twice([1, 1, 2], [1, 0, -1]).is_err());
    }

    #[test]
    fn selection_rule_zeros() {
        assert!(cg2(2, 2, 2, 0, 2, 0).is_zero());
        assert!(cg2(2, 0, 6, 0, 2, 0).is_zero());
        let a = ThreeJArgs::from_twice([2, 2, 2], [0, 0, 0]).unwrap();
        assert!(wigner_3j(&a).unwrap().is_zero());
        let a = ThreeJArgs::from_twice([2, 2, 2], [2, 0, 0]).unwrap();
        assert!(wigner_3j(&a).unwrap().is_zero());
    }

    #[test]
    fn three_j_k_zero() {
        for two_j in 0..=8 {
            for m in h(two_j).projections() {
                let a = ThreeJArgs::new([h(two_j), h(0), h(two_j)], [-m, h(0), m]).unwrap();
                let v = wigner_3j(&a).unwrap();
                let expected_sign = phase(h(two_j) - m);
                assert_eq!(v, s(expected_sign, 1, two_j + 1), "2j={two_j} m={m}");
            }
        }
    }

    #[test]
    fn three_j_example() {
        let a = ThreeJArgs::from_twice([2, 4, 2], [-2, 0, 2]).unwrap();
        assert_eq!(wigner_3j(&a).unwrap(), s(1, 1, 30));
    }

    #[test]
    fn reversal_symmetry_examples() {
        let a = ThreeJArgs::from_twice([2, 2, 2], [2, -2, 0]).unwrap();
        let original = wigner_3j(&a).unwrap();
        assert!(!original.is_zero());
        assert_eq!(wigner_3j(&a.reversed()).unwrap(), -original.clone());
        assert_eq!(symmetry_3j_reverse(&a).unwrap(), original);

        let even = ThreeJArgs::from_twice([2, 4, 2], [-2, 0, 2]).unwrap();
        assert_eq!(
            wigner_3j(&even.reversed()).unwrap(),
            wigner_3j(&even).unwrap()
        );

        let zero = ThreeJArgs::from_twice([2, 2, 2], [0, 0, 0]).unwrap();
        assert!(symmetry_3j_reverse(&zero).unwrap().is_zero());
    }

    #[test]
    fn pair_products_are_rational() {
        for two_j in 1..=20 {
            let j = h(two_j);
            for k in 0..=two_j {
                let column: Vec<_> = j
                    .projections()
                    .map(|m| clebsch_gordan(j, m, h(2 * k), h(0), j, m).unwrap())
                    .collect();
                for a in &column {
                    for b in &column {
                        sqrt_to_rational(&sqrt_mul(a, b))
                            .unwrap_or_else(|_| panic!("irrational product 2j={two_j} k={k}"));
                    }
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for two_j in 0..=12 {
            let j = h(two_j);
            for k in 0..=two_j {
                for kp in 0..=two_j {
                    let products: Vec<_> = j
                        .projections()
                        .map(|m| {
                            let a = clebsch_gordan(j, m, h(2 * k), h(0), j, m).unwrap();
                            let b = clebsch_gordan(j, m, h(2 * kp), h(0), j, m).unwrap();
                            sqrt_mul(&a, &b)
                        })
                        .collect();
                    let sum = sqrt_sum(&products).unwrap();
                    let expected = if k == kp && k <= two_j {
                        SqrtRational::from_rational(&rational(two_j + 1, 2 * k + 1))
                    } else {
                        SqrtRational::zero()
                    };
                    assert_eq!(sum, expected, "2j={two_j} k={k} k'={kp}");
                }
            }
        }
    }
}
