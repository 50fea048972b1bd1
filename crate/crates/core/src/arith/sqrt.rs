use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact value `sign · √radicand` with a rational radicand.
///
/// Every Clebsch-Gordan coefficient and 3j symbol has this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    sign: i8,
    radicand: BigRational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational {
            sign: 0,
            radicand: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        SqrtRational {
            sign: 1,
            radicand: BigRational::one(),
        }
    }

    /// Builds `sign · √radicand`. The sign is ignored when the radicand is 0.
    pub fn new(sign: i8, radicand: BigRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::domain(format!("negative radicand {radicand}")));
        }
        if radicand.is_zero() {
            return Ok(Self::zero());
        }
        match sign.cmp(&0) {
            Ordering::Greater => Ok(SqrtRational { sign: 1, radicand }),
            Ordering::Less => Ok(SqrtRational { sign: -1, radicand }),
            Ordering::Equal => Err(Error::domain("zero sign with nonzero radicand")),
        }
    }

    /// The exact square root of `r²`, i.e. `r` itself.
    pub fn from_rational(r: &BigRational) -> Self {
        let sign = match r.numer().sign() {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::NoSign => return Self::zero(),
        };
        SqrtRational {
            sign,
            radicand: r * r,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `value²` with the sign folded in: `sign · radicand`.
    pub fn signed_square(&self) -> BigRational {
        match self.sign {
            0 => BigRational::zero(),
            1 => self.radicand.clone(),
            _ => -self.radicand.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        f64::from(self.sign) * r.sqrt()
    }

    /// The exact rational value, if the radicand is a perfect square.
    pub fn to_rational(&self) -> Result<BigRational> {
        sqrt_to_rational(self)
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        sqrt_mul(self, rhs)
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(mut self) -> SqrtRational {
        self.sign = -self.sign;
        self
    }
}

/// Prints `1`, `-2/3` for perfect squares and `sqrt(2/5)`, `-sqrt(3)` otherwise.
impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(r) = sqrt_to_rational(self) {
            return write!(f, "{r}");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write!(f, "sqrt({})", self.radicand)
    }
}

pub fn sqrt_mul(a: &SqrtRational, b: &SqrtRational) -> SqrtRational {
    if a.is_zero() || b.is_zero() {
        return SqrtRational::zero();
    }
    SqrtRational {
        sign: a.sign * b.sign,
        radicand: &a.radicand * &b.radicand,
    }
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Collapses `sign · √radicand` into a rational when both the reduced
/// numerator and denominator of the radicand are perfect squares.
pub fn sqrt_to_rational(a: &SqrtRational) -> Result<BigRational> {
    if a.is_zero() {
        return Ok(BigRational::zero());
    }
    let num = exact_isqrt(a.radicand.numer());
    let den = exact_isqrt(a.radicand.denom());
    match (num, den) {
        (Some(n), Some(d)) => {
            let r = BigRational::new(n, d);
            Ok(if a.sign < 0 { -r } else { r })
        }
        _ => Err(Error::NotAPerfectSquare(a.radicand.to_string())),
    }
}

/// Exact sum of signed square roots that share a common irrational factor,
/// i.e. whose radicands have pairwise perfect-square ratios.
pub fn sqrt_sum(terms: &[SqrtRational]) -> Result<SqrtRational> {
    let Some(base) = terms.iter().find(|t| !t.is_zero()) else {
        return Ok(SqrtRational::zero());
    };
    let mut scale = BigRational::zero();
    for t in terms.iter().filter(|t| !t.is_zero()) {
        let ratio = SqrtRational {
            sign: t.sign,
            radicand: &t.radicand / &base.radicand,
        };
        scale += sqrt_to_rational(&ratio)?;
    }
    Ok(sqrt_mul(
        &SqrtRational::from_rational(&scale),
        &SqrtRational {
            sign: 1,
            radicand: base.radicand.clone(),
        },
    ))
}
