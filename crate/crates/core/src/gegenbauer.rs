//! Gegenbauer polynomials with exact rational coefficients and the closed
//! forms of their weighted norms.
//!
//! All closed forms take an integer `alpha >= 1`, so every Gamma value that
//! appears is a factorial or a half-integer Pochhammer product and the result
//! is an exact rational multiple of π.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::arith::{factorial, integer, rational};
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest power first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyRational {
    coeffs: Vec<BigRational>,
}

impl PolyRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c · x^power`.
    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyRational { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Some(0)` for even, `Some(1)` for odd, `None` when mixed. The zero
    /// polynomial is even.
    pub fn parity(&self) -> Option<usize> {
        let mut parity = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(i % 2),
                Some(p) if p != i % 2 => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x · self`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PolyRational { coeffs }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        poly_derivative(self)
    }
}

impl Add for &PolyRational {
    type Output = PolyRational;
    fn add(self, rhs: &PolyRational) -> PolyRational {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        PolyRational::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &PolyRational {
    type Output = PolyRational;
    fn neg(self) -> PolyRational {
        PolyRational {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &PolyRational {
    type Output = PolyRational;
    fn sub(self, rhs: &PolyRational) -> PolyRational {
        self + &(-rhs)
    }
}

impl Mul for &PolyRational {
    type Output = PolyRational;
    fn mul(self, rhs: &PolyRational) -> PolyRational {
        if self.is_zero() || rhs.is_zero() {
            return PolyRational::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyRational::new(coeffs)
    }
}

impl fmt::Display for PolyRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let body = match i {
                0 => mag.to_string(),
                _ if mag.is_one() => String::new(),
                _ => format!("{mag}*"),
            };
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write!(f, "{sep}{body}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// An exact value `coefficient · π`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiRational(pub BigRational);

impl PiRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(coefficient: BigRational) -> Self {
        PiRational(coefficient)
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PiRational(&self.0 * c)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        PiRational(self.0 + rhs.0)
    }
}

impl std::iter::Sum for PiRational {
    fn sum<I: Iterator<Item = PiRational>>(iter: I) -> Self {
        iter.fold(PiRational::zero(), Add::add)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}*pi", self.0)
        }
    }
}

/// `C_n^(alpha)(x)` from the three-term recurrence
/// `n C_n = 2(n+α-1) x C_{n-1} - (n+2α-2) C_{n-2}`.
pub fn gegenbauer_poly(n: usize, alpha: &BigRational) -> Result<PolyRational> {
    if !alpha.is_positive() {
        return Err(Error::domain(format!(
            "Gegenbauer parameter must be positive, got {alpha}"
        )));
    }
    let mut prev = PolyRational::constant(BigRational::one());
    if n == 0 {
        return Ok(prev);
    }
    let two = integer(2);
    let mut cur = PolyRational::monomial(&two * alpha, 1);
    for i in 2..=n {
        let fi = integer(i as i64);
        let a = &two * (&fi + alpha - BigRational::one()) / &fi;
        let b = (&fi + &two * alpha - &two) / &fi;
        let next = &cur.shift_up().scale(&a) - &prev.scale(&b);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Convenience wrapper for integer `alpha`.
pub fn gegenbauer_poly_int(n: usize, alpha: u64) -> PolyRational {
    gegenbauer_poly(n, &integer(alpha as i64)).expect("alpha = 0 is rejected by callers")
}

pub fn poly_derivative(p: &PolyRational) -> PolyRational {
    PolyRational::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * integer(i as i64))
            .collect(),
    )
}

fn is_nonpositive_integer(a: &BigRational) -> bool {
    a.is_integer() && !a.is_positive()
}

/// Terminating `pFq(upper; lower; 1)` evaluated exactly.
///
/// The series stops at the first index `N` for which an upper parameter equals
/// `-N`. A lower parameter equal to `0, -1, …, -(N-1)` makes some term divide
/// by zero and is reported as a domain error.
pub fn hyp_terminating(upper: &[BigRational], lower: &[BigRational]) -> Result<BigRational> {
    let n_terms = upper
        .iter()
        .filter(|a| is_nonpositive_integer(a))
        .map(|a| {
            (-a).to_integer()
                .to_u64()
                .expect("termination index fits in u64")
        })
        .min()
        .ok_or_else(|| Error::domain("hypergeometric series does not terminate"))?;
    for b in lower {
        if is_nonpositive_integer(b) {
            let pole = (-b).to_integer().to_u64().unwrap_or(u64::MAX);
            if pole < n_terms {
                return Err(Error::domain(format!(
                    "lower parameter {b} vanishes before the series terminates at t={n_terms}"
                )));
            }
        }
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for t in 0..n_terms {
        let ft = integer(t as i64);
        for a in upper {
            term *= a + &ft;
        }
        for b in lower {
            term /= b + &ft;
        }
        term /= &ft + BigRational::one();
        sum += &term;
    }
    Ok(sum)
}

pub fn hyp4f3_terminating(
    upper: &[BigRational; 4],
    lower: &[BigRational; 3],
) -> Result<BigRational> {
    hyp_terminating(upper, lower)
}

fn fact(n: u64) -> BigRational {
    BigRational::from_integer((*factorial(n)).clone())
}

fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(2).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Rising factorial `(a)_n`.
fn pochhammer(a: &BigRational, n: u64) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, i| acc * (a + integer(i as i64)))
}

fn check_alpha(alpha: u64) -> Result<()> {
    if alpha == 0 {
        Err(Error::domain("alpha must be a positive integer"))
    } else {
        Ok(())
    }
}

/// `∫ C_n^(α)(x)² (1-x²)^(α-1/2) dx` over `[-1, 1]`:
/// `π 2^(1-2α) Γ(n+2α) / (n! (n+α) Γ(α)²)`.
pub fn gegenbauer_norm_orthogonality(n: u64, alpha: u64) -> Result<PiRational> {
    check_alpha(alpha)?;
    let num = pow2(1 - 2 * alpha as i64) * fact(n + 2 * alpha - 1);
    let den = fact(n) * integer((n + alpha) as i64) * fact(alpha - 1) * fact(alpha - 1);
    Ok(PiRational(num / den))
}

/// `∫ C_n^(α)(x)² (1-x²)^(α+μ-1/2) dx` as a Gamma-ratio prefactor times a
/// terminating `4F3` at unit argument.
///
/// `Γ(α-μ)` has a pole for `α <= μ`; those points are outside the formula's
/// domain and are rejected.
pub fn gegenbauer_norm_general(n: u64, alpha: u64, mu: u64) -> Result<PiRational> {
    check_alpha(alpha)?;
    if alpha <= mu {
        return Err(Error::domain(format!(
            "Gamma(alpha - mu) has a pole for alpha={alpha} <= mu={mu}"
        )));
    }
    let a = integer(alpha as i64);
    let half = rational(1, 2);
    let alpha_minus_mu = integer((alpha - mu) as i64);

    // Γ(α+μ+1/2)/Γ(α+1/2) = (α+1/2)_μ and Γ(α-μ+n)/Γ(α-μ) = (α-μ)_n.
    let num =
        fact(n + 2 * alpha - 1) * pochhammer(&(&a + &half), mu) * pochhammer(&alpha_minus_mu, n);
    let den = pow2(2 * alpha as i64 - 1)
        * integer((alpha + mu + n) as i64)
        * fact(n)
        * fact(alpha - 1)
        * fact(alpha + mu + n - 1);

    let series = hyp4f3_terminating(
        &[
            integer(-(n as i64)),
            integer((2 * alpha + n) as i64),
            half.clone(),
            integer(-(mu as i64)),
        ],
        &[&a + &half, alpha_minus_mu, BigRational::one()],
    )?;
    Ok(PiRational(num / den * series))
}

/// `∫ C_n^(α)(x)² (1-x²)^(α+1/2) dx`:
/// `π Γ(2α+n) [(α-1)(α+1/2) + n(α+n/2)] / (2^(2α-1) (α+n-1)(α+n)(α+n+1) n! Γ(α)²)`.
///
/// At `(α, n) = (1, 0)` the expression is 0/0; the true value there is `3π/8`.
pub fn gegenbauer_norm_mu1(n: u64, alpha: u64) -> Result<PiRational> {
    check_alpha(alpha)?;
    if alpha == 1 && n == 0 {
        return Err(Error::DegenerateCase(
            "alpha=1, n=0 gives 0/0 (integrate the weight directly: 3*pi/8)".into(),
        ));
    }
    let a = integer(alpha as i64);
    let nn = integer(n as i64);
    let bracket = (&a - BigRational::one()) * (&a + rational(1, 2)) + &nn * (&a + &nn / integer(2));
    let num = fact(2 * alpha + n - 1) * bracket;
    let den = pow2(2 * alpha as i64 - 1)
        * integer((alpha + n - 1) as i64)
        * integer((alpha + n) as i64)
        * integer((alpha + n + 1) as i64)
        * fact(n)
        * fact(alpha - 1)
        * fact(alpha - 1);
    Ok(PiRational(num / den))
}
