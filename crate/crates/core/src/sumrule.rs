//! Exact verification of the Clebsch-Gordan / 3j sum rule
//!
//! ```text
//! Σ_{m,m'} (-1)^(m'-m) w(m-m') <j m k 0|j m> <j m' k 0|j m'> = [k(k+1) + 4j(j+1)] / [24 j(j+1)]
//! Σ_{m,m'}            w(m-m') (j k j; -m 0 m) (j k j; -m' 0 m') = [k(k+1) + 4j(j+1)] / [24 j(j+1)(2j+1)]
//! ```
//!
//! with `w(d) = 1/(Γ(3+d) Γ(3-d))` and both right-hand sides gated by the
//! triangle rule on `(j, k, j)`. The weight equals the integer-argument limit
//! of `sin(dπ) / (dπ (1-d²)(4-d²))`, so it vanishes for `|d| >= 3`.
//!
//! Every paired product of coefficients is rational, so both sides are
//! compared as exact rationals.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{factorial, integer, sqrt_mul, sqrt_to_rational, HalfInt, SqrtRational};
use crate::error::{Error, Result};
use crate::gegenbauer::{gegenbauer_poly_int, PiRational};
use crate::integrals::{sin4_fourier, weighted_poly_integral};
use crate::wigner::{clebsch_gordan, triangle_ok, wigner_3j, ThreeJArgs};

/// Relative tolerance for the floating-point evaluation of the sum rule.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// Clebsch-Gordan coefficients with signed weights.
    Cg,
    /// 3j symbols with unsigned weights.
    ThreeJ,
}

impl Form {
    pub const BOTH: [Form; 2] = [Form::Cg, Form::ThreeJ];

    pub fn as_str(self) -> &'static str {
        match self {
            Form::Cg => "CG",
            Form::ThreeJ => "THREEJ",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cg" => Ok(Form::Cg),
            "3j" | "threej" => Ok(Form::ThreeJ),
            _ => Err(Error::domain(format!("unknown sum-rule form {s:?}"))),
        }
    }
}

/// One exact verification of the sum rule at `(j, k, form)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRuleReport {
    pub two_j: i64,
    pub k: u64,
    pub form: Form,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
    pub term_count: u64,
    pub elapsed: Duration,
}

/// Floating-point counterpart of [`SumRuleReport`].
#[derive(Clone, Debug, PartialEq)]
pub struct FloatReport {
    pub two_j: i64,
    pub k: u64,
    pub form: Form,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
    pub term_count: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumOptions {
    /// Skip pairs with `|m - m'| >= 3`, whose weight is exactly zero.
    pub skip_zero_weights: bool,
}

impl Default for SumOptions {
    fn default() -> Self {
        SumOptions {
            skip_zero_weights: true,
        }
    }
}

/// `1/(Γ(3+d) Γ(3-d))` for integer `d`; zero for `|d| >= 3`.
pub fn weight_exact(d: i64) -> BigRational {
    if d.abs() >= 3 {
        return BigRational::zero();
    }
    BigRational::new(
        1.into(),
        &*factorial((2 + d) as u64) * &*factorial((2 - d) as u64),
    )
}

/// Limit of `sin(dπ) / (dπ (1-d²)(4-d²))` at integer `d`.
///
/// The denominator `g(x) = π(4x - 5x³ + x⁵)` has simple roots at `0, ±1, ±2`,
/// where the limit is `π(-1)^d / g'(d) = (-1)^d / (4 - 15d² + 5d⁴)`. Elsewhere
/// `sin(dπ)` is exactly zero.
pub fn sinc_weight_limit(d: i64) -> f64 {
    if d.abs() >= 3 {
        return 0.0;
    }
    let x = d as f64;
    let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
    sign / (4.0 - 15.0 * x * x + 5.0 * x.powi(4))
}

fn check_j(j: HalfInt) -> Result<()> {
    if j < HalfInt::ZERO {
        return Err(Error::domain(format!("negative angular momentum j={j}")));
    }
    Ok(())
}

fn check_j_nonzero(j: HalfInt) -> Result<()> {
    check_j(j)?;
    if j == HalfInt::ZERO {
        return Err(Error::DegenerateCase(
            "j = 0: the right-hand side is 0/0 (the left-hand side is 1/4)".into(),
        ));
    }
    Ok(())
}

/// `<j m k 0 | j m>` for `m = -j..=j`.
pub fn cg_column(j: HalfInt, k: u64) -> Result<Vec<SqrtRational>> {
    check_j(j)?;
    let kh = HalfInt::from_int(k as i64);
    j.projections()
        .map(|m| clebsch_gordan(j, m, kh, HalfInt::ZERO, j, m))
        .collect()
}

/// `(j k j; -m 0 m)` for `m = -j..=j`.
pub fn three_j_column(j: HalfInt, k: u64) -> Result<Vec<SqrtRational>> {
    check_j(j)?;
    let kh = HalfInt::from_int(k as i64);
    j.projections()
        .map(|m| wigner_3j(&ThreeJArgs::new([j, kh, j], [-m, HalfInt::ZERO, m])?))
        .collect()
}

fn column(j: HalfInt, k: u64, form: Form) -> Result<Vec<SqrtRational>> {
    match form {
        Form::Cg => cg_column(j, k),
        Form::ThreeJ => three_j_column(j, k),
    }
}

/// Σ_{m,m'} weight(m - m') c_m c_m', with `m` outer and `m'` inner, ascending.
fn exact_double_sum(
    j: HalfInt,
    k: u64,
    values: &[SqrtRational],
    weight: impl Fn(i64) -> BigRational,
    opts: &SumOptions,
) -> Result<BigRational> {
    let n = values.len() as i64;
    let mut sum = BigRational::zero();
    for i in 0..n {
        let (lo, hi) = if opts.skip_zero_weights {
            ((i - 2).max(0), (i + 2).min(n - 1))
        } else {
            (0, n - 1)
        };
        for ip in lo..=hi {
            let w = weight(i - ip);
            let product = sqrt_mul(&values[i as usize], &values[ip as usize]);
            let product = sqrt_to_rational(&product).map_err(|_| Error::IrrationalTerm {
                two_j: j.twice(),
                k: k as i64,
                two_m: 2 * i - j.twice(),
                two_m_prime: 2 * ip - j.twice(),
            })?;
            if !w.is_zero() {
                sum += w * product;
            }
        }
    }
    Ok(sum)
}

// (-1)^(m'-m) w(m-m'); the weight is even so the sign is all that differs.
fn signed_weight(d: i64) -> BigRational {
    let w = weight_exact(d);
    if d % 2 == 0 {
        w
    } else {
        -w
    }
}

pub fn lhs_cg_exact(j: HalfInt, k: u64) -> Result<BigRational> {
    lhs_cg_exact_with(j, k, &SumOptions::default())
}

pub fn lhs_cg_exact_with(j: HalfInt, k: u64, opts: &SumOptions) -> Result<BigRational> {
    let values = cg_column(j, k)?;
    exact_double_sum(j, k, &values, signed_weight, opts)
}

pub fn lhs_3j_exact(j: HalfInt, k: u64) -> Result<BigRational> {
    lhs_3j_exact_with(j, k, &SumOptions::default())
}

pub fn lhs_3j_exact_with(j: HalfInt, k: u64, opts: &SumOptions) -> Result<BigRational> {
    let values = three_j_column(j, k)?;
    exact_double_sum(j, k, &values, weight_exact, opts)
}

/// `k(k+1) + 4j(j+1)` and `j(j+1)`, both as rationals.
fn casimir_terms(j: HalfInt, k: u64) -> (BigRational, BigRational) {
    let jj = j.to_rational() * (j.to_rational() + integer(1));
    let k = integer(k as i64);
    (&k * (&k + integer(1)) + integer(4) * &jj, jj)
}

/// `[k(k+1) + 4j(j+1)] / [24 j(j+1)]` when `(j, k, j)` is a triangle, else 0.
pub fn rhs_cg(j: HalfInt, k: u64) -> Result<BigRational> {
    check_j_nonzero(j)?;
    if !triangle_ok(j, HalfInt::from_int(k as i64), j) {
        return Ok(BigRational::zero());
    }
    let (num, jj) = casimir_terms(j, k);
    Ok(num / (integer(24) * jj))
}

/// `rhs_cg(j, k) / (2j + 1)`.
pub fn rhs_3j(j: HalfInt, k: u64) -> Result<BigRational> {
    Ok(rhs_cg(j, k)? / integer(j.twice() + 1))
}

pub fn lhs_exact(j: HalfInt, k: u64, form: Form, opts: &SumOptions) -> Result<BigRational> {
    match form {
        Form::Cg => lhs_cg_exact_with(j, k, opts),
        Form::ThreeJ => lhs_3j_exact_with(j, k, opts),
    }
}

pub fn rhs_exact(j: HalfInt, k: u64, form: Form) -> Result<BigRational> {
    match form {
        Form::Cg => rhs_cg(j, k),
        Form::ThreeJ => rhs_3j(j, k),
    }
}

/// The same double sum in floating point, with the sinc-form weights taken
/// at their integer-argument limits and every coefficient converted to `f64`.
pub fn lhs_float(j: HalfInt, k: u64, form: Form) -> Result<f64> {
    let values: Vec<f64> = column(j, k, form)?
        .iter()
        .map(SqrtRational::to_f64)
        .collect();
    let mut sum = 0.0;
    for (i, a) in values.iter().enumerate() {
        for (ip, b) in values.iter().enumerate() {
            // d = m' - m
            let d = ip as i64 - i as i64;
            let w = sinc_weight_limit(d);
            let w = match form {
                Form::Cg if d % 2 != 0 => -w,
                _ => w,
            };
            sum += w * a * b;
        }
    }
    Ok(sum)
}

fn term_count(j: HalfInt) -> u64 {
    let n = (j.twice() + 1) as u64;
    n * n
}

pub fn verify(j: HalfInt, k: u64, form: Form) -> Result<SumRuleReport> {
    verify_with(j, k, form, &SumOptions::default())
}

pub fn verify_with(j: HalfInt, k: u64, form: Form, opts: &SumOptions) -> Result<SumRuleReport> {
    let start = Instant::now();
    let rhs = rhs_exact(j, k, form)?;
    let lhs = lhs_exact(j, k, form, opts)?;
    Ok(SumRuleReport {
        two_j: j.twice(),
        k,
        form,
        pass: lhs == rhs,
        lhs,
        rhs,
        term_count: term_count(j),
        elapsed: start.elapsed(),
    })
}

pub fn verify_float(j: HalfInt, k: u64, form: Form) -> Result<FloatReport> {
    let start = Instant::now();
    let rhs = rhs_exact(j, k, form)?.to_f64().unwrap_or(f64::NAN);
    let lhs = lhs_float(j, k, form)?;
    Ok(FloatReport {
        two_j: j.twice(),
        k,
        form,
        pass: (lhs - rhs).abs() <= FLOAT_TOLERANCE * rhs.abs().max(1.0),
        lhs,
        rhs,
        term_count: term_count(j),
        elapsed: start.elapsed(),
    })
}

/// A `(j, k, form)` point of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub two_j: i64,
    pub k: u64,
    pub form: Form,
}

impl Cell {
    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(self.two_j)
    }
}

/// Cells for every `2j` in `two_js`, every `k` in `0..=2j + k_extra` (or the
/// single `k` given), and every requested form, in `(2j, k, form)` order.
pub fn plan(
    two_js: impl IntoIterator<Item = i64>,
    k: Option<u64>,
    k_extra: u64,
    forms: &[Form],
) -> Vec<Cell> {
    let mut forms = forms.to_vec();
    forms.sort();
    forms.dedup();
    let mut cells = Vec::new();
    for two_j in two_js {
        let ks: Vec<u64> = match k {
            Some(k) => vec![k],
            None => (0..=two_j.max(0) as u64 + k_extra).collect(),
        };
        for k in ks {
            for &form in &forms {
                cells.push(Cell { two_j, k, form });
            }
        }
    }
    cells
}

/// Verifies every cell, in parallel on the current rayon pool. The output
/// order follows `cells`.
pub fn run_exact(cells: &[Cell], opts: &SumOptions) -> Result<Vec<SumRuleReport>> {
    cells
        .par_iter()
        .map(|c| verify_with(c.j(), c.k, c.form, opts))
        .collect()
}

pub fn run_float(cells: &[Cell]) -> Result<Vec<FloatReport>> {
    cells
        .par_iter()
        .map(|c| verify_float(c.j(), c.k, c.form))
        .collect()
}

/// Exact reports for `2j = 1..=two_j_max`, `k = 0..=2j + k_extra`, both forms.
pub fn sweep(two_j_max: i64, k_extra: u64) -> Result<Vec<SumRuleReport>> {
    if two_j_max < 1 {
        return Err(Error::domain(format!(
            "two_j_max must be at least 1, got {two_j_max}"
        )));
    }
    run_exact(
        &plan(1..=two_j_max, None, k_extra, &Form::BOTH),
        &SumOptions::default(),
    )
}

/// `Σ_{m,m'} <j m k 0|j m> <j m' k 0|j m'> ∫₀^π e^(-2i(m-m')η) sin⁴η dη`,
/// the Fourier side of the derivation.
pub fn fourier_side(j: HalfInt, k: u64) -> Result<PiRational> {
    let values = cg_column(j, k)?;
    let n = values.len() as i64;
    let mut total = BigRational::zero();
    for i in 0..n {
        for ip in 0..n {
            let f = sin4_fourier(i - ip);
            if f.is_zero() {
                continue;
            }
            let product = sqrt_to_rational(&sqrt_mul(&values[i as usize], &values[ip as usize]))
                .map_err(|_| Error::IrrationalTerm {
                    two_j: j.twice(),
                    k: k as i64,
                    two_m: 2 * i - j.twice(),
                    two_m_prime: 2 * ip - j.twice(),
                })?;
            total += f.coefficient() * product;
        }
    }
    Ok(PiRational::new(total))
}

/// `π [k(k+1) + 4j(j+1)] / [16 j(j+1)]` gated by the triangle rule.
pub fn fourier_side_closed_form(j: HalfInt, k: u64) -> Result<PiRational> {
    check_j_nonzero(j)?;
    if !triangle_ok(j, HalfInt::from_int(k as i64), j) {
        return Ok(PiRational::zero());
    }
    let (num, jj) = casimir_terms(j, k);
    Ok(PiRational::new(num / (integer(16) * jj)))
}

fn check_specialized(j: HalfInt, k: u64) -> Result<u64> {
    check_j_nonzero(j)?;
    let two_j = j.twice() as u64;
    if k > two_j {
        return Err(Error::domain(format!("k={k} exceeds 2j={two_j}")));
    }
    Ok(two_j)
}

/// `∫₀^π [C_{2j-k}^(k+1)(cos η)]² sin^(2k+4) η dη` from the closed form
/// `(π/16) (2j+k+1)! [k(k+1) + 4j(j+1)] / [(2j-k)! (2j+1) j(j+1) (2^k k!)²]`.
pub fn specialized_integral_closed_form(j: HalfInt, k: u64) -> Result<PiRational> {
    let two_j = check_specialized(j, k)?;
    let (num, jj) = casimir_terms(j, k);
    let double_factorial = BigInt::from(2).pow(k as u32) * &*factorial(k);
    let num = num * BigRational::from_integer((*factorial(two_j + k + 1)).clone());
    let den =
        BigRational::from_integer(&*factorial(two_j - k) * &double_factorial * &double_factorial)
            * integer(16 * (two_j as i64 + 1))
            * jj;
    Ok(PiRational::new(num / den))
}

/// The same integral through the moment integrator: with `x = cos η` it is
/// `∫ C² (1-x²)^(k+3/2) dx`.
pub fn specialized_integral_moment(j: HalfInt, k: u64) -> Result<PiRational> {
    let two_j = check_specialized(j, k)?;
    let c = gegenbauer_poly_int((two_j - k) as usize, k + 1);
    Ok(weighted_poly_integral(&(&c * &c), k + 1))
}

/// `(2^k k!)² (2j+1)(2j-k)!/(2j+k+1)!`, the squared prefactor linking the
/// Gegenbauer integral to the Fourier side.
pub fn character_prefactor_squared(j: HalfInt, k: u64) -> Result<BigRational> {
    let two_j = check_specialized(j, k)?;
    let double_factorial = BigInt::from(2).pow(k as u32) * &*factorial(k);
    Ok(BigRational::new(
        &double_factorial * &double_factorial * BigInt::from(two_j + 1) * &*factorial(two_j - k),
        (*factorial(two_j + k + 1)).clone(),
    ))
}
