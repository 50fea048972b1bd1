//! Exact integrals of polynomials against `(1-x²)^(q+1/2)` and the
//! `sin⁴` Fourier coefficients, plus Gauss-Legendre quadrature used to
//! cross-check them in floating point.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::rational;
use crate::error::{Error, Result};
use crate::gegenbauer::{PiRational, PolyRational};

/// `∫ x^p (1-x²)^(q+1/2) dx` over `[-1, 1]`.
///
/// Zero for odd `p`. Otherwise reduced to `π/2` by integrating by parts:
/// `M(0, q) = (2q+1)/(2q+2) · M(0, q-1)` and `M(p, q) = (p-1)/(p+2q+2) · M(p-2, q)`.
pub fn moment_halfweight(p: u64, q: u64) -> PiRational {
    if p % 2 == 1 {
        return PiRational::zero();
    }
    let mut m = base_moment(q);
    for pp in (2..=p).step_by(2) {
        m = m.scale(&moment_step(pp, q));
    }
    m
}

fn base_moment(q: u64) -> PiRational {
    let mut m = rational(1, 2);
    for qq in 1..=q {
        m *= rational(2 * qq as i64 + 1, 2 * qq as i64 + 2);
    }
    PiRational::new(m)
}

fn moment_step(p: u64, q: u64) -> BigRational {
    rational(p as i64 - 1, (p + 2 * q + 2) as i64)
}

/// `∫ poly(x) (1-x²)^(q+1/2) dx` over `[-1, 1]`.
pub fn weighted_poly_integral(poly: &PolyRational, q: u64) -> PiRational {
    let mut total = BigRational::zero();
    let mut moment = base_moment(q).0;
    for (p, c) in poly.coeffs().iter().enumerate() {
        if p % 2 == 1 {
            continue;
        }
        if p > 0 {
            moment *= moment_step(p as u64, q);
        }
        if !c.is_zero() {
            total += c * &moment;
        }
    }
    PiRational::new(total)
}

// sin⁴η = 3/8 - (1/2) cos 2η + (1/8) cos 4η
const SIN4_COSINE_SERIES: [(i64, i64); 3] = [(3, 8), (-1, 2), (1, 8)];

/// `∫₀^π e^(-2idη) sin⁴η dη`, which is real for integer `d`.
///
/// Against the cosine series of `sin⁴`, `∫₀^π cos(2dη) cos(2lη) dη` is `π`
/// for `d = l = 0`, `π/2` for `|d| = l > 0` and zero otherwise. The sine part
/// vanishes by symmetry about `η = π/2`.
pub fn sin4_fourier(d: i64) -> PiRational {
    let l = d.unsigned_abs() as usize;
    match SIN4_COSINE_SERIES.get(l) {
        None => PiRational::zero(),
        Some(&(n, den)) if l == 0 => PiRational::new(rational(n, den)),
        Some(&(n, den)) => PiRational::new(rational(n, 2 * den)),
    }
}

/// Nodes and weights of an n-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Rules are built once per order and shared.
    pub fn cached(n: usize) -> Arc<GaussLegendre> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rule) = cache.read().unwrap().get(&n) {
            return Arc::clone(rule);
        }
        let rule = Arc::new(GaussLegendre::new(n));
        Arc::clone(cache.write().unwrap().entry(n).or_insert(rule))
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
}

/// n-point Gauss-Legendre estimate of `∫_a^b f`, with the error estimated by
/// comparison against the (n+8)-point rule.
pub fn quad_gauss(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::domain(format!("invalid interval [{a}, {b}]")));
    }
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 nodes, got {n}")));
    }
    let value = GaussLegendre::cached(n).integrate(&f, a, b);
    let reference = GaussLegendre::cached(n + 8).integrate(&f, a, b);
    Ok(QuadratureResult {
        value,
        abs_error_estimate: (value - reference).abs(),
        nodes_used: n,
    })
}
