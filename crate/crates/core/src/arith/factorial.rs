use std::collections::BTreeMap;
use std::ops::{Div, Mul};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

/// A positive rational number as a product of prime powers.
///
/// Exponents may be negative; zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeFactorization {
    exponents: BTreeMap<u64, i64>,
}

impl PrimeFactorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factor a positive integer by trial division.
    pub fn of_integer(mut n: u64) -> Self {
        assert!(n > 0, "cannot factor zero");
        let mut out = Self::one();
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                out.add_exponent(p, 1);
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            out.add_exponent(n, 1);
        }
        out
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, prime: u64) -> i64 {
        self.exponents.get(&prime).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    fn add_exponent(&mut self, prime: u64, delta: i64) {
        if delta == 0 {
            return;
        }
        let e = self.exponents.entry(prime).or_insert(0);
        *e += delta;
        if *e == 0 {
            self.exponents.remove(&prime);
        }
    }

    pub fn inverse(&self) -> Self {
        PrimeFactorization {
            exponents: self.exponents.iter().map(|(&p, &e)| (p, -e)).collect(),
        }
    }

    pub fn mul_assign(&mut self, other: &PrimeFactorization) {
        for (&p, &e) in &other.exponents {
            self.add_exponent(p, e);
        }
    }

    pub fn div_assign(&mut self, other: &PrimeFactorization) {
        for (&p, &e) in &other.exponents {
            self.add_exponent(p, -e);
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in &self.exponents {
            let power = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= power;
            } else {
                den *= power;
            }
        }
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Mul<&PrimeFactorization> for PrimeFactorization {
    type Output = PrimeFactorization;
    fn mul(mut self, rhs: &PrimeFactorization) -> PrimeFactorization {
        self.mul_assign(rhs);
        self
    }
}

impl Div<&PrimeFactorization> for PrimeFactorization {
    type Output = PrimeFactorization;
    fn div(mut self, rhs: &PrimeFactorization) -> PrimeFactorization {
        self.div_assign(rhs);
        self
    }
}

// Both caches only ever grow; readers share the lock, growth takes it exclusively.
fn factored_cache() -> &'static RwLock<Vec<Arc<PrimeFactorization>>> {
    static CACHE: OnceLock<RwLock<Vec<Arc<PrimeFactorization>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Arc::new(PrimeFactorization::one())]))
}

fn integer_cache() -> &'static RwLock<Vec<Arc<BigInt>>> {
    static CACHE: OnceLock<RwLock<Vec<Arc<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Arc::new(BigInt::one())]))
}

/// Prime factorization of `n!`.
pub fn factorial_factored(n: u64) -> Arc<PrimeFactorization> {
    let idx = n as usize;
    if let Some(f) = factored_cache().read().unwrap().get(idx) {
        return Arc::clone(f);
    }
    let mut cache = factored_cache().write().unwrap();
    while cache.len() <= idx {
        let i = cache.len() as u64;
        let next = (**cache.last().unwrap()).clone() * &PrimeFactorization::of_integer(i);
        cache.push(Arc::new(next));
    }
    Arc::clone(&cache[idx])
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> Arc<BigInt> {
    let idx = n as usize;
    if let Some(f) = integer_cache().read().unwrap().get(idx) {
        return Arc::clone(f);
    }
    let mut cache = integer_cache().write().unwrap();
    while cache.len() <= idx {
        let i = cache.len() as u64;
        let next = &**cache.last().unwrap() * BigInt::from(i);
        cache.push(Arc::new(next));
    }
    Arc::clone(&cache[idx])
}
