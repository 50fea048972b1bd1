use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

/// An element of ½ℤ, stored as twice its value.
///
/// Angular momenta `j` and projections `m` live here. The difference of two
/// projections belonging to the same `j` is always an integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt(2 * value)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub const fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    /// `true` when `self` and `other` differ by an integer.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    /// The projections `-j, -j+1, …, j` of an angular momentum `j ≥ 0`.
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + ExactSizeIterator {
        let twice = self.0;
        let n = if twice < 0 { 0 } else { twice as usize + 1 };
        (0..n).map(move |i| HalfInt(-twice + 2 * i as i64))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }

    #[test]
    fn projections_step_by_one() {
        let m: Vec<i64> = HalfInt::from_twice(3)
            .projections()
            .map(HalfInt::twice)
            .collect();
        assert_eq!(m, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
        assert_eq!(HalfInt::from_twice(-2).projections().count(), 0);
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let a = HalfInt::from_twice(5);
        let b = HalfInt::from_twice(-3);
        assert_eq!((a + b).to_rational(), a.to_rational() + b.to_rational());
        assert_eq!((a - b).to_rational(), a.to_rational() - b.to_rational());
        assert_eq!(a.cmp(&b), a.to_rational().cmp(&b.to_rational()));
        assert_eq!((a - b).as_integer(), Some(4));
        assert_eq!(a.as_integer(), None);
    }
}
