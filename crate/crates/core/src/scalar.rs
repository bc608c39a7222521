//! Exact rational scalars.
//!
//! Everything in this crate is generic over the rational type used for the
//! coefficients of cyclotomic numbers. Any `num_rational::Ratio<T>` over a
//! signed integer type qualifies; [`BigRational`](num_rational::BigRational)
//! never overflows and is what the crate-root aliases use. Floating point
//! types are deliberately not implementors: canonical forms are compared for
//! exact equality.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact field of characteristic zero containing the rationals.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_frac(num: i64, den: i64) -> Self;

    fn floor_value(&self) -> Self;

    fn is_integral(&self) -> bool;

    /// Integer value, if `self` is an integer that fits in an `i64`.
    fn to_i64_exact(&self) -> Option<i64>;

    /// `x - floor(x)`, always in `[0, 1)`.
    fn fract_part(&self) -> Self {
        self.clone() - self.floor_value()
    }

    /// `self += rhs`.
    fn add_ref(&mut self, rhs: &Self) {
        *self = self.clone() + rhs.clone();
    }

    /// `self -= rhs`.
    fn sub_ref(&mut self, rhs: &Self) {
        *self = self.clone() - rhs.clone();
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.clone() + a.clone() * b.clone();
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("i64 fits in the integer type"))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Ratio::new(
            T::from_i64(num).expect("i64 fits in the integer type"),
            T::from_i64(den).expect("i64 fits in the integer type"),
        )
    }

    fn floor_value(&self) -> Self {
        self.floor()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn add_ref(&mut self, rhs: &Self) {
        *self = if self.is_integer() && rhs.is_integer() {
            Ratio::from_integer(self.numer().clone() + rhs.numer().clone())
        } else {
            &*self + rhs
        };
    }

    fn sub_ref(&mut self, rhs: &Self) {
        *self = if self.is_integer() && rhs.is_integer() {
            Ratio::from_integer(self.numer().clone() - rhs.numer().clone())
        } else {
            &*self - rhs
        };
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = if self.is_integer() && a.is_integer() && b.is_integer() {
            Ratio::from_integer(self.numer().clone() + a.numer().clone() * b.numer().clone())
        } else {
            &*self + &(a * b)
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn fractional_part_of_negative_values() {
        let x = BigRational::from_frac(-1, 3);
        assert_eq!(x.fract_part(), BigRational::from_frac(2, 3));
        let y = Rational64::from_frac(7, 2);
        assert_eq!(y.fract_part(), Rational64::from_frac(1, 2));
        assert_eq!(
            <Rational64 as Scalar>::from_i64(-4).fract_part(),
            <Rational64 as Scalar>::from_i64(0)
        );
    }

    #[test]
    fn integrality() {
        assert_eq!(BigRational::from_frac(6, 3).to_i64_exact(), Some(2));
        assert_eq!(BigRational::from_frac(5, 3).to_i64_exact(), None);
    }
}
