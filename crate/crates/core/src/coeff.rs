use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

pub type Rational = BigRational;

/// Exact coefficient field used by polynomials and the Gröbner engine.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;
    fn over(&self, other: &Self) -> Self {
        self.times(&other.inverse())
    }
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// The value as a rational number, when it is one.
    fn to_rational(&self) -> Option<Rational>;
    /// Sign and magnitude for printing as a term coefficient; `None` magnitude means one.
    fn render(&self, params: &[String]) -> (bool, Option<String>);
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn render(&self, _params: &[String]) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let a = self.abs();
        if One::is_one(&a) {
            (neg, None)
        } else {
            (neg, Some(a.to_string()))
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
