use crate::coeff::{Field, Rational};
use crate::gcd::gcd;
use crate::parse::format_poly;
use crate::poly::Poly;

/// Element of the rational function field Q(a_1, ..., a_m).
///
/// Canonical form: numerator and denominator coprime, denominator monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = gcd(&num, &den);
        let mut n = num.exact_div(&g).expect("gcd divides numerator");
        let mut d = den.exact_div(&g).expect("gcd divides denominator");
        let lc = d.lc();
        if !lc.is_one() {
            let inv = lc.inverse();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        Self::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_i64(v: i64) -> Self {
        Self::from_poly(Poly::from_i64(v))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.constant_coeff())
        } else {
            None
        }
    }
    fn render(&self, params: &[String]) -> (bool, Option<String>) {
        if let Some(q) = self.to_rational() {
            return q.render(params);
        }
        let n = format_poly(&self.num, params, &[]);
        if self.den.is_one() {
            (false, Some(format!("({n})")))
        } else {
            let d = format_poly(&self.den, params, &[]);
            (false, Some(format!("({n})/({d})")))
        }
    }
}
