//! Quotients of bivariate Laurent polynomials, kept unreduced.
//!
//! Equality is decided by cross-multiplication, so no multivariate GCD is
//! ever needed. The only normalization performed is cancelling a common
//! monomial factor, which is free for Laurent polynomials.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::Poly;
use crate::{Result, SymbolError};

#[derive(Clone, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(SymbolError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        // Move all monomial content into the numerator's exponents so that
        // the denominator has no negative powers and no common x^i y^j.
        match den.min_exponents() {
            Some(m) if m != (0, 0) => Self {
                num: num.shift((-m.0, -m.1)),
                den: den.shift((-m.0, -m.1)),
            },
            _ => Self { num, den },
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying Laurent polynomial when the denominator is a constant.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.len() != 1 {
            return None;
        }
        let c = self.den.coeff((0, 0));
        if c.is_zero() {
            return None;
        }
        Some(self.num.scale(&c.recip()))
    }

    /// Polynomial whose vanishing is equivalent to `self == other`.
    pub fn cross_residual(&self, other: &RatFun) -> Poly {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }

    pub fn equals(&self, other: &RatFun) -> bool {
        self.cross_residual(other).is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// Exchange the two variables.
    pub fn swap(&self) -> Self {
        Self::normalized(self.num.swap(), self.den.swap())
    }

    /// Symmetrization m ↦ ½(m(x,y) + m(y,x)).
    pub fn sym(&self) -> Self {
        (self + &self.swap()).scale(&BigRational::new(1.into(), 2.into()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.equals(&self.swap())
    }

    /// Exact value; `None` where the denominator (or a negative power) vanishes.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x, y)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x, y)? / d)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.num.eval_f64(x, y) / self.den.eval_f64(x, y)
    }

    /// Total degree when numerator and denominator are both homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        Some(self.num.homogeneous_degree()? - self.den.homogeneous_degree()?)
    }

    pub fn display(&self, names: [&str; 2]) -> String {
        if self.den == Poly::one() {
            return self.num.display(names);
        }
        format!("({}) / ({})", self.num.display(names), self.den.display(names))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by the zero function; use [`RatFun::recip`] to handle
/// that case explicitly.
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFun::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn x() -> RatFun {
        Poly::var(0).into()
    }
    fn y() -> RatFun {
        Poly::var(1).into()
    }

    #[test]
    fn cross_multiplication_equality() {
        // (x^2 - y^2)/(x - y) == x + y without any cancellation step
        let lhs = RatFun::new(
            &Poly::var(0).pow(2) - &Poly::var(1).pow(2),
            &Poly::var(0) - &Poly::var(1),
        )
        .unwrap();
        assert_eq!(lhs, &x() + &y());
        assert!(lhs != &x() - &y());
    }

    #[test]
    fn sym_of_x_over_sum() {
        let s = (&x() / &(&x() + &y())).sym();
        assert_eq!(s, RatFun::constant(q(1, 2)));
        assert!(s.is_symmetric());
    }

    #[test]
    fn monomial_content_is_cancelled() {
        let f = &(&x() * &y()) / &(&x() * &y().scale(&q(2, 1)));
        assert_eq!(f.den(), &Poly::constant(q(2, 1)));
    }

    #[test]
    fn eval_reports_poles() {
        let f = &x() / &(&x() - &y());
        assert_eq!(f.eval(&q(1, 1), &q(1, 1)), None);
        assert_eq!(f.eval(&q(1, 1), &q(10, 1)), Some(q(-1, 9)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFun::new(Poly::one(), Poly::zero()).is_err());
    }
}
