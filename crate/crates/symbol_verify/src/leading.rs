//! Leading-order extraction for homogeneous symbols.
//!
//! Low-high: substitute low = t·high and keep the lowest power of t in
//! numerator and denominator; for homogeneous data each is one monomial.
//! Balanced: the value on the diagonal (1,1) together with the degree.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{Exp, Poly};
use crate::ratfun::RatFun;
use crate::{Result, SymbolError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coef: BigRational,
    pub exps: Exp,
}

impl Monomial {
    pub fn degree(&self) -> i32 {
        self.exps.0 + self.exps.1
    }

    pub fn from_poly(p: &Poly) -> Option<Self> {
        if p.len() != 1 {
            return None;
        }
        let (e, c) = p.terms().next()?;
        Some(Self { coef: c.clone(), exps: *e })
    }

    pub fn display(&self, names: [&str; 2]) -> String {
        let mut s = if self.exps == (0, 0) || !self.coef.abs().is_one() {
            self.coef.to_string()
        } else if self.coef.is_negative() {
            "-".into()
        } else {
            String::new()
        };
        for (p, name) in [(self.exps.0, names[0]), (self.exps.1, names[1])] {
            if p == 0 {
                continue;
            }
            if !s.is_empty() && s != "-" {
                s.push('*');
            }
            s.push_str(name);
            if p != 1 {
                s.push_str(&format!("^{p}"));
            }
        }
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(["x", "y"]))
    }
}

fn lowest_in(p: &Poly, low: usize) -> Result<Monomial> {
    let key = |e: &Exp| if low == 0 { e.0 } else { e.1 };
    let m = p
        .terms()
        .map(|(e, _)| key(e))
        .min()
        .ok_or(SymbolError::NoLeadingTerm("zero function".into()))?;
    let lows: Vec<_> = p.terms().filter(|(e, _)| key(e) == m).collect();
    if lows.len() != 1 {
        return Err(SymbolError::NoLeadingTerm(format!(
            "{} terms share the lowest power of the low variable",
            lows.len()
        )));
    }
    Ok(Monomial { coef: lows[0].1.clone(), exps: *lows[0].0 })
}

/// Leading monomial as the variable with index `low` tends to zero.
pub fn low_high_lead(f: &RatFun, low: usize) -> Result<Monomial> {
    let n = lowest_in(f.num(), low)?;
    let d = lowest_in(f.den(), low)?;
    Ok(Monomial {
        coef: n.coef / d.coef,
        exps: (n.exps.0 - d.exps.0, n.exps.1 - d.exps.1),
    })
}

/// Diagonal value and homogeneity degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedLead {
    pub value: BigRational,
    pub degree: i32,
}

pub fn balanced_lead(f: &RatFun) -> Result<BalancedLead> {
    let value = diagonal_value(f).ok_or(SymbolError::NoLeadingTerm("pole on the diagonal".into()))?;
    let degree = f
        .homogeneous_degree()
        .ok_or(SymbolError::NoLeadingTerm("not homogeneous".into()))?;
    Ok(BalancedLead { value, degree })
}

/// Value at (1,1), cancelling common factors (x − y) first. The quotients
/// are kept unreduced, so mixed systems often give 0/0 on the diagonal.
pub fn diagonal_value(f: &RatFun) -> Option<BigRational> {
    let (_, mut num) = f.num().on_ray(0);
    let (_, mut den) = f.den().on_ray(0);
    loop {
        let d1 = horner(&den, &BigRational::one());
        if !d1.is_zero() {
            return Some(horner(&num, &BigRational::one()) / d1);
        }
        if den.is_empty() || !horner(&num, &BigRational::one()).is_zero() {
            return None;
        }
        num = deflate_at_one(&num);
        den = deflate_at_one(&den);
    }
}

/// Evaluate dense coefficients (lowest first) at `t`.
pub fn horner(c: &[BigRational], t: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, a| acc * t + a)
}

/// Quotient by (t − 1) of a polynomial vanishing at t = 1.
pub fn deflate_at_one(c: &[BigRational]) -> Vec<BigRational> {
    // c(t) = (t − 1) q(t): q_{k-1} = c_k + q_k, from the top down.
    let n = c.len();
    if n <= 1 {
        return Vec::new();
    }
    let mut q = vec![BigRational::zero(); n - 1];
    let mut carry = BigRational::zero();
    for k in (1..n).rev() {
        carry = &carry + &c[k];
        q[k - 1] = carry.clone();
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::poly::q;

    #[test]
    fn low_high_of_simple_quotient() {
        // (x + 2y)/(3y^2 + x y) → 2y/(3y^2) = 2/3 y^-1
        let f = parse("(x+2y)/(3y^2+xy)", ['x', 'y']).unwrap();
        let m = low_high_lead(&f, 0).unwrap();
        assert_eq!(m, Monomial { coef: q(2, 3), exps: (0, -1) });
        // with y as the low variable: x/(xy) = y^-1
        let m = low_high_lead(&f, 1).unwrap();
        assert_eq!(m, Monomial { coef: q(1, 1), exps: (0, -1) });
    }

    #[test]
    fn inhomogeneous_lowest_layer_is_rejected() {
        let f = parse("y + y^2", ['x', 'y']).unwrap();
        assert!(low_high_lead(&f, 0).is_err());
    }

    #[test]
    fn balanced_value_and_degree() {
        let f = parse("(x^2+y^2)/(x+3y)", ['x', 'y']).unwrap();
        assert_eq!(balanced_lead(&f).unwrap(), BalancedLead { value: q(1, 2), degree: 1 });
    }

    #[test]
    fn removable_diagonal_singularity() {
        // (x^2 − y^2)/(x − y) = x + y → 2 at (1,1)
        let f = parse("(x^2-y^2)/(x-y)", ['x', 'y']).unwrap();
        assert_eq!(balanced_lead(&f).unwrap(), BalancedLead { value: q(2, 1), degree: 1 });
        let f = parse("(x-y)^2/(x-y)^3", ['x', 'y']).unwrap();
        assert!(balanced_lead(&f).is_err());
    }

    #[test]
    fn monomial_display() {
        let m = Monomial { coef: q(-1, 5), exps: (0, -3) };
        assert_eq!(m.display(["y", "z"]), "-1/5*z^-3");
        let m = Monomial { coef: q(1, 1), exps: (1, 2) };
        assert_eq!(m.display(["x", "y"]), "x*y^2");
    }
}
