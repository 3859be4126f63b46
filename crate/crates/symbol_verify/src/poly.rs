//! Sparse bivariate Laurent polynomials over arbitrary-precision rationals.
//!
//! Exponents are signed so that printed forms such as `x + x^2/y` stay
//! polynomial objects; the catalog never needs more than two variables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Exp = (i32, i32);

/// Convenience constructor for small rationals.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Exp, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: BigRational, e: Exp) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The variable with index 0 or 1.
    pub fn var(i: usize) -> Self {
        match i {
            0 => Self::monomial(BigRational::one(), (1, 0)),
            1 => Self::monomial(BigRational::one(), (0, 1)),
            _ => panic!("bivariate polynomial has no variable {i}"),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by x^i y^j (exact, exponents may be negative).
    pub fn shift(&self, by: Exp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ((e.0 + by.0, e.1 + by.1), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exchange the two variables.
    pub fn swap(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| ((e.1, e.0), v.clone())).collect(),
        }
    }

    /// Componentwise minimum exponent; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Exp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |m, e| (m.0.min(e.0), m.1.min(e.1))))
    }

    /// Total degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degs = self.terms.keys().map(|e| e.0 + e.1);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Exact evaluation; `None` if a negative power of zero is required.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(x, e.0)? * rat_pow(y, e.1)?;
        }
        Some(acc)
    }

    /// Restriction to the ray (low, high) = (t, 1): dense coefficients in t,
    /// lowest first, together with the power of t of the first coefficient.
    pub fn on_ray(&self, low: usize) -> (i32, Vec<BigRational>) {
        let key = |e: &Exp| if low == 0 { e.0 } else { e.1 };
        let Some(lo) = self.terms.keys().map(key).min() else {
            return (0, Vec::new());
        };
        let hi = self.terms.keys().map(key).max().unwrap_or(lo);
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, v) in &self.terms {
            c[(key(e) - lo) as usize] += v;
        }
        (lo, c)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| to_f64(c) * x.powi(e.0) * y.powi(e.1))
            .sum()
    }

    /// Human-readable form with the given variable names.
    pub fn display(&self, names: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        // highest power of the first variable first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_str(*e, names);
            if mono.is_empty() {
                let _ = write!(s, "{mag}");
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{mag}*{mono}");
            }
        }
        s
    }
}

fn monomial_str(e: Exp, names: [&str; 2]) -> String {
    let mut parts = Vec::new();
    for (p, name) in [(e.0, names[0]), (e.1, names[1])] {
        match p {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{p}")),
        }
    }
    parts.join("*")
}

pub fn rat_pow(x: &BigRational, p: i32) -> Option<BigRational> {
    if p < 0 && x.is_zero() {
        return None;
    }
    Some(num_traits::pow::Pow::pow(x, p))
}

pub fn to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
