//! Samples on the 2× refined grid, used for pointwise nonlinear operations.

use crate::transform::{forward_normalized, inverse_unnormalized};
use crate::{ComplexField, SpectralGrid};
use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Sub};

/// Grid samples of a field on a zero-padded grid.
///
/// Products of resolved modes are exact here; [`Padded::lower`] truncates back
/// to the coarse grid.
#[derive(Clone, Debug)]
pub struct Padded {
    coarse: SpectralGrid,
    vals: Vec<Complex64>,
}

impl Padded {
    pub const FACTOR: usize = 2;

    pub fn lift(f: &ComplexField) -> Self {
        let coarse = *f.grid();
        let fine = coarse.refined(Self::FACTOR);
        let mut buf = vec![Complex64::new(0.0, 0.0); fine.n_modes()];
        for (i, &v) in f.modes().iter().enumerate() {
            let k = coarse.wavenumber(i);
            let j = fine.index_of(k).expect("coarse modes fit in the fine grid");
            buf[j] = v;
        }
        inverse_unnormalized(&mut buf);
        Self { coarse, vals: buf }
    }

    pub fn constant(coarse: SpectralGrid, c: Complex64) -> Self {
        Self { coarse, vals: vec![c; coarse.n_modes() * Self::FACTOR] }
    }

    pub fn lower(&self) -> ComplexField {
        let mut buf = self.vals.clone();
        forward_normalized(&mut buf);
        let fine = self.coarse.refined(Self::FACTOR);
        let modes = (0..self.coarse.n_modes())
            .map(|i| buf[fine.index_of(self.coarse.wavenumber(i)).unwrap()])
            .collect();
        ComplexField::from_modes(self.coarse, modes).unwrap()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.vals
    }

    pub fn coarse_grid(&self) -> &SpectralGrid {
        &self.coarse
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { coarse: self.coarse, vals: self.vals.iter().map(|&v| f(v)).collect() }
    }

    pub fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.coarse, other.coarse, "grid mismatch in padded op");
        let vals = self.vals.iter().zip(&other.vals).map(|(&a, &b)| f(a, b)).collect();
        Self { coarse: self.coarse, vals }
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|v| v * c)
    }

    /// Real power of the real part; meant for positive real fields such as `J`.
    pub fn powf_re(&self, p: f64) -> Self {
        self.map(|v| Complex64::new(v.re.powf(p), 0.0))
    }

    pub fn powi(&self, p: i32) -> Self {
        self.map(|v| v.powi(p))
    }

    pub fn recip(&self) -> Self {
        self.map(|v| v.inv())
    }

    pub fn min_abs(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.vals.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Padded> for &Padded {
            type Output = Padded;
            fn $m(self, rhs: &Padded) -> Padded {
                self.zip(rhs, |a, b| a $op b)
            }
        }
        impl $tr<Padded> for Padded {
            type Output = Padded;
            fn $m(self, rhs: Padded) -> Padded {
                self.zip(&rhs, |a, b| a $op b)
            }
        }
        impl $tr<&Padded> for Padded {
            type Output = Padded;
            fn $m(self, rhs: &Padded) -> Padded {
                self.zip(rhs, |a, b| a $op b)
            }
        }
        impl $tr<Padded> for &Padded {
            type Output = Padded;
            fn $m(self, rhs: Padded) -> Padded {
                self.zip(&rhs, |a, b| a $op b)
            }
        }
        impl $tr<Complex64> for &Padded {
            type Output = Padded;
            fn $m(self, rhs: Complex64) -> Padded {
                self.map(|a| a $op rhs)
            }
        }
        impl $tr<Complex64> for Padded {
            type Output = Padded;
            fn $m(self, rhs: Complex64) -> Padded {
                self.map(|a| a $op rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);
