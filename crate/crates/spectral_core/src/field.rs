use crate::padded::Padded;
use crate::transform::{forward_normalized, inverse_unnormalized};
use crate::{Result, SpectralError, SpectralGrid};
use num_complex::Complex64;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A periodic complex function stored by its Fourier coefficients (FFT order).
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexField {
    grid: SpectralGrid,
    modes: Vec<Complex64>,
}

impl ComplexField {
    pub fn zeros(grid: SpectralGrid) -> Self {
        Self { grid, modes: vec![Complex64::new(0.0, 0.0); grid.n_modes()] }
    }

    /// Builds a field from coefficients in FFT order.
    pub fn from_modes(grid: SpectralGrid, modes: Vec<Complex64>) -> Result<Self> {
        if modes.len() != grid.n_modes() {
            return Err(SpectralError::GridMismatch(grid.n_modes(), modes.len()));
        }
        Ok(Self { grid, modes })
    }

    /// Builds a field from grid samples.
    pub fn from_values(grid: SpectralGrid, values: &[Complex64]) -> Result<Self> {
        if values.len() != grid.n_modes() {
            return Err(SpectralError::GridMismatch(grid.n_modes(), values.len()));
        }
        let mut modes = values.to_vec();
        forward_normalized(&mut modes);
        Ok(Self { grid, modes })
    }

    /// Samples `f` at the collocation points.
    pub fn from_fn(grid: SpectralGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let vals: Vec<Complex64> = grid.points().into_iter().map(f).collect();
        Self::from_values(grid, &vals).expect("length matches by construction")
    }

    /// `amplitude · e^{iκ_k α}`; unresolved wavenumbers give the zero field.
    pub fn single_mode(grid: SpectralGrid, k: i64, amplitude: Complex64) -> Self {
        let mut f = Self::zeros(grid);
        f.set_mode(k, amplitude);
        f
    }

    pub fn constant(grid: SpectralGrid, c: Complex64) -> Self {
        Self::single_mode(grid, 0, c)
    }

    pub fn grid(&self) -> &SpectralGrid {
        &self.grid
    }

    pub fn modes(&self) -> &[Complex64] {
        &self.modes
    }

    pub fn modes_mut(&mut self) -> &mut [Complex64] {
        &mut self.modes
    }

    pub fn into_modes(self) -> Vec<Complex64> {
        self.modes
    }

    /// Coefficient at integer wavenumber `k` (zero if unresolved).
    pub fn mode(&self, k: i64) -> Complex64 {
        self.grid.index_of(k).map_or(Complex64::new(0.0, 0.0), |i| self.modes[i])
    }

    pub fn set_mode(&mut self, k: i64, v: Complex64) {
        if let Some(i) = self.grid.index_of(k) {
            self.modes[i] = v;
        }
    }

    /// Grid samples.
    pub fn values(&self) -> Vec<Complex64> {
        let mut v = self.modes.clone();
        inverse_unnormalized(&mut v);
        v
    }

    pub fn mean(&self) -> Complex64 {
        self.modes[0]
    }

    pub fn without_mean(&self) -> Self {
        let mut f = self.clone();
        f.modes[0] = Complex64::new(0.0, 0.0);
        f
    }

    pub fn check_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(SpectralError::GridMismatch(self.grid.n_modes(), other.grid.n_modes()));
        }
        Ok(())
    }

    /// Complex conjugate `f̄`; its coefficient at `k` is `conj(f̂(-k))`.
    pub fn conj(&self) -> Self {
        let n = self.modes.len();
        let modes = (0..n).map(|i| self.modes[(n - i) % n].conj()).collect();
        Self { grid: self.grid, modes }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { grid: self.grid, modes: self.modes.iter().map(|m| m * c).collect() }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        Self { grid: self.grid, modes: self.modes.iter().map(|m| m * c).collect() }
    }

    /// Applies `m(idx)` coefficient-wise.
    pub fn map_modes(&self, m: impl Fn(usize, Complex64) -> Complex64) -> Self {
        let modes = self.modes.iter().enumerate().map(|(i, &v)| m(i, v)).collect();
        Self { grid: self.grid, modes }
    }

    /// Dealiased product, computed on the 2× zero-padded grid.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.grid, other.grid, "grid mismatch in product");
        (&Padded::lift(self) * &Padded::lift(other)).lower()
    }

    /// Translate: `f(α + shift)`.
    pub fn translate(&self, shift: f64) -> Self {
        let g = self.grid;
        self.map_modes(|i, v| v * Complex64::from_polar(1.0, g.kappa(i) * shift))
    }

    /// `(Σ|f̂|²·period)^{1/2}`, equal to the L² norm of the samples.
    pub fn l2_norm(&self) -> f64 {
        (self.modes.iter().map(|m| m.norm_sqr()).sum::<f64>() * self.grid.period()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient modulus.
    pub fn max_mode_abs(&self) -> f64 {
        self.modes.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// L² mass carried by strictly positive wavenumbers.
    pub fn positive_leakage(&self) -> f64 {
        let g = self.grid;
        let s: f64 = (0..self.modes.len())
            .filter(|&i| g.wavenumber(i) > 0)
            .map(|i| self.modes[i].norm_sqr())
            .sum();
        (s * g.period()).sqrt()
    }

    /// Trapezoid quadrature `∫ f dα` (exact for resolved modes: `period·f̂(0)`).
    pub fn integral(&self) -> Complex64 {
        self.modes[0] * self.grid.period()
    }

    /// `∫ f·g dα` over the period, evaluated spectrally.
    pub fn integral_of_product(&self, other: &Self) -> Complex64 {
        let n = self.modes.len();
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..n {
            s += self.modes[i] * other.modes[(n - i) % n];
        }
        s * self.grid.period()
    }

    /// Zero-padded / truncated copy on another grid with the same period.
    pub fn resample(&self, grid: SpectralGrid) -> Self {
        let mut out = Self::zeros(grid);
        for i in 0..self.modes.len() {
            let k = self.grid.wavenumber(i);
            out.set_mode(k, self.modes[i]);
        }
        out
    }
}

impl Add for &ComplexField {
    type Output = ComplexField;
    fn add(self, rhs: &ComplexField) -> ComplexField {
        assert_eq!(self.grid, rhs.grid, "grid mismatch in sum");
        let modes = self.modes.iter().zip(&rhs.modes).map(|(a, b)| a + b).collect();
        ComplexField { grid: self.grid, modes }
    }
}

impl Sub for &ComplexField {
    type Output = ComplexField;
    fn sub(self, rhs: &ComplexField) -> ComplexField {
        assert_eq!(self.grid, rhs.grid, "grid mismatch in difference");
        let modes = self.modes.iter().zip(&rhs.modes).map(|(a, b)| a - b).collect();
        ComplexField { grid: self.grid, modes }
    }
}

impl Add for ComplexField {
    type Output = ComplexField;
    fn add(self, rhs: ComplexField) -> ComplexField {
        &self + &rhs
    }
}

impl Sub for ComplexField {
    type Output = ComplexField;
    fn sub(self, rhs: ComplexField) -> ComplexField {
        &self - &rhs
    }
}

impl AddAssign<&ComplexField> for ComplexField {
    fn add_assign(&mut self, rhs: &ComplexField) {
        assert_eq!(self.grid, rhs.grid, "grid mismatch in sum");
        for (a, b) in self.modes.iter_mut().zip(&rhs.modes) {
            *a += b;
        }
    }
}

impl SubAssign<&ComplexField> for ComplexField {
    fn sub_assign(&mut self, rhs: &ComplexField) {
        assert_eq!(self.grid, rhs.grid, "grid mismatch in difference");
        for (a, b) in self.modes.iter_mut().zip(&rhs.modes) {
            *a -= b;
        }
    }
}

impl Neg for &ComplexField {
    type Output = ComplexField;
    fn neg(self) -> ComplexField {
        self.scale_re(-1.0)
    }
}

impl Mul<&ComplexField> for &ComplexField {
    type Output = ComplexField;
    fn mul(self, rhs: &ComplexField) -> ComplexField {
        self.product(rhs)
    }
}

impl Mul<Complex64> for &ComplexField {
    type Output = ComplexField;
    fn mul(self, rhs: Complex64) -> ComplexField {
        self.scale(rhs)
    }
}

impl Mul<f64> for &ComplexField {
    type Output = ComplexField;
    fn mul(self, rhs: f64) -> ComplexField {
        self.scale_re(rhs)
    }
}
