use crate::{Result, SpectralError};
use std::f64::consts::PI;

/// Uniform collocation grid on a periodic interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralGrid {
    n: usize,
    period: f64,
}

impl SpectralGrid {
    pub fn new(n_modes: usize, period: f64) -> Result<Self> {
        if n_modes % 2 != 0 {
            return Err(SpectralError::OddModes);
        }
        if n_modes < 8 {
            return Err(SpectralError::TooFewModes(n_modes));
        }
        if !(period > 0.0) || !period.is_finite() {
            return Err(SpectralError::BadPeriod(period));
        }
        Ok(Self { n: n_modes, period })
    }

    /// Grid on the standard `2π` interval.
    pub fn standard(n_modes: usize) -> Result<Self> {
        Self::new(n_modes, 2.0 * PI)
    }

    pub fn n_modes(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn spacing(&self) -> f64 {
        self.period / self.n as f64
    }

    /// Largest integer wavenumber (the Nyquist mode, counted as positive).
    pub fn k_max(&self) -> i64 {
        (self.n / 2) as i64
    }

    /// Integer wavenumber stored at FFT index `idx`.
    pub fn wavenumber(&self, idx: usize) -> i64 {
        if idx <= self.n / 2 {
            idx as i64
        } else {
            idx as i64 - self.n as i64
        }
    }

    /// Scaled wavenumber `2πk/period` at FFT index `idx`.
    pub fn kappa(&self, idx: usize) -> f64 {
        self.scale() * self.wavenumber(idx) as f64
    }

    /// The factor `2π/period` converting integer to physical wavenumbers.
    pub fn scale(&self) -> f64 {
        2.0 * PI / self.period
    }

    /// FFT index of integer wavenumber `k`, if it is resolved.
    pub fn index_of(&self, k: i64) -> Option<usize> {
        let h = (self.n / 2) as i64;
        if k > h || k <= -h {
            None
        } else if k >= 0 {
            Some(k as usize)
        } else {
            Some((k + self.n as i64) as usize)
        }
    }

    /// Integer wavenumbers in ascending order.
    pub fn wavenumbers(&self) -> Vec<i64> {
        let h = (self.n / 2) as i64;
        (-h + 1..=h).collect()
    }

    /// Collocation points `α_j = j·spacing`.
    pub fn points(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.n).map(|j| j as f64 * h).collect()
    }

    /// The grid with `factor` times as many points on the same interval.
    pub fn refined(&self, factor: usize) -> SpectralGrid {
        SpectralGrid { n: self.n * factor, period: self.period }
    }
}
