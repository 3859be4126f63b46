//! Fourier multipliers.

use crate::lp::{lp_block_count, lp_block_weight};
use crate::{ComplexField, Result, SpectralError, SpectralGrid};
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MultiplierSpec {
    /// `(iκ)^order`; negative orders are antiderivatives of mean-zero fields.
    Derivative(i32),
    /// `|κ|^s` (zero at `κ = 0`) when `homogeneous`, else `(1+κ²)^{s/2}`.
    Fractional { s: f64, homogeneous: bool },
    /// `-i·sgn(κ)`.
    Hilbert,
    /// Keeps negative wavenumbers and half of the mean.
    ProjP,
    /// Keeps positive wavenumbers and half of the mean.
    ProjPbar,
    /// Littlewood–Paley block `j`.
    LpBlock(usize),
    /// Indicator of `|k| ≤ fraction·k_max`.
    Dealias(f64),
}

/// Relative size below which a mean is treated as zero by antiderivatives.
const MEAN_TOL: f64 = 1e-12;

/// Multiplier value at FFT index `idx`.
pub fn symbol(spec: MultiplierSpec, grid: &SpectralGrid, idx: usize) -> Complex64 {
    let k = grid.wavenumber(idx);
    let kap = grid.kappa(idx);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let half = Complex64::new(0.5, 0.0);
    match spec {
        MultiplierSpec::Derivative(0) => one,
        MultiplierSpec::Derivative(p) => {
            if k == 0 {
                zero
            } else {
                Complex64::new(0.0, kap).powi(p)
            }
        }
        MultiplierSpec::Fractional { s, homogeneous: true } => {
            if k == 0 {
                zero
            } else {
                Complex64::new(kap.abs().powf(s), 0.0)
            }
        }
        MultiplierSpec::Fractional { s, homogeneous: false } => {
            Complex64::new((1.0 + kap * kap).powf(0.5 * s), 0.0)
        }
        MultiplierSpec::Hilbert => Complex64::new(0.0, -(k.signum() as f64)),
        MultiplierSpec::ProjP => match k.signum() {
            -1 => one,
            0 => half,
            _ => zero,
        },
        MultiplierSpec::ProjPbar => match k.signum() {
            1 => one,
            0 => half,
            _ => zero,
        },
        MultiplierSpec::LpBlock(j) => {
            Complex64::new(lp_block_weight(j, lp_block_count(grid) - 1, kap.abs()), 0.0)
        }
        MultiplierSpec::Dealias(rho) => {
            if (k.abs() as f64) <= rho * grid.k_max() as f64 {
                one
            } else {
                zero
            }
        }
    }
}

pub fn apply_multiplier(field: &ComplexField, spec: MultiplierSpec) -> Result<ComplexField> {
    let grid = *field.grid();
    match spec {
        MultiplierSpec::Derivative(p) if p < 0 => {
            let m0 = field.mean().norm();
            if m0 > MEAN_TOL * (1.0 + field.max_mode_abs()) {
                return Err(SpectralError::NonzeroMean(m0));
            }
        }
        MultiplierSpec::LpBlock(j) => {
            let max = lp_block_count(&grid) - 1;
            if j > max {
                return Err(SpectralError::BlockOutOfRange { j, max });
            }
        }
        MultiplierSpec::Dealias(rho) if !(rho > 0.0 && rho <= 1.0) => {
            return Err(SpectralError::BadFraction(rho));
        }
        _ => {}
    }
    Ok(field.map_modes(|i, v| v * symbol(spec, &grid, i)))
}

impl ComplexField {
    /// Spectral derivative of integer order `p ≥ 0`.
    pub fn deriv(&self, p: i32) -> ComplexField {
        assert!(p >= 0, "use apply_multiplier for antiderivatives");
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::Derivative(p), &g, i))
    }

    /// `𝐏`: negative wavenumbers plus half the mean.
    pub fn proj_p(&self) -> ComplexField {
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::ProjP, &g, i))
    }

    /// `𝐏̄`: positive wavenumbers plus half the mean.
    pub fn proj_pbar(&self) -> ComplexField {
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::ProjPbar, &g, i))
    }

    pub fn dealias(&self, rho: f64) -> ComplexField {
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::Dealias(rho), &g, i))
    }

    /// `⟨D⟩^s`.
    pub fn bessel(&self, s: f64) -> ComplexField {
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::Fractional { s, homogeneous: false }, &g, i))
    }

    /// `∂^{-1}` of the mean-free part.
    pub fn antideriv_meanfree(&self) -> ComplexField {
        let g = *self.grid();
        self.map_modes(|i, v| v * symbol(MultiplierSpec::Derivative(-1), &g, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn g() -> SpectralGrid {
        SpectralGrid::standard(32).unwrap()
    }

    #[test]
    fn derivative_of_plane_wave() {
        let f = ComplexField::single_mode(g(), 1, c(1.0, 0.0));
        let d = apply_multiplier(&f, MultiplierSpec::Derivative(1)).unwrap();
        assert!((d.mode(1) - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn hilbert_and_projections() {
        let f = ComplexField::single_mode(g(), -1, c(1.0, 0.0));
        let h = apply_multiplier(&f, MultiplierSpec::Hilbert).unwrap();
        assert!((h.mode(-1) - c(0.0, 1.0)).norm() < 1e-15);
        let p = apply_multiplier(&f, MultiplierSpec::ProjP).unwrap();
        assert!((p.mode(-1) - c(1.0, 0.0)).norm() < 1e-15);
        let fp = ComplexField::single_mode(g(), 1, c(1.0, 0.0));
        let p = apply_multiplier(&fp, MultiplierSpec::ProjP).unwrap();
        assert!(p.max_mode_abs() == 0.0);
    }

    #[test]
    fn projection_is_half_identity_minus_i_hilbert() {
        let grid = g();
        for i in 0..grid.n_modes() {
            let p = symbol(MultiplierSpec::ProjP, &grid, i);
            let h = symbol(MultiplierSpec::Hilbert, &grid, i);
            assert!((p - 0.5 * (c(1.0, 0.0) - c(0.0, 1.0) * h)).norm() < 1e-16);
        }
    }

    #[test]
    fn fractional_at_minus_two() {
        let f = ComplexField::single_mode(g(), -2, c(1.0, 0.0));
        let d = apply_multiplier(&f, MultiplierSpec::Fractional { s: 2.5, homogeneous: true }).unwrap();
        assert!((d.mode(-2).re - 5.656854249492381).abs() < 1e-13);
    }

    #[test]
    fn antiderivative_needs_mean_zero() {
        let f = ComplexField::constant(g(), c(1.0, 0.0));
        let e = apply_multiplier(&f, MultiplierSpec::Derivative(-1)).unwrap_err();
        assert!(e.to_string().starts_with("antiderivative needs mean-zero input"));
        let f = ComplexField::single_mode(g(), -3, c(1.0, 0.0));
        let a = apply_multiplier(&f, MultiplierSpec::Derivative(-1)).unwrap();
        assert!((a.deriv(1) - f).max_mode_abs() < 1e-15);
    }

    #[test]
    fn dealias_mask() {
        let grid = g();
        let f = ComplexField::from_modes(grid, vec![c(1.0, 0.0); 32]).unwrap();
        let d = f.dealias(0.5);
        assert_eq!(d.mode(8), c(1.0, 0.0));
        assert_eq!(d.mode(9), c(0.0, 0.0));
        assert_eq!(d.mode(-8), c(1.0, 0.0));
        assert!(apply_multiplier(&f, MultiplierSpec::Dealias(0.0)).is_err());
    }
}
