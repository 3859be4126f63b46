//! The quartic correction in the velocity component.

use crate::weights::{para_mul, Weights};
use crate::{check_background, EnergyError, Result};
use hydro_model::HoloState;
use paracalc::CutoffParams;
use spectral_core::{ComplexField, Padded};

/// Relative tolerance on `|r̂(0)|` below which `r` counts as mean-free.
const MEAN_TOL: f64 = 1e-12;

/// `−(47/8) Re ∫ ∂⁻¹r · T_{J^{-3/4}|𝐖_α|²} ∂⁻¹r̄ dα`.
pub fn energy_e42cor(bg: &HoloState, r: &ComplexField, cutoff: &CutoffParams) -> Result<f64> {
    check_background(bg)?;
    r.check_grid(&bg.w)?;
    let mean = r.mean().norm();
    if mean > MEAN_TOL * (1.0 + r.max_mode_abs()) {
        return Err(EnergyError::NonzeroMean(mean));
    }
    let wa = Padded::lift(&bg.w.deriv(1));
    let q = (Weights::new(bg).padded(-0.75, 0, 0) * (&wa * &wa.conj())).lower();
    let ir = r.antideriv_meanfree();
    let t = para_mul(&q, &ir.conj(), cutoff)?;
    Ok(-47.0 / 8.0 * ir.integral_of_product(&t).re)
}
