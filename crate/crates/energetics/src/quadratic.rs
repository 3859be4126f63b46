//! Quadratic energies.

use crate::weights::{para_mul, Weights};
use crate::{check_background, Result};
use hydro_model::HoloState;
use paracalc::CutoffParams;
use spectral_core::{Complex64, ComplexField};

/// `∫ −i w_α w̄_αα + |r|² dα` before taking the real part. The imaginary
/// part vanishes for any pair; it is exposed as a quadrature check.
pub fn energy_e0_complex(w: &ComplexField, r: &ComplexField) -> Complex64 {
    let wa = w.deriv(1);
    let waa_bar = w.deriv(2).conj();
    -Complex64::i() * wa.integral_of_product(&waa_bar) + r.integral_of_product(&r.conj())
}

/// The conserved energy; `‖w‖²_{Ḣ^{3/2}} + ‖r‖²_{L²}` for holomorphic fields.
pub fn energy_e0(w: &ComplexField, r: &ComplexField) -> f64 {
    energy_e0_complex(w, r).re
}

/// `∫ Im(T_{J^{-5/4}} w_α · w̄_αα) + Re(r · T_{J^{1/4}} r̄) + |w|² dα`.
pub fn energy_elin(bg: &HoloState, w: &ComplexField, r: &ComplexField, cutoff: &CutoffParams) -> Result<f64> {
    check_background(bg)?;
    w.check_grid(&bg.w)?;
    r.check_grid(&bg.w)?;
    let wt = Weights::new(bg);
    let tw = para_mul(&wt.weight(-1.25, 0, 0), &w.deriv(1), cutoff)?;
    let tr = para_mul(&wt.weight(0.25, 0, 0), &r.conj(), cutoff)?;
    let e = tw.integral_of_product(&w.deriv(2).conj()).im
        + r.integral_of_product(&tr).re
        + w.integral_of_product(&w.conj()).re;
    Ok(e)
}

/// `Σ (1+|κ|³)|ŵ|² + |r̂|²` times the period: the value of [`energy_elin`]
/// at zero background for holomorphic pairs, and the norm it is compared with.
pub fn energy_norm_sq(w: &ComplexField, r: &ComplexField) -> f64 {
    let g = w.grid();
    let sw: f64 = w
        .modes()
        .iter()
        .enumerate()
        .map(|(i, m)| (1.0 + g.kappa(i).abs().powi(3)) * m.norm_sqr())
        .sum();
    let sr: f64 = r.modes().iter().map(|m| m.norm_sqr()).sum();
    (sw + sr) * g.period()
}
