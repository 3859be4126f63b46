//! Background quantities shared by every evaluation at one state.

use crate::{HoloState, HydroError, Result};
use spectral_core::{Complex64, ComplexField, Padded};

pub(crate) struct Frame {
    /// `1 + 𝐖`
    pub onep: Padded,
    /// `1 + 𝐖̄`
    pub onep_bar: Padded,
    pub inv: Padded,
    pub inv_bar: Padded,
    pub j: Padded,
    /// `J^{-1/2}`
    pub jm: Padded,
    /// `𝐖_α` on the padded grid
    pub wa: Padded,
    pub wa_bar: Padded,
}

impl Frame {
    pub fn new(s: &HoloState, delta: f64) -> Result<Self> {
        let one = Complex64::new(1.0, 0.0);
        let onep = Padded::lift(&s.w) + one;
        let min_abs = onep.min_abs();
        if !(min_abs >= delta) {
            return Err(HydroError::Guard { min_abs, delta });
        }
        let onep_bar = onep.conj();
        let j = onep.map(|v| Complex64::new(v.norm_sqr(), 0.0));
        let wa = Padded::lift(&s.w.deriv(1));
        Ok(Self {
            inv: onep.recip(),
            inv_bar: onep_bar.recip(),
            jm: j.powf_re(-0.5),
            wa_bar: wa.conj(),
            onep,
            onep_bar,
            j,
            wa,
        })
    }
}

pub(crate) fn lift(f: &ComplexField) -> Padded {
    Padded::lift(f)
}

/// `∂_α` of a padded quantity, returned on the coarse grid.
pub(crate) fn d(p: &Padded) -> ComplexField {
    p.lower().deriv(1)
}

pub(crate) fn finite(f: ComplexField, term: &'static str) -> Result<ComplexField> {
    if f.modes().iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
        Ok(f)
    } else {
        Err(HydroError::NonFinite(term))
    }
}
