use crate::frame::Frame;
use crate::{HydroError, Result};
use spectral_core::{Complex64, ComplexField, Padded, SpectralError, SpectralGrid};

/// `(𝐖, R)` at time `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct HoloState {
    pub w: ComplexField,
    pub r: ComplexField,
    pub t: f64,
}

impl HoloState {
    pub fn new(w: ComplexField, r: ComplexField) -> Result<Self> {
        w.check_grid(&r)?;
        Ok(Self { w, r, t: 0.0 })
    }

    pub fn zero(grid: SpectralGrid) -> Self {
        Self { w: ComplexField::zeros(grid), r: ComplexField::zeros(grid), t: 0.0 }
    }

    pub fn grid(&self) -> SpectralGrid {
        *self.w.grid()
    }

    /// `(𝐖(α+s), R(α+s))`.
    pub fn translate(&self, shift: f64) -> Self {
        Self { w: self.w.translate(shift), r: self.r.translate(shift), t: self.t }
    }

    /// `self + c·(dw, dr)` at the same time.
    pub fn offset(&self, c: f64, dw: &ComplexField, dr: &ComplexField) -> Self {
        Self { w: &self.w + &dw.scale_re(c), r: &self.r + &dr.scale_re(c), t: self.t }
    }

    pub fn resample(&self, grid: SpectralGrid) -> Self {
        Self { w: self.w.resample(grid), r: self.r.resample(grid), t: self.t }
    }
}

/// Diagonal linearized variables `(w, r)`, with `r = q − R·w`.
///
/// `w` and `q` perturb the undifferentiated position and potential, so a
/// pair acts on `(𝐖, R)` through [`LinState::state_perturbation`].
#[derive(Clone, Debug, PartialEq)]
pub struct LinState {
    pub w: ComplexField,
    pub r: ComplexField,
}

impl LinState {
    pub fn new(w: ComplexField, r: ComplexField) -> Result<Self> {
        w.check_grid(&r)?;
        Ok(Self { w, r })
    }

    pub fn zero(grid: SpectralGrid) -> Self {
        Self { w: ComplexField::zeros(grid), r: ComplexField::zeros(grid) }
    }

    pub fn grid(&self) -> SpectralGrid {
        *self.w.grid()
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { w: self.w.scale_re(c), r: self.r.scale_re(c) }
    }

    pub fn axpy(&self, c: f64, other: &Self) -> Self {
        Self { w: &self.w + &other.w.scale_re(c), r: &self.r + &other.r.scale_re(c) }
    }

    /// Induced variation of `(𝐖, R)`: `δ𝐖 = w_α`, `δR = (r_α + R_α w)/(1+𝐖)`.
    pub fn state_perturbation(&self, background: &HoloState, delta: f64) -> Result<(ComplexField, ComplexField)> {
        if self.grid() != background.grid() {
            return Err(SpectralError::GridMismatch(background.grid().n_modes(), self.grid().n_modes()).into());
        }
        let f = Frame::new(background, delta)?;
        let num = Padded::lift(&self.r.deriv(1)) + Padded::lift(&background.r.deriv(1)) * Padded::lift(&self.w);
        let dr = (num * f.inv.clone()).lower();
        if !dr.modes().iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
            return Err(HydroError::NonFinite("state perturbation"));
        }
        Ok((self.w.deriv(1), dr))
    }
}

pub(crate) fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}
