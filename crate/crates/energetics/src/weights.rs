//! Para-coefficients built from the background.

use crate::Result;
use hydro_model::HoloState;
use paracalc::{paraproduct, CutoffParams};
use spectral_core::{Complex64, ComplexField, Padded};

/// `J = |1+𝐖|²` and `1−Y = 1/(1+𝐖)` on the padded grid.
pub struct Weights {
    j: Padded,
    inv: Padded,
}

impl Weights {
    pub fn new(bg: &HoloState) -> Self {
        let onep = Padded::lift(&bg.w) + Complex64::new(1.0, 0.0);
        let j = &onep * &onep.conj();
        Self { j, inv: onep.recip() }
    }

    /// `J^p (1−Y)^m (1−Ȳ)^mbar`, truncated to the coarse grid.
    pub fn weight(&self, p: f64, m: i32, mbar: i32) -> ComplexField {
        self.padded(p, m, mbar).lower()
    }

    pub fn padded(&self, p: f64, m: i32, mbar: i32) -> Padded {
        let mut out = self.j.powf_re(p);
        if m != 0 {
            out = out * self.inv.powi(m);
        }
        if mbar != 0 {
            out = out * self.inv.conj().powi(mbar);
        }
        out
    }
}

/// `T_a u` with the mean of `a` acting as an exact multiplier.
///
/// The paraproduct's low-frequency floor would otherwise drop `â(0)û(0)`,
/// so that `T_1 u ≠ u` for fields with a mean.
pub fn para_mul(a: &ComplexField, u: &ComplexField, cutoff: &CutoffParams) -> Result<ComplexField> {
    let mean = a.mean();
    let mut out = paraproduct(&a.without_mean(), u, cutoff)?;
    out += &u.scale(mean);
    Ok(out)
}
