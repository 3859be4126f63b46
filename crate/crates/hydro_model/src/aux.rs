use crate::frame::{d, finite, lift, Frame};
use crate::state::i;
use crate::{HoloState, Model, Result};
use spectral_core::{Complex64, ComplexField, Padded};

/// Auxiliary fields of a state. `a, b, M, J` are real-valued for holomorphic
/// states; `c̃` and `c` are the elastic auxiliaries.
#[derive(Clone, Debug)]
pub struct AuxFields {
    /// `𝐖/(1+𝐖)`
    pub y: ComplexField,
    /// `|1+𝐖|²`
    pub j: ComplexField,
    pub a: ComplexField,
    pub b: ComplexField,
    pub m: ComplexField,
    pub c_tilde: ComplexField,
    pub c: ComplexField,
}

impl AuxFields {
    /// Largest imaginary residue among the fields that should be real.
    pub fn imaginary_residue(&self) -> f64 {
        [&self.j, &self.a, &self.b, &self.m]
            .iter()
            .flat_map(|f| f.values())
            .map(|v| v.im.abs())
            .fold(0.0, f64::max)
    }
}

/// Pieces reused by the right-hand sides.
pub(crate) struct AuxParts {
    pub aux: AuxFields,
    /// `ic̃` on the padded grid
    pub ict: Padded,
}

pub(crate) fn compute(s: &HoloState, f: &Frame) -> Result<AuxParts> {
    let r = &s.r;
    let rb = r.conj();
    let ra = r.deriv(1);
    let rab = ra.conj();

    let y = finite((lift(&s.w) * f.inv.clone()).lower(), "Y")?;
    let a = (&rb.product(&ra).proj_pbar() - &r.product(&rab).proj_p()).scale(i());
    let b = &(lift(r) * f.inv_bar.clone()).lower().proj_p() + &(lift(&rb) * f.inv.clone()).lower().proj_pbar();
    let b = finite(b, "b")?;

    let yb = y.conj();
    let ya = y.deriv(1);
    let yab = ya.conj();
    let (ly, lyb, lya, lyab) = (lift(&y), lift(&yb), lift(&ya), lift(&yab));
    let (lr, lrb, lra, lrab) = (lift(r), lift(&rb), lift(&ra), lift(&rab));
    let m1 = (&lrb * &lya - &lra * &lyb).lower().proj_pbar();
    let m2 = (&lr * &lyab - &lrab * &ly).lower().proj_p();
    let m = &m1 + &m2;

    // ic̃ = 𝐖_α/(J^{1/2}(1+𝐖)) − 𝐖̄_α/(J^{1/2}(1+𝐖̄))
    let ict = &(&f.wa * &f.jm) * &f.inv - &(&(&f.wa_bar * &f.jm) * &f.inv_bar);
    let ict_c = finite(ict.lower(), "c_tilde")?;
    let c_tilde = ict_c.scale(-i());
    // ic = i J^{-1/2} ∂(J^{-1/2} c̃_α) + ½(ic̃)³
    let inner = d(&(&f.jm * &lift(&c_tilde.deriv(1))));
    let ic = (&(&f.jm * &lift(&inner)) * i()) + ict.powi(3) * Complex64::new(0.5, 0.0);
    let c = finite(ic.lower().scale(-i()), "c")?;

    let aux = AuxFields { y, j: f.j.lower(), a, b, m, c_tilde, c };
    Ok(AuxParts { aux, ict })
}

impl Model {
    pub fn aux_fields(&self, s: &HoloState) -> Result<AuxFields> {
        let f = Frame::new(s, self.delta)?;
        Ok(compute(s, &f)?.aux)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_core::SpectralGrid;

    #[test]
    fn zero_state() {
        let g = SpectralGrid::standard(32).unwrap();
        let a = Model::default().aux_fields(&HoloState::zero(g)).unwrap();
        for f in [&a.y, &a.a, &a.b, &a.m, &a.c_tilde, &a.c] {
            assert_eq!(f.max_mode_abs(), 0.0);
        }
        assert!((a.j.mode(0) - 1.0).norm() < 1e-15);
    }
}
