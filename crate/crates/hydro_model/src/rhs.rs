use crate::aux::compute;
use crate::frame::{d, finite, lift, Frame};
use crate::state::i;
use crate::{HoloState, LinState, Model, Result};
use spectral_core::{Complex64, ComplexField, Padded};

/// Time derivatives of a pair of fields.
#[derive(Clone, Debug, PartialEq)]
pub struct Rhs {
    pub dw: ComplexField,
    pub dr: ComplexField,
}

impl Rhs {
    /// L² mass of both components at positive wavenumbers.
    pub fn leakage(&self) -> f64 {
        self.dw.positive_leakage().hypot(self.dr.positive_leakage())
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { dw: self.dw.scale_re(c), dr: self.dr.scale_re(c) }
    }

    pub fn max_mode_abs(&self) -> f64 {
        self.dw.max_mode_abs().max(self.dr.max_mode_abs())
    }
}

impl std::ops::Sub for &Rhs {
    type Output = Rhs;
    fn sub(self, o: &Rhs) -> Rhs {
        Rhs { dw: &self.dw - &o.dw, dr: &self.dr - &o.dr }
    }
}

/// Linearization at zero: `w_t = −r_α`, `r_t = i∂⁴w`.
pub fn rhs_linear_zero(lin: &LinState) -> Rhs {
    Rhs { dw: -&lin.r.deriv(1), dr: lin.w.deriv(4).scale(i()) }
}

/// `∂_α 𝐏 { J^{-1/2} ∂_α [ J^{-1/2} ∂_α x ] }` for a padded `x`.
fn nested_elastic(x: &Padded, f: &Frame) -> ComplexField {
    let inner = d(&(&f.jm * &lift(&d(x))));
    (&f.jm * &lift(&inner)).lower().proj_p().deriv(1)
}

impl Model {
    /// The differentiated system, assembled term by term.
    pub fn rhs_nonlinear(&self, s: &HoloState) -> Result<Rhs> {
        let f = Frame::new(s, self.delta)?;
        let aux = compute(s, &f)?.aux;
        let ra = s.r.deriv(1);
        let (lb, lra) = (lift(&aux.b), lift(&ra));

        // 𝐖_t = −b𝐖_α − (1+𝐖)R_α/(1+𝐖̄) + (1+𝐖)M
        let b_wa = finite((&lb * &f.wa).lower(), "b W_a")?;
        let transport = finite((&(&f.onep * &lra) * &f.inv_bar).lower(), "(1+W) R_a/(1+W_bar)")?;
        let onep_m = finite((&f.onep * &lift(&aux.m)).lower(), "(1+W) M")?;
        let dw = &(&onep_m - &b_wa) - &transport;

        // R_t = −bR_α − ia/(1+𝐖) + i/(1+𝐖)·[E(𝐖) + ½C(𝐖) − E(𝐖̄) − ½C(𝐖̄)]
        let b_ra = finite((&lb * &lra).lower(), "b R_a")?;
        let a_term = finite((&lift(&aux.a) * &f.inv).lower().scale(i()), "i a/(1+W)")?;

        let jm3 = f.jm.powi(3);
        let jm5 = f.jm.powi(5);
        let wa2 = f.wa.map(|v| Complex64::new(v.norm_sqr(), 0.0));
        let x_hol = &(&f.wa * &f.jm) * &f.inv;
        let x_anti = &(&f.wa_bar * &f.jm) * &f.inv_bar;
        let e_hol = finite(nested_elastic(&x_hol, &f), "elastic block (W)")?;
        let e_anti = finite(nested_elastic(&x_anti, &f), "elastic block (W_bar)")?;
        let three = Complex64::new(3.0, 0.0);
        let c_hol = &(&(&f.wa.powi(3) * &jm3) * &f.inv.powi(3)) - &(&(&(&f.wa * &wa2) * &jm5) * &f.inv) * three;
        let c_anti = &(&(&f.wa_bar.powi(3) * &jm3) * &f.inv_bar.powi(3)) - &(&(&(&f.wa_bar * &wa2) * &jm5) * &f.inv_bar) * three;
        let c_hol = finite(c_hol.lower().proj_p().deriv(1), "cubic block (W)")?;
        let c_anti = finite(c_anti.lower().proj_p().deriv(1), "cubic block (W_bar)")?;
        let bracket = &(&e_hol - &e_anti) + &(&c_hol - &c_anti).scale_re(0.5);
        let elastic = finite((&f.inv * &lift(&bracket)).lower().scale(i()), "elastic prefactor")?;
        let dr = &(&elastic - &b_ra) - &a_term;

        Ok(Rhs { dw: dw.dealias(self.dealias), dr: dr.dealias(self.dealias) })
    }
}
