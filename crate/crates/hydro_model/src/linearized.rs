use crate::aux::compute;
use crate::frame::{d, finite, lift, Frame};
use crate::state::i;
use crate::{HoloState, LinState, Model, Result, Rhs};
use paracalc::paraproduct;
use spectral_core::{Complex64, ComplexField, SpectralError};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl Model {
    /// Linearized system around `bg` in the diagonal variables:
    ///
    /// `(∂_t + b∂_α)w + r_α/(1+𝐖̄) + R_α w/(1+𝐖̄) = (1+𝐖)(𝐏m̄ + 𝐏̄m)`,
    /// `(∂_t + b∂_α)r − i a w/(1+𝐖) − i𝐏p − w/(1+𝐖)·∂_α𝐏c = 𝐏̄n − 𝐏n̄ − i𝐏p̄`.
    pub fn rhs_linearized(&self, bg: &HoloState, lin: &LinState) -> Result<Rhs> {
        if lin.grid() != bg.grid() {
            return Err(SpectralError::GridMismatch(bg.grid().n_modes(), lin.grid().n_modes()).into());
        }
        let f = Frame::new(bg, self.delta)?;
        let parts = compute(bg, &f)?;
        let aux = &parts.aux;
        let (w, r) = (&lin.w, &lin.r);
        let (wa, waa, ra) = (w.deriv(1), w.deriv(2), r.deriv(1));
        let (lw, lwa, lwaa) = (lift(w), lift(&wa), lift(&waa));
        let big_ra = lift(&bg.r.deriv(1));
        let big_rb = lift(&bg.r.conj());

        // m = (r_α + R_α w)/J + R̄ w_α/(1+𝐖)², n = R̄(r_α + R_α w)/(1+𝐖)
        let q = &lift(&ra) + &(&big_ra * &lw);
        let m = &q / &f.j + &(&big_rb * &lwa) * &f.inv.powi(2);
        let m = finite(m.lower(), "m")?;
        let n = finite((&(&big_rb * &q) * &f.inv).lower(), "n")?;

        // p = A − B − C + D
        let jm3 = f.jm.powi(3);
        let coef = &(&(&f.wa * &f.jm) * &f.inv.powi(2)) * c(1.5) - &(&f.wa_bar * &jm3) * c(0.5);
        let a0 = &(&lwaa * &f.jm) * &f.inv - &coef * &lwa;
        let big_a = &f.jm * &lift(&d(&(&f.jm * &lift(&d(&a0)))));
        let half_w = &(&(&f.onep_bar * &lwa) * &jm3) * c(0.5);
        let ict_a = lift(&d(&parts.ict));
        let big_b = &f.jm * &lift(&d(&(&half_w * &ict_a)));
        let big_c = &half_w * &lift(&d(&(&f.jm * &ict_a)));
        let big_d = &(&a0 * &parts.ict.powi(2)) * c(1.5);
        let p = finite((big_a - big_b - big_c + big_d).lower(), "p")?;

        let g0 = (&f.onep * &lift(&(&m.conj().proj_p() + &m.proj_pbar()))).lower();
        let k0 = &(&n.proj_pbar() - &n.conj().proj_p()) - &p.conj().proj_p().scale(i());

        let lb = lift(&aux.b);
        let dw = (&lb * &lwa) + (&lift(&ra) + &(&big_ra * &lw)) * f.inv_bar.clone();
        let dw = &g0 - &finite(dw.lower(), "w transport")?;

        let b_ra = (&lb * &lift(&ra)).lower();
        let a_w = (&(&lift(&aux.a) * &lw) * &f.inv).lower().scale(i());
        let w_pc = (&(&lw * &f.inv) * &lift(&aux.c.proj_p().deriv(1))).lower();
        let dr = &(&(&(&a_w + &p.proj_p().scale(i())) + &w_pc) + &k0) - &b_ra;
        let dr = finite(dr, "r equation")?;

        Ok(Rhs { dw: dw.dealias(self.dealias), dr: dr.dealias(self.dealias) })
    }

    /// Coefficients of the nine low-high terms of the paradifferential
    /// operator, paired with the derivative order applied to `w`.
    pub fn lpara_coefficients(&self, bg: &HoloState) -> Result<Vec<(ComplexField, i32)>> {
        let f = Frame::new(bg, self.delta)?;
        let one_m_y = &f.inv; // 1 − Y = 1/(1+𝐖)
        let jm3 = f.jm.powi(3);
        let jm5 = f.jm.powi(5);
        let h1 = one_m_y * &jm3;
        let h2 = &(one_m_y * one_m_y) * &jm3;
        let h3 = &(&(one_m_y * one_m_y) * one_m_y) * &jm3;
        let wd = |p: i32| lift(&bg.w.deriv(p));
        let wbd = |p: i32| lift(&bg.w.conj().deriv(p));
        let terms = vec![
            (h1.clone(), 4),
            (&(&h2 * &wd(1)) * c(-5.0), 3),
            (&(&jm5 * &wbd(1)) * c(-1.0), 3),
            (&(&h2 * &wd(2)) * c(-5.0), 2),
            (&jm5 * &wbd(2), 2),
            (&(&h3 * &wd(1).powi(2)) * c(15.0), 2),
            (&(&h2 * &wd(3)) * c(-2.5), 1),
            (&(&jm5 * &wbd(3)) * c(1.5), 1),
            (&(&h2 * &wd(4)) * c(-1.0), 0),
        ];
        terms
            .into_iter()
            .map(|(p, k)| Ok((finite(p.lower(), "L_para coefficient")?, k)))
            .collect()
    }

    /// `𝓛_para w`: sum of nine paraproducts `T_{coef} ∂^k w`.
    pub fn apply_lpara(&self, bg: &HoloState, w: &ComplexField) -> Result<ComplexField> {
        let mut out = ComplexField::zeros(bg.grid());
        for (coef, k) in self.lpara_coefficients(bg)? {
            out += &paraproduct(&coef, &w.deriv(k), &self.cutoff)?;
        }
        Ok(out)
    }
}
