use crate::cutoff::{chi, psi, CutoffParams};
use crate::{ParaError, Result};
use spectral_core::{Complex64, ComplexField};

/// `T_a u`: coefficients `Σ_η χ(ξ−η, η) â(ξ−η) ψ(η) û(η)`, restricted to
/// resolved output wavenumbers.
pub fn paraproduct(a: &ComplexField, u: &ComplexField, params: &CutoffParams) -> Result<ComplexField> {
    if a.grid() != u.grid() {
        return Err(ParaError::GridMismatch);
    }
    params.validate()?;
    let g = *a.grid();
    let scale = g.scale();
    let mut out = ComplexField::zeros(g);
    let am = a.modes();
    for (j, &uv) in u.modes().iter().enumerate() {
        if uv == Complex64::new(0.0, 0.0) {
            continue;
        }
        let eta = g.kappa(j);
        let pe = psi(params, eta);
        if pe == 0.0 {
            continue;
        }
        let keta = g.wavenumber(j);
        // χ vanishes once |θ| ≥ ε2(1+|η|).
        let reach = (params.eps2 * (1.0 + eta.abs()) / scale).ceil() as i64;
        for kt in -reach..=reach {
            let Some(ia) = g.index_of(kt) else { continue };
            let Some(io) = g.index_of(kt + keta) else { continue };
            let c = chi(params, kt as f64 * scale, eta);
            if c != 0.0 {
                out.modes_mut()[io] += am[ia] * uv * (c * pe);
            }
        }
    }
    Ok(out)
}

/// `Π(a,u) = au − T_a u − T_u a`, with the product dealiased.
pub fn balanced(a: &ComplexField, u: &ComplexField, params: &CutoffParams) -> Result<ComplexField> {
    let tau = paraproduct(a, u, params)?;
    let tua = paraproduct(u, a, params)?;
    let mut p = a.product(u);
    p -= &tau;
    p -= &tua;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_core::SpectralGrid;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn constant_coefficient() {
        let g = SpectralGrid::standard(32).unwrap();
        let a = ComplexField::constant(g, Complex64::new(2.0, 1.0));
        let u = ComplexField::single_mode(g, -4, one());
        let t = paraproduct(&a, &u, &CutoffParams::default()).unwrap();
        assert!((&t - &u.scale(Complex64::new(2.0, 1.0))).max_mode_abs() < 1e-15);
    }

    #[test]
    fn low_high_and_comparable() {
        let g = SpectralGrid::standard(256).unwrap();
        let p = CutoffParams::default();
        let a = ComplexField::single_mode(g, -1, one());
        let u = ComplexField::single_mode(g, -64, one());
        let t = paraproduct(&a, &u, &p).unwrap();
        assert!((t.mode(-65) - one()).norm() < 1e-15);
        let u2 = ComplexField::single_mode(g, -2, one());
        assert_eq!(paraproduct(&a, &u2, &p).unwrap().max_mode_abs(), 0.0);
        let a3 = ComplexField::single_mode(g, -3, one());
        let u4 = ComplexField::single_mode(g, -4, one());
        let pi = balanced(&a3, &u4, &p).unwrap();
        assert!((pi.mode(-7) - one()).norm() < 1e-15);
    }

    #[test]
    fn zero_inputs() {
        let g = SpectralGrid::standard(32).unwrap();
        let z = ComplexField::zeros(g);
        let u = ComplexField::single_mode(g, -3, one());
        assert_eq!(balanced(&z, &u, &CutoffParams::default()).unwrap().max_mode_abs(), 0.0);
    }
}
