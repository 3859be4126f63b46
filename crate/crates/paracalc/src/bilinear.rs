//! Paradifferential bilinear forms in Weyl quantization.
//!
//! Holomorphic: `B(u,v)^(ζ) = Σ_{ξ+η=ζ} χ(ξ, ξ+η) m(ξ,η) û(ξ) v̂(η)`.
//! Mixed: `B(u,v)^(η) = w(η) Σ_{ζ−ξ=η} χ(ξ, ζ−ξ) m(ξ,ζ) conj(û(ξ)) v̂(ζ)` with
//! `w = 1` for `η > 0`, `½` at `η = 0` (matching the mean rule of `𝐏̄`), else 0.
//! `χ` is `χ₁` for the low-high region and `χ₂` for the high-high region.

use crate::cutoff::{chi1, chi2};
use crate::{ParaError, Result};
use rayon::prelude::*;
use spectral_core::{Complex64, ComplexField, SpectralGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    LowHigh,
    HighHigh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantization {
    Holomorphic,
    Mixed,
}

type Evaluator = dyn Fn(f64, f64) -> Complex64 + Send + Sync;

pub struct BilinearSymbol {
    evaluator: Box<Evaluator>,
    pub region: Region,
    pub quantization: Quantization,
}

impl BilinearSymbol {
    pub fn new(
        evaluator: impl Fn(f64, f64) -> Complex64 + Send + Sync + 'static,
        region: Region,
        quantization: Quantization,
    ) -> Self {
        Self { evaluator: Box::new(evaluator), region, quantization }
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<Complex64> {
        let v = (self.evaluator)(x, y);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(ParaError::SymbolPole(x, y))
        }
    }

    fn cutoff(&self, t1: f64, t2: f64) -> f64 {
        match self.region {
            Region::LowHigh => chi1(t1, t2),
            Region::HighHigh => chi2(t1, t2),
        }
    }
}

fn mixed_weight(k: i64) -> f64 {
    match k.signum() {
        1 => 1.0,
        0 => 0.5,
        _ => 0.0,
    }
}

/// Direct double sum over all pairs of input modes.
pub fn bilinear_reference(sym: &BilinearSymbol, u: &ComplexField, v: &ComplexField) -> Result<ComplexField> {
    if u.grid() != v.grid() {
        return Err(ParaError::GridMismatch);
    }
    let g = *u.grid();
    let n = g.n_modes();
    let mut out = ComplexField::zeros(g);
    for i in 0..n {
        for j in 0..n {
            let (ki, kj) = (g.wavenumber(i), g.wavenumber(j));
            let (xi, yj) = (g.kappa(i), g.kappa(j));
            match sym.quantization {
                Quantization::Holomorphic => {
                    let Some(o) = g.index_of(ki + kj) else { continue };
                    let c = sym.cutoff(xi, xi + yj);
                    if c == 0.0 {
                        continue;
                    }
                    let m = sym.eval(xi, yj)?;
                    out.modes_mut()[o] += m * u.modes()[i] * v.modes()[j] * c;
                }
                Quantization::Mixed => {
                    let ko = kj - ki;
                    let w = mixed_weight(ko);
                    let Some(o) = g.index_of(ko) else { continue };
                    let c = sym.cutoff(xi, yj - xi);
                    if c == 0.0 || w == 0.0 {
                        continue;
                    }
                    let m = sym.eval(xi, yj)?;
                    out.modes_mut()[o] += m * u.modes()[i].conj() * v.modes()[j] * (c * w);
                }
            }
        }
    }
    Ok(out)
}

/// Output-parallel evaluation; the low-high region only visits the cone
/// `|ξ| < |output|/10` where `χ₁` can be nonzero.
pub fn bilinear(sym: &BilinearSymbol, u: &ComplexField, v: &ComplexField) -> Result<ComplexField> {
    if u.grid() != v.grid() {
        return Err(ParaError::GridMismatch);
    }
    let g = *u.grid();
    let n = g.n_modes();
    let h = g.k_max();
    let um = u.modes();
    let vm = v.modes();
    let outs: Vec<Result<Complex64>> = (0..n)
        .into_par_iter()
        .map(|o| output_mode(sym, &g, o, h, um, vm))
        .collect();
    let modes = outs.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ComplexField::from_modes(g, modes).expect("length matches"))
}

fn output_mode(
    sym: &BilinearSymbol,
    g: &SpectralGrid,
    o: usize,
    h: i64,
    um: &[Complex64],
    vm: &[Complex64],
) -> Result<Complex64> {
    let ko = g.wavenumber(o);
    let zero = Complex64::new(0.0, 0.0);
    if sym.quantization == Quantization::Mixed && mixed_weight(ko) == 0.0 {
        return Ok(zero);
    }
    let range = match sym.region {
        Region::LowHigh => {
            let r = ko.abs() / 10;
            (-r).max(-h + 1)..=r.min(h)
        }
        Region::HighHigh => (-h + 1)..=h,
    };
    let mut acc = zero;
    for k1 in range {
        let i = g.index_of(k1).unwrap();
        let xi = g.kappa(i);
        let oth = match sym.quantization {
            Quantization::Holomorphic => ko - k1,
            Quantization::Mixed => ko + k1,
        };
        let Some(j) = g.index_of(oth) else { continue };
        let yj = g.kappa(j);
        let c = sym.cutoff(xi, g.kappa(o));
        if c == 0.0 {
            continue;
        }
        let m = sym.eval(xi, yj)?;
        acc += match sym.quantization {
            Quantization::Holomorphic => m * um[i] * vm[j] * c,
            Quantization::Mixed => m * um[i].conj() * vm[j] * (c * mixed_weight(ko)),
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn single_pair() {
        let g = SpectralGrid::standard(256).unwrap();
        let sym = BilinearSymbol::new(|x, y| Complex64::new(x * y, 0.0), Region::LowHigh, Quantization::Holomorphic);
        let u = ComplexField::single_mode(g, -1, one());
        let v = ComplexField::single_mode(g, -64, one());
        let b = bilinear(&sym, &u, &v).unwrap();
        assert!((b.mode(-65) - Complex64::new(64.0, 0.0)).norm() < 1e-12);
        let r = bilinear_reference(&sym, &u, &v).unwrap();
        assert!((&b - &r).max_mode_abs() < 1e-12);
    }

    #[test]
    fn pole_is_reported() {
        let g = SpectralGrid::standard(16).unwrap();
        let sym = BilinearSymbol::new(|x, _| Complex64::new(1.0 / x, 0.0), Region::HighHigh, Quantization::Holomorphic);
        let u = ComplexField::constant(g, one());
        let v = ComplexField::constant(g, one());
        let e = bilinear_reference(&sym, &u, &v).unwrap_err();
        assert!(e.to_string().contains("(0, 0)"));
    }
}
