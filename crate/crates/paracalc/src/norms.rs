//! Function-space norms on the periodic grid.

use crate::{ParaError, Result};
use spectral_core::{lp_decompose, ComplexField};

/// Default `ε` and `ε′` of the control norms.
pub const EPS: f64 = 0.01;
pub const EPS_SHARP: f64 = 0.02;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpaceSpec {
    Sobolev { s: f64 },
    Zygmund { s: f64 },
    Besov { s: f64, p: f64, q: f64 },
    LpSobolev { s: f64, p: f64 },
    /// `H^{s+3/2} × H^s` (pairs only).
    Product { s: f64 },
    /// `C^{r+3/2}_* × C^r_*` (pairs only).
    ProductZygmund { r: f64 },
}

impl SpaceSpec {
    fn name(&self) -> &'static str {
        match self {
            SpaceSpec::Sobolev { .. } => "H^s",
            SpaceSpec::Zygmund { .. } => "C^s_*",
            SpaceSpec::Besov { .. } => "B^s_pq",
            SpaceSpec::LpSobolev { .. } => "W^{s,p}",
            SpaceSpec::Product { .. } => "product H^s",
            SpaceSpec::ProductZygmund { .. } => "product C^r_*",
        }
    }
}

/// Discrete `L^p` norm of grid samples (trapezoid rule); `p = ∞` gives the max.
fn lp_of_values(f: &ComplexField, p: f64) -> f64 {
    let vals = f.values();
    if p.is_infinite() {
        return vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    }
    let h = f.grid().spacing();
    (vals.iter().map(|v| v.norm().powf(p)).sum::<f64>() * h).powf(1.0 / p)
}

fn sobolev(f: &ComplexField, s: f64) -> f64 {
    let g = f.grid();
    let sum: f64 = f
        .modes()
        .iter()
        .enumerate()
        .map(|(i, m)| (1.0 + g.kappa(i).powi(2)).powf(s) * m.norm_sqr())
        .sum();
    (sum * g.period()).sqrt()
}

fn besov(f: &ComplexField, s: f64, p: f64, q: f64) -> f64 {
    let seq = lp_decompose(f)
        .iter()
        .enumerate()
        .map(|(j, b)| 2f64.powf(j as f64 * s) * lp_of_values(b, p))
        .collect::<Vec<_>>();
    if q.is_infinite() {
        seq.into_iter().fold(0.0, f64::max)
    } else {
        seq.into_iter().map(|x| x.powf(q)).sum::<f64>().powf(1.0 / q)
    }
}

/// Norm of a single field.
pub fn norm(f: &ComplexField, spec: SpaceSpec) -> Result<f64> {
    match spec {
        SpaceSpec::Sobolev { s } => Ok(sobolev(f, s)),
        SpaceSpec::Zygmund { s } => Ok(besov(f, s, f64::INFINITY, f64::INFINITY)),
        SpaceSpec::Besov { s, p, q } => {
            if p < 1.0 || q < 1.0 {
                return Err(ParaError::BadExponent);
            }
            Ok(besov(f, s, p, q))
        }
        SpaceSpec::LpSobolev { s, p } => {
            if p < 1.0 {
                return Err(ParaError::BadExponent);
            }
            Ok(lp_of_values(&f.bessel(s), p))
        }
        _ => Err(ParaError::WrongArity(spec.name())),
    }
}

/// Norm of a pair `(w, r)` in a product space.
pub fn pair_norm(w: &ComplexField, r: &ComplexField, spec: SpaceSpec) -> Result<f64> {
    match spec {
        SpaceSpec::Product { s } => Ok((sobolev(w, s + 1.5).powi(2) + sobolev(r, s).powi(2)).sqrt()),
        SpaceSpec::ProductZygmund { r: rr } => Ok(besov(w, rr + 1.5, f64::INFINITY, f64::INFINITY)
            + besov(r, rr, f64::INFINITY, f64::INFINITY)),
        _ => Err(ParaError::WrongArity(spec.name())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ControlNorms {
    pub s: f64,
    /// `‖(𝐖,R)‖` in `C^{s+ε}_* × C^{s−3/2+ε}_*`.
    pub a: f64,
    /// `‖(𝐖,R)‖` in `W^{s+1/4+ε′,4} × W^{s−5/4+ε′,4}`.
    pub a_sharp: f64,
    /// Whether `a ≤ EMBEDDING_CONST · a_sharp` (the embedding direction).
    pub embedding_ok: bool,
}

/// Generous constant for the `W^{·,4} ⊂ C_*` sanity flag.
pub const EMBEDDING_CONST: f64 = 10.0;

pub fn control_norms(w: &ComplexField, r: &ComplexField, eps: f64, eps_sharp: f64, s_values: &[f64]) -> Vec<ControlNorms> {
    s_values
        .iter()
        .map(|&s| {
            let a = pair_norm(w, r, SpaceSpec::ProductZygmund { r: s - 1.5 + eps }).unwrap();
            let a_sharp = norm(w, SpaceSpec::LpSobolev { s: s + 0.25 + eps_sharp, p: 4.0 }).unwrap()
                + norm(r, SpaceSpec::LpSobolev { s: s - 1.25 + eps_sharp, p: 4.0 }).unwrap();
            ControlNorms { s, a, a_sharp, embedding_ok: a <= EMBEDDING_CONST * a_sharp + 1e-300 }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_core::{Complex64, SpectralGrid};
    use std::f64::consts::PI;

    fn mode(k: i64) -> ComplexField {
        ComplexField::single_mode(SpectralGrid::standard(128).unwrap(), k, Complex64::new(1.0, 0.0))
    }

    #[test]
    fn sobolev_single_mode() {
        for s in [0.0, 1.0, 1.5, -0.5] {
            let v = norm(&mode(-1), SpaceSpec::Sobolev { s }).unwrap();
            assert!((v - (2.0 * PI).sqrt() * 2f64.powf(s / 2.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn zygmund_single_mode() {
        let v = norm(&mode(-8), SpaceSpec::Zygmund { s: 1.0 }).unwrap();
        assert!((4.0..=16.0).contains(&v));
    }

    #[test]
    fn product_norm() {
        let z = ComplexField::zeros(SpectralGrid::standard(128).unwrap());
        let v = pair_norm(&mode(-1), &z, SpaceSpec::Product { s: 0.0 }).unwrap();
        assert!((v - (2.0 * PI).sqrt() * 2f64.powf(0.75)).abs() < 1e-13);
        assert!(norm(&z, SpaceSpec::Product { s: 0.0 }).is_err());
    }

    #[test]
    fn zero_state_controls() {
        let z = ComplexField::zeros(SpectralGrid::standard(64).unwrap());
        let c = control_norms(&z, &z, EPS, EPS_SHARP, &[0.0, 1.75]);
        assert!(c.iter().all(|c| c.a == 0.0 && c.a_sharp == 0.0));
    }
}
