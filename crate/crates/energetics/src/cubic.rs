//! The cubic energy correction: four low-high-high trilinear forms.

use crate::weights::{para_mul, Weights};
use crate::{check_background, EnergyError, Result};
use hydro_model::HoloState;
use paracalc::{chi1, CutoffParams};
use spectral_core::{Complex64, ComplexField};
use symbol_verify::poly::to_f64;
use symbol_verify::RatFun;

type Terms = Vec<((i32, i32), f64)>;

/// A rational symbol `m(ξ, η)` compiled to floating point.
#[derive(Clone, Debug, PartialEq)]
pub struct Symbol {
    pub name: &'static str,
    num: Terms,
    den: Terms,
}

fn compile(p: &symbol_verify::Poly) -> Terms {
    p.terms().map(|(e, c)| (*e, to_f64(c))).collect()
}

fn eval_terms(t: &Terms, x: f64, y: f64) -> f64 {
    t.iter().map(|((i, j), c)| c * x.powi(*i) * y.powi(*j)).sum()
}

impl Symbol {
    pub fn from_ratfun(name: &'static str, f: &RatFun) -> Self {
        Self { name, num: compile(f.num()), den: compile(f.den()) }
    }

    /// `c ξ^i η^j`.
    pub fn monomial(name: &'static str, c: f64, exps: (i32, i32)) -> Self {
        Self { name, num: vec![(exps, c)], den: vec![((0, 0), 1.0)] }
    }

    /// Value at `(ξ, η)`; non-finite at a pole.
    pub fn eval(&self, xi: f64, eta: f64) -> f64 {
        eval_terms(&self.num, xi, eta) / eval_terms(&self.den, xi, eta)
    }
}

/// The symbols of the four forms `A, B, C, D`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicSymbols {
    pub a: Symbol,
    pub b: Symbol,
    pub c: Symbol,
    pub d: Symbol,
}

impl CubicSymbols {
    /// The exact solution of the symbol system.
    pub fn exact() -> Self {
        let s = symbol_verify::resonance::cubic_correction_symbols();
        Self::from_ratfuns(&s)
    }

    pub fn from_ratfuns(s: &[RatFun]) -> Self {
        assert_eq!(s.len(), 4, "four symbols expected");
        Self {
            a: Symbol::from_ratfun("a", &s[0]),
            b: Symbol::from_ratfun("b", &s[1]),
            c: Symbol::from_ratfun("c", &s[2]),
            d: Symbol::from_ratfun("d", &s[3]),
        }
    }

    /// Leading monomials in the low-high limit: `2/5, 2/5, 3ξη², ½ξ²η⁻²`.
    pub fn leading() -> Self {
        Self {
            a: Symbol::monomial("a", 0.4, (0, 0)),
            b: Symbol::monomial("b", 0.4, (0, 0)),
            c: Symbol::monomial("c", 3.0, (1, 2)),
            d: Symbol::monomial("d", 0.5, (2, -2)),
        }
    }
}

/// `∫ F(u, v, w̄) dα` for the form with symbol `m` and the first argument at
/// low frequency:
///
/// `period · Σ_{ξ,η} χ₁(ξ,η) m(ξ,η) û(ξ) v̂(η) conj(ŵ(ξ+η))`,
///
/// restricted to resolved output wavenumbers. Trilinear in `(u, v, w̄)`.
pub fn lhh_form(m: &Symbol, u: &ComplexField, v: &ComplexField, w: &ComplexField) -> Result<Complex64> {
    u.check_grid(v)?;
    u.check_grid(w)?;
    let g = *u.grid();
    let zero = Complex64::new(0.0, 0.0);
    let (um, vm, wm) = (u.modes(), v.modes(), w.modes());
    let mut acc = zero;
    for (i, &uh) in um.iter().enumerate() {
        if uh == zero {
            continue;
        }
        let (ki, xi) = (g.wavenumber(i), g.kappa(i));
        for (j, &vh) in vm.iter().enumerate() {
            if vh == zero {
                continue;
            }
            let eta = g.kappa(j);
            let c = chi1(xi, eta);
            if c == 0.0 {
                continue;
            }
            let Some(o) = g.index_of(ki + g.wavenumber(j)) else { continue };
            let s = m.eval(xi, eta);
            if !s.is_finite() {
                return Err(EnergyError::SymbolPole { name: m.name, xi, eta });
            }
            acc += uh * vh * wm[o].conj() * (c * s);
        }
    }
    Ok(acc * g.period())
}

/// `Re ∫ A(R, T_{J^{1/4}}w, r̄) + B(R, T_{J^{1/4}(1−Ȳ)²}r, w̄)
///     + C(𝐖, T_{J^{-5/4}(1−Y)}w, w̄) + D(𝐖, T_{J^{1/4}(1−Y)}r, r̄) dα`.
pub fn energy_e3cor(
    bg: &HoloState,
    w: &ComplexField,
    r: &ComplexField,
    sym: &CubicSymbols,
    cutoff: &CutoffParams,
) -> Result<f64> {
    check_background(bg)?;
    let wt = Weights::new(bg);
    let tw_a = para_mul(&wt.weight(0.25, 0, 0), w, cutoff)?;
    let tr_b = para_mul(&wt.weight(0.25, 0, 2), r, cutoff)?;
    let tw_c = para_mul(&wt.weight(-1.25, 1, 0), w, cutoff)?;
    let tr_d = para_mul(&wt.weight(0.25, 1, 0), r, cutoff)?;
    let total = lhh_form(&sym.a, &bg.r, &tw_a, r)?
        + lhh_form(&sym.b, &bg.r, &tr_b, w)?
        + lhh_form(&sym.c, &bg.w, &tw_c, w)?
        + lhh_form(&sym.d, &bg.w, &tr_d, r)?;
    Ok(total.re)
}
