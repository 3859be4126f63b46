//! Frequency cutoffs.
//!
//! All transitions use the quintic smoothstep `6t⁵ − 15t⁴ + 10t³`, which is C².

use crate::{ParaError, Result};

/// Equals 1 for `x ≤ lo`, 0 for `x ≥ hi`, quintic in between.
pub fn quintic_ramp(x: f64, lo: f64, hi: f64) -> f64 {
    if x <= lo {
        1.0
    } else if x >= hi {
        0.0
    } else {
        let t = (x - lo) / (hi - lo);
        1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffParams {
    pub eps1: f64,
    pub eps2: f64,
    /// `ψ` vanishes below this modulus.
    pub psi_low: f64,
    /// `ψ` equals one above this modulus.
    pub psi_high: f64,
}

impl Default for CutoffParams {
    fn default() -> Self {
        Self { eps1: 0.05, eps2: 0.1, psi_low: 0.2, psi_high: 0.25 }
    }
}

impl CutoffParams {
    pub fn validate(&self) -> Result<()> {
        if 0.0 < self.eps1 && self.eps1 < self.eps2 && self.eps2 < 1.0 && self.psi_low < self.psi_high {
            Ok(())
        } else {
            Err(ParaError::BadCutoff)
        }
    }
}

/// Paraproduct cone: 1 if `|θ| ≤ ε1(1+|η|)`, 0 if `|θ| ≥ ε2(1+|η|)`.
pub fn chi(p: &CutoffParams, theta: f64, eta: f64) -> f64 {
    quintic_ramp(theta.abs() / (1.0 + eta.abs()), p.eps1, p.eps2)
}

/// Low-frequency floor: 0 for `|η| ≤ 1/5`, 1 for `|η| ≥ 1/4`.
pub fn psi(p: &CutoffParams, eta: f64) -> f64 {
    1.0 - quintic_ramp(eta.abs(), p.psi_low, p.psi_high)
}

/// Low-high selector: 1 if `|θ1| ≤ |θ2|/20`, 0 if `|θ1| ≥ |θ2|/10`.
/// At `θ2 = 0` it vanishes (including the origin).
pub fn chi1(t1: f64, t2: f64) -> f64 {
    if t2 == 0.0 {
        return 0.0;
    }
    quintic_ramp(t1.abs() / t2.abs(), 0.05, 0.1)
}

/// Balanced selector, `1 − χ₁(θ1,θ2) − χ₁(θ2,θ1)`.
pub fn chi2(t1: f64, t2: f64) -> f64 {
    1.0 - chi1(t1, t2) - chi1(t2, t1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paraproduct_cone_values() {
        let p = CutoffParams::default();
        assert_eq!(chi(&p, 0.0, 4.0), 1.0);
        assert_eq!(chi(&p, -1.0, -64.0), 1.0);
        assert_eq!(chi(&p, -1.0, -2.0), 0.0);
        assert_eq!(psi(&p, 0.0), 0.0);
        assert_eq!(psi(&p, -1.0), 1.0);
        assert!(psi(&p, 0.225) > 0.0 && psi(&p, 0.225) < 1.0);
    }

    #[test]
    fn selectors_partition() {
        for a in -40..=40 {
            for b in -40..=40 {
                let (a, b) = (a as f64, b as f64);
                let s = chi1(a, b) + chi1(b, a) + chi2(a, b);
                assert!((s - 1.0).abs() < 1e-15);
                assert!(chi2(a, b) >= -1e-15);
            }
        }
        assert_eq!(chi2(1.0, 10.0), 1.0);
        assert_eq!(chi2(1.0, 20.0), 0.0);
        assert_eq!(chi1(1.0, 20.0), 1.0);
    }

    #[test]
    fn rejects_bad_params() {
        let p = CutoffParams { eps1: 0.2, eps2: 0.1, ..Default::default() };
        assert!(p.validate().is_err());
        assert!(CutoffParams::default().validate().is_ok());
    }
}
