use crate::HoloState;
use paracalc::{control_norms, EPS, EPS_SHARP};
use spectral_core::{Complex64, Padded};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GuardThresholds {
    pub delta: f64,
    pub a0_max: f64,
    pub leakage: f64,
}

impl Default for GuardThresholds {
    fn default() -> Self {
        Self { delta: 0.1, a0_max: 1.0, leakage: 1e-10 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Violation {
    MinAbs { value: f64, delta: f64 },
    A0 { value: f64, max: f64 },
    Leakage { value: f64, tol: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MinAbs { value, delta } => write!(f, "min|1+W| = {value:.6e} < {delta}"),
            Violation::A0 { value, max } => write!(f, "A0 = {value:.6e} > {max}"),
            Violation::Leakage { value, tol } => write!(f, "holomorphic leakage = {value:.3e} > {tol:e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GuardReport {
    pub min_abs_1pw: f64,
    pub a0: f64,
    pub leakage: f64,
    pub mean_w: Complex64,
    pub mean_r: Complex64,
    pub violations: Vec<Violation>,
}

impl GuardReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations that make evolution meaningless (leakage is only monitored).
    pub fn fatal(&self) -> Option<Violation> {
        self.violations.iter().copied().find(|v| !matches!(v, Violation::Leakage { .. }))
    }
}

/// Pure report on the admissibility of a state.
pub fn guard(s: &HoloState, th: &GuardThresholds) -> GuardReport {
    let min_abs_1pw = (Padded::lift(&s.w) + Complex64::new(1.0, 0.0)).min_abs();
    let a0 = control_norms(&s.w, &s.r, EPS, EPS_SHARP, &[0.0])[0].a;
    let leakage = s.w.positive_leakage().hypot(s.r.positive_leakage());
    let mut violations = Vec::new();
    if !(min_abs_1pw >= th.delta) {
        violations.push(Violation::MinAbs { value: min_abs_1pw, delta: th.delta });
    }
    if !(a0 <= th.a0_max) {
        violations.push(Violation::A0 { value: a0, max: th.a0_max });
    }
    if !(leakage <= th.leakage) {
        violations.push(Violation::Leakage { value: leakage, tol: th.leakage });
    }
    GuardReport { min_abs_1pw, a0, leakage, mean_w: s.w.mean(), mean_r: s.r.mean(), violations }
}
