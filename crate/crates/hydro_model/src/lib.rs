//! Hydroelastic waves in holomorphic coordinates.
//!
//! The unknowns are the differentiated position `𝐖 = W_α` and the velocity
//! variable `R`, both holomorphic (Fourier support in `k ≤ 0`). [`Model`]
//! evaluates
//!
//! * [`Model::aux_fields`]: `Y, J, a, b, M, c̃, c`;
//! * [`Model::rhs_nonlinear`]: the full differentiated system (bending
//!   stiffness normalized to one);
//! * [`rhs_linear_zero`]: the linearization at the zero state;
//! * [`Model::rhs_linearized`]: the linearized system around a background;
//! * [`Model::apply_lpara`]: the paradifferential fourth-order operator.
//!
//! Every pointwise product and quotient is formed on the 2× padded grid.

mod aux;
mod frame;
mod guard;
mod linearized;
mod rhs;
mod state;

pub use aux::AuxFields;
pub use guard::{guard, GuardReport, GuardThresholds, Violation};
pub use rhs::{rhs_linear_zero, Rhs};
pub use state::{HoloState, LinState};

use paracalc::{CutoffParams, ParaError};
use spectral_core::SpectralError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HydroError {
    #[error("guard violated: min|1+W| = {min_abs:.3e} < {delta}")]
    Guard { min_abs: f64, delta: f64 },
    #[error("non-finite value in term `{0}`")]
    NonFinite(&'static str),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Para(#[from] ParaError),
}

pub type Result<T> = std::result::Result<T, HydroError>;

/// Numerical settings shared by all model evaluations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Model {
    /// Lower bound on `min|1+𝐖|` below which evaluation is refused.
    pub delta: f64,
    /// Output mask keeps `|k| ≤ dealias·k_max`.
    pub dealias: f64,
    pub cutoff: CutoffParams,
}

impl Default for Model {
    fn default() -> Self {
        Self { delta: 0.1, dealias: 0.5, cutoff: CutoffParams::default() }
    }
}

impl Model {
    pub fn with_dealias(self, dealias: f64) -> Self {
        Self { dealias, ..self }
    }
}
