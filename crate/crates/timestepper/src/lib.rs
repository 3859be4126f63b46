//! Time integration of the hydroelastic system.
//!
//! The linear part `w_t = −r_α`, `r_t = i∂⁴w` is integrated exactly mode by
//! mode ([`LinearPropagator`]); the remainder is treated by fourth-order
//! exponential time differencing (Cox–Matthews) or an integrating-factor RK4.

mod propagator;
mod snapshot;
mod stepper;

pub use propagator::{build_propagator, generator, linear_flow, LinearPropagator, Mat2};
pub use snapshot::{read_snapshot, read_snapshot_json, write_snapshot, write_snapshot_json, SNAPSHOT_VERSION};
pub use stepper::{evolve, evolve_tangent, step, suggest_dt, Dt, Filter, IntegratorConfig, Scheme, Stepper, Trajectory};

use hydro_model::{HydroError, Violation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StepError {
    #[error(transparent)]
    Model(#[from] HydroError),
    #[error("guard violation: {0}")]
    Guard(Violation),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("snapshot i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("snapshot format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, StepError>;
