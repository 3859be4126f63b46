//! Energies and norms of the hydroelastic system, evaluated as runtime
//! diagnostics.
//!
//! * [`energy_e0`]: the conserved quadratic energy;
//! * [`energy_elin`]: the paradifferential energy of a linearized pair;
//! * [`energy_e3cor`]: the cubic correction, built from the exact symbols
//!   solved in `symbol_verify`;
//! * [`energy_e42cor`]: the quartic correction in the velocity component;
//! * [`DiagnosticsRecord`], [`write_csv`] and [`drift_report`] for trajectories.
//!
//! Integrals are trapezoid sums on the uniform grid, evaluated spectrally.
//! Paraproducts `T_a u` treat the mean of `a` as an exact multiplier and the
//! remainder with [`paracalc::paraproduct`].

mod cubic;
mod diagnostics;
mod quadratic;
mod quartic;
mod weights;

pub use cubic::{energy_e3cor, lhh_form, CubicSymbols, Symbol};
pub use diagnostics::{drift_report, write_csv, DiagnosticsConfig, DiagnosticsRecord, DriftReport, DriftRow};
pub use quadratic::{energy_e0, energy_e0_complex, energy_elin, energy_norm_sq};
pub use quartic::energy_e42cor;
pub use weights::{para_mul, Weights};

use hydro_model::{guard, GuardThresholds, HoloState, HydroError, Violation};
use paracalc::ParaError;
use spectral_core::SpectralError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnergyError {
    #[error("background rejected: {0}")]
    Guard(Violation),
    #[error("velocity component has nonzero mean {0:.3e}")]
    NonzeroMean(f64),
    #[error("symbol `{name}` is singular at ({xi}, {eta})")]
    SymbolPole { name: &'static str, xi: f64, eta: f64 },
    #[error(transparent)]
    Model(#[from] HydroError),
    #[error(transparent)]
    Para(#[from] ParaError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, EnergyError>;

/// Rejects backgrounds on which the para-coefficients are meaningless.
pub(crate) fn check_background(bg: &HoloState) -> Result<()> {
    match guard(bg, &GuardThresholds::default()).fatal() {
        Some(v) => Err(EnergyError::Guard(v)),
        None => Ok(()),
    }
}
