//! Paradifferential calculus on periodic grids.
//!
//! * [`paraproduct`] / [`balanced`]: `T_a u` and `Π(a,u) = au − T_a u − T_u a`;
//! * [`bilinear`]: bilinear forms with a symbol `m(ξ,η)` split into low-high and
//!   high-high parts;
//! * [`norm`] / [`pair_norm`] / [`control_norms`]: Sobolev, Zygmund, Besov and
//!   `L^p`-Sobolev norms.

mod bilinear;
mod cutoff;
mod norms;
mod para;

pub use bilinear::{bilinear, bilinear_reference, BilinearSymbol, Quantization, Region};
pub use cutoff::{chi, chi1, chi2, psi, quintic_ramp, CutoffParams};
pub use norms::{control_norms, norm, pair_norm, ControlNorms, SpaceSpec, EPS, EPS_SHARP};
pub use para::{balanced, paraproduct};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParaError {
    #[error("grid mismatch")]
    GridMismatch,
    #[error("symbol evaluation failed at (xi, eta) = ({0}, {1})")]
    SymbolPole(f64, f64),
    #[error("invalid cutoff parameters: need 0 < eps1 < eps2 < 1")]
    BadCutoff,
    #[error("space {0} does not apply to this argument")]
    WrongArity(&'static str),
    #[error("exponents p, q must be at least 1")]
    BadExponent,
}

pub type Result<T> = std::result::Result<T, ParaError>;
