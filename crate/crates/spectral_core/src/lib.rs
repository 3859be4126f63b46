//! Periodic Fourier infrastructure.
//!
//! A [`ComplexField`] is a complex function on the periodic interval
//! `[0, period)`, stored by its Fourier coefficients with the convention
//! `f(α) = Σ_k f̂(k) e^{iκ_k α}`, where `κ_k = 2πk/period`.
//! Wavenumbers run over `-n/2+1 ..= n/2`.

mod field;
mod grid;
mod lp;
mod multiplier;
mod padded;
mod transform;

pub use field::ComplexField;
pub use grid::SpectralGrid;
pub use lp::{lp_block_count, lp_block_weight, lp_decompose};
pub use multiplier::{apply_multiplier, symbol, MultiplierSpec};
pub use padded::Padded;
pub use transform::{forward_normalized, inverse_unnormalized, transform, Direction};

pub use num_complex::Complex64;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("n_modes must be even")]
    OddModes,
    #[error("n_modes must be at least 8 (got {0})")]
    TooFewModes(usize),
    #[error("period must be positive (got {0})")]
    BadPeriod(f64),
    #[error("antiderivative needs mean-zero input (mean = {0:e})")]
    NonzeroMean(f64),
    #[error("grid mismatch: {0} vs {1} modes")]
    GridMismatch(usize, usize),
    #[error("lp block {j} out of range (max {max})")]
    BlockOutOfRange { j: usize, max: usize },
    #[error("dealias fraction must lie in (0, 1] (got {0})")]
    BadFraction(f64),
}

pub type Result<T> = std::result::Result<T, SpectralError>;
