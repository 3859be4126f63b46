//! Exact verification of the symbol systems behind the normal-form
//! transformations, plus the resonance identities they rely on.
//!
//! Every computation is over ℚ: symbols are quotients of bivariate Laurent
//! polynomials with `BigRational` coefficients, linear systems are solved by
//! Cramer's rule, and identities are decided by cross-multiplication.

pub mod catalog;
pub mod leading;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod resonance;
pub mod verify;

pub use catalog::{catalog, find, SystemSpec};
pub use leading::{balanced_lead, low_high_lead, BalancedLead, Monomial};
pub use parse::parse;
pub use poly::Poly;
pub use ratfun::RatFun;
pub use verify::{verify_all, verify_system, SystemReport};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("cannot parse `{input}` at byte {offset}: {msg}")]
    Parse { input: String, offset: usize, msg: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("singular system")]
    Singular,
    #[error("no leading term: {0}")]
    NoLeadingTerm(String),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
}

pub type Result<T> = std::result::Result<T, SymbolError>;
