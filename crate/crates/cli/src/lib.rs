//! Command-line driver.
//!
//! [`run`] parses arguments, merges the optional flat config file with flag
//! overrides, executes one command and writes its outputs plus a
//! `manifest.json` into the output directory. Exit codes: 0 success, 2 guard
//! violation, 3 configuration error, 4 resonance-identity mismatch, 1 other
//! failures.

pub mod commands;
pub mod config;
mod output;

pub use config::{parse_flat, RunConfig, Target, Value};
pub use output::Out;

use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("guard violation: {0}")]
    Guard(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Step(#[from] timestepper::StepError),
    #[error(transparent)]
    Energy(#[from] energetics::EnergyError),
    #[error(transparent)]
    Model(#[from] hydro_model::HydroError),
    #[error(transparent)]
    Spectral(#[from] spectral_core::SpectralError),
    #[error(transparent)]
    Para(#[from] paracalc::ParaError),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Guard(_) => EXIT_GUARD,
            CliError::Step(timestepper::StepError::Guard(_)) => EXIT_GUARD,
            CliError::Step(timestepper::StepError::Config(_)) => EXIT_CONFIG,
            CliError::Energy(energetics::EnergyError::Guard(_)) => EXIT_GUARD,
            CliError::Model(hydro_model::HydroError::Guard { .. }) => EXIT_GUARD,
            _ => EXIT_FAILURE,
        }
    }
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Nonlinear evolution with diagnostics and snapshots.
    Simulate,
    /// Finite-difference check of the linearized flow.
    LinearizeCheck,
    /// Single linear mode against its closed-form solution.
    Dispersion,
    /// Control and Sobolev norms of the initial data.
    Norms,
    /// Solve and check every normal-form symbol system.
    VerifySymbols,
    /// Three-wave identity and four-wave sign-pattern scan.
    VerifyResonance,
    /// Rescaled run against the rescaled reference.
    ScalingTest,
    /// Energies of a random linearized pair on the initial background.
    EnergyReport,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Simulate => "simulate",
            Command::LinearizeCheck => "linearize-check",
            Command::Dispersion => "dispersion",
            Command::Norms => "norms",
            Command::VerifySymbols => "verify-symbols",
            Command::VerifyResonance => "verify-resonance",
            Command::ScalingTest => "scaling-test",
            Command::EnergyReport => "energy-report",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hydroelastic", version, about = "Hydroelastic wave solver and symbol verifier")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long = "n-modes", global = true)]
    pub n_modes: Option<usize>,
    #[arg(long, global = true)]
    pub period: Option<f64>,
    #[arg(long, global = true)]
    pub dt: Option<f64>,
    #[arg(long = "T", global = true)]
    pub t_final: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub amplitude: Option<f64>,
    /// Wavenumber of the single-mode initial data (k ≤ 0).
    #[arg(long, alias = "k", global = true, allow_negative_numbers = true)]
    pub mode: Option<i64>,
    #[arg(long, global = true)]
    pub scheme: Option<String>,
    #[arg(long = "project-holo", global = true)]
    pub project_holo: bool,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long = "json-snapshots", global = true)]
    pub json_snapshots: bool,
}

impl Cli {
    /// Defaults, then the config file, then flags.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut c = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if let Some(v) = &self.out {
            c.out = v.clone();
        }
        macro_rules! set {
            ($($f:ident => $g:ident),*) => { $(if let Some(v) = self.$f { c.$g = v; })* };
        }
        set!(n_modes => n_modes, period => period, dt => dt, t_final => t_final, amplitude => amplitude, mode => mode);
        if let Some(s) = &self.scheme {
            c.scheme = config::parse_scheme(s)?;
        }
        if let Some(j) = self.jobs {
            c.jobs = Some(j);
        }
        if let Some(s) = self.seed {
            c.seed = s;
        }
        c.project_holo |= self.project_holo;
        c.json_snapshots |= self.json_snapshots;
        c.validate()?;
        Ok(c)
    }
}

#[derive(Serialize)]
struct Manifest<'a> {
    command: &'a str,
    version: &'a str,
    config: &'a RunConfig,
    wall_time_s: f64,
    exit_code: i32,
    error: Option<String>,
    outputs: &'a [String],
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let cfg = match cli.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let mut out = match Out::create(&cfg.out) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: cannot create {}: {e}", cfg.out.display());
            return EXIT_CONFIG;
        }
    };
    let start = Instant::now();
    let result = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool.install(|| commands::execute(cli.command, &cfg, &mut out)),
        Err(e) => Err(CliError::Other(e.to_string())),
    };
    let (code, error) = match &result {
        Ok(code) => (*code, None),
        Err(e) => {
            eprintln!("error: {e}");
            (e.exit_code(), Some(e.to_string()))
        }
    };
    let files = out.files().to_vec();
    let manifest = Manifest {
        command: cli.command.name(),
        version: env!("CARGO_PKG_VERSION"),
        config: &cfg,
        wall_time_s: start.elapsed().as_secs_f64(),
        exit_code: code,
        error,
        outputs: &files,
    };
    if let Err(e) = out.write_json("manifest.json", &manifest) {
        eprintln!("error: manifest: {e}");
    }
    code
}
