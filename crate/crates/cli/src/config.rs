//! Run configuration: defaults, a flat `key = value` file, and flag overrides.
//!
//! File syntax, one entry per line:
//!
//! ```text
//! # comment
//! n_modes = 256
//! scheme = "ifrk4"
//! project_holo = true
//! w_modes = [-1, 0.02, 0.0, -2, 0.0, 0.01]   # (k, re, im) triples
//! ```

use crate::CliError;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use timestepper::Scheme;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Str(String),
    Num(f64),
    Bool(bool),
    List(Vec<f64>),
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_value(raw: &str) -> Result<Value, CliError> {
    let v = raw.trim();
    if let Some(inner) = v.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| bad(format!("unterminated list `{v}`")))?;
        let items = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<f64>().map_err(|_| bad(format!("non-numeric list item `{s}`"))))
            .collect::<Result<_, _>>()?;
        return Ok(Value::List(items));
    }
    if let Some(s) = v.strip_prefix('"') {
        let s = s.strip_suffix('"').ok_or_else(|| bad(format!("unterminated string `{v}`")))?;
        return Ok(Value::Str(s.to_string()));
    }
    match v {
        "true" => return Ok(Value::Bool(true)),
        "false" => return Ok(Value::Bool(false)),
        _ => {}
    }
    Ok(v.parse::<f64>().map(Value::Num).unwrap_or_else(|_| Value::Str(v.to_string())))
}

/// Parses the flat file format into an ordered map.
pub fn parse_flat(text: &str) -> Result<BTreeMap<String, Value>, CliError> {
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) if !line[..i].contains('"') => &line[..i],
            _ => line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| bad(format!("line {}: expected `key = value`", no + 1)))?;
        out.insert(k.trim().to_string(), parse_value(v)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    W,
    R,
}

/// Everything a command needs; serialized verbatim into the manifest.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub n_modes: usize,
    pub period: f64,
    pub dt: f64,
    pub t_final: f64,
    pub amplitude: f64,
    pub mode: i64,
    pub target: Target,
    /// `(k, re, im)` for `𝐖`; overrides the single-mode family when non-empty.
    pub w_modes: Vec<(i64, f64, f64)>,
    pub r_modes: Vec<(i64, f64, f64)>,
    /// Binary snapshot to start from; overrides both families.
    pub initial_file: Option<PathBuf>,
    #[serde(serialize_with = "scheme_name")]
    pub scheme: Scheme,
    pub project_holo: bool,
    pub jobs: Option<usize>,
    pub seed: u64,
    pub json_snapshots: bool,
    pub snapshot_every: usize,
    /// Integer scaling factor of `scaling-test`.
    pub lambda: u32,
    pub out: PathBuf,
}

fn scheme_name<S: serde::Serializer>(s: &Scheme, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(match s {
        Scheme::Etdrk4 => "etdrk4",
        Scheme::Ifrk4 => "ifrk4",
    })
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n_modes: 256,
            period: 2.0 * PI,
            dt: 1e-3,
            t_final: 1.0,
            amplitude: 0.01,
            mode: -1,
            target: Target::W,
            w_modes: Vec::new(),
            r_modes: Vec::new(),
            initial_file: None,
            scheme: Scheme::Etdrk4,
            project_holo: false,
            jobs: None,
            seed: 0,
            json_snapshots: false,
            snapshot_every: 100,
            lambda: 2,
            out: PathBuf::from("out"),
        }
    }
}

pub fn parse_scheme(s: &str) -> Result<Scheme, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "etdrk4" => Ok(Scheme::Etdrk4),
        "ifrk4" => Ok(Scheme::Ifrk4),
        _ => Err(bad(format!("unknown scheme `{s}` (etdrk4|ifrk4)"))),
    }
}

fn num(key: &str, v: &Value) -> Result<f64, CliError> {
    match v {
        Value::Num(x) => Ok(*x),
        _ => Err(bad(format!("`{key}` expects a number"))),
    }
}

fn int(key: &str, v: &Value) -> Result<i64, CliError> {
    let x = num(key, v)?;
    if x.fract() != 0.0 {
        return Err(bad(format!("`{key}` expects an integer")));
    }
    Ok(x as i64)
}

fn count(key: &str, v: &Value) -> Result<usize, CliError> {
    usize::try_from(int(key, v)?).map_err(|_| bad(format!("`{key}` must be non-negative")))
}

fn text(key: &str, v: &Value) -> Result<String, CliError> {
    match v {
        Value::Str(s) => Ok(s.clone()),
        _ => Err(bad(format!("`{key}` expects a string"))),
    }
}

fn flag(key: &str, v: &Value) -> Result<bool, CliError> {
    match v {
        Value::Bool(b) => Ok(*b),
        _ => Err(bad(format!("`{key}` expects true or false"))),
    }
}

fn triples(key: &str, v: &Value) -> Result<Vec<(i64, f64, f64)>, CliError> {
    let Value::List(xs) = v else { return Err(bad(format!("`{key}` expects a list"))) };
    if xs.len() % 3 != 0 {
        return Err(bad(format!("`{key}` expects (k, re, im) triples")));
    }
    xs.chunks(3)
        .map(|c| {
            if c[0].fract() != 0.0 {
                return Err(bad(format!("`{key}`: wavenumber {} is not an integer", c[0])));
            }
            Ok((c[0] as i64, c[1], c[2]))
        })
        .collect()
}

impl RunConfig {
    pub fn apply(&mut self, key: &str, v: &Value) -> Result<(), CliError> {
        match key {
            "n_modes" => self.n_modes = count(key, v)?,
            "period" => self.period = num(key, v)?,
            "dt" => self.dt = num(key, v)?,
            "T" | "t_final" => self.t_final = num(key, v)?,
            "amplitude" => self.amplitude = num(key, v)?,
            "mode" | "k" => self.mode = int(key, v)?,
            "target" => {
                self.target = match text(key, v)?.as_str() {
                    "W" | "w" => Target::W,
                    "R" | "r" => Target::R,
                    s => return Err(bad(format!("unknown target `{s}` (W|R)"))),
                }
            }
            "w_modes" => self.w_modes = triples(key, v)?,
            "r_modes" => self.r_modes = triples(key, v)?,
            "initial_file" => self.initial_file = Some(PathBuf::from(text(key, v)?)),
            "scheme" => self.scheme = parse_scheme(&text(key, v)?)?,
            "project_holo" => self.project_holo = flag(key, v)?,
            "jobs" => self.jobs = Some(count(key, v)?),
            "seed" => self.seed = count(key, v)? as u64,
            "json_snapshots" => self.json_snapshots = flag(key, v)?,
            "snapshot_every" => self.snapshot_every = count(key, v)?,
            "lambda" => {
                self.lambda = u32::try_from(count(key, v)?).map_err(|_| bad("`lambda` is too large"))?
            }
            "out" => self.out = PathBuf::from(text(key, v)?),
            _ => return Err(bad(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::default();
        for (k, v) in parse_flat(&text)? {
            cfg.apply(&k, &v)?;
        }
        Ok(cfg)
    }

    /// Checks that do not depend on the command.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_modes < 8 || !self.n_modes.is_power_of_two() {
            return Err(bad("n_modes must be a power of two ≥ 8"));
        }
        if !(self.period > 0.0 && self.dt > 0.0 && self.t_final >= 0.0) {
            return Err(bad("period and dt must be positive, T non-negative"));
        }
        if self.snapshot_every == 0 {
            return Err(bad("snapshot_every must be positive"));
        }
        if self.lambda == 0 {
            return Err(bad("lambda must be positive"));
        }
        let holo = |k: i64| k <= 0;
        if !holo(self.mode) || !self.w_modes.iter().chain(&self.r_modes).all(|m| holo(m.0)) {
            return Err(bad("initial data must be holomorphic (wavenumbers k ≤ 0)"));
        }
        Ok(())
    }
}
