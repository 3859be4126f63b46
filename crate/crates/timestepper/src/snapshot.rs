//! Snapshot files.
//!
//! Binary layout (little-endian): `n_modes: u64`, `period: f64`, `t: f64`,
//! `version: u32`, then `n_modes` interleaved `(re, im)` pairs of `𝐖` followed
//! by the same for `R`, all `f64`, modes in FFT order. The JSON mirror holds
//! the same numbers as one flat object.

use crate::{Result, StepError};
use hydro_model::HoloState;
use serde::{Deserialize, Serialize};
use spectral_core::{Complex64, ComplexField, SpectralGrid};
use std::io::{Read, Write};

pub const SNAPSHOT_VERSION: u32 = 1;

pub fn write_snapshot(s: &HoloState, mut out: impl Write) -> Result<()> {
    let g = s.grid();
    out.write_all(&(g.n_modes() as u64).to_le_bytes())?;
    out.write_all(&g.period().to_le_bytes())?;
    out.write_all(&s.t.to_le_bytes())?;
    out.write_all(&SNAPSHOT_VERSION.to_le_bytes())?;
    for f in [&s.w, &s.r] {
        for v in f.modes() {
            out.write_all(&v.re.to_le_bytes())?;
            out.write_all(&v.im.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_snapshot(mut input: impl Read) -> Result<HoloState> {
    let mut b8 = [0u8; 8];
    let mut f64_next = |input: &mut dyn Read| -> Result<f64> {
        input.read_exact(&mut b8)?;
        Ok(f64::from_le_bytes(b8))
    };
    let mut head = [0u8; 8];
    input.read_exact(&mut head)?;
    let n = u64::from_le_bytes(head) as usize;
    let period = f64_next(&mut input)?;
    let t = f64_next(&mut input)?;
    let mut b4 = [0u8; 4];
    input.read_exact(&mut b4)?;
    let version = u32::from_le_bytes(b4);
    if version != SNAPSHOT_VERSION {
        return Err(StepError::Format(format!("unsupported version {version}")));
    }
    let g = SpectralGrid::new(n, period).map_err(|e| StepError::Format(e.to_string()))?;
    let mut fields = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut modes = Vec::with_capacity(n);
        for _ in 0..n {
            let re = f64_next(&mut input)?;
            let im = f64_next(&mut input)?;
            modes.push(Complex64::new(re, im));
        }
        fields.push(ComplexField::from_modes(g, modes).map_err(|e| StepError::Format(e.to_string()))?);
    }
    let r = fields.pop().unwrap();
    let w = fields.pop().unwrap();
    Ok(HoloState { w, r, t })
}

#[derive(Serialize, Deserialize)]
struct JsonSnapshot {
    n_modes: usize,
    period: f64,
    t: f64,
    version: u32,
    /// `re, im` of `𝐖` then of `R`.
    data: Vec<f64>,
}

pub fn write_snapshot_json(s: &HoloState, out: impl Write) -> Result<()> {
    let g = s.grid();
    let data = [&s.w, &s.r].iter().flat_map(|f| f.modes().iter().flat_map(|v| [v.re, v.im])).collect();
    let js = JsonSnapshot { n_modes: g.n_modes(), period: g.period(), t: s.t, version: SNAPSHOT_VERSION, data };
    serde_json::to_writer(out, &js).map_err(|e| StepError::Format(e.to_string()))
}

pub fn read_snapshot_json(input: impl Read) -> Result<HoloState> {
    let js: JsonSnapshot = serde_json::from_reader(input).map_err(|e| StepError::Format(e.to_string()))?;
    if js.version != SNAPSHOT_VERSION || js.data.len() != 4 * js.n_modes {
        return Err(StepError::Format("inconsistent JSON snapshot".into()));
    }
    let g = SpectralGrid::new(js.n_modes, js.period).map_err(|e| StepError::Format(e.to_string()))?;
    let field = |chunk: &[f64]| {
        let modes = chunk.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
        ComplexField::from_modes(g, modes).map_err(|e| StepError::Format(e.to_string()))
    };
    let (a, b) = js.data.split_at(2 * js.n_modes);
    Ok(HoloState { w: field(a)?, r: field(b)?, t: js.t })
}
