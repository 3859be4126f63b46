//! Per-snapshot diagnostics, CSV output and the drift report.

use crate::{energy_e0, energy_e3cor, energy_e42cor, energy_elin, CubicSymbols, EnergyError, Result};
use hydro_model::{guard, GuardThresholds, HoloState, LinState};
use paracalc::{control_norms, pair_norm, CutoffParams, SpaceSpec, EPS, EPS_SHARP};
use spectral_core::Complex64;
use std::io::Write;

#[derive(Clone, Debug)]
pub struct DiagnosticsConfig {
    /// Indices `s` of the reported `ℋ^s = H^{s+3/2} × H^s` norms of `(𝐖, R)`.
    pub s_values: Vec<f64>,
    pub cutoff: CutoffParams,
    pub symbols: CubicSymbols,
}

impl Default for DiagnosticsConfig {
    fn default() -> Self {
        Self { s_values: vec![0.0, 1.0], cutoff: CutoffParams::default(), symbols: CubicSymbols::exact() }
    }
}

/// One row of diagnostics. The pair energies are present only when a
/// linearized pair is attached; `e42cor` also needs a mean-free `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagnosticsRecord {
    pub t: f64,
    pub e0: f64,
    /// `(s, ‖(𝐖,R)‖_{ℋ^s})`.
    pub hs_norms: Vec<(f64, f64)>,
    pub a0: f64,
    pub a_sharp_74: f64,
    pub elin: Option<f64>,
    pub e3cor: Option<f64>,
    pub e42cor: Option<f64>,
    pub min_abs_1plus_w: f64,
    pub holo_leakage: f64,
    pub mean_w: Complex64,
    pub mean_r: Complex64,
}

impl DiagnosticsRecord {
    pub fn new(s: &HoloState, pair: Option<&LinState>, cfg: &DiagnosticsConfig) -> Result<Self> {
        let rep = guard(s, &GuardThresholds::default());
        let cn = control_norms(&s.w, &s.r, EPS, EPS_SHARP, &[0.0, 1.75]);
        let hs_norms = cfg
            .s_values
            .iter()
            .map(|&x| Ok((x, pair_norm(&s.w, &s.r, SpaceSpec::Product { s: x })?)))
            .collect::<Result<Vec<_>>>()?;
        let (mut elin, mut e3cor, mut e42cor) = (None, None, None);
        if let Some(p) = pair {
            elin = Some(energy_elin(s, &p.w, &p.r, &cfg.cutoff)?);
            e3cor = Some(energy_e3cor(s, &p.w, &p.r, &cfg.symbols, &cfg.cutoff)?);
            e42cor = match energy_e42cor(s, &p.r, &cfg.cutoff) {
                Ok(v) => Some(v),
                Err(EnergyError::NonzeroMean(_)) => None,
                Err(e) => return Err(e),
            };
        }
        Ok(Self {
            t: s.t,
            e0: energy_e0(&s.w, &s.r),
            hs_norms,
            a0: cn[0].a,
            a_sharp_74: cn[1].a_sharp,
            elin,
            e3cor,
            e42cor,
            min_abs_1plus_w: rep.min_abs_1pw,
            holo_leakage: rep.leakage,
            mean_w: rep.mean_w,
            mean_r: rep.mean_r,
        })
    }

    /// Column names in output order.
    pub fn header(s_values: &[f64]) -> Vec<String> {
        let mut h = vec!["t".to_string(), "E0".into()];
        h.extend(s_values.iter().map(|s| format!("Hs_{s}")));
        for c in [
            "A0", "A_sharp_74", "Elin", "E3cor", "E42cor", "min_abs_1plusW", "holo_leakage",
            "mean_W_re", "mean_W_im", "mean_R_re", "mean_R_im",
        ] {
            h.push(c.into());
        }
        h
    }

    /// Field values in header order; absent pair energies are empty.
    pub fn row(&self) -> Vec<String> {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        let mut r = vec![self.t.to_string(), self.e0.to_string()];
        r.extend(self.hs_norms.iter().map(|(_, v)| v.to_string()));
        r.extend([
            self.a0.to_string(),
            self.a_sharp_74.to_string(),
            opt(self.elin),
            opt(self.e3cor),
            opt(self.e42cor),
            self.min_abs_1plus_w.to_string(),
            self.holo_leakage.to_string(),
            self.mean_w.re.to_string(),
            self.mean_w.im.to_string(),
            self.mean_r.re.to_string(),
            self.mean_r.im.to_string(),
        ]);
        r
    }
}

/// Header plus one line per record. All records must share the `s` list.
pub fn write_csv<W: Write>(records: &[DiagnosticsRecord], out: W) -> Result<()> {
    let s_values: Vec<f64> = records.first().map(|r| r.hs_norms.iter().map(|x| x.0).collect()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(DiagnosticsRecord::header(&s_values))?;
    for r in records {
        w.write_record(r.row())?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct DriftRow {
    pub t: f64,
    pub e0: f64,
    /// `(E₀ − E₀(0)) / E₀(0)`.
    pub rel_drift: f64,
    /// `(dE₀/dt) / (𝒜²_{♯,7/4} E₀)`, by finite differences between snapshots.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DriftReport {
    pub rows: Vec<DriftRow>,
    pub max_rel_drift: f64,
    pub max_abs_ratio: f64,
}

pub fn drift_report(records: &[DiagnosticsRecord]) -> DriftReport {
    let e00 = records.first().map(|r| r.e0).unwrap_or(0.0);
    let n = records.len();
    let rows: Vec<DriftRow> = records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let ratio = (n >= 2).then(|| {
                let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n - 1));
                let dt = records[hi].t - records[lo].t;
                let d = (records[hi].e0 - records[lo].e0) / dt;
                d / (r.a_sharp_74 * r.a_sharp_74 * r.e0)
            });
            DriftRow {
                t: r.t,
                e0: r.e0,
                rel_drift: if e00 != 0.0 { (r.e0 - e00) / e00 } else { 0.0 },
                ratio: ratio.filter(|x| x.is_finite()),
            }
        })
        .collect();
    let max_rel_drift = rows.iter().map(|r| r.rel_drift.abs()).fold(0.0, f64::max);
    let max_abs_ratio = rows.iter().filter_map(|r| r.ratio).map(f64::abs).fold(0.0, f64::max);
    DriftReport { rows, max_rel_drift, max_abs_ratio }
}
