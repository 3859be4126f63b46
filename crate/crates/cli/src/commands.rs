//! The commands, and the checks behind them as reusable functions.

use crate::config::{RunConfig, Target};
use crate::{CliError, Command, Out, EXIT_GUARD, EXIT_MISMATCH, EXIT_OK};
use energetics::{
    drift_report, energy_e0, energy_e3cor, energy_norm_sq, write_csv, CubicSymbols, DiagnosticsConfig,
    DiagnosticsRecord,
};
use hydro_model::{guard, GuardThresholds, HoloState, LinState, Model};
use paracalc::{control_norms, pair_norm, SpaceSpec, EPS, EPS_SHARP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;
use spectral_core::{Complex64, ComplexField, SpectralGrid};
use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;
use timestepper::{evolve, evolve_tangent, read_snapshot, read_snapshot_json, write_snapshot, write_snapshot_json};
use timestepper::{Dt, IntegratorConfig, StepError};

pub fn execute(cmd: Command, cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    match cmd {
        Command::Simulate => simulate(cfg, out),
        Command::LinearizeCheck => linearize_check(cfg, out),
        Command::Dispersion => dispersion(cfg, out),
        Command::Norms => norms(cfg, out),
        Command::VerifySymbols => verify_symbols(out),
        Command::VerifyResonance => verify_resonance(out),
        Command::ScalingTest => scaling_test(cfg, out),
        Command::EnergyReport => energy_report(cfg, out),
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn grid(cfg: &RunConfig) -> Result<SpectralGrid, CliError> {
    Ok(SpectralGrid::new(cfg.n_modes, cfg.period)?)
}

fn read_initial(path: &Path) -> Result<HoloState, CliError> {
    let f = BufReader::new(File::open(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?);
    let s = if path.extension().is_some_and(|e| e == "json") { read_snapshot_json(f) } else { read_snapshot(f) };
    s.map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// The initial state named by the configuration.
pub fn initial_state(cfg: &RunConfig) -> Result<HoloState, CliError> {
    if let Some(p) = &cfg.initial_file {
        return read_initial(p);
    }
    let g = grid(cfg)?;
    let mut w = ComplexField::zeros(g);
    let mut r = ComplexField::zeros(g);
    if cfg.w_modes.is_empty() && cfg.r_modes.is_empty() {
        let f = if cfg.target == Target::W { &mut w } else { &mut r };
        place(f, cfg.mode, c(cfg.amplitude, 0.0))?;
    } else {
        for &(k, re, im) in &cfg.w_modes {
            place(&mut w, k, c(re, im))?;
        }
        for &(k, re, im) in &cfg.r_modes {
            place(&mut r, k, c(re, im))?;
        }
    }
    Ok(HoloState::new(w, r)?)
}

fn place(f: &mut ComplexField, k: i64, v: Complex64) -> Result<(), CliError> {
    if f.grid().index_of(k).is_none() {
        return Err(CliError::Config(format!("wavenumber {k} is not resolved")));
    }
    f.set_mode(k, f.mode(k) + v);
    Ok(())
}

pub fn integrator(cfg: &RunConfig) -> IntegratorConfig {
    IntegratorConfig {
        dt: Dt::Fixed(cfg.dt),
        t_final: cfg.t_final,
        scheme: cfg.scheme,
        snapshot_every: cfg.snapshot_every,
        project_holo: cfg.project_holo,
        ..IntegratorConfig::default()
    }
}

/// Seeded holomorphic pair with decaying spectrum and mean-free velocity part.
pub fn random_pair(g: SpectralGrid, seed: u64) -> LinState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kmax = (g.k_max() / 2).clamp(1, 32);
    let mut w = ComplexField::zeros(g);
    let mut r = ComplexField::zeros(g);
    for k in 1..=kmax {
        let (aw, ar) = ((k as f64).powi(-2), (k as f64).powf(-0.5));
        w.set_mode(-k, c(rng.gen_range(-aw..aw), rng.gen_range(-aw..aw)));
        r.set_mode(-k, c(rng.gen_range(-ar..ar), rng.gen_range(-ar..ar)));
    }
    LinState::new(w, r).expect("same grid")
}

fn step_error(e: &StepError) -> (i32, String) {
    match e {
        StepError::Guard(v) => (EXIT_GUARD, v.to_string()),
        e => (crate::EXIT_FAILURE, e.to_string()),
    }
}

fn simulate(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let s0 = initial_state(cfg)?;
    let icfg = integrator(cfg);
    let dcfg = DiagnosticsConfig::default();
    let mut n_snap = 0usize;
    let mut io_err: Option<CliError> = None;
    let traj = evolve(&s0, &icfg, |s, step| {
        let name = format!("snapshot_{step}.bin");
        let res = out.file(&name).map_err(CliError::from).and_then(|f| Ok(write_snapshot(s, f)?));
        let res = res.and_then(|_| {
            if cfg.json_snapshots {
                let f = out.file(&format!("snapshot_{step}.json"))?;
                write_snapshot_json(s, f)?;
            }
            Ok(())
        });
        if let Err(e) = res {
            io_err.get_or_insert(e);
        }
        n_snap += 1;
        DiagnosticsRecord::new(s, None, &dcfg)
    })?;
    if let Some(e) = io_err {
        return Err(e);
    }
    let records = traj.records.into_iter().collect::<Result<Vec<_>, _>>()?;
    write_csv(&records, out.file("diagnostics.csv")?)?;
    let drift = drift_report(&records);
    let (code, status) = match &traj.error {
        None => (EXIT_OK, "completed".to_string()),
        Some(e) => step_error(e),
    };
    let last = records.last().expect("initial record");
    let summary = json!({
        "command": "simulate",
        "status": status,
        "steps": traj.steps,
        "t_reached": traj.last.t,
        "snapshots": n_snap,
        "e0_initial": records[0].e0,
        "e0_final": last.e0,
        "max_rel_drift_e0": drift.max_rel_drift,
        "max_abs_drift_ratio": drift.max_abs_ratio,
        "min_abs_1plus_w_final": last.min_abs_1plus_w,
    });
    out.write_json("summary.json", &summary)?;
    let mut rep = String::new();
    writeln!(rep, "simulate: n = {}, T = {}, dt = {}, scheme = {:?}", cfg.n_modes, cfg.t_final, cfg.dt, cfg.scheme).unwrap();
    writeln!(rep, "status: {status}").unwrap();
    writeln!(rep, "steps: {}, t reached: {}", traj.steps, traj.last.t).unwrap();
    writeln!(rep, "E0: {:.12e} -> {:.12e} (max relative drift {:.3e})", records[0].e0, last.e0, drift.max_rel_drift).unwrap();
    writeln!(rep, "max |(dE0/dt)/(A_sharp_74^2 E0)|: {:.3e}", drift.max_abs_ratio).unwrap();
    out.write_text("report_simulate.txt", &rep)?;
    Ok(code)
}

/// Closed-form linear flow of one mode: with `ω = |κ|^{5/2}`,
/// `ŵ(t) = cos ωt ŵ₀ − iκ (sin ωt/ω) r̂₀`, `r̂(t) = iκ⁴ (sin ωt/ω) ŵ₀ + cos ωt r̂₀`.
pub fn single_mode_exact(kappa: f64, w0: Complex64, r0: Complex64, t: f64) -> (Complex64, Complex64) {
    let om = kappa.abs().powf(2.5);
    let (co, sinc) = if om == 0.0 { (1.0, t) } else { ((om * t).cos(), (om * t).sin() / om) };
    let i = Complex64::i();
    (w0 * co - i * kappa * sinc * r0, i * kappa.powi(4) * sinc * w0 + r0 * co)
}

#[derive(Clone, Debug)]
pub struct DispersionRow {
    pub t: f64,
    pub w: Complex64,
    pub w_exact: Complex64,
    pub r: Complex64,
    pub r_exact: Complex64,
    /// Largest modulus of the difference over all modes.
    pub max_error: f64,
    pub e0: f64,
}

/// Linear single-mode run compared with [`single_mode_exact`] at every snapshot.
pub fn dispersion_run(s0: &HoloState, k: i64, icfg: &IntegratorConfig) -> Result<Vec<DispersionRow>, CliError> {
    let g = s0.grid();
    let kappa = g.scale() * k as f64;
    let (w0, r0) = (s0.w.mode(k), s0.r.mode(k));
    let traj = evolve(s0, icfg, |s, _| {
        let (we, re) = single_mode_exact(kappa, w0, r0, s.t - s0.t);
        let mut ew = s.w.clone();
        let mut er = s.r.clone();
        ew.set_mode(k, ew.mode(k) - we);
        er.set_mode(k, er.mode(k) - re);
        DispersionRow {
            t: s.t,
            w: s.w.mode(k),
            w_exact: we,
            r: s.r.mode(k),
            r_exact: re,
            max_error: ew.max_mode_abs().max(er.max_mode_abs()),
            e0: energy_e0(&s.w, &s.r),
        }
    })?;
    if let Some(e) = traj.error {
        return Err(e.into());
    }
    Ok(traj.records)
}

fn dispersion(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let s0 = initial_state(cfg)?;
    let icfg = IntegratorConfig { snapshot_every: cfg.snapshot_every, ..IntegratorConfig::linear(cfg.dt, cfg.t_final) };
    let rows = dispersion_run(&s0, cfg.mode, &icfg)?;
    let mut f = out.file("dispersion.csv")?;
    let mut text = String::from("t,W_re,W_im,W_exact_re,W_exact_im,R_re,R_im,R_exact_re,R_exact_im,max_abs_error,E0\n");
    for r in &rows {
        writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.t, r.w.re, r.w.im, r.w_exact.re, r.w_exact.im, r.r.re, r.r.im, r.r_exact.re, r.r_exact.im, r.max_error, r.e0
        )
        .unwrap();
    }
    std::io::Write::write_all(&mut f, text.as_bytes())?;
    drop(f);
    let last = rows.last().expect("final row");
    let e00 = rows[0].e0;
    let e0_drift = rows.iter().map(|r| (r.e0 - e00).abs()).fold(0.0, f64::max) / e00.max(f64::MIN_POSITIVE);
    let omega = (grid(cfg)?.scale() * cfg.mode as f64).abs().powf(2.5);
    out.write_json(
        "summary.json",
        &json!({
            "command": "dispersion",
            "k": cfg.mode,
            "omega": omega,
            "t_final": last.t,
            "final_max_abs_error": last.max_error,
            "max_rel_e0_drift": e0_drift,
        }),
    )?;
    let rep = format!(
        "dispersion: k = {}, angular frequency {omega}, T = {}\nfinal max |error| over modes: {:.3e}\nmax relative E0 drift: {:.3e}\n",
        cfg.mode, last.t, last.max_error, e0_drift
    );
    out.write_text("report_dispersion.txt", &rep)?;
    Ok(EXIT_OK)
}

fn norms(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let s = initial_state(cfg)?;
    let s_values = [0.0, 1.0, 1.75];
    let cn = control_norms(&s.w, &s.r, EPS, EPS_SHARP, &s_values);
    let hs = [0.0, 1.0]
        .iter()
        .map(|&x| Ok((x, pair_norm(&s.w, &s.r, SpaceSpec::Product { s: x })?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let g = guard(&s, &GuardThresholds::default());
    let e0 = energy_e0(&s.w, &s.r);
    let mut rep = String::from("norms of the initial data\n");
    for n in &cn {
        writeln!(rep, "  s = {:<5} A_s = {:.6e}  A_sharp_s = {:.6e}", n.s, n.a, n.a_sharp).unwrap();
    }
    for (x, v) in &hs {
        writeln!(rep, "  product H^{x} norm = {v:.6e}").unwrap();
    }
    writeln!(rep, "  E0 = {e0:.12e}\n  min|1+W| = {:.6e}\n  leakage = {:.3e}", g.min_abs_1pw, g.leakage).unwrap();
    out.write_text("report_norms.txt", &rep)?;
    out.write_json(
        "summary.json",
        &json!({
            "command": "norms",
            "control": cn.iter().map(|n| json!({"s": n.s, "a": n.a, "a_sharp": n.a_sharp})).collect::<Vec<_>>(),
            "hs": hs.iter().map(|(x, v)| json!({"s": x, "norm": v})).collect::<Vec<_>>(),
            "e0": e0,
            "min_abs_1plus_w": g.min_abs_1pw,
            "leakage": g.leakage,
        }),
    )?;
    Ok(EXIT_OK)
}

fn verify_symbols(out: &mut Out) -> Result<i32, CliError> {
    use symbol_verify::verify::SummaryRow;
    let reports = symbol_verify::verify_all().map_err(|e| CliError::Other(e.to_string()))?;
    let mut rows = Vec::new();
    for r in &reports {
        out.write_text(&format!("report_{}.txt", r.id), &r.text())?;
        let s = SummaryRow::from(r);
        rows.push(json!({
            "id": s.id,
            "residual_zero": s.residual_zero,
            "claims_checked": s.claims_checked,
            "claims_agreeing": s.claims_agreeing,
            "printed_mismatches": s.printed_mismatches,
            "printed_resolved": s.printed_resolved,
            "denominators_clean": s.denominators_clean,
        }));
    }
    let checked: usize = reports.iter().map(|r| r.claims_checked()).sum();
    let agree: usize = reports.iter().map(|r| r.claims_agreeing()).sum();
    out.write_json(
        "summary.json",
        &json!({
            "command": "verify-symbols",
            "systems": reports.len(),
            "all_residuals_zero": reports.iter().all(|r| r.residual_zero && r.spot_residual_zero),
            "claims_checked": checked,
            "claims_agreeing": agree,
            "rows": rows,
        }),
    )?;
    Ok(EXIT_OK)
}

fn verify_resonance(out: &mut Out) -> Result<i32, CliError> {
    use symbol_verify::resonance::{four_wave_scan, three_wave_identity, Lattice};
    let three = three_wave_identity();
    let four = four_wave_scan(&Lattice::default());
    out.write_text("report_three_wave.txt", &three.text())?;
    out.write_text("report_four_wave.txt", &four.text())?;
    out.write_json(
        "summary.json",
        &json!({
            "command": "verify-resonance",
            "three_wave_passed": three.passed(),
            "identity_residual_zero": three.identity_residual.is_zero(),
            "value_at_one": three.lhs_at_one.to_string(),
            "findings": three.findings(),
            "four_wave_passed": four.passed(),
            "unpaired_checked": four.unpaired_checked,
            "paired_checked": four.paired_checked,
        }),
    )?;
    Ok(if three.passed() && four.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

/// `‖Φ(bg+εδ₀) − Φ(bg) − ε δ_T‖_{ℋ⁰}` for each `ε`, where `δ_T` is the
/// linearized flow of `pair` mapped to a state perturbation.
pub fn linearization_errors(
    bg: &HoloState,
    pair: &LinState,
    icfg: &IntegratorConfig,
    eps: &[f64],
) -> Result<Vec<f64>, CliError> {
    let delta = Model::default().delta;
    let (bt, lt) = evolve_tangent(bg, pair, icfg)?;
    let (dw_t, dr_t) = lt.state_perturbation(&bt, delta)?;
    let (dw0, dr0) = pair.state_perturbation(bg, delta)?;
    let run = |s: &HoloState| -> Result<HoloState, CliError> {
        let t = evolve(s, icfg, |_, _| ())?;
        match t.error {
            Some(e) => Err(e.into()),
            None => Ok(t.last),
        }
    };
    let base = run(bg)?;
    eps.par_iter()
        .map(|&e| {
            let p = run(&bg.offset(e, &dw0, &dr0))?;
            let ew = &(&p.w - &base.w) - &dw_t.scale_re(e);
            let er = &(&p.r - &base.r) - &dr_t.scale_re(e);
            Ok(pair_norm(&ew, &er, SpaceSpec::Product { s: 0.0 })?)
        })
        .collect()
}

fn linearize_check(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let bg = initial_state(cfg)?;
    let pair = random_pair(bg.grid(), cfg.seed);
    let steps = (cfg.t_final / cfg.dt).ceil().max(1.0) as usize;
    let icfg = IntegratorConfig { dt: Dt::Steps(steps), ..integrator(cfg) };
    let eps = [1e-2, 5e-3, 2.5e-3];
    let errs = linearization_errors(&bg, &pair, &icfg, &eps)?;
    let orders: Vec<f64> = errs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    let mut rep = format!("linearization check: T = {}, {steps} steps\n", cfg.t_final);
    for (e, r) in eps.iter().zip(&errs) {
        writeln!(rep, "  eps = {e:.3e}: error {r:.6e}").unwrap();
    }
    writeln!(rep, "  observed orders: {orders:?}").unwrap();
    out.write_text("report_linearize.txt", &rep)?;
    out.write_json(
        "summary.json",
        &json!({"command": "linearize-check", "eps": eps, "errors": errs, "orders": orders}),
    )?;
    Ok(EXIT_OK)
}

/// Mode `k ↦ λk` on a `λ`-times finer grid; `R` gains the factor `λ^{3/2}`.
pub fn rescale(s: &HoloState, lambda: u32) -> HoloState {
    let g = s.grid();
    let fine = g.refined(lambda as usize);
    let l = lambda as i64;
    let amp = (lambda as f64).powf(1.5);
    let mut w = ComplexField::zeros(fine);
    let mut r = ComplexField::zeros(fine);
    for i in 0..g.n_modes() {
        let k = g.wavenumber(i);
        if fine.index_of(l * k).is_some() {
            w.set_mode(l * k, s.w.mode(k));
            r.set_mode(l * k, s.r.mode(k) * amp);
        }
    }
    HoloState { w, r, t: s.t }
}

/// Relative `ℋ⁰` distance between the rescaled run (over `T/λ^{5/2}`) and
/// the rescaled reference run (over `T`), with equal step counts.
pub fn scaling_error(s: &HoloState, lambda: u32, t_final: f64, steps: usize, base: &IntegratorConfig) -> Result<f64, CliError> {
    let finish = |s: &HoloState, t: f64| -> Result<HoloState, CliError> {
        let cfg = IntegratorConfig { dt: Dt::Steps(steps), t_final: t, ..base.clone() };
        let tr = evolve(s, &cfg, |_, _| ())?;
        match tr.error {
            Some(e) => Err(e.into()),
            None => Ok(tr.last),
        }
    };
    let (reference, scaled) = rayon::join(
        || finish(s, t_final),
        || finish(&rescale(s, lambda), t_final / (lambda as f64).powf(2.5)),
    );
    let want = rescale(&reference?, lambda);
    let got = scaled?;
    let e = pair_norm(&(&got.w - &want.w), &(&got.r - &want.r), SpaceSpec::Product { s: 0.0 })?;
    Ok(e / pair_norm(&want.w, &want.r, SpaceSpec::Product { s: 0.0 })?)
}

fn scaling_test(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let s = initial_state(cfg)?;
    let steps = (cfg.t_final / cfg.dt).ceil().max(1.0) as usize;
    let err = scaling_error(&s, cfg.lambda, cfg.t_final, steps, &integrator(cfg))?;
    out.write_text(
        "report_scaling.txt",
        &format!("scaling test: lambda = {}, T = {}, {steps} steps\nrelative product-H^0 error: {err:.3e}\n", cfg.lambda, cfg.t_final),
    )?;
    out.write_json("summary.json", &json!({"command": "scaling-test", "lambda": cfg.lambda, "relative_error": err}))?;
    Ok(EXIT_OK)
}

fn energy_report(cfg: &RunConfig, out: &mut Out) -> Result<i32, CliError> {
    let bg = initial_state(cfg)?;
    let pair = random_pair(bg.grid(), cfg.seed);
    let dcfg = DiagnosticsConfig::default();
    let rec = DiagnosticsRecord::new(&bg, Some(&pair), &dcfg)?;
    let lead = energy_e3cor(&bg, &pair.w, &pair.r, &CubicSymbols::leading(), &dcfg.cutoff)?;
    let nrm = energy_norm_sq(&pair.w, &pair.r);
    write_csv(std::slice::from_ref(&rec), out.file("diagnostics.csv")?)?;
    let elin = rec.elin.unwrap_or(f64::NAN);
    let e3 = rec.e3cor.unwrap_or(f64::NAN);
    let mut rep = String::from("energies of a random linearized pair\n");
    writeln!(rep, "  background: A0 = {:.6e}, A_sharp_74 = {:.6e}, min|1+W| = {:.6e}", rec.a0, rec.a_sharp_74, rec.min_abs_1plus_w).unwrap();
    writeln!(rep, "  pair norm^2 = {nrm:.12e}").unwrap();
    writeln!(rep, "  Elin = {elin:.12e}  (|Elin - norm^2| / (A0 norm^2) = {:.3e})", (elin - nrm).abs() / (rec.a0 * nrm)).unwrap();
    writeln!(rep, "  E3cor = {e3:.12e}  (leading symbols: {lead:.12e})").unwrap();
    writeln!(rep, "  E42cor = {:?}", rec.e42cor).unwrap();
    out.write_text("report_energy.txt", &rep)?;
    out.write_json(
        "summary.json",
        &json!({
            "command": "energy-report",
            "a0": rec.a0,
            "norm_sq": nrm,
            "elin": elin,
            "e3cor": e3,
            "e3cor_leading": lead,
            "e42cor": rec.e42cor,
        }),
    )?;
    Ok(EXIT_OK)
}
