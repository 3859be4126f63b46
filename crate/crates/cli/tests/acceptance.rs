//! Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.
//!
//! Criterion 2 is expected to fail: three leading-order claims disagree with
//! the exact solution of their systems. The process exits non-zero only if
//! some other criterion fails.

use energetics::{energy_e0, energy_elin, energy_norm_sq};
use hydro_cli::commands::{dispersion_run, linearization_errors, scaling_error};
use hydro_model::{HoloState, LinState};
use paracalc::{chi, control_norms, pair_norm, paraproduct, psi, CutoffParams, SpaceSpec, EPS, EPS_SHARP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_core::{Complex64, ComplexField, SpectralGrid};
use std::time::{Duration, Instant};
use symbol_verify::resonance::{four_wave_scan, three_wave_identity, Lattice};
use timestepper::{evolve, Dt, IntegratorConfig};

/// Criteria whose failure is a documented finding rather than a defect.
const EXPECTED_FAIL: &[usize] = &[2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn c(a: f64, b: f64) -> Complex64 {
    Complex64::new(a, b)
}

fn grid(n: usize) -> SpectralGrid {
    SpectralGrid::standard(n).unwrap()
}

fn within(t: Duration, limit_s: f64) -> bool {
    t.as_secs_f64() < limit_s
}

fn crit1() -> Outcome {
    let t0 = Instant::now();
    let r = three_wave_identity();
    let dt = t0.elapsed();
    let ok = r.identity_residual.is_zero() && r.lhs_at_one == r.rhs_at_one && r.lhs_at_one.to_string() == "896";
    Outcome {
        pass: ok && within(dt, 1.0),
        detail: format!(
            "residual zero: {}, value at (1,1): {} (want 896), {:.3}s < 1s",
            r.identity_residual.is_zero(),
            r.lhs_at_one,
            dt.as_secs_f64()
        ),
    }
}

fn crit2() -> Outcome {
    use symbol_verify::verify::ClaimVerdict;
    let t0 = Instant::now();
    let reports = symbol_verify::verify_all().expect("catalog verifies");
    let dt = t0.elapsed();
    let residuals = reports.iter().all(|r| r.residual_zero && r.spot_residual_zero);
    let checked: usize = reports.iter().map(|r| r.claims_checked()).sum();
    let agree: usize = reports.iter().map(|r| r.claims_agreeing()).sum();
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.unknowns.iter().filter_map(move |u| match &u.verdict {
                ClaimVerdict::Disagrees(why) => Some(format!("{}.{}: {why}", r.id, u.name)),
                _ => None,
            })
        })
        .collect();
    Outcome {
        pass: residuals && reports.len() == 14 && agree == checked && within(dt, 30.0),
        detail: format!(
            "{} systems, all residuals zero: {residuals}; leading claims agreeing {agree}/{checked}; {:.2}s < 30s; disagreements: [{}]",
            reports.len(),
            dt.as_secs_f64(),
            bad.join("; ")
        ),
    }
}

fn crit3() -> Outcome {
    let t0 = Instant::now();
    let n = 256;
    let s0 = HoloState::new(ComplexField::single_mode(grid(n), -2, c(1.0, 0.0)), ComplexField::zeros(grid(n))).unwrap();
    let cfg = IntegratorConfig { snapshot_every: 10, ..IntegratorConfig::linear(1e-2, 1.0) };
    let rows = dispersion_run(&s0, -2, &cfg).unwrap();
    let dt = t0.elapsed();
    let last = rows.last().unwrap();
    let e00 = rows[0].e0;
    let drift = rows.iter().map(|r| (r.e0 - e00).abs() / e00).fold(0.0, f64::max);
    // the reference frequency is 2^{5/2}
    let w_ref = c((32f64.sqrt() * last.t).cos(), 0.0);
    let freq_ok = (w_ref - last.w_exact).norm() < 1e-14;
    Outcome {
        pass: last.max_error <= 1e-10 && drift <= 1e-12 && freq_ok && within(dt, 5.0),
        detail: format!(
            "final error {:.2e} <= 1e-10, E0 relative drift {:.2e} <= 1e-12, {:.3}s < 5s",
            last.max_error,
            drift,
            dt.as_secs_f64()
        ),
    }
}

/// `Π(a,u)` as a direct double sum with the complementary weight
/// `1 − χ(θ,η)ψ(η) − χ(η,θ)ψ(θ)`, where `θ` is the frequency of `a`.
fn balanced_direct(a: &ComplexField, u: &ComplexField, p: &CutoffParams) -> ComplexField {
    let g = *a.grid();
    let mut out = ComplexField::zeros(g);
    let zero = c(0.0, 0.0);
    for (i, &av) in a.modes().iter().enumerate() {
        if av == zero {
            continue;
        }
        let th = g.kappa(i);
        for (j, &uv) in u.modes().iter().enumerate() {
            if uv == zero {
                continue;
            }
            let eta = g.kappa(j);
            let wgt = 1.0 - chi(p, th, eta) * psi(p, eta) - chi(p, eta, th) * psi(p, th);
            if let Some(o) = g.index_of(g.wavenumber(i) + g.wavenumber(j)) {
                out.modes_mut()[o] += av * uv * wgt;
            }
        }
    }
    out
}

fn random_resolved(rng: &mut ChaCha8Rng, g: SpectralGrid, kcut: i64, decay: f64) -> ComplexField {
    let mut f = ComplexField::zeros(g);
    for k in -kcut..=kcut {
        let amp = (1.0 + k.abs() as f64).powf(-decay);
        f.set_mode(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * amp);
    }
    f
}

fn crit4() -> Outcome {
    let t0 = Instant::now();
    let g = grid(512);
    let p = CutoffParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        // |k| ≤ 128 keeps every product mode resolved
        let a = random_resolved(&mut rng, g, 128, 1.0);
        let u = random_resolved(&mut rng, g, 128, 0.5);
        let lhs = a.product(&u);
        let mut rhs = paraproduct(&a, &u, &p).unwrap();
        rhs += &paraproduct(&u, &a, &p).unwrap();
        rhs += &balanced_direct(&a, &u, &p);
        worst = worst.max((&lhs - &rhs).l2_norm() / lhs.l2_norm());
    }
    Outcome {
        pass: worst <= 1e-13,
        detail: format!("100 pairs at n=512, worst relative defect {worst:.2e} <= 1e-13, {:.2}s", t0.elapsed().as_secs_f64()),
    }
}

fn e0_drift(eps: f64) -> f64 {
    let g = grid(256);
    let w = ComplexField::single_mode(g, -1, c(eps, 0.0));
    let r = ComplexField::single_mode(g, -1, c(0.0, eps));
    let s0 = HoloState::new(w, r).unwrap();
    let cfg = IntegratorConfig { dt: Dt::Fixed(1e-3), t_final: 1.0, snapshot_every: 10, ..Default::default() };
    let tr = evolve(&s0, &cfg, |s, _| energy_e0(&s.w, &s.r)).unwrap();
    assert!(tr.completed());
    let e00 = tr.records[0];
    tr.records.iter().map(|e| (e - e00).abs() / e00).fold(0.0, f64::max)
}

fn crit5() -> Outcome {
    let t0 = Instant::now();
    let (d1, d2) = rayon::join(|| e0_drift(1e-2), || e0_drift(5e-3));
    let ratio = d1 / d2;
    let dt = t0.elapsed();
    Outcome {
        pass: (2.8..=5.7).contains(&ratio) && within(dt, 120.0),
        detail: format!(
            "max relative E0 drift {d1:.3e} (eps=1e-2) / {d2:.3e} (eps=5e-3) = {ratio:.4} in [2.8, 5.7], {:.2}s < 120s",
            dt.as_secs_f64()
        ),
    }
}

fn crit6() -> Outcome {
    let t0 = Instant::now();
    let g = grid(64);
    let mut bw = ComplexField::zeros(g);
    let mut br = ComplexField::zeros(g);
    bw.set_mode(-1, c(0.02, 0.0));
    bw.set_mode(-2, c(0.0, 0.01));
    br.set_mode(-1, c(0.0, 0.02));
    br.set_mode(-3, c(0.005, 0.0));
    let bg = HoloState::new(bw, br).unwrap();
    let mut lw = ComplexField::zeros(g);
    let mut lr = ComplexField::zeros(g);
    lw.set_mode(-2, c(1.0, 0.0));
    lw.set_mode(-1, c(0.0, 0.5));
    lr.set_mode(-1, c(0.5, 0.0));
    lr.set_mode(-4, c(0.0, 0.2));
    let pair = LinState::new(lw, lr).unwrap();
    let cfg = IntegratorConfig { dt: Dt::Steps(100), t_final: 0.1, ..Default::default() };
    let errs = linearization_errors(&bg, &pair, &cfg, &[1e-2, 5e-3, 2.5e-3]).unwrap();
    let orders: Vec<f64> = errs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    let dt = t0.elapsed();
    let min = orders.iter().copied().fold(f64::INFINITY, f64::min);
    Outcome {
        pass: min >= 1.9 && within(dt, 120.0),
        detail: format!("T=0.1, orders {:.4} {:.4} >= 1.9, {:.2}s < 120s", orders[0], orders[1], dt.as_secs_f64()),
    }
}

fn crit7() -> Outcome {
    let t0 = Instant::now();
    let g = grid(128);
    let mut w = ComplexField::zeros(g);
    let mut r = ComplexField::zeros(g);
    w.set_mode(-1, c(0.02, 0.0));
    w.set_mode(-2, c(0.0, 0.01));
    r.set_mode(-1, c(0.0, 0.02));
    r.set_mode(-2, c(0.01, 0.0));
    let s = HoloState::new(w, r).unwrap();
    let err = scaling_error(&s, 2, 0.5, 500, &IntegratorConfig::default()).unwrap();
    let dt = t0.elapsed();
    Outcome {
        pass: err <= 1e-8 && within(dt, 120.0),
        detail: format!("lambda=2, n=128 vs 256, relative H0 error {err:.2e} <= 1e-8, {:.2}s < 120s", dt.as_secs_f64()),
    }
}

fn random_holo(rng: &mut ChaCha8Rng, g: SpectralGrid, kmax: i64, decay: f64) -> ComplexField {
    let mut f = ComplexField::zeros(g);
    for k in 1..=kmax {
        let a = (k as f64).powf(-decay);
        f.set_mode(-k, c(rng.gen_range(-a..a), rng.gen_range(-a..a)));
    }
    f
}

fn crit8() -> Outcome {
    let t0 = Instant::now();
    let g = grid(128);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cut = CutoffParams::default();
    let (mut worst, mut worst_inhom): (f64, f64) = (0.0, 0.0);
    let mut max_a0: f64 = 0.0;
    for _ in 0..50 {
        let (w0, r0) = (random_holo(&mut rng, g, 6, 1.0), random_holo(&mut rng, g, 6, 0.0));
        let a = control_norms(&w0, &r0, EPS, EPS_SHARP, &[0.0])[0].a;
        let target = rng.gen_range(0.005..0.1);
        let bg = HoloState::new(w0.scale_re(target / a), r0.scale_re(target / a)).unwrap();
        let a0 = control_norms(&bg.w, &bg.r, EPS, EPS_SHARP, &[0.0])[0].a;
        max_a0 = max_a0.max(a0);
        let (w, r) = (random_holo(&mut rng, g, 40, 2.0), random_holo(&mut rng, g, 40, 0.5));
        let e = energy_elin(&bg, &w, &r, &cut).unwrap();
        let n = energy_norm_sq(&w, &r);
        worst = worst.max((e - n).abs() / (a0 * n));
        let ni = pair_norm(&w, &r, SpaceSpec::Product { s: 0.0 }).unwrap().powi(2);
        worst_inhom = worst_inhom.max((e - ni).abs() / (a0 * ni));
    }
    let dt = t0.elapsed();
    Outcome {
        pass: worst <= 5.0 && max_a0 <= 0.1 + 1e-12 && within(dt, 60.0),
        detail: format!(
            "50 backgrounds, max A0 {max_a0:.3}, worst |Elin-N|/(A0 N) = {worst:.3} <= 5 with N = sum (1+|k|^3)|w_k|^2 + |r_k|^2 \
             (with the (1+k^2)^(3/2) weight: {worst_inhom:.1}), {:.2}s < 60s",
            dt.as_secs_f64()
        ),
    }
}

fn crit9() -> Outcome {
    let t0 = Instant::now();
    let r = four_wave_scan(&Lattice::default());
    let dt = t0.elapsed();
    Outcome {
        pass: r.passed() && r.unpaired_checked >= 1000 && within(dt, 10.0),
        detail: format!(
            "{} unpaired triples, {} vanishing; {} paired, {} without exact zero; {:.2}s < 10s",
            r.unpaired_checked,
            r.unpaired_vanishing.len(),
            r.paired_checked,
            r.paired_without_zero.len(),
            dt.as_secs_f64()
        ),
    }
}

fn main() {
    let checks: [(&str, fn() -> Outcome); 9] = [
        ("resonance identity", crit1),
        ("symbol systems", crit2),
        ("linear dispersion", crit3),
        ("paraproduct partition", crit4),
        ("energy drift scaling", crit5),
        ("linearization consistency", crit6),
        ("scaling equivariance", crit7),
        ("E_lin norm equivalence", crit8),
        ("four-wave scan", crit9),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        let n = i + 1;
        let o = f();
        println!("criterion {n} {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass && !EXPECTED_FAIL.contains(&n) {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected failure(s)");
        std::process::exit(1);
    }
}
