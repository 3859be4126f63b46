use hydro_model::{HoloState, Model};
use spectral_core::{Complex64, ComplexField, SpectralGrid};
use std::f64::consts::PI;
use timestepper::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn grid(n: usize) -> SpectralGrid {
    SpectralGrid::standard(n).unwrap()
}

fn mode(g: SpectralGrid, k: i64, amp: Complex64) -> ComplexField {
    ComplexField::single_mode(g, k, amp)
}

fn state(w: ComplexField, r: ComplexField) -> HoloState {
    HoloState::new(w, r).unwrap()
}

fn mat_close(a: &Mat2, b: &Mat2, tol: f64) -> bool {
    (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).norm() <= tol))
}

fn mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut m = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

const ID: Mat2 = [[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]];

/// `Σ(|κ|³|ŵ|² + |r̂|²)·period`.
fn e0(s: &HoloState) -> f64 {
    let g = s.grid();
    let sum: f64 = (0..g.n_modes())
        .map(|i| g.kappa(i).abs().powi(3) * s.w.modes()[i].norm_sqr() + s.r.modes()[i].norm_sqr())
        .sum();
    sum * g.period()
}

fn diff(a: &HoloState, b: &HoloState) -> f64 {
    (&a.w - &b.w).l2_norm().hypot((&a.r - &b.r).l2_norm())
}

#[test]
fn unit_mode_has_period_two_pi() {
    let g = grid(16);
    let p = build_propagator(g, 2.0 * PI);
    assert!(mat_close(&p.e[g.index_of(-1).unwrap()], &ID, 1e-12));
    assert!(mat_close(&p.e[g.index_of(0).unwrap()], &ID, 0.0));
}

#[test]
fn eigenfrequencies_of_mode_minus_four() {
    let g = grid(32);
    for h in [0.01, 0.3, 1.7] {
        let e = build_propagator(g, h).e[g.index_of(-4).unwrap()];
        let trace = e[0][0] + e[1][1];
        let det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
        assert!((trace - c(2.0 * (32.0 * h).cos(), 0.0)).norm() < 1e-12);
        assert!((det - c(1.0, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn propagator_is_unitary_in_the_energy_inner_product() {
    let g = grid(64);
    let p = build_propagator(g, 0.0137);
    for i in 0..g.n_modes() {
        if g.wavenumber(i) >= 0 {
            continue;
        }
        let k3 = g.kappa(i).abs().powi(3);
        let e = p.e[i];
        // Eᴴ D E = D with D = diag(|κ|³, 1), scaled by |κ|³
        for (a, b) in [(0, 0), (0, 1), (1, 1)] {
            let v = e[0][a].conj() * k3 * e[0][b] + e[1][a].conj() * e[1][b];
            let want = match (a, b) {
                (0, 0) => k3,
                (1, 1) => 1.0,
                _ => 0.0,
            };
            assert!((v - c(want, 0.0)).norm() <= 1e-12 * k3, "k={} ({a},{b})", g.wavenumber(i));
        }
    }
}

#[test]
fn time_reversal() {
    let g = grid(64);
    let (fwd, back) = (linear_flow(&g, 0.01), linear_flow(&g, -0.01));
    for i in 0..g.n_modes() {
        assert!(mat_close(&mul(&fwd[i], &back[i]), &ID, 1e-12), "k={}", g.wavenumber(i));
    }
}

#[test]
fn zero_state_stays_zero() {
    let g = grid(32);
    let out = step(&HoloState::zero(g), 1e-3, &IntegratorConfig::default()).unwrap();
    assert_eq!(out.w.max_mode_abs() + out.r.max_mode_abs(), 0.0);
}

#[test]
fn linear_step_is_the_propagator() {
    let g = grid(64);
    let s = state(mode(g, -3, c(0.2, 0.1)), mode(g, -5, c(0.0, 0.3)));
    let dt = 0.02;
    for scheme in [Scheme::Etdrk4, Scheme::Ifrk4] {
        let cfg = IntegratorConfig { scheme, ..IntegratorConfig::linear(dt, 1.0) };
        let out = step(&s, dt, &cfg).unwrap();
        let e = build_propagator(g, dt).e;
        for k in [-3, -5] {
            let i = g.index_of(k).unwrap();
            let (w0, r0) = (s.w.modes()[i], s.r.modes()[i]);
            assert!((out.w.modes()[i] - (e[i][0][0] * w0 + e[i][0][1] * r0)).norm() < 1e-13);
            assert!((out.r.modes()[i] - (e[i][1][0] * w0 + e[i][1][1] * r0)).norm() < 1e-13);
        }
    }
}

#[test]
fn one_step_is_consistent_to_second_order() {
    // result − (exp(hL)u + h·N(u)) = O(h²)
    let g = grid(64);
    let eps = 1e-3;
    let s = state(mode(g, -1, c(eps, 0.0)), mode(g, -1, c(0.0, eps)));
    let model = Model::default();
    let f = model.rhs_nonlinear(&s).unwrap();
    let defect = |h: f64| {
        let out = step(&s, h, &IntegratorConfig::default()).unwrap();
        let (ew, er) = {
            let e = linear_flow(&g, h);
            let mut w = ComplexField::zeros(g);
            let mut r = ComplexField::zeros(g);
            for i in 0..g.n_modes() {
                let (w0, r0) = (s.w.modes()[i], s.r.modes()[i]);
                w.modes_mut()[i] = e[i][0][0] * w0 + e[i][0][1] * r0;
                r.modes_mut()[i] = e[i][1][0] * w0 + e[i][1][1] * r0;
            }
            (w, r)
        };
        // nonlinear remainder at u: F(u) − Lu
        let lin = hydro_model::rhs_linear_zero(&hydro_model::LinState::new(s.w.clone(), s.r.clone()).unwrap());
        let euler = state(&ew + &(&f.dw - &lin.dw).scale_re(h), &er + &(&f.dr - &lin.dr).scale_re(h));
        diff(&out, &euler)
    };
    let (d1, d2) = (defect(1e-3), defect(5e-4));
    let order = (d1 / d2).log2();
    assert!(order > 1.8 && order < 2.3, "{d1:e} {d2:e} {order}");
}

#[test]
fn self_convergence_is_fourth_order() {
    let g = grid(64);
    let eps = 0.05;
    let s = state(mode(g, -1, c(eps, 0.0)), mode(g, -2, c(0.0, eps)));
    for scheme in [Scheme::Etdrk4, Scheme::Ifrk4] {
        let run = |dt: f64| {
            let cfg = IntegratorConfig { dt: Dt::Fixed(dt), t_final: 0.2, scheme, filter: None, ..Default::default() };
            evolve(&s, &cfg, |_, _| ()).unwrap().last
        };
        let (a, b, c4) = (run(0.02), run(0.01), run(0.005));
        let order = (diff(&a, &b) / diff(&b, &c4)).log2();
        assert!(order >= 3.5, "{scheme:?}: {order}");
    }
}

#[test]
fn evolve_with_zero_final_time() {
    let g = grid(32);
    let s = state(mode(g, -1, c(0.1, 0.0)), ComplexField::zeros(g));
    let cfg = IntegratorConfig { t_final: 0.0, ..Default::default() };
    let tr = evolve(&s, &cfg, |s, n| (s.t, n)).unwrap();
    assert_eq!(tr.records, vec![(0.0, 0)]);
    assert_eq!(tr.last, s);
    assert!(tr.completed());
}

#[test]
fn linear_mode_matches_the_analytic_solution() {
    let g = grid(64);
    let k = -3;
    let kap = -3.0f64;
    let om = kap.abs().powf(2.5);
    let (a, b) = (c(0.3, -0.2), c(0.1, 0.4));
    let s = state(mode(g, k, a), mode(g, k, b));
    let cfg = IntegratorConfig { snapshot_every: 7, ..IntegratorConfig::linear(0.013, 1.0) };
    let tr = evolve(&s, &cfg, |s, _| e0(s)).unwrap();
    let t = 1.0;
    // ŵ'' = −ω²ŵ with ŵ' = −iκ r̂
    let i = c(0.0, 1.0);
    let w = a * (om * t).cos() + (-i * kap * b) * ((om * t).sin() / om);
    let r = b * (om * t).cos() + (i * kap.powi(4) * a) * ((om * t).sin() / om);
    assert!((tr.last.w.mode(k) - w).norm() < 1e-10);
    assert!((tr.last.r.mode(k) - r).norm() < 1e-10);
    assert!((tr.last.t - 1.0).abs() < 1e-15);
    let e_first = tr.records[0];
    for e in &tr.records {
        assert!((e - e_first).abs() <= 1e-12 * e_first);
    }
}

#[test]
fn energy_is_conserved_by_the_linear_flow_at_any_step() {
    let g = grid(128);
    let mut s = state(mode(g, -2, c(1.0, 0.0)), mode(g, -7, c(0.0, 0.5)));
    s.w.set_mode(-40, c(0.01, 0.02));
    let e_start = e0(&s);
    for dt in [0.5, 0.01, 1e-4] {
        let tr = evolve(&s, &IntegratorConfig::linear(dt, 1.0), |_, _| ()).unwrap();
        // exact per step; only rounding accumulates
        let tol = 1e-12_f64.max(1e-15 * tr.steps as f64);
        assert!((e0(&tr.last) - e_start).abs() <= tol * e_start, "dt={dt}");
    }
}

#[test]
fn guard_violation_stops_before_stepping() {
    let g = grid(32);
    let s = state(mode(g, -1, c(0.95, 0.0)), ComplexField::zeros(g));
    let tr = evolve(&s, &IntegratorConfig::default(), |_, _| ()).unwrap();
    assert_eq!(tr.steps, 0);
    assert_eq!(tr.records.len(), 1);
    assert!(matches!(tr.error, Some(StepError::Guard(_))));
}

#[test]
fn adaptive_step_respects_the_controller() {
    let g = grid(64);
    let s = state(mode(g, -1, c(0.01, 0.0)), mode(g, -1, c(0.0, 0.01)));
    let dt = suggest_dt(&s, &Model::default(), 1.0).unwrap();
    assert!(dt < 0.1 && dt > 1e-3, "{dt}");
    assert_eq!(suggest_dt(&s, &Model::default(), 1e-4).unwrap(), 1e-4);
    let cfg = IntegratorConfig { dt: Dt::Adaptive(1.0), t_final: 0.05, ..Default::default() };
    let tr = evolve(&s, &cfg, |_, _| ()).unwrap();
    assert!(tr.completed() && (tr.last.t - 0.05).abs() < 1e-15);
    assert!(tr.steps as f64 >= 0.05 / dt);
}

#[test]
fn invalid_configuration() {
    let s = HoloState::zero(grid(16));
    for cfg in [
        IntegratorConfig { dt: Dt::Fixed(0.0), ..Default::default() },
        IntegratorConfig { dealias_fraction: 1.5, ..Default::default() },
        IntegratorConfig { snapshot_every: 0, ..Default::default() },
    ] {
        assert!(matches!(evolve(&s, &cfg, |_, _| ()), Err(StepError::Config(_))));
    }
}

#[test]
fn snapshot_round_trips() {
    let g = SpectralGrid::new(32, 3.0).unwrap();
    let mut s = state(mode(g, -1, c(0.1, -0.2)), mode(g, -5, c(1e-300, 7.5)));
    s.t = 0.625;
    let mut bin = Vec::new();
    write_snapshot(&s, &mut bin).unwrap();
    assert_eq!(bin.len(), 8 + 8 + 8 + 4 + 32 * 4 * 8);
    assert_eq!(read_snapshot(&bin[..]).unwrap(), s);
    let mut js = Vec::new();
    write_snapshot_json(&s, &mut js).unwrap();
    assert_eq!(read_snapshot_json(&js[..]).unwrap(), s);
    bin[28] ^= 1; // first payload byte
    assert_ne!(read_snapshot(&bin[..]).unwrap(), s);
    assert!(read_snapshot(&bin[..20]).is_err());
}
