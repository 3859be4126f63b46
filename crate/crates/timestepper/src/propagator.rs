//! Exact flow of the zero linearization, one 2×2 block per wavenumber.
//!
//! On a mode pair `(ŵ, r̂)` the generator is `L = [[0, −iκ], [iκ⁴, 0]]` for
//! `κ < 0`, with `L² = κ⁵ I`, so every analytic function of `hL` reduces to
//! `f(hL) = even(z) I + odd(z)/z · hL` with `z² = h²κ⁵`. For `κ > 0` the
//! elastic term is projected away in the full system and `L = [[0, −iκ], [0, 0]]`
//! is nilpotent.

use spectral_core::{Complex64, ComplexField, SpectralGrid};

pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Below this `|z|` the φ-functions are summed as power series.
const SERIES_SWITCH: f64 = 0.5;
const SERIES_TERMS: usize = 40;

/// Generator block and `z²/h² = κ⁵` (zero when nilpotent) at one index.
pub fn generator(grid: &SpectralGrid, idx: usize) -> (Mat2, f64) {
    let k = grid.wavenumber(idx);
    let kap = grid.kappa(idx);
    let i = Complex64::new(0.0, 1.0);
    match k.signum() {
        0 => ([[ZERO; 2]; 2], 0.0),
        1 => ([[ZERO, -i * kap], [ZERO, ZERO]], 0.0),
        _ => ([[ZERO, -i * kap], [i * kap.powi(4), ZERO]], kap.powi(5)),
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|v| v as f64).product()
}

/// `φ_j(z)` in closed form.
fn phi_closed(j: usize, z: Complex64) -> Complex64 {
    let mut acc = z.exp();
    let mut term = ONE;
    for m in 0..j {
        if m > 0 {
            term = term * z / m as f64;
        }
        acc -= term;
    }
    acc / z.powu(j as u32)
}

/// `(even, odd/z)` parts of `φ_j` at `z` with `z² = z2`.
fn phi_parts(j: usize, z2: f64) -> (Complex64, Complex64) {
    let z = Complex64::new(z2, 0.0).sqrt();
    if z.norm() < SERIES_SWITCH {
        let (mut even, mut odd) = (ZERO, ZERO);
        let mut zp = ONE; // z^{2m}
        for m in 0..SERIES_TERMS / 2 {
            even += zp / factorial(2 * m + j);
            odd += zp / factorial(2 * m + 1 + j);
            zp *= z2;
        }
        (even, odd)
    } else {
        let (p, q) = (phi_closed(j, z), phi_closed(j, -z));
        ((p + q) * 0.5, (p - q) / (2.0 * z))
    }
}

/// `Σ_j c_j φ_j(hL)` for the block `l` with `L² = z2/h²·I`.
fn phi_combo(coeffs: &[(usize, f64)], l: &Mat2, h: f64, lam2: f64) -> Mat2 {
    let (mut e, mut o) = (ZERO, ZERO);
    for &(j, c) in coeffs {
        let (pe, po) = phi_parts(j, lam2 * h * h);
        e += pe * c;
        o += po * c;
    }
    [[e + o * h * l[0][0], o * h * l[0][1]], [o * h * l[1][0], e + o * h * l[1][1]]]
}

/// Per-mode exponentials and ETD weights for a fixed step `h`.
#[derive(Clone, Debug)]
pub struct LinearPropagator {
    pub grid: SpectralGrid,
    pub dt: f64,
    /// `exp(hL)`
    pub e: Vec<Mat2>,
    /// `exp(hL/2)`
    pub e2: Vec<Mat2>,
    /// `(h/2)·φ₁(hL/2)`
    pub q: Vec<Mat2>,
    /// `h·(φ₁ − 3φ₂ + 4φ₃)(hL)`
    pub f1: Vec<Mat2>,
    /// `h·(φ₂ − 2φ₃)(hL)`
    pub f2: Vec<Mat2>,
    /// `h·(−φ₂ + 4φ₃)(hL)`
    pub f3: Vec<Mat2>,
}

pub fn build_propagator(grid: SpectralGrid, dt: f64) -> LinearPropagator {
    assert!(dt > 0.0, "time step must be positive");
    let n = grid.n_modes();
    let mut p = LinearPropagator {
        grid,
        dt,
        e: Vec::with_capacity(n),
        e2: Vec::with_capacity(n),
        q: Vec::with_capacity(n),
        f1: Vec::with_capacity(n),
        f2: Vec::with_capacity(n),
        f3: Vec::with_capacity(n),
    };
    let scale = |m: Mat2, s: f64| m.map(|row| row.map(|v| v * s));
    for idx in 0..n {
        let (l, lam2) = generator(&grid, idx);
        p.e.push(phi_combo(&[(0, 1.0)], &l, dt, lam2));
        p.e2.push(phi_combo(&[(0, 1.0)], &l, dt / 2.0, lam2));
        p.q.push(scale(phi_combo(&[(1, 1.0)], &l, dt / 2.0, lam2), dt / 2.0));
        p.f1.push(scale(phi_combo(&[(1, 1.0), (2, -3.0), (3, 4.0)], &l, dt, lam2), dt));
        p.f2.push(scale(phi_combo(&[(2, 1.0), (3, -2.0)], &l, dt, lam2), dt));
        p.f3.push(scale(phi_combo(&[(2, -1.0), (3, 4.0)], &l, dt, lam2), dt));
    }
    p
}

/// `exp(tL)` for any real `t` (negative times run the flow backwards).
pub fn linear_flow(grid: &SpectralGrid, t: f64) -> Vec<Mat2> {
    (0..grid.n_modes())
        .map(|idx| {
            let (l, lam2) = generator(grid, idx);
            phi_combo(&[(0, 1.0)], &l, t, lam2)
        })
        .collect()
}

/// Applies per-mode blocks to the pair `(w, r)`.
pub fn apply(m: &[Mat2], w: &ComplexField, r: &ComplexField) -> (ComplexField, ComplexField) {
    let (wm, rm) = (w.modes(), r.modes());
    let ow = w.map_modes(|i, _| m[i][0][0] * wm[i] + m[i][0][1] * rm[i]);
    let or = r.map_modes(|i, _| m[i][1][0] * wm[i] + m[i][1][1] * rm[i]);
    (ow, or)
}
