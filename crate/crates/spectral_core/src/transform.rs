//! FFT plumbing with a process-wide plan cache.
//!
//! Plans are immutable once built, so they are shared behind `Arc`s.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToModes,
    ToValues,
}

type PlanMap = HashMap<(usize, bool), Arc<dyn Fft<f64>>>;

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<Mutex<PlanMap>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    map.entry((n, forward))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if forward {
                planner.plan_fft_forward(n)
            } else {
                planner.plan_fft_inverse(n)
            }
        })
        .clone()
}

/// Samples → coefficients: `f̂(k) = (1/n) Σ_j f_j e^{-2πi jk/n}` (in place).
pub fn forward_normalized(buf: &mut [Complex64]) {
    let n = buf.len();
    plan(n, true).process(buf);
    let s = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= s;
    }
}

/// Coefficients → samples: `f_j = Σ_k f̂(k) e^{2πi jk/n}` (in place).
pub fn inverse_unnormalized(buf: &mut [Complex64]) {
    let n = buf.len();
    plan(n, false).process(buf);
}

/// Out-of-place transform of raw data in FFT order.
pub fn transform(data: &[Complex64], direction: Direction) -> Vec<Complex64> {
    let mut buf = data.to_vec();
    match direction {
        Direction::ToModes => forward_normalized(&mut buf),
        Direction::ToValues => inverse_unnormalized(&mut buf),
    }
    buf
}
