//! Littlewood–Paley blocks: a raised-cosine partition of unity in `log₂|κ|`.
//!
//! Block 0 is the indicator of `|κ| ≤ 1`. Block 1 equals one on `(1, 2]` and
//! block `j ≥ 2` rises on `[2^{j-1}, 2^j]`; neighbouring blocks share one
//! octave, with weights `cos²` and `1 − cos²` so the sum is exactly one.
//! The top block does not fall off.

use crate::{ComplexField, SpectralGrid};
use std::f64::consts::FRAC_PI_2;

/// Number of blocks needed to cover the grid: `J + 1` with `2^J ≥ max |κ|`.
pub fn lp_block_count(grid: &SpectralGrid) -> usize {
    let kmax = grid.scale() * grid.k_max() as f64;
    let j = if kmax <= 2.0 { 1 } else { kmax.log2().ceil() as usize };
    j.max(1) + 1
}

fn lower_weight(theta: f64) -> f64 {
    let c = (FRAC_PI_2 * theta).cos();
    c * c
}

/// Weight of block `j` (out of `0..=top`) at physical wavenumber modulus `a`.
pub fn lp_block_weight(j: usize, top: usize, a: f64) -> f64 {
    if a <= 1.0 {
        return if j == 0 { 1.0 } else { 0.0 };
    }
    if j == 0 {
        return 0.0;
    }
    let x = a.log2();
    let jf = j as f64;
    // Rising edge on [j-1, j] (block 1 is flat there instead).
    if x <= jf {
        if j == 1 {
            return 1.0;
        }
        if x <= jf - 1.0 {
            return 0.0;
        }
        return 1.0 - lower_weight(x - (jf - 1.0));
    }
    if j == top {
        return 1.0;
    }
    if x >= jf + 1.0 {
        return 0.0;
    }
    lower_weight(x - jf)
}

/// Splits a field into its Littlewood–Paley pieces; they sum to the input.
pub fn lp_decompose(field: &ComplexField) -> Vec<ComplexField> {
    let g = *field.grid();
    let nb = lp_block_count(&g);
    (0..nb)
        .map(|j| field.map_modes(|i, v| v * lp_block_weight(j, nb - 1, g.kappa(i).abs())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn partition_of_unity() {
        for n in [8usize, 16, 64, 1000] {
            let g = SpectralGrid::standard(n).unwrap();
            let top = lp_block_count(&g) - 1;
            for i in 0..n {
                let a = g.kappa(i).abs();
                let s: f64 = (0..=top).map(|j| lp_block_weight(j, top, a)).sum();
                assert!((s - 1.0).abs() < 1e-15, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn block_supports() {
        let g = SpectralGrid::standard(256).unwrap();
        let top = lp_block_count(&g) - 1;
        assert_eq!(top, 7);
        for j in 1..=top {
            for k in 1..=128i64 {
                let w = lp_block_weight(j, top, k as f64);
                if w != 0.0 {
                    let lo = if j == 1 { 1 } else { 1 << (j - 1) };
                    assert!(k >= lo && k <= 1 << (j + 1), "j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn mode_eight_lives_in_blocks_two_to_four() {
        let g = SpectralGrid::standard(64).unwrap();
        let f = ComplexField::single_mode(g, -8, Complex64::new(1.0, 0.0));
        let blocks = lp_decompose(&f);
        for (j, b) in blocks.iter().enumerate() {
            if !(2..=4).contains(&j) {
                assert_eq!(b.max_mode_abs(), 0.0, "block {j}");
            }
        }
        assert!((blocks[3].mode(-8).re - 1.0).abs() < 1e-15);
    }
}
