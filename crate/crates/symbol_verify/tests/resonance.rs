//! Resonance identities: exact checks against hand-derived values and a
//! floating-point re-evaluation of the sign patterns.

use num_rational::BigRational;
use symbol_verify::poly::q;
use symbol_verify::resonance::{
    four_wave_scan, is_paired, patterns, sextic, three_wave_identity, Lattice, Q,
};

fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

#[test]
fn three_wave_identity_is_exact() {
    let r = three_wave_identity();
    assert!(r.identity_residual.is_zero());
    assert!(r.factored_residual.is_zero());
    assert!(r.positivity_certified());
    assert!(r.passed());
}

#[test]
fn spot_value_and_margin() {
    let r = three_wave_identity();
    // (1 + 1 − 32)² − 4 = 896
    assert_eq!(r.lhs_at_one, BigRational::from_integer(896.into()));
    assert_eq!(r.rhs_at_one, BigRational::from_integer(896.into()));
    // 125 − 5329/125
    assert_eq!(r.sos_margin, q(10296, 125));
    assert!(r.sextic_symmetric);
}

#[test]
fn regrouping_misses_a_cross_term() {
    // hand expansion: 25(ξ⁴+η⁴)(ξ+η)² + 50ξ²η²(ξ+η)² has coefficients
    // 25, 50, 75, 100, 75, 50, 25; adding ξ²η²(125, 146, 125) leaves D short by 50ξ⁵η + 50ξη⁵
    let r = three_wave_identity();
    assert_eq!(r.regrouped_residual.len(), 2);
    assert_eq!(r.regrouped_residual.coeff((5, 1)), q(-50, 1));
    assert_eq!(r.regrouped_residual.coeff((1, 5)), q(-50, 1));
    // 25(ξ²+η²)² = 25(ξ⁴+η⁴) + 50ξ²η², so the sum-of-squares form misses by the same amount
    assert!(r.sos_residual == r.regrouped_residual);
    assert_eq!(r.findings().len(), 3);
}

#[test]
fn square_as_written_does_not_complete() {
    // (25ξ + 73/25 η)² contributes 625ξ² instead of 125ξ²
    let r = three_wave_identity();
    assert!(r.completed_square_residual.is_zero());
    assert_eq!(r.square_as_written_residual.coeff((2, 0)), q(500, 1));
    assert_eq!(r.square_as_written_residual.coeff((1, 1)), q(0, 1));
    // η²: (73/25)² + 125 − 73²/125 − 125
    assert_eq!(r.square_as_written_residual.coeff((0, 2)), q(5329, 625) - q(5329, 125));
}

#[test]
fn sextic_is_positive_on_samples() {
    let d = sextic();
    for (x, y) in [(1.0, 1.0), (1.0, -1.0), (-3.0, 2.0), (0.0, 1.0), (1e-3, -1.0)] {
        assert!(d.eval_f64(x, y) > 0.0, "{x} {y}");
    }
}

#[test]
fn paired_triple_has_exact_zero() {
    // (ξ, −ξ, η): ξ₀ = −η
    for (a, b) in [(1, 2), (3, 7), (5, 5)] {
        let t = [qi(a), qi(-a), qi(b)];
        assert!(is_paired(t));
        let ps = patterns(t);
        assert!(ps.iter().any(|p| p.vanishes));
        for p in ps.iter().filter(|p| p.vanishes) {
            assert!(p.value.abs() < 1e-9);
        }
    }
}

#[test]
fn one_two_three_has_no_zero() {
    let ps = patterns([qi(1), qi(2), qi(3)]);
    assert_eq!(ps.len(), 8);
    assert!(ps.iter().all(|p| !p.vanishes));
    // ξ₀ = −6: smallest is 6^{5/2} − 3^{5/2} − 2^{5/2} − 1
    let direct = 6f64.powf(2.5) - 3f64.powf(2.5) - 2f64.powf(2.5) - 1.0;
    let min = ps.iter().map(|p| p.value.abs()).fold(f64::INFINITY, f64::min);
    assert!((min - direct).abs() < 1e-9);
}

#[test]
fn same_irrational_class_without_pairing() {
    // ξ₀ = 8; moduli 8, 2, 8, 18 all lie in ℚ·√2 (128√2, 4√2, 128√2, 972√2)
    let t = [qi(2), qi(8), qi(-18)];
    assert!(!is_paired(t));
    let ps = patterns(t);
    assert!(ps.iter().all(|p| !p.vanishes));
    let min = ps.iter().map(|p| p.value.abs()).fold(f64::INFINITY, f64::min);
    assert!((min - (972.0 - 4.0 - 256.0) * 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn thousand_unpaired_triples() {
    let r = four_wave_scan(&Lattice::default());
    assert_eq!(r.unpaired_checked, 1000);
    assert!(r.unpaired_vanishing.is_empty(), "{:?}", r.unpaired_vanishing);
    assert!(r.paired_checked > 0);
    assert!(r.paired_without_zero.is_empty());
    assert!(r.min_unpaired_modulus > 0.0);
    // the exact verdict agrees with a floating-point evaluation
    let t = r.argmin.unwrap();
    let direct = patterns(t).iter().map(|p| p.value.abs()).fold(f64::INFINITY, f64::min);
    assert_eq!(direct, r.min_unpaired_modulus);
}
