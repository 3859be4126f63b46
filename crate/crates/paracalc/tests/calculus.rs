use paracalc::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_core::{Complex64, ComplexField, SpectralGrid};

fn random_field(grid: SpectralGrid, seed: u64, decay: f64, kcut: i64) -> ComplexField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = ComplexField::zeros(grid);
    for k in grid.wavenumbers() {
        if k.abs() > kcut {
            continue;
        }
        let amp = (1.0 + k.abs() as f64).powf(-decay);
        f.set_mode(k, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * amp);
    }
    f
}

#[test]
fn partition_identity_on_random_pairs() {
    let g = SpectralGrid::standard(512).unwrap();
    let p = CutoffParams::default();
    for seed in 0..20 {
        let a = random_field(g, seed, 1.0, 128);
        let u = random_field(g, seed + 1000, 0.5, 128);
        let lhs = a.product(&u);
        let rhs = &(&paraproduct(&a, &u, &p).unwrap() + &paraproduct(&u, &a, &p).unwrap()) + &balanced(&a, &u, &p).unwrap();
        assert!((&lhs - &rhs).l2_norm() <= 1e-13 * lhs.l2_norm());
    }
}

#[test]
fn low_high_operator_bound() {
    let g = SpectralGrid::standard(256).unwrap();
    let p = CutoffParams::default();
    let mut worst: f64 = 0.0;
    for (s, m) in [(1.5, 0.0), (1.5, 0.25), (0.0, 0.5)] {
        for seed in 0..10 {
            let a = random_field(g, seed, 1.5, 100);
            let u = random_field(g, seed + 77, 1.0, 100);
            let t = paraproduct(&a, &u, &p).unwrap();
            let lhs = norm(&t, SpaceSpec::Sobolev { s: s - m }).unwrap();
            let rhs = norm(&a, SpaceSpec::Zygmund { s: -m }).unwrap() * norm(&u, SpaceSpec::Sobolev { s }).unwrap();
            worst = worst.max(lhs / rhs);
        }
    }
    assert!(worst <= 50.0, "constant {worst}");
}

#[test]
fn balanced_operator_bound() {
    let g = SpectralGrid::standard(256).unwrap();
    let p = CutoffParams::default();
    let mut worst: f64 = 0.0;
    for (al, be) in [(0.5, 0.0), (1.0, 0.5), (0.25, 0.25)] {
        for seed in 0..10 {
            let a = random_field(g, seed, 1.5, 100);
            let u = random_field(g, seed + 91, 1.5, 100);
            let pi = balanced(&a, &u, &p).unwrap();
            let lhs = norm(&pi, SpaceSpec::Sobolev { s: al + be }).unwrap();
            let rhs = norm(&a, SpaceSpec::Zygmund { s: al }).unwrap() * norm(&u, SpaceSpec::Sobolev { s: be }).unwrap();
            worst = worst.max(lhs / rhs);
        }
    }
    assert!(worst <= 50.0, "constant {worst}");
}

#[test]
fn mixed_single_pair_matches_brute_force() {
    let g = SpectralGrid::standard(256).unwrap();
    let one = Complex64::new(1.0, 0.0);
    let sym = BilinearSymbol::new(|_, _| Complex64::new(1.0, 0.0), Region::LowHigh, Quantization::Mixed);
    let u = ComplexField::single_mode(g, -1, one);
    let v = ComplexField::single_mode(g, -64, one);
    let fast = bilinear(&sym, &u, &v).unwrap();
    let slow = bilinear_reference(&sym, &u, &v).unwrap();
    assert_eq!((&fast - &slow).max_mode_abs(), 0.0);
    // conj(û(-1)) pairs with v̂(-64) at output -63, which the 1_{η>0} weight removes.
    assert_eq!(fast.max_mode_abs(), 0.0);
    let w = ComplexField::single_mode(g, 64, one);
    let out = bilinear(&sym, &u, &w).unwrap();
    assert!((out.mode(65) - one).norm() < 1e-15);
}

#[test]
fn low_high_unit_symbol_is_windowed_product() {
    let g = SpectralGrid::standard(128).unwrap();
    let sym = BilinearSymbol::new(|_, _| Complex64::new(1.0, 0.0), Region::LowHigh, Quantization::Holomorphic);
    let u = random_field(g, 3, 1.0, 2);
    let v = ComplexField::single_mode(g, -60, Complex64::new(1.0, 0.0));
    let b = bilinear(&sym, &u, &v).unwrap();
    let prod = u.product(&v);
    assert!((&b - &prod).max_mode_abs() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn accelerated_bilinear_matches_reference(seed in any::<u64>(), region in 0usize..2, quant in 0usize..2) {
        let g = SpectralGrid::standard(64).unwrap();
        let region = [Region::LowHigh, Region::HighHigh][region];
        let quant = [Quantization::Holomorphic, Quantization::Mixed][quant];
        let sym = BilinearSymbol::new(|x, y| Complex64::new(x * x - 0.3 * y, 0.5 * x * y), region, quant);
        let u = random_field(g, seed, 0.5, 32);
        let v = random_field(g, seed ^ 0xabc, 0.5, 32);
        let fast = bilinear(&sym, &u, &v).unwrap();
        let slow = bilinear_reference(&sym, &u, &v).unwrap();
        prop_assert!((&fast - &slow).l2_norm() <= 1e-10 * slow.l2_norm().max(1e-300));
    }

    #[test]
    fn norms_are_homogeneous(seed in any::<u64>(), c_re in -3.0f64..3.0, c_im in -3.0f64..3.0) {
        let g = SpectralGrid::standard(128).unwrap();
        let f = random_field(g, seed, 1.0, 64);
        let c = Complex64::new(c_re, c_im);
        for spec in [
            SpaceSpec::Sobolev { s: 1.2 },
            SpaceSpec::Zygmund { s: 0.5 },
            SpaceSpec::Besov { s: 0.3, p: 2.0, q: 1.0 },
            SpaceSpec::LpSobolev { s: 0.75, p: 4.0 },
        ] {
            let a = norm(&f.scale(c), spec).unwrap();
            let b = c.norm() * norm(&f, spec).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * b.max(1e-300));
        }
    }
}

#[test]
fn control_norm_scaling_in_wavenumber() {
    let g = SpectralGrid::standard(512).unwrap();
    let z = ComplexField::zeros(g);
    let d = Complex64::new(1e-3, 0.0);
    let k1 = 16;
    let k2 = 32;
    let w1 = ComplexField::single_mode(g, -k1, d);
    let w2 = ComplexField::single_mode(g, -k2, d);
    // 𝐖-only data: the 𝐖 slot of 𝒜₀ is C^ε_*, so doubling k multiplies by 2^ε.
    let a1 = control_norms(&w1, &z, EPS, EPS_SHARP, &[0.0])[0].a;
    let a2 = control_norms(&w2, &z, EPS, EPS_SHARP, &[0.0])[0].a;
    assert!((a2 / a1 - 2f64.powf(EPS)).abs() < 1e-12);
    // R-only data: the R slot is C^{-3/2+ε}_*, so doubling k divides by 2^{3/2-ε}.
    let a1 = control_norms(&z, &w1, EPS, EPS_SHARP, &[0.0])[0].a;
    let a2 = control_norms(&z, &w2, EPS, EPS_SHARP, &[0.0])[0].a;
    assert!((a1 / a2 - 2f64.powf(1.5 - EPS)).abs() < 1e-12);
    // 𝒜_{♯,7/4} of 𝐖 = δe^{-ikα} is δ⟨k⟩^{2+ε′}·(2π)^{1/4}.
    let s1 = control_norms(&w1, &z, EPS, EPS_SHARP, &[1.75])[0];
    let want = 1e-3 * (1.0 + (k1 * k1) as f64).powf(0.5 * (2.0 + EPS_SHARP)) * (2.0 * std::f64::consts::PI).powf(0.25);
    assert!((s1.a_sharp - want).abs() < 1e-12 * want);
    assert!(s1.embedding_ok);
}
