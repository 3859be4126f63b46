//! Catalog verdicts, checked against an independent computer-algebra solve
//! of the same systems (values recorded below).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_rational::BigRational;
use symbol_verify::catalog::{AS_PRINTED, CORRECTED};
use symbol_verify::poly::q;
use symbol_verify::verify::{verify_all, ClaimVerdict, Lead, SummaryRow};
use symbol_verify::{Monomial, RatFun, SystemReport};

fn reports() -> &'static [SystemReport] {
    static R: OnceLock<Vec<SystemReport>> = OnceLock::new();
    R.get_or_init(|| verify_all().expect("catalog verifies"))
}

fn report(id: &str) -> &'static SystemReport {
    reports().iter().find(|r| r.id == id).unwrap()
}

fn low_high(r: &SystemReport, i: usize) -> Monomial {
    match r.unknowns[i].lead.clone().unwrap() {
        Lead::LowHigh(m) => m,
        l => panic!("{l:?}"),
    }
}

fn diag(r: &SystemReport, i: usize) -> BigRational {
    match r.unknowns[i].lead.clone().unwrap() {
        Lead::Balanced(b) => b.value,
        l => panic!("{l:?}"),
    }
}

fn mono(n: i64, d: i64, e: (i32, i32)) -> Monomial {
    Monomial { coef: q(n, d), exps: e }
}

#[test]
fn every_system_solves_exactly() {
    for r in reports() {
        assert!(r.residual_zero, "{}", r.id);
        assert!(r.spot_residual_zero, "{}", r.id);
    }
}

#[test]
fn forty_five_of_forty_eight_leading_claims_agree() {
    let checked: usize = reports().iter().map(|r| r.claims_checked()).sum();
    let agree: usize = reports().iter().map(|r| r.claims_agreeing()).sum();
    assert_eq!((checked, agree), (48, 45));
    let bad: BTreeSet<_> = reports()
        .iter()
        .flat_map(|r| {
            r.unknowns
                .iter()
                .filter(|u| matches!(u.verdict, ClaimVerdict::Disagrees(_)))
                .map(move |u| (r.id, u.name))
        })
        .collect();
    let want: BTreeSet<_> = [("G0K0_BAL", "a"), ("G1K1_LH", "a"), ("G1K1_BAL_H", "a")].into();
    assert_eq!(bad, want);
}

#[test]
fn the_three_conflicting_leads() {
    assert_eq!(diag(report("G0K0_BAL"), 0), q(1, 2));
    assert_eq!(low_high(report("G1K1_LH"), 0), mono(-1, 5, (0, 0)));
    assert_eq!(diag(report("G1K1_BAL_H"), 0), q(13, 28));
    // the printed a of the low-high system carries the claimed sign
    let r = report("G1K1_LH");
    let p = r.printed.iter().find(|p| p.label == AS_PRINTED).unwrap();
    assert_eq!(p.mismatch_leads[0].as_deref(), Some("1/5"));
}

#[test]
fn cubic_correction_leads() {
    let r = report("CUBIC_E3");
    assert_eq!(low_high(r, 0), mono(2, 5, (0, 0)));
    assert_eq!(low_high(r, 1), mono(2, 5, (0, 0)));
    assert_eq!(low_high(r, 2), mono(3, 1, (1, 2)));
    assert_eq!(low_high(r, 3), mono(1, 2, (2, -2)));
}

#[test]
fn combined_commutator_leads() {
    let r = report("HS_H");
    let got: Vec<_> = (0..4).map(|i| low_high(r, i)).collect();
    assert_eq!(got, vec![mono(2, 25, (3, -3)), mono(-1, 2, (1, -1)), mono(-1, 5, (0, -3)), mono(1, 5, (0, 0))]);
    let r = report("HS_A");
    let got: Vec<_> = (0..4).map(|i| low_high(r, i)).collect();
    assert_eq!(got, vec![mono(2, 25, (3, -3)), mono(-1, 2, (1, -1)), mono(-1, 5, (0, -3)), mono(1, 5, (0, 0))]);
}

#[test]
fn cubic_normal_form_leads() {
    let cases: [(&str, [Monomial; 4]); 4] = [
        ("G0K0_C1", [mono(1, 10, (-1, 1)), mono(1, 10, (1, -1)), mono(-1, 10, (-1, -2)), mono(-2, 5, (1, -1))]),
        ("G0K0_C2", [mono(-1, 10, (-1, 1)), mono(-3, 5, (0, 0)), mono(1, 10, (-1, -2)), mono(-3, 5, (0, 0))]),
        ("G1K1_C1", [mono(1, 5, (-1, 1)), mono(27, 20, (0, 0)), mono(-1, 5, (-1, -2)), mono(27, 20, (0, 0))]),
        ("G1K1_C2", [mono(-1, 5, (-1, 1)), mono(1, 2, (0, 0)), mono(1, 5, (-1, -2)), mono(1, 2, (0, 0))]),
    ];
    for (id, want) in cases {
        let r = report(id);
        for (i, w) in want.iter().enumerate() {
            assert_eq!(&low_high(r, i), w, "{id} {}", r.unknowns[i].name);
        }
    }
}

#[test]
fn full_mixed_diagonal_values() {
    let r = report("FULLNF_MIX");
    let got: Vec<_> = (0..4).map(|i| diag(r, i)).collect();
    assert_eq!(got, vec![q(0, 1), q(-2, 5), q(2, 5), q(0, 1)]);
}

#[test]
fn printed_mismatch_set() {
    let got: BTreeSet<_> = reports()
        .iter()
        .flat_map(|r| r.printed_mismatches(AS_PRINTED).into_iter().map(move |(ch, i)| (r.id, ch, i)))
        .collect();
    let mut want = BTreeSet::new();
    let mut add = |id, ch, is: &[usize]| {
        for &i in is {
            want.insert((id, ch, i));
        }
    };
    add("CUBIC_E3", 0, &[0, 1, 3]);
    add("G0K0_LH", 0, &[0, 1, 2, 3]);
    add("G0K0_BAL", 0, &[0, 1, 2, 3]);
    add("G0K0_C1", 0, &[0, 1, 2, 3]);
    add("G0K0_C2", 0, &[0]);
    add("G1K1_LH", 0, &[0]);
    add("G1K1_BAL_H", 0, &[0]);
    add("G1K1_BAL_A", 0, &[0, 1, 2, 3]);
    add("FULLNF_MIX", 0, &[0, 1, 2, 3]);
    add("FULLNF_SYM", 0, &[1]);
    add("HS_H", 1, &[0, 1, 2, 3]);
    assert_eq!(got, want);
}

#[test]
fn corrections_resolve_everything_but_the_commutator_source_part() {
    for r in reports() {
        let resolved = r.printed_resolved();
        assert_eq!(resolved, r.id != "HS_H", "{}", r.id);
        assert!(r.printed_mismatches(CORRECTED).is_empty(), "{}", r.id);
    }
    // the source part of the holomorphic commutator system is (1/2, 1/2, 0, 0)
    let r = report("HS_H");
    let s = &r.solutions[1];
    let half = RatFun::constant(q(1, 2));
    assert!(s[0].equals(&half) && s[1].equals(&half));
    assert!(s[2].is_zero() && s[3].is_zero());
}

#[test]
fn symmetrized_system() {
    let r = report("FULLNF_SYM");
    let s = r.symmetrized.as_ref().unwrap();
    assert!(s.b_symmetric && s.c_symmetric);
    assert_eq!(s.reduced_rows_match, [true, true]);
    let m: Vec<_> = s.displays.iter().map(|d| d.matching_multiplier).collect();
    assert_eq!(m, vec![Some("x"), Some("y^4")]);
}

#[test]
fn denominators_do_not_vanish_in_their_regions() {
    for r in reports() {
        assert!(r.den_scan.clean(), "{}: {:?}", r.id, r.den_scan);
        assert!(r.den_scan.denominators > 0, "{}", r.id);
    }
}

#[test]
fn summary_rows_and_report_text() {
    let rows: Vec<SummaryRow> = reports().iter().map(SummaryRow::from).collect();
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| r.residual_zero));
    let t = report("G1K1_LH").text();
    assert!(t.contains("DISAGREES"));
    assert!(t.contains("corrected"));
}
