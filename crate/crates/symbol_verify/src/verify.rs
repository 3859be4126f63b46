//! Solve each catalog system independently and compare against what is
//! printed: solutions, leading terms and claimed asymptotics.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::catalog::{self, Claim, ClaimKind, ClaimTarget, Region, SystemSpec};
use crate::leading::{balanced_lead, deflate_at_one, horner, low_high_lead, BalancedLead, Monomial};
use crate::linalg::{residual, solve_poly, solve_rat};
use crate::parse::parse;
use crate::poly::{to_f64, Poly};
use crate::ratfun::RatFun;
use crate::{Result, SymbolError};

/// Samples per denominator scan.
pub const SCAN_SAMPLES: usize = 10_000;
/// Low/high frequency ratios scanned in the low-high region.
pub const LOW_HIGH_RANGE: (f64, f64) = (1e-4, 1e-1);
/// Ratios scanned in the balanced region.
pub const BALANCED_RANGE: (f64, f64) = (0.1, 10.0);
/// Point at which residuals are additionally evaluated.
pub const SPOT: (i64, i64) = (1, 10);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lead {
    LowHigh(Monomial),
    Balanced(BalancedLead),
}

impl Lead {
    pub fn display(&self, names: [&str; 2]) -> String {
        match self {
            Lead::LowHigh(m) => m.display(names),
            Lead::Balanced(b) => format!("{} at (1,1), degree {}", b.value, b.degree),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimVerdict {
    Agrees,
    Disagrees(String),
    NotClaimed,
}

#[derive(Clone, Debug)]
pub struct UnknownReport {
    pub name: &'static str,
    /// The symbol the claims refer to (a channel or a channel difference).
    pub symbol: RatFun,
    pub lead: std::result::Result<Lead, String>,
    pub claim: Option<Claim>,
    pub verdict: ClaimVerdict,
}

#[derive(Clone, Debug)]
pub struct PrintedCheck {
    pub label: &'static str,
    pub channel: usize,
    /// `None` where nothing is printed; otherwise whether it equals the solve.
    pub matches: Vec<Option<bool>>,
    /// Leading term of each printed entry that fails to match.
    pub mismatch_leads: Vec<Option<String>>,
    /// For mismatches: exact values (printed, solved) at the spot point.
    pub mismatch_spot: Vec<Option<(Option<BigRational>, Option<BigRational>)>>,
    /// For mismatches: printed·den(solved) − num(solved)·den(printed).
    pub mismatch_residual: Vec<Option<Poly>>,
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenScan {
    pub range: (f64, f64),
    pub samples: usize,
    pub denominators: usize,
    pub zero_hits: usize,
    pub sign_changes: usize,
    /// Smallest |d(t)| over the samples, each d scaled to unit largest coefficient.
    pub min_modulus: f64,
}

impl DenScan {
    pub fn clean(&self) -> bool {
        self.zero_hits == 0 && self.sign_changes == 0
    }
}

#[derive(Clone, Debug)]
pub struct DisplayCheck {
    pub label: &'static str,
    pub printed_multiplier: &'static str,
    /// The multiplier in {ξ, η, ξ⁴, η⁴} whose symmetrization reproduces the display.
    pub matching_multiplier: Option<&'static str>,
}

#[derive(Clone, Debug)]
pub struct SymmetrizedReport {
    pub b_symmetric: bool,
    pub c_symmetric: bool,
    pub displays: Vec<DisplayCheck>,
    pub reduced_rows_match: [bool; 2],
}

#[derive(Clone, Debug)]
pub struct SystemReport {
    pub id: &'static str,
    pub role: &'static str,
    pub names: [&'static str; 2],
    pub residual_zero: bool,
    pub spot_residual_zero: bool,
    /// Solutions per right-hand-side channel.
    pub solutions: Vec<Vec<RatFun>>,
    pub unknowns: Vec<UnknownReport>,
    pub printed: Vec<PrintedCheck>,
    pub den_scan: DenScan,
    pub symmetrized: Option<SymmetrizedReport>,
    pub findings: Vec<String>,
}

impl SystemReport {
    pub fn claims_checked(&self) -> usize {
        self.unknowns.iter().filter(|u| u.verdict != ClaimVerdict::NotClaimed).count()
    }

    pub fn claims_agreeing(&self) -> usize {
        self.unknowns.iter().filter(|u| u.verdict == ClaimVerdict::Agrees).count()
    }

    /// (channel, unknown index) pairs where the variant with `label` differs.
    pub fn printed_mismatches(&self, label: &str) -> Vec<(usize, usize)> {
        mismatches(&self.printed, label)
    }

    /// Every printed entry is matched by some variant.
    pub fn printed_resolved(&self) -> bool {
        let n = self.unknowns.len();
        let channels = self.printed.iter().map(|p| p.channel).max().map_or(0, |c| c + 1);
        (0..channels).all(|ch| {
            (0..n).all(|i| {
                let vs: Vec<_> = self
                    .printed
                    .iter()
                    .filter(|p| p.channel == ch)
                    .filter_map(|p| p.matches[i])
                    .collect();
                vs.is_empty() || vs.iter().any(|&m| m)
            })
        })
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system {} — {}", self.id, self.role);
        let _ = writeln!(s, "variables: ({}, {})", self.names[0], self.names[1]);
        let _ = writeln!(
            s,
            "residual: {} (exact), {} at ({}, {})",
            zero_word(self.residual_zero),
            zero_word(self.spot_residual_zero),
            SPOT.0,
            SPOT.1
        );
        for (ch, sol) in self.solutions.iter().enumerate() {
            let _ = writeln!(s, "solution, channel {ch}:");
            for (u, f) in self.unknowns.iter().zip(sol) {
                let _ = writeln!(s, "  {} = {}", u.name, f.display(self.names));
            }
        }
        let _ = writeln!(s, "leading terms:");
        for u in &self.unknowns {
            let lead = match &u.lead {
                Ok(l) => l.display(self.names),
                Err(e) => format!("n/a ({e})"),
            };
            let claim = u.claim.as_ref().map_or("-".to_string(), |c| format!("{:?} {}", c.kind, c.value));
            let verdict = match &u.verdict {
                ClaimVerdict::Agrees => "agrees".to_string(),
                ClaimVerdict::Disagrees(r) => format!("DISAGREES: {r}"),
                ClaimVerdict::NotClaimed => "-".to_string(),
            };
            let _ = writeln!(s, "  {}: {lead}; claim {claim}; {verdict}", u.name);
        }
        for p in &self.printed {
            let marks: Vec<_> = p
                .matches
                .iter()
                .zip(&self.unknowns)
                .map(|(m, u)| match m {
                    None => format!("{} -", u.name),
                    Some(true) => format!("{} ok", u.name),
                    Some(false) => format!("{} MISMATCH", u.name),
                })
                .collect();
            let _ = writeln!(s, "printed [{}] channel {}: {} ({})", p.label, p.channel, marks.join(", "), p.note);
            for (i, u) in self.unknowns.iter().enumerate() {
                if let Some(l) = &p.mismatch_leads[i] {
                    let _ = writeln!(s, "  printed {} leads with {l}", u.name);
                }
                if let Some((pv, sv)) = &p.mismatch_spot[i] {
                    let show = |v: &Option<BigRational>| v.as_ref().map_or("pole".to_string(), |v| v.to_string());
                    let _ = writeln!(
                        s,
                        "  at ({}, {}): printed {} = {}, solved {}",
                        SPOT.0,
                        SPOT.1,
                        u.name,
                        show(pv),
                        show(sv)
                    );
                }
                if let Some(r) = &p.mismatch_residual[i] {
                    let _ = writeln!(s, "  cross-multiplied residual ({} terms): {}", r.len(), r.display(self.names));
                }
            }
        }
        let d = &self.den_scan;
        let _ = writeln!(
            s,
            "denominator scan: {} denominators × {} ratios in [{:e}, {:e}]: {} zeros, {} sign changes, min modulus {:.3e}",
            d.denominators, d.samples, d.range.0, d.range.1, d.zero_hits, d.sign_changes, d.min_modulus
        );
        if let Some(sr) = &self.symmetrized {
            let _ = writeln!(s, "symmetry of b, c: {}, {}", sr.b_symmetric, sr.c_symmetric);
            for dc in &sr.displays {
                let _ = writeln!(
                    s,
                    "display {} (printed multiplier {}): reproduced by {}",
                    dc.label,
                    dc.printed_multiplier,
                    dc.matching_multiplier.unwrap_or("none")
                );
            }
            let _ = writeln!(s, "reduced rows match: {:?}", sr.reduced_rows_match);
        }
        for f in &self.findings {
            let _ = writeln!(s, "finding: {f}");
        }
        s
    }
}

fn mismatches(printed: &[PrintedCheck], label: &str) -> Vec<(usize, usize)> {
    printed
        .iter()
        .filter(|p| p.label == label)
        .flat_map(|p| {
            p.matches
                .iter()
                .enumerate()
                .filter(|(_, m)| **m == Some(false))
                .map(move |(i, _)| (p.channel, i))
        })
        .collect()
}

fn zero_word(z: bool) -> &'static str {
    if z {
        "zero"
    } else {
        "NONZERO"
    }
}

fn parse_all(src: &[&str], vars: [char; 2]) -> Result<Vec<RatFun>> {
    src.iter().map(|s| parse(s, vars)).collect()
}

fn matrix(spec: &SystemSpec) -> Result<Vec<Vec<RatFun>>> {
    spec.equations.iter().map(|e| parse_all(&e.coeffs, spec.vars)).collect()
}

/// Solve with Laurent-polynomial entries when possible, otherwise over RatFun.
fn solve(m: &[Vec<RatFun>], rhs: &[RatFun]) -> Result<Vec<RatFun>> {
    let pm: Option<Vec<Vec<Poly>>> = m.iter().map(|r| r.iter().map(RatFun::as_poly).collect()).collect();
    let pr: Option<Vec<Poly>> = rhs.iter().map(RatFun::as_poly).collect();
    match (pm, pr) {
        (Some(pm), Some(pr)) => solve_poly(&pm, &pr),
        _ => solve_rat(m, rhs),
    }
}

/// Solve one right-hand-side channel of a plain (unsymmetrized) system.
pub fn solve_channel(spec: &SystemSpec, channel: usize) -> Result<Vec<RatFun>> {
    let m = matrix(spec)?;
    let rhs = parse_all(&spec.channels[channel].rhs, spec.vars)?;
    if spec.equations.iter().any(|e| e.sym_first || e.sym_rhs) {
        Ok(solve_symmetrized(&m, &rhs, spec)?.sol)
    } else {
        solve(&m, &rhs)
    }
}

fn spot_point() -> (BigRational, BigRational) {
    (BigRational::from_integer(SPOT.0.into()), BigRational::from_integer(SPOT.1.into()))
}

fn spot_zero(r: &[RatFun]) -> bool {
    let (x, y) = spot_point();
    r.iter().all(|f| f.eval(&x, &y).is_some_and(|v| v.is_zero()))
}

/// Solution of the symmetrized three-unknown system, with the coefficient
/// pieces a = A0 + Ab·b + Ac·c from the first (plain) equation.
struct SymSolve {
    sol: Vec<RatFun>,
    a_parts: [RatFun; 3],
    reduced: Vec<Vec<RatFun>>,
}

fn solve_symmetrized(m: &[Vec<RatFun>], rhs: &[RatFun], spec: &SystemSpec) -> Result<SymSolve> {
    let m00 = &m[0][0];
    if m00.is_zero() {
        return Err(SymbolError::Singular);
    }
    let a0 = &rhs[0] / m00;
    let ab = &(-&m[0][1]) / m00;
    let ac = &(-&m[0][2]) / m00;
    let mut red = Vec::new();
    let mut red_rhs = Vec::new();
    for (i, e) in spec.equations.iter().enumerate().skip(1) {
        let r = if e.sym_rhs { rhs[i].sym() } else { rhs[i].clone() };
        if e.sym_first {
            let w = &m[i][0];
            red.push(vec![&(w * &ab).sym() + &m[i][1], &(w * &ac).sym() + &m[i][2]]);
            red_rhs.push(&r - &(w * &a0).sym());
        } else {
            red.push(vec![&(&m[i][0] * &ab) + &m[i][1], &(&m[i][0] * &ac) + &m[i][2]]);
            red_rhs.push(&r - &(&m[i][0] * &a0));
        }
    }
    let bc = solve_rat(&red, &red_rhs)?;
    let a = &(&a0 + &(&ab * &bc[0])) + &(&ac * &bc[1]);
    let mut reduced = red;
    for (row, r) in reduced.iter_mut().zip(red_rhs) {
        row.push(r);
    }
    Ok(SymSolve { sol: vec![a, bc[0].clone(), bc[1].clone()], a_parts: [a0, ab, ac], reduced })
}

/// Residual of the symmetrized system evaluated without assuming symmetry.
fn symmetrized_residual(m: &[Vec<RatFun>], u: &[RatFun], rhs: &[RatFun], spec: &SystemSpec) -> Vec<RatFun> {
    spec.equations
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let first = &m[i][0] * &u[0];
            let first = if e.sym_first { first.sym() } else { first };
            let lhs = &(&first + &(&m[i][1] * &u[1])) + &(&m[i][2] * &u[2]);
            let r = if e.sym_rhs { rhs[i].sym() } else { rhs[i].clone() };
            &lhs - &r
        })
        .collect()
}

fn lead_of(f: &RatFun, spec: &SystemSpec) -> Result<Lead> {
    match spec.region {
        Region::LowHigh => low_high_lead(f, spec.low).map(Lead::LowHigh),
        Region::Balanced => balanced_lead(f).map(Lead::Balanced),
    }
}

fn low_exp(m: &Monomial, low: usize) -> i32 {
    if low == 0 {
        m.exps.0
    } else {
        m.exps.1
    }
}

fn judge(lead: &Lead, claim: &Claim, spec: &SystemSpec) -> Result<ClaimVerdict> {
    let target = parse(claim.value, spec.vars)?;
    let names = spec.var_names();
    let verdict = match (claim.kind, lead) {
        (ClaimKind::Exact, Lead::LowHigh(m)) => {
            let want = target
                .as_poly()
                .and_then(|p| Monomial::from_poly(&p))
                .ok_or_else(|| SymbolError::NoLeadingTerm(format!("claim `{}` is not a monomial", claim.value)))?;
            if *m == want {
                ClaimVerdict::Agrees
            } else {
                ClaimVerdict::Disagrees(format!("solved {}, claimed {}", m.display(names), want.display(names)))
            }
        }
        (ClaimKind::Exact, Lead::Balanced(b)) => {
            let want = balanced_lead(&target)?;
            if *b == want {
                ClaimVerdict::Agrees
            } else {
                ClaimVerdict::Disagrees(format!(
                    "solved {} (degree {}) at (1,1), claimed {} (degree {})",
                    b.value, b.degree, want.value, want.degree
                ))
            }
        }
        (ClaimKind::Magnitude, l) => {
            let want = target
                .as_poly()
                .filter(|p| p.len() <= 1)
                .map(|p| p.coeff((0, 0)))
                .ok_or_else(|| SymbolError::NoLeadingTerm(format!("claim `{}` is not a constant", claim.value)))?;
            let got = match l {
                Lead::LowHigh(m) => m.coef.abs(),
                Lead::Balanced(b) => b.value.abs(),
            };
            if got == want {
                ClaimVerdict::Agrees
            } else {
                ClaimVerdict::Disagrees(format!("solved magnitude {got}, claimed {want}"))
            }
        }
        (ClaimKind::Order, Lead::LowHigh(m)) => {
            let bound = target
                .as_poly()
                .and_then(|p| Monomial::from_poly(&p))
                .ok_or_else(|| SymbolError::NoLeadingTerm(format!("claim `{}` is not a monomial", claim.value)))?;
            if m.degree() == bound.degree() && low_exp(m, spec.low) >= low_exp(&bound, spec.low) {
                ClaimVerdict::Agrees
            } else {
                ClaimVerdict::Disagrees(format!("solved {} is not O({})", m.display(names), bound.display(names)))
            }
        }
        (ClaimKind::Order, Lead::Balanced(b)) => {
            let want = balanced_lead(&target)?;
            if b.degree == want.degree {
                ClaimVerdict::Agrees
            } else {
                ClaimVerdict::Disagrees(format!("degree {} against claimed {}", b.degree, want.degree))
            }
        }
    };
    Ok(verdict)
}

/// Exact evaluation of denominators restricted to (low, high) = (t, 1),
/// given as dense coefficients in t (lowest first).
pub fn scan_denominators(dens: &[Vec<BigRational>], range: (f64, f64), samples: usize) -> DenScan {
    let (lo, hi) = (range.0.ln(), range.1.ln());
    let signs: Vec<Vec<i8>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let t = (lo + (hi - lo) * i as f64 / (samples.max(2) - 1) as f64).exp();
            let t = BigRational::from_float(t).expect("finite sample");
            dens.iter()
                .map(|d| {
                    let v = horner(d, &t);
                    if v.is_positive() {
                        1
                    } else if v.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let zero_hits = signs.iter().flatten().filter(|&&s| s == 0).count();
    let sign_changes = (0..dens.len())
        .map(|j| signs.windows(2).filter(|w| w[0][j] * w[1][j] < 0).count())
        .sum();
    let scales: Vec<f64> = dens
        .iter()
        .map(|d| d.iter().map(|c| to_f64(&c.abs())).fold(0.0, f64::max))
        .collect();
    let min_modulus = (0..samples)
        .into_par_iter()
        .map(|i| {
            let t = (lo + (hi - lo) * i as f64 / (samples.max(2) - 1) as f64).exp();
            dens.iter()
                .zip(&scales)
                .map(|(d, s)| d.iter().rev().fold(0.0, |acc, c| acc * t + to_f64(c)).abs() / s)
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    DenScan { range, samples, denominators: dens.len(), zero_hits, sign_changes, min_modulus }
}

/// Denominators on the ray after cancelling factors (t − 1) shared with the
/// numerator; the quotients are unreduced and the mixed systems carry such
/// removable factors.
fn ray_denominators<'a>(fs: impl Iterator<Item = &'a RatFun>, low: usize) -> Vec<Vec<BigRational>> {
    let one = BigRational::one();
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for f in fs {
        if f.den().len() <= 1 {
            continue;
        }
        let (_, mut n) = f.num().on_ray(low);
        let (_, mut d) = f.den().on_ray(low);
        while !d.is_empty() && horner(&d, &one).is_zero() && horner(&n, &one).is_zero() {
            n = deflate_at_one(&n);
            d = deflate_at_one(&d);
        }
        if d.len() > 1 && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

const MULTIPLIERS: [&str; 4] = ["x", "y", "x^4", "y^4"];

fn check_symmetrized(spec: &SystemSpec, ss: &SymSolve) -> Result<SymmetrizedReport> {
    let sm = spec.symmetrized.as_ref().expect("caller checks");
    let [a0, ab, ac] = &ss.a_parts;
    let mut displays = Vec::new();
    for d in &sm.displays {
        let printed = parse_all(&d.coeffs, spec.vars)?;
        let mut matching = None;
        for m in MULTIPLIERS {
            let w = parse(m, spec.vars)?;
            let ours = [(&w * ab).sym(), (&w * ac).sym(), (&w * a0).sym()];
            if ours.iter().zip(&printed).all(|(o, p)| o.equals(p)) {
                matching = Some(m);
                break;
            }
        }
        displays.push(DisplayCheck { label: d.label, printed_multiplier: d.multiplier, matching_multiplier: matching });
    }
    let mut reduced_rows_match = [false; 2];
    for (k, row) in sm.reduced.iter().enumerate() {
        let printed = parse_all(row, spec.vars)?;
        reduced_rows_match[k] = ss.reduced[k].iter().zip(&printed).all(|(o, p)| o.equals(p));
    }
    Ok(SymmetrizedReport {
        b_symmetric: ss.sol[1].is_symmetric(),
        c_symmetric: ss.sol[2].is_symmetric(),
        displays,
        reduced_rows_match,
    })
}

pub fn verify_system(spec: &SystemSpec) -> Result<SystemReport> {
    let names = spec.var_names();
    let m = matrix(spec)?;
    let symmetrized = spec.equations.iter().any(|e| e.sym_first || e.sym_rhs);
    let mut solutions = Vec::new();
    let mut residual_zero = true;
    let mut spot_residual_zero = true;
    let mut sym_report = None;
    for ch in &spec.channels {
        let rhs = parse_all(&ch.rhs, spec.vars)?;
        let (sol, res) = if symmetrized {
            let ss = solve_symmetrized(&m, &rhs, spec)?;
            let res = symmetrized_residual(&m, &ss.sol, &rhs, spec);
            if spec.symmetrized.is_some() {
                sym_report = Some(check_symmetrized(spec, &ss)?);
            }
            (ss.sol, res)
        } else {
            let sol = solve(&m, &rhs)?;
            let res = residual(&m, &sol, &rhs);
            (sol, res)
        };
        residual_zero &= res.iter().all(RatFun::is_zero);
        spot_residual_zero &= spot_zero(&res);
        solutions.push(sol);
    }

    let symbols: Vec<RatFun> = match spec.claim_target {
        ClaimTarget::Channel(c) => solutions[c].clone(),
        ClaimTarget::Difference { plus, minus } => {
            solutions[plus].iter().zip(&solutions[minus]).map(|(p, q)| p - q).collect()
        }
    };

    let mut unknowns = Vec::new();
    let mut findings = Vec::new();
    for (i, name) in spec.unknowns.iter().enumerate() {
        let lead = lead_of(&symbols[i], spec);
        let claim = spec.claims[i].clone();
        let verdict = match (&lead, &claim) {
            (_, None) => ClaimVerdict::NotClaimed,
            (Ok(l), Some(c)) => judge(l, c, spec)?,
            (Err(e), Some(_)) => ClaimVerdict::Disagrees(format!("no leading term: {e}")),
        };
        if let ClaimVerdict::Disagrees(r) = &verdict {
            findings.push(format!("leading term of {name} conflicts with the stated one: {r}"));
        }
        unknowns.push(UnknownReport {
            name,
            symbol: symbols[i].clone(),
            lead: lead.map_err(|e| e.to_string()),
            claim,
            verdict,
        });
    }

    let mut printed = Vec::new();
    for p in &spec.printed {
        let sol = &solutions[p.channel];
        let mut matches = Vec::new();
        let mut mismatch_leads = Vec::new();
        let mut mismatch_spot = Vec::new();
        let mut mismatch_residual = Vec::new();
        let (sx, sy) = spot_point();
        for (i, e) in p.entries.iter().enumerate() {
            match e {
                None => {
                    matches.push(None);
                    mismatch_leads.push(None);
                    mismatch_spot.push(None);
                    mismatch_residual.push(None);
                }
                Some(src) => {
                    let f = parse(src, spec.vars)?;
                    let ok = f.equals(&sol[i]);
                    matches.push(Some(ok));
                    if ok {
                        mismatch_leads.push(None);
                        mismatch_spot.push(None);
                        mismatch_residual.push(None);
                    } else {
                        mismatch_leads
                            .push(Some(lead_of(&f, spec).map_or_else(|e| format!("n/a ({e})"), |l| l.display(names))));
                        mismatch_spot.push(Some((f.eval(&sx, &sy), sol[i].eval(&sx, &sy))));
                        mismatch_residual.push(Some(f.cross_residual(&sol[i])));
                    }
                }
            }
        }
        printed.push(PrintedCheck {
            label: p.label,
            channel: p.channel,
            matches,
            mismatch_leads,
            mismatch_spot,
            mismatch_residual,
            note: p.note,
        });
    }
    for (ch, i) in mismatches(&printed, catalog::AS_PRINTED) {
        let fixed = printed
            .iter()
            .any(|p| p.label != catalog::AS_PRINTED && p.channel == ch && p.matches[i] == Some(true));
        findings.push(format!(
            "printed {} (channel {}) does not solve the system{}",
            spec.unknowns[i],
            spec.channels[ch].name,
            if fixed { "; the corrected reading does" } else { "" }
        ));
    }

    let range = match spec.region {
        Region::LowHigh => LOW_HIGH_RANGE,
        Region::Balanced => BALANCED_RANGE,
    };
    let dens = ray_denominators(solutions.iter().flatten(), spec.low);
    let den_scan = scan_denominators(&dens, range, SCAN_SAMPLES);
    if !den_scan.clean() {
        findings.push(format!(
            "a solved denominator vanishes or changes sign in the scanned region ({} zeros, {} sign changes)",
            den_scan.zero_hits, den_scan.sign_changes
        ));
    }
    if let Some(sr) = &sym_report {
        for d in &sr.displays {
            match d.matching_multiplier {
                Some(mm) if parse(mm, spec.vars)?.equals(&parse(d.printed_multiplier, spec.vars)?) => {}
                Some(mm) => findings.push(format!(
                    "display {} is reproduced by multiplier {mm}, not {}",
                    d.label, d.printed_multiplier
                )),
                None => findings.push(format!("display {} is not reproduced by any candidate multiplier", d.label)),
            }
        }
        if !(sr.b_symmetric && sr.c_symmetric) {
            findings.push("solved b, c are not symmetric".into());
        }
    }

    Ok(SystemReport {
        id: spec.id,
        role: spec.role,
        names,
        residual_zero,
        spot_residual_zero,
        solutions,
        unknowns,
        printed,
        den_scan,
        symmetrized: sym_report,
        findings,
    })
}

/// Verify the whole catalog in parallel, in catalog order.
pub fn verify_all() -> Result<Vec<SystemReport>> {
    catalog::catalog().par_iter().map(verify_system).collect()
}

pub fn verify_by_id(id: &str) -> Result<SystemReport> {
    let spec = catalog::find(id).ok_or_else(|| SymbolError::UnknownSystem(id.to_string()))?;
    verify_system(&spec)
}

/// One line per system, for summaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub id: &'static str,
    pub residual_zero: bool,
    pub claims_checked: usize,
    pub claims_agreeing: usize,
    pub printed_mismatches: usize,
    pub printed_resolved: bool,
    pub denominators_clean: bool,
}

impl From<&SystemReport> for SummaryRow {
    fn from(r: &SystemReport) -> Self {
        Self {
            id: r.id,
            residual_zero: r.residual_zero && r.spot_residual_zero,
            claims_checked: r.claims_checked(),
            claims_agreeing: r.claims_agreeing(),
            printed_mismatches: r.printed_mismatches(catalog::AS_PRINTED).len(),
            printed_resolved: r.printed_resolved(),
            denominators_clean: r.den_scan.clean(),
        }
    }
}
