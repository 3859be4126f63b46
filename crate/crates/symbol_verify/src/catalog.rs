//! The catalog of normal-form symbol systems.
//!
//! Formulas are transcribed as plain text (see [`crate::parse`]). The
//! letters `x`, `y`, `z` stand for the frequency variables ξ, η, ζ; each
//! system uses two of them. Where a printed solution looks mistyped, the
//! literal transcription is kept and a corrected candidate is carried next
//! to it — the verifier reports which one agrees with the independent solve.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    LowHigh,
    Balanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantization {
    Holomorphic,
    Mixed,
    /// Symbols of a trilinear energy correction.
    Trilinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// The leading monomial itself (low-high), or diagonal value and degree (balanced).
    Exact,
    /// Only the modulus of the leading coefficient is stated.
    Magnitude,
    /// An upper bound O(monomial) on the leading behaviour.
    Order,
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub kind: ClaimKind,
    pub value: &'static str,
}

#[derive(Clone, Debug)]
pub struct Equation {
    pub coeffs: Vec<&'static str>,
    /// The first unknown enters as sym(coeff · unknown).
    pub sym_first: bool,
    /// The right-hand side is symmetrized.
    pub sym_rhs: bool,
}

#[derive(Clone, Debug)]
pub struct Channel {
    pub name: &'static str,
    pub rhs: Vec<&'static str>,
}

#[derive(Clone, Debug)]
pub struct Printed {
    pub label: &'static str,
    pub channel: usize,
    pub entries: Vec<Option<&'static str>>,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub enum ClaimTarget {
    Channel(usize),
    /// Claims refer to `solution[plus] − solution[minus]`.
    Difference { plus: usize, minus: usize },
}

/// A printed intermediate expression sym(m·a) = p·b + q·c + r.
#[derive(Clone, Debug)]
pub struct SymDisplay {
    pub label: &'static str,
    pub multiplier: &'static str,
    pub coeffs: [&'static str; 3],
}

#[derive(Clone, Debug)]
pub struct Symmetrized {
    pub displays: Vec<SymDisplay>,
    /// Printed reduced 2×2 system in (b, c): rows of [coef_b, coef_c, rhs].
    pub reduced: [[&'static str; 3]; 2],
}

#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub id: &'static str,
    pub role: &'static str,
    pub vars: [char; 2],
    /// Index of the low-frequency variable.
    pub low: usize,
    pub region: Region,
    pub quantization: Quantization,
    pub unknowns: Vec<&'static str>,
    pub equations: Vec<Equation>,
    pub channels: Vec<Channel>,
    pub printed: Vec<Printed>,
    pub claims: Vec<Option<Claim>>,
    pub claim_target: ClaimTarget,
    pub sign_constraint: Option<&'static str>,
    pub symmetrized: Option<Symmetrized>,
    pub notes: Vec<&'static str>,
}

impl SystemSpec {
    pub fn var_names(&self) -> [&'static str; 2] {
        let name = |c: char| match c {
            'x' => "xi",
            'y' => "eta",
            'z' => "zeta",
            _ => "?",
        };
        [name(self.vars[0]), name(self.vars[1])]
    }
}

fn eq(coeffs: &[&'static str]) -> Equation {
    Equation { coeffs: coeffs.to_vec(), sym_first: false, sym_rhs: false }
}

fn ch(name: &'static str, rhs: &[&'static str]) -> Channel {
    Channel { name, rhs: rhs.to_vec() }
}

fn exact(v: &'static str) -> Option<Claim> {
    Some(Claim { kind: ClaimKind::Exact, value: v })
}

fn mag(v: &'static str) -> Option<Claim> {
    Some(Claim { kind: ClaimKind::Magnitude, value: v })
}

fn order(v: &'static str) -> Option<Claim> {
    Some(Claim { kind: ClaimKind::Order, value: v })
}

fn printed(label: &'static str, channel: usize, entries: [Option<&'static str>; 4], note: &'static str) -> Printed {
    Printed { label, channel, entries: entries.to_vec(), note }
}

/// Label of the literal transcription.
pub const AS_PRINTED: &str = "as printed";
/// Label of the candidate correction.
pub const CORRECTED: &str = "corrected";

/// Holomorphic low-high / balanced matrix in (ξ, η), "ξ-first" orientation.
fn holo_matrix_lh() -> Vec<Equation> {
    vec![
        eq(&["x+y", "-x", "y^4", "0"]),
        eq(&["0", "y", "-x^4", "-(x+y)"]),
        eq(&["y", "0", "(x+y)^4", "x"]),
        eq(&["x^4", "-(x+y)^4", "0", "y^4"]),
    ]
}

/// Holomorphic matrix with the roles of ξ and η exchanged.
fn holo_matrix_swapped() -> Vec<Equation> {
    vec![
        eq(&["x+y", "-y", "x^4", "0"]),
        eq(&["0", "x", "-y^4", "-(x+y)"]),
        eq(&["x", "0", "(x+y)^4", "y"]),
        eq(&["y^4", "-(x+y)^4", "0", "x^4"]),
    ]
}

/// Mixed matrix in (η, ζ) for symbols acting on a conjugated low factor.
fn mixed_matrix_plus() -> Vec<Equation> {
    vec![
        eq(&["z-y", "y", "z^4", "0"]),
        eq(&["0", "z", "y^4", "-(z-y)"]),
        eq(&["z", "0", "(z-y)^4", "-y"]),
        eq(&["y^4", "(z-y)^4", "0", "-z^4"]),
    ]
}

/// Mixed matrix in (η, ζ), opposite orientation.
fn mixed_matrix_minus() -> Vec<Equation> {
    vec![
        eq(&["z-y", "-z", "-y^4", "0"]),
        eq(&["0", "y", "z^4", "z-y"]),
        eq(&["y", "0", "-(z-y)^4", "-z"]),
        eq(&["z^4", "-(z-y)^4", "0", "-y^4"]),
    ]
}

fn abcd() -> Vec<&'static str> {
    vec!["a", "b", "c", "d"]
}

pub fn catalog() -> Vec<SystemSpec> {
    vec![
        cubic_e3(),
        g0k0_lh(),
        g0k0_bal(),
        g0k0_c1(),
        g0k0_c2(),
        g1k1_lh(),
        g1k1_bal_h(),
        g1k1_bal_a(),
        g1k1_c1(),
        g1k1_c2(),
        fullnf_sym(),
        fullnf_mix(),
        hs_h(),
        hs_a(),
    ]
}

pub fn find(id: &str) -> Option<SystemSpec> {
    catalog().into_iter().find(|s| s.id == id)
}

fn cubic_e3() -> SystemSpec {
    SystemSpec {
        id: "CUBIC_E3",
        role: "cubic energy correction symbols",
        vars: ['x', 'y'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Trilinear,
        unknowns: abcd(),
        equations: vec![
            eq(&["(x+y)^4", "-y^4", "x", "0"]),
            eq(&["0", "x^4", "-y", "-(x+y)^4"]),
            eq(&["x^4", "0", "x+y", "y^4"]),
            eq(&["y", "-(x+y)", "0", "x"]),
        ],
        channels: vec![ch(
            "chi1",
            &[
                "7/2xy(x+y)^2+5/4x^2(x+y)^2+3/4x^3(x+y)",
                "-3x(x+y)^3+9/2x^2(x+y)^2-3x^3(x+y)",
                "3xy^3+15/2x^2y^2+5x^3y+2x^4",
                "3/2x",
            ],
        )],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("5(15x^6+60x^5y+125x^4y^2+157x^3y^3+120x^2y^4+51xy^5+8y^6)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-5(14x^6+49x^5y+77x^4y^2+60x^3y^3+13x^2y^4-13xy^5-8y^6)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(125x^9+875x^8y+2850x^7y^2+5633x^6y^3+7407x^5y^4+6708x^4y^5+4134x^3y^6+1600x^2y^7+300xy^8)/(4(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(40x^6+105x^5y+135x^4y^2+83x^3y^3+25x^2y^5)/(2(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription; the two printed fractions for c share a denominator and are summed",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("5(15x^6+60x^5y+125x^4y^2+157x^3y^3+120x^2y^4+51xy^5+8y^6)/(4(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-5(14x^6+49x^5y+77x^4y^2+60x^3y^3+13x^2y^4-13xy^5-8y^6)/(4(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    None,
                    Some("(40x^6+105x^5y+135x^4y^2+83x^3y^3+25x^2y^4)/(2(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "a, b: stray factor eta dropped from the denominator (homogeneity); d: 25x^2y^5 -> 25x^2y^4",
            ),
        ],
        claims: vec![exact("2/5"), exact("2/5"), exact("3xy^2"), exact("1/2x^2y^-2")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec!["the third frequency is eliminated through zeta = xi + eta"],
    }
}

const G0K0_RHS: [&str; 4] = ["-y", "-y", "y", "3/2y^4-y^3z-y^2z^2+3/2yz^3"];

fn g0k0_lh() -> SystemSpec {
    SystemSpec {
        id: "G0K0_LH",
        role: "quadratic normal form, low-high mixed symbols (first source pair)",
        vars: ['y', 'z'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_plus(),
        channels: vec![ch("chi1", &G0K0_RHS)],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("5(2y^6-5y^5z+12y^4z-13y^3z^3+12y^2z^4-5yz^5+2z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^6-11y^5z+11y^4z-17y^3z^3-25y^2z^4+25yz^5-25z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5z(y^2-yz+z^2)/(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6)"),
                    Some("-(8y^6-24y^5z+49y^4z-58y^3z^3+75y^2z^4-50yz^5+25z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("5(2y^6-5y^5z+12y^4z^2-13y^3z^3+12y^2z^4-5yz^5+2z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^6-11y^5z+11y^4z^2-17y^3z^3-25y^2z^4+25yz^5-25z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5z(y^2-yz+z^2)/(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6)"),
                    Some("-(8y^6-24y^5z+49y^4z^2-58y^3z^3+75y^2z^4-50yz^5+25z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "every y^4z term of degree six restored to y^4z^2 (homogeneity)",
            ),
        ],
        claims: vec![exact("1/5"), exact("-1/2"), exact("-1/5z^-3"), exact("-1/2")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec![],
    }
}

fn g0k0_bal() -> SystemSpec {
    let den_typo = "(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6)";
    let _ = den_typo;
    SystemSpec {
        id: "G0K0_BAL",
        role: "quadratic normal form, balanced mixed symbols (first source pair)",
        vars: ['y', 'z'],
        low: 0,
        region: Region::Balanced,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_plus(),
        channels: vec![ch("chi2", &G0K0_RHS)],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("5(2y^6-5y^5z+12y^4z^2-13y^3z^3+12y^2z^4-5yz^5+2z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^6-11y^5z+11y^4z^2-17y^3z^3-25y^2z^4+25yz^5-25z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5z(y^2-yz+z^2)/(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6)"),
                    Some("-(8y^6-24y^5z+49y^4z^2-58y^3z^3+75y^2z^4-50yz^5+25z^6)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("5(2y^6-5y^5z+12y^4z^2-13y^3z^3+12y^2z^4-5yz^5+2z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^6-11y^5z+11y^4z^2-17y^3z^3-25y^2z^4+25yz^5-25z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5z(y^2-yz+z^2)/(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6)"),
                    Some("-(8y^6-24y^5z+49y^4z^2-58y^3z^3+75y^2z^4-50yz^5+25z^6)/(2(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "denominator term 37y^4z -> 37y^4z^2 (homogeneity)",
            ),
        ],
        claims: vec![exact("1/5"), exact("-4/5yz^-1"), exact("-1/5z^-3"), exact("-1/2yz^-1")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: Some("zeta < eta"),
        symmetrized: None,
        notes: vec!["the holomorphic indicator restricts the verification region; it is not part of the algebra"],
    }
}

fn g0k0_c1() -> SystemSpec {
    SystemSpec {
        id: "G0K0_C1",
        role: "cubic normal form, first mixed system (first source pair)",
        vars: ['y', 'z'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_plus(),
        channels: vec![ch("chi1", &["-1/2z", "1/2y", "0", "1/2yz^3"])],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("z(-2y^7+11y^6z-33y^5z^2+58y^4z^3-71y^3z^4+52y^2z^5-25yz^6+5z^7)/(2y(z-y)(4y^6-12y^5z+37y^4z^2-54y^3y^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("y(y^2-yz+z^2)(2y^3z-y^2z^2+2yz^3+5z^4)/(2(z-y)(4y^6-12y^5z+37y^4z^2-54y^3y^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(-2y^5+3y^4z-7y^3z^2-2y^2z^3+5yz^4+5z^5)/(2y(z-y)(4y^6-12y^5z+37y^4z^2-54y^3y^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(-2y^7+11y^6z-33y^5z^2+63y^4z^3-76y^3z^4+52y^2z^5-20yz^6)/(2(z-y)(4y^6-12y^5z+37y^4z^2-54y^3y^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("z(-2y^7+11y^6z-33y^5z^2+58y^4z^3-71y^3z^4+52y^2z^5-25yz^6+5z^7)/(2y(z-y)(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("y(y^2-yz+z^2)(2y^3z-y^2z^2+2yz^3+5z^4)/(2(z-y)(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(-2y^5+3y^4z-7y^3z^2-2y^2z^3+5yz^4-5z^5)/(2y(z-y)(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(-2y^7+11y^6z-33y^5z^2+63y^4z^3-76y^3z^4+52y^2z^5-20yz^6)/(2(z-y)(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "denominator term 54y^3y^3 -> 54y^3z^3; c: sign of the z^5 term flipped",
            ),
        ],
        claims: vec![mag("1/10"), mag("1/10"), mag("1/10"), mag("2/5")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec![
            "magnitudes are read from the leading operators of the resulting normal form",
            "the last right-hand side is displayed with the cutoff in (xi, eta) while the rest of the system uses (eta, zeta); stored in (eta, zeta)",
        ],
    }
}

fn g0k0_c2() -> SystemSpec {
    SystemSpec {
        id: "G0K0_C2",
        role: "cubic normal form, second holomorphic system (first source pair)",
        vars: ['x', 'y'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Holomorphic,
        unknowns: abcd(),
        equations: holo_matrix_lh(),
        channels: vec![ch("chi1", &["-1/2y", "1/2x", "0", "5/2xy^3"])],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("(-5x^7-30x^6y-107x^5y^2-183x^4y^3-187x^3y^4-133x^2y^5-42xy^6-5y^7)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(-5x^6-10x^5y-37x^4y^2-85x^3y^3-112x^2y^4-85xy^5-30y^6)/(2(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(5x^5+12x^4y+15x^3y^2+25x^2y^3+22xy^4+5y^5)/(2xy(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-(5x^7+32x^6y+88x^5y^2+147x^4y^3+158x^3y^4+132x^2y^5+80xy^6+30y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("(-5x^7-30x^6y-107x^5y^2-183x^4y^3-187x^3y^4-113x^2y^5-42xy^6-5y^7)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    None,
                    None,
                    None,
                ],
                "a: coefficient 133x^2y^5 -> 113x^2y^5",
            ),
        ],
        claims: vec![mag("1/10"), mag("3/5"), mag("1/10"), mag("3/5")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec!["magnitudes are read from the leading operators of the resulting normal form"],
    }
}

fn g1k1_lh() -> SystemSpec {
    SystemSpec {
        id: "G1K1_LH",
        role: "quadratic normal form, low-high holomorphic symbols (second source pair)",
        vars: ['x', 'y'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Holomorphic,
        unknowns: abcd(),
        equations: holo_matrix_lh(),
        channels: vec![ch("chi1", &["0", "x+y", "x", "-(y^4+5/2xy^3+5x^2y^2+5x^3y+x^4)"])],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("(10x^7+70x^6y+170x^5y^2+227x^4y^3+184x^3y^4+80x^2y^5+5xy^6+10y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(10x^7+80x^6y+240x^5y^2+397x^4y^3+427x^3y^4+300x^2y^5+125xy^6+25y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(8x^4+18x^3y+20x^2y^2+15xy^3+5y^4)/(y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-(8x^3+10x^2y+10xy^2+5y^3)(2x^4+5x^3y+10x^2y^2+10xy^3+5y^4)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("(10x^7+70x^6y+170x^5y^2+227x^4y^3+184x^3y^4+80x^2y^5+5xy^6-10y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    None,
                    None,
                    None,
                ],
                "a: sign of the y^7 term flipped; this also flips the sign of the leading term",
            ),
        ],
        claims: vec![exact("1/5"), exact("1/2"), exact("1/5y^-3"), exact("-1/2")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec![],
    }
}

fn g1k1_bal_h() -> SystemSpec {
    SystemSpec {
        id: "G1K1_BAL_H",
        role: "quadratic normal form, balanced holomorphic symbols (second source pair)",
        vars: ['x', 'y'],
        low: 0,
        region: Region::Balanced,
        quantization: Quantization::Holomorphic,
        unknowns: abcd(),
        equations: holo_matrix_swapped(),
        channels: vec![ch(
            "chi2",
            &["0", "x+y", "y", "-(5/2y^4+5y^3x+5y^2x^2+5/2yx^3+x^4)"],
        )],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("(25y^7+100y^6x+200y^5x^2+242y^4x^3+190y^3x^4+80y^2x^5+5x^6+10x^7)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(25y^7+125y^6x+300y^5x^2+442y^4x^3+442y^3x^4+300y^2x^5+125yx^6+25x^7)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("5(y^4+3y^3x+4y^2x^2+3x^3y+x^4)/(x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-5(y^3+2y^2x+2yx^2+x^3)(2y^4+5y^3x+10y^2x^2+10yx^3+5x^4)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("(25y^7+100y^6x+200y^5x^2+242y^4x^3+190y^3x^4+80y^2x^5+5yx^6-10x^7)/(2x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    None,
                    None,
                    None,
                ],
                "a: 5x^6 -> 5yx^6 (homogeneity) and sign of the x^7 term flipped",
            ),
        ],
        claims: vec![exact("213/448"), exact("223/224"), exact("15/224y^-3"), exact("-15/28")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec![],
    }
}

fn g1k1_bal_a() -> SystemSpec {
    SystemSpec {
        id: "G1K1_BAL_A",
        role: "quadratic normal form, balanced mixed symbols (second source pair)",
        vars: ['y', 'z'],
        low: 0,
        region: Region::Balanced,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_minus(),
        channels: vec![ch("chi2", &["z", "-z", "-z", "-3/2z^4+z^3y+y^2z^2-3/2zy^3"])],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("-(8y^6z-24y^5z^2+49y^4z^3-58y^3z^4+75y^2z^5-50yz^6+25z^7)/(2y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-(-2y^6z+11y^5z^2-11y^4z^3+17y^3z^4+25y^2z^5-25yz^6+25z^7)/(2y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5(y^2z^2-yz^3+z^4)/(y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("5(y^2z-yz^2+z^3)(2y^4-3y^3z+7z^2z^2-3yz^3+2z^4)/(2y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("-(8y^6z-24y^5z^2+49y^4z^3-58y^3z^4+75y^2z^5-50yz^6+25z^7)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-(-2y^6z+11y^5z^2-11y^4z^3+17y^3z^4+25y^2z^5-25yz^6+25z^7)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("-5(y^2z^2-yz^3+z^4)/(y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("5(y^2z-yz^2+z^3)(2y^4-3y^3z+7y^2z^2-3yz^3+2z^4)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "denominator term 37y^4z -> 37y^4z^2; d: factor 7z^2z^2 -> 7y^2z^2",
            ),
        ],
        claims: vec![exact("-1/2"), exact("-4/5"), exact("-1/5y^-3"), exact("1/2")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: Some("zeta < eta"),
        symmetrized: None,
        notes: vec![],
    }
}

fn g1k1_c1() -> SystemSpec {
    SystemSpec {
        id: "G1K1_C1",
        role: "cubic normal form, first holomorphic system (second source pair)",
        vars: ['x', 'y'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Holomorphic,
        unknowns: abcd(),
        equations: holo_matrix_lh(),
        channels: vec![ch("chi1", &["1/2y", "-1/2x", "-1/2y", "-25/4xy^3"])],
        printed: vec![printed(
            AS_PRINTED,
            0,
            [
                Some("(10x^7+60x^6y+289x^5y^2+520x^4y^3+534x^3y^4+321x^2y^5+134xy^6+20y^7)/(4x(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                Some("(10x^6+20x^5y+149x^4y^2+399x^3y^3+528x^2y^4+395xy^5+135y^6)/(4(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                Some("-(5x^5+17x^4y+30x^3y^2+60x^2y^3+52xy^4+10y^5)/(2xy(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                Some("(10x^7+74x^6y+196x^5y^2+344x^4y^3+401x^3y^4+418x^2y^5+310xy^6+135y^7)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
            ],
            "literal transcription",
        )],
        claims: vec![mag("1/5"), mag("27/20"), mag("1/5"), mag("27/20")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec!["magnitudes are read from the leading operators of the resulting normal form"],
    }
}

fn g1k1_c2() -> SystemSpec {
    SystemSpec {
        id: "G1K1_C2",
        role: "cubic normal form, second mixed system (second source pair)",
        vars: ['y', 'z'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_plus(),
        channels: vec![ch("chi1", &["1/2z", "-1/2y", "-1/2z", "-3yz^3"])],
        printed: vec![printed(
            AS_PRINTED,
            0,
            [
                Some("(-2y^7z+11y^6z^2-43y^5z^3+73y^4z^4-106y^3z^5+72y^2z^6-40yz^7+10z^8)/(y(y-z)(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6))"),
                Some("(2y^5z-y^4z^2-6y^3z^3+21y^2z^4-30yz^5+25z^6)/(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6)"),
                Some("(-2y^4-y^3z-3y^2z^2-15yz^3+10z^4)/(y(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6))"),
                Some("-(2y^7-13y^6z+36y^5z^2-70y^4z^3+79y^3z^4-29y^2z^5-5yz^6+25z^7)/((y-z)(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6))"),
            ],
            "literal transcription",
        )],
        claims: vec![mag("1/5"), mag("1/2"), mag("1/5"), mag("1/2")],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: None,
        notes: vec![
            "magnitudes are read from the leading operators of the resulting normal form",
            "the first equation names the second unknown without its system superscript; read as b",
        ],
    }
}

fn fullnf_sym() -> SystemSpec {
    SystemSpec {
        id: "FULLNF_SYM",
        role: "full quadratic normal form, symmetrized balanced holomorphic system",
        vars: ['x', 'y'],
        low: 0,
        region: Region::Balanced,
        quantization: Quantization::Holomorphic,
        unknowns: vec!["a", "b", "c"],
        equations: vec![
            eq(&["x+y", "-2y", "2x^4"]),
            Equation { coeffs: vec!["x", "0", "(x+y)^4"], sym_first: true, sym_rhs: false },
            Equation { coeffs: vec!["y^4", "-(x+y)^4", "0"], sym_first: true, sym_rhs: true },
        ],
        channels: vec![ch("chi2", &["x+y", "-1/2(x+y)", "7/2x^4+15/2x^3y+5x^2y^2"])],
        printed: vec![
            Printed {
                label: AS_PRINTED,
                channel: 0,
                entries: vec![
                    None,
                    Some("-(x+y)^2(25y^6+100y^5x+200y^4x^2+242y^3x^3+200y^2x^4+100y^2x^5+25x^6)/(4xy(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-5(x+y)^3(x^2+xy+y^2)/(2xy(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                note: "literal transcription; only b and c are displayed",
            },
            Printed {
                label: CORRECTED,
                channel: 0,
                entries: vec![
                    None,
                    Some("-(x+y)^2(25y^6+100y^5x+200y^4x^2+242y^3x^3+200y^2x^4+100yx^5+25x^6)/(4xy(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    None,
                ],
                note: "b: 100y^2x^5 -> 100yx^5 (homogeneity and the stated symmetry of b)",
            },
        ],
        claims: vec![None, None, None],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: None,
        symmetrized: Some(Symmetrized {
            displays: vec![
                SymDisplay {
                    label: "sym(eta a)",
                    multiplier: "y",
                    coeffs: ["2xy/(x+y)", "-(x^5+y^5)/(x+y)", "1/2(x+y)"],
                },
                SymDisplay {
                    label: "sym(xi^4 a)",
                    multiplier: "x^4",
                    coeffs: ["(x^5+y^5)/(x+y)", "-2x^4y^4/(x+y)", "1/2(x^4+y^4)"],
                },
            ],
            reduced: [
                ["2xy/(x+y)", "((x+y)^5-(x^5+y^5))/(x+y)", "-(x+y)"],
                [
                    "((x^5+y^5)-(x+y)^5)/(x+y)",
                    "-2x^4y^4/(x+y)",
                    "5/4x^4+15/4x^3y+5x^2y^2+15/4xy^3+5/4y^4",
                ],
            ],
        }),
        notes: vec![
            "b and c are required to be symmetric in (xi, eta); the solve assumes it and the result is checked",
            "the symmetrized right-hand side of the last equation carries a 'sys' subscript in print; read as sym",
        ],
    }
}

fn fullnf_mix() -> SystemSpec {
    SystemSpec {
        id: "FULLNF_MIX",
        role: "full quadratic normal form, balanced mixed system",
        vars: ['y', 'z'],
        low: 0,
        region: Region::Balanced,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_minus(),
        channels: vec![ch(
            "chi2",
            &["z-y", "z-y", "z-y", "3/2z^4-5/2z^3y+5/2zy^3-3/2y^4"],
        )],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("z(-12y^6+51y^5z-121y^4z^2+147y^3z^3-95y^2z^4+25yz^5+5z^6)/(2y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^7-13y^6z+22y^5z^2-28y^4z^3-8y^3z^4+30y^2z^5-30yz^6+5z^7)/(2y(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(4y^4-11y^2z+24y^2z^2-16yz^3+9z^4)/(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6)"),
                    Some("-(10y^7-35y^6z+85y^5z^2-125y^4z^3+133y^3z^4-109y^2z^5+59yz^6-18z^7)/(2(4y^6-12y^5z+37y^4z-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "literal transcription",
            ),
            printed(
                CORRECTED,
                0,
                [
                    Some("z(-12y^6+51y^5z-121y^4z^2+147y^3z^3-95y^2z^4+25yz^5+5z^6)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(2y^7-13y^6z+22y^5z^2-28y^4z^3-8y^3z^4+30y^2z^5-30yz^6+5z^7)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(4y^4-11y^3z+24y^2z^2-16yz^3+9z^4)/(y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                    Some("(10y^7-35y^6z+85y^5z^2-125y^4z^3+133y^3z^4-109y^2z^5+59yz^6-18z^7)/(2y(4y^6-12y^5z+37y^4z^2-54y^3z^3+75y^2z^4-50yz^5+25z^6))"),
                ],
                "denominator 37y^4z -> 37y^4z^2; c: 11y^2z -> 11y^3z and a factor eta restored in the denominator; d: overall sign and a factor eta in the denominator",
            ),
        ],
        claims: vec![None, None, None, None],
        claim_target: ClaimTarget::Channel(0),
        sign_constraint: Some("zeta < eta"),
        symmetrized: None,
        notes: vec!["no leading terms are stated for this system"],
    }
}

fn hs_h() -> SystemSpec {
    SystemSpec {
        id: "HS_H",
        role: "commutator normal form for the <D>^s-conjugated system, holomorphic",
        vars: ['x', 'y'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Holomorphic,
        unknowns: abcd(),
        equations: holo_matrix_swapped(),
        channels: vec![
            ch("chi3", &["0", "x+x^2/y", "x", "-(5/2xy^3+5x^2y^2+5x^3y+5/2x^4+x^5/y)"]),
            ch("s*chi1", &["1/2x", "1/2x", "1/2x", "-(2xy^3+3x^2y^2+2x^3y+1/2x^4)"]),
        ],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("(-10x^7+5x^6y+80x^5y^2+190x^4y^3+242x^3y^4+200x^2y^5+100xy^6+25y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(25x^7+125x^6y+300x^5y^2+442x^4y^3+442x^3y^4+300x^2y^5+125xy^6+25y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("5(x^4+3x^3y+4x^2y^2+3xy^3+y^4)/(y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-5(5x^7+20x^6y+40x^5y^2+50x^4y^3+42x^3y^4+24x^2y^5+9xy^6+2y^7)/(2y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription, chi3 part",
            ),
            printed(
                AS_PRINTED,
                1,
                [
                    Some("(-2x^7+45x^6y+190x^5y^2+390x^4y^3+487x^3y^4+400x^2y^5+200xy^6+50y^7)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("(-5x^7+35x^6y+180x^5y^2+385x^4y^3+487x^3y^4+400x^2y^5+200xy^6+50y^7)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("x^3(x+y)/(y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                    Some("-(5x^7+10x^6y+10x^5y^2+5x^4y^3+2x^3y^4)/(4y(25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6))"),
                ],
                "literal transcription, s*chi1 part (coefficient of s)",
            ),
        ],
        claims: vec![order("xy^-1"), order("xy^-1"), order("y^-3"), order("1")],
        claim_target: ClaimTarget::Difference { plus: 1, minus: 0 },
        sign_constraint: None,
        symmetrized: None,
        notes: vec![
            "right-hand sides split by linearity into a chi3 channel and an s*chi1 channel; each is solved separately",
            "order claims refer to the combined symbol, using chi3 = -s*chi1 + lower order",
        ],
    }
}

fn hs_a() -> SystemSpec {
    SystemSpec {
        id: "HS_A",
        role: "commutator normal form for the <D>^s-conjugated system, mixed",
        vars: ['y', 'z'],
        low: 0,
        region: Region::LowHigh,
        quantization: Quantization::Mixed,
        unknowns: abcd(),
        equations: mixed_matrix_minus(),
        channels: vec![
            ch("chi3", &["-y", "y", "y", "3/2yz^3-y^2z^2-y^3z+3/2y^4"]),
            ch("s*chi1", &["-1/2y", "1/2y", "1/2y", "2yz^3-3y^2z^2+2y^3z-1/2y^4"]),
        ],
        printed: vec![
            printed(
                AS_PRINTED,
                0,
                [
                    Some("(8y^6-24y^5z+49y^4z^2-58y^3z^3+75y^2z^4-50yz^5+25z^6)/(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6)"),
                    Some("(-2y^6+11y^5z-11y^4z^2+17y^3z^3+25y^2z^4-25yz^5+25z^6)/(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6)"),
                    Some("10(y^2z-yz^2+z^3)/(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6)"),
                    Some("-5(2y^6-5y^5z+12y^4z^2-13y^3z^3+12y^2z^4-5yz^5+2z^6)/(8y^6-24y^5z+74y^4z^2-108y^3z^3+150y^2z^4-100yz^5+50z^6)"),
                ],
                "literal transcription, chi3 part",
            ),
            printed(AS_PRINTED, 1, [Some("1/2"), Some("1/2"), Some("0"), Some("0")], "literal transcription, s*chi1 part"),
        ],
        claims: vec![order("y^3z^-3"), order("yz^-1"), order("y^-3"), order("1")],
        claim_target: ClaimTarget::Difference { plus: 1, minus: 0 },
        sign_constraint: None,
        symmetrized: None,
        notes: vec![
            "right-hand sides split by linearity into a chi3 channel and an s*chi1 channel; each is solved separately",
            "order claims refer to the combined symbol, using chi3 = -s*chi1 + lower order",
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_systems_with_unique_ids() {
        let c = catalog();
        assert_eq!(c.len(), 14);
        let mut ids: Vec<_> = c.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 14);
    }

    #[test]
    fn shapes_are_consistent() {
        for s in catalog() {
            let n = s.unknowns.len();
            assert_eq!(s.equations.len(), n, "{}", s.id);
            assert!(s.equations.iter().all(|e| e.coeffs.len() == n), "{}", s.id);
            assert!(s.channels.iter().all(|c| c.rhs.len() == n), "{}", s.id);
            assert!(s.printed.iter().all(|p| p.entries.len() == n), "{}", s.id);
            assert_eq!(s.claims.len(), n, "{}", s.id);
        }
    }

    #[test]
    fn symmetrized_system_has_three_equations() {
        let s = find("FULLNF_SYM").unwrap();
        assert_eq!(s.equations.len(), 3);
        assert!(s.symmetrized.is_some());
        assert!(s.equations[1].sym_first && s.equations[2].sym_first);
    }
}
