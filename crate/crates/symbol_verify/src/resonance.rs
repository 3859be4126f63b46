//! Resonance identities for the dispersion |ξ|^{5/2}.
//!
//! Three waves: the product over sign choices of |ξ|^{5/2} ± |η|^{5/2} ±
//! |ξ+η|^{5/2} is a polynomial, ξ²η²·D(ξ,η) with D a positive sextic; this
//! is checked as an exact identity, together with each step of a regrouping
//! of D and an exact positivity certificate.
//!
//! Four waves: signed sums of |ξᵢ|^{5/2} over frequencies summing to zero.
//! For integers n = k²m with m squarefree, n^{5/2} = n²k·√m, and square
//! roots of distinct squarefree integers are linearly independent over ℚ,
//! so vanishing is decided exactly by grouping terms by m.

use std::collections::BTreeMap;

use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::parse::parse;
use crate::poly::Poly;
use crate::ratfun::RatFun;

const XY: [char; 2] = ['x', 'y'];

fn poly(src: &str) -> Poly {
    parse(src, XY)
        .ok()
        .and_then(|f| f.as_poly())
        .expect("built-in polynomial literal")
}

/// The sextic 25ξ⁶+100ξ⁵η+200ξ⁴η²+246ξ³η³+200ξ²η⁴+100ξη⁵+25η⁶.
pub fn sextic() -> Poly {
    poly("25x^6+100x^5y+200x^4y^2+246x^3y^3+200x^2y^4+100xy^5+25y^6")
}

#[derive(Clone, Debug)]
pub struct ThreeWaveReport {
    /// (ξ⁵+η⁵−(ξ+η)⁵)² − 4ξ⁵η⁵ − ξ²η²·D.
    pub identity_residual: Poly,
    /// 25F² − 4ξ³η³ − D with F = (ξ+η)(ξ²+ξη+η²) = ξ³+2ξ²η+2ξη²+η³.
    pub factored_residual: Poly,
    /// 25(ξ⁴+η⁴)(ξ+η)² + 50ξ²η²(ξ+η)² + ξ²η²(125ξ²+146ξη+125η²) − D.
    pub regrouped_residual: Poly,
    /// 25(ξ²+η²)²(ξ+η)² + ξ²η²(125ξ²+146ξη+125η²) − D.
    pub sos_residual: Poly,
    /// (25ξ + 73/25·η)² + (125 − 73²/125)η² − (125ξ²+146ξη+125η²).
    pub square_as_written_residual: Poly,
    /// 125(ξ + 73/125·η)² + (125 − 73²/125)η² − (125ξ²+146ξη+125η²).
    pub completed_square_residual: Poly,
    /// 125 − 73²/125.
    pub sos_margin: BigRational,
    /// Residuals of (ξ+η)² − 4ξη − (ξ−η)² and ξ²+ξη+η² − 3ξη − (ξ−η)².
    pub amgm_residuals: [Poly; 2],
    pub lhs_at_one: BigRational,
    pub rhs_at_one: BigRational,
    pub sextic_symmetric: bool,
}

impl ThreeWaveReport {
    /// D > 0 away from the origin. From D = 25F² − 4ξ³η³: for ξη ≤ 0 both
    /// terms are ≥ 0 and not both zero; for ξη > 0 the two AM-GM identities
    /// give F² ≥ 36ξ³η³, so D ≥ 896ξ³η³ > 0.
    pub fn positivity_certified(&self) -> bool {
        self.factored_residual.is_zero() && self.amgm_residuals.iter().all(Poly::is_zero)
    }

    /// The identity holds, its value at (1,1) agrees, and D is certified positive.
    pub fn passed(&self) -> bool {
        self.identity_residual.is_zero() && self.lhs_at_one == self.rhs_at_one && self.positivity_certified()
    }

    /// Steps of the displayed regrouping that do not hold.
    pub fn findings(&self) -> Vec<String> {
        let names = ["xi", "eta"];
        let mut f = Vec::new();
        if !self.regrouped_residual.is_zero() {
            f.push(format!(
                "regrouping 25(xi^4+eta^4)(xi+eta)^2 + 50xi^2eta^2(xi+eta)^2 + xi^2eta^2(125xi^2+146xi eta+125eta^2) misses D by {}",
                self.regrouped_residual.display(names)
            ));
        }
        if !self.sos_residual.is_zero() {
            f.push(format!(
                "sum-of-squares form 25(xi^2+eta^2)^2(xi+eta)^2 + xi^2eta^2(...) misses D by {}",
                self.sos_residual.display(names)
            ));
        }
        if !self.square_as_written_residual.is_zero() {
            f.push(format!(
                "square (25xi + 73/25 eta)^2 does not complete 125xi^2+146xi eta+125eta^2 (off by {}); 125(xi + 73/125 eta)^2 does",
                self.square_as_written_residual.display(names)
            ));
        }
        f
    }

    pub fn text(&self) -> String {
        let z = |p: &Poly| {
            if p.is_zero() {
                "0".to_string()
            } else {
                p.display(["xi", "eta"])
            }
        };
        let mut s = String::new();
        s += "three-wave product identity\n";
        s += &format!("  (xi^5+eta^5-(xi+eta)^5)^2 - 4xi^5eta^5 - xi^2eta^2 D: {}\n", z(&self.identity_residual));
        s += &format!("  value at xi = eta = 1: lhs {}, rhs {}\n", self.lhs_at_one, self.rhs_at_one);
        s += &format!("  25F^2 - 4xi^3eta^3 - D: {}\n", z(&self.factored_residual));
        s += &format!("  regrouped form - D: {}\n", z(&self.regrouped_residual));
        s += &format!("  sum-of-squares form - D: {}\n", z(&self.sos_residual));
        s += &format!("  square as written: {}\n", z(&self.square_as_written_residual));
        s += &format!("  completed square: {}\n", z(&self.completed_square_residual));
        s += &format!("  margin 125 - 73^2/125 = {}\n", self.sos_margin);
        s += &format!(
            "  AM-GM identities: {}, {}\n",
            z(&self.amgm_residuals[0]),
            z(&self.amgm_residuals[1])
        );
        s += &format!("  D positive away from the origin: {}\n", self.positivity_certified());
        s += &format!("  sextic symmetric: {}\n", self.sextic_symmetric);
        for f in self.findings() {
            s += &format!("  finding: {f}\n");
        }
        s += &format!("  verdict: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

pub fn three_wave_identity() -> ThreeWaveReport {
    let d = sextic();
    let wd = &poly("x^2y^2") * &d;
    let lhs = poly("(x^5+y^5-(x+y)^5)^2-4x^5y^5");
    let quad = poly("125x^2+146xy+125y^2");
    let one = BigRational::one();
    ThreeWaveReport {
        identity_residual: &lhs - &wd,
        factored_residual: &poly("25((x+y)(x^2+xy+y^2))^2-4x^3y^3") - &d,
        regrouped_residual: &poly("25(x^4+y^4)(x+y)^2+50x^2y^2(x+y)^2+x^2y^2(125x^2+146xy+125y^2)") - &d,
        sos_residual: &poly("25(x^2+y^2)^2(x+y)^2+x^2y^2(125x^2+146xy+125y^2)") - &d,
        square_as_written_residual: &poly("(25x+73/25y)^2+(125-73^2/125)y^2") - &quad,
        completed_square_residual: &poly("125(x+73/125y)^2+(125-73^2/125)y^2") - &quad,
        sos_margin: BigRational::from_integer(125.into()) - BigRational::new(5329.into(), 125.into()),
        amgm_residuals: [
            poly("(x+y)^2-4xy-(x-y)^2"),
            poly("x^2+xy+y^2-3xy-(x-y)^2"),
        ],
        lhs_at_one: lhs.eval(&one, &one).expect("polynomial"),
        rhs_at_one: wd.eval(&one, &one).expect("polynomial"),
        sextic_symmetric: d.swap() == d,
    }
}

/// The cubic energy-correction symbols (a, b, c, d), solved exactly, as
/// functions of (ξ, η).
pub fn cubic_correction_symbols() -> Vec<RatFun> {
    let spec = crate::catalog::find("CUBIC_E3").expect("catalog entry");
    crate::verify::solve_channel(&spec, 0).expect("nonsingular system")
}

pub type Q = Ratio<i64>;

/// Outcome of one sign pattern  |ξ₀|^{5/2} + s₁|ξ₁|^{5/2} + s₂|ξ₂|^{5/2} + s₃|ξ₃|^{5/2}.
#[derive(Clone, Debug, PartialEq)]
pub struct Pattern {
    pub signs: [i8; 3],
    pub vanishes: bool,
    pub value: f64,
}

/// ξ₀ = −ξ₁−ξ₂−ξ₃ together with the inputs.
pub fn four_frequencies(t: [Q; 3]) -> [Q; 4] {
    [-(t[0] + t[1] + t[2]), t[0], t[1], t[2]]
}

/// The four moduli split into two equal pairs.
pub fn is_paired(t: [Q; 3]) -> bool {
    let a: Vec<Q> = four_frequencies(t).iter().map(|q| q.abs()).collect();
    (a[0] == a[1] && a[2] == a[3]) || (a[0] == a[2] && a[1] == a[3]) || (a[0] == a[3] && a[1] == a[2])
}

/// n = k²·m with m squarefree.
fn square_split(mut n: u64) -> (u64, u64) {
    let mut k = 1;
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= p;
        }
        p += 1;
    }
    (k, m * n)
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// All eight sign patterns of a triple, decided exactly.
pub fn patterns(t: [Q; 3]) -> Vec<Pattern> {
    let f = four_frequencies(t);
    let l = f.iter().fold(1, |acc, q| lcm(acc, *q.denom()));
    let ints: Vec<u64> = f.iter().map(|q| (q * l).to_integer().unsigned_abs()).collect();
    let scale = (l as f64).powf(2.5);
    let mut out = Vec::with_capacity(8);
    for bits in 0..8u8 {
        let signs = [0, 1, 2].map(|i| if bits >> i & 1 == 0 { 1i8 } else { -1 });
        let sign = |i: usize| if i == 0 { 1i128 } else { signs[i - 1] as i128 };
        // coefficient of √m, per squarefree m
        let mut groups: BTreeMap<u64, i128> = BTreeMap::new();
        let mut value = 0.0;
        for (i, &n) in ints.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let (k, m) = square_split(n);
            *groups.entry(m).or_default() += sign(i) * (n as i128) * (n as i128) * k as i128;
            value += sign(i) as f64 * (n as f64).powf(2.5);
        }
        out.push(Pattern { signs, vanishes: groups.values().all(|c| *c == 0), value: value / scale });
    }
    out
}

/// Rational frequency lattice: the distinct values p/q with 0 < |p| ≤
/// `max_numerator` and q in `denominators`, sorted; triples are visited in
/// lexicographic order over that sorted list.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub max_numerator: i64,
    pub denominators: Vec<i64>,
    /// Stop after this many unpaired triples.
    pub unpaired_target: usize,
}

impl Default for Lattice {
    fn default() -> Self {
        Self { max_numerator: 6, denominators: vec![1, 2, 3], unpaired_target: 1000 }
    }
}

#[derive(Clone, Debug)]
pub struct FourWaveReport {
    pub unpaired_checked: usize,
    pub unpaired_vanishing: Vec<[Q; 3]>,
    pub paired_checked: usize,
    pub paired_without_zero: Vec<[Q; 3]>,
    pub min_unpaired_modulus: f64,
    pub argmin: Option<[Q; 3]>,
}

impl FourWaveReport {
    pub fn passed(&self) -> bool {
        self.unpaired_vanishing.is_empty() && self.paired_without_zero.is_empty() && self.paired_checked > 0
    }

    pub fn text(&self) -> String {
        let fmt = |t: &[Q; 3]| format!("({}, {}, {})", t[0], t[1], t[2]);
        let mut s = String::new();
        s += "four-wave sign-pattern scan\n";
        s += &format!("  unpaired triples: {}, with a vanishing pattern: {}\n", self.unpaired_checked, self.unpaired_vanishing.len());
        for t in &self.unpaired_vanishing {
            s += &format!("    {}\n", fmt(t));
        }
        s += &format!("  paired triples: {}, without an exact zero: {}\n", self.paired_checked, self.paired_without_zero.len());
        s += &format!(
            "  minimum |combination| over unpaired triples: {:.6e} at {}\n",
            self.min_unpaired_modulus,
            self.argmin.as_ref().map_or("-".into(), fmt)
        );
        s += &format!("  verdict: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

pub fn lattice_values(lat: &Lattice) -> Vec<Q> {
    let mut v: Vec<Q> = lat
        .denominators
        .iter()
        .flat_map(|&q| (-lat.max_numerator..=lat.max_numerator).filter(|&p| p != 0).map(move |p| Q::new(p, q)))
        .collect();
    v.sort();
    v.dedup();
    v
}

pub fn four_wave_scan(lat: &Lattice) -> FourWaveReport {
    let mut rep = FourWaveReport {
        unpaired_checked: 0,
        unpaired_vanishing: Vec::new(),
        paired_checked: 0,
        paired_without_zero: Vec::new(),
        min_unpaired_modulus: f64::INFINITY,
        argmin: None,
    };
    let values = lattice_values(lat);
    'outer: for &a in &values {
        for &b in &values {
            for &c in &values {
                let t = [a, b, c];
                if four_frequencies(t)[0].is_zero() {
                    continue;
                }
                let ps = patterns(t);
                if is_paired(t) {
                    rep.paired_checked += 1;
                    if !ps.iter().any(|p| p.vanishes) {
                        rep.paired_without_zero.push(t);
                    }
                    continue;
                }
                rep.unpaired_checked += 1;
                if ps.iter().any(|p| p.vanishes) {
                    rep.unpaired_vanishing.push(t);
                }
                let m = ps.iter().map(|p| p.value.abs()).fold(f64::INFINITY, f64::min);
                if m < rep.min_unpaired_modulus {
                    rep.min_unpaired_modulus = m;
                    rep.argmin = Some(t);
                }
                if rep.unpaired_checked >= lat.unpaired_target {
                    break 'outer;
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_split() {
        assert_eq!(square_split(72), (6, 2));
        assert_eq!(square_split(1), (1, 1));
        assert_eq!(square_split(49), (7, 1));
        assert_eq!(square_split(30), (1, 30));
    }

    #[test]
    fn pairing_detection() {
        let q = |n| Q::from_integer(n);
        assert!(is_paired([q(1), q(-1), q(2)])); // ξ₀ = −2
        assert!(!is_paired([q(1), q(2), q(3)]));
    }
}
