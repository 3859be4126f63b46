//! Cofactor determinants and Cramer's rule over polynomial and rational entries.

use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::{Result, SymbolError};

/// The few ring operations the cofactor expansion needs.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Laplace expansion along the first row; fine for n ≤ 4.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    match n {
        0 => panic!("empty matrix"),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn replace_column<R: Ring>(m: &[Vec<R>], col: usize, rhs: &[R]) -> Vec<Vec<R>> {
    m.iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r[col] = b.clone();
            r
        })
        .collect()
}

/// Solve `m · u = rhs` with polynomial entries; each unknown is det_i / det.
pub fn solve_poly(m: &[Vec<Poly>], rhs: &[Poly]) -> Result<Vec<RatFun>> {
    let d = det(m);
    if d.is_zero() {
        return Err(SymbolError::Singular);
    }
    (0..m.len())
        .map(|i| RatFun::new(det(&replace_column(m, i, rhs)), d.clone()))
        .collect()
}

/// Same with rational-function entries.
pub fn solve_rat(m: &[Vec<RatFun>], rhs: &[RatFun]) -> Result<Vec<RatFun>> {
    let d = det(m);
    if d.is_zero() {
        return Err(SymbolError::Singular);
    }
    Ok((0..m.len()).map(|i| &det(&replace_column(m, i, rhs)) / &d).collect())
}

/// `m · u − rhs`, entrywise.
pub fn residual(m: &[Vec<RatFun>], u: &[RatFun], rhs: &[RatFun]) -> Vec<RatFun> {
    m.iter()
        .zip(rhs)
        .map(|(row, b)| {
            let lhs = row
                .iter()
                .zip(u)
                .fold(RatFun::zero(), |acc, (c, v)| &acc + &(c * v));
            &lhs - b
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn c(n: i64) -> Poly {
        Poly::constant(q(n, 1))
    }

    #[test]
    fn integer_determinants() {
        let m = vec![
            vec![c(2), c(0), c(1), c(3)],
            vec![c(1), c(1), c(0), c(0)],
            vec![c(0), c(4), c(1), c(2)],
            vec![c(5), c(0), c(0), c(1)],
        ];
        assert_eq!(det(&m), c(1));
    }

    #[test]
    fn cramer_on_symbolic_system() {
        // [x  1][u]   [x + y]
        // [1  y][v] = [2y   ]  has u = 1, v = 1 when xy ≠ 1
        let x = Poly::var(0);
        let y = Poly::var(1);
        let m = vec![vec![x.clone(), Poly::one()], vec![Poly::one(), y.clone()]];
        let rhs = vec![&x + &Poly::one(), &y + &Poly::one()];
        let u = solve_poly(&m, &rhs).unwrap();
        assert_eq!(u[0], RatFun::one());
        assert_eq!(u[1], RatFun::one());
        let mr: Vec<Vec<RatFun>> =
            m.iter().map(|r| r.iter().cloned().map(RatFun::from).collect()).collect();
        let rr: Vec<RatFun> = rhs.into_iter().map(RatFun::from).collect();
        assert!(residual(&mr, &u, &rr).iter().all(RatFun::is_zero));
    }

    #[test]
    fn singular_is_reported() {
        let x = Poly::var(0);
        let m = vec![vec![x.clone(), x.clone()], vec![c(1), c(1)]];
        assert!(matches!(solve_poly(&m, &[c(0), c(0)]), Err(SymbolError::Singular)));
    }
}
