//! Parser for the plain-text formula syntax used by the catalog.
//!
//! Grammar: sums and differences of products; `*` and `/` are optional
//! between adjacent factors (`5x^2y`, `2(x+y)`); `^` takes a signed integer.
//! Numbers are integers; write `7/2` for rationals. Each letter is a single
//! variable and must be one of the two names the caller supplies.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::{Result, SymbolError};

pub fn parse(src: &str, vars: [char; 2]) -> Result<RatFun> {
    let mut p = Parser { src, chars: src.char_indices().collect(), pos: 0, vars };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: [char; 2],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> SymbolError {
        SymbolError::Parse {
            input: self.src.to_string(),
            offset: self.chars.get(self.pos).map_or(self.src.len(), |c| c.0),
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                -&self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some('/') => {
                    self.bump();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = &acc / &d;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || c.is_alphabetic() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFun> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let neg = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            _ => false,
        };
        let n = self.integer()?;
        let n: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
        let mut out = RatFun::one();
        for _ in 0..n {
            out = &out * &base;
        }
        if neg {
            out = out.recip().map_err(|_| self.err("negative power of zero"))?;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(text.parse().expect("digits parse as an integer"))
    }

    fn primary(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFun::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() => {
                let idx = self
                    .vars
                    .iter()
                    .position(|&v| v == c)
                    .ok_or_else(|| self.err("unknown variable"))?;
                self.bump();
                Ok(Poly::var(idx).into())
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    const XY: [char; 2] = ['x', 'y'];

    #[test]
    fn implicit_products() {
        let a = parse("5x^2y", XY).unwrap();
        assert_eq!(a, RatFun::from_poly(Poly::monomial(q(5, 1), (2, 1))));
        let b = parse("2(x+y)^2", XY).unwrap();
        assert_eq!(b.eval(&q(1, 1), &q(1, 1)), Some(q(8, 1)));
    }

    #[test]
    fn rationals_and_negative_powers() {
        let a = parse("7/2x^4 - y^-1", XY).unwrap();
        assert_eq!(a.eval(&q(1, 1), &q(2, 1)), Some(q(3, 1)));
        let b = parse("-y^4", XY).unwrap();
        assert_eq!(b.eval(&q(0, 1), &q(2, 1)), Some(q(-16, 1)));
    }

    #[test]
    fn quotient_of_sums() {
        let f = parse("(x^2-y^2)/(x-y)", XY).unwrap();
        assert_eq!(f, parse("x+y", XY).unwrap());
    }

    #[test]
    fn other_variable_pairs() {
        let f = parse("(z-y)^4", ['y', 'z']).unwrap();
        assert_eq!(f.eval(&q(1, 1), &q(3, 1)), Some(q(16, 1)));
    }

    #[test]
    fn errors_carry_position() {
        match parse("x + w", XY) {
            Err(SymbolError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("(x+y", XY).is_err());
        assert!(parse("x/0", XY).is_err());
    }
}
