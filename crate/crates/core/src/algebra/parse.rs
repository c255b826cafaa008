//! Text syntax for polynomials: `x1..xd`, integer or `p/q` literals, `+ - * ^` and parentheses.

use num_bigint::BigInt;
use num_traits::Zero;

use super::error::{AlgebraError, ParseError};
use super::polynomial::Polynomial;
use super::rational::Rational;

impl Polynomial {
    /// Parses `s` as a polynomial in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial, AlgebraError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            nvars: Some(nvars),
            seen: 0,
        };
        let ast = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err("unexpected trailing input").into());
        }
        Ok(ast.build(nvars))
    }

    /// Parses `s`, taking the variable count from the highest index that appears.
    pub fn parse_auto(s: &str) -> Result<Polynomial, AlgebraError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            nvars: None,
            seen: 0,
        };
        let ast = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err("unexpected trailing input").into());
        }
        Ok(ast.build(p.seen.max(1)))
    }
}

enum Ast {
    Const(Rational),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    fn build(&self, n: usize) -> Polynomial {
        match self {
            Ast::Const(c) => Polynomial::constant(n, c.clone()),
            Ast::Var(i) => Polynomial::var(n, *i),
            Ast::Add(a, b) => &a.build(n) + &b.build(n),
            Ast::Sub(a, b) => &a.build(n) - &b.build(n),
            Ast::Mul(a, b) => &a.build(n) * &b.build(n),
            Ast::Neg(a) => -a.build(n),
            Ast::Pow(a, e) => a.build(n).pow(*e),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: Option<usize>,
    seen: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::new(start, "exponent too large"))?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let d = self.digits();
                let idx: usize = d
                    .parse()
                    .map_err(|_| ParseError::new(start, "expected variable index after `x`"))?;
                if idx == 0 {
                    return Err(ParseError::new(start, "variables are numbered from x1"));
                }
                if let Some(n) = self.nvars {
                    if idx > n {
                        return Err(ParseError::new(
                            start,
                            format!("variable x{idx} out of range for {n} variables"),
                        ));
                    }
                }
                self.seen = self.seen.max(idx);
                Ok(Ast::Var(idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    let den: BigInt = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(ParseError::new(at, "zero denominator"));
                    }
                    return Ok(Ast::Const(Rational::new(num, den)));
                }
                self.pos = save;
                Ok(Ast::Const(Rational::from_integer(num)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parse_round_trip() {
        for s in [
            "x1^2 - x2^2",
            "1/2*x1*x3 + 3",
            "-x2",
            "0",
            "x1*x2^3 - 7/3*x1 + 1",
        ] {
            let p = Polynomial::parse(s, 3).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(Polynomial::parse(&p.to_string(), 3).unwrap(), p);
        }
    }

    #[test]
    fn precedence() {
        let p = Polynomial::parse("-(x1 + 1)^2 * 2/3", 1).unwrap();
        let x = Polynomial::var(1, 0);
        let q = (&(&x + &Polynomial::one(1)).pow(2)).scale(&rat(-2, 3));
        assert_eq!(p, q);
    }

    #[test]
    fn errors_carry_location() {
        let AlgebraError::Parse(e) = Polynomial::parse("x1 + x4", 3).unwrap_err() else {
            panic!()
        };
        assert_eq!(e.offset, 5);
        let AlgebraError::Parse(e) = Polynomial::parse("x1 + * 2", 3).unwrap_err() else {
            panic!()
        };
        assert_eq!(e.offset, 5);
        assert!(Polynomial::parse("(x1", 1).is_err());
        assert!(Polynomial::parse("1/0", 1).is_err());
        assert!(Polynomial::parse("x0", 1).is_err());
    }

    #[test]
    fn auto_variable_count() {
        assert_eq!(Polynomial::parse_auto("x3 + x1").unwrap().nvars(), 3);
    }
}
