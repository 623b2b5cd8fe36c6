//! Parser for the canonical scalar text grammar.
//!
//! Accepts the emitted form `(num) / (den)` with monomials
//! `coeff * u^e * base.k^e * ...`, plus general `+ - * / ^ ( )` expressions
//! over exact rationals, `u`, atoms `base.k`, and the sugar `L^{a/2}`
//! (rewritten to `(-u)^a`; plain `L` means `u^2`). Exponents may be written
//! bare (`u^-3`) or braced (`u^{-3}`). Atom bases may carry an index suffix
//! in square brackets, e.g. `P[-2,1].1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{MotiveError, MotiveScalar};

pub fn parse_scalar(input: &str) -> Result<MotiveScalar, MotiveError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Number(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dot,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn lex(input: &str) -> Result<Vec<Tok>, MotiveError> {
    let bytes: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '.' => {
                out.push(Tok::Dot);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '{' => {
                out.push(Tok::LBrace);
                i += 1;
            }
            '}' => {
                out.push(Tok::RBrace);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                out.push(Tok::Number(text.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                let mut name: String = bytes[start..i].iter().collect();
                // Optional index suffix, kept verbatim in the base name.
                if i < bytes.len() && bytes[i] == '[' {
                    let suffix_start = i;
                    i += 1;
                    while i < bytes.len() && bytes[i] != ']' {
                        let d = bytes[i];
                        if !(d.is_ascii_digit() || d == '-' || d == ',') {
                            return Err(MotiveError::Parse(format!(
                                "invalid character `{d}` in atom index"
                            )));
                        }
                        i += 1;
                    }
                    if i == bytes.len() {
                        return Err(MotiveError::Parse("unterminated atom index".into()));
                    }
                    i += 1; // consume ']'
                    name.extend(bytes[suffix_start..i].iter());
                }
                out.push(Tok::Name(name));
            }
            other => {
                return Err(MotiveError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> MotiveError {
        MotiveError::Parse(format!("{msg} (at token {})", self.pos))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), MotiveError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<MotiveScalar, MotiveError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MotiveScalar, MotiveError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|_| self.err("division by zero in expression"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MotiveScalar, MotiveError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MotiveScalar, MotiveError> {
        if let Some(Tok::Name(n)) = self.peek() {
            if n == "L" {
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let (p, half) = self.l_exponent()?;
                    return Ok(if half {
                        MotiveScalar::l_half_pow(p)
                    } else {
                        MotiveScalar::u_pow(2 * p)
                    });
                }
                return Ok(MotiveScalar::u_pow(2));
            }
        }
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.int_exponent()?;
            return base.pow(e).map_err(|_| self.err("zero raised to negative power"));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MotiveScalar, MotiveError> {
        match self.bump() {
            Some(Tok::Number(n)) => Ok(MotiveScalar::from_rational(BigRational::from_integer(n))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Name(name)) => {
                if name == "u" {
                    return Ok(MotiveScalar::u());
                }
                self.expect(Tok::Dot)
                    .map_err(|_| self.err(&format!("expected `.weight` after atom base `{name}`")))?;
                match self.bump() {
                    Some(Tok::Number(w)) => {
                        let w: u32 = w
                            .try_into()
                            .map_err(|_| self.err("atom weight out of range"))?;
                        MotiveScalar::atom(name, w).map_err(|_| self.err("atom weight must be >= 1"))
                    }
                    _ => Err(self.err("expected atom weight")),
                }
            }
            _ => Err(self.err("expected a number, variable, atom or parenthesis")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, MotiveError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Number(n)) => {
                let v: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn int_exponent(&mut self) -> Result<i64, MotiveError> {
        if self.peek() == Some(&Tok::LBrace) {
            self.pos += 1;
            let e = self.signed_int()?;
            self.expect(Tok::RBrace)?;
            Ok(e)
        } else {
            self.signed_int()
        }
    }

    /// Exponent of `L`: `{p/2}` yields `(p, true)`, `{p}` or bare `p`
    /// yield `(p, false)`.
    fn l_exponent(&mut self) -> Result<(i64, bool), MotiveError> {
        if self.peek() == Some(&Tok::LBrace) {
            self.pos += 1;
            let p = self.signed_int()?;
            if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                match self.bump() {
                    Some(Tok::Number(n)) if n == BigInt::from(2) => {}
                    _ => return Err(self.err("only half-integer powers of L are supported")),
                }
                self.expect(Tok::RBrace)?;
                return Ok((p, true));
            }
            self.expect(Tok::RBrace)?;
            Ok((p, false))
        } else {
            Ok((self.signed_int()?, false))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_output() {
        let s = MotiveScalar::u_pow(-3)
            .neg()
            .mul(&MotiveScalar::atom("X", 1).unwrap());
        let text = s.to_string();
        assert_eq!(parse_scalar(&text).unwrap(), s);

        let f = MotiveScalar::one()
            .div(&MotiveScalar::u().sub(&MotiveScalar::u_pow(-1)))
            .unwrap();
        assert_eq!(parse_scalar(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn l_sugar() {
        assert_eq!(parse_scalar("L").unwrap(), MotiveScalar::u_pow(2));
        assert_eq!(
            parse_scalar("L^{1/2}").unwrap(),
            MotiveScalar::u().neg()
        );
        assert_eq!(
            parse_scalar("L^{-3/2} * X.1").unwrap(),
            MotiveScalar::u_pow(-3)
                .neg()
                .mul(&MotiveScalar::atom("X", 1).unwrap())
        );
        assert_eq!(parse_scalar("L^2").unwrap(), MotiveScalar::u_pow(4));
        assert_eq!(parse_scalar("L^{2}").unwrap(), MotiveScalar::u_pow(4));
    }

    #[test]
    fn rational_coefficients_and_braced_exponents() {
        let s = parse_scalar("3/4 * u^{-2} + (-1/2) * X.2^2").unwrap();
        let expected = MotiveScalar::u_pow(-2)
            .scale(&BigRational::new(BigInt::from(3), BigInt::from(4)))
            .add(
                &MotiveScalar::atom("X", 2)
                    .unwrap()
                    .pow(2)
                    .unwrap()
                    .scale(&BigRational::new(BigInt::from(-1), BigInt::from(2))),
            );
        assert_eq!(s, expected);
    }

    #[test]
    fn bracketed_atom_bases() {
        let s = parse_scalar("P[-2,1].1").unwrap();
        assert_eq!(s, MotiveScalar::atom("P[-2,1]", 1).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("u +").is_err());
        assert!(parse_scalar("X").is_err());
        assert!(parse_scalar("X.0").is_err());
        assert!(parse_scalar("1/(u - u)").is_err());
        assert!(parse_scalar("u ? 3").is_err());
        assert!(parse_scalar("P[1,(2)].1").is_err());
    }
}
