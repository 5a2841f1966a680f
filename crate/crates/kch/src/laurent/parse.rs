//! Recursive-descent parser for Laurent polynomials in `l`, `m`.
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int | 'l' | 'm' | 'λ' | 'μ' | '(' expr ')'
//! ```
//! Negative exponents are only allowed on units.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("polynomial parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, i: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |c| c.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let digits = self.digits();
        let e: u32 = match digits.parse() {
            Ok(e) => e,
            Err(_) => return self.err("expected exponent"),
        };
        if !neg {
            return Ok(base.pow(e));
        }
        match base.unit_inverse() {
            Ok(inv) => Ok(inv.pow(e)),
            Err(_) => self.err("negative exponent on a non-unit"),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.i += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some('l' | 'λ') => {
                self.i += 1;
                Ok(LaurentPoly::lambda())
            }
            Some('m' | 'μ') => {
                self.i += 1;
                Ok(LaurentPoly::mu())
            }
            Some('(') => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(LaurentPoly::constant(d.parse::<BigInt>().expect("digit string")))
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser::new(s);
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_reparses() {
        for s in ["-1 - m^3 + l*m^-1 + l", "0", "12*l^-2*m^7", "(1+l*m^6)*(l-1)"] {
            let p: LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        }
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!("l + ".parse::<LaurentPoly>().unwrap_err().pos, 4);
        assert!("(1+l)^-1".parse::<LaurentPoly>().is_err());
        assert!("l m".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn unicode_symbols() {
        assert_eq!("λ-μ^3".parse::<LaurentPoly>().unwrap(), "l-m^3".parse().unwrap());
    }
}
