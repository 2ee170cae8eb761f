//! Parser for the textual element grammar produced by `Display`:
//! sums of `c*pi^k` terms, optionally written as `(num)/(den)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := integer | 'pi' | '(' expr ')'
//! ```
//!
//! Division is exact division in R, so `pi/pi^2` is rejected.

use num_bigint::BigInt;

use super::field::Field;
use super::local::LocalElement;
use super::RingError;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> RingError {
        RingError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn lift(&self, e: RingError) -> RingError {
        match e {
            RingError::Parse { .. } => e,
            other => self.err(other.to_string()),
        }
    }

    fn expr(&mut self) -> Result<LocalElement, RingError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = acc.try_add(&t).map_err(|e| self.lift(e))?;
            } else if self.eat('-') {
                let t = self.term()?;
                acc = acc.try_sub(&t).map_err(|e| self.lift(e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LocalElement, RingError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let f = self.factor()?;
                acc = acc.try_mul(&f).map_err(|e| self.lift(e))?;
            } else if self.eat('/') {
                let f = self.factor()?;
                acc = acc.divide_exact(&f).map_err(|e| self.lift(e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<LocalElement, RingError> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.integer()?;
            let k: u32 = k
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            let mut acc = LocalElement::one(self.field);
            for _ in 0..k {
                acc = acc.try_mul(&base).map_err(|e| self.lift(e))?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<LocalElement, RingError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(LocalElement::from_scalar(self.field.from_bigint(&n)))
            }
            Some('p') if self.src[self.pos..].starts_with("pi") => {
                self.pos += 2;
                Ok(LocalElement::pi(self.field))
            }
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse(src: &str, field: Field) -> Result<LocalElement, RingError> {
    let mut p = Parser { src, pos: 0, field };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}
