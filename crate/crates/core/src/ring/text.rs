//! Text grammar for ring elements.
//!
//! Integers print as `-12`, residues as `7 mod 12` and polynomials in
//! descending graded-lex order, e.g. `2*a1*b2 - 3*x^2 + 1`. The parser
//! accepts sums, products, integer powers, unary minus and parentheses.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Elem, Ring};
use crate::{Error, Result};

pub(super) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(super) fn fmt_elem(e: &Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Elem::Int(k) => write!(f, "{k}"),
        Elem::Mod(z) => write!(f, "{} mod {}", z.value(), z.modulus()),
        Elem::Poly(p) => {
            if p.is_zero() {
                return f.write_str("0");
            }
            let names = p.vars().names();
            for (idx, (m, c)) in p.terms().rev().enumerate() {
                let neg = c.is_negative();
                match (idx, neg) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                let mag = c.abs();
                let mut first = true;
                if m.is_one() || !mag.is_one() {
                    write!(f, "{mag}")?;
                    first = false;
                }
                for (i, exp) in m.powers() {
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    f.write_str(&names[i])?;
                    if exp > 1 {
                        write!(f, "^{exp}")?;
                    }
                }
            }
            Ok(())
        }
    }
}

pub(super) fn parse(ring: &Ring, s: &str) -> Result<Elem> {
    let mut p = Parser { ring, src: s, pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if let Ring::Modular(m) = ring {
        let save = p.pos;
        if p.ident().as_deref() == Some("mod") {
            p.skip_ws();
            let at = p.pos;
            let k = p.integer()?;
            if k != BigInt::from(*m) {
                return Err(p.err_at(at, format!("modulus {k} does not match ring Z/{m}")));
            }
            p.skip_ws();
        } else {
            p.pos = save;
        }
    }
    if p.pos != s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse { pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Elem> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u64 = e
                .try_into()
                .map_err(|_| self.err_at(at, "exponent must be a nonnegative integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(self.ring.from_bigint(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident().unwrap();
                if matches!(self.ring, Ring::Modular(_)) && name == "mod" {
                    return Err(self.err_at(at, "expected a value before 'mod'"));
                }
                self.ring.var(&name).map_err(|e| match e {
                    Error::Invalid(msg) => self.err_at(at, msg),
                    other => other,
                })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        BigInt::parse_bytes(&self.src.as_bytes()[start..self.pos], 10).ok_or_else(|| self.err_at(start, "bad integer"))
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let s = &self.src[start..self.pos];
        if is_identifier(s) {
            Some(String::from(s))
        } else {
            self.pos = start;
            None
        }
    }
}
