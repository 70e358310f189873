//! Polynomial text syntax: integers, `p/q`, names, `+ - * ^`, parentheses.
//! Multiplication is always explicit.

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn parse_poly(text: &str, names: &[String]) -> Result<Poly<Rational>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Poly<Rational>> {
        let mut acc = self.product()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly<Rational>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        if let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' {
                return Err(self.err("expected operator (implicit multiplication is not allowed)"));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<Rational>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<Rational>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected non-negative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
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

    fn atom(&mut self) -> Result<Poly<Rational>> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected integer denominator"));
                    }
                    let den: BigInt = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    return Ok(Poly::constant(Rational::new(num, den)));
                }
                Ok(Poly::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Poly::var(i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

/// Print in descending degrevlex order; `params` names the coefficient-field parameters.
pub fn format_poly<C: Field>(p: &Poly<C>, names: &[String], params: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let (neg, mag) = c.render(params);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(m, names);
        match (mag, mono.is_empty()) {
            (None, true) => out.push('1'),
            (None, false) => out.push_str(&mono),
            (Some(s), true) => out.push_str(&s),
            (Some(s), false) => {
                out.push_str(&s);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}
