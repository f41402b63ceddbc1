//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' uint]
//! atom   := uint | 'x' | 't' | '(' poly ')'
//! ```
//!
//! Integer literals must lie in `[0, p)`. `t` is the generator of an
//! extension field and is rejected over a prime field. Whitespace is ignored
//! and terms may appear in any order.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::Poly;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    spec: &'a FieldSpec,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected an unsigned integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| err(start, "integer literal too large"))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.spec);
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let term = self.term()?;
            acc = if negate { &acc - &term } else { &acc + &term };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.uint()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x(self.spec))
            }
            Some(b't') => {
                self.pos += 1;
                match self.spec.generator() {
                    Some(t) => Ok(Poly::constant(self.spec, t.code())),
                    None => err(start, format!("'t' is undefined over the prime field {:?}", self.spec)),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                if v >= self.spec.p() as u64 {
                    return err(
                        start,
                        format!("coefficient {v} is not below the characteristic {}", self.spec.p()),
                    );
                }
                Ok(Poly::constant(self.spec, v as u32))
            }
            Some(c) => err(start, format!("unexpected character '{}'", c as char)),
            None => err(start, "unexpected end of input"),
        }
    }
}

pub(super) fn parse_poly(text: &str, spec: &FieldSpec) -> Result<Poly> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, spec };
    let out = parser.poly()?;
    if parser.peek().is_some() {
        return err(parser.pos, "trailing input");
    }
    Ok(out)
}

pub(super) fn render_poly(f: &Poly) -> String {
    let spec = f.spec();
    let mut terms = Vec::new();
    for (i, &c) in f.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mut coeff = spec.render(c);
        if coeff.contains('+') {
            coeff = format!("({coeff})");
        }
        let var = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (i, c) {
            (0, _) => coeff,
            (_, 1) => var,
            _ => format!("{coeff}*{var}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
