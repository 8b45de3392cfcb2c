//! Recursive-descent parser for polynomial and rational-function text.
//!
//! Accepts sums, products, integer powers, parentheses and unary minus over
//! integer literals, tower generators `g1, g2, ...` and one indeterminate.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::upoly::Poly;

struct Parser<'a> {
    field: &'a Field,
    var: &'a str,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos, self.src
        )))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
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

    fn number(&mut self) -> Option<u64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        rest[..len].parse().ok()
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_alphanumeric()))
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(n) = self.number() else {
                return self.err("expected exponent");
            };
            let n = usize::try_from(n).map_err(|_| Error::Overflow)?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            return Ok(e);
        }
        if self.eat('-') {
            return Ok(-self.power()?);
        }
        if let Some(n) = self.number() {
            let c = self.field.from_int((n % self.field.p()) as i64);
            return Ok(Poly::constant(&c));
        }
        let start = self.pos;
        match self.ident() {
            Some(id) if id == self.var => Ok(Poly::x(self.field)),
            Some(id) => match generator(self.field, id) {
                Some(g) => Ok(g),
                None => {
                    self.pos = start;
                    self.err(&format!("unknown identifier {id:?}"))
                }
            },
            None => self.err("expected a term"),
        }
    }
}

fn generator(field: &Field, id: &str) -> Option<Poly> {
    let k: usize = id.strip_prefix('g')?.parse().ok()?;
    if k == 0 || k > field.level() {
        return None;
    }
    let level = &field.tower()[k];
    let g = field.embed(&level.generator()?).ok()?;
    Some(Poly::constant(&g))
}

/// Parses `s` as a polynomial over `field` in the indeterminate `var`.
pub fn parse_poly(field: &Field, s: &str, var: &str) -> Result<Poly> {
    let mut p = Parser {
        field,
        var,
        src: s,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Splits `num/den` at the top-level slash; a missing denominator means `1`.
pub fn parse_fraction(field: &Field, s: &str) -> Result<(Poly, Poly)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if split.is_some() {
                    return Err(Error::Parse(format!("more than one '/' in {s:?}")));
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    match split {
        None => Ok((parse_poly(field, s, "x")?, Poly::one(field))),
        Some(i) => Ok((
            parse_poly(field, &s[..i], "x")?,
            parse_poly(field, &s[i + 1..], "x")?,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical_text() {
        let f3 = Field::prime(3).unwrap();
        for s in ["x^27+2*x^9+x^3+2*x", "0", "1", "x", "2*x^2+1"] {
            assert_eq!(parse_poly(&f3, s, "x").unwrap().to_string(), s);
        }
        let k = Field::gf(2, 2).unwrap();
        for s in ["x^2+(1+g1)*x+g1", "g1*x^4+(1+g1)"] {
            assert_eq!(parse_poly(&k, s, "x").unwrap().to_string(), s);
        }
    }

    #[test]
    fn expressions_and_errors() {
        let f5 = Field::prime(5).unwrap();
        let p = parse_poly(&f5, "-(x+1)^2 - 3*x", "x").unwrap();
        assert_eq!(p.to_string(), "4*x^2+4");
        assert!(parse_poly(&f5, "x+y", "x").is_err());
        assert!(parse_poly(&f5, "g1", "x").is_err());
        assert!(parse_poly(&f5, "x^", "x").is_err());
        let (n, d) = parse_fraction(&f5, "x^2/(x+1)").unwrap();
        assert_eq!((n.to_string(), d.to_string()), ("x^2".into(), "x+1".into()));
    }
}
