//! Text encoding of scalars: expressions over `digits i q + - * / ^ ( )`.
//!
//! Printing is canonical (it depends only on the canonical form), and
//! `parse(print(x)) == x` for every scalar.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRational;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::field::Field;

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn monomial_str(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    }
}

/// One term `c·q^k`, returned as (is_negative, unsigned text).
fn term_str(c: &GaussRational, k: usize) -> (bool, String) {
    let mono = monomial_str(k);
    let attach = |coef: String| -> String {
        if mono.is_empty() {
            coef
        } else if coef.is_empty() {
            mono.clone()
        } else {
            format!("{coef}*{mono}")
        }
    };
    if c.is_real() {
        let a = c.re.abs();
        let coef = if a.is_one() && k > 0 {
            String::new()
        } else {
            rational_str(&a)
        };
        return (c.re.is_negative(), attach(coef));
    }
    if c.re.is_zero() {
        let b = c.im.abs();
        let coef = if b.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", rational_str(&b))
        };
        return (c.im.is_negative(), attach(coef));
    }
    (false, attach(format!("({c})")))
}

pub(crate) fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = term_str(c, k);
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push('-'),
            (false, false) => out.push('+'),
        }
        out.push_str(&body);
    }
    out
}

pub(crate) fn format_ratfunc(x: &RatFunc) -> String {
    let num = format_poly(x.numer());
    if x.denom().is_one() {
        return num;
    }
    let num = if x.numer().term_count() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = format_poly(x.denom());
    let den = if x.denom().term_count() > 1 {
        format!("({den})")
    } else {
        den
    };
    format!("{num}/{den}")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let e = self.integer()?;
        let e: i32 = match i32::try_from(e) {
            Ok(e) if e <= 4096 => e,
            _ => return self.err("exponent too large"),
        };
        base.pow_i32(if neg { -e } else { e }).ok_or(Error::Parse {
            pos: at,
            msg: "negative power of zero".into(),
        })
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(RatFunc::constant(GaussRational::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(GaussRational::real(
                    BigRational::from_integer(n),
                )))
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<RatFunc> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a scalar that must not depend on `q` (parameter values, `--q0`).
pub fn parse_gauss(s: &str) -> Result<GaussRational> {
    let v = parse_scalar(s)?;
    v.as_constant().ok_or(Error::Parse {
        pos: 0,
        msg: format!("`{s}` depends on q; a constant was expected"),
    })
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> String {
        parse_scalar(s).unwrap().to_string()
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(rt("q^2"), "q^2");
        assert_eq!(rt("-(q-1)/q"), "(-q+1)/q");
        assert_eq!(rt("1/2 + 3*i"), "(1/2+3*i)");
        assert_eq!(rt("q^-2"), "1/q^2");
        assert_eq!(rt("(q^2-1)/(q-1)"), "q+1");
        assert_eq!(rt("2*i*q - q"), "(-1+2*i)*q");
        assert_eq!(rt("-i*q^3 + 1/3"), "-i*q^3+1/3");
        assert_eq!(rt("0"), "0");
        assert_eq!(rt("3/(2*q+2)"), "3/2/(q+1)");
    }

    #[test]
    fn printed_forms_reparse() {
        for s in ["(1/2+3*i)", "3/2/(q+1)", "(-q+1)/q", "-i*q^3+1/3", "1/q^2"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&x.to_string()).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn errors_carry_position() {
        match parse_scalar("q + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_scalar("1/(q-q)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("(q"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("q x"), Err(Error::Parse { .. })));
        assert!(parse_gauss("q").is_err());
        assert_eq!(parse_gauss("7/3").unwrap(), GaussRational::ratio(7, 3));
    }
}
