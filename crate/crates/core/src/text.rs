//! Polynomial and rational text formats.
//!
//! Grammar: terms `c`, `c*x^k`, `c*x`, `x^k`, `x` joined by `+` / `-`, with an
//! optional leading sign. Coefficients are integers or fractions `n/d`.
//! Whitespace is insignificant and `x` is case-insensitive. Repeated powers
//! are summed.

use crate::error::{Error, Result};
use crate::number::Rat;
use crate::poly::Poly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self, what: &str) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {what}"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits"))
    }

    fn unsigned_rat(&mut self) -> Result<Rat> {
        let n = self.digits("a coefficient")?;
        if !self.eat(b'/') {
            return Ok(Rat::from_integer(n));
        }
        self.skip_ws();
        let offset = self.pos;
        let d = self.digits("a denominator")?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator { offset });
        }
        Ok(Rat::new(n, d))
    }

    fn is_x(&mut self) -> bool {
        matches!(self.peek(), Some(b'x' | b'X'))
    }

    /// `x` or `x^k`, returning `k`.
    fn power(&mut self) -> Result<usize> {
        if !self.is_x() {
            return self.err("expected x");
        }
        self.pos += 1;
        if !self.eat(b'^') {
            return Ok(1);
        }
        let k = self.digits("an exponent")?;
        match usize::try_from(k) {
            Ok(k) if k <= 1 << 16 => Ok(k),
            _ => self.err("exponent too large"),
        }
    }

    fn term(&mut self) -> Result<(Rat, usize)> {
        if self.is_x() {
            return Ok((Rat::one(), self.power()?));
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.err("expected a term");
        }
        let c = self.unsigned_rat()?;
        if self.eat(b'*') {
            Ok((c, self.power()?))
        } else {
            Ok((c, 0))
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    let mut coeffs: Vec<Rat> = Vec::new();
    let mut negate = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        let (c, k) = cur.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rat::zero());
        }
        if negate {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
        negate = match cur.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(_) => return cur.err("expected + or -"),
        };
        cur.pos += 1;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Integer or `n/d`, optionally signed.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let mut cur = Cursor::new(text);
    let neg = cur.eat(b'-') || {
        cur.eat(b'+');
        false
    };
    let r = cur.unsigned_rat()?;
    if cur.peek().is_some() {
        return cur.err("trailing input after number");
    }
    Ok(if neg { -r } else { r })
}

/// Canonical rendering, highest power first: `x^5 + x + 1`, `-5/2*x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, rat};

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_poly("x^5 + x + 1").unwrap(),
            Poly::from_ints(&[1, 1, 0, 0, 0, 1])
        );
        assert_eq!(parse_poly("-3/2*x^2 - x^2").unwrap().coeff(2), rat(-5, 2));
        assert_eq!(
            parse_poly("x^"),
            Err(Error::Parse {
                offset: 2,
                message: "expected an exponent".into()
            })
        );
    }

    #[test]
    fn parse_variants() {
        assert_eq!(
            parse_poly(" 5 * X ^ 4+1 ").unwrap(),
            Poly::from_ints(&[1, 0, 0, 0, 5])
        );
        assert_eq!(parse_poly("-x").unwrap(), Poly::from_ints(&[0, -1]));
        assert_eq!(parse_poly("2*x - 2*x").unwrap(), Poly::zero());
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly("+7").unwrap(), Poly::constant(int(7)));
        assert_eq!(
            parse_poly("1/2*x + x").unwrap(),
            Poly::monomial(rat(3, 2), 1)
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poly(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            parse_poly("x +"),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            parse_poly("x y"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_poly("3*"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert_eq!(
            parse_poly("1/0*x"),
            Err(Error::ZeroDenominator { offset: 2 })
        );
        assert!(matches!(
            parse_poly("x + -1"),
            Err(Error::Parse { offset: 4, .. })
        ));
    }

    #[test]
    fn rats() {
        assert_eq!(parse_rat("-10").unwrap(), int(-10));
        assert_eq!(parse_rat(" 3/6 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("+2").unwrap(), int(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn display_examples() {
        assert_eq!(
            Poly::from_ints(&[1, 1, 0, 0, 0, 1]).to_string(),
            "x^5 + x + 1"
        );
        assert_eq!(Poly::monomial(rat(-5, 2), 2).to_string(), "-5/2*x^2");
        assert_eq!(Poly::from_ints(&[-25, -20]).to_string(), "-20*x - 25");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::constant(rat(-3381, 256)).to_string(), "-3381/256");
    }
}
