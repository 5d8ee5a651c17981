//! Polynomial expression parser: signed terms `c`, `x`, `x^k`, `c*x^k`
//! (also `c x^k`), integer or fraction coefficients `p/q`, arbitrary
//! whitespace. No parentheses, no products of polynomials.

use num_bigint::BigInt;
use std::fmt;
use ttl_core::exact::{Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}",
            self.position, self.expected
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.bytes.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("a digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

/// One parsed term: coefficient times x^power.
fn parse_term(cur: &mut Cursor<'_>) -> Result<(Rat, usize), ParseError> {
    let mut coeff = Rat::from_integer(BigInt::from(1));
    let mut saw_coeff = false;
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let numer = cur.parse_uint()?;
            let denom = if cur.peek() == Some('/') {
                cur.bump();
                let d = cur.parse_uint()?;
                if num_traits::Zero::is_zero(&d) {
                    return Err(cur.err("a nonzero denominator"));
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = Rat::new(numer, denom);
            saw_coeff = true;
            // optional explicit multiplication
            if cur.peek() == Some('*') {
                cur.bump();
                if cur.peek() != Some('x') {
                    return Err(cur.err("'x' after '*'"));
                }
            }
        }
        Some('x') => {}
        _ => return Err(cur.err("a coefficient or 'x'")),
    }
    let power = if cur.peek() == Some('x') {
        cur.bump();
        if cur.peek() == Some('^') {
            cur.bump();
            let e = cur.parse_uint()?;
            usize::try_from(&e).map_err(|_| cur.err("a smaller exponent"))?
        } else {
            1
        }
    } else {
        if !saw_coeff {
            return Err(cur.err("a coefficient or 'x'"));
        }
        0
    };
    // reject a dangling variable like "y" early for a clearer message
    if let Some(c) = cur.peek() {
        if c.is_ascii_alphabetic() {
            return Err(cur.err("'+', '-' or end of input (only the variable x is allowed)"));
        }
    }
    Ok((coeff, power))
}

/// Parses the expression into a dense polynomial.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut cur = Cursor::new(text);
    let mut terms: Vec<(Rat, usize)> = vec![];
    // optional leading sign
    let mut sign = match cur.peek() {
        Some('+') => {
            cur.bump();
            1
        }
        Some('-') => {
            cur.bump();
            -1
        }
        Some(_) => 1,
        None => return Err(cur.err("a nonempty polynomial expression")),
    };
    loop {
        let (coeff, power) = parse_term(&mut cur)?;
        let signed = if sign < 0 { -coeff } else { coeff };
        terms.push((signed, power));
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.bump();
                sign = 1;
            }
            Some('-') => {
                cur.bump();
                sign = -1;
            }
            Some(_) => return Err(cur.err("'+', '-' or end of input")),
        }
    }
    let max_pow = terms.iter().map(|&(_, p)| p).max().unwrap_or(0);
    let mut coeffs = vec![Rat::from_integer(BigInt::from(0)); max_pow + 1];
    for (c, p) in terms {
        coeffs[p] = &coeffs[p] + &c;
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_cubics() {
        assert_eq!(
            parse_poly("x^3 - 2").unwrap(),
            Poly::from_ints(&[-2, 0, 0, 1])
        );
        assert_eq!(
            parse_poly("x^3-3x-1").unwrap(),
            Poly::from_ints(&[-1, -3, 0, 1])
        );
    }

    #[test]
    fn coefficient_forms() {
        assert_eq!(parse_poly("3x^2").unwrap(), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(parse_poly("3*x^2").unwrap(), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(parse_poly("3 x^2").unwrap(), Poly::from_ints(&[0, 0, 3]));
        let half_x = parse_poly("1/2 x").unwrap();
        assert_eq!(
            half_x.coeffs()[1],
            Rat::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(
            parse_poly("-x^2 + 5").unwrap(),
            Poly::from_ints(&[5, 0, -1])
        );
        assert_eq!(parse_poly("x + x").unwrap(), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn double_sign_rejected_with_position() {
        let err = parse_poly("x^2 + + 1").unwrap_err();
        assert_eq!(err.position, 6);
    }

    #[test]
    fn foreign_variables_rejected() {
        assert!(parse_poly("y^2").is_err());
        assert!(parse_poly("x^2 + 3y").is_err());
        assert!(parse_poly("(x+1)").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1/0").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for f in [
            Poly::from_ints(&[-2, 0, 0, 1]),
            Poly::from_ints(&[5, 0, -1]),
            Poly::from_ints(&[0, 2]),
            Poly::from_ints(&[7]),
        ] {
            let printed = format!("{f}");
            assert_eq!(parse_poly(&printed).unwrap(), f, "round trip of {printed}");
        }
    }
}
