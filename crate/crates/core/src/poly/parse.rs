//! Recursive-descent parser for the polynomial text syntax.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*' factor | '/' number)*
//! factor := number | name ('^' int)? | '(' expr ')' ('^' int)?
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exactlin::Rational;

/// Parses `text` as a polynomial in the given variables.
///
/// Errors carry the 1-based column of the offending character.
pub fn parse_poly(text: &str, names: &[String]) -> Result<Poly> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        names,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(&format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("column {}: {msg}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars());
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some('/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    let d = self.integer()?;
                    if d.is_zero() {
                        self.pos = start;
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&Rational::from_integer(d).recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(self.nvars(), Rational::from_integer(n)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let Some(i) = self.names.iter().position(|n| *n == name) else {
                    self.pos = start;
                    return Err(self.error(&format!("unknown variable '{name}'")));
                };
                let e = self.exponent()?;
                Ok(Poly::var(self.nvars(), i).pow(e))
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let e = self.integer()?;
        u32::try_from(e).map_err(|_| {
            self.pos = start;
            self.error("exponent too large")
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse::<BigInt>().unwrap_or_else(|_| BigInt::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::poly::Monomial;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn coefficients_and_exponents() {
        let p = parse_poly(" 3/4 * x^2*y -y + 2 ", &names()).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2, 1])), rat(3, 4));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 1])), int(-1));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 0])), int(2));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn parentheses_expand() {
        let p = parse_poly("(x + y)^2 - x^2 - y^2", &names()).unwrap();
        assert_eq!(p, parse_poly("2*x*y", &names()).unwrap());
    }

    #[test]
    fn errors_report_columns() {
        let e = parse_poly("x + z", &names()).unwrap_err();
        assert_eq!(e, Error::Parse("column 5: unknown variable 'z'".into()));
        let e = parse_poly("x + ", &names()).unwrap_err();
        assert!(e.to_string().contains("end of input"), "{e}");
        let e = parse_poly("x ^ y", &names()).unwrap_err();
        assert!(e.to_string().starts_with("column 5"), "{e}");
        assert!(parse_poly("1/0", &names()).is_err());
    }

    #[test]
    fn empty_is_error_and_zero_is_zero() {
        assert!(parse_poly("", &names()).is_err());
        assert!(parse_poly("0", &names()).unwrap().is_zero());
    }
}
