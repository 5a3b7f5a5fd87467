//! `expr := term (('+'|'-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | int | '[G/H' int ']' | name | '(' expr ')'`.

use std::collections::BTreeMap;

use super::{BurnsideElement, BurnsideRing};
use crate::error::{Error, Result};

pub(super) fn parse(
    ring: &BurnsideRing,
    text: &str,
    env: &BTreeMap<String, BurnsideElement>,
) -> Result<BurnsideElement> {
    let mut p = Parser {
        ring,
        env,
        chars: text.chars().collect(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a BurnsideRing,
    env: &'a BTreeMap<String, BurnsideElement>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("column {}: {msg}", self.pos + 1))
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<BurnsideElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BurnsideElement> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = self.ring.multiply(&acc, &rhs);
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn unary(&mut self) -> Result<BurnsideElement> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                for c in ['G', '/', 'H'] {
                    self.expect(c)?;
                }
                let start = self.pos;
                let h = self.number()? as usize;
                self.expect(']')?;
                self.ring.class(h).map_err(|e| {
                    self.pos = start;
                    self.error(&e.to_string())
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(self.ring.one().scale(n))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.env.get(&name).cloned().ok_or_else(|| {
                    self.pos = start;
                    self.error(&format!("unknown name '{name}'"))
                })
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
