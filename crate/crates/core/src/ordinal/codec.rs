//! Text form of ordinals.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! sum  := prod ("+" prod)*
//! prod := pow ("*" pow)*
//! pow  := atom ("^" pow)?
//! atom := "w" | nat | "(" sum ")"
//! ```
//!
//! `ω` is accepted for `w` and `·` for `*`. Parsing evaluates the expression
//! with ordinal arithmetic, so `1 + w` reads as `w`. Rendering always emits the
//! canonical normal form.

use std::str::FromStr;

use super::{Ordinal, DEFAULT_MAX_DEPTH};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Ascii,
    Unicode,
}

impl Ordinal {
    pub fn parse(text: &str) -> Result<Ordinal> {
        Ordinal::parse_with_depth(text, DEFAULT_MAX_DEPTH)
    }

    /// Parses with an explicit bound on syntactic and exponent nesting.
    pub fn parse_with_depth(text: &str, max_depth: usize) -> Result<Ordinal> {
        let mut parser = Parser {
            chars: text.chars().collect(),
            pos: 0,
            nesting: 0,
            max_depth,
        };
        let value = parser.sum()?;
        parser.skip_ws();
        if parser.pos < parser.chars.len() {
            return Err(Error::parse(
                parser.pos,
                format!("unexpected '{}'", parser.chars[parser.pos]),
            ));
        }
        Ok(value)
    }

    pub fn render(&self, style: Style) -> String {
        let ascii = self.render_ascii();
        match style {
            Style::Ascii => ascii,
            Style::Unicode => ascii.replace('w', "ω"),
        }
    }

    fn render_ascii(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let e = &t.exponent;
                let c = t.coefficient;
                if e.is_zero() {
                    return c.to_string();
                }
                let mut s = if e.is_one() {
                    "w".to_owned()
                } else if e.is_finite() || *e == Ordinal::omega() {
                    format!("w^{}", e.render_ascii())
                } else {
                    format!("w^({})", e.render_ascii())
                };
                if c > 1 {
                    s.push('*');
                    s.push_str(&c.to_string());
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ordinal::parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    nesting: usize,
    max_depth: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, options: &[char]) -> bool {
        self.skip_ws();
        if self.pos < self.chars.len() && options.contains(&self.chars[self.pos]) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.nesting += 1;
        if self.nesting > self.max_depth {
            return Err(Error::Overflow(format!(
                "expression nests deeper than {}",
                self.max_depth
            )));
        }
        Ok(())
    }

    fn sum(&mut self) -> Result<Ordinal> {
        let mut acc = self.prod()?;
        while self.eat(&['+']) {
            let rhs = self.prod()?;
            acc = acc.checked_add(&rhs)?;
        }
        Ok(acc)
    }

    fn prod(&mut self) -> Result<Ordinal> {
        let mut acc = self.pow()?;
        while self.eat(&['*', '·']) {
            let rhs = self.pow()?;
            acc = acc.checked_mul(&rhs)?;
        }
        Ok(acc)
    }

    fn pow(&mut self) -> Result<Ordinal> {
        let base = self.atom()?;
        if self.eat(&['^']) {
            self.enter()?;
            let exponent = self.pow()?;
            self.nesting -= 1;
            return base.pow_bounded(&exponent, self.max_depth);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal> {
        self.skip_ws();
        let Some(&c) = self.chars.get(self.pos) else {
            return Err(Error::parse(self.pos, "unexpected end of input"));
        };
        match c {
            'w' | 'ω' => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            '(' => {
                let open = self.pos;
                self.pos += 1;
                self.enter()?;
                let inner = self.sum()?;
                self.nesting -= 1;
                if !self.eat(&[')']) {
                    return Err(Error::parse(
                        self.pos,
                        format!("unclosed '(' opened at {open}"),
                    ));
                }
                Ok(inner)
            }
            d if d.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                digits
                    .parse::<u64>()
                    .map(Ordinal::nat)
                    .map_err(|_| Error::Overflow(format!("literal {digits} exceeds u64")))
            }
            other => Err(Error::parse(self.pos, format!("unexpected '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_examples() {
        let a = Ordinal::parse("w^2*3 + w + 5").unwrap();
        let expected = Ordinal::from_terms(vec![
            (Ordinal::nat(2), 3),
            (Ordinal::one(), 1),
            (Ordinal::zero(), 5),
        ])
        .unwrap();
        assert_eq!(a, expected);
        let b = Ordinal::parse("w^(w^w)").unwrap();
        assert_eq!(b, Ordinal::omega_pow(Ordinal::omega_pow(Ordinal::omega())));
        assert_eq!(Ordinal::parse("ω·2 + 1").unwrap(), Ordinal::parse("w*2+1").unwrap());
        assert_eq!(Ordinal::parse("w^w^2").unwrap(), Ordinal::parse("w^(w^2)").unwrap());
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(Ordinal::zero().to_string(), "0");
        assert_eq!(Ordinal::parse("1 + w").unwrap().to_string(), "w");
        assert_eq!(Ordinal::parse("w^2*3+w+5").unwrap().to_string(), "w^2*3 + w + 5");
        assert_eq!(Ordinal::parse("w^(w^w)").unwrap().to_string(), "w^(w^w)");
        assert_eq!(Ordinal::parse("w^(w+1)*2").unwrap().to_string(), "w^(w + 1)*2");
        assert_eq!(Ordinal::parse("w^w").unwrap().to_string(), "w^w");
        assert_eq!(
            Ordinal::parse("w^2+1").unwrap().render(Style::Unicode),
            "ω^2 + 1"
        );
    }

    #[test]
    fn reports_error_positions() {
        assert_eq!(
            Ordinal::parse("w + * 2"),
            Err(Error::Parse {
                position: 4,
                message: "unexpected '*'".into()
            })
        );
        assert!(matches!(Ordinal::parse("(w + 1"), Err(Error::Parse { .. })));
        assert!(matches!(Ordinal::parse(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(Ordinal::parse("w w"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn rejects_excess_nesting() {
        let deep = format!("{}1{}", "(".repeat(80), ")".repeat(80));
        assert!(matches!(Ordinal::parse(&deep), Err(Error::Overflow(_))));
        assert!(Ordinal::parse_with_depth(&deep, 100).is_ok());
        assert!(matches!(
            Ordinal::parse("99999999999999999999999"),
            Err(Error::Overflow(_))
        ));
    }
}
