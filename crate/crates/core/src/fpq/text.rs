//! Presentation text format:
//!
//! ```text
//! # comment
//! gens: a c
//! rel: (a * c) * a = c
//! rel: c *^5 a = c
//! ```
//!
//! `*` binds left-associatively; `*^k` takes a nonzero integer `k`.

use std::fmt;

use super::presentation::{Presentation, QuandleExpression, Relation};
use super::FpqError;

pub(crate) fn write_presentation(p: &Presentation, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "gens:")?;
    for g in p.generators() {
        write!(f, " {g}")?;
    }
    writeln!(f)?;
    for r in p.relations() {
        writeln!(f, "rel: {r}")?;
    }
    Ok(())
}

pub fn serialize_presentation(p: &Presentation) -> String {
    p.to_string()
}

fn is_symbol_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_symbol_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]` in the source line (1-based).
    offset: usize,
    gens: &'a [String],
}

impl Cursor<'_> {
    fn error(&self, message: impl Into<String>) -> FpqError {
        FpqError::Parse {
            line: self.line,
            column: self.offset + self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), FpqError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn symbol(&mut self) -> Result<String, FpqError> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .chars
            .get(self.pos)
            .is_some_and(|&c| is_symbol_start(c))
        {
            return Err(self.error("expected a generator symbol"));
        }
        while self.chars.get(self.pos).is_some_and(|&c| is_symbol_char(c)) {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<i64, FpqError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn atom(&mut self) -> Result<QuandleExpression, FpqError> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let e = self.expression()?;
            self.expect(')')?;
            return Ok(e);
        }
        self.skip_ws();
        let col = self.pos;
        let s = self.symbol()?;
        if !self.gens.contains(&s) {
            self.pos = col;
            return Err(FpqError::UndeclaredAt {
                symbol: s,
                line: self.line,
                column: self.offset + col,
            });
        }
        Ok(QuandleExpression::Generator(s))
    }

    fn expression(&mut self) -> Result<QuandleExpression, FpqError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let mut k = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                let col = self.pos;
                k = self.integer()?;
                if k == 0 {
                    return Err(FpqError::ZeroExponent {
                        line: self.line,
                        column: self.offset + col,
                    });
                }
            }
            let right = self.atom()?;
            acc = QuandleExpression::op(acc, right, k);
        }
        Ok(acc)
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FpqError> {
    let mut gens: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            let column = content.len() - content.trim_start().len() + 1;
            return Err(FpqError::Parse {
                line,
                column,
                message: "expected 'gens:' or 'rel:'".into(),
            });
        };
        let offset = key.chars().count() + 2;
        match key.trim() {
            "gens" => {
                if gens.is_some() {
                    return Err(FpqError::Parse {
                        line,
                        column: 1,
                        message: "second 'gens:' line".into(),
                    });
                }
                let empty: Vec<String> = Vec::new();
                let mut cur = Cursor {
                    chars: rest.chars().collect(),
                    pos: 0,
                    line,
                    offset,
                    gens: &empty,
                };
                let mut list: Vec<String> = Vec::new();
                while cur.peek().is_some() {
                    let col = cur.pos;
                    let s = cur.symbol()?;
                    if list.contains(&s) {
                        cur.pos = col;
                        return Err(cur.error(format!("generator '{s}' declared twice")));
                    }
                    list.push(s);
                }
                gens = Some(list);
            }
            "rel" => {
                let declared = gens.as_deref().unwrap_or(&[]);
                let mut cur = Cursor {
                    chars: rest.chars().collect(),
                    pos: 0,
                    line,
                    offset,
                    gens: declared,
                };
                let lhs = cur.expression()?;
                cur.expect('=')?;
                let rhs = cur.expression()?;
                if cur.peek().is_some() {
                    return Err(cur.error("unexpected trailing input"));
                }
                relations.push(Relation::new(lhs, rhs));
            }
            other => {
                let column = content.len() - content.trim_start().len() + 1;
                return Err(FpqError::Parse {
                    line,
                    column,
                    message: format!("unknown directive '{other}'"),
                });
            }
        }
    }
    let gens = gens.ok_or(FpqError::Parse {
        line: 1,
        column: 1,
        message: "missing 'gens:' line".into(),
    })?;
    Presentation::new(gens, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_twist_spun_trefoil() {
        let p = parse_presentation("gens: a c\nrel: (a * c) * a = c\nrel: c *^5 a = c").unwrap();
        assert_eq!(p.generators(), ["a", "c"]);
        let g = QuandleExpression::generator;
        assert_eq!(
            p.relations()[0],
            Relation::new(g("a").star(g("c")).star(g("a")), g("c"))
        );
        assert_eq!(
            p.relations()[1],
            Relation::new(QuandleExpression::op(g("c"), g("a"), 5), g("c"))
        );
    }

    #[test]
    fn left_associative_without_parentheses() {
        let a = parse_presentation("gens: a c\nrel: a * c * a = c").unwrap();
        let b = parse_presentation("gens: a c\nrel: (a * c) * a = c").unwrap();
        assert_eq!(a, b);
        let right = parse_presentation("gens: a c\nrel: a * (c * a) = c").unwrap();
        assert_ne!(a, right);
    }

    #[test]
    fn rejections_carry_positions() {
        assert_eq!(
            parse_presentation("gens: a b\nrel: a *^0 b = a"),
            Err(FpqError::ZeroExponent {
                line: 2,
                column: 10
            })
        );
        assert_eq!(
            parse_presentation("gens: a\nrel: a * b = a"),
            Err(FpqError::UndeclaredAt {
                symbol: "b".into(),
                line: 2,
                column: 10
            })
        );
        assert!(matches!(
            parse_presentation("gens: a\nrel: a * = a"),
            Err(FpqError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a\nrel: (a * a = a"),
            Err(FpqError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a\nfoo"),
            Err(FpqError::Parse {
                line: 2,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_presentation("rel: a = a"),
            Err(FpqError::UndeclaredAt { .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a a"),
            Err(FpqError::Parse {
                line: 1,
                column: 9,
                ..
            })
        ));
    }

    #[test]
    fn round_trip() {
        let corpus = [
            "gens: a c\nrel: (a * c) * a = c\nrel: c *^5 a = c\n",
            "gens: a b c d\nrel: a * c = b\nrel: b * d = c\nrel: c * b = d\nrel: b *^3 a = b\nrel: c *^3 a = c\n",
            "# comment\ngens: x y\n\nrel: x *^-2 (y * x) = y   # trailing\n",
            "gens: a\n",
        ];
        for text in corpus {
            let p = parse_presentation(text).unwrap();
            let s = serialize_presentation(&p);
            assert_eq!(parse_presentation(&s).unwrap(), p);
            assert_eq!(serialize_presentation(&parse_presentation(&s).unwrap()), s);
        }
        let p = parse_presentation(corpus[2]).unwrap();
        assert_eq!(
            serialize_presentation(&p),
            "gens: x y\nrel: x *^-2 (y * x) = y\n"
        );
    }
}
