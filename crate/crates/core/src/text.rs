//! Text form of partitions and Schur expressions.
//!
//! Grammar: `expr := ['+'|'-'] term (('+'|'-') term)*`, where a term is
//! `coeff '*' partition`, a bare `partition`, or a bare `coeff` (a multiple
//! of `[]`). Partitions are written `[3,1,1]`; `(3,1,1)` is accepted too.
//! Columns in errors are 1-based character positions.

use std::fmt::{self, Display};
use std::str::FromStr;

use crate::{Coeff, Error, Partition, Result, SchurExpr, TensorExpr};

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.chars().collect(), pos: 0, _src: src }
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

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { column: self.pos + 1, message: message.into() }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a part"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::Parse { column: start + 1, message: format!("part {text} is too large") })
    }

    fn partition(&mut self) -> Result<Partition> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let close = match self.peek() {
            Some('[') => ']',
            Some('(') => ')',
            _ => return Err(self.err("expected '[' or '('")),
        };
        self.pos += 1;
        let mut parts = Vec::new();
        if self.peek() != Some(close) {
            loop {
                parts.push(self.number()?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(close)?;
        Partition::new(parts).map_err(|_| Error::Parse {
            column: start + 1,
            message: "parts not weakly decreasing".into(),
        })
    }

    fn coefficient<C: Coeff + FromStr>(&mut self) -> Result<C> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || matches!(c, '/' | '.' | 'e' | 'E')) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::Parse { column: start + 1, message: format!("invalid coefficient {text:?}") })
    }
}

/// Parses `[3,1]`, `(3,1)` or `[]`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut cur = Cursor::new(text);
    let p = cur.partition()?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(p)
}

/// Parses a signed sum of Schur terms such as `[2,1] + 2*[1,1,1] - 3`.
pub fn parse_expr<C: Coeff + FromStr>(text: &str) -> Result<SchurExpr<C>> {
    let mut cur = Cursor::new(text);
    let mut out = SchurExpr::zero();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some('+') => {
                cur.pos += 1;
                false
            }
            Some('-') => {
                cur.pos += 1;
                true
            }
            None if first => return Err(cur.err("empty expression")),
            None => break,
            Some(c) if !first => return Err(cur.err(format!("expected '+' or '-', found '{c}'"))),
            Some(_) => false,
        };
        first = false;
        let (coeff, label) = match cur.peek() {
            Some('[' | '(') => (C::one(), cur.partition()?),
            Some(c) if c.is_ascii_digit() => {
                let c: C = cur.coefficient()?;
                if cur.peek() == Some('*') {
                    cur.pos += 1;
                    (c, cur.partition()?)
                } else {
                    (c, Partition::empty())
                }
            }
            Some(c) => return Err(cur.err(format!("unexpected '{c}'"))),
            None => return Err(cur.err("expected a term")),
        };
        out.add_term(label, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

/// Formats a combination with a custom rendering of its keys: explicit
/// signs, no `1*`, and `0` for the empty combination.
pub fn format_with<K: Ord + Clone, C: Coeff + Display>(
    expr: &crate::Combination<K, C>,
    mut label: impl FnMut(&K) -> String,
) -> String {
    if expr.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in expr.iter().enumerate() {
        let negative = *c < C::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push_str("- "),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(&label(k));
    }
    out
}

/// Canonical text of a Schur expression, e.g. `[2] + [1,1]` or `- [1]`.
pub fn format_expr<C: Coeff + Display>(expr: &SchurExpr<C>) -> String {
    format_with(expr, Partition::to_string)
}

pub fn format_tensor<C: Coeff + Display>(expr: &TensorExpr<C>) -> String {
    format_with(expr, |(a, b)| format!("{a}⊗{b}"))
}

impl<C: Coeff + Display> Display for SchurExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_expr(self))
    }
}

impl<C: Coeff + Display> Display for TensorExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tensor(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integer, Rational, Schur};

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("[3,1,1]").unwrap().parts(), &[3, 1, 1]);
        assert_eq!(parse_partition(" ( 2 , 2 ) ").unwrap().parts(), &[2, 2]);
        assert!(parse_partition("[]").unwrap().is_empty());
        assert_eq!(
            parse_partition("[1,2]"),
            Err(Error::Parse { column: 1, message: "parts not weakly decreasing".into() })
        );
        assert!(matches!(parse_partition("[2,]"), Err(Error::Parse { column: 4, .. })));
        assert!(parse_partition("[2] x").is_err());
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), Partition::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn expressions() {
        let f: Schur = parse_expr("[2,1] + 2*[1,1,1]").unwrap();
        assert_eq!(f, Schur::s(&[2, 1]) + Schur::s(&[1, 1, 1]).scaled(&Integer::from(2)));
        assert_eq!(parse_expr::<Integer>("[]").unwrap(), Schur::one());
        assert_eq!(parse_expr::<Integer>("-3 + [1]").unwrap(), Schur::s(&[1]) - Schur::one().scaled(&3.into()));
        assert_eq!(parse_expr::<Integer>("0").unwrap(), Schur::zero());
        assert_eq!(parse_expr::<Integer>("[1] - [1]").unwrap(), Schur::zero());
        assert!(matches!(parse_expr::<Integer>("[1,2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr::<Integer>("[1] [2]"), Err(Error::Parse { column: 5, .. })));
        assert!(parse_expr::<Integer>("").is_err());
        assert!(parse_expr::<Integer>("2*").is_err());
        let q: crate::SchurQ = parse_expr("3/2*[1]").unwrap();
        assert_eq!(q.coeff(&Partition::row(1)), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_expr(&(Schur::s(&[2]) + Schur::s(&[1, 1]))), "[2] + [1,1]");
        assert_eq!(format_expr(&-Schur::s(&[1])), "- [1]");
        assert_eq!(format_expr(&Schur::zero()), "0");
        let f = Schur::s(&[2, 1]).scaled(&3.into()) - Schur::s(&[3]) + Schur::one();
        assert_eq!(f.to_string(), "[] - [3] + 3*[2,1]");
        assert_eq!(parse_expr::<Integer>(&f.to_string()).unwrap(), f);
        let t = TensorExpr::tensor(&Schur::s(&[1]), &Schur::s(&[1]));
        assert_eq!(t.to_string(), "[1]⊗[1]");
    }
}
