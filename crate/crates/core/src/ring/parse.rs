//! Text grammar for ring elements.
//!
//! ```text
//! expr   := ('+' | '-')* term (('+' | '-') term)*
//! term   := factor (['*'] factor)*        implicit '*' before a variable or '('
//! factor := ('+' | '-') factor | atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `a_i_j` (1-based), or for matrices of order at most 3 the
//! row-major single letters `a, b, c, ...`, so `ad - bc` and `3abc` parse.
//! `−` (U+2212) and `·` (U+00B7) are accepted for `-` and `*`.

use num_bigint::BigInt;
use thiserror::Error;

use super::element::RingElement;
use super::monomial::Var;

const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable a_{row}_{col} at position {pos} is out of range for order {n}")]
    VarOutOfRange {
        pos: usize,
        row: usize,
        col: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str, n: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let digits = |from: usize| -> usize {
        let mut j = from;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let ch = chars[i];
        let start = i;
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00B7}' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let end = digits(i);
                let s: String = chars[i..end].iter().collect();
                i = end;
                toks.push((start, Tok::Num(s.parse().expect("digit run"))));
                continue;
            }
            'a' if chars.get(i + 1) == Some(&'_') => {
                let row_end = digits(i + 2);
                if row_end == i + 2 || chars.get(row_end) != Some(&'_') {
                    return Err(syntax(start, "expected a_<row>_<col>"));
                }
                let col_end = digits(row_end + 1);
                if col_end == row_end + 1 {
                    return Err(syntax(start, "expected a_<row>_<col>"));
                }
                let row: String = chars[i + 2..row_end].iter().collect();
                let col: String = chars[row_end + 1..col_end].iter().collect();
                let (row, col) = match (row.parse::<usize>(), col.parse::<usize>()) {
                    (Ok(r), Ok(c)) => (r, c),
                    _ => return Err(syntax(start, "variable index too large")),
                };
                if row == 0 || col == 0 || row > n || col > n {
                    return Err(ParseError::VarOutOfRange { pos: start, row, col, n });
                }
                i = col_end;
                toks.push((start, Tok::Var(Var::new(row, col))));
                continue;
            }
            c if c.is_alphabetic() => match Var::from_alias(c, n) {
                Some(v) => Tok::Var(v),
                None => return Err(syntax(start, format!("unknown variable '{c}' for order {n}"))),
            },
            c => return Err(syntax(start, format!("unexpected character '{c}'"))),
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<RingElement, ParseError> {
        let mut acc = self.factor_chain()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // Leading unary signs on the first term.
    fn factor_chain(&mut self) -> Result<RingElement, ParseError> {
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
                self.factor_chain()
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.factor_chain()?)
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Result<RingElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RingElement, ParseError> {
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
                return self.factor();
            }
            Some(Tok::Minus) => {
                self.bump();
                return Ok(-self.factor()?);
            }
            _ => {}
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.pos();
            let k = match self.bump() {
                Some(Tok::Num(k)) => k,
                _ => return Err(syntax(pos, "expected a non-negative integer exponent")),
            };
            let k = u32::try_from(k)
                .ok()
                .filter(|&k| k <= MAX_EXPONENT)
                .ok_or_else(|| syntax(pos, "exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingElement, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(RingElement::Integer(v)),
            Some(Tok::Var(v)) => Ok(RingElement::var(v.row as usize, v.col as usize)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected ')'")),
                }
            }
            Some(t) => Err(syntax(pos, format!("unexpected token {t:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parses `text` as an element of `Z[a_i_j]` for a matrix of order `n`.
pub fn parse_expr(text: &str, n: usize) -> Result<RingElement, ParseError> {
    let toks = lex(text, n)?;
    let end = text.chars().count();
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end };
    let value = p.expr()?;
    if p.at < p.toks.len() {
        return Err(syntax(p.pos(), "trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Naming;
    use num_traits::Zero;

    #[test]
    fn determinant_expression_with_aliases() {
        let v = parse_expr("ad − bc", 2).unwrap();
        let expected = RingElement::var(1, 1) * RingElement::var(2, 2)
            - RingElement::var(1, 2) * RingElement::var(2, 1);
        assert_eq!(v, expected);
        assert_eq!(parse_expr("a_1_1*a_2_2 - a_1_2*a_2_1", 2).unwrap(), expected);
    }

    #[test]
    fn literals_and_expansion() {
        assert_eq!(parse_expr("0", 2).unwrap(), RingElement::zero());
        assert!(matches!(parse_expr("0", 2).unwrap(), RingElement::Integer(_)));
        let sq = parse_expr("(a+d)^2", 2).unwrap();
        assert_eq!(sq, parse_expr("a^2 + 2ad + d^2", 2).unwrap());
        assert_eq!(parse_expr("-2^3", 1).unwrap(), RingElement::from(-8));
        assert_eq!(parse_expr("3abc", 2).unwrap(), parse_expr("3*a*b*c", 2).unwrap());
        assert_eq!(parse_expr("a*-b", 2).unwrap(), -parse_expr("ab", 2).unwrap());
        assert_eq!(parse_expr("2(a+1)", 2).unwrap(), parse_expr("2a + 2", 2).unwrap());
    }

    #[test]
    fn nine_aliases_for_order_three() {
        let v = parse_expr("i", 3).unwrap();
        assert_eq!(v, RingElement::var(3, 3));
        assert_eq!(parse_expr("c", 3).unwrap(), RingElement::var(1, 3));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr("a_3_1", 2),
            Err(ParseError::VarOutOfRange { pos: 0, row: 3, col: 1, n: 2 })
        );
        assert!(matches!(parse_expr("a + e", 2), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expr("(a + b", 2), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("a +", 2), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_expr("", 2), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr("a", 4), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_expr("a^b", 2), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("2 3", 2), Err(ParseError::Syntax { pos: 2, .. })));
    }

    #[test]
    fn formatted_output_reparses() {
        let x = parse_expr("(a - 2b + c*d - 5)^3", 2).unwrap();
        for naming in [Naming::Indexed, Naming::Aliased(2)] {
            let text = x.display(naming).to_string();
            assert_eq!(parse_expr(&text, 2).unwrap(), x, "{text}");
        }
    }
}
