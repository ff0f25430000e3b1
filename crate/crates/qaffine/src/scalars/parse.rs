//! Parser for the polynomial and rational-function string grammar.
//!
//! The printed canonical form is `coeff * v^e * ...` terms joined by `+`/`-`,
//! with rational functions as `num` or `(num)/(den)`. The parser is more
//! lenient than the printer: whitespace is optional, bare variables (`z`,
//! `z^2`, `-z`) need no explicit coefficient, integer factors may appear in
//! any position of a term, and the `/` separating numerator and denominator
//! accepts unparenthesized sides. Parsing a printed canonical form always
//! reproduces the original value.

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::vartable::VarTable;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().collect();
            let n = text
                .parse::<BigInt>()
                .map_err(|_| Error::ParseError(format!("bad integer {text:?}")))?;
            toks.push(Tok::Int(n));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            toks.push(Tok::Ident(bytes[start..i].iter().collect()));
        } else {
            match c {
                '+' => toks.push(Tok::Plus),
                '-' => toks.push(Tok::Minus),
                '*' => toks.push(Tok::Star),
                '^' => toks.push(Tok::Caret),
                _ => {
                    return Err(Error::ParseError(format!(
                        "unexpected character {c:?} at byte {i}"
                    )))
                }
            }
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// expr := term ((+|-) term)*
    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                other => {
                    return Err(Error::ParseError(format!(
                        "expected + or - between terms, found {other:?}"
                    )))
                }
            }
        }
        Ok(acc)
    }

    /// term := [sign] factor (* factor)*
    fn term(&mut self) -> Result<LaurentPoly> {
        let mut sign = BigInt::from(1);
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Minus => {
                    sign = -sign;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut coeff = sign;
        let mut expo = LaurentPoly::zero_expo(self.vars);
        loop {
            match self.bump() {
                Some(Tok::Int(n)) => {
                    coeff *= n;
                }
                Some(Tok::Ident(name)) => {
                    let idx = self.vars.require(&name)?;
                    let k = if matches!(self.peek(), Some(Tok::Caret)) {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    expo[idx] += k;
                }
                other => {
                    return Err(Error::ParseError(format!(
                        "expected a coefficient or variable, found {other:?}"
                    )))
                }
            }
            if matches!(self.peek(), Some(Tok::Star)) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::monomial(self.vars, coeff, expo))
    }

    /// exponent := [sign] INT, returned as i32
    fn exponent(&mut self) -> Result<i32> {
        let mut neg = false;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Minus => {
                    neg = !neg;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        match self.bump() {
            Some(Tok::Int(n)) => {
                let k: i32 = n
                    .try_into()
                    .map_err(|_| Error::ParseError("exponent out of range".to_string()))?;
                Ok(if neg { -k } else { k })
            }
            other => Err(Error::ParseError(format!(
                "expected an integer exponent, found {other:?}"
            ))),
        }
    }
}

/// Parses a Laurent polynomial over `vars`.
pub fn parse_poly(vars: &Arc<VarTable>, input: &str) -> Result<LaurentPoly> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(Error::ParseError("empty polynomial".to_string()));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        vars,
    };
    parser.expr()
}

/// Strips one layer of matching outer parentheses, if present.
fn strip_outer_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // The opening paren must match the final closing paren.
        let mut depth = 0usize;
        for (i, c) in t.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i + 1 != t.len() {
                        return t;
                    }
                }
                _ => {}
            }
        }
        return &t[1..t.len() - 1];
    }
    t
}

/// Parses a rational function: either a bare polynomial or `num / den`,
/// where each side may be wrapped in parentheses.
pub fn parse_ratfunc(vars: &Arc<VarTable>, input: &str) -> Result<RatFunc> {
    // Locate a single '/' at parenthesis depth zero.
    let mut depth = 0usize;
    let mut slash: Option<usize> = None;
    for (i, c) in input.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                if depth == 0 {
                    return Err(Error::ParseError("unbalanced parentheses".to_string()));
                }
                depth -= 1;
            }
            '/' if depth == 0 => {
                if slash.is_some() {
                    return Err(Error::ParseError(
                        "more than one top-level '/'".to_string(),
                    ));
                }
                slash = Some(i);
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::ParseError("unbalanced parentheses".to_string()));
    }
    match slash {
        None => {
            let num = parse_poly(vars, strip_outer_parens(input))?;
            Ok(RatFunc::from_poly(num))
        }
        Some(i) => {
            let num = parse_poly(vars, strip_outer_parens(&input[..i]))?;
            let den = parse_poly(vars, strip_outer_parens(&input[i + 1..]))?;
            RatFunc::new(num, den)
        }
    }
}
