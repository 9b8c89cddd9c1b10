//! Textual surface for ordinals and space expressions.
//!
//! ```text
//! Ord    := Prod ('+' Prod)*
//! Prod   := Atom ('*' nat)?
//! Atom   := 'w' ('^' Atom)? | nat | '(' Ord ')'
//!
//! Space  := SProd ('(+)' SProd)*
//! SProd  := SAtom ('x' SAtom)*
//! SAtom  := 'can(' Ord ',' nat ')' | 'D(' Space ')' | 'D[' Ord '](' Space ')'
//!         | '(' Space ')' | 'empty'
//! ```
//!
//! `ω` is accepted for `w` and whitespace is insignificant. Ordinal input
//! need not be in normal form: sums and products are evaluated, so `w + w^2`
//! reads as `ω^2`. [`parse_ordinal_expr`] also admits `(+)` between ordinals
//! for the natural sum, binding loosest.

mod format;
mod lexer;

use std::fmt;

use thiserror::Error;

use crate::expr::SpaceExpr;
use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;

pub use format::{format_canonical, format_ordinal, format_space};
use lexer::{Tok, Token};

/// Byte offsets `start..end` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> SourceSpan {
        SourceSpan { start, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: String,
    pub found: String,
    pub line: usize,
    pub column: usize,
    source_line: String,
    caret_offset: usize,
    caret_width: usize,
}

impl ParseError {
    fn new(src: &str, span: SourceSpan, expected: &str, found: &str) -> ParseError {
        let line_start = src[..span.start].rfind('\n').map_or(0, |i| i + 1);
        let line_end = src[span.start..].find('\n').map_or(src.len(), |i| span.start + i);
        let before = &src[line_start..span.start];
        let underlined = &src[span.start..span.end.min(line_end).max(span.start)];
        ParseError {
            span,
            expected: expected.to_string(),
            found: found.to_string(),
            line: src[..span.start].matches('\n').count() + 1,
            column: before.chars().count() + 1,
            source_line: src[line_start..line_end].to_string(),
            caret_offset: before.chars().count(),
            caret_width: underlined.chars().count().max(1),
        }
    }

    /// The one-line summary `line:col: expected X, found Y`.
    pub fn summary(&self) -> String {
        format!(
            "{}:{}: expected {}, found {}",
            self.line, self.column, self.expected, self.found
        )
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        writeln!(f, "  {}", self.source_line)?;
        write!(
            f,
            "  {}{}",
            " ".repeat(self.caret_offset),
            "^".repeat(self.caret_width)
        )
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> PResult<Parser<'a>> {
        Ok(Parser {
            src,
            toks: lexer::tokenize(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError::new(self.src, t.span, expected, &t.tok.describe())
    }

    fn expect(&mut self, tok: Tok) -> PResult<Token> {
        if self.peek() == &tok {
            Ok(self.bump())
        } else {
            Err(self.error(&tok.describe()))
        }
    }

    fn finish(&mut self, expected: &str) -> PResult<()> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn nat(&mut self) -> PResult<u64> {
        match *self.peek() {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error("a number")),
        }
    }

    fn positive(&mut self, what: &str) -> PResult<u64> {
        let span = self.toks[self.pos].span;
        let n = self.nat()?;
        if n == 0 {
            return Err(ParseError::new(self.src, span, what, "0"));
        }
        Ok(n)
    }

    /// `Ord ('(+)' Ord)*` when `natural` is set, plain `Ord` otherwise.
    fn ordinal_expr(&mut self, natural: bool) -> PResult<Ordinal> {
        let mut acc = self.ordinal(natural)?;
        while natural && self.peek() == &Tok::CircPlus {
            self.bump();
            acc = acc.natural_sum(&self.ordinal(natural)?);
        }
        Ok(acc)
    }

    fn ordinal(&mut self, natural: bool) -> PResult<Ordinal> {
        let mut acc = self.ordinal_product(natural)?;
        while self.peek() == &Tok::Plus {
            self.bump();
            acc = &acc + &self.ordinal_product(natural)?;
        }
        Ok(acc)
    }

    fn ordinal_product(&mut self, natural: bool) -> PResult<Ordinal> {
        let atom = self.ordinal_atom(natural)?;
        if self.peek() == &Tok::Star {
            self.bump();
            let n = self.positive("a positive coefficient")?;
            return Ok(&atom * &Ordinal::from(n));
        }
        Ok(atom)
    }

    fn ordinal_atom(&mut self, natural: bool) -> PResult<Ordinal> {
        match *self.peek() {
            Tok::Omega => {
                self.bump();
                if self.peek() == &Tok::Caret {
                    self.bump();
                    let e = self.ordinal_atom(natural)?;
                    return Ok(Ordinal::omega_pow(e));
                }
                Ok(Ordinal::omega())
            }
            Tok::Nat(n) => {
                self.bump();
                Ok(Ordinal::from(n))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.ordinal_expr(natural)?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => Err(self.error("an ordinal")),
        }
    }

    fn space(&mut self) -> PResult<SpaceExpr> {
        let mut acc = self.space_product()?;
        while self.peek() == &Tok::CircPlus {
            self.bump();
            acc = SpaceExpr::union(acc, self.space_product()?);
        }
        Ok(acc)
    }

    fn space_product(&mut self) -> PResult<SpaceExpr> {
        let mut acc = self.space_atom()?;
        while self.peek() == &Tok::Times {
            self.bump();
            acc = SpaceExpr::product(acc, self.space_atom()?);
        }
        Ok(acc)
    }

    fn space_atom(&mut self) -> PResult<SpaceExpr> {
        match self.peek() {
            Tok::Can => {
                self.bump();
                self.expect(Tok::LParen)?;
                let cb_star = self.ordinal(false)?;
                self.expect(Tok::Comma)?;
                let degree = self.positive("a positive degree")?;
                self.expect(Tok::RParen)?;
                Ok(SpaceExpr::can(cb_star, degree).expect("degree checked"))
            }
            Tok::Deriv => {
                self.bump();
                let beta = if self.peek() == &Tok::LBracket {
                    self.bump();
                    let beta = self.ordinal(false)?;
                    self.expect(Tok::RBracket)?;
                    Some(beta)
                } else {
                    None
                };
                self.expect(Tok::LParen)?;
                let inner = self.space()?;
                self.expect(Tok::RParen)?;
                Ok(match beta {
                    None => SpaceExpr::derivative(inner),
                    Some(beta) => SpaceExpr::iterated(inner, beta),
                })
            }
            Tok::Empty => {
                self.bump();
                Ok(SpaceExpr::Canonical(CanonicalSpace::Empty))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.space()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => Err(self.error("a space")),
        }
    }
}

/// Parses an ordinal, normalizing sums and products.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser::new(text)?;
    let o = p.ordinal(false)?;
    p.finish("'+' or end of input")?;
    Ok(o)
}

/// Parses an ordinal expression that may use `(+)` for the natural sum.
pub fn parse_ordinal_expr(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser::new(text)?;
    let o = p.ordinal_expr(true)?;
    p.finish("'+', '(+)' or end of input")?;
    Ok(o)
}

pub fn parse_space(text: &str) -> Result<SpaceExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.space()?;
    p.finish("'x', '(+)' or end of input")?;
    Ok(e)
}
