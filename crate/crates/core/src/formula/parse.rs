//! Recursive-descent parser for formulas and schemas.
//!
//! ```text
//! formula := iff ;
//! iff     := imp { "<->" imp } ;
//! imp     := or [ "->" imp ] ;
//! or      := and { "|" and } ;
//! and     := unary { "&" unary } ;
//! unary   := "~" [ chain ] unary | primary ;
//! primary := atom | "bot" [ chain ] | "top" | "(" formula ")" ;
//! chain   := "{" [ int { "," int } ] "}" ;
//! ```
//!
//! Schemas additionally accept `"[" cexpr "]"` wherever a chain literal may
//! appear, where `cexpr` combines chain variables and literals with `^`
//! (coconcatenation), `.` (concatenation), `&` (common symbols) and the
//! postfix complement `'`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use super::schema::{ChainExpr, Schema};
use super::Formula;
use crate::chain::{Chain, ChainError};

/// Byte range `[start, end)` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {span}: {message}")]
    Syntax { message: String, span: SourceSpan },
    #[error("{error} (at {span})")]
    Chain { error: ChainError, span: SourceSpan },
}

impl ParseError {
    pub fn span(&self) -> SourceSpan {
        match self {
            ParseError::Syntax { span, .. } | ParseError::Chain { span, .. } => *span,
        }
    }

    fn syntax(message: impl Into<String>, span: SourceSpan) -> ParseError {
        ParseError::Syntax {
            message: message.into(),
            span,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Tilde,
    Amp,
    Pipe,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Dot,
    Quote,
    Int(u32),
    Ident(String),
    Bot,
    Top,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DoubleArrow => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Quote => "`'`".into(),
            Tok::Int(v) => alloc::format!("number {v}"),
            Tok::Ident(name) => alloc::format!("identifier `{name}`"),
            Tok::Bot => "`bot`".into(),
            Tok::Top => "`top`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, SourceSpan)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits = &text[start..i];
            let value = digits.parse::<u32>().map_err(|_| {
                ParseError::syntax("number too large", SourceSpan { start, end: i })
            })?;
            out.push((Tok::Int(value), SourceSpan { start, end: i }));
            continue;
        } else if b.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let tok = match word {
                "bot" => Tok::Bot,
                "top" => Tok::Top,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((tok, SourceSpan { start, end: i }));
            continue;
        } else if text[i..].starts_with("<->") {
            i += 3;
            Tok::DoubleArrow
        } else if text[i..].starts_with("->") {
            i += 2;
            Tok::Arrow
        } else {
            i += 1;
            match b {
                b'~' => Tok::Tilde,
                b'&' => Tok::Amp,
                b'|' => Tok::Pipe,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'{' => Tok::LBrace,
                b'}' => Tok::RBrace,
                b'[' => Tok::LBracket,
                b']' => Tok::RBracket,
                b',' => Tok::Comma,
                b'^' => Tok::Caret,
                b'.' => Tok::Dot,
                b'\'' => Tok::Quote,
                _ => {
                    let ch = text[start..].chars().next().unwrap_or('?');
                    let end = start + ch.len_utf8();
                    return Err(ParseError::syntax(
                        alloc::format!("unexpected character `{ch}`"),
                        SourceSpan { start, end },
                    ));
                }
            }
        };
        out.push((tok, SourceSpan { start, end: i }));
    }
    out.push((
        Tok::Eof,
        SourceSpan {
            start: text.len(),
            end: text.len(),
        },
    ));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
    /// Alphabet size when parsing a concrete formula; `None` in schema mode.
    n: Option<u8>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> SourceSpan {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, SourceSpan) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<SourceSpan, ParseError> {
        if self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::syntax(
            alloc::format!("expected {wanted}, found {}", self.peek().describe()),
            self.span(),
        )
    }

    fn formula(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.imp()?;
            lhs = Schema::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Schema, ParseError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.imp()?;
            return Ok(Schema::Imp(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Pipe) {
            let rhs = self.and()?;
            lhs = Schema::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = Schema::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Schema, ParseError> {
        if self.eat(&Tok::Tilde) {
            let chain = self.optional_chain()?;
            let body = self.unary()?;
            return Ok(Schema::Neg(chain, Box::new(body)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Schema, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Schema::Var(Arc::from(name.as_str())))
            }
            Tok::Bot => {
                self.bump();
                Ok(Schema::Bottom(self.optional_chain()?))
            }
            Tok::Top => {
                self.bump();
                Ok(Schema::Bottom(ChainExpr::Lit(Vec::new())))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn optional_chain(&mut self) -> Result<ChainExpr, ParseError> {
        match self.peek() {
            Tok::LBrace => self.chain_literal(),
            Tok::LBracket => {
                let open = self.span();
                if self.n.is_some() {
                    return Err(ParseError::syntax(
                        "chain expressions are only allowed in schemas",
                        open,
                    ));
                }
                self.bump();
                let expr = self.chain_expr()?;
                self.expect(&Tok::RBracket)?;
                Ok(expr)
            }
            _ => Ok(ChainExpr::Full),
        }
    }

    fn chain_literal(&mut self) -> Result<ChainExpr, ParseError> {
        let start = self.expect(&Tok::LBrace)?.start;
        let mut symbols = Vec::new();
        if !self.eat(&Tok::RBrace) {
            loop {
                match self.bump() {
                    (Tok::Int(v), _) => symbols.push(v),
                    (tok, span) => {
                        return Err(ParseError::syntax(
                            alloc::format!("expected a world index, found {}", tok.describe()),
                            span,
                        ))
                    }
                }
                if self.eat(&Tok::RBrace) {
                    break;
                }
                self.expect(&Tok::Comma)?;
            }
        }
        let end = self.toks[self.pos.saturating_sub(1)].1.end;
        if let Some(n) = self.n {
            Chain::canonical(&symbols, n as u32).map_err(|error| ParseError::Chain {
                error,
                span: SourceSpan { start, end },
            })?;
        }
        Ok(ChainExpr::Lit(symbols))
    }

    fn chain_expr(&mut self) -> Result<ChainExpr, ParseError> {
        let mut lhs = self.chain_term()?;
        loop {
            let ctor: fn(Box<ChainExpr>, Box<ChainExpr>) -> ChainExpr = match self.peek() {
                Tok::Caret => ChainExpr::Coconcat,
                Tok::Dot => ChainExpr::Concat,
                Tok::Amp => ChainExpr::Common,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.chain_term()?;
            lhs = ctor(Box::new(lhs), Box::new(rhs));
        }
    }

    fn chain_term(&mut self) -> Result<ChainExpr, ParseError> {
        let mut term = match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                ChainExpr::Var(Arc::from(name.as_str()))
            }
            Tok::LBrace => self.chain_literal()?,
            Tok::Tilde => {
                // `[~]` names the full chain inside expressions.
                self.bump();
                ChainExpr::Full
            }
            Tok::LParen => {
                self.bump();
                let inner = self.chain_expr()?;
                self.expect(&Tok::RParen)?;
                inner
            }
            _ => return Err(self.unexpected("a chain")),
        };
        while self.eat(&Tok::Quote) {
            term = ChainExpr::Complement(Box::new(term));
        }
        Ok(term)
    }

    fn finish(mut self) -> Result<Schema, ParseError> {
        let f = self.formula()?;
        if *self.peek() != Tok::Eof {
            return Err(self.unexpected("an operator or end of input"));
        }
        Ok(f)
    }
}

/// Parses a formula over `[n]`.
pub fn parse(text: &str, n: u8) -> Result<Formula, ParseError> {
    if n == 0 || n > crate::chain::MAX_WORLDS {
        return Err(ParseError::Chain {
            error: ChainError::BoundExceeded(n as u32),
            span: SourceSpan { start: 0, end: 0 },
        });
    }
    let schema = Parser {
        toks: lex(text)?,
        pos: 0,
        n: Some(n),
    }
    .finish()?;
    // Literals were validated while parsing, so only atoms remain free.
    schema
        .instantiate(None, &BTreeMap::new(), n)
        .map_err(|e| ParseError::syntax(e.to_string(), SourceSpan { start: 0, end: text.len() }))
}

/// Parses a schema: atoms act as formula metavariables and chains may be
/// `[expr]` over chain metavariables.
pub fn parse_schema(text: &str) -> Result<Schema, ParseError> {
    Parser {
        toks: lex(text)?,
        pos: 0,
        n: None,
    }
    .finish()
}
