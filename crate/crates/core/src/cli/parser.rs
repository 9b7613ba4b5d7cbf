//! Recursive-descent parser for integer polynomial expressions in `y`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'y' | '(' expr ')'
//! ```
//!
//! Multiplication must be written explicitly: `3y` is rejected.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::polyring::Poly;

pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expected {
    Integer,
    Variable,
    OpenParen,
    CloseParen,
    Operator,
    Minus,
    End,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Integer => "integer",
            Expected::Variable => "'y'",
            Expected::OpenParen => "'('",
            Expected::CloseParen => "')'",
            Expected::Operator => "operator",
            Expected::Minus => "'-'",
            Expected::End => "end of input",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {column}: expected {}, found {found}", join_expected(.expected))]
    Unexpected {
        /// 1-based character column.
        column: usize,
        expected: Vec<Expected>,
        found: String,
    },
    #[error("column {column}: exponent {exponent} exceeds {MAX_EXPONENT}")]
    ExponentOverflow { column: usize, exponent: String },
}

impl ParseError {
    pub fn column(&self) -> usize {
        match self {
            ParseError::Unexpected { column, .. } | ParseError::ExponentOverflow { column, .. } => *column,
        }
    }
}

fn join_expected(expected: &[Expected]) -> String {
    expected.iter().map(ToString::to_string).collect::<Vec<_>>().join(" or ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Var => "'y'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push(Token {
                    tok: Tok::Int(chars[start..i].iter().collect()),
                    column,
                });
                continue;
            }
            'y' => Tok::Var,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::Unexpected {
                    column,
                    expected: vec![Expected::Integer, Expected::Variable, Expected::Operator, Expected::OpenParen, Expected::CloseParen],
                    found: format!("character {other:?}"),
                })
            }
        };
        tokens.push(Token { tok, column });
        i += 1;
    }
    tokens.push(Token {
        tok: Tok::Eof,
        column: chars.len() + 1,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<Expected>) -> ParseError {
        let t = self.peek();
        ParseError::Unexpected {
            column: t.column,
            expected,
            found: t.tok.describe(),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let Token { tok, column } = self.peek().clone();
        let Tok::Int(digits) = tok else {
            return Err(self.error(vec![Expected::Integer]));
        };
        self.bump();
        let exponent = digits
            .parse::<u32>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentOverflow { column, exponent: digits })?;
        Ok(base.pow(exponent))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(digits) => {
                self.bump();
                let n: BigInt = digits.parse().expect("tokenizer yields digits only");
                Ok(Poly::constant(n))
            }
            Tok::Var => {
                self.bump();
                Ok(Poly::var())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error(vec![Expected::Operator, Expected::CloseParen]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(vec![Expected::Integer, Expected::Variable, Expected::OpenParen, Expected::Minus])),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let poly = parser.expr()?;
    if parser.peek().tok != Tok::Eof {
        return Err(parser.error(vec![Expected::Operator, Expected::End]));
    }
    Ok(poly)
}
