//! The ring description language.
//!
//! ```text
//! ring  := rterm ('x' rterm)*
//! rterm := 'Z(' int ')' | 'M(' int ',' ring ')' | 'U(' int ',' ring ')'
//!        | 'GR(' ring ',' group ')' | 'Triv(' ring ')' | 'Ks(' ring ',' sint ')'
//!        | 'FM(' int ',' ring ',' sint ')' | '(' ring ')'
//! group := gterm ('x' gterm)*
//! gterm := 'C(' int ')' | 'D(' int ')' | 'S(' int ')' | 'Q8' | '(' group ')'
//! ```
//!
//! Whitespace is ignored, `×` is accepted for `x`, and products associate to
//! the left. Signed literals `sint` are reduced into the base ring.

use std::fmt;

use thiserror::Error;

use crate::constructions::{
    formal_matrix, generalized_matrix, group_ring, matrix_ring, trivial_extension, upper_triangular,
};
use crate::error::Result;
use crate::groups::{cyclic, dihedral, group_product, quaternion8, symmetric, FiniteGroup};
use crate::ring::{direct_product, make_zmod, Caps, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(u64),
    Matrix(usize, Box<RingExpr>),
    Upper(usize, Box<RingExpr>),
    GroupRing(Box<RingExpr>, GroupExpr),
    Triv(Box<RingExpr>),
    Ks(Box<RingExpr>, i64),
    Formal(usize, Box<RingExpr>, i64),
    Product(Box<RingExpr>, Box<RingExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Q8,
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}; expected {}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    Times,
    Minus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(v) => write!(f, "'{v}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Times => f.write_str("'x'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            'x' | '×' => Some(Tok::Times),
            '-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = simple {
            bump(&mut chars);
            out.push(Spanned {
                tok,
                line: l,
                column: col,
            });
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                bump(&mut chars);
            }
            let v = s.parse::<u64>().map_err(|_| ParseError {
                line: l,
                column: col,
                message: format!("integer literal {s} is too large"),
                expected: vec!["a smaller integer".into()],
            })?;
            out.push(Spanned {
                tok: Tok::Int(v),
                line: l,
                column: col,
            });
        } else if c.is_ascii_alphabetic() {
            // 'x' is never part of a keyword, so it always splits identifiers
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric()) || d == 'x' {
                    break;
                }
                s.push(d);
                bump(&mut chars);
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else {
            return Err(ParseError {
                line: l,
                column: col,
                message: format!("unexpected character '{c}'"),
                expected: vec!["a ring expression".into()],
            });
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

const RING_ATOMS: [&str; 8] = ["Z", "M", "U", "GR", "Triv", "Ks", "FM", "'('"];
const GROUP_ATOMS: [&str; 5] = ["C", "D", "S", "Q8", "'('"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn advance(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        let message = if t.tok == Tok::End && expected.contains(&"')'") {
            "unbalanced parenthesis, found end of input".to_string()
        } else {
            format!("found {}", t.tok)
        };
        ParseError {
            line: t.line,
            column: t.column,
            message,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> std::result::Result<(), ParseError> {
        if self.peek().tok == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn int(&mut self) -> std::result::Result<(u64, usize, usize), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.advance();
                Ok((v, t.line, t.column))
            }
            _ => Err(self.error(&["an integer"])),
        }
    }

    fn bounded(
        &mut self,
        what: &str,
        min: u64,
        max: u64,
    ) -> std::result::Result<usize, ParseError> {
        let (v, line, column) = self.int()?;
        if v < min || v > max {
            return Err(ParseError {
                line,
                column,
                message: format!("{what} {v} out of range"),
                expected: vec![format!("an integer in {min}..={max}")],
            });
        }
        Ok(v as usize)
    }

    fn signed(&mut self) -> std::result::Result<i64, ParseError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.advance();
            true
        } else {
            false
        };
        let (v, line, column) = self.int()?;
        let v = i64::try_from(v).map_err(|_| ParseError {
            line,
            column,
            message: format!("integer literal {v} is too large"),
            expected: vec!["a smaller integer".into()],
        })?;
        Ok(if negative { -v } else { v })
    }

    fn nest(&mut self) -> std::result::Result<(), ParseError> {
        self.depth += 1;
        if self.depth > 64 {
            return Err(self.error(&["a shallower expression"]));
        }
        Ok(())
    }

    fn ring(&mut self) -> std::result::Result<RingExpr, ParseError> {
        self.nest()?;
        let mut left = self.ring_term()?;
        while self.peek().tok == Tok::Times {
            self.advance();
            let right = self.ring_term()?;
            left = RingExpr::Product(Box::new(left), Box::new(right));
        }
        self.depth -= 1;
        Ok(left)
    }

    fn ring_term(&mut self) -> std::result::Result<RingExpr, ParseError> {
        let t = self.peek().clone();
        let name = match &t.tok {
            Tok::LParen => {
                self.advance();
                let inner = self.ring()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(inner);
            }
            Tok::Ident(s) if RING_ATOMS.contains(&s.as_str()) => s.clone(),
            _ => return Err(self.error(&RING_ATOMS)),
        };
        self.advance();
        self.expect(Tok::LParen, "'('")?;
        let e = match name.as_str() {
            "Z" => RingExpr::Zmod(self.bounded("modulus", 1, u64::MAX)? as u64),
            "M" | "U" => {
                let k = self.bounded("matrix size", 1, 16)?;
                self.expect(Tok::Comma, "','")?;
                let r = Box::new(self.ring()?);
                if name == "M" {
                    RingExpr::Matrix(k, r)
                } else {
                    RingExpr::Upper(k, r)
                }
            }
            "GR" => {
                let r = Box::new(self.ring()?);
                self.expect(Tok::Comma, "','")?;
                RingExpr::GroupRing(r, self.group()?)
            }
            "Triv" => RingExpr::Triv(Box::new(self.ring()?)),
            "Ks" => {
                let r = Box::new(self.ring()?);
                self.expect(Tok::Comma, "','")?;
                RingExpr::Ks(r, self.signed()?)
            }
            "FM" => {
                let k = self.bounded("matrix size", 2, 16)?;
                self.expect(Tok::Comma, "','")?;
                let r = Box::new(self.ring()?);
                self.expect(Tok::Comma, "','")?;
                RingExpr::Formal(k, r, self.signed()?)
            }
            _ => unreachable!(),
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(e)
    }

    fn group(&mut self) -> std::result::Result<GroupExpr, ParseError> {
        self.nest()?;
        let mut left = self.group_term()?;
        while self.peek().tok == Tok::Times {
            self.advance();
            let right = self.group_term()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        self.depth -= 1;
        Ok(left)
    }

    fn group_term(&mut self) -> std::result::Result<GroupExpr, ParseError> {
        let t = self.peek().clone();
        let name = match &t.tok {
            Tok::LParen => {
                self.advance();
                let inner = self.group()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(inner);
            }
            Tok::Ident(s) if GROUP_ATOMS.contains(&s.as_str()) => s.clone(),
            _ => return Err(self.error(&GROUP_ATOMS)),
        };
        self.advance();
        if name == "Q8" {
            return Ok(GroupExpr::Q8);
        }
        self.expect(Tok::LParen, "'('")?;
        let g = match name.as_str() {
            "C" => GroupExpr::Cyclic(self.bounded("cyclic order", 1, 64)?),
            "D" => GroupExpr::Dihedral(self.bounded("dihedral parameter", 1, 32)?),
            "S" => GroupExpr::Symmetric(self.bounded("symmetric degree", 1, 4)?),
            _ => unreachable!(),
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(g)
    }
}

/// Parses a ring expression.
pub fn parse(text: &str) -> std::result::Result<RingExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        depth: 0,
    };
    let e = p.ring()?;
    if p.peek().tok != Tok::End {
        return Err(p.error(&["'x'", "end of input"]));
    }
    Ok(e)
}

/// Parses a group expression such as `C(2) x S(3)`.
pub fn parse_group(text: &str) -> std::result::Result<GroupExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        depth: 0,
    };
    let g = p.group()?;
    if p.peek().tok != Tok::End {
        return Err(p.error(&["'x'", "end of input"]));
    }
    Ok(g)
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z({n})"),
            RingExpr::Matrix(k, r) => write!(f, "M({k}, {r})"),
            RingExpr::Upper(k, r) => write!(f, "U({k}, {r})"),
            RingExpr::GroupRing(r, g) => write!(f, "GR({r}, {g})"),
            RingExpr::Triv(r) => write!(f, "Triv({r})"),
            RingExpr::Ks(r, s) => write!(f, "Ks({r}, {s})"),
            RingExpr::Formal(k, r, s) => write!(f, "FM({k}, {r}, {s})"),
            RingExpr::Product(a, b) => match **b {
                RingExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(m) => write!(f, "C({m})"),
            GroupExpr::Dihedral(m) => write!(f, "D({m})"),
            GroupExpr::Symmetric(k) => write!(f, "S({k})"),
            GroupExpr::Q8 => f.write_str("Q8"),
            GroupExpr::Product(a, b) => match **b {
                GroupExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

impl GroupExpr {
    pub fn order(&self) -> u128 {
        match self {
            GroupExpr::Cyclic(m) => *m as u128,
            GroupExpr::Dihedral(m) => 2 * *m as u128,
            GroupExpr::Symmetric(k) => (1..=*k as u128).product(),
            GroupExpr::Q8 => 8,
            GroupExpr::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupExpr::Cyclic(m) => cyclic(*m, caps),
            GroupExpr::Dihedral(m) => dihedral(*m, caps),
            GroupExpr::Symmetric(k) => symmetric(*k, caps),
            GroupExpr::Q8 => quaternion8(caps),
            GroupExpr::Product(a, b) => group_product(&a.build(caps)?, &b.build(caps)?, caps),
        }
    }
}

impl RingExpr {
    /// Order of the ring the expression denotes, computed without building
    /// it (saturating).
    pub fn order(&self) -> u128 {
        let pow = |b: u128, e: usize| (0..e).fold(1u128, |acc, _| acc.saturating_mul(b));
        match self {
            RingExpr::Zmod(n) => *n as u128,
            RingExpr::Matrix(k, r) | RingExpr::Formal(k, r, _) => pow(r.order(), k * k),
            RingExpr::Upper(k, r) => pow(r.order(), k * (k + 1) / 2),
            RingExpr::GroupRing(r, g) => pow(r.order(), g.order().min(4096) as usize),
            RingExpr::Triv(r) => pow(r.order(), 2),
            RingExpr::Ks(r, _) => pow(r.order(), 4),
            RingExpr::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    /// Elaborates the expression into a ring, enforcing `caps` at every step.
    pub fn build(&self, caps: &Caps) -> Result<Ring> {
        match self {
            RingExpr::Zmod(n) => make_zmod(*n, caps),
            RingExpr::Matrix(k, r) => matrix_ring(&r.build(caps)?, *k, caps),
            RingExpr::Upper(k, r) => upper_triangular(&r.build(caps)?, *k, caps),
            RingExpr::GroupRing(r, g) => group_ring(&r.build(caps)?, &g.build(caps)?, caps),
            RingExpr::Triv(r) => trivial_extension(&r.build(caps)?, caps),
            RingExpr::Ks(r, s) => {
                let base = r.build(caps)?;
                let s = base.from_int(*s);
                generalized_matrix(&base, s, caps)
            }
            RingExpr::Formal(k, r, s) => {
                let base = r.build(caps)?;
                let s = base.from_int(*s);
                formal_matrix(&base, *k, s, caps)
            }
            RingExpr::Product(a, b) => direct_product(&a.build(caps)?, &b.build(caps)?, caps),
        }
    }

    /// The sub-expressions this ring is built from.
    pub fn children(&self) -> Vec<&RingExpr> {
        match self {
            RingExpr::Zmod(_) => vec![],
            RingExpr::Matrix(_, r)
            | RingExpr::Upper(_, r)
            | RingExpr::GroupRing(r, _)
            | RingExpr::Triv(r)
            | RingExpr::Ks(r, _)
            | RingExpr::Formal(_, r, _) => vec![r],
            RingExpr::Product(a, b) => vec![a, b],
        }
    }
}

impl std::str::FromStr for RingExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse(s)
    }
}
