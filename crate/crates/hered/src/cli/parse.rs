//! Input grammars: polynomials and field specifications.
//!
//! Polynomial grammar: integer/rational literals, `+`, `-`, `*`, `^`,
//! parentheses, the variable `x`, and the field generator `a`. Implicit
//! multiplication is a syntax error. Field grammar: `Q` or `Q[a]/(m)` with
//! `m` a monic integer polynomial in `a`. Syntax errors carry 1-based byte
//! offsets.

use crate::arith::{int, BigRational};
use crate::error::{Error, Result};
use crate::numfield::{FieldOps, FieldRef, NFPoly, NumberField};
use crate::poly::QPoly;
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    VarX,
    GenA,
}

fn err_at(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i + 1; // 1-based
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                out.push((pos, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((pos, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                i += 1;
            }
            'x' => {
                out.push((pos, Token::VarX));
                i += 1;
            }
            'a' => {
                out.push((pos, Token::GenA));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num = BigInt::parse_bytes(&bytes[start..i], 10).unwrap();
                // rational literal: digits '/' digits
                if i < bytes.len() && bytes[i] == b'/' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit()
                {
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den = BigInt::parse_bytes(&bytes[dstart..i], 10).unwrap();
                    if den == int(0) {
                        return Err(err_at(dstart + 1, "zero denominator in literal"));
                    }
                    out.push((start + 1, Token::Number(BigRational::new(num, den))));
                } else {
                    out.push((start + 1, Token::Number(BigRational::from_integer(num))));
                }
            }
            other => {
                return Err(err_at(pos, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Number(BigRational),
    VarX(usize),
    GenA(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    text_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.text_len + 1
    }

    fn parse_expr(&mut self) -> Result<Ast> {
        let mut acc = self.parse_term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = Ast::Add(Box::new(acc), Box::new(rhs));
                }
                Token::Minus => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = Ast::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Ast> {
        let mut acc = self.parse_unary()?;
        while let Some((_, Token::Star)) = self.peek() {
            self.next();
            let rhs = self.parse_unary()?;
            acc = Ast::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Ast> {
        if let Some((_, Token::Minus)) = self.peek() {
            self.next();
            let inner = self.parse_unary()?;
            return Ok(Ast::Neg(Box::new(inner)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Ast> {
        let base = self.parse_primary()?;
        if let Some((_, Token::Caret)) = self.peek() {
            self.next();
            let (pos, tok) = self
                .next()
                .ok_or_else(|| err_at(self.end_pos(), "expected exponent after '^'"))?;
            match tok {
                Token::Number(q) if q.is_integer() && !q.numer().sign().eq(&num_bigint::Sign::Minus) => {
                    let e = num_traits::ToPrimitive::to_u32(q.numer()).ok_or_else(|| {
                        err_at(pos, "exponent too large")
                    })?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                _ => Err(err_at(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_primary(&mut self) -> Result<Ast> {
        let (pos, tok) = self
            .next()
            .ok_or_else(|| err_at(self.end_pos(), "unexpected end of input"))?;
        let node = match tok {
            Token::Number(q) => Ast::Number(q),
            Token::VarX => Ast::VarX(pos),
            Token::GenA => Ast::GenA(pos),
            Token::LParen => {
                let inner = self.parse_expr()?;
                match self.next() {
                    Some((_, Token::RParen)) => inner,
                    Some((p, _)) => return Err(err_at(p, "expected ')'")),
                    None => return Err(err_at(self.end_pos(), "unclosed '('")),
                }
            }
            _ => return Err(err_at(pos, "expected a number, variable, or '('")),
        };
        // implicit multiplication is disallowed: a primary followed directly
        // by another primary-start token is an error
        if let Some((p, t)) = self.peek() {
            let starts_primary = matches!(
                t,
                Token::Number(_) | Token::VarX | Token::GenA | Token::LParen
            );
            if starts_primary {
                return Err(err_at(
                    *p,
                    "implicit multiplication is not allowed; use '*'",
                ));
            }
        }
        Ok(node)
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(err_at(1, "empty input"));
    }
    let text_len = text.len();
    let mut parser = Parser {
        tokens,
        pos: 0,
        text_len,
    };
    let ast = parser.parse_expr()?;
    if let Some((p, _)) = parser.peek() {
        return Err(err_at(*p, "unexpected trailing input"));
    }
    Ok(ast)
}

/// Parse a polynomial in `x` (with optional generator `a`) over a field.
pub fn parse_poly(text: &str, field: &FieldRef) -> Result<NFPoly> {
    let ast = parse_ast(text)?;
    eval_over_field(&ast, field)
}

/// Parse a field element: an expression in `a` alone.
pub fn parse_element(text: &str, field: &FieldRef) -> Result<crate::numfield::NFElement> {
    let poly = parse_poly(text, field)?;
    if poly.is_zero() {
        return Ok(FieldOps::zero(field));
    }
    if !poly.is_constant() {
        return Err(Error::domain(
            "expected a field element, found the variable x",
        ));
    }
    Ok(poly.constant_term())
}

fn eval_over_field(ast: &Ast, field: &FieldRef) -> Result<NFPoly> {
    Ok(match ast {
        Ast::Number(q) => NFPoly::constant(field.from_rational(q.clone())),
        Ast::VarX(_) => field.var_poly(),
        Ast::GenA(pos) => {
            if field.is_rationals() {
                return Err(err_at(
                    *pos,
                    "coefficient outside field: 'a' has no meaning over Q",
                ));
            }
            NFPoly::constant(field.generator())
        }
        Ast::Neg(inner) => eval_over_field(inner, field)?.neg(),
        Ast::Add(l, r) => eval_over_field(l, field)?.add(&eval_over_field(r, field)?),
        Ast::Sub(l, r) => eval_over_field(l, field)?.sub(&eval_over_field(r, field)?),
        Ast::Mul(l, r) => eval_over_field(l, field)?.mul(&eval_over_field(r, field)?),
        Ast::Pow(base, e) => {
            let b = eval_over_field(base, field)?;
            if b.is_zero() && *e == 0 {
                NFPoly::constant(FieldOps::one(field))
            } else if b.is_zero() {
                NFPoly::zero()
            } else {
                b.pow(*e)
            }
        }
    })
}

/// Evaluate an expression in `a` as a rational polynomial (for field
/// moduli). `x` is rejected.
fn eval_in_a(ast: &Ast) -> Result<QPoly> {
    Ok(match ast {
        Ast::Number(q) => QPoly::constant(q.clone()),
        Ast::VarX(pos) => {
            return Err(err_at(*pos, "field modulus must be a polynomial in 'a'"))
        }
        Ast::GenA(_) => QPoly::from_int_coeffs(&[0, 1]),
        Ast::Neg(inner) => eval_in_a(inner)?.neg(),
        Ast::Add(l, r) => eval_in_a(l)?.add(&eval_in_a(r)?),
        Ast::Sub(l, r) => eval_in_a(l)?.sub(&eval_in_a(r)?),
        Ast::Mul(l, r) => eval_in_a(l)?.mul(&eval_in_a(r)?),
        Ast::Pow(base, e) => {
            let b = eval_in_a(base)?;
            if b.is_zero() && *e == 0 {
                QPoly::constant(<BigRational as One>::one())
            } else if b.is_zero() {
                QPoly::zero()
            } else {
                b.pow(*e)
            }
        }
    })
}

/// Parse a field specification: `Q` or `Q[a]/(m)`.
///
/// `m` must be monic with integer coefficients and is certified irreducible
/// on construction.
pub fn parse_field(text: &str) -> Result<FieldRef> {
    let trimmed = text.trim();
    if trimmed == "Q" {
        return Ok(NumberField::rationals());
    }
    let rest = trimmed
        .strip_prefix("Q[a]/(")
        .ok_or_else(|| err_at(1, "field must be 'Q' or 'Q[a]/(m)'"))?;
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| err_at(trimmed.len(), "field specification must end with ')'"))?;
    let ast = parse_ast(body)?;
    let modulus = eval_in_a(&ast)?;
    if modulus.is_zero() || modulus.is_constant() {
        return Err(Error::domain("field modulus must have positive degree"));
    }
    if !modulus.is_monic() {
        return Err(Error::domain("field modulus must be monic in 'a'"));
    }
    if !modulus.is_integral() {
        return Err(Error::domain("field modulus must have integer coefficients"));
    }
    NumberField::new(modulus, canonical_field_label(trimmed))
}

fn canonical_field_label(spec: &str) -> String {
    spec.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Canonical field string used in cache keys and reports.
pub fn field_to_string(field: &FieldRef) -> String {
    if field.is_rationals() {
        "Q".to_string()
    } else {
        format!("Q[a]/({})", field.modulus().to_canonical_string("a"))
    }
}
