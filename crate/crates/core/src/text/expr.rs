//! Expressions over `z` and `D`: integers, `+ - * / ^` and parentheses.

use std::sync::Arc;

use num_bigint::BigInt;

use super::ParseError;
use crate::field::{RatFun, Rational, RingSpec};
use crate::ore::OrePoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Z,
    D,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("`{v}`"),
        Tok::Z => "`z`".into(),
        Tok::D => "`D`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Token with its 1-based column.
type Spanned = (Tok, usize);

fn lex(src: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "z" => Tok::Z,
                "D" => Tok::D,
                _ => return Err(ParseError::new(line, col, format!("unexpected token `{word}`"))),
            };
            out.push((tok, col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::new(line, col, format!("unexpected character `{c}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, col0 + chars.len()));
    Ok(out)
}

/// Values are computed while parsing; without a ring, `D` is rejected.
struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    ring: Option<&'a Arc<RingSpec>>,
}

#[derive(Debug, Clone)]
enum Val {
    Scalar(RatFun),
    Ore(OrePoly),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: String) -> Result<T, ParseError> {
        Err(ParseError::new(self.line, self.col(), msg))
    }

    fn lift(&self, v: Val) -> OrePoly {
        match v {
            Val::Ore(p) => p,
            Val::Scalar(c) => OrePoly::constant(c, self.ring.expect("ore values need a ring")),
        }
    }

    fn add(&self, a: Val, b: Val, negate: bool) -> Val {
        match (a, b) {
            (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(if negate { &x - &y } else { &x + &y }),
            (a, b) => {
                let (x, y) = (self.lift(a), self.lift(b));
                Val::Ore(if negate { &x - &y } else { &x + &y })
            }
        }
    }

    fn mul(&self, a: Val, b: Val) -> Val {
        match (a, b) {
            (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(&x * &y),
            (a, b) => Val::Ore(&self.lift(a) * &self.lift(b)),
        }
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            acc = self.add(acc, rhs, negate);
        }
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.mul(acc, rhs);
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.col();
                    let rhs = self.unary()?;
                    let divisor = match rhs {
                        Val::Scalar(c) => c,
                        Val::Ore(p) if p.deg().unwrap_or(0) == 0 => p.coeff(0),
                        Val::Ore(_) => {
                            return Err(ParseError::new(
                                self.line,
                                col,
                                "division by a polynomial in D is not supported".into(),
                            ))
                        }
                    };
                    let Ok(inv) = divisor.inv() else {
                        return Err(ParseError::new(self.line, col, "division by zero".into()));
                    };
                    acc = self.mul(acc, Val::Scalar(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Val, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                let v = self.unary()?;
                Ok(self.mul(Val::Scalar(RatFun::from_i64(-1)), v))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Val, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let Tok::Int(e) = self.peek().clone() else {
            return self.err(format!(
                "expected an integer exponent, found {}",
                describe(self.peek())
            ));
        };
        let Ok(e) = u32::try_from(e) else {
            return self.err("exponent too large".into());
        };
        self.bump();
        let mut acc = match &base {
            Val::Scalar(_) => Val::Scalar(RatFun::one()),
            Val::Ore(p) => Val::Ore(OrePoly::one(p.ring())),
        };
        for _ in 0..e {
            acc = self.mul(acc, base.clone());
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Val, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Val::Scalar(RatFun::constant(Rational::from_integer(v))))
            }
            Tok::Z => {
                self.bump();
                Ok(Val::Scalar(RatFun::z()))
            }
            Tok::D => match self.ring {
                Some(r) => {
                    self.bump();
                    Ok(Val::Ore(OrePoly::d(r)))
                }
                None => self.err("`D` is not allowed in a coefficient".into()),
            },
            Tok::LParen => {
                self.bump();
                let v = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err(format!("expected `)`, found {}", describe(self.peek())));
                }
                self.bump();
                Ok(v)
            }
            t => self.err(format!("unexpected {}", describe(&t))),
        }
    }

    fn finish(&mut self) -> Result<Val, ParseError> {
        if *self.peek() == Tok::End {
            return self.err("expected an expression".into());
        }
        let v = self.expr()?;
        if *self.peek() != Tok::End {
            return self.err(format!("unexpected {}", describe(self.peek())));
        }
        Ok(v)
    }
}

/// Parses a rational function in `z`. `line` and `col` locate `src` in its
/// document for error messages.
pub fn parse_ratfun_at(src: &str, line: usize, col: usize) -> Result<RatFun, ParseError> {
    let mut p = Parser {
        toks: lex(src, line, col)?,
        pos: 0,
        line,
        ring: None,
    };
    match p.finish()? {
        Val::Scalar(c) => Ok(c),
        Val::Ore(_) => unreachable!("no ring, so no D"),
    }
}

pub fn parse_orepoly_at(
    src: &str,
    ring: &Arc<RingSpec>,
    line: usize,
    col: usize,
) -> Result<OrePoly, ParseError> {
    let mut p = Parser {
        toks: lex(src, line, col)?,
        pos: 0,
        line,
        ring: Some(ring),
    };
    let v = p.finish()?;
    Ok(p.lift(v))
}

/// A rational number such as `3`, `-1/2`.
pub fn parse_rational_at(src: &str, line: usize, col: usize) -> Result<Rational, ParseError> {
    let v = parse_ratfun_at(src, line, col)?;
    v.as_constant()
        .ok_or_else(|| ParseError::new(line, col, format!("expected a rational number, found `{src}`")))
}

