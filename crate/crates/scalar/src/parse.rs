//! Text syntax for scalars: integers, single-letter variables, `+ - * / ^`
//! with integer (possibly negative) exponents and parentheses.
//!
//! Every resource the input controls is bounded, so malformed or hostile
//! input produces an error rather than a panic or runaway allocation.

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::Laurent;
use crate::monomial::{var_index, Monomial};
use crate::ratfunc::RationalFunction;
use crate::ring::{Coefficient, Domain, FracCoefficient, Ring};

pub const MAX_INPUT_LEN: usize = 1 << 16;
pub const MAX_DEPTH: usize = 64;
pub const MAX_MONOMIAL_EXPONENT: i64 = 100_000;
pub const MAX_POLY_EXPONENT: i64 = 64;
pub const MAX_COEFFICIENT_BITS: u64 = 4096;
pub const MAX_TERMS: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input longer than {MAX_INPUT_LEN} bytes")]
    TooLong,
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected {found} at byte {pos}")]
    UnexpectedToken { found: String, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("nesting deeper than {MAX_DEPTH}")]
    TooDeep,
    #[error("exponent {0} out of range")]
    ExponentRange(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact in this ring")]
    InexactDivision,
    #[error("result exceeds size limits")]
    TooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    if src.len() > MAX_INPUT_LEN {
        return Err(ParseError::TooLong);
    }
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if (i - start) as u64 * 4 > MAX_COEFFICIENT_BITS + 4 {
                    return Err(ParseError::TooLarge);
                }
                let n = src[start..i].parse::<BigInt>().expect("digits");
                out.push((Tok::Num(n), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(ParseError::UnexpectedChar { ch, pos: i });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// A ring the parser can evaluate into.
pub trait ParseTarget: Ring {
    type Coeff: Coefficient;
    fn from_coefficient(c: Self::Coeff) -> Self;
    fn from_var(v: u8) -> Self;
    fn divide(&self, other: &Self) -> Result<Self, ParseError>;
    /// `None` when a negative power of a non-unit is requested.
    fn power(&self, e: i64) -> Option<Self>;
    fn is_monomial(&self) -> bool;
    fn within_limits(&self) -> bool;
}

fn laurent_within_limits<C: Coefficient>(p: &Laurent<C>) -> bool {
    p.num_terms() <= MAX_TERMS && p.terms().all(|(_, c)| c.bit_size() <= MAX_COEFFICIENT_BITS)
}

impl<C: Coefficient> ParseTarget for Laurent<C> {
    type Coeff = C;
    fn from_coefficient(c: C) -> Self {
        Laurent::constant(c)
    }
    fn from_var(v: u8) -> Self {
        Laurent::monomial(Monomial::var(v), C::one())
    }
    fn divide(&self, other: &Self) -> Result<Self, ParseError> {
        if other.is_zero() {
            return Err(ParseError::DivisionByZero);
        }
        self.exact_div(other).ok_or(ParseError::InexactDivision)
    }
    fn power(&self, e: i64) -> Option<Self> {
        self.pow_i(e)
    }
    fn is_monomial(&self) -> bool {
        self.num_terms() <= 1
    }
    fn within_limits(&self) -> bool {
        laurent_within_limits(self)
    }
}

impl<C: FracCoefficient> ParseTarget for RationalFunction<C> {
    type Coeff = C;
    fn from_coefficient(c: C) -> Self {
        RationalFunction::constant(c)
    }
    fn from_var(v: u8) -> Self {
        RationalFunction::from_laurent(Laurent::monomial(Monomial::var(v), C::one()))
    }
    fn divide(&self, other: &Self) -> Result<Self, ParseError> {
        crate::ring::Field::div(self, other).ok_or(ParseError::DivisionByZero)
    }
    fn power(&self, e: i64) -> Option<Self> {
        self.pow_i(e)
    }
    fn is_monomial(&self) -> bool {
        self.num().num_terms() <= 1 && self.den().num_terms() <= 1
    }
    fn within_limits(&self) -> bool {
        laurent_within_limits(self.num()) && laurent_within_limits(self.den())
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            Some((t, p)) => ParseError::UnexpectedToken {
                found: t.describe(),
                pos: *p,
            },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeep);
        }
        Ok(())
    }

    fn check<T: ParseTarget>(x: T) -> Result<T, ParseError> {
        if x.within_limits() {
            Ok(x)
        } else {
            Err(ParseError::TooLarge)
        }
    }

    fn expr<T: ParseTarget>(&mut self) -> Result<T, ParseError> {
        self.descend()?;
        let mut acc = self.term::<T>()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Self::check(acc.add(&self.term::<T>()?))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Self::check(acc.sub(&self.term::<T>()?))?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term<T: ParseTarget>(&mut self) -> Result<T, ParseError> {
        let mut acc = self.unary::<T>()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = Self::check(acc.mul(&self.unary::<T>()?))?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = Self::check(acc.divide(&self.unary::<T>()?)?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary<T: ParseTarget>(&mut self) -> Result<T, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.descend()?;
                let x = self.unary::<T>()?.neg();
                self.depth -= 1;
                Ok(x)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.descend()?;
                let x = self.unary::<T>()?;
                self.depth -= 1;
                Ok(x)
            }
            _ => self.power::<T>(),
        }
    }

    fn power<T: ParseTarget>(&mut self) -> Result<T, ParseError> {
        let base = self.atom::<T>()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        let limit = if base.is_monomial() { MAX_MONOMIAL_EXPONENT } else { MAX_POLY_EXPONENT };
        if e.abs() > limit {
            return Err(ParseError::ExponentRange(e));
        }
        if base.is_zero() && e < 0 {
            return Err(ParseError::DivisionByZero);
        }
        if base.is_monomial() {
            return Self::check(base.power(e).ok_or(ParseError::InexactDivision)?);
        }
        // Multiply step by step so that size limits trip before blow-up.
        let unit = base.power(e.signum()).ok_or(ParseError::InexactDivision)?;
        let mut acc = T::one();
        for _ in 0..e.abs() {
            acc = Self::check(acc.mul(&unit))?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = match self.next() {
            Some(Tok::Num(n)) => n,
            _ => {
                self.pos -= 1;
                return Err(self.unexpected());
            }
        };
        if paren && self.next() != Some(Tok::RParen) {
            self.pos -= 1;
            return Err(self.unexpected());
        }
        let e = i64::try_from(&n).map_err(|_| ParseError::ExponentRange(i64::MAX))?;
        Ok(if neg { -e } else { e })
    }

    fn atom<T: ParseTarget>(&mut self) -> Result<T, ParseError> {
        match self.next() {
            Some(Tok::Num(n)) => Self::check(T::from_coefficient(T::Coeff::from_bigint(&n))),
            Some(Tok::Ident(name)) => {
                if let Some(c) = T::Coeff::from_symbol(&name) {
                    return Ok(T::from_coefficient(c));
                }
                let mut chars = name.chars();
                match (chars.next().and_then(var_index), chars.next()) {
                    (Some(v), None) => Ok(T::from_var(v)),
                    _ => Err(ParseError::UnknownIdentifier(name)),
                }
            }
            Some(Tok::LParen) => {
                let x = self.expr::<T>()?;
                if self.next() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return Err(self.unexpected());
                }
                Ok(x)
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected())
            }
        }
    }
}

/// Parse any [`ParseTarget`].
pub fn parse<T: ParseTarget>(src: &str) -> Result<T, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        depth: 0,
    };
    let x = p.expr::<T>()?;
    if p.pos != toks.len() {
        return Err(p.unexpected());
    }
    Ok(x)
}

/// Parse a Laurent polynomial; division must be exact.
pub fn parse_laurent<C: Coefficient>(src: &str) -> Result<Laurent<C>, ParseError> {
    parse(src)
}

/// Parse a rational function.
pub fn parse_ratfunc<C: FracCoefficient>(src: &str) -> Result<RationalFunction<C>, ParseError> {
    parse(src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclotomic, Integer, Zp};

    type Z = Laurent<Integer>;

    #[test]
    fn precedence_and_exponents() {
        let x: Z = parse_laurent("-q^2 + 2*q^-1 - q^(-3)").unwrap();
        assert_eq!(x.to_string(), "-q^2 + 2*q^-1 - q^-3");
        let y: Z = parse_laurent("(t + 1)^2 - 2*t").unwrap();
        assert_eq!(y.to_string(), "t^2 + 1");
    }

    #[test]
    fn cyclotomic_symbol() {
        let x: Laurent<Cyclotomic<3>> = parse_laurent("w^2*(q^-1 - q^3)").unwrap();
        assert_eq!(x.to_string(), "(w + 1)*q^3 + (-w - 1)*q^-1");
        let back: Laurent<Cyclotomic<3>> = parse_laurent(&x.to_string()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn errors_not_panics() {
        assert_eq!(parse_laurent::<Integer>("q/2"), Err(ParseError::InexactDivision));
        assert_eq!(parse_laurent::<Integer>("1/0"), Err(ParseError::DivisionByZero));
        assert!(matches!(parse_laurent::<Integer>("(q+1)^100"), Err(ParseError::ExponentRange(100))));
        assert!(matches!(parse_laurent::<Integer>("(1+q)^-1"), Err(ParseError::InexactDivision)));
        assert!(matches!(parse_laurent::<Integer>("xy"), Err(ParseError::UnknownIdentifier(_))));
        assert!(matches!(parse_laurent::<Integer>("q +"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_laurent::<Integer>("q ) "), Err(ParseError::UnexpectedToken { .. })));
        assert!(matches!(parse_laurent::<Integer>("q $"), Err(ParseError::UnexpectedChar { .. })));
        let deep = "(".repeat(200) + "q" + &")".repeat(200);
        assert_eq!(parse_laurent::<Integer>(&deep), Err(ParseError::TooDeep));
        assert_eq!(parse_ratfunc::<Zp<2>>("1/(1+1)"), Err(ParseError::DivisionByZero));
    }
}
