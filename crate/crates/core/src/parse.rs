//! Text format for polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! POLY   := [SIGN] TERM (SIGN TERM)*
//! SIGN   := '+' | '-'
//! TERM   := COEFF ('*' FACTOR)*  |  FACTOR ('*' FACTOR)*
//! COEFF  := INT ['/' INT]                (the '/' form only over Q)
//! FACTOR := VAR ['^' INT] | 't' ['^' INT] | '(' POLY ')' ['^' INT]
//! VAR    := 'x' INT
//! ```
//!
//! `t` is the deformation parameter and is only legal in family
//! templates; everywhere else it is rejected with its position. Parsing
//! goes through a small AST so templates and plain polynomials share one
//! grammar, then the AST is evaluated into a [`Polynomial`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Polynomial, RingDescriptor};

#[derive(Debug)]
pub(crate) struct Ast {
    terms: Vec<(bool, Term)>, // (negated, term)
}

#[derive(Debug)]
struct Term {
    coeff: Option<(BigUint, Option<BigUint>, usize)>, // (num, den, pos)
    factors: Vec<Factor>,
}

#[derive(Debug)]
enum Factor {
    Var { index: usize, exp: u32, pos: usize },
    Param { exp: u32, pos: usize },
    Group { ast: Ast, exp: u32 },
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn fail<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self, what: &str) -> Result<(BigUint, usize)> {
        let start = match self.peek() {
            Some(b) if b.is_ascii_digit() => self.pos,
            _ => return self.fail(self.pos, format!("expected {what}")),
        };
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok((digits.parse::<BigUint>().expect("digits"), start))
    }

    fn parse_small_uint(&mut self, what: &str) -> Result<(u32, usize)> {
        let (n, pos) = self.parse_uint(what)?;
        u32::try_from(&n)
            .map_err(|_| Error::Parse {
                pos,
                msg: format!("{what} {n} is too large"),
            })
            .map(|v| (v, pos))
    }

    fn parse_poly(&mut self) -> Result<Ast> {
        let mut terms = Vec::new();
        let mut negated = self.eat(b'-');
        if !negated {
            self.eat(b'+');
        }
        loop {
            terms.push((negated, self.parse_term()?));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negated = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negated = true;
                }
                _ => break,
            }
        }
        Ok(Ast { terms })
    }

    fn parse_term(&mut self) -> Result<Term> {
        let mut coeff = None;
        let mut factors = Vec::new();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let (num, pos) = self.parse_uint("integer")?;
                let den = if self.eat(b'/') {
                    let (d, dpos) = self.parse_uint("denominator")?;
                    if d == BigUint::ZERO {
                        return self.fail(dpos, "zero denominator");
                    }
                    Some(d)
                } else {
                    None
                };
                coeff = Some((num, den, pos));
            }
            _ => factors.push(self.parse_factor()?),
        }
        while self.eat(b'*') {
            factors.push(self.parse_factor()?);
        }
        Ok(Term { coeff, factors })
    }

    fn parse_factor(&mut self) -> Result<Factor> {
        let pos = self.pos;
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let (index, ipos) = self.parse_uint("variable index after 'x'")?;
                let index = usize::try_from(&index).map_err(|_| Error::Parse {
                    pos: ipos,
                    msg: format!("variable index {index} is too large"),
                })?;
                let exp = self.parse_exponent()?;
                Ok(Factor::Var { index, exp, pos })
            }
            Some(b't') => {
                self.pos += 1;
                let exp = self.parse_exponent()?;
                Ok(Factor::Param { exp, pos })
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_poly()?;
                if !self.eat(b')') {
                    return self.fail(self.pos, "expected ')'");
                }
                let exp = self.parse_exponent()?;
                Ok(Factor::Group { ast: inner, exp })
            }
            Some(b) => self.fail(
                self.pos,
                format!("expected a variable, 't', or '(' but found {:?}", b as char),
            ),
            None => self.fail(self.pos, "unexpected end of input"),
        }
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            let (e, _) = self.parse_small_uint("exponent")?;
            Ok(e)
        } else {
            Ok(1)
        }
    }
}

pub(crate) fn parse_ast(text: &str) -> Result<Ast> {
    let mut parser = Parser::new(text);
    if parser.peek().is_none() {
        return parser.fail(0, "empty input");
    }
    let ast = parser.parse_poly()?;
    if let Some(b) = parser.peek() {
        return parser.fail(parser.pos, format!("unexpected {:?}", b as char));
    }
    Ok(ast)
}

/// Evaluates an AST into a polynomial. `param` supplies the value of the
/// deformation symbol `t`; `None` rejects any use of `t`.
pub(crate) fn eval_ast<D: Domain>(
    ast: &Ast,
    ring: &RingDescriptor<D>,
    param: Option<&Polynomial<D>>,
) -> Result<Polynomial<D>> {
    let domain = ring.domain().clone();
    let mut out = ring.zero();
    for (negated, term) in &ast.terms {
        let mut acc = match &term.coeff {
            Some((num, den, _pos)) => {
                let num = BigInt::from(num.clone());
                let den = den
                    .as_ref()
                    .map(|d| BigInt::from(d.clone()))
                    .unwrap_or_else(BigInt::one);
                ring.constant(domain.from_ratio(&num, &den)?)
            }
            None => ring.constant(domain.one()),
        };
        for factor in &term.factors {
            let value = match factor {
                Factor::Var { index, exp, pos } => {
                    if *index >= ring.num_vars() {
                        return Err(Error::VariableOutOfRange {
                            index: *index,
                            num_vars: ring.num_vars(),
                            pos: *pos,
                        });
                    }
                    ring.monomial(Monomial::variable(ring.num_vars(), *index).pow(*exp))
                }
                Factor::Param { exp, pos } => match param {
                    Some(t) => t.pow(*exp),
                    None => {
                        return Err(Error::Parse {
                            pos: *pos,
                            msg: "parameter 't' is only allowed in family templates".into(),
                        })
                    }
                },
                Factor::Group { ast, exp } => eval_ast(ast, ring, param)?.pow(*exp),
            };
            acc = acc.mul(&value)?;
        }
        if *negated {
            acc = acc.neg();
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Parses a polynomial in the ring's variables. The symbol `t` is
/// rejected here; use the degeneration module for families.
pub fn parse_polynomial<D: Domain>(text: &str, ring: &RingDescriptor<D>) -> Result<Polynomial<D>> {
    eval_ast(&parse_ast(text)?, ring, None)
}

/// Smallest variable count that makes every `x<i>` in the text legal.
/// Returns 0 for text that mentions no variables.
pub fn infer_num_vars(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut max_index: Option<usize> = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while bytes.get(end).is_some_and(|b| b.is_ascii_digit()) {
                end += 1;
            }
            if end > start {
                if let Ok(idx) = std::str::from_utf8(&bytes[start..end]).unwrap().parse::<usize>() {
                    max_index = Some(max_index.map_or(idx, |m| m.max(idx)));
                }
            }
            i = end;
        } else {
            i += 1;
        }
    }
    max_index.map_or(0, |m| m + 1)
}

/// Parses an exact rational like `-3/4`, `2`, or `1/2`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let trimmed = text.trim();
    let (neg, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidInput(format!(
                "'{trimmed}' is not a rational number"
            )));
        }
        Ok(s.parse().expect("digits"))
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::ZERO {
                return Err(Error::InvalidInput(format!("'{trimmed}' has a zero denominator")));
            }
            (parse_int(n)?, den)
        }
        None => (parse_int(body)?, BigInt::one()),
    };
    let num = if neg { -num } else { num };
    Ok(BigRational::new(num, den))
}
