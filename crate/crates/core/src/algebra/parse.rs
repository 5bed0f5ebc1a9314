//! Text grammar for polynomials and rational functions.
//!
//! Accepts sums of products of integer literals, variables, powers with a
//! non-negative integer exponent, parenthesized subexpressions and `/`.
//! Whitespace (including newlines) is ignored. The canonical term syntax
//! `coef*var^exp*...` with `num/den` coefficients is a special case.

use num_bigint::BigInt;

use super::poly::{MultiPoly, Vars};
use super::ratfunc::RatFunc;
use super::ring::{Integers, Rationals};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits parse");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a Vars,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc<Integers>> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc<Integers>> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let rhs = self.factor()?;
                acc = match acc.div(&rhs) {
                    Ok(v) => v,
                    Err(_) => return self.err("division by zero"),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc<Integers>> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = match n.try_into() {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    Ok(base.pow(e))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFunc<Integers>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::from_poly(MultiPoly::constant(&Integers, self.vars, n)))
            }
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(RatFunc::from_poly(MultiPoly::var(&Integers, self.vars, i)))
                }
                None => self.err(format!("unknown variable {name}")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a rational function with integer coefficients.
pub fn parse_ratfunc(src: &str, vars: &Vars) -> Result<RatFunc<Integers>> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, vars, end: src.len() };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Parse a polynomial with integer coefficients.
pub fn parse_poly_z(src: &str, vars: &Vars) -> Result<MultiPoly<Integers>> {
    let r = parse_ratfunc(src, vars)?;
    r.as_poly().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expression is not a polynomial over the integers".into(),
    })
}

/// Parse a polynomial with rational coefficients.
pub fn parse_poly_q(src: &str, vars: &Vars) -> Result<MultiPoly<Rationals>> {
    let (num, den) = parse_ratfunc(src, vars)?.into_parts();
    num.to_rationals().div_exact(&den.to_rationals()).ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expression is not a polynomial".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::vars;

    #[test]
    fn canonical_grammar() {
        let v = vars(&["y0", "y1"]);
        let p = parse_poly_z("3*y0^2*y1 - 2*y1 + 7", &v).unwrap();
        assert_eq!(p.to_string(), "3*y0^2*y1 - 2*y1 + 7");
        let q = parse_poly_q("1/2*y0 - 3/4", &v).unwrap();
        assert_eq!(q.to_string(), "1/2*y0 - 3/4");
    }

    #[test]
    fn display_round_trip() {
        let v = vars(&["a", "b", "c"]);
        let p = parse_poly_z("(a + 2*b - c)^3 * (a - 1)", &v).unwrap();
        assert_eq!(parse_poly_z(&p.to_string(), &v).unwrap(), p);
    }

    #[test]
    fn rational_function_with_parentheses() {
        let v = vars(&["a", "X"]);
        let r = parse_ratfunc("(a^2 - 1)/(a - 1)*X + 1", &v).unwrap();
        assert_eq!(r.as_poly().unwrap().to_string(), "a*X + X + 1");
    }

    #[test]
    fn errors() {
        let v = vars(&["x"]);
        assert!(matches!(parse_poly_z("x + y", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly_z("x +", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly_z("x / 2", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly_z("(x", &v), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly_z("x $", &v), Err(Error::Parse { pos: 2, .. })));
    }
}
