//! Parser for the canonical text form of polynomials and rational functions.
//!
//! Grammar (whitespace-insensitive): `+ - * / ^` with explicit `*`, integer
//! literals, exponents are integers, variables are identifiers. The printer
//! in `MultiPoly`/`RatFun` emits a subset of this grammar, and
//! print -> parse -> print is the identity.

use crate::error::Error;
use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::ratfun::RatFun;
use crate::traits::Ring;
use crate::vars::var;
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let mut t = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        t.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(t));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut t = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        t.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(t));
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {:?}, got {:?}", t, got))),
        }
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.next();
            negate = true;
        } else if let Some(Tok::Plus) = self.peek() {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    let fi = f
                        .inv()
                        .ok_or_else(|| Error::Parse("division by zero".into()))?;
                    acc = acc.mul(&fi);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFun> {
        let mut negate = false;
        while let Some(Tok::Minus) = self.peek() {
            self.next();
            negate = !negate;
        }
        let base = self.atom()?;
        let mut out = base;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            let mut eneg = false;
            if let Some(Tok::Minus) = self.peek() {
                self.next();
                eneg = true;
            }
            match self.next() {
                Some(Tok::Int(d)) => {
                    let e: i64 = d
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{d}`")))?;
                    let e = if eneg { -e } else { e };
                    out = out.pow(e);
                }
                got => return Err(Error::Parse(format!("expected exponent, got {:?}", got))),
            }
        }
        if negate {
            out = out.neg();
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.next() {
            Some(Tok::Int(d)) => {
                let r: Rat = d.parse()?;
                Ok(RatFun::constant(r))
            }
            Some(Tok::Ident(name)) => Ok(RatFun::variable(var(&name))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("unexpected token {:?}", got))),
        }
    }
}

pub fn parse_ratfun(s: &str) -> Result<RatFun> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing tokens at position {} in `{s}`",
            p.pos
        )));
    }
    Ok(e)
}

pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let rf = parse_ratfun(s)?;
    rf.as_poly()
        .ok_or_else(|| Error::Parse(format!("`{s}` is not a polynomial")))
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in [
            "0",
            "r",
            "-r + s",
            "3*r^2*s - 1/2*s + 7",
            "(r^2 - 2*s) / (3*r + 1)",
            "1/2*r - 1/2*s",
        ] {
            let f = parse_ratfun(s).unwrap();
            let printed = f.to_string();
            let reparsed = parse_ratfun(&printed).unwrap();
            assert_eq!(f, reparsed, "round trip failed for `{s}`");
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn arithmetic_normalizes() {
        let f = parse_ratfun("(r^2 - s^2)/(r + s)").unwrap();
        assert_eq!(f.to_string(), "r - s");
        let g = parse_ratfun("-r*(27*s^2+36*r*s-s-16*r^3+8*r^2-r)").unwrap();
        assert!(g.is_poly());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfun("r +").is_err());
        assert!(parse_ratfun("(r").is_err());
        assert!(parse_ratfun("r ? s").is_err());
        assert!(parse_poly("1/r").is_err());
    }

    #[test]
    fn negative_exponents() {
        let f = parse_ratfun("r^-2").unwrap();
        assert_eq!(f, parse_ratfun("1/r^2").unwrap());
    }
}
