//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' NAT)?
//! base   := IDENT | RATIONAL | '(' expr ')'
//! ```
//!
//! `RATIONAL` is `NAT` or `NAT '/' NAT`. Whitespace is insignificant and
//! juxtaposition (`2z1`) is rejected.

use std::sync::Arc;

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Nat(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, message: format!("unexpected character `{other}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        match self.peek() {
            Tok::Ident(_) | Tok::Nat(_) | Tok::LParen => self.syntax("implicit multiplication is not allowed; use `*`"),
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = match self.bump() {
            Tok::Nat(digits) => digits.parse::<u32>().map_err(|_| Error::BadExponent { pos })?,
            _ => return Err(Error::BadExponent { pos }),
        };
        if *self.peek() == Tok::Slash {
            return Err(Error::BadExponent { pos });
        }
        base.pow(e)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) => {
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if self.ring.param_index(&name).is_some() {
                    Polynomial::param(self.ring, &name)
                } else {
                    Err(Error::UndeclaredIdentifier { name, pos })
                }
            }
            Tok::Nat(digits) => {
                let num: BigInt = digits.parse().expect("lexed digits");
                let value = if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Nat(d) => {
                            let den: BigInt = d.parse().expect("lexed digits");
                            if den == BigInt::from(0) {
                                return Err(Error::Syntax { pos: dpos, message: "zero denominator".into() });
                            }
                            Rational::new(num, den)
                        }
                        _ => return Err(Error::Syntax { pos: dpos, message: "expected denominator".into() }),
                    }
                } else {
                    Rational::from_integer(num)
                };
                Ok(Polynomial::constant(self.ring, RatFunc::from_rational(value)))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump() != Tok::RParen {
                    return Err(Error::Syntax { pos: self.toks[self.at.saturating_sub(1)].1, message: "expected `)`".into() });
                }
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax { pos, message: "unexpected end of input".into() }),
            other => Err(Error::Syntax { pos, message: format!("unexpected token {other:?}") }),
        }
    }
}

/// Parses an expression into its expanded normal form in `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, ring };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax(format!("unexpected trailing input {:?}", p.peek()));
    }
    Ok(poly)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for (t, _) in lex(text)? {
        if let Tok::Ident(name) = t {
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::new(&["z1", "z2", "z3"], &["t"]).unwrap()
    }

    #[test]
    fn worked_family_has_five_terms() {
        let p = parse_polynomial("z1^2*z2^2 + z2^5 + z3^4 + t*z1*z2^2 + t^2*z1^2*z2^2", &ring()).unwrap();
        // z1^2 z2^2 carries coefficient 1 + t^2, so four ring monomials.
        assert_eq!(p.len(), 4);
        let expanded: usize = p.terms().values().map(|c| c.numer().len()).sum();
        assert_eq!(expanded, 5);
    }

    #[test]
    fn zero_and_identity() {
        assert!(parse_polynomial("0", &ring()).unwrap().is_zero());
        let p = parse_polynomial("(z1+z2)^2 - z1^2 - 2*z1*z2", &ring()).unwrap();
        assert_eq!(p, parse_polynomial("z2^2", &ring()).unwrap());
    }

    #[test]
    fn rationals_and_unary_minus() {
        let p = parse_polynomial("-3/4*z1 + (-z2)", &ring()).unwrap();
        assert_eq!(p.to_string(), "-3/4*z1 - z2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert!(matches!(parse_polynomial("z1 + w", &r), Err(Error::UndeclaredIdentifier { pos: 5, .. })));
        assert!(matches!(parse_polynomial("z1^-1", &r), Err(Error::BadExponent { pos: 3 })));
        assert!(matches!(parse_polynomial("z1^z2", &r), Err(Error::BadExponent { .. })));
        assert!(matches!(parse_polynomial("z1^1/2", &r), Err(Error::BadExponent { .. })));
        assert!(matches!(parse_polynomial("2z1", &r), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_polynomial("(z1 + z2", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("z1 $ z2", &r), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_polynomial("", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("t*z1 + z2^2 + t").unwrap(), vec!["t", "z1", "z2"]);
    }
}
