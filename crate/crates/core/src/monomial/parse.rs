//! Hand-written recursive-descent parser for the ideal text format.
//!
//! ```text
//! input     := ring-decl ";" gens | gens
//! ring-decl := "ring:" ident ("," ident)*
//! gens      := monomial ("," monomial)*
//! monomial  := factor ("*" factor)* | "1" | "0"
//! factor    := ident ("^" positive-integer)?
//! ```
//!
//! A lone `1` is the unit ideal and is rejected; a lone `0` is the zero
//! polynomial and contributes no generator.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{MonomialIdeal, PolynomialRing};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.error(format!("expected `{c}`, found `{d}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        if start >= bytes.len() || !bytes[start].is_ascii_alphabetic() {
            return match self.src[start..].chars().next() {
                Some(c) => self.error(format!("expected a variable name, found `{c}`")),
                None => self.error("expected a variable name, found end of input"),
            };
        }
        let mut end = start + 1;
        while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
            end += 1;
        }
        self.pos = end;
        Ok((start, &self.src[start..end]))
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        self.pos = end;
        &self.src[start..end]
    }

    /// Looks ahead for `ring` `:` without consuming anything.
    fn at_ring_decl(&mut self) -> bool {
        let save = self.pos;
        let found = matches!(self.ident(), Ok((_, "ring"))) && self.peek() == Some(':');
        self.pos = save;
        found
    }
}

/// Variables seen so far: either a fixed declared ring or one that grows in
/// order of first occurrence.
enum Names {
    Declared(PolynomialRing),
    Inferred(Vec<String>),
}

impl Names {
    fn index(&mut self, name: &str) -> Result<usize> {
        match self {
            Names::Declared(ring) => ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string())),
            Names::Inferred(names) => Ok(match names.iter().position(|n| n == name) {
                Some(i) => i,
                None => {
                    names.push(name.to_string());
                    names.len() - 1
                }
            }),
        }
    }
}

/// Parses an ideal; see the module documentation for the grammar.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_with(text, None)
}

/// Parses generators inside a given ring. The text must not declare its own
/// ring.
pub fn parse_ideal_in(ring: &PolynomialRing, text: &str) -> Result<MonomialIdeal> {
    parse_with(text, Some(ring.clone()))
}

fn parse_with(text: &str, ring: Option<PolynomialRing>) -> Result<MonomialIdeal> {
    let mut p = Parser { src: text, pos: 0 };
    let mut names = match ring {
        Some(r) => {
            if p.at_ring_decl() {
                return p.error("a ring was already supplied");
            }
            Names::Declared(r)
        }
        None if p.at_ring_decl() => {
            p.ident()?;
            p.expect(':')?;
            let mut declared = Vec::new();
            loop {
                let (_, name) = p.ident()?;
                declared.push(name.to_string());
                if p.peek() == Some(',') {
                    p.pos += 1;
                } else {
                    break;
                }
            }
            p.expect(';')?;
            Names::Declared(PolynomialRing::new(declared)?)
        }
        None => Names::Inferred(Vec::new()),
    };

    // Monomials are collected as sparse (variable, exponent) lists because the
    // inferred ring keeps growing while we parse.
    let mut monomials: Vec<Vec<(usize, u32)>> = Vec::new();
    loop {
        match p.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = p.pos;
                match p.digits() {
                    "1" => return Err(Error::UnitIdeal),
                    "0" => {}
                    _ => {
                        p.pos = start;
                        return p.error("only the constants 0 and 1 may stand alone");
                    }
                }
            }
            _ => {
                let mut factors = Vec::new();
                loop {
                    let (_, name) = p.ident()?;
                    let var = names.index(name)?;
                    let mut exponent = 1u32;
                    if p.peek() == Some('^') {
                        p.pos += 1;
                        let at = {
                            p.skip_ws();
                            p.pos
                        };
                        if p.src[at..].starts_with('-') {
                            return Err(Error::NonPositiveExponent { position: at });
                        }
                        let digits = p.digits();
                        if digits.is_empty() {
                            p.pos = at;
                            return p.error("expected an exponent");
                        }
                        exponent = match digits.parse::<u32>() {
                            Ok(0) => return Err(Error::NonPositiveExponent { position: at }),
                            Ok(e) => e,
                            Err(_) => {
                                p.pos = at;
                                return p.error("exponent too large");
                            }
                        };
                    }
                    factors.push((var, exponent));
                    if p.peek() == Some('*') {
                        p.pos += 1;
                    } else {
                        break;
                    }
                }
                monomials.push(factors);
            }
        }
        match p.peek() {
            Some(',') => p.pos += 1,
            None => break,
            Some(c) => return p.error(format!("expected `,` or `*`, found `{c}`")),
        }
    }

    let ring = match names {
        Names::Declared(r) => r,
        Names::Inferred(v) => PolynomialRing::new(v)?,
    };
    let n = ring.n();
    let mut gens = Vec::with_capacity(monomials.len());
    for factors in monomials {
        let mut e = alloc::vec![0u32; n];
        for (var, k) in factors {
            e[var] = e[var]
                .checked_add(k)
                .ok_or(Error::Syntax { position: p.pos, message: "exponent too large".to_string() })?;
        }
        gens.push(e);
    }
    MonomialIdeal::new(ring, gens)
}
