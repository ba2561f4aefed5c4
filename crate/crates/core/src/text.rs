//! Parser for the textual expression format used by fixtures, bindings and
//! reports.
//!
//! The grammar accepts everything the renderers emit: integers, parameter
//! names (`p`, `q'`, `qbar`, ...), generator symbols (`A`..`D`, `x`, `y`,
//! `dx`, `dy`), `+ - * /`, juxtaposition as multiplication, parentheses and
//! integer powers written `p^2`, `p^-1` or `p^{-1}`. Scalars commute with
//! everything; generators keep their order.

use num_bigint::BigInt;

use crate::coefficients::{Coefficient, CoefficientError, Parameter};
use crate::freealg::{Generator, NCPoly};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '′' || c == '\u{0304}' || c == '_'
}

fn lex(s: &str) -> Result<Vec<Token>, CoefficientError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Num(s[i..end].parse().expect("digits")));
        } else if c.is_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if is_ident_continue(d) {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Ident(s[i..end].to_string()));
        } else if "+-*/^(){}".contains(c) {
            out.push(Token::Sym(c));
            chars.next();
        } else if c == '−' {
            out.push(Token::Sym('-'));
            chars.next();
        } else {
            return Err(CoefficientError::Parse(format!(
                "unexpected character `{c}`"
            )));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn perr(msg: impl Into<String>) -> CoefficientError {
    CoefficientError::Parse(msg.into())
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CoefficientError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<NCPoly, CoefficientError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                // `a + -b` is how negative terms are rendered
                let t = if self.eat('-') {
                    self.term()?.neg()
                } else {
                    self.term()?
                };
                acc = acc.add(&t);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::Sym('('))
        )
    }

    fn term(&mut self) -> Result<NCPoly, CoefficientError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul_free(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                let d = d
                    .as_scalar()
                    .ok_or_else(|| perr("division by a non-scalar"))?;
                acc = acc.scale(&d.inv()?);
            } else if self.starts_atom() {
                acc = acc.mul_free(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NCPoly, CoefficientError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<NCPoly, CoefficientError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let negative = self.eat('-');
        let n = match self.peek() {
            Some(Token::Num(n)) => {
                let n: i32 = n.try_into().map_err(|_| perr("exponent too large"))?;
                self.pos += 1;
                n
            }
            _ => return Err(perr("expected an integer exponent")),
        };
        if let Some(c) = close {
            self.expect(c)?;
        }
        let n = if negative { -n } else { n };
        if n < 0 {
            let s = base
                .as_scalar()
                .ok_or_else(|| perr("negative power of a non-scalar"))?;
            return Ok(NCPoly::scalar(s.pow(n)?));
        }
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = acc.mul_free(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<NCPoly, CoefficientError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(NCPoly::scalar(Coefficient::from_bigint(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(g) = Generator::from_symbol(&name) {
                    Ok(NCPoly::letter(g))
                } else {
                    Ok(NCPoly::scalar(Coefficient::param(Parameter::from_name(
                        &name,
                    )?)))
                }
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            other => Err(perr(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an expression over generators and parameters (free algebra).
pub fn parse_ncpoly(s: &str) -> Result<NCPoly, CoefficientError> {
    let tokens = lex(s)?;
    if tokens.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(perr(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Parses a scalar expression; generators are rejected.
pub fn parse_coefficient(s: &str) -> Result<Coefficient, CoefficientError> {
    parse_ncpoly(s)?
        .as_scalar()
        .ok_or_else(|| perr(format!("`{s}` is not a scalar expression")))
}

/// Parses `name=value,name=value` bindings.
pub fn parse_bindings(
    s: &str,
) -> Result<std::collections::BTreeMap<Parameter, Coefficient>, CoefficientError> {
    let mut out = std::collections::BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| perr(format!("binding `{part}` is not of the form name=value")))?;
        let param = Parameter::from_name(name.trim())?;
        out.insert(param, parse_coefficient(value)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{int, par};
    use crate::freealg::Word;

    #[test]
    fn scalar_forms() {
        let c = parse_coefficient("p - q'^{-1}").unwrap();
        assert_eq!(c, par(Parameter::P) - par(Parameter::QP).inv().unwrap());
        assert_eq!(
            parse_coefficient("q'^-1").unwrap(),
            parse_coefficient("1/q'").unwrap()
        );
        assert_eq!(
            parse_coefficient("2 p^2 - 3").unwrap().to_string(),
            "2 p^2 - 3"
        );
        assert_eq!(parse_coefficient("q̄").unwrap(), par(Parameter::QBAR));
        assert!(parse_coefficient("A").is_err());
        assert!(matches!(
            parse_coefficient("pq"),
            Err(CoefficientError::UnknownParameter(_))
        ));
        assert_eq!(
            parse_coefficient("(p q' - 1) / (q')").unwrap(),
            par(Parameter::P) - par(Parameter::QP).inv().unwrap()
        );
        assert_eq!(
            parse_coefficient("1/(p-1)").unwrap().to_string(),
            "1 / (p - 1)"
        );
        assert_eq!(
            parse_coefficient("-1 / (p - 1)").unwrap(),
            int(-1).div(&(par(Parameter::P) - int(1))).unwrap()
        );
    }

    #[test]
    fn polynomial_forms() {
        let e = parse_ncpoly("A D + (-p + q'^{-1}) B C + -3 x dy").unwrap();
        assert_eq!(e.coefficient(&Word::parse("A D").unwrap()), int(1));
        assert_eq!(
            e.coefficient(&Word::parse("B C").unwrap()),
            parse_coefficient("q'^{-1} - p").unwrap()
        );
        assert_eq!(e.coefficient(&Word::parse("x dy").unwrap()), int(-3));
        assert!(parse_ncpoly("A / B").is_err());
        assert!(parse_ncpoly("").is_err());
        assert!(parse_ncpoly("A )").is_err());
    }

    #[test]
    fn bindings() {
        let b = parse_bindings("p=q, q'=q^2").unwrap();
        assert_eq!(b[&Parameter::P], par(Parameter::Q));
        assert_eq!(b[&Parameter::QP], par(Parameter::Q) * par(Parameter::Q));
        assert!(parse_bindings("p").is_err());
        assert!(parse_bindings("z=1").is_err());
    }
}
