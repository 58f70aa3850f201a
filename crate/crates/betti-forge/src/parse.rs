//! Recursive-descent parser for human-written polynomial expressions.
//!
//! Grammar:
//!   expr   := sign? term (('+'|'-') term)*
//!   term   := factor ('*'? factor)*
//!   factor := base ('^' uint)?
//!   base   := number | var | '(' expr ')'
//!   number := int ('/' uint)?
//!
//! Juxtaposition multiplies (xyz = x*y*z), '#' starts a comment to end of
//! line, and unary minus binds looser than '^'.

use crate::error::ParseError;
use crate::field::Field;
use crate::poly::{Polynomial, VarSet};
use num_bigint::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl<'a> Lexer<'a> {
    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos] as char;
            let at = self.pos;
            match c {
                ' ' | '\t' | '\r' | '\n' => {
                    self.pos += 1;
                }
                '#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                '+' => {
                    out.push((Tok::Plus, at));
                    self.pos += 1;
                }
                '-' | '\u{2212}' => {
                    out.push((Tok::Minus, at));
                    self.pos += 1;
                }
                '*' => {
                    out.push((Tok::Star, at));
                    self.pos += 1;
                }
                '^' => {
                    out.push((Tok::Caret, at));
                    self.pos += 1;
                }
                '/' => {
                    out.push((Tok::Slash, at));
                    self.pos += 1;
                }
                '(' => {
                    out.push((Tok::LParen, at));
                    self.pos += 1;
                }
                ')' => {
                    out.push((Tok::RParen, at));
                    self.pos += 1;
                }
                '0'..='9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n: BigInt = text.parse().map_err(|_| ParseError {
                        offset: start,
                        message: format!("bad integer literal '{text}'"),
                    })?;
                    out.push((Tok::Int(n), start));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    // an identifier run; try the whole run as one name, else
                    // split into single-letter variables
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && ((self.src[self.pos] as char).is_ascii_alphabetic()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let run = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    if let Some(i) = self.vars.index_of(run) {
                        out.push((Tok::Var(i), start));
                    } else {
                        for (k, ch) in run.char_indices() {
                            let name = ch.to_string();
                            match self.vars.index_of(&name) {
                                Some(i) => out.push((Tok::Var(i), start + k)),
                                None => {
                                    return Err(ParseError {
                                        offset: start + k,
                                        message: format!("unknown identifier '{ch}'"),
                                    })
                                }
                            }
                        }
                    }
                }
                other => {
                    return Err(ParseError {
                        offset: at,
                        message: format!("unexpected character '{other}'"),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a, F: Field> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    field: &'a F,
    nvars: usize,
    end: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, at)| *at)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                // juxtaposition
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let at = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| ParseError {
                        offset: at,
                        message: "exponent must be a small non-negative integer".into(),
                    })?;
                    if e > 4096 {
                        return Err(ParseError {
                            offset: at,
                            message: "exponent too large".into(),
                        });
                    }
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(ParseError {
                        offset: at,
                        message: "expected an integer exponent after '^'".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial<F>, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // optional rational literal int/uint
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.pos += 1;
                    let at2 = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(ParseError {
                                    offset: at2,
                                    message: "zero denominator".into(),
                                });
                            }
                            let c = self.field.from_ratio(&n, &d);
                            return Ok(Polynomial::constant(self.field, self.nvars, c));
                        }
                        _ => {
                            return Err(ParseError {
                                offset: at2,
                                message: "expected an integer after '/'".into(),
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(
                    self.field,
                    self.nvars,
                    self.field.from_bigint(&n),
                ))
            }
            Some(Tok::Var(i)) => Ok(Polynomial::variable(self.field, self.nvars, i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let at2 = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ParseError {
                        offset: at2,
                        message: "expected ')'".into(),
                    }),
                }
            }
            Some(t) => Err(ParseError {
                offset: at,
                message: format!("unexpected token {t:?}"),
            }),
            None => Err(ParseError {
                offset: at,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parse an expression over the given variables into an exact polynomial.
pub fn parse_polynomial<F: Field>(
    text: &str,
    vars: &VarSet,
    field: &F,
) -> Result<Polynomial<F>, ParseError> {
    let toks = Lexer {
        src: text.as_bytes(),
        pos: 0,
        vars,
    }
    .tokens()?;
    if toks.is_empty() {
        return Err(ParseError {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        nvars: vars.len(),
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError {
            offset: p.here(),
            message: "trailing input".into(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn basic_forms() {
        let vars = VarSet::surface();
        let f = parse_polynomial("xyz - t^3", &vars, &Rationals).unwrap();
        let g = parse_polynomial("x*y*z - t*t*t", &vars, &Rationals).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.degree(), Some(3));
    }

    #[test]
    fn unknown_identifier_offset() {
        let vars = VarSet::surface();
        let e = parse_polynomial("x + u", &vars, &Rationals).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.message.contains('u'));
    }

    #[test]
    fn unary_minus_binds_loose() {
        let vars = VarSet::surface();
        let a = parse_polynomial("-x^2", &vars, &Rationals).unwrap();
        let b = parse_polynomial("0 - x^2", &vars, &Rationals).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn chmutov_octic_parses() {
        let vars = VarSet::surface();
        let text = "16*(x^8+y^8+z^8+t^8)+224*(x^4*y^4+x^4*z^4+x^4*t^4+y^4*z^4+y^4*t^4+z^4*t^4)+2688*x^2*y^2*z^2*t^2-9*(x^2+y^2+z^2+t^2)^4";
        let f = parse_polynomial(text, &vars, &Rationals).unwrap();
        assert_eq!(f.homogeneous_degree().unwrap(), Some(8));
        // x^8 coefficient: 16 - 9 = 7
        let x8 = crate::monomial::Monomial::from_exps(&[8, 0, 0, 0]);
        let c = f
            .terms()
            .iter()
            .find(|(m, _)| *m == x8)
            .map(|(_, c)| c.clone())
            .unwrap();
        assert_eq!(Rationals.render(&c), "7");
        // x^2y^2z^2t^2 coefficient: 2688 - 9 * (4!/(1!1!1!1!)) * ... = 2688 - 9*2520/...: check via parser
        let m2222 = crate::monomial::Monomial::from_exps(&[2, 2, 2, 2]);
        let c2 = f
            .terms()
            .iter()
            .find(|(m, _)| *m == m2222)
            .map(|(_, c)| c.clone())
            .unwrap();
        // multinomial (2,2,2,2) in (x^2+y^2+z^2+t^2)^4 is 4! = 24, so 2688 - 9*24 = 2472
        assert_eq!(Rationals.render(&c2), "2472");
    }

    #[test]
    fn comments_and_prime_field() {
        let vars = VarSet::surface();
        let f = PrimeField::new(7).unwrap();
        let p = parse_polynomial("# a comment\n 10*x + 4*x", &vars, &f).unwrap();
        // 14 x = 0 mod 7
        assert!(p.is_zero());
    }

    #[test]
    fn parser_errors() {
        let vars = VarSet::surface();
        assert!(parse_polynomial("", &vars, &Rationals).is_err());
        assert!(parse_polynomial("x +", &vars, &Rationals).is_err());
        assert!(parse_polynomial("(x", &vars, &Rationals).is_err());
        assert!(parse_polynomial("x ^ y", &vars, &Rationals).is_err());
        assert!(parse_polynomial("x / 2", &vars, &Rationals).is_err());
        assert!(parse_polynomial("1/0", &vars, &Rationals).is_err());
    }
}
