//! Text syntax for polynomials: integer literals, variables `X`, `Z`,
//! `T1..Ts` (bare `T` is `T1`), operators `+ - * ^`, and parentheses.

use num_bigint::BigInt;


use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = vec![];
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                tokens.push(Token::Int(lit.parse().map_err(|_| {
                    Error::Parse(format!("bad integer literal '{lit}'"))
                })?));
            }
            'X' | 'Z' | 'T' | 'x' | 'z' | 't' => {
                let letter = c.to_ascii_uppercase();
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let name = match (letter, digits.as_str()) {
                    ('T', "") => "T1".to_string(),
                    ('T', d) => format!("T{d}"),
                    (l, "") => l.to_string(),
                    (l, d) => {
                        return Err(Error::Parse(format!(
                            "variable '{l}{d}' not recognized; use X, Z, or T1..Ts"
                        )))
                    }
                };
                tokens.push(Token::Var(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := unary ('*' unary | juxtaposed-power)*
    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                // implicit multiplication: `2X`, `T1(X+1)`, `X T`
                Some(Token::Var(_)) | Some(Token::LParen) | Some(Token::Int(_)) => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // unary := '-' unary | atom ('^' int)?
    fn unary(&mut self) -> Result<MultiPoly> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if matches!(self.peek(), Some(Token::Plus)) {
            self.pos += 1;
            return self.unary();
        }
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(k)) => {
                    let k: u32 = k
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::Parse("expected integer exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Token::Int(n)) => Ok(MultiPoly::constant(vec![], n)),
            Some(Token::Var(name)) => Ok(MultiPoly::var(vec![name.clone()], &name)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("unbalanced parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "expected a value, found {other:?}"
            ))),
        }
    }
}

pub fn parse_multipoly(input: &str) -> Result<MultiPoly> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            parser.pos
        )));
    }
    Ok(poly)
}

/// Parse a univariate polynomial in the named variable (parameters rejected).
pub fn parse_unipoly(input: &str, var: &str) -> Result<UniPoly> {
    let p = parse_multipoly(input)?;
    p.to_unipoly(var)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_roundtrip() {
        for text in [
            "X^2 - T1",
            "Z^2 - T1^3",
            "2*X^2 + T1*X + 1",
            "X^5 - 32",
            "T1^2*T2 - 4*T2 + 7",
            "-X + 3",
        ] {
            let p = parse_multipoly(text).unwrap();
            let q = parse_multipoly(&p.to_string()).unwrap();
            assert_eq!(p, q, "roundtrip failed for {text}");
        }
    }

    #[test]
    fn bare_t_is_t1() {
        assert_eq!(
            parse_multipoly("X^2 - T").unwrap(),
            parse_multipoly("X^2 - T1").unwrap()
        );
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(
            parse_multipoly("2X^2").unwrap(),
            parse_multipoly("2*X^2").unwrap()
        );
        assert_eq!(
            parse_multipoly("(X-1)(X+1)").unwrap(),
            parse_multipoly("X^2 - 1").unwrap()
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_multipoly("X^2 -").is_err());
        assert!(parse_multipoly("Y + 1").is_err());
        assert!(parse_multipoly("(X").is_err());
        assert!(parse_multipoly("").is_err());
        assert!(parse_multipoly("X irreducible").is_err());
    }

    #[test]
    fn unipoly_parse() {
        let p = parse_unipoly("X^2 - 2", "X").unwrap();
        assert_eq!(p, UniPoly::from_i64(&[-2, 0, 1]));
        assert!(parse_unipoly("X - T1", "X").is_err());
        let zero = parse_unipoly("X - X", "X").unwrap();
        assert!(zero.is_zero());
    }
}
