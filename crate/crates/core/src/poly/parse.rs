//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := sign? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | variable | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! Whitespace is insignificant. Multiplication must be written out: `2x1` is
//! rejected. A single leading sign is accepted at the start of an expression
//! so that printed polynomials such as `-x1 + x2` read back in.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Polynomial, Rational, VariableAlphabet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(n) => format!("number `{n}`"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse as integer");
                tokens.push((start, Token::Number(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        tokens.push((start, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    alphabet: &'a Arc<VariableAlphabet>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.error(format!("expected {expected}, found {}", t.describe())),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = match self.peek() {
            Some(Token::Minus) => {
                self.advance();
                true
            }
            Some(Token::Plus) => {
                self.advance();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.advance();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.advance();
            acc = &acc * &self.factor()?;
        }
        if let Some(Token::Ident(_) | Token::Number(_) | Token::LParen) = self.peek() {
            return self.error("implicit multiplication is not allowed; use `*`");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if let Some(Token::Caret) = self.peek() {
            self.advance();
            let exp = match self.advance() {
                Some(Token::Number(n)) => n,
                _ => {
                    self.pos -= 1;
                    return self.unexpected("a non-negative integer exponent");
                }
            };
            let exp: u32 = match u32::try_from(&exp) {
                Ok(e) => e,
                Err(_) => {
                    self.pos -= 1;
                    return self.error("exponent too large");
                }
            };
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let start = self.offset();
        match self.advance() {
            Some(Token::Number(numer)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.advance();
                    let denom = match self.advance() {
                        Some(Token::Number(d)) => d,
                        _ => {
                            self.pos -= 1;
                            return self.unexpected("a denominator");
                        }
                    };
                    if denom.is_zero() {
                        self.pos -= 1;
                        return self.error("zero denominator");
                    }
                    Ok(Polynomial::constant(
                        self.alphabet.clone(),
                        Rational::new(numer, denom),
                    ))
                } else {
                    Ok(Polynomial::constant(
                        self.alphabet.clone(),
                        Rational::from_integer(numer),
                    ))
                }
            }
            Some(Token::Ident(name)) => match self.alphabet.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.alphabet.clone(), i)),
                None => Err(ParseError::UnknownVariable {
                    position: start,
                    name,
                }),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.unexpected("`)`")
                    }
                }
            }
            _ => {
                self.pos -= 1;
                self.unexpected("a number, variable or `(`")
            }
        }
    }
}

/// Parses `text` into a canonical polynomial over `alphabet`.
pub fn parse_polynomial(
    text: &str,
    alphabet: &Arc<VariableAlphabet>,
) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let p = parser.expr()?;
    if parser.peek().is_some() {
        return parser.unexpected("an operator or end of input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, Monomial, Side};

    fn xs() -> Arc<VariableAlphabet> {
        Arc::new(VariableAlphabet::indexed("x", 3, Side::S))
    }

    fn mono(e: [u32; 3]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn reads_terms_directly() {
        let p = parse_polynomial("x1^2 + 2*x1*x2", &xs()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&mono([2, 0, 0])), ratio(1, 1));
        assert_eq!(p.coefficient(&mono([1, 1, 0])), ratio(2, 1));
    }

    #[test]
    fn zero_is_empty() {
        assert!(parse_polynomial("0", &xs()).unwrap().is_zero());
        assert!(parse_polynomial("x1 - x1", &xs()).unwrap().is_zero());
    }

    #[test]
    fn expansion_matches_repeated_multiplication() {
        let a = xs();
        let p = parse_polynomial("(x1+x2)^2 - x1^2 - x2^2", &a).unwrap();
        // oracle: (x1+x2)*(x1+x2) by hand-written term products
        let x1 = Polynomial::var(a.clone(), 0);
        let x2 = Polynomial::var(a.clone(), 1);
        let s = &x1 + &x2;
        let expected = &(&(&s * &s) - &(&x1 * &x1)) - &(&x2 * &x2);
        assert_eq!(p, expected);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coefficient(&mono([1, 1, 0])), ratio(2, 1));
    }

    #[test]
    fn rationals_and_powers() {
        let p = parse_polynomial("3/4*x1 - 2^3 + (1/2)^2*x3", &xs()).unwrap();
        assert_eq!(p.coefficient(&mono([1, 0, 0])), ratio(3, 4));
        assert_eq!(p.coefficient(&mono([0, 0, 0])), ratio(-8, 1));
        assert_eq!(p.coefficient(&mono([0, 0, 1])), ratio(1, 4));
        let q = parse_polynomial(" x1 ^ 0 ", &xs()).unwrap();
        assert_eq!(q.to_string(), "1");
    }

    #[test]
    fn implicit_multiplication_is_an_error() {
        let err = parse_polynomial("2x1", &xs()).unwrap_err();
        assert!(
            matches!(err, ParseError::Syntax { position: 1, .. }),
            "{err}"
        );
        assert!(parse_polynomial("x1 x2", &xs()).is_err());
        assert!(parse_polynomial("(x1)(x2)", &xs()).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_polynomial("x1 + z", &xs()).unwrap_err(),
            ParseError::UnknownVariable {
                position: 5,
                name: "z".into()
            }
        );
        assert!(matches!(
            parse_polynomial("x1 +", &xs()).unwrap_err(),
            ParseError::Syntax { position: 4, .. }
        ));
        assert!(matches!(
            parse_polynomial("(x1 + x2", &xs()).unwrap_err(),
            ParseError::Syntax { position: 8, .. }
        ));
        assert!(matches!(
            parse_polynomial("x1 / 2", &xs()).unwrap_err(),
            ParseError::Syntax { position: 3, .. }
        ));
        assert!(matches!(
            parse_polynomial("1/0", &xs()).unwrap_err(),
            ParseError::Syntax { position: 2, .. }
        ));
        assert!(matches!(
            parse_polynomial("x1^-1", &xs()).unwrap_err(),
            ParseError::Syntax { position: 3, .. }
        ));
        assert!(matches!(
            parse_polynomial("x1 # 2", &xs()).unwrap_err(),
            ParseError::Syntax { position: 3, .. }
        ));
        assert!(parse_polynomial("", &xs()).is_err());
        assert!(parse_polynomial("--x1", &xs()).is_err());
    }
}
