//! Parser for the polynomial text form.
//!
//! Accepts the printed form `(c0) + (c1) z + (c2) z^2` as well as looser
//! input such as `z^2 + 1`, `2*i*z - 1/2` or `-(1+k) z^3`: a signed sum of
//! terms, each a product of parenthesized quaternion literals, rationals,
//! units `i`/`j`/`k` and powers of `z`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::SkewPoly;
use crate::scalar::{parse_rational, DivisionRing, Quaternion};

#[derive(Debug)]
enum Token {
    Sign(bool),
    Star,
    Group(Quaternion),
    Number(Quaternion),
    Unit(Quaternion),
    Power(usize),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let err = |col: usize, message: &str| Error::Parse {
        column: col + 1,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        let start = pos;
        match c {
            _ if c.is_ascii_whitespace() => pos += 1,
            '+' | '-' => {
                out.push((start, Token::Sign(c == '-')));
                pos += 1;
            }
            '*' => {
                out.push((start, Token::Star));
                pos += 1;
            }
            '(' => {
                let close = text[pos..]
                    .find(')')
                    .map(|o| pos + o)
                    .ok_or_else(|| err(start, "unclosed '('"))?;
                let inner = &text[pos + 1..close];
                let q = Quaternion::parse(inner).map_err(|e| match e {
                    Error::Parse { column, message } => Error::Parse {
                        column: column + pos + 1,
                        message,
                    },
                    other => other,
                })?;
                out.push((start, Token::Group(q)));
                pos = close + 1;
            }
            '0'..='9' => {
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                    pos += 1;
                }
                let r = parse_rational(&text[start..pos], start)?;
                out.push((start, Token::Number(Quaternion::from(r))));
            }
            'i' | 'j' | 'k' => {
                let u = match c {
                    'i' => Quaternion::i(),
                    'j' => Quaternion::j(),
                    _ => Quaternion::k(),
                };
                out.push((start, Token::Unit(u)));
                pos += 1;
            }
            'z' => {
                pos += 1;
                let mut exp = 1;
                // allow whitespace around '^'
                let mut look = pos;
                while look < bytes.len() && bytes[look].is_ascii_whitespace() {
                    look += 1;
                }
                if look < bytes.len() && bytes[look] == b'^' {
                    look += 1;
                    while look < bytes.len() && bytes[look].is_ascii_whitespace() {
                        look += 1;
                    }
                    let digits_start = look;
                    while look < bytes.len() && bytes[look].is_ascii_digit() {
                        look += 1;
                    }
                    if look == digits_start {
                        return Err(err(look, "expected an exponent after '^'"));
                    }
                    exp = text[digits_start..look]
                        .parse()
                        .map_err(|_| err(digits_start, "exponent out of range"))?;
                    pos = look;
                }
                out.push((start, Token::Power(exp)));
            }
            _ => return Err(err(start, &format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

impl FromStr for SkewPoly<Quaternion> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Err(Error::Parse {
                column: 1,
                message: "empty polynomial".into(),
            });
        }
        let mut total = SkewPoly::zero();
        let mut iter = tokens.into_iter().peekable();
        let mut first = true;
        while iter.peek().is_some() {
            let mut negative = false;
            match iter.peek() {
                Some((_, Token::Sign(neg))) => {
                    negative = *neg;
                    iter.next();
                }
                Some((col, _)) if !first => {
                    return Err(Error::Parse {
                        column: col + 1,
                        message: "expected '+' or '-' between terms".into(),
                    })
                }
                _ => {}
            }
            first = false;

            let mut coef = Quaternion::one();
            let mut power = 0usize;
            let mut factors = 0;
            let mut pending_star: Option<usize> = None;
            while let Some((col, tok)) = iter.peek() {
                let col = *col;
                match tok {
                    Token::Sign(_) => break,
                    Token::Star => {
                        if factors == 0 || pending_star.is_some() {
                            return Err(Error::Parse {
                                column: col + 1,
                                message: "misplaced '*'".into(),
                            });
                        }
                        pending_star = Some(col);
                    }
                    Token::Group(q) | Token::Number(q) | Token::Unit(q) => {
                        coef = coef.mul(q);
                        factors += 1;
                        pending_star = None;
                    }
                    Token::Power(e) => {
                        power += e;
                        factors += 1;
                        pending_star = None;
                    }
                }
                iter.next();
            }
            if let Some(col) = pending_star {
                return Err(Error::Parse {
                    column: col + 1,
                    message: "dangling '*'".into(),
                });
            }
            if factors == 0 {
                return Err(Error::Parse {
                    column: text.len() + 1,
                    message: "expected a term".into(),
                });
            }
            if negative {
                coef = coef.neg();
            }
            total = total.add(&SkewPoly::monomial(coef, power));
        }
        Ok(total)
    }
}
