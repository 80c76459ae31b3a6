use thiserror::Error;

use super::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct SdlParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Amp,
    Bar,
    Arrow,
    LParen,
    RParen,
    Semi,
    Eof,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Tilde => "`~`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Arrow => "`=>`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Semi => "`;`".into(),
        Tok::Eof => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, SdlParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '~' => Tok::Tilde,
            '&' => Tok::Amp,
            '|' => Tok::Bar,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            '=' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            c => return Err(SdlParseError { column: col, message: format!("unexpected character `{c}`") }),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::Eof, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn err<T>(&self, message: String) -> Result<T, SdlParseError> {
        Err(SdlParseError { column: self.toks[self.at].1, message })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), SdlParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {}, found {}", describe(&t), describe(self.peek())))
        }
    }

    fn implication(&mut self) -> Result<Formula, SdlParseError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            return Ok(Formula::imp(left, self.implication()?));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, SdlParseError> {
        let mut left = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            left = Formula::disj(left, self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, SdlParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            left = Formula::conj(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, SdlParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let f = self.implication()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) if name == "O" || name == "P" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let body = self.implication()?;
                self.expect(Tok::RParen)?;
                Ok(if name == "O" { Formula::ob(body) } else { Formula::perm(body) })
            }
            Tok::Ident(name) if name == "false" => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::Ident(name) if name.starts_with(|c: char| c.is_ascii_lowercase()) => {
                self.bump();
                Ok(Formula::Prop(name))
            }
            Tok::Ident(name) => self.err(format!("propositions start lowercase, found `{name}`")),
            t => self.err(format!("expected formula, found {}", describe(&t))),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, SdlParseError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let f = p.implication()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

/// Parses `f1; f2; ...`.
pub fn parse_formula_list(text: &str) -> Result<Vec<Formula>, SdlParseError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let mut out = vec![p.implication()?];
    while *p.peek() == Tok::Semi {
        p.bump();
        out.push(p.implication()?);
    }
    p.expect(Tok::Eof)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_sugar() {
        let p = || Formula::prop("p");
        let q = || Formula::prop("q");
        assert_eq!(parse_formula("~p => O(~q)").unwrap(), Formula::imp(Formula::neg(p()), Formula::ob(Formula::neg(q()))));
        assert_eq!(parse_formula("P(p)").unwrap(), parse_formula("~O(~p)").unwrap());
        assert_eq!(parse_formula("p & q | p").unwrap(), Formula::disj(Formula::conj(p(), q()), p()));
        assert_eq!(parse_formula("p => q => p").unwrap(), Formula::imp(p(), Formula::imp(q(), p())));
    }

    #[test]
    fn errors() {
        assert!(parse_formula("Q").is_err());
        assert!(parse_formula("O p").is_err());
        assert!(parse_formula("p &").is_err());
        assert_eq!(parse_formula("p $ q").unwrap_err().column, 3);
        assert_eq!(parse_formula_list("O(p); O(~p)").unwrap().len(), 2);
    }
}
