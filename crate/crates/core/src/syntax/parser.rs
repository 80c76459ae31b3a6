use super::lexer::{tokenize, ParseError, Pos, Tok};
use super::{is_reserved, Concept, Sequent, Statement};

/// Parses a concept. Precedence, loosest first: `->` (right-assoc), `or`,
/// `and`, then the prefix forms `not`, `some R.`, `all R.`.
pub fn parse_concept(text: &str) -> Result<Concept, ParseError> {
    let mut p = Parser::new(text)?;
    let c = p.concept()?;
    p.expect_eof()?;
    Ok(c)
}

/// Parses `x : C`, `x : (y : C)`, `x R y`, or a bare concept.
pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.statement()?;
    p.expect_eof()?;
    Ok(s)
}

/// Parses `[tbox: F1; ...; Fn |] G1; ...; Gm |- D`.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.sequent()?;
    p.expect_eof()?;
    Ok(s)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

fn starts_lower(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_lowercase())
}

fn starts_upper(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let toks = tokenize(text)?;
        if toks.len() == 1 {
            return Err(ParseError::at(toks[0].1, "empty input"));
        }
        Ok(Parser { toks, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.at + k).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(ParseError::at(self.pos(), format!("expected {tok}, found {}", self.peek())))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => Err(ParseError::at(self.pos(), format!("unexpected {t} after end of expression"))),
        }
    }

    fn is_keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    fn concept(&mut self) -> Result<Concept, ParseError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.advance();
            let right = self.concept()?;
            return Ok(Concept::subs(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Concept, ParseError> {
        let mut left = self.conjunction()?;
        while self.is_keyword("or") {
            self.advance();
            let right = self.conjunction()?;
            left = Concept::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Concept, ParseError> {
        let mut left = self.unary()?;
        while self.is_keyword("and") {
            self.advance();
            let right = self.unary()?;
            left = Concept::and(left, right);
        }
        Ok(left)
    }

    fn role_name(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        match self.advance() {
            Tok::Ident(r) if starts_upper(&r) && !is_reserved(&r) => Ok(r),
            Tok::Ident(r) if is_reserved(&r) => {
                Err(ParseError::at(pos, format!("reserved word `{r}` cannot be used as a role")))
            }
            Tok::Ident(r) => Err(ParseError::at(pos, format!("role names start uppercase, found `{r}`"))),
            t => Err(ParseError::at(pos, format!("expected role name, found {t}"))),
        }
    }

    fn nominal_name(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        match self.advance() {
            Tok::Ident(x) if is_reserved(&x) => {
                Err(ParseError::at(pos, format!("reserved word `{x}` cannot be used as a nominal")))
            }
            Tok::Ident(x) if starts_lower(&x) => Ok(x),
            Tok::Ident(x) => Err(ParseError::at(pos, format!("nominals start lowercase, found `{x}`"))),
            t => Err(ParseError::at(pos, format!("expected nominal, found {t}"))),
        }
    }

    fn unary(&mut self) -> Result<Concept, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                self.advance();
                let c = self.concept()?;
                self.expect(Tok::RParen)?;
                Ok(c)
            }
            Tok::Ident(w) => match w.as_str() {
                "not" => {
                    self.advance();
                    Ok(Concept::not(self.unary()?))
                }
                "some" | "all" => {
                    self.advance();
                    let role = self.role_name()?;
                    self.expect(Tok::Dot)?;
                    let body = self.unary()?;
                    Ok(if w == "some" { Concept::exists(role, body) } else { Concept::forall(role, body) })
                }
                "Top" => {
                    self.advance();
                    Ok(Concept::Top)
                }
                "Bot" => {
                    self.advance();
                    Ok(Concept::Bottom)
                }
                "and" | "or" | "tbox" => {
                    Err(ParseError::at(pos, format!("expected concept, found keyword `{w}`")))
                }
                _ if starts_upper(&w) => {
                    self.advance();
                    Ok(Concept::Atom(w))
                }
                _ => Err(ParseError::at(
                    pos,
                    format!("expected concept, found `{w}` (concept atoms start uppercase)"),
                )),
            },
            t => Err(ParseError::at(pos, format!("expected concept, found {t}"))),
        }
    }

    /// True when the upcoming tokens begin a nominal or role assertion.
    fn at_assertion(&self, offset: usize) -> bool {
        matches!(self.peek_at(offset), Tok::Ident(w) if starts_lower(w) && !is_reserved(w))
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        if let (Tok::Ident(x), Tok::Colon) = (self.peek(), self.peek_at(1)) {
            if is_reserved(x) {
                return Err(ParseError::at(self.pos(), format!("reserved word `{x}` cannot be used as a nominal")));
            }
        }
        if !self.at_assertion(0) {
            return Ok(Statement::Concept(self.concept()?));
        }
        let subject = self.nominal_name()?;
        match self.peek().clone() {
            Tok::Colon => {
                self.advance();
                let body = self.label_body()?;
                Ok(Statement::Nominal(subject, Box::new(body)))
            }
            Tok::Ident(r) if starts_upper(&r) => {
                let role = self.role_name()?;
                let object = self.nominal_name()?;
                Ok(Statement::Role(subject, role, object))
            }
            t => Err(ParseError::at(self.pos(), format!("expected `:` or role name after nominal, found {t}"))),
        }
    }

    fn label_body(&mut self) -> Result<Statement, ParseError> {
        if *self.peek() == Tok::LParen && self.at_assertion(1) && *self.peek_at(2) == Tok::Colon {
            self.advance();
            let inner = self.nominal_assertion()?;
            self.expect(Tok::RParen)?;
            return Ok(inner);
        }
        if self.at_assertion(0) {
            return self.nominal_assertion();
        }
        Ok(Statement::Concept(self.concept()?))
    }

    fn nominal_assertion(&mut self) -> Result<Statement, ParseError> {
        let x = self.nominal_name()?;
        self.expect(Tok::Colon)?;
        let body = self.label_body()?;
        Ok(Statement::Nominal(x, Box::new(body)))
    }

    fn sequent(&mut self) -> Result<Sequent, ParseError> {
        let mut theta = Vec::new();
        if self.is_keyword("tbox") && *self.peek_at(1) == Tok::Colon {
            self.advance();
            self.advance();
            if *self.peek() != Tok::Bar {
                loop {
                    let pos = self.pos();
                    let c = self.concept()?;
                    if !matches!(c, Concept::Subs(..)) {
                        return Err(ParseError::at(pos, "TBox entries must be subsumptions `C -> D`"));
                    }
                    theta.push(c);
                    if *self.peek() == Tok::Semi {
                        self.advance();
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::Bar)?;
        }
        let mut antecedent = Vec::new();
        if *self.peek() != Tok::Turnstile {
            loop {
                antecedent.push(self.statement()?);
                if *self.peek() == Tok::Semi {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Turnstile)?;
        let succedent = self.statement()?;
        if *self.peek() == Tok::Semi {
            return Err(ParseError::at(self.pos(), "a sequent has exactly one succedent"));
        }
        Ok(Sequent { theta, antecedent, succedent })
    }
}
