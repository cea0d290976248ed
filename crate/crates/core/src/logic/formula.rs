//! First-order formulas over the group signature `{1, ·, ⁻¹}`.
//!
//! Text form is parenthesized prefix notation:
//! `(forall a (exists t (= (* (inv t) a t) a)))`, with `e` for the
//! identity.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::LogicError;
use crate::word::{is_valid_name, Alphabet, Sign, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    One,
    Mul(Vec<Term>),
    Inv(Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

const RESERVED: &[&str] = &["e", "inv", "not", "and", "or", "forall", "exists"];

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn inv(t: Term) -> Term {
        Term::Inv(Box::new(t))
    }

    /// The product of `terms`; a single factor is returned as is and an
    /// empty product is the identity.
    pub fn product(mut terms: Vec<Term>) -> Term {
        match terms.len() {
            0 => Term::One,
            1 => terms.pop().expect("one term"),
            _ => Term::Mul(terms),
        }
    }

    /// A word in the alphabet read as a term in variables `vars[gen]`.
    pub fn from_word(w: &Word, vars: &[String]) -> Term {
        Term::product(
            w.letters()
                .iter()
                .map(|l| {
                    let v = Term::Var(vars[l.gen].clone());
                    if l.sign == Sign::Pos {
                        v
                    } else {
                        Term::inv(v)
                    }
                })
                .collect(),
        )
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::One => {}
            Term::Mul(ts) => ts.iter().for_each(|t| t.collect_vars(out)),
            Term::Inv(t) => t.collect_vars(out),
        }
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn forall(v: &str, f: Formula) -> Formula {
        Formula::Forall(v.to_string(), Box::new(f))
    }

    pub fn exists(v: &str, f: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(f))
    }

    /// `∃v_1 ... ∃v_k f`.
    pub fn exists_all(vars: &[String], f: Formula) -> Formula {
        vars.iter().rev().fold(f, |acc, v| Formula::exists(v, acc))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) => {
                let mut vs = BTreeSet::new();
                a.collect_vars(&mut vs);
                b.collect_vars(&mut vs);
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_free(bound, out)),
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn bound_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Forall(v, _) | Formula::Exists(v, _) = f {
                out.insert(v.clone());
            }
        });
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Eq(..) => {}
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit(f),
            Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| g.visit(f)),
        }
    }

    /// Number of equality atoms.
    pub fn atom_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if let Formula::Eq(..) = f {
                n += 1;
            }
        });
        n
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::One => f.write_str("e"),
            Term::Mul(ts) => {
                f.write_str("(*")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                f.write_str(")")
            }
            Term::Inv(t) => write!(f, "(inv {t})"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "(= {a} {b})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(gs) | Formula::Or(gs) => {
                f.write_str(if matches!(self, Formula::And(_)) { "(and" } else { "(or" })?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                f.write_str(")")
            }
            Formula::Forall(v, g) => write!(f, "(forall {v} {g})"),
            Formula::Exists(v, g) => write!(f, "(exists {v} {g})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            b';' => {
                // comment to end of line
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len() && !bytes[i].is_ascii_whitespace() && !matches!(bytes[i], b'(' | b')' | b';') {
                    i += 1;
                }
                out.push((start, Token::Atom(&text[start..i])));
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, LogicError> {
        Err(LogicError::Parse { offset: self.offset(), message: message.into() })
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn expect_close(&mut self) -> Result<(), LogicError> {
        match self.peek() {
            Some(Token::Close) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err("expected `)`"),
        }
    }

    fn variable(&mut self) -> Result<String, LogicError> {
        match self.peek() {
            Some(Token::Atom(a)) if is_valid_name(a) && !RESERVED.contains(a) => {
                let v = a.to_string();
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected a variable name"),
        }
    }

    fn term(&mut self) -> Result<Term, LogicError> {
        match self.peek().cloned() {
            Some(Token::Atom("e" | "1")) => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(Token::Atom(_)) => Ok(Term::Var(self.variable()?)),
            Some(Token::Open) => {
                self.pos += 1;
                match self.next() {
                    Some(Token::Atom("*")) => {
                        let mut ts = Vec::new();
                        while !matches!(self.peek(), Some(Token::Close) | None) {
                            ts.push(self.term()?);
                        }
                        self.expect_close()?;
                        Ok(Term::Mul(ts))
                    }
                    Some(Token::Atom("inv")) => {
                        let t = self.term()?;
                        self.expect_close()?;
                        Ok(Term::inv(t))
                    }
                    _ => {
                        self.pos -= 1;
                        self.err("expected `*` or `inv`")
                    }
                }
            }
            _ => self.err("expected a term"),
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        if !matches!(self.peek(), Some(Token::Open)) {
            return self.err("expected `(`");
        }
        self.pos += 1;
        let head = match self.next() {
            Some(Token::Atom(a)) => a,
            _ => {
                self.pos -= 1;
                return self.err("expected a connective");
            }
        };
        let f = match head {
            "=" => {
                let a = self.term()?;
                let b = self.term()?;
                Formula::Eq(a, b)
            }
            "not" => Formula::not(self.formula()?),
            "and" | "or" => {
                let mut fs = Vec::new();
                while !matches!(self.peek(), Some(Token::Close) | None) {
                    fs.push(self.formula()?);
                }
                if head == "and" {
                    Formula::And(fs)
                } else {
                    Formula::Or(fs)
                }
            }
            "forall" | "exists" => {
                let v = self.variable()?;
                let body = self.formula()?;
                if head == "forall" {
                    Formula::Forall(v, Box::new(body))
                } else {
                    Formula::Exists(v, Box::new(body))
                }
            }
            other => {
                self.pos -= 1;
                return self.err(format!("unknown connective `{other}`"));
            }
        };
        self.expect_close()?;
        Ok(f)
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser { tokens: tokenize(text), pos: 0, len: text.len() };
    let f = p.formula()?;
    if p.pos < p.tokens.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Variable names `x_1, ..., x_n`, the default for marker tuples.
pub fn tuple_vars(n: usize) -> Vec<String> {
    Alphabet::indexed("x", n).names()
}
