//! Tiny expression grammar for naming graphs on the command line.
//!
//! Primitives: K5, K2,3, P4, C5, S3 (star), M2 (two disjoint edges),
//! E3 (three isolated vertices), B[2,1] (bundled bipartite), U[2;1,1]
//! (the matching-host construction at level t), pad(expr, s),
//! union(expr, expr) and g6:<graph6>.
//!
//! The only ambiguity is a comma after `K<int>` inside pad(...): in
//! "pad(K2,3)" the comma separates pad's arguments, while in "union(K2,3,C4)"
//! it belongs to K. One token of lookahead settles it: `K a , b )` inside
//! pad's first argument reads as K_a, everywhere else as K_{a,b}.

use std::fmt;

use matchwise_core::constructions::{build_bundle, build_ut, BundleParams, UtParams};
use matchwise_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(u64),
    CompleteBipartite(u64, u64),
    Path(u64),
    Cycle(u64),
    Star(u64),
    Matching(u64),
    Isolates(u64),
    Bundle(Vec<u64>),
    UtHost(u64, Vec<u64>),
    Pad(Box<GraphExpr>, u64),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    G6(String),
}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Int(u64),
    Sym(char),
    G6(String),
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            let word = &text[start..i];
            // "g6:" switches to a graph6 literal, whose alphabet ('?'..'~')
            // is disjoint from every delimiter we use
            if word == "g6" && i < bytes.len() && bytes[i] == b':' {
                i += 1;
                let lit_start = i;
                while i < bytes.len() && (63..=126).contains(&bytes[i]) {
                    i += 1;
                }
                if i == lit_start {
                    return Err(ParseError {
                        pos: i,
                        msg: "empty graph6 literal".into(),
                    });
                }
                toks.push((Tok::G6(text[lit_start..i].to_string()), start));
            } else {
                // a word like "K2" lexes as the letter part only; digits
                // form their own token
                let split = word.find(|ch: char| ch.is_ascii_digit());
                match split {
                    Some(d) => {
                        toks.push((Tok::Word(word[..d].to_string()), start));
                        let n: u64 = word[d..].parse().map_err(|_| ParseError {
                            pos: start + d,
                            msg: "integer too large".into(),
                        })?;
                        toks.push((Tok::Int(n), start + d));
                    }
                    None => toks.push((Tok::Word(word.to_string()), start)),
                }
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: u64 = text[start..i].parse().map_err(|_| ParseError {
                pos: start,
                msg: "integer too large".into(),
            })?;
            toks.push((Tok::Int(n), start));
        } else if "[](),;".contains(c) {
            toks.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    toks.push((Tok::End, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let j = (self.i + ahead).min(self.toks.len() - 1);
        &self.toks[j].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {c:?}"))
        }
    }

    fn expect_int(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn int_list(&mut self) -> Result<Vec<u64>, ParseError> {
        let mut out = vec![self.expect_int()?];
        while *self.peek() == Tok::Sym(',') {
            self.bump();
            out.push(self.expect_int()?);
        }
        Ok(out)
    }

    fn expr(&mut self, in_pad_arg: bool) -> Result<GraphExpr, ParseError> {
        match self.peek().clone() {
            Tok::G6(s) => {
                self.bump();
                Ok(GraphExpr::G6(s))
            }
            Tok::Word(w) => {
                let start = self.pos();
                self.bump();
                match w.as_str() {
                    "K" => {
                        let a = self.expect_int()?;
                        // lookahead: `K a , b` is bipartite unless the b is
                        // really pad's second argument
                        let two_arg = *self.peek() == Tok::Sym(',')
                            && matches!(self.peek_at(1), Tok::Int(_))
                            && !(in_pad_arg && *self.peek_at(2) == Tok::Sym(')'));
                        if two_arg {
                            self.bump();
                            let b = self.expect_int()?;
                            Ok(GraphExpr::CompleteBipartite(a, b))
                        } else {
                            Ok(GraphExpr::Complete(a))
                        }
                    }
                    "P" => Ok(GraphExpr::Path(self.expect_int()?)),
                    "C" => Ok(GraphExpr::Cycle(self.expect_int()?)),
                    "S" => Ok(GraphExpr::Star(self.expect_int()?)),
                    "M" => Ok(GraphExpr::Matching(self.expect_int()?)),
                    "E" => Ok(GraphExpr::Isolates(self.expect_int()?)),
                    "B" => {
                        self.expect_sym('[')?;
                        let ells = self.int_list()?;
                        self.expect_sym(']')?;
                        Ok(GraphExpr::Bundle(ells))
                    }
                    "U" => {
                        self.expect_sym('[')?;
                        let t = self.expect_int()?;
                        self.expect_sym(';')?;
                        let ells = self.int_list()?;
                        self.expect_sym(']')?;
                        Ok(GraphExpr::UtHost(t, ells))
                    }
                    "pad" => {
                        self.expect_sym('(')?;
                        let inner = self.expr(true)?;
                        self.expect_sym(',')?;
                        let s = self.expect_int()?;
                        self.expect_sym(')')?;
                        Ok(GraphExpr::Pad(Box::new(inner), s))
                    }
                    "union" => {
                        self.expect_sym('(')?;
                        let a = self.expr(false)?;
                        self.expect_sym(',')?;
                        let b = self.expr(false)?;
                        self.expect_sym(')')?;
                        Ok(GraphExpr::Union(Box::new(a), Box::new(b)))
                    }
                    other => Err(ParseError {
                        pos: start,
                        msg: format!("unknown name {other:?}"),
                    }),
                }
            }
            _ => self.err("expected a graph expression"),
        }
    }
}

pub fn parse_graph_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0 };
    let e = p.expr(false)?;
    if *p.peek() != Tok::End {
        return p.err("trailing input after expression");
    }
    Ok(e)
}

impl GraphExpr {
    pub fn build(&self) -> matchwise_core::Result<Graph> {
        match self {
            GraphExpr::Complete(n) => Graph::complete(*n as usize),
            GraphExpr::CompleteBipartite(a, b) => Graph::complete_bipartite(*a as usize, *b as usize),
            GraphExpr::Path(n) => Graph::path(*n as usize),
            GraphExpr::Cycle(n) => Graph::cycle(*n as usize),
            GraphExpr::Star(d) => Graph::star(*d as usize),
            GraphExpr::Matching(t) => Graph::matching(*t as usize),
            GraphExpr::Isolates(s) => Graph::empty(*s as usize),
            GraphExpr::Bundle(ells) => build_bundle(&BundleParams::new(ells.clone())?),
            GraphExpr::UtHost(t, ells) => {
                build_ut(&UtParams::new(BundleParams::new(ells.clone())?, *t)?)
            }
            GraphExpr::Pad(inner, s) => inner.build()?.pad_with_isolates(*s as usize),
            GraphExpr::Union(a, b) => a.build()?.disjoint_union(&b.build()?),
            GraphExpr::G6(s) => Graph::from_graph6(s),
        }
    }
}

/// Parse then build in one step; the two error kinds stay distinguishable.
pub fn graph_from_text(text: &str) -> Result<Graph, super::CliError> {
    let expr = parse_graph_expr(text).map_err(super::CliError::Parse)?;
    expr.build().map_err(super::CliError::Core)
}
