#![allow(dead_code)]

use std::collections::BTreeSet;

use frobkit::cli::{self, Config};

/// Every `(x, y)` with `x, y >= 0` and `a*x + b*y = d`, by double loop.
pub fn brute_force_expressions(a: i64, b: i64, d: i64) -> BTreeSet<(i64, i64)> {
    let mut found = BTreeSet::new();
    for x in 0..=d / a {
        for y in 0..=d / b {
            if a * x + b * y == d {
                found.insert((x, y));
            }
        }
    }
    found
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprime pairs `lo <= a < b <= hi`.
pub fn coprime_pairs(lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for a in lo..=hi {
        for b in a + 1..=hi {
            if gcd(a, b) == 1 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI in-process.
pub fn run_cli(args: &[String]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("frobkit".to_string()).chain(args.iter().cloned());
    let code = cli::run(argv, &Config::default(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Reads a json integer that may have been emitted as a decimal string.
pub fn json_int(v: &serde_json::Value) -> i128 {
    match v {
        serde_json::Value::Number(n) => n.as_i64().expect("integer") as i128,
        serde_json::Value::String(s) => s.parse().expect("decimal string"),
        other => panic!("not an integer: {other}"),
    }
}

/// Node ids and edges of a parsed DOT graph.
pub type DotGraph = (BTreeSet<String>, Vec<(String, String)>);

/// Minimal DOT parser covering the graph grammar: graph header, node,
/// edge and attribute statements, `ID = ID`, attribute lists and
/// anonymous or named subgraphs. Returns the node ids and edges.
pub fn parse_dot(src: &str) -> Result<DotGraph, String> {
    let tokens = tokenize(src)?;
    let mut p = DotParser {
        tokens,
        pos: 0,
        nodes: BTreeSet::new(),
        edges: Vec::new(),
    };
    p.graph()?;
    Ok((p.nodes, p.edges))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Sym(&'static str),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('"') => break,
                    Some('\\') => {
                        s.push(*chars.get(i + 1).ok_or("bad escape")?);
                        i += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Tok::Id(s));
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Tok::Sym("->"));
            i += 2;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Id(chars[start..i].iter().collect()));
        } else if c.is_ascii_digit() || c == '-' || c == '.' {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Id(chars[start..i].iter().collect()));
        } else {
            let sym = match c {
                '{' => "{",
                '}' => "}",
                '[' => "[",
                ']' => "]",
                ';' => ";",
                ',' => ",",
                '=' => "=",
                _ => return Err(format!("unexpected character {c:?}")),
            };
            out.push(Tok::Sym(sym));
            i += 1;
        }
    }
    Ok(out)
}

struct DotParser {
    tokens: Vec<Tok>,
    pos: usize,
    nodes: BTreeSet<String>,
    edges: Vec<(String, String)>,
}

impl DotParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(t)) if *t == s)
    }

    fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Some(Tok::Id(t)) if t.eq_ignore_ascii_case(k))
    }

    fn expect_sym(&mut self, s: &str) -> Result<(), String> {
        if self.is_sym(s) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!(
                "expected {s:?} at token {}, got {:?}",
                self.pos,
                self.peek()
            ))
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            other => Err(format!("expected ID at token {}, got {other:?}", self.pos)),
        }
    }

    fn graph(&mut self) -> Result<(), String> {
        if self.is_keyword("strict") {
            self.pos += 1;
        }
        if !(self.is_keyword("digraph") || self.is_keyword("graph")) {
            return Err("missing graph keyword".into());
        }
        self.pos += 1;
        if !self.is_sym("{") {
            self.id()?;
        }
        self.expect_sym("{")?;
        self.stmt_list()?;
        self.expect_sym("}")?;
        if self.pos != self.tokens.len() {
            return Err("trailing tokens".into());
        }
        Ok(())
    }

    fn stmt_list(&mut self) -> Result<(), String> {
        while !self.is_sym("}") {
            if self.peek().is_none() {
                return Err("unexpected end of input".into());
            }
            self.stmt()?;
            if self.is_sym(";") {
                self.pos += 1;
            }
        }
        Ok(())
    }

    fn attr_list(&mut self) -> Result<(), String> {
        while self.is_sym("[") {
            self.pos += 1;
            while !self.is_sym("]") {
                self.id()?;
                self.expect_sym("=")?;
                self.id()?;
                if self.is_sym(";") || self.is_sym(",") {
                    self.pos += 1;
                }
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn subgraph(&mut self) -> Result<(), String> {
        if self.is_keyword("subgraph") {
            self.pos += 1;
            if !self.is_sym("{") {
                self.id()?;
            }
        }
        self.expect_sym("{")?;
        self.stmt_list()?;
        self.expect_sym("}")
    }

    fn stmt(&mut self) -> Result<(), String> {
        if self.is_sym("{") || self.is_keyword("subgraph") {
            return self.subgraph();
        }
        if self.is_keyword("graph") || self.is_keyword("node") || self.is_keyword("edge") {
            self.pos += 1;
            if !self.is_sym("[") {
                return Err("attr_stmt needs an attribute list".into());
            }
            return self.attr_list();
        }
        let first = self.id()?;
        if self.is_sym("=") {
            self.pos += 1;
            self.id()?;
            return Ok(());
        }
        self.nodes.insert(first.clone());
        let mut prev = first;
        while self.is_sym("->") {
            self.pos += 1;
            let next = self.id()?;
            self.nodes.insert(next.clone());
            self.edges.push((prev, next.clone()));
            prev = next;
        }
        self.attr_list()
    }
}
