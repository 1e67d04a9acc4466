//! Line-oriented session files binding names to semigroups, rings, germs,
//! and ideals.
//!
//! Grammar (one statement per line, `#` starts a comment):
//!
//! ```text
//! semigroup S = [(1,0),(1,1),(1,2)]
//! ring R = toric(S) vars x,y,z
//! ring A = affine(2) vars x,y
//! germ f = x^2 + 3/2*x*y - y^3
//! ideal I = <x^2 - y^2, x*y - z^2>
//! ```
//!
//! Expressions support `+ - * ^`, parentheses, integer and rational
//! literals, and the declared ring variables; multiplication is always
//! explicit.  When no ring is declared, germs and ideals live in a default
//! affine ring over the alphabetically sorted set of variables appearing in
//! the session.

use singulens::arith::{rat, rat_int, Rat};
use singulens::germ::Germ;
use singulens::ideal::Ideal;
use singulens::semigroup::Semigroup;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Syntax error with source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: expected {}",
            self.line, self.col, self.expected
        )
    }
}

impl std::error::Error for ParseError {}

/// Why a session failed to load: bad syntax, or a library-level rejection
/// of an otherwise well-formed statement.
#[derive(Debug, Clone, PartialEq)]
pub enum SessionFailure {
    Parse(ParseError),
    Library { line: usize, error: singulens::Error },
}

impl fmt::Display for SessionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SessionFailure::Parse(e) => e.fmt(f),
            SessionFailure::Library { line, error } => {
                write!(f, "line {line}: {error}")
            }
        }
    }
}

impl From<ParseError> for SessionFailure {
    fn from(e: ParseError) -> Self {
        SessionFailure::Parse(e)
    }
}

/// A named value in the session.
#[derive(Debug, Clone)]
pub enum Binding {
    Semigroup(Arc<Semigroup>),
    Germ { germ: Germ, vars: Vec<String> },
    Ideal { ideal: Ideal, vars: Vec<String> },
}

impl PartialEq for Binding {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Binding::Semigroup(a), Binding::Semigroup(b)) => {
                a.n() == b.n() && a.generators() == b.generators()
            }
            (
                Binding::Germ { germ: a, vars: va },
                Binding::Germ { germ: b, vars: vb },
            ) => a == b && va == vb,
            (
                Binding::Ideal { ideal: a, vars: va },
                Binding::Ideal { ideal: b, vars: vb },
            ) => a.generators() == b.generators() && va == vb,
            _ => false,
        }
    }
}

/// A declared coordinate ring: affine, or toric over a named semigroup.
#[derive(Debug, Clone)]
pub struct RingDecl {
    pub name: String,
    pub vars: Vec<String>,
    pub semigroup: Option<(String, Arc<Semigroup>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ItemKind {
    Semigroup,
    Ring,
    Germ,
    Ideal,
}

/// A parsed session: bindings in declaration order plus the declared rings.
#[derive(Debug, Clone)]
pub struct Session {
    items: Vec<(ItemKind, String)>,
    bindings: BTreeMap<String, Binding>,
    rings: Vec<RingDecl>,
}

// ---------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn tokenize_line(line_no: usize, text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            tokens.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text.parse::<i64>().map_err(|_| ParseError {
                line: line_no,
                col,
                expected: "an integer literal that fits in 64 bits".into(),
            })?;
            tokens.push(Token {
                tok: Tok::Int(value),
                col,
            });
            continue;
        }
        if "+-*^()[]<>=,/".contains(c) {
            tokens.push(Token {
                tok: Tok::Punct(c),
                col,
            });
            i += 1;
            continue;
        }
        return Err(ParseError {
            line: line_no,
            col,
            expected: format!("a statement token, found {c:?}"),
        });
    }
    Ok(tokens)
}

// ---------------------------------------------------------------------
// Statement parser
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Expr {
    Num(Rat),
    Var { name: String, line: usize, col: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var { name, .. } => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn eval(
        &self,
        vars: &[String],
        context: Option<&Arc<Semigroup>>,
    ) -> Result<Germ, SessionFailure> {
        let n = vars.len();
        let ctx = context.cloned();
        match self {
            Expr::Num(r) => Germ::constant(n, r.clone(), ctx).map_err(|error| {
                SessionFailure::Library { line: 0, error }
            }),
            Expr::Var { name, line, col } => {
                let idx = vars.iter().position(|v| v == name).ok_or(ParseError {
                    line: *line,
                    col: *col,
                    expected: format!("a declared variable, found {name}"),
                })?;
                Germ::variable(n, idx, ctx).map_err(|error| SessionFailure::Library {
                    line: *line,
                    error,
                })
            }
            Expr::Neg(a) => Ok(a.eval(vars, context)?.neg()),
            Expr::Add(a, b) => {
                let (a, b) = (a.eval(vars, context)?, b.eval(vars, context)?);
                a.add(&b).map_err(lib_err)
            }
            Expr::Sub(a, b) => {
                let (a, b) = (a.eval(vars, context)?, b.eval(vars, context)?);
                a.sub(&b).map_err(lib_err)
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.eval(vars, context)?, b.eval(vars, context)?);
                a.mul(&b).map_err(lib_err)
            }
            Expr::Pow(a, k) => a.eval(vars, context)?.pow(*k).map_err(lib_err),
        }
    }
}

fn lib_err(error: singulens::Error) -> SessionFailure {
    SessionFailure::Library { line: 0, error }
}

#[derive(Debug, Clone)]
enum RingKind {
    Toric(String),
    Affine(usize),
}

#[derive(Debug, Clone)]
enum Stmt {
    Semigroup { name: String, tuples: Vec<Vec<i64>>, line: usize },
    Ring { name: String, kind: RingKind, vars: Vec<String>, line: usize },
    Germ { name: String, expr: Expr, line: usize },
    Ideal { name: String, exprs: Vec<Expr>, line: usize },
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, expected: &str) -> ParseError {
        let col = self
            .tokens
            .get(self.pos)
            .map(|t| t.col)
            .unwrap_or_else(|| self.tokens.last().map(|t| t.col + 1).unwrap_or(1));
        ParseError {
            line: self.line,
            col,
            expected: expected.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_col(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.col).unwrap_or(1)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.tokens.get(self.pos).map(|t| &t.tok);
        self.pos += 1;
        t
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            Err(self.err(&format!("{c:?}")))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(what)),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err(what)),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.err("end of statement"))
        }
    }
}

fn parse_signed_int(c: &mut Cursor) -> Result<i64, ParseError> {
    let negative = c.eat_punct('-');
    let v = c.expect_int("an integer")?;
    Ok(if negative { -v } else { v })
}

fn parse_tuple(c: &mut Cursor) -> Result<Vec<i64>, ParseError> {
    c.expect_punct('(')?;
    let mut tuple = vec![parse_signed_int(c)?];
    while c.eat_punct(',') {
        tuple.push(parse_signed_int(c)?);
    }
    c.expect_punct(')')?;
    Ok(tuple)
}

fn parse_var_list(c: &mut Cursor) -> Result<Vec<String>, ParseError> {
    let mut vars = vec![c.expect_ident("a variable name")?];
    while c.eat_punct(',') {
        vars.push(c.expect_ident("a variable name")?);
    }
    Ok(vars)
}

fn parse_expr(c: &mut Cursor) -> Result<Expr, ParseError> {
    let mut lhs = parse_term(c)?;
    loop {
        if c.eat_punct('+') {
            lhs = Expr::Add(Box::new(lhs), Box::new(parse_term(c)?));
        } else if c.eat_punct('-') {
            lhs = Expr::Sub(Box::new(lhs), Box::new(parse_term(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn parse_term(c: &mut Cursor) -> Result<Expr, ParseError> {
    let mut lhs = parse_factor(c)?;
    while c.eat_punct('*') {
        lhs = Expr::Mul(Box::new(lhs), Box::new(parse_factor(c)?));
    }
    Ok(lhs)
}

fn parse_factor(c: &mut Cursor) -> Result<Expr, ParseError> {
    let mut base = parse_atom(c)?;
    while c.eat_punct('^') {
        let col = c.peek_col();
        let e = c.expect_int("a nonnegative integer exponent")?;
        let e = u32::try_from(e).map_err(|_| ParseError {
            line: c.line,
            col,
            expected: "a nonnegative integer exponent".into(),
        })?;
        base = Expr::Pow(Box::new(base), e);
    }
    Ok(base)
}

fn parse_atom(c: &mut Cursor) -> Result<Expr, ParseError> {
    if c.eat_punct('-') {
        return Ok(Expr::Neg(Box::new(parse_atom(c)?)));
    }
    if c.eat_punct('(') {
        let inner = parse_expr(c)?;
        c.expect_punct(')')?;
        return Ok(inner);
    }
    let col = c.peek_col();
    match c.bump() {
        Some(Tok::Int(v)) => {
            let numer = *v;
            if c.eat_punct('/') {
                let dcol = c.peek_col();
                let denom = c.expect_int("a denominator")?;
                if denom == 0 {
                    return Err(ParseError {
                        line: c.line,
                        col: dcol,
                        expected: "a nonzero denominator".into(),
                    });
                }
                Ok(Expr::Num(rat(numer, denom)))
            } else {
                Ok(Expr::Num(rat_int(numer)))
            }
        }
        Some(Tok::Ident(name)) => Ok(Expr::Var {
            name: name.clone(),
            line: c.line,
            col,
        }),
        _ => Err(ParseError {
            line: c.line,
            col,
            expected: "a literal, variable, or parenthesized expression".into(),
        }),
    }
}

fn parse_stmt(line_no: usize, tokens: &[Token]) -> Result<Stmt, ParseError> {
    let mut c = Cursor {
        tokens,
        pos: 0,
        line: line_no,
    };
    let keyword = c.expect_ident("one of semigroup, ring, germ, ideal")?;
    match keyword.as_str() {
        "semigroup" => {
            let name = c.expect_ident("a semigroup name")?;
            c.expect_punct('=')?;
            c.expect_punct('[')?;
            let mut tuples = vec![parse_tuple(&mut c)?];
            while c.eat_punct(',') {
                let next = parse_tuple(&mut c)?;
                if next.len() != tuples[0].len() {
                    return Err(c.err("a tuple of the same arity"));
                }
                tuples.push(next);
            }
            c.expect_punct(']')?;
            c.expect_end()?;
            Ok(Stmt::Semigroup { name, tuples, line: line_no })
        }
        "ring" => {
            let name = c.expect_ident("a ring name")?;
            c.expect_punct('=')?;
            let kind_word = c.expect_ident("toric or affine")?;
            let kind = match kind_word.as_str() {
                "toric" => {
                    c.expect_punct('(')?;
                    let s = c.expect_ident("a semigroup name")?;
                    c.expect_punct(')')?;
                    RingKind::Toric(s)
                }
                "affine" => {
                    c.expect_punct('(')?;
                    let col = c.peek_col();
                    let n = c.expect_int("a positive dimension")?;
                    if n < 1 {
                        return Err(ParseError {
                            line: line_no,
                            col,
                            expected: "a positive dimension".into(),
                        });
                    }
                    c.expect_punct(')')?;
                    RingKind::Affine(n as usize)
                }
                _ => return Err(c.err("toric or affine")),
            };
            let vars_word = c.expect_ident("the keyword vars")?;
            if vars_word != "vars" {
                return Err(c.err("the keyword vars"));
            }
            let vars = parse_var_list(&mut c)?;
            c.expect_end()?;
            Ok(Stmt::Ring { name, kind, vars, line: line_no })
        }
        "germ" => {
            let name = c.expect_ident("a germ name")?;
            c.expect_punct('=')?;
            let expr = parse_expr(&mut c)?;
            c.expect_end()?;
            Ok(Stmt::Germ { name, expr, line: line_no })
        }
        "ideal" => {
            let name = c.expect_ident("an ideal name")?;
            c.expect_punct('=')?;
            c.expect_punct('<')?;
            let mut exprs = vec![parse_expr(&mut c)?];
            while c.eat_punct(',') {
                exprs.push(parse_expr(&mut c)?);
            }
            c.expect_punct('>')?;
            c.expect_end()?;
            Ok(Stmt::Ideal { name, exprs, line: line_no })
        }
        _ => Err(ParseError {
            line: line_no,
            col: tokens[0].col,
            expected: "one of semigroup, ring, germ, ideal".into(),
        }),
    }
}

// ---------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------

fn at_line(line: usize, failure: SessionFailure) -> SessionFailure {
    match failure {
        SessionFailure::Library { line: 0, error } => {
            SessionFailure::Library { line, error }
        }
        other => other,
    }
}

/// Parse a full session file.
pub fn parse_session(text: &str) -> Result<Session, SessionFailure> {
    let mut stmts = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens = tokenize_line(line_no, raw)?;
        if tokens.is_empty() {
            continue;
        }
        stmts.push(parse_stmt(line_no, &tokens)?);
    }

    // Unique names across semigroups, rings, germs, and ideals.
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for stmt in &stmts {
        let (name, line) = match stmt {
            Stmt::Semigroup { name, line, .. }
            | Stmt::Ring { name, line, .. }
            | Stmt::Germ { name, line, .. }
            | Stmt::Ideal { name, line, .. } => (name.as_str(), *line),
        };
        if seen.insert(name, line).is_some() {
            return Err(SessionFailure::Parse(ParseError {
                line,
                col: 1,
                expected: format!("a fresh name ({name} is already bound)"),
            }));
        }
    }

    // The default ring, used when the session declares no ring at all:
    // affine space over the alphabetically sorted variables of the session.
    let has_rings = stmts.iter().any(|s| matches!(s, Stmt::Ring { .. }));
    let default_ring = if has_rings {
        None
    } else {
        let mut vars = Vec::new();
        for stmt in &stmts {
            match stmt {
                Stmt::Germ { expr, .. } => expr.collect_vars(&mut vars),
                Stmt::Ideal { exprs, .. } => {
                    for e in exprs {
                        e.collect_vars(&mut vars);
                    }
                }
                _ => {}
            }
        }
        vars.sort();
        Some(RingDecl {
            name: String::new(),
            vars,
            semigroup: None,
        })
    };

    let mut session = Session {
        items: Vec::new(),
        bindings: BTreeMap::new(),
        rings: Vec::new(),
    };
    let mut semigroups: BTreeMap<String, Arc<Semigroup>> = BTreeMap::new();

    for stmt in &stmts {
        match stmt {
            Stmt::Semigroup { name, tuples, line } => {
                let n = tuples[0].len();
                let sg = Semigroup::new(n, tuples.clone())
                    .map_err(|error| SessionFailure::Library { line: *line, error })?;
                semigroups.insert(name.clone(), sg.clone());
                session.items.push((ItemKind::Semigroup, name.clone()));
                session.bindings.insert(name.clone(), Binding::Semigroup(sg));
            }
            Stmt::Ring { name, kind, vars, line } => {
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(SessionFailure::Parse(ParseError {
                            line: *line,
                            col: 1,
                            expected: format!("distinct variables ({v} repeats)"),
                        }));
                    }
                }
                let semigroup = match kind {
                    RingKind::Toric(sname) => {
                        let sg = semigroups.get(sname).ok_or_else(|| ParseError {
                            line: *line,
                            col: 1,
                            expected: format!("a declared semigroup, found {sname}"),
                        })?;
                        if vars.len() != sg.r() {
                            return Err(SessionFailure::Parse(ParseError {
                                line: *line,
                                col: 1,
                                expected: format!(
                                    "{} variables to match the semigroup generators",
                                    sg.r()
                                ),
                            }));
                        }
                        Some((sname.clone(), sg.clone()))
                    }
                    RingKind::Affine(n) => {
                        if vars.len() != *n {
                            return Err(SessionFailure::Parse(ParseError {
                                line: *line,
                                col: 1,
                                expected: format!("{n} variables to match the dimension"),
                            }));
                        }
                        None
                    }
                };
                session.items.push((ItemKind::Ring, name.clone()));
                session.rings.push(RingDecl {
                    name: name.clone(),
                    vars: vars.clone(),
                    semigroup,
                });
            }
            Stmt::Germ { name, expr, line } => {
                let mut used = Vec::new();
                expr.collect_vars(&mut used);
                let ring = resolve_ring(&session.rings, &default_ring, &used, *line)?;
                let context = ring.semigroup.as_ref().map(|(_, s)| s);
                let germ = expr
                    .eval(&ring.vars, context)
                    .map_err(|f| at_line(*line, f))?;
                session.items.push((ItemKind::Germ, name.clone()));
                session.bindings.insert(
                    name.clone(),
                    Binding::Germ { germ, vars: ring.vars.clone() },
                );
            }
            Stmt::Ideal { name, exprs, line } => {
                let mut used = Vec::new();
                for e in exprs {
                    e.collect_vars(&mut used);
                }
                let ring = resolve_ring(&session.rings, &default_ring, &used, *line)?;
                let context = ring.semigroup.as_ref().map(|(_, s)| s);
                let gens = exprs
                    .iter()
                    .map(|e| e.eval(&ring.vars, context))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|f| at_line(*line, f))?;
                let ideal = Ideal::new(gens)
                    .map_err(|error| SessionFailure::Library { line: *line, error })?;
                session.items.push((ItemKind::Ideal, name.clone()));
                session.bindings.insert(
                    name.clone(),
                    Binding::Ideal { ideal, vars: ring.vars.clone() },
                );
            }
        }
    }
    Ok(session)
}

fn resolve_ring<'a>(
    rings: &'a [RingDecl],
    default_ring: &'a Option<RingDecl>,
    used: &[String],
    line: usize,
) -> Result<&'a RingDecl, SessionFailure> {
    if let Some(default) = default_ring {
        return Ok(default);
    }
    let matching: Vec<&RingDecl> = rings
        .iter()
        .filter(|r| used.iter().all(|v| r.vars.contains(v)))
        .collect();
    match matching.len() {
        1 => Ok(matching[0]),
        0 => Err(SessionFailure::Parse(ParseError {
            line,
            col: 1,
            expected: "variables contained in one declared ring".into(),
        })),
        _ => Err(SessionFailure::Parse(ParseError {
            line,
            col: 1,
            expected: "variables contained in exactly one ring (several match)".into(),
        })),
    }
}

// ---------------------------------------------------------------------
// Session surface
// ---------------------------------------------------------------------

impl Session {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    pub fn rings(&self) -> &[RingDecl] {
        &self.rings
    }

    /// Names of all bindings in declaration order (rings excluded: they are
    /// not addressable by commands).
    pub fn binding_names(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|(kind, _)| *kind != ItemKind::Ring)
            .map(|(_, name)| name.as_str())
            .collect()
    }

    /// Print the session back in its own grammar.  Re-parsing the result
    /// reproduces the bindings exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (kind, name) in &self.items {
            match kind {
                ItemKind::Semigroup => {
                    if let Some(Binding::Semigroup(sg)) = self.bindings.get(name) {
                        let tuples: Vec<String> = sg
                            .generators()
                            .iter()
                            .map(|g| {
                                let entries: Vec<String> =
                                    g.iter().map(|e| e.to_string()).collect();
                                format!("({})", entries.join(","))
                            })
                            .collect();
                        out.push_str(&format!(
                            "semigroup {name} = [{}]\n",
                            tuples.join(",")
                        ));
                    }
                }
                ItemKind::Ring => {
                    if let Some(ring) = self.rings.iter().find(|r| &r.name == name) {
                        let head = match &ring.semigroup {
                            Some((sname, _)) => format!("toric({sname})"),
                            None => format!("affine({})", ring.vars.len()),
                        };
                        out.push_str(&format!(
                            "ring {name} = {head} vars {}\n",
                            ring.vars.join(",")
                        ));
                    }
                }
                ItemKind::Germ => {
                    if let Some(Binding::Germ { germ, vars }) = self.bindings.get(name) {
                        out.push_str(&format!(
                            "germ {name} = {}\n",
                            germ.display_with_names(vars)
                        ));
                    }
                }
                ItemKind::Ideal => {
                    if let Some(Binding::Ideal { ideal, vars }) = self.bindings.get(name) {
                        let gens: Vec<String> = ideal
                            .generators()
                            .iter()
                            .map(|g| g.display_with_names(vars))
                            .collect();
                        out.push_str(&format!("ideal {name} = <{}>\n", gens.join(", ")));
                    }
                }
            }
        }
        out
    }

    #[cfg(test)]
    pub fn bindings_equal(&self, other: &Session) -> bool {
        self.items.len() == other.items.len()
            && self
                .items
                .iter()
                .zip(&other.items)
                .all(|(a, b)| a == b)
            && self.bindings == other.bindings
    }
}
