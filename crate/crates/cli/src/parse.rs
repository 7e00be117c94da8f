//! Line-oriented session parser. Every error carries the line and column
//! it was found at; the first error wins and parsing stops there.

use crate::session::{
    BoxDecl, DeclKind, ModuleDecl, ModuleKind, RingDecl, Session, SopDecl, TaskDecl, TaskKind,
};
use parafrac_core::submodule::canonical_order;
use parafrac_core::FreeElement;
use parafrac_core::{idealize, FPModule, Field, Monomial, MonomialOrder, PolyRing, Polynomial};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    DotDot,
}

struct Cursor {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            col,
            msg: msg.into(),
        })
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .or_else(|| self.toks.last().map(|&(_, c)| c + 1))
            .unwrap_or(1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(self.here(), format!("expected `{}`", c))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        let col = self.here();
        match self.bump() {
            Some((Tok::Ident(s), c)) => Ok((s, c)),
            _ => self.err(col, format!("expected {}", what)),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(i64, usize), ParseError> {
        let col = self.here();
        match self.bump() {
            Some((Tok::Int(n), c)) => Ok((n, c)),
            _ => self.err(col, format!("expected {}", what)),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let col = self.here();
        match self.bump() {
            Some((Tok::Ident(s), _)) if s == kw => Ok(()),
            _ => self.err(col, format!("expected `{}`", kw)),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.err(self.here(), "unexpected trailing input")
        }
    }
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = line.chars().collect();
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
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n: i64 = text.parse().map_err(|_| ParseError {
                line: lineno,
                col,
                msg: format!("integer `{}` is out of range", text),
            })?;
            toks.push((Tok::Int(n), col));
            continue;
        }
        if c == '.' {
            if chars.get(i + 1) == Some(&'.') {
                toks.push((Tok::DotDot, col));
                i += 2;
                continue;
            }
            return Err(ParseError {
                line: lineno,
                col,
                msg: "stray `.` (ranges are written `1..4`)".into(),
            });
        }
        if "()[]=,;+-*/^".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
            continue;
        }
        return Err(ParseError {
            line: lineno,
            col,
            msg: format!("unexpected character `{}`", c),
        });
    }
    Ok(toks)
}

/// expr := term (('+'|'-') term)*
fn parse_expr(cur: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let mut acc = parse_term(cur, ring)?;
    loop {
        if cur.eat_sym('+') {
            let t = parse_term(cur, ring)?;
            acc = ring.add(&acc, &t);
        } else if cur.eat_sym('-') {
            let t = parse_term(cur, ring)?;
            let neg = ring.mul(&constant(ring, -1), &t);
            acc = ring.add(&acc, &neg);
        } else {
            return Ok(acc);
        }
    }
}

/// term := factor (('*'|'/') factor)*; division only by constants
fn parse_term(cur: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let mut acc = parse_factor(cur, ring)?;
    loop {
        if cur.eat_sym('*') {
            let f = parse_factor(cur, ring)?;
            acc = ring.mul(&acc, &f);
        } else if cur.eat_sym('/') {
            let col = cur.here();
            let f = parse_factor(cur, ring)?;
            let c = match constant_value(&f) {
                Some(c) if !ring.field().is_zero(&c) => c,
                Some(_) => return cur.err(col, "division by zero"),
                None => return cur.err(col, "can only divide by a nonzero constant"),
            };
            let inv = ring.field().inv(&c);
            acc = ring.mul(&acc, &ring.from_terms(vec![(inv, unit_monomial(ring))]));
        } else {
            return Ok(acc);
        }
    }
}

/// factor := atom ('^' INT)?
fn parse_factor(cur: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let base = parse_atom(cur, ring)?;
    if cur.eat_sym('^') {
        let (n, col) = cur.expect_int("an exponent")?;
        if !(0..=u32::MAX as i64).contains(&n) {
            return cur.err(col, format!("exponent {} is out of range", n));
        }
        return Ok(ring.pow(&base, n as u32));
    }
    Ok(base)
}

/// atom := INT | IDENT | '(' expr ')' | '-' factor
fn parse_atom(cur: &mut Cursor, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let col = cur.here();
    match cur.bump() {
        Some((Tok::Int(n), _)) => Ok(constant(ring, n)),
        Some((Tok::Ident(v), c)) => match ring.vars().iter().position(|w| *w == v) {
            Some(i) => Ok(ring.var(i)),
            None => cur.err(c, format!("unknown variable `{}`", v)),
        },
        Some((Tok::Sym('('), _)) => {
            let e = parse_expr(cur, ring)?;
            cur.expect_sym(')')?;
            Ok(e)
        }
        Some((Tok::Sym('-'), _)) => {
            let f = parse_factor(cur, ring)?;
            Ok(ring.mul(&constant(ring, -1), &f))
        }
        _ => cur.err(col, "expected a polynomial"),
    }
}

fn unit_monomial(ring: &PolyRing) -> Monomial {
    Monomial::var_power(ring.nvars(), 0, 0)
}

fn constant(ring: &PolyRing, n: i64) -> Polynomial {
    if n == 0 {
        return ring.zero();
    }
    ring.from_terms(vec![(ring.field().from_i64(n), unit_monomial(ring))])
}

fn constant_value(f: &Polynomial) -> Option<parafrac_core::Coeff> {
    let ts = f.terms();
    if ts.len() == 1 && ts[0].1.exps().iter().all(|&e| e == 0) {
        return Some(ts[0].0.clone());
    }
    None
}

fn parse_expr_list(
    cur: &mut Cursor,
    ring: &Arc<PolyRing>,
    stop: char,
) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    if cur.peek() == Some(&Tok::Sym(stop)) {
        return Ok(out);
    }
    loop {
        out.push(parse_expr(cur, ring)?);
        if !cur.eat_sym(',') {
            return Ok(out);
        }
    }
}

fn parse_int_list(cur: &mut Cursor) -> Result<Vec<i64>, ParseError> {
    cur.expect_sym('[')?;
    let mut out = Vec::new();
    if cur.eat_sym(']') {
        return Ok(out);
    }
    loop {
        let mut sign = 1;
        if cur.eat_sym('-') {
            sign = -1;
        }
        let (n, _) = cur.expect_int("an integer")?;
        out.push(sign * n);
        if cur.eat_sym(']') {
            return Ok(out);
        }
        cur.expect_sym(',')?;
    }
}

fn check_homogeneous(
    cur: &Cursor,
    col: usize,
    what: &str,
    polys: &[Polynomial],
) -> Result<(), ParseError> {
    for p in polys {
        if p.is_zero() {
            return cur.err(col, format!("{} contains the zero polynomial", what));
        }
        if !p.is_homogeneous() {
            return cur.err(
                col,
                format!("{} contains a non-homogeneous polynomial", what),
            );
        }
    }
    Ok(())
}

/// One polynomial expression on its own, for command-line arguments.
pub fn parse_poly_arg(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text, 1)?;
    let mut cur = Cursor {
        toks,
        pos: 0,
        line: 1,
    };
    let p = parse_expr(&mut cur, ring)?;
    cur.expect_end()?;
    Ok(p)
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut s = Session::default();
    let mut names: Vec<String> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let toks = tokenize(raw, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            toks,
            pos: 0,
            line: lineno,
        };
        let (head, head_col) = cur.expect_ident("a declaration keyword")?;
        match head.as_str() {
            "ring" => parse_ring(&mut cur, &mut s, &mut names)?,
            "module" => parse_module(&mut cur, &mut s, &mut names)?,
            "sop" => parse_sop(&mut cur, &mut s, &mut names)?,
            "box" => parse_box(&mut cur, &mut s, &mut names)?,
            "task" => parse_task(&mut cur, &mut s, &mut names)?,
            other => {
                return cur.err(
                    head_col,
                    format!(
                        "unknown declaration `{}` (expected ring, module, sop, box or task)",
                        other
                    ),
                )
            }
        }
    }
    Ok(s)
}

fn declare(
    cur: &Cursor,
    col: usize,
    names: &mut Vec<String>,
    name: &str,
) -> Result<(), ParseError> {
    if names.iter().any(|n| n == name) {
        return cur.err(col, format!("name `{}` is already declared", name));
    }
    names.push(name.to_string());
    Ok(())
}

fn parse_ring(
    cur: &mut Cursor,
    s: &mut Session,
    names: &mut Vec<String>,
) -> Result<(), ParseError> {
    let (name, name_col) = cur.expect_ident("a ring name")?;
    cur.expect_sym('=')?;
    cur.expect_keyword("poly")?;
    cur.expect_sym('(')?;
    cur.expect_keyword("char")?;
    cur.expect_sym('=')?;
    let (ch, ch_col) = cur.expect_int("a characteristic")?;
    if ch < 0 {
        return cur.err(ch_col, "characteristic must be nonnegative");
    }
    cur.expect_sym(',')?;
    cur.expect_keyword("vars")?;
    cur.expect_sym('=')?;
    cur.expect_sym('[')?;
    let mut vars = Vec::new();
    loop {
        let (v, _) = cur.expect_ident("a variable name")?;
        vars.push(v);
        if cur.eat_sym(']') {
            break;
        }
        cur.expect_sym(',')?;
    }
    cur.expect_sym(')')?;
    cur.expect_end()?;

    declare(cur, name_col, names, &name)?;
    let field = Field::new(ch as u64).map_err(|e| ParseError {
        line: cur.line,
        col: ch_col,
        msg: e,
    })?;
    let handle =
        PolyRing::new(field, vars.clone(), MonomialOrder::GrevLex).map_err(|e| ParseError {
            line: cur.line,
            col: name_col,
            msg: e,
        })?;
    s.order.push((DeclKind::Ring, s.rings.len()));
    s.rings.push(RingDecl {
        name,
        char_p: ch as u64,
        vars,
        handle,
    });
    Ok(())
}

fn lookup_ring<'a>(
    cur: &Cursor,
    s: &'a Session,
    name: &str,
    col: usize,
) -> Result<&'a RingDecl, ParseError> {
    match s.ring(name) {
        Some(r) => Ok(r),
        None => Err(ParseError {
            line: cur.line,
            col,
            msg: format!("unknown ring `{}`", name),
        }),
    }
}

fn parse_module(
    cur: &mut Cursor,
    s: &mut Session,
    names: &mut Vec<String>,
) -> Result<(), ParseError> {
    let (name, name_col) = cur.expect_ident("a module name")?;
    cur.expect_sym('=')?;
    let (kind_word, kind_col) = cur.expect_ident("a module constructor")?;
    cur.expect_sym('(')?;
    let (ring_name, ring_col) = cur.expect_ident("a ring name")?;

    let build_err = |cur: &Cursor, e: parafrac_core::EngineError| ParseError {
        line: cur.line,
        col: kind_col,
        msg: e.to_string(),
    };

    let decl = match kind_word.as_str() {
        "cyclic" | "ideal_as_module" => {
            let ring = lookup_ring(cur, s, &ring_name, ring_col)?.handle.clone();
            let gens = if cur.eat_sym(';') {
                parse_expr_list(cur, &ring, ')')?
            } else {
                Vec::new()
            };
            cur.expect_sym(')')?;
            check_homogeneous(cur, kind_col, "the generator list", &gens)?;
            if kind_word == "cyclic" {
                let module = FPModule::cyclic(ring, &gens).map_err(|e| build_err(cur, e))?;
                ModuleDecl {
                    name: name.clone(),
                    ring_name,
                    kind: ModuleKind::Cyclic(gens),
                    module,
                    ext: None,
                }
            } else {
                if gens.is_empty() {
                    return cur.err(kind_col, "ideal_as_module needs at least one generator");
                }
                let module =
                    FPModule::ideal_as_module(ring, &gens).map_err(|e| build_err(cur, e))?;
                ModuleDecl {
                    name: name.clone(),
                    ring_name,
                    kind: ModuleKind::IdealAsModule(gens),
                    module,
                    ext: None,
                }
            }
        }
        "presentation" => {
            let ring = lookup_ring(cur, s, &ring_name, ring_col)?.handle.clone();
            cur.expect_sym(';')?;
            cur.expect_keyword("degrees")?;
            cur.expect_sym('=')?;
            let degrees = parse_int_list(cur)?;
            if degrees.is_empty() {
                return cur.err(kind_col, "presentation needs at least one generator degree");
            }
            cur.expect_sym(';')?;
            cur.expect_keyword("rels")?;
            cur.expect_sym('=')?;
            cur.expect_sym('[')?;
            let mut rels: Vec<Vec<Polynomial>> = Vec::new();
            if !cur.eat_sym(']') {
                loop {
                    cur.expect_sym('[')?;
                    let row = parse_expr_list(cur, &ring, ']')?;
                    cur.expect_sym(']')?;
                    if row.len() != degrees.len() {
                        return cur.err(
                            kind_col,
                            format!(
                                "relation has {} components but there are {} generators",
                                row.len(),
                                degrees.len()
                            ),
                        );
                    }
                    rels.push(row);
                    if cur.eat_sym(']') {
                        break;
                    }
                    cur.expect_sym(',')?;
                }
            }
            cur.expect_sym(')')?;
            let ord = canonical_order(&ring);
            let elems: Vec<FreeElement> = rels
                .iter()
                .map(|row| FreeElement::from_components(&ring, &ord, row))
                .collect();
            let module = FPModule::presentation(ring, degrees.clone(), elems)
                .map_err(|e| build_err(cur, e))?;
            ModuleDecl {
                name: name.clone(),
                ring_name,
                kind: ModuleKind::Presentation { degrees, rels },
                module,
                ext: None,
            }
        }
        "idealization" => {
            cur.expect_sym(';')?;
            let (base, base_col) = cur.expect_ident("a module name")?;
            cur.expect_sym(')')?;
            if base == name {
                return cur.err(base_col, format!("module `{}` cannot be built from itself", name));
            }
            let base_decl = match s.module(&base) {
                Some(m) => m.clone(),
                None => return cur.err(base_col, format!("unknown module `{}`", base)),
            };
            lookup_ring(cur, s, &ring_name, ring_col)?;
            if base_decl.ring_name != ring_name {
                return cur.err(
                    base_col,
                    format!("module `{}` lives over `{}`, not `{}`", base, base_decl.ring_name, ring_name),
                );
            }
            let ext = idealize(&base_decl.module).map_err(|e| build_err(cur, e))?;
            ModuleDecl {
                name: name.clone(),
                ring_name,
                kind: ModuleKind::Idealization { base },
                module: ext.module.clone(),
                ext: Some(ext),
            }
        }
        other => {
            return cur.err(
                kind_col,
                format!(
                    "unknown module constructor `{}` (expected cyclic, ideal_as_module, presentation or idealization)",
                    other
                ),
            )
        }
    };
    cur.expect_end()?;
    declare(cur, name_col, names, &name)?;
    s.order.push((DeclKind::Module, s.modules.len()));
    s.modules.push(decl);
    Ok(())
}

fn parse_sop(cur: &mut Cursor, s: &mut Session, names: &mut Vec<String>) -> Result<(), ParseError> {
    let (name, name_col) = cur.expect_ident("a sop name")?;
    cur.expect_keyword("on")?;
    let (module, module_col) = cur.expect_ident("a module name")?;
    cur.expect_sym('=')?;
    cur.expect_sym('[')?;
    let ring = match s.module(&module) {
        Some(m) => m.module.ring().clone(),
        None => return cur.err(module_col, format!("unknown module `{}`", module)),
    };
    let polys = parse_expr_list(cur, &ring, ']')?;
    cur.expect_sym(']')?;
    cur.expect_end()?;
    if polys.is_empty() {
        return cur.err(name_col, "a sop needs at least one element");
    }
    check_homogeneous(cur, name_col, "the sop", &polys)?;
    declare(cur, name_col, names, &name)?;
    s.order.push((DeclKind::Sop, s.sops.len()));
    s.sops.push(SopDecl {
        name,
        module,
        polys,
    });
    Ok(())
}

fn parse_box(cur: &mut Cursor, s: &mut Session, names: &mut Vec<String>) -> Result<(), ParseError> {
    let (name, name_col) = cur.expect_ident("a box name")?;
    cur.expect_sym('=')?;
    cur.expect_sym('[')?;
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    loop {
        let (l, lc) = cur.expect_int("a range start")?;
        cur.expect_sym_range(lc)?;
        let (h, hc) = cur.expect_int("a range end")?;
        if l < 1 {
            return cur.err(lc, "exponents start at 1");
        }
        if h < l {
            return cur.err(hc, "range end is below its start");
        }
        if h > u32::MAX as i64 {
            return cur.err(hc, "range end is out of range");
        }
        lo.push(l as u32);
        hi.push(h as u32);
        if cur.eat_sym(']') {
            break;
        }
        cur.expect_sym(',')?;
    }
    cur.expect_end()?;
    declare(cur, name_col, names, &name)?;
    s.order.push((DeclKind::Box_, s.boxes.len()));
    s.boxes.push(BoxDecl { name, lo, hi });
    Ok(())
}

impl Cursor {
    fn expect_sym_range(&mut self, col: usize) -> Result<(), ParseError> {
        match self.bump() {
            Some((Tok::DotDot, _)) => Ok(()),
            _ => self.err(col, "expected `..` in a range"),
        }
    }
}

fn parse_task(
    cur: &mut Cursor,
    s: &mut Session,
    names: &mut Vec<String>,
) -> Result<(), ParseError> {
    let (name, name_col) = cur.expect_ident("a task name")?;
    cur.expect_sym('=')?;
    let (kind_word, kind_col) = cur.expect_ident("a task kind")?;
    cur.expect_sym('(')?;

    let module_arg = |cur: &mut Cursor, s: &Session| -> Result<String, ParseError> {
        let (m, c) = cur.expect_ident("a module name")?;
        if s.module(&m).is_none() {
            return Err(ParseError {
                line: cur.line,
                col: c,
                msg: format!("unknown module `{}`", m),
            });
        }
        Ok(m)
    };
    let sop_arg = |cur: &mut Cursor, s: &Session, module: &str| -> Result<String, ParseError> {
        let (x, c) = cur.expect_ident("a sop name")?;
        match s.sop(&x) {
            None => Err(ParseError {
                line: cur.line,
                col: c,
                msg: format!("unknown sop `{}`", x),
            }),
            Some(d) if d.module != module => Err(ParseError {
                line: cur.line,
                col: c,
                msg: format!(
                    "sop `{}` is declared on `{}`, not `{}`",
                    x, d.module, module
                ),
            }),
            Some(_) => Ok(x),
        }
    };
    let box_arg = |cur: &mut Cursor, s: &Session| -> Result<String, ParseError> {
        let (b, c) = cur.expect_ident("a box name")?;
        if s.box_(&b).is_none() {
            return Err(ParseError {
                line: cur.line,
                col: c,
                msg: format!("unknown box `{}`", b),
            });
        }
        Ok(b)
    };
    let emax_arg = |cur: &mut Cursor, default: u32| -> Result<u32, ParseError> {
        if cur.eat_sym(';') {
            cur.expect_keyword("emax")?;
            cur.expect_sym('=')?;
            let (n, c) = cur.expect_int("an exponent bound")?;
            if !(1..=24).contains(&n) {
                return Err(ParseError {
                    line: cur.line,
                    col: c,
                    msg: "emax must lie in 1..=24".into(),
                });
            }
            Ok(n as u32)
        } else {
            Ok(default)
        }
    };

    let kind = match kind_word.as_str() {
        "gb" => TaskKind::Gb {
            module: module_arg(cur, s)?,
        },
        "length" => TaskKind::Length {
            module: module_arg(cur, s)?,
        },
        "aideals" => TaskKind::AIdeals {
            module: module_arg(cur, s)?,
        },
        "psop" => TaskKind::Psop {
            module: module_arg(cur, s)?,
        },
        "nf" => {
            let module = module_arg(cur, s)?;
            cur.expect_sym(';')?;
            let ring = s.module(&module).expect("checked").module.ring().clone();
            let expr = parse_expr(cur, &ring)?;
            TaskKind::Nf { module, expr }
        }
        "mult" | "unmixed" | "limclo" => {
            let module = module_arg(cur, s)?;
            cur.expect_sym(',')?;
            let sop = sop_arg(cur, s, &module)?;
            match kind_word.as_str() {
                "mult" => TaskKind::Mult { module, sop },
                "unmixed" => TaskKind::Unmixed { module, sop },
                _ => {
                    let powers = if cur.eat_sym(';') {
                        cur.expect_keyword("powers")?;
                        cur.expect_sym('=')?;
                        let ns = parse_int_list(cur)?;
                        let mut out = Vec::new();
                        for n in ns {
                            if !(1..=u32::MAX as i64).contains(&n) {
                                return cur.err(kind_col, "powers must be positive");
                            }
                            out.push(n as u32);
                        }
                        Some(out)
                    } else {
                        None
                    };
                    TaskKind::Limclo {
                        module,
                        sop,
                        powers,
                    }
                }
            }
        }
        "table" | "ddcheck" => {
            let module = module_arg(cur, s)?;
            cur.expect_sym(',')?;
            let sop = sop_arg(cur, s, &module)?;
            cur.expect_sym(',')?;
            let box_name = box_arg(cur, s)?;
            if kind_word == "table" {
                TaskKind::Table {
                    module,
                    sop,
                    box_name,
                }
            } else {
                TaskKind::DdCheck {
                    module,
                    sop,
                    box_name,
                }
            }
        }
        "hk" => TaskKind::Hk {
            module: module_arg(cur, s)?,
            e_max: emax_arg(cur, 4)?,
        },
        "bridge" => TaskKind::Bridge {
            module: module_arg(cur, s)?,
            e_max: emax_arg(cur, 3)?,
        },
        other => {
            return cur.err(kind_col, format!("unknown task kind `{}`", other));
        }
    };
    cur.expect_sym(')')?;
    cur.expect_end()?;
    declare(cur, name_col, names, &name)?;
    s.order.push((DeclKind::Task, s.tasks.len()));
    s.tasks.push(TaskDecl { name, kind });
    Ok(())
}
