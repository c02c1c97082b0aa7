//! Line-oriented session language.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::groebner::Ideal;
use crate::modalg::{PresentedModule, Submodule};
use crate::poly::{parse_poly, PolyRing, Polynomial};

use super::ops::{ArgKind, OpSpec, OPS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Overrides applied while reading a session.
#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    pub characteristic: Option<u32>,
}

#[derive(Clone, Debug)]
pub enum Object {
    Ideal(Ideal),
    Module(PresentedModule),
    Submodule { parent: String, sub: Submodule },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Ideal(_) => "ideal",
            Object::Module(_) => "module",
            Object::Submodule { .. } => "submodule",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Task {
    pub index: usize,
    pub line: usize,
    pub op: &'static OpSpec,
    pub args: Vec<String>,
    pub flags: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub struct Session {
    pub source: String,
    pub ring: Option<PolyRing>,
    pub ring_name: Option<String>,
    pub names: Vec<String>,
    pub objects: HashMap<String, Object>,
    /// Module structure of each ideal on its given generators.
    pub ideal_modules: HashMap<String, PresentedModule>,
    pub settings: BTreeMap<String, u64>,
    pub tasks: Vec<Task>,
}

const SETTINGS: &[&str] = &["seed", "samples", "window"];

impl Session {
    pub fn module(&self, name: &str) -> Option<&PresentedModule> {
        match self.objects.get(name)? {
            Object::Module(m) => Some(m),
            Object::Ideal(_) => self.ideal_modules.get(name),
            Object::Submodule { .. } => None,
        }
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        match self.objects.get(name)? {
            Object::Ideal(i) => Some(i),
            _ => None,
        }
    }

    pub fn submodule(&self, name: &str) -> Option<(&str, &Submodule)> {
        match self.objects.get(name)? {
            Object::Submodule { parent, sub } => Some((parent, sub)),
            _ => None,
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Cursor<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.chars().count(), |k| before[k + 1..].chars().count()) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError { line, column, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => self.pos += c.len_utf8(),
                Some('#') => match self.src[self.pos..].find('\n') {
                    Some(k) => self.pos += k,
                    None => self.pos = self.src.len(),
                },
                _ => break,
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |f| format!("`{f}`"));
            Err(self.error_at(self.pos, format!("expected `{c}`, found {found}")))
        }
    }

    fn ident(&mut self) -> PResult<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if is_ident_start(c) => {}
            _ => return Err(self.error_at(start, "expected an identifier")),
        }
        while matches!(self.peek(), Some(c) if is_ident_char(c)) {
            self.pos += 1;
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let (at, w) = self.ident()?;
        if w != kw {
            return Err(self.error_at(at, format!("expected `{kw}`, found `{w}`")));
        }
        Ok(())
    }

    fn integer(&mut self) -> PResult<(usize, i64)> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map(|v| (start, v))
            .map_err(|_| self.error_at(start, "expected an integer"))
    }

    /// Raw word up to whitespace or `;`.
    fn word(&mut self) -> PResult<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !c.is_whitespace() && c != ';') {
            self.pos += self.peek().unwrap().len_utf8();
        }
        if start == self.pos {
            return Err(self.error_at(start, "expected a value"));
        }
        Ok((start, &self.src[start..self.pos]))
    }

    /// Items separated by top-level commas up to the matching `close`.
    fn delimited(&mut self, close: char) -> PResult<Vec<(usize, &'a str)>> {
        let mut items = Vec::new();
        let mut depth = 0usize;
        let mut start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < self.src.len() {
            let c = bytes[self.pos] as char;
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth > 0 => depth -= 1,
                ',' if depth == 0 => {
                    items.push((start, &self.src[start..self.pos]));
                    start = self.pos + 1;
                }
                _ if c == close && depth == 0 => {
                    let last = &self.src[start..self.pos];
                    if !last.trim().is_empty() || !items.is_empty() {
                        items.push((start, last));
                    }
                    self.pos += 1;
                    return Ok(items);
                }
                ';' => return Err(self.error_at(self.pos, format!("expected `{close}` before `;`"))),
                _ => {}
            }
            self.pos += 1;
        }
        Err(self.error_at(self.pos, format!("unclosed list, expected `{close}`")))
    }
}

/// Offset of the first non-blank character of a slice starting at `pos`.
fn trimmed(pos: usize, s: &str) -> (usize, &str) {
    let lead = s.len() - s.trim_start().len();
    (pos + lead, s.trim())
}

struct Parser<'a> {
    cur: Cursor<'a>,
    opts: ParseOptions,
    session: Session,
}

pub fn parse_session(src: &str) -> PResult<Session> {
    parse_session_with(src, &ParseOptions::default())
}

pub fn parse_session_with(src: &str, opts: &ParseOptions) -> PResult<Session> {
    let mut p = Parser {
        cur: Cursor { src, pos: 0 },
        opts: opts.clone(),
        session: Session {
            source: src.to_string(),
            ring: None,
            ring_name: None,
            names: Vec::new(),
            objects: HashMap::new(),
            ideal_modules: HashMap::new(),
            settings: BTreeMap::new(),
            tasks: Vec::new(),
        },
    };
    while !p.cur.at_end() {
        p.statement()?;
    }
    Ok(p.session)
}

impl<'a> Parser<'a> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        self.cur.error_at(pos, msg)
    }

    fn lib_err(&self, pos: usize, e: Error) -> ParseError {
        self.err(pos, e.to_string())
    }

    fn statement(&mut self) -> PResult<()> {
        let (at, kw) = self.cur.ident()?;
        match kw {
            "ring" => self.ring_decl(at)?,
            "ideal" => self.ideal()?,
            "module" => self.module()?,
            "submodule" => self.submodule()?,
            "set" => self.setting()?,
            "task" => self.task(at)?,
            other => return Err(self.err(at, format!("unknown statement `{other}`"))),
        }
        self.cur.expect(';')
    }

    fn need_ring(&self, at: usize) -> PResult<PolyRing> {
        self.session.ring.clone().ok_or_else(|| self.err(at, "no ring declared yet"))
    }

    fn new_name(&mut self) -> PResult<String> {
        let (at, name) = self.cur.ident()?;
        if self.session.objects.contains_key(name) || self.session.ring_name.as_deref() == Some(name) {
            return Err(self.err(at, format!("`{name}` is already declared")));
        }
        self.cur.expect('=')?;
        Ok(name.to_string())
    }

    fn declare(&mut self, name: String, obj: Object) {
        self.session.names.push(name.clone());
        self.session.objects.insert(name, obj);
    }

    fn poly(&self, ring: &PolyRing, pos: usize, text: &str) -> PResult<Polynomial> {
        let (at, body) = trimmed(pos, text);
        if body.is_empty() {
            return Err(self.err(at, "empty polynomial"));
        }
        parse_poly(body, ring).map_err(|e| match e {
            Error::Syntax { pos, msg } => self.err(at + pos, msg),
            other => self.lib_err(at, other),
        })
    }

    fn module_ref(&self, at: usize, name: &str) -> PResult<PresentedModule> {
        match self.session.objects.get(name) {
            None => Err(self.err(at, format!("undeclared name `{name}`"))),
            Some(obj) => self
                .session
                .module(name)
                .cloned()
                .ok_or_else(|| self.err(at, format!("`{name}` is a {}, expected a module", obj.kind()))),
        }
    }

    fn ideal_ref(&self, at: usize, name: &str) -> PResult<Ideal> {
        match self.session.objects.get(name) {
            None => Err(self.err(at, format!("undeclared name `{name}`"))),
            Some(Object::Ideal(i)) => Ok(i.clone()),
            Some(obj) => Err(self.err(at, format!("`{name}` is a {}, expected an ideal", obj.kind()))),
        }
    }
}

impl<'a> Parser<'a> {
    fn ring_decl(&mut self, at: usize) -> PResult<()> {
        if self.session.ring.is_some() {
            return Err(self.err(at, "a ring is already declared"));
        }
        let (_, name) = self.cur.ident()?;
        self.cur.expect('=')?;
        self.cur.keyword("GF")?;
        self.cur.expect('(')?;
        let (cat, p) = self.cur.integer()?;
        self.cur.expect(')')?;
        self.cur.expect('[')?;
        let vstart = self.cur.pos;
        let vars = self.cur.delimited(']')?;
        let names: Vec<&str> = vars.iter().map(|(_, v)| v.trim()).collect();
        for (pos, v) in &vars {
            let (vat, v) = trimmed(*pos, v);
            if v.is_empty() || !v.starts_with(is_ident_start) || !v.chars().all(is_ident_char) {
                return Err(self.err(vat, format!("invalid variable name `{v}`")));
            }
        }
        let p = match self.opts.characteristic {
            Some(c) => c,
            None if p > 0 && p <= u32::MAX as i64 => p as u32,
            None => return Err(self.err(cat, "characteristic out of range")),
        };
        let ring = PolyRing::grevlex(p, &names).map_err(|e| self.lib_err(vstart, e))?;
        self.session.ring = Some(ring);
        self.session.ring_name = Some(name.to_string());
        Ok(())
    }

    fn ideal(&mut self) -> PResult<()> {
        let name = self.new_name()?;
        let ring = self.need_ring(self.cur.pos)?;
        self.cur.expect('(')?;
        let items = self.cur.delimited(')')?;
        let gens = items
            .iter()
            .map(|(pos, t)| self.poly(&ring, *pos, t))
            .collect::<PResult<Vec<_>>>()?;
        let ideal = Ideal::new(&ring, gens);
        if let Ok(m) = PresentedModule::from_ideal(&ideal) {
            self.session.ideal_modules.insert(name.clone(), m);
        }
        self.declare(name, Object::Ideal(ideal));
        Ok(())
    }

    fn module(&mut self) -> PResult<()> {
        let name = self.new_name()?;
        let ring = self.need_ring(self.cur.pos)?;
        let (at, kind) = self.cur.ident()?;
        let m = match kind {
            "ideal" => {
                let (iat, iname) = self.cur.ident()?;
                let ideal = self.ideal_ref(iat, iname)?;
                PresentedModule::from_ideal(&ideal).map_err(|e| self.lib_err(iat, e))?
            }
            "free" => {
                let (rat, r) = self.cur.integer()?;
                if r < 0 {
                    return Err(self.err(rat, "rank must be nonnegative"));
                }
                self.cur.keyword("twist")?;
                let (_, d) = self.cur.integer()?;
                PresentedModule::free(&ring, r as usize, d)
            }
            "sum" => {
                self.cur.expect('(')?;
                let (aat, a) = self.cur.ident()?;
                let a = self.module_ref(aat, a)?;
                self.cur.expect(',')?;
                let (bat, b) = self.cur.ident()?;
                let b = self.module_ref(bat, b)?;
                self.cur.expect(')')?;
                a.direct_sum(&b, 0).map_err(|e| self.lib_err(at, e))?
            }
            "power_sum" => {
                self.cur.expect('(')?;
                let (iat, iname) = self.cur.ident()?;
                let ideal = self.ideal_ref(iat, iname)?;
                self.cur.expect(',')?;
                let (eat, e) = self.cur.integer()?;
                self.cur.expect(')')?;
                if e < 1 {
                    return Err(self.err(eat, "power_sum needs e >= 1"));
                }
                let base = PresentedModule::from_ideal(&ideal).map_err(|e| self.lib_err(iat, e))?;
                let mut m = base.clone();
                for _ in 1..e {
                    m = m.direct_sum(&base, 0).map_err(|e| self.lib_err(at, e))?;
                }
                m
            }
            other => return Err(self.err(at, format!("unknown module constructor `{other}`"))),
        };
        self.declare(name, Object::Module(m));
        Ok(())
    }

    fn submodule(&mut self) -> PResult<()> {
        let name = self.new_name()?;
        let ring = self.need_ring(self.cur.pos)?;
        self.cur.keyword("span")?;
        self.cur.expect('(')?;
        let (pat, parent) = self.cur.ident()?;
        let e = self.module_ref(pat, parent)?;
        let parent = parent.to_string();
        let mut gens = Vec::new();
        if self.cur.eat(';') {
            loop {
                self.cur.expect('[')?;
                let vat = self.cur.pos;
                let items = self.cur.delimited(']')?;
                if items.len() != e.ngens() {
                    return Err(self.err(vat, format!("vector has {} entries, `{parent}` has {} generators", items.len(), e.ngens())));
                }
                let v = items
                    .iter()
                    .map(|(pos, t)| self.poly(&ring, *pos, t))
                    .collect::<PResult<Vec<_>>>()?;
                gens.push((vat, v));
                if !self.cur.eat(',') {
                    break;
                }
            }
        }
        self.cur.expect(')')?;
        let at = gens.first().map_or(pat, |g| g.0);
        let sub = Submodule::new(&e, gens.into_iter().map(|g| g.1).collect()).map_err(|err| self.lib_err(at, err))?;
        self.declare(name, Object::Submodule { parent, sub });
        Ok(())
    }

    fn setting(&mut self) -> PResult<()> {
        let (at, key) = self.cur.ident()?;
        if !SETTINGS.contains(&key) {
            return Err(self.err(at, format!("unknown setting `{key}` (expected one of {})", SETTINGS.join(", "))));
        }
        self.cur.expect('=')?;
        let (vat, v) = self.cur.integer()?;
        if v < 0 {
            return Err(self.err(vat, "settings are nonnegative integers"));
        }
        self.session.settings.insert(key.to_string(), v as u64);
        Ok(())
    }

    fn task(&mut self, at: usize) -> PResult<()> {
        let line = self.cur.location(at).0;
        let (oat, op) = self.cur.ident()?;
        let spec = OPS
            .iter()
            .find(|s| s.name == op)
            .ok_or_else(|| self.err(oat, format!("unknown task `{op}`")))?;
        let mut args = Vec::new();
        let mut flags = BTreeMap::new();
        loop {
            self.cur.skip_ws();
            match self.cur.peek() {
                Some(';') | None => break,
                Some('-') if self.cur.src[self.cur.pos..].starts_with("--") => {
                    let fat = self.cur.pos;
                    self.cur.pos += 2;
                    let (kat, _) = self.cur.ident()?;
                    while matches!(self.cur.peek(), Some(c) if is_ident_char(c) || c == '-') {
                        self.cur.pos += 1;
                    }
                    let key = self.cur.src[kat..self.cur.pos].replace('-', "_");
                    if !spec.flags.contains(&key.as_str()) {
                        return Err(self.err(fat, format!("task `{op}` has no flag --{key}")));
                    }
                    let (_, v) = self.cur.word()?;
                    flags.insert(key, v.to_string());
                }
                _ => {
                    let (aat, a) = self.cur.ident()?;
                    args.push((aat, a.to_string()));
                }
            }
        }
        let required = spec.args.iter().filter(|a| !a.optional()).count();
        if args.len() < required || args.len() > spec.args.len() {
            return Err(self.err(oat, format!("task `{op}` takes {}", spec.usage())));
        }
        for ((aat, a), kind) in args.iter().zip(spec.args) {
            self.check_arg(*aat, a, *kind)?;
        }
        for key in spec.required_flags {
            if !flags.contains_key(*key) {
                return Err(self.err(oat, format!("task `{op}` requires --{key}")));
            }
        }
        let optional_source = spec.seed_unless_arg.is_some_and(|k| args.len() > k);
        if spec.randomized && !optional_source && !flags.contains_key("seed") && !self.session.settings.contains_key("seed") {
            return Err(self.err(oat, format!("task `{op}` is randomized and needs --seed (or `set seed = N;`)")));
        }
        for (key, v) in &flags {
            if key != "mode" && v.parse::<u64>().is_err() {
                return Err(self.err(oat, format!("flag --{key} expects a nonnegative integer, got `{v}`")));
            }
        }
        if spec.equigenerated {
            let (aat, a) = &args[0];
            let m = self.session.module(a).unwrap();
            if let Err(e) = m.common_degree() {
                return Err(self.lib_err(*aat, e));
            }
        }
        let index = self.session.tasks.len();
        self.session.tasks.push(Task {
            index,
            line,
            op: spec,
            args: args.into_iter().map(|a| a.1).collect(),
            flags,
        });
        Ok(())
    }

    fn check_arg(&self, at: usize, name: &str, kind: ArgKind) -> PResult<()> {
        let obj = self
            .session
            .objects
            .get(name)
            .ok_or_else(|| self.err(at, format!("undeclared name `{name}`")))?;
        let ok = match kind {
            ArgKind::Ideal => matches!(obj, Object::Ideal(_)),
            ArgKind::Module | ArgKind::OptModule => self.session.module(name).is_some(),
            ArgKind::Any => true,
            ArgKind::Submodule | ArgKind::OptSubmodule => matches!(obj, Object::Submodule { .. }),
        };
        if !ok {
            return Err(self.err(at, format!("`{name}` is a {}, expected {}", obj.kind(), kind.describe())));
        }
        Ok(())
    }
}
