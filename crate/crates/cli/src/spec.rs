//! The line-oriented spec format: parser, validation and canonical renderer.
//!
//! Sections must appear in dependency order: `[lattice]` first, then
//! `[tensor]` and the optional `[cotensor]`, then spaces, and maps and
//! filters after the spaces they name. See `docs/spec-format.md`.

use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown {kind} `{name}`")]
    UnknownName {
        line: usize,
        col: usize,
        kind: &'static str,
        name: String,
    },
    #[error("{line}:{col}: table `{table}` is not total: missing {missing}")]
    NonTotalTable {
        line: usize,
        col: usize,
        table: String,
        missing: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableSpec {
    Preset(String),
    /// `(a, b, a·b)` rows in source order.
    Rows(Vec<(String, String, String)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologyKind {
    Discrete,
    Indiscrete,
    /// Every fuzzy set graded explicitly (or by `default`).
    Table,
    /// Least topology above the listed grades.
    Generated,
}

impl TopologyKind {
    fn name(self) -> &'static str {
        match self {
            TopologyKind::Discrete => "discrete",
            TopologyKind::Indiscrete => "indiscrete",
            TopologyKind::Table => "table",
            TopologyKind::Generated => "generated",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "discrete" => TopologyKind::Discrete,
            "indiscrete" => TopologyKind::Indiscrete,
            "table" => TopologyKind::Table,
            "generated" => TopologyKind::Generated,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceSpec {
    pub name: String,
    pub points: usize,
    pub topology: TopologyKind,
    pub default: Option<String>,
    pub rows: Vec<(Vec<String>, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub name: String,
    pub from: String,
    pub to: String,
    pub rows: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterSpec {
    pub name: String,
    pub space: String,
    pub default: Option<String>,
    /// `(fuzzy set, grade, value)`.
    pub rows: Vec<(Vec<String>, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub tensor: TableSpec,
    pub cotensor: Option<TableSpec>,
    pub spaces: Vec<SpaceSpec>,
    pub maps: Vec<MapSpec>,
    pub filters: Vec<FilterSpec>,
}

impl SpecDocument {
    pub fn space(&self, name: &str) -> Option<&SpaceSpec> {
        self.spaces.iter().find(|s| s.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&MapSpec> {
        self.maps.iter().find(|m| m.name == name)
    }

    pub fn filter(&self, name: &str) -> Option<&FilterSpec> {
        self.filters.iter().find(|f| f.name == name)
    }
}

// ---- tokens ----

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(&'static str),
}

const SYMBOLS: [&str; 8] = ["->", "[", "]", "(", ")", ",", "=", "<"];

fn tokenize(line: &str, lineno: usize) -> Result<Vec<(usize, Tok)>, SpecError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        let col = line[..byte].chars().count() + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if let Some(sym) = SYMBOLS.iter().find(|s| line[byte..].starts_with(**s)) {
            out.push((col, Tok::Sym(sym)));
            i += sym.chars().count();
            continue;
        }
        let start = i;
        while i < chars.len() {
            let (b, ch) = chars[i];
            if ch.is_whitespace() || ch == '#' || SYMBOLS.iter().any(|s| line[b..].starts_with(*s)) {
                break;
            }
            i += 1;
        }
        let end = chars.get(i).map_or(line.len(), |&(b, _)| b);
        let word = &line[chars[start].0..end];
        if word.chars().any(|ch| ch.is_control()) {
            return Err(SpecError::Syntax {
                line: lineno,
                col,
                msg: "control character in name".into(),
            });
        }
        out.push((col, Tok::Word(word.to_string())));
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    line: usize,
    eol_col: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.eol_col, |t| t.0)
    }

    fn err(&self, msg: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn done(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn word(&mut self, what: &str) -> Result<(usize, String), SpecError> {
        match self.toks.get(self.pos) {
            Some((col, Tok::Word(w))) => {
                self.pos += 1;
                Ok((*col, w.clone()))
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn sym(&mut self, s: &'static str) -> Result<(), SpecError> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Sym(t))) if *t == s => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected `{s}`"))),
        }
    }

    fn peek_sym(&self, s: &str) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Sym(t))) if *t == s)
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize), SpecError> {
        let col = self.col();
        let (_, w) = self.word(what)?;
        w.parse().map(|n| (col, n)).map_err(|_| SpecError::Syntax {
            line: self.line,
            col,
            msg: format!("expected {what}, found `{w}`"),
        })
    }

    fn end(&self) -> Result<(), SpecError> {
        if self.done() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn tuple(&mut self) -> Result<Vec<(usize, String)>, SpecError> {
        self.sym("(")?;
        let mut out = vec![self.word("element")?];
        while self.peek_sym(",") {
            self.pos += 1;
            out.push(self.word("element")?);
        }
        self.sym(")")?;
        Ok(out)
    }
}

// ---- parser ----

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Lattice,
    Tensor,
    Cotensor,
    Space,
    Map,
    Filter,
}

struct Parser {
    doc: SpecDocument,
    have_lattice: bool,
    have_tensor: bool,
    section: Section,
    /// Header line of the open section.
    header: usize,
    seen_keys: Vec<String>,
}

pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let mut p = Parser {
        doc: SpecDocument {
            elements: Vec::new(),
            covers: Vec::new(),
            tensor: TableSpec::Rows(Vec::new()),
            cotensor: None,
            spaces: Vec::new(),
            maps: Vec::new(),
            filters: Vec::new(),
        },
        have_lattice: false,
        have_tensor: false,
        section: Section::None,
        header: 0,
        seen_keys: Vec::new(),
    };
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let toks = tokenize(raw, line)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            toks: &toks,
            pos: 0,
            line,
            eol_col: raw.chars().count() + 1,
        };
        if cur.peek_sym("[") {
            p.close_section()?;
            p.open_section(&mut cur)?;
        } else {
            p.body_line(&mut cur)?;
        }
    }
    p.close_section()?;
    if !p.have_lattice {
        return Err(SpecError::Syntax {
            line: last.max(1),
            col: 1,
            msg: "missing [lattice] section".into(),
        });
    }
    if !p.have_tensor {
        return Err(SpecError::Syntax {
            line: last.max(1),
            col: 1,
            msg: "missing [tensor] section".into(),
        });
    }
    Ok(p.doc)
}

impl Parser {
    fn element(&self, line: usize, col: usize, name: &str) -> Result<(), SpecError> {
        if self.doc.elements.iter().any(|e| e == name) {
            Ok(())
        } else {
            Err(SpecError::UnknownName {
                line,
                col,
                kind: "element",
                name: name.to_string(),
            })
        }
    }

    fn space_points(&self, line: usize, col: usize, name: &str) -> Result<usize, SpecError> {
        self.doc
            .space(name)
            .map(|s| s.points)
            .ok_or_else(|| SpecError::UnknownName {
                line,
                col,
                kind: "space",
                name: name.to_string(),
            })
    }

    fn open_section(&mut self, cur: &mut Cursor) -> Result<(), SpecError> {
        cur.sym("[")?;
        let (col, kind) = cur.word("section name")?;
        let line = cur.line;
        let named = matches!(kind.as_str(), "space" | "map" | "filter");
        let name = if named {
            Some(cur.word("section label")?.1)
        } else {
            None
        };
        cur.sym("]")?;
        cur.end()?;
        let dup = |what: &str| SpecError::Syntax {
            line,
            col,
            msg: format!("duplicate {what}"),
        };
        if kind != "lattice" && !self.have_lattice {
            return Err(SpecError::Syntax {
                line,
                col,
                msg: "[lattice] must come first".into(),
            });
        }
        self.section = match kind.as_str() {
            "lattice" => {
                if self.have_lattice {
                    return Err(dup("[lattice] section"));
                }
                self.have_lattice = true;
                Section::Lattice
            }
            "tensor" => {
                if self.have_tensor {
                    return Err(dup("[tensor] section"));
                }
                self.have_tensor = true;
                Section::Tensor
            }
            "cotensor" => {
                if self.doc.cotensor.is_some() {
                    return Err(dup("[cotensor] section"));
                }
                self.doc.cotensor = Some(TableSpec::Rows(Vec::new()));
                Section::Cotensor
            }
            "space" | "map" | "filter" => {
                let name = name.expect("named section");
                let taken = self.doc.space(&name).is_some()
                    || self.doc.map(&name).is_some()
                    || self.doc.filter(&name).is_some();
                if taken {
                    return Err(dup(&format!("name `{name}`")));
                }
                match kind.as_str() {
                    "space" => {
                        self.doc.spaces.push(SpaceSpec {
                            name,
                            points: 0,
                            topology: TopologyKind::Discrete,
                            default: None,
                            rows: Vec::new(),
                        });
                        Section::Space
                    }
                    "map" => {
                        self.doc.maps.push(MapSpec {
                            name,
                            from: String::new(),
                            to: String::new(),
                            rows: Vec::new(),
                        });
                        Section::Map
                    }
                    _ => {
                        self.doc.filters.push(FilterSpec {
                            name,
                            space: String::new(),
                            default: None,
                            rows: Vec::new(),
                        });
                        Section::Filter
                    }
                }
            }
            other => {
                return Err(SpecError::Syntax {
                    line,
                    col,
                    msg: format!("unknown section `{other}`"),
                })
            }
        };
        self.header = line;
        self.seen_keys.clear();
        Ok(())
    }

    fn key(&mut self, cur: &mut Cursor, allowed: &[&str]) -> Result<Option<String>, SpecError> {
        let is_key = matches!(cur.toks.get(1), Some((_, Tok::Sym("="))));
        if !is_key {
            return Ok(None);
        }
        let (col, key) = cur.word("key")?;
        if !allowed.contains(&key.as_str()) {
            return Err(SpecError::Syntax {
                line: cur.line,
                col,
                msg: format!("unknown key `{key}`"),
            });
        }
        if self.seen_keys.contains(&key) {
            return Err(SpecError::Syntax {
                line: cur.line,
                col,
                msg: format!("duplicate key `{key}`"),
            });
        }
        self.seen_keys.push(key.clone());
        cur.sym("=")?;
        Ok(Some(key))
    }

    fn body_line(&mut self, cur: &mut Cursor) -> Result<(), SpecError> {
        let line = cur.line;
        match self.section {
            Section::None => Err(cur.err("content outside a section")),
            Section::Lattice => match self.key(cur, &["elements", "covers"])?.as_deref() {
                Some("elements") => {
                    while !cur.done() {
                        let (col, w) = cur.word("element name")?;
                        if self.doc.elements.contains(&w) {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: format!("duplicate element `{w}`"),
                            });
                        }
                        self.doc.elements.push(w);
                    }
                    Ok(())
                }
                Some(_) => {
                    if self.doc.elements.is_empty() {
                        return Err(cur.err("`covers` needs `elements` first"));
                    }
                    while !cur.done() {
                        let (ca, a) = cur.word("element")?;
                        cur.sym("<")?;
                        let (cb, b) = cur.word("element")?;
                        self.element(line, ca, &a)?;
                        self.element(line, cb, &b)?;
                        self.doc.covers.push((a, b));
                    }
                    Ok(())
                }
                None => Err(cur.err("expected `elements =` or `covers =`")),
            },
            Section::Tensor | Section::Cotensor => {
                let cotensor = self.section == Section::Cotensor;
                if let Some(_key) = self.key(cur, &["preset"])? {
                    let (col, w) = cur.word("preset name")?;
                    cur.end()?;
                    let ok = if cotensor { w == "join" } else { w == "meet" };
                    if !ok {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: format!("unknown preset `{w}`"),
                        });
                    }
                    let slot = self.table_mut(cotensor);
                    if matches!(slot, TableSpec::Rows(r) if !r.is_empty()) {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: "preset mixed with rows".into(),
                        });
                    }
                    *slot = TableSpec::Preset(w);
                    return Ok(());
                }
                let (ca, a) = cur.word("element")?;
                let (cb, b) = cur.word("element")?;
                cur.sym("->")?;
                let (cc, c) = cur.word("element")?;
                cur.end()?;
                for (col, name) in [(ca, &a), (cb, &b), (cc, &c)] {
                    self.element(line, col, name)?;
                }
                match self.table_mut(cotensor) {
                    TableSpec::Preset(_) => Err(SpecError::Syntax {
                        line,
                        col: ca,
                        msg: "rows mixed with preset".into(),
                    }),
                    TableSpec::Rows(rows) => {
                        if rows.iter().any(|(x, y, _)| *x == a && *y == b) {
                            return Err(SpecError::Syntax {
                                line,
                                col: ca,
                                msg: format!("duplicate row for ({a}, {b})"),
                            });
                        }
                        rows.push((a, b, c));
                        Ok(())
                    }
                }
            }
            Section::Space => {
                match self.key(cur, &["points", "topology", "default"])?.as_deref() {
                    Some("points") => {
                        let (col, n) = cur.number("point count")?;
                        cur.end()?;
                        if n == 0 {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: "a space needs at least one point".into(),
                            });
                        }
                        self.doc.spaces.last_mut().expect("open space").points = n;
                        Ok(())
                    }
                    Some("topology") => {
                        let (col, w) = cur.word("topology kind")?;
                        cur.end()?;
                        let kind = TopologyKind::parse(&w).ok_or(SpecError::Syntax {
                            line,
                            col,
                            msg: format!("unknown topology kind `{w}`"),
                        })?;
                        self.doc.spaces.last_mut().expect("open space").topology = kind;
                        Ok(())
                    }
                    Some(_) => {
                        let (col, w) = cur.word("element")?;
                        cur.end()?;
                        self.element(line, col, &w)?;
                        self.doc.spaces.last_mut().expect("open space").default = Some(w);
                        Ok(())
                    }
                    None => {
                        let (col, w) = cur.word("`grade`")?;
                        if w != "grade" {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: format!("expected `grade`, found `{w}`"),
                            });
                        }
                        let points = self.doc.spaces.last().expect("open space").points;
                        if points == 0 {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: "`points =` must precede grade rows".into(),
                            });
                        }
                        let tuple = self.checked_tuple(cur, points)?;
                        cur.sym("->")?;
                        let (cv, v) = cur.word("element")?;
                        cur.end()?;
                        self.element(line, cv, &v)?;
                        let space = self.doc.spaces.last_mut().expect("open space");
                        if space.rows.iter().any(|(t, _)| *t == tuple) {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: "duplicate grade row".into(),
                            });
                        }
                        space.rows.push((tuple, v));
                        Ok(())
                    }
                }
            }
            Section::Map => match self.key(cur, &["from", "to"])?.as_deref() {
                Some(key) => {
                    let (col, w) = cur.word("space name")?;
                    cur.end()?;
                    self.space_points(line, col, &w)?;
                    let map = self.doc.maps.last_mut().expect("open map");
                    if key == "from" {
                        map.from = w;
                    } else {
                        map.to = w;
                    }
                    Ok(())
                }
                None => {
                    let (col, w) = cur.word("`point`")?;
                    if w != "point" {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: format!("expected `point`, found `{w}`"),
                        });
                    }
                    let map = self.doc.maps.last().expect("open map");
                    if map.from.is_empty() || map.to.is_empty() {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: "`from =` and `to =` must precede point rows".into(),
                        });
                    }
                    let (from_n, to_n) = (
                        self.doc.space(&map.from).expect("checked").points,
                        self.doc.space(&map.to).expect("checked").points,
                    );
                    let (ci, i) = cur.number("point index")?;
                    cur.sym("->")?;
                    let (cj, j) = cur.number("point index")?;
                    cur.end()?;
                    for (col, v, n) in [(ci, i, from_n), (cj, j, to_n)] {
                        if v >= n {
                            return Err(SpecError::Syntax {
                                line,
                                col,
                                msg: format!("point {v} out of range (space has {n})"),
                            });
                        }
                    }
                    let map = self.doc.maps.last_mut().expect("open map");
                    if map.rows.iter().any(|&(a, _)| a == i) {
                        return Err(SpecError::Syntax {
                            line,
                            col: ci,
                            msg: format!("point {i} mapped twice"),
                        });
                    }
                    map.rows.push((i, j));
                    Ok(())
                }
            },
            Section::Filter => match self.key(cur, &["space", "default"])?.as_deref() {
                Some("space") => {
                    let (col, w) = cur.word("space name")?;
                    cur.end()?;
                    self.space_points(line, col, &w)?;
                    self.doc.filters.last_mut().expect("open filter").space = w;
                    Ok(())
                }
                Some(_) => {
                    let (col, w) = cur.word("element")?;
                    cur.end()?;
                    self.element(line, col, &w)?;
                    self.doc.filters.last_mut().expect("open filter").default = Some(w);
                    Ok(())
                }
                None => {
                    let (col, w) = cur.word("`value`")?;
                    if w != "value" {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: format!("expected `value`, found `{w}`"),
                        });
                    }
                    let space = self.doc.filters.last().expect("open filter").space.clone();
                    if space.is_empty() {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: "`space =` must precede value rows".into(),
                        });
                    }
                    let points = self.doc.space(&space).expect("checked").points;
                    let tuple = self.checked_tuple(cur, points)?;
                    let (cat, at) = cur.word("`at`")?;
                    if at != "at" {
                        return Err(SpecError::Syntax {
                            line,
                            col: cat,
                            msg: format!("expected `at`, found `{at}`"),
                        });
                    }
                    let (cg, g) = cur.word("grade")?;
                    cur.sym("->")?;
                    let (cv, v) = cur.word("element")?;
                    cur.end()?;
                    self.element(line, cg, &g)?;
                    self.element(line, cv, &v)?;
                    let filter = self.doc.filters.last_mut().expect("open filter");
                    if filter.rows.iter().any(|(t, a, _)| *t == tuple && *a == g) {
                        return Err(SpecError::Syntax {
                            line,
                            col,
                            msg: "duplicate value row".into(),
                        });
                    }
                    filter.rows.push((tuple, g, v));
                    Ok(())
                }
            },
        }
    }

    fn checked_tuple(&self, cur: &mut Cursor, points: usize) -> Result<Vec<String>, SpecError> {
        let col = cur.col();
        let tuple = cur.tuple()?;
        if tuple.len() != points {
            return Err(SpecError::Syntax {
                line: cur.line,
                col,
                msg: format!("tuple has {} entries, space has {points} points", tuple.len()),
            });
        }
        for (c, name) in &tuple {
            self.element(cur.line, *c, name)?;
        }
        Ok(tuple.into_iter().map(|(_, n)| n).collect())
    }

    fn table_mut(&mut self, cotensor: bool) -> &mut TableSpec {
        if cotensor {
            self.doc.cotensor.as_mut().expect("open cotensor")
        } else {
            &mut self.doc.tensor
        }
    }

    /// Totality and required keys, checked when a section ends.
    fn close_section(&mut self) -> Result<(), SpecError> {
        let line = self.header;
        let n = self.doc.elements.len();
        let missing = |table: &str, what: String| SpecError::NonTotalTable {
            line,
            col: 1,
            table: table.to_string(),
            missing: what,
        };
        let required = |what: &str| SpecError::Syntax {
            line,
            col: 1,
            msg: format!("section lacks `{what} =`"),
        };
        match self.section {
            Section::None => {}
            Section::Lattice => {
                if self.doc.elements.is_empty() {
                    return Err(required("elements"));
                }
            }
            Section::Tensor | Section::Cotensor => {
                let cotensor = self.section == Section::Cotensor;
                let name = if cotensor { "cotensor" } else { "tensor" };
                let elements = self.doc.elements.clone();
                if let TableSpec::Rows(rows) = self.table_mut(cotensor) {
                    for a in &elements {
                        for b in &elements {
                            if !rows.iter().any(|(x, y, _)| x == a && y == b) {
                                return Err(missing(name, format!("row `{a} {b} -> …`")));
                            }
                        }
                    }
                }
            }
            Section::Space => {
                let s = self.doc.spaces.last().expect("open space");
                if s.points == 0 {
                    return Err(required("points"));
                }
                if s.topology == TopologyKind::Table && s.default.is_none() {
                    let total = (n as u128).checked_pow(s.points as u32);
                    if total != Some(s.rows.len() as u128) {
                        let have: Vec<&Vec<String>> = s.rows.iter().map(|(t, _)| t).collect();
                        let first = first_missing_tuple(&self.doc.elements, s.points, &have);
                        return Err(missing(&s.name, format!("grade row for ({})", first.join(", "))));
                    }
                }
            }
            Section::Map => {
                let m = self.doc.maps.last().expect("open map");
                if m.from.is_empty() {
                    return Err(required("from"));
                }
                if m.to.is_empty() {
                    return Err(required("to"));
                }
                let points = self.doc.space(&m.from).expect("checked").points;
                if let Some(p) = (0..points).find(|p| !m.rows.iter().any(|&(a, _)| a == *p)) {
                    return Err(missing(&m.name, format!("image of point {p}")));
                }
            }
            Section::Filter => {
                let f = self.doc.filters.last().expect("open filter");
                if f.space.is_empty() {
                    return Err(required("space"));
                }
                if f.default.is_none() {
                    let points = self.doc.space(&f.space).expect("checked").points;
                    let total = (n as u128).checked_pow(points as u32).map(|v| v * n as u128);
                    if total != Some(f.rows.len() as u128) {
                        return Err(missing(
                            &f.name,
                            "value rows (give every (set, grade) pair or a `default`)".into(),
                        ));
                    }
                }
            }
        }
        self.section = Section::None;
        Ok(())
    }
}

fn first_missing_tuple(elements: &[String], points: usize, have: &[&Vec<String>]) -> Vec<String> {
    let n = elements.len();
    let mut digits = vec![0usize; points];
    loop {
        let tuple: Vec<String> = digits.iter().map(|&d| elements[d].clone()).collect();
        if !have.contains(&&tuple) {
            return tuple;
        }
        let mut i = points;
        loop {
            if i == 0 {
                return tuple;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

// ---- renderer ----

fn render_table(out: &mut String, header: &str, t: &TableSpec) {
    let _ = writeln!(out, "\n[{header}]");
    match t {
        TableSpec::Preset(p) => {
            let _ = writeln!(out, "preset = {p}");
        }
        TableSpec::Rows(rows) => {
            for (a, b, c) in rows {
                let _ = writeln!(out, "{a} {b} -> {c}");
            }
        }
    }
}

/// Canonical text for a document; parsing it yields the same document.
pub fn render_spec(doc: &SpecDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[lattice]");
    let _ = writeln!(out, "elements = {}", doc.elements.join(" "));
    if !doc.covers.is_empty() {
        let covers: Vec<String> = doc.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        let _ = writeln!(out, "covers = {}", covers.join(" "));
    }
    render_table(&mut out, "tensor", &doc.tensor);
    if let Some(c) = &doc.cotensor {
        render_table(&mut out, "cotensor", c);
    }
    for s in &doc.spaces {
        let _ = writeln!(out, "\n[space {}]", s.name);
        let _ = writeln!(out, "points = {}", s.points);
        let _ = writeln!(out, "topology = {}", s.topology.name());
        if let Some(d) = &s.default {
            let _ = writeln!(out, "default = {d}");
        }
        for (t, v) in &s.rows {
            let _ = writeln!(out, "grade ({}) -> {v}", t.join(", "));
        }
    }
    for m in &doc.maps {
        let _ = writeln!(out, "\n[map {}]", m.name);
        let _ = writeln!(out, "from = {}", m.from);
        let _ = writeln!(out, "to = {}", m.to);
        for (i, j) in &m.rows {
            let _ = writeln!(out, "point {i} -> {j}");
        }
    }
    for f in &doc.filters {
        let _ = writeln!(out, "\n[filter {}]", f.name);
        let _ = writeln!(out, "space = {}", f.space);
        if let Some(d) = &f.default {
            let _ = writeln!(out, "default = {d}");
        }
        for (t, g, v) in &f.rows {
            let _ = writeln!(out, "value ({}) at {g} -> {v}", t.join(", "));
        }
    }
    out
}
