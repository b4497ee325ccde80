//! Line-oriented sectioned fixture format.
//!
//! A document is a sequence of sections, each headed by `[kind NAME]`.
//! Tables are whitespace-separated integers; composition tables use `-` for
//! undefined entries.  Structures may refer to earlier sections by name.
//!
//! Section kinds: `bounds`, `group`, `category`, `crossed`, `twogroup`,
//! `action`, `presheaf`.

use std::collections::BTreeMap;

use twoact_core::catkit::{Arrow, FinCat, Functor, NatTrans};
use twoact_core::grp::{FiniteGroup, GroupHom};
use twoact_core::orbit::OrbitTwoCat;
use twoact_core::sheaf::Presheaf2;
use twoact_core::twogroup::{from_crossed_module, CrossedModule, TwoGroup};
use twoact_core::{action::GAction, Bounds};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// One raw section with its body lines (line numbers retained).
#[derive(Debug, Clone)]
struct Section {
    kind: String,
    name: String,
    header_line: usize,
    body: Vec<(usize, String)>,
}

fn split_sections(text: &str) -> Result<Vec<Section>, ParseError> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(inner) = line.strip_prefix('[') {
            let Some(inner) = inner.strip_suffix(']') else {
                return err(line_no, "unterminated section header");
            };
            let mut parts = inner.split_whitespace();
            let kind = parts.next().unwrap_or_default().to_string();
            let name = parts.next().unwrap_or_default().to_string();
            if parts.next().is_some() {
                return err(line_no, "section header has too many fields");
            }
            if kind != "bounds" && name.is_empty() {
                return err(line_no, "section needs a name");
            }
            out.push(Section { kind, name, header_line: line_no, body: Vec::new() });
        } else {
            match out.last_mut() {
                Some(s) => s.body.push((line_no, line.to_string())),
                None => return err(line_no, "content before the first section header"),
            }
        }
    }
    Ok(out)
}

fn parse_usizes(line_no: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| ParseError { line: line_no, message: format!("bad integer `{w}`") })
        })
        .collect()
}

fn parse_row_opt(line_no: usize, s: &str) -> Result<Vec<Option<usize>>, ParseError> {
    s.split_whitespace()
        .map(|w| {
            if w == "-" {
                Ok(None)
            } else {
                w.parse::<usize>().map(Some).map_err(|_| ParseError {
                    line: line_no,
                    message: format!("bad table entry `{w}`"),
                })
            }
        })
        .collect()
}

/// `(a, b, k, object table, arrow table)` for the restriction functor of the
/// morphism `k` of `hom(a, b)`.
pub type RawMor = (usize, usize, usize, Vec<usize>, Vec<usize>);
/// `(a, b, t, components)` for the transformation of the 2-cell `t`.
pub type RawCell = (usize, usize, usize, Vec<usize>);

/// Presheaf declarations, resolved lazily against a built orbit 2-category.
#[derive(Debug, Clone)]
pub enum PresheafSpec {
    /// Image of a named action.
    Phi(String),
    /// Representable presheaf of a 2-group at an orbit object index.
    Representable(String, usize),
    /// Explicit tables over a 2-group's orbit 2-category.
    Raw { group: String, values: Vec<String>, mors: Vec<RawMor>, cells: Vec<RawCell> },
}

#[derive(Debug, Default)]
pub struct Doc {
    pub bounds: Bounds,
    pub groups: Vec<(String, FiniteGroup)>,
    pub categories: Vec<(String, FinCat)>,
    pub crossed: Vec<(String, CrossedModule)>,
    pub twogroups: Vec<(String, TwoGroup)>,
    /// Action name, group name, action.
    pub actions: Vec<(String, String, GAction)>,
    pub presheaves: Vec<(String, PresheafSpec)>,
    /// Structures that failed validation during load, with their errors.
    pub invalid: Vec<(String, String)>,
}

impl Doc {
    pub fn group(&self, name: &str) -> Option<&FiniteGroup> {
        self.groups.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn category(&self, name: &str) -> Option<&FinCat> {
        self.categories.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn crossed_module(&self, name: &str) -> Option<&CrossedModule> {
        self.crossed.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn twogroup(&self, name: &str) -> Option<&TwoGroup> {
        self.twogroups.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn action(&self, name: &str) -> Option<(&str, &GAction)> {
        self.actions.iter().find(|(n, _, _)| n == name).map(|(_, g, a)| (g.as_str(), a))
    }

    /// Resolves a presheaf spec against an orbit 2-category of its group.
    pub fn build_presheaf(
        &self,
        spec: &PresheafSpec,
        orbit: &OrbitTwoCat,
        bounds: &Bounds,
    ) -> Result<Presheaf2, String> {
        match spec {
            PresheafSpec::Phi(action) => {
                let (_, act) = self.action(action).ok_or_else(|| {
                    format!("presheaf refers to unknown action `{action}`")
                })?;
                let p = twoact_core::equivalence::phi(orbit, act, bounds)
                    .map_err(|e| e.to_string())?;
                Ok(p.presheaf)
            }
            PresheafSpec::Representable(_, index) => {
                if *index >= orbit.n_objects() {
                    return Err(format!("orbit object index {index} out of range"));
                }
                Ok(twoact_core::sheaf::representable(orbit, *index))
            }
            PresheafSpec::Raw { values, mors, cells, .. } => {
                let n = orbit.n_objects();
                if values.len() != n {
                    return Err(format!(
                        "presheaf declares {} values but the orbit 2-category has {n} objects",
                        values.len()
                    ));
                }
                let vals: Vec<FinCat> = values
                    .iter()
                    .map(|name| {
                        self.category(name)
                            .cloned()
                            .ok_or_else(|| format!("unknown category `{name}`"))
                    })
                    .collect::<Result<_, String>>()?;
                let mut mor: Vec<Vec<Option<Functor>>> = (0..n * n)
                    .map(|p| vec![None; orbit.homs[p].cat.n_objects])
                    .collect();
                for (a, b, k, obj, arr) in mors {
                    let pair = a * n + b;
                    if *a >= n || *b >= n || *k >= orbit.homs[pair].cat.n_objects {
                        return Err(format!("mor ({a}, {b}, {k}) out of range"));
                    }
                    mor[pair][*k] = Some(Functor { obj: obj.clone(), arr: arr.clone() });
                }
                let mor: Vec<Vec<Functor>> = mor
                    .into_iter()
                    .enumerate()
                    .map(|(p, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(|(k, f)| {
                                f.ok_or_else(|| {
                                    format!(
                                        "missing mor table for morphism {k} of hom pair {p}"
                                    )
                                })
                            })
                            .collect::<Result<_, String>>()
                    })
                    .collect::<Result<_, String>>()?;
                let mut cell: Vec<Vec<Option<NatTrans>>> = (0..n * n)
                    .map(|p| vec![None; orbit.homs[p].cat.n_arrows()])
                    .collect();
                for (a, b, t, comps) in cells {
                    let pair = a * n + b;
                    if *a >= n || *b >= n || *t >= orbit.homs[pair].cat.n_arrows() {
                        return Err(format!("cell ({a}, {b}, {t}) out of range"));
                    }
                    cell[pair][*t] = Some(NatTrans { comps: comps.clone() });
                }
                // identity 2-cells default to identity transformations
                let cell: Vec<Vec<NatTrans>> = cell
                    .into_iter()
                    .enumerate()
                    .map(|(p, row)| {
                        let (a, b) = (p / n, p % n);
                        row.into_iter()
                            .enumerate()
                            .map(|(t, c)| match c {
                                Some(c) => Ok(c),
                                None if orbit.homs[p].cat.is_identity(t) => {
                                    let src = orbit.homs[p].cat.dom(t);
                                    let _ = a;
                                    Ok(NatTrans::identity(
                                        &vals[b],
                                        &vals[p / n],
                                        &mor[p][src],
                                    ))
                                }
                                None => Err(format!(
                                    "missing cell table for 2-cell {t} of hom pair {p}"
                                )),
                            })
                            .collect::<Result<_, String>>()
                    })
                    .collect::<Result<_, String>>()?;
                Ok(Presheaf2 { values: vals, mor, cell })
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Doc, ParseError> {
    let sections = split_sections(text)?;
    let mut doc = Doc::default();
    let mut names: BTreeMap<String, usize> = BTreeMap::new();
    for s in &sections {
        if s.kind != "bounds" {
            if let Some(prev) = names.insert(format!("{} {}", s.kind, s.name), s.header_line) {
                return err(
                    s.header_line,
                    format!("duplicate section `{} {}` (first at line {prev})", s.kind, s.name),
                );
            }
        }
        match s.kind.as_str() {
            "bounds" => parse_bounds(s, &mut doc)?,
            "group" => parse_group(s, &mut doc)?,
            "category" => parse_category(s, &mut doc)?,
            "crossed" => parse_crossed(s, &mut doc)?,
            "twogroup" => parse_twogroup(s, &mut doc)?,
            "action" => parse_action(s, &mut doc)?,
            "presheaf" => parse_presheaf(s, &mut doc)?,
            other => return err(s.header_line, format!("unknown section kind `{other}`")),
        }
    }
    Ok(doc)
}

fn parse_bounds(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    for (line_no, line) in &s.body {
        let mut parts = line.split_whitespace();
        let key = parts.next().unwrap_or_default();
        let value: usize = parts
            .next()
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| ParseError { line: *line_no, message: "expected `key value`".into() })?;
        if !doc.bounds.set(key, value) {
            return err(*line_no, format!("unknown bound `{key}`"));
        }
    }
    Ok(())
}

fn parse_group(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let Some((first_line, first)) = s.body.first() else {
        return err(s.header_line, "empty group section");
    };
    let mut parts = first.split_whitespace();
    match parts.next().unwrap_or_default() {
        "table" => {
            let rows: Vec<Vec<usize>> = s.body[1..]
                .iter()
                .map(|(ln, l)| parse_usizes(*ln, l))
                .collect::<Result<_, _>>()?;
            match FiniteGroup::validate(&rows) {
                Ok(g) => doc.groups.push((s.name.clone(), g)),
                Err(e) => doc.invalid.push((format!("group {}", s.name), e.to_string())),
            }
        }
        "perm" => {
            let degree: usize = parts.next().and_then(|v| v.parse().ok()).ok_or_else(|| {
                ParseError { line: *first_line, message: "expected `perm DEGREE`".into() }
            })?;
            let gens: Vec<Vec<usize>> = s.body[1..]
                .iter()
                .map(|(ln, l)| parse_usizes(*ln, l))
                .collect::<Result<_, _>>()?;
            match FiniteGroup::from_permutations(degree, &gens) {
                Ok((g, _)) => doc.groups.push((s.name.clone(), g)),
                Err(e) => doc.invalid.push((format!("group {}", s.name), e.to_string())),
            }
        }
        other => return err(*first_line, format!("unknown group form `{other}`")),
    }
    Ok(())
}

fn body_table(
    body: &[(usize, String)],
    from: usize,
    rows: usize,
) -> Result<&[(usize, String)], ParseError> {
    if body.len() < from + rows {
        let line = body.last().map(|(l, _)| *l).unwrap_or(0);
        return err(line, format!("expected {rows} table rows"));
    }
    Ok(&body[from..from + rows])
}

fn parse_category(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let mut objects = None;
    let mut arrows_n = None;
    let mut dom = None;
    let mut cod = None;
    let mut id = None;
    let mut comp_rows: Vec<Vec<Option<usize>>> = Vec::new();
    let mut i = 0;
    while i < s.body.len() {
        let (line_no, line) = &s.body[i];
        let mut parts = line.split_whitespace();
        match parts.next().unwrap_or_default() {
            "objects" => {
                objects = Some(
                    parts.next().and_then(|v| v.parse::<usize>().ok()).ok_or(ParseError {
                        line: *line_no,
                        message: "expected `objects N`".into(),
                    })?,
                )
            }
            "arrows" => {
                arrows_n = Some(
                    parts.next().and_then(|v| v.parse::<usize>().ok()).ok_or(ParseError {
                        line: *line_no,
                        message: "expected `arrows N`".into(),
                    })?,
                )
            }
            "dom" => dom = Some(parse_usizes(*line_no, &line[3..])?),
            "cod" => cod = Some(parse_usizes(*line_no, &line[3..])?),
            "id" => id = Some(parse_usizes(*line_no, &line[2..])?),
            "comp" => {
                let n = arrows_n.ok_or(ParseError {
                    line: *line_no,
                    message: "`arrows N` must precede `comp`".into(),
                })?;
                for (ln, l) in body_table(&s.body, i + 1, n)? {
                    comp_rows.push(parse_row_opt(*ln, l)?);
                }
                i += n;
            }
            other => return err(*line_no, format!("unknown category field `{other}`")),
        }
        i += 1;
    }
    let line = s.header_line;
    let (Some(objects), Some(arrows_n), Some(dom), Some(cod), Some(id)) =
        (objects, arrows_n, dom, cod, id)
    else {
        return err(line, "category needs objects, arrows, dom, cod, id");
    };
    if dom.len() != arrows_n || cod.len() != arrows_n || comp_rows.len() != arrows_n {
        return err(line, "category table lengths do not match the arrow count");
    }
    let arrows: Vec<Arrow> =
        dom.iter().zip(&cod).map(|(&d, &c)| Arrow { dom: d, cod: c }).collect();
    let comp: Vec<Option<usize>> = comp_rows.into_iter().flatten().collect();
    if comp.len() != arrows_n * arrows_n {
        return err(line, "composition table has the wrong shape");
    }
    match FinCat::new(objects, arrows, id, comp) {
        Ok(c) => doc.categories.push((s.name.clone(), c)),
        Err(e) => doc.invalid.push((format!("category {}", s.name), e.to_string())),
    }
    Ok(())
}

fn parse_crossed(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let mut base = None;
    let mut fiber = None;
    let mut boundary = None;
    let mut action: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < s.body.len() {
        let (line_no, line) = &s.body[i];
        let mut parts = line.split_whitespace();
        match parts.next().unwrap_or_default() {
            "base" => base = parts.next().map(str::to_string),
            "fiber" => fiber = parts.next().map(str::to_string),
            "boundary" => boundary = Some(parse_usizes(*line_no, &line[8..])?),
            "action" => {
                let b = base.as_ref().and_then(|n| doc.group(n)).ok_or(ParseError {
                    line: *line_no,
                    message: "`base` must name a known group before `action`".into(),
                })?;
                for (ln, l) in body_table(&s.body, i + 1, b.order())? {
                    action.extend(parse_usizes(*ln, l)?);
                }
                i += b.order();
            }
            other => return err(*line_no, format!("unknown crossed-module field `{other}`")),
        }
        i += 1;
    }
    let line = s.header_line;
    let (Some(base), Some(fiber), Some(boundary)) = (base, fiber, boundary) else {
        return err(line, "crossed module needs base, fiber, boundary, action");
    };
    let (Some(bg), Some(fg)) = (doc.group(&base).cloned(), doc.group(&fiber).cloned()) else {
        return err(line, "crossed module refers to unknown groups");
    };
    match CrossedModule::validate(bg, fg, GroupHom { map: boundary }, action) {
        Ok(c) => doc.crossed.push((s.name.clone(), c)),
        Err(e) => doc.invalid.push((format!("crossed {}", s.name), e.to_string())),
    }
    Ok(())
}

fn parse_twogroup(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let Some((first_line, first)) = s.body.first() else {
        return err(s.header_line, "empty twogroup section");
    };
    let mut parts = first.split_whitespace();
    let form = parts.next().unwrap_or_default();
    match form {
        "trivial" => {
            doc.twogroups.push((s.name.clone(), TwoGroup::trivial()));
        }
        "discrete" => {
            let gname = parts.next().ok_or(ParseError {
                line: *first_line,
                message: "expected `discrete GROUP`".into(),
            })?;
            let g = doc.group(gname).ok_or_else(|| ParseError {
                line: *first_line,
                message: format!("unknown group `{gname}`"),
            })?;
            doc.twogroups.push((s.name.clone(), TwoGroup::discrete(g)));
        }
        "one_object" => {
            let gname = parts.next().ok_or(ParseError {
                line: *first_line,
                message: "expected `one_object GROUP`".into(),
            })?;
            let g = doc
                .group(gname)
                .ok_or_else(|| ParseError {
                    line: *first_line,
                    message: format!("unknown group `{gname}`"),
                })?
                .clone();
            match TwoGroup::one_object(&g) {
                Ok(t) => doc.twogroups.push((s.name.clone(), t)),
                Err(e) => doc.invalid.push((format!("twogroup {}", s.name), e.to_string())),
            }
        }
        "crossed" => {
            let cname = parts.next().ok_or(ParseError {
                line: *first_line,
                message: "expected `crossed NAME`".into(),
            })?;
            let xm = doc.crossed_module(cname).ok_or_else(|| ParseError {
                line: *first_line,
                message: format!("unknown crossed module `{cname}`"),
            })?;
            match from_crossed_module(xm) {
                Ok(t) => doc.twogroups.push((s.name.clone(), t)),
                Err(e) => doc.invalid.push((format!("twogroup {}", s.name), e.to_string())),
            }
        }
        "g0" => parse_raw_twogroup(s, doc)?,
        other => return err(*first_line, format!("unknown twogroup form `{other}`")),
    }
    Ok(())
}

fn parse_raw_twogroup(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let mut g0 = None;
    let mut g1 = None;
    let mut d0 = None;
    let mut d1 = None;
    let mut id_map = None;
    let mut comp: Vec<Option<usize>> = Vec::new();
    let mut i = 0;
    while i < s.body.len() {
        let (line_no, line) = &s.body[i];
        let mut parts = line.split_whitespace();
        match parts.next().unwrap_or_default() {
            "g0" => g0 = parts.next().map(str::to_string),
            "g1" => g1 = parts.next().map(str::to_string),
            "d0" => d0 = Some(parse_usizes(*line_no, &line[2..])?),
            "d1" => d1 = Some(parse_usizes(*line_no, &line[2..])?),
            "i" => id_map = Some(parse_usizes(*line_no, &line[1..])?),
            "comp" => {
                let g1g = g1.as_ref().and_then(|n| doc.group(n)).ok_or(ParseError {
                    line: *line_no,
                    message: "`g1` must name a known group before `comp`".into(),
                })?;
                for (ln, l) in body_table(&s.body, i + 1, g1g.order())? {
                    comp.extend(parse_row_opt(*ln, l)?);
                }
                i += g1g.order();
            }
            other => return err(*line_no, format!("unknown twogroup field `{other}`")),
        }
        i += 1;
    }
    let line = s.header_line;
    let (Some(g0), Some(g1), Some(d0), Some(d1), Some(id_map)) = (g0, g1, d0, d1, id_map) else {
        return err(line, "raw twogroup needs g0, g1, d0, d1, i, comp");
    };
    let (Some(g0), Some(g1)) = (doc.group(&g0).cloned(), doc.group(&g1).cloned()) else {
        return err(line, "raw twogroup refers to unknown groups");
    };
    match TwoGroup::validate(
        g0,
        g1,
        GroupHom { map: d0 },
        GroupHom { map: d1 },
        GroupHom { map: id_map },
        comp,
    ) {
        Ok(t) => doc.twogroups.push((s.name.clone(), t)),
        Err(e) => doc.invalid.push((format!("twogroup {}", s.name), e.to_string())),
    }
    Ok(())
}

fn parse_action(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let mut group = None;
    let mut space = None;
    let mut obj: Vec<usize> = Vec::new();
    let mut arr: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < s.body.len() {
        let (line_no, line) = &s.body[i];
        let mut parts = line.split_whitespace();
        match parts.next().unwrap_or_default() {
            "group" => group = parts.next().map(str::to_string),
            "space" => space = parts.next().map(str::to_string),
            "obj" => {
                let sp = space.as_ref().and_then(|n| doc.category(n)).ok_or(ParseError {
                    line: *line_no,
                    message: "`space` must name a known category before `obj`".into(),
                })?;
                for (ln, l) in body_table(&s.body, i + 1, sp.n_objects)? {
                    obj.extend(parse_usizes(*ln, l)?);
                }
                i += sp.n_objects;
            }
            "arr" => {
                let sp = space.as_ref().and_then(|n| doc.category(n)).ok_or(ParseError {
                    line: *line_no,
                    message: "`space` must name a known category before `arr`".into(),
                })?;
                for (ln, l) in body_table(&s.body, i + 1, sp.n_arrows())? {
                    arr.extend(parse_usizes(*ln, l)?);
                }
                i += sp.n_arrows();
            }
            other => return err(*line_no, format!("unknown action field `{other}`")),
        }
        i += 1;
    }
    let line = s.header_line;
    let (Some(gname), Some(sname)) = (group, space) else {
        return err(line, "action needs group, space, obj, arr");
    };
    let (Some(tg), Some(sp)) = (doc.twogroup(&gname).cloned(), doc.category(&sname).cloned())
    else {
        return err(line, "action refers to an unknown twogroup or category");
    };
    match GAction::validate(tg, sp, obj, arr) {
        Ok(a) => doc.actions.push((s.name.clone(), gname, a)),
        Err(e) => doc.invalid.push((format!("action {}", s.name), e.to_string())),
    }
    Ok(())
}

fn parse_presheaf(s: &Section, doc: &mut Doc) -> Result<(), ParseError> {
    let Some((first_line, first)) = s.body.first() else {
        return err(s.header_line, "empty presheaf section");
    };
    let mut parts = first.split_whitespace();
    match parts.next().unwrap_or_default() {
        "phi" => {
            let action = parts.next().ok_or(ParseError {
                line: *first_line,
                message: "expected `phi ACTION`".into(),
            })?;
            doc.presheaves.push((s.name.clone(), PresheafSpec::Phi(action.to_string())));
        }
        "representable" => {
            let group = parts.next().ok_or(ParseError {
                line: *first_line,
                message: "expected `representable TWOGROUP INDEX`".into(),
            })?;
            let index: usize = parts.next().and_then(|v| v.parse().ok()).ok_or(ParseError {
                line: *first_line,
                message: "expected `representable TWOGROUP INDEX`".into(),
            })?;
            doc.presheaves
                .push((s.name.clone(), PresheafSpec::Representable(group.to_string(), index)));
        }
        "group" => {
            let group = parts
                .next()
                .ok_or(ParseError { line: *first_line, message: "expected `group NAME`".into() })?
                .to_string();
            let mut values = Vec::new();
            let mut mors = Vec::new();
            let mut cells = Vec::new();
            let mut i = 1;
            while i < s.body.len() {
                let (line_no, line) = &s.body[i];
                let mut parts = line.split_whitespace();
                match parts.next().unwrap_or_default() {
                    "values" => values = parts.map(str::to_string).collect(),
                    "mor" => {
                        let nums = parse_usizes(*line_no, &line[3..])?;
                        if nums.len() != 3 {
                            return err(*line_no, "expected `mor A B K`");
                        }
                        let rows = body_table(&s.body, i + 1, 2)?;
                        let obj_line = &rows[0];
                        let arr_line = &rows[1];
                        let obj = parse_usizes(
                            obj_line.0,
                            obj_line.1.strip_prefix("obj").ok_or(ParseError {
                                line: obj_line.0,
                                message: "expected `obj ...` row".into(),
                            })?,
                        )?;
                        let arr = parse_usizes(
                            arr_line.0,
                            arr_line.1.strip_prefix("arr").ok_or(ParseError {
                                line: arr_line.0,
                                message: "expected `arr ...` row".into(),
                            })?,
                        )?;
                        mors.push((nums[0], nums[1], nums[2], obj, arr));
                        i += 2;
                    }
                    "cell" => {
                        let nums = parse_usizes(*line_no, &line[4..])?;
                        if nums.len() != 3 {
                            return err(*line_no, "expected `cell A B T`");
                        }
                        let rows = body_table(&s.body, i + 1, 1)?;
                        let comps_line = &rows[0];
                        let comps = parse_usizes(
                            comps_line.0,
                            comps_line.1.strip_prefix("comps").ok_or(ParseError {
                                line: comps_line.0,
                                message: "expected `comps ...` row".into(),
                            })?,
                        )?;
                        cells.push((nums[0], nums[1], nums[2], comps));
                        i += 1;
                    }
                    other => return err(*line_no, format!("unknown presheaf field `{other}`")),
                }
                i += 1;
            }
            doc.presheaves
                .push((s.name.clone(), PresheafSpec::Raw { group, values, mors, cells }));
        }
        other => return err(*first_line, format!("unknown presheaf form `{other}`")),
    }
    Ok(())
}

/// The group a presheaf spec is bound to.
pub fn presheaf_group<'a>(doc: &'a Doc, spec: &'a PresheafSpec) -> Option<&'a str> {
    match spec {
        PresheafSpec::Phi(action) => doc.action(action).map(|(g, _)| g),
        PresheafSpec::Representable(g, _) => Some(g.as_str()),
        PresheafSpec::Raw { group, .. } => Some(group.as_str()),
    }
}

/// Serializes a category in the fixture format (used by the orbit dump).
pub fn dump_category(name: &str, c: &FinCat) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "[category {name}]").unwrap();
    writeln!(out, "objects {}", c.n_objects).unwrap();
    writeln!(out, "arrows {}", c.n_arrows()).unwrap();
    let join = |it: Vec<String>| it.join(" ");
    writeln!(out, "dom {}", join((0..c.n_arrows()).map(|f| c.dom(f).to_string()).collect()))
        .unwrap();
    writeln!(out, "cod {}", join((0..c.n_arrows()).map(|f| c.cod(f).to_string()).collect()))
        .unwrap();
    writeln!(out, "id {}", join((0..c.n_objects).map(|x| c.id(x).to_string()).collect()))
        .unwrap();
    writeln!(out, "comp").unwrap();
    for g in 0..c.n_arrows() {
        let row: Vec<String> = (0..c.n_arrows())
            .map(|f| match c.compose(g, f) {
                Some(h) => h.to_string(),
                None => "-".to_string(),
            })
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
