//! The problem-file format: a line-based description of one graded ring, a
//! set of presented modules, maps between them, distinguished pairs, and
//! declared short exact sequences. Parsing reports the offending line on
//! every error; semantic validation (weights, regular sequence,
//! homogeneity) happens while building.
//!
//! ```text
//! # ring
//! field q                 # or fp:<prime>
//! vars x:1 y:1            # name:weight
//! order degrevlex         # optional; degrevlex (default) or deglex
//! relations
//!   x*y
//! end
//!
//! module Rx
//!   generators 0
//!   relations
//!     x                   # one column per line, entries comma-separated
//!   end
//! end
//!
//! map f Rx1 Rx            # one line per source generator: its image
//!   y
//! end
//!
//! pair P Rx Ry
//! ses S Rx1 Rx K f g
//! ```

use crate::freemod::{PolyMatrix, PolyVec};
use crate::grammar::parse_poly;
use crate::monomial::MonomialOrder;
use crate::presentation::Presentation;
use crate::ring::{Base, RingSpec};
use crate::scalar::FieldSpec;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
pub struct ProblemError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ProblemError {}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ProblemError> {
    Err(ProblemError {
        line,
        msg: msg.into(),
    })
}

pub struct ProblemMap {
    pub src: String,
    pub dst: String,
    pub matrix: PolyMatrix,
}

pub struct SesDecl {
    pub left: String,
    pub middle: String,
    pub right: String,
    pub alpha: String,
    pub beta: String,
}

pub struct ProblemFile {
    pub ring: Arc<RingSpec>,
    pub modules: BTreeMap<String, Presentation>,
    pub module_order: Vec<String>,
    pub maps: BTreeMap<String, ProblemMap>,
    pub pairs: BTreeMap<String, (String, String)>,
    pub ses: BTreeMap<String, SesDecl>,
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let stripped = match l.find('#') {
                    Some(p) => &l[..p],
                    None => l,
                };
                (i + 1, stripped.trim())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let r = self.peek();
        if r.is_some() {
            self.pos += 1;
        }
        r
    }

    fn last_line(&self) -> usize {
        self.items.last().map(|&(n, _)| n).unwrap_or(0)
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ProblemError> {
        ProblemFile::parse_with_field(text, None)
    }

    /// Parse, optionally overriding the declared coefficient field.
    pub fn parse_with_field(
        text: &str,
        field_override: Option<FieldSpec>,
    ) -> Result<ProblemFile, ProblemError> {
        let mut lines = Lines::new(text);
        let mut field: Option<(usize, FieldSpec)> = None;
        let mut vars: Vec<String> = Vec::new();
        let mut weights: Vec<u32> = Vec::new();
        let mut vars_line = 0usize;
        let mut order = MonomialOrder::DegRevLex;
        let mut relations: Vec<(usize, String)> = Vec::new();
        // ring header
        loop {
            let (ln, l) = match lines.peek() {
                Some(x) => x,
                None => break,
            };
            let mut words = l.split_whitespace();
            match words.next() {
                Some("field") => {
                    lines.next();
                    let spec = words.next().ok_or(ProblemError {
                        line: ln,
                        msg: "expected a field after `field`".into(),
                    })?;
                    let f = FieldSpec::parse(spec)
                        .map_err(|e| ProblemError { line: ln, msg: e })?;
                    field = Some((ln, f));
                }
                Some("vars") => {
                    lines.next();
                    vars_line = ln;
                    for w in words {
                        let (name, weight) = match w.split_once(':') {
                            Some((n, wt)) => (n.to_string(), wt),
                            None => return err(ln, format!("variable `{w}` needs `name:weight`")),
                        };
                        let wt: u32 = weight.parse().map_err(|_| ProblemError {
                            line: ln,
                            msg: format!("bad weight `{weight}`"),
                        })?;
                        vars.push(name);
                        weights.push(wt);
                    }
                }
                Some("order") => {
                    lines.next();
                    order = match words.next() {
                        Some("degrevlex") => MonomialOrder::DegRevLex,
                        Some("deglex") => MonomialOrder::DegLex,
                        other => {
                            return err(
                                ln,
                                format!("unknown order `{}`", other.unwrap_or("")),
                            )
                        }
                    };
                }
                Some("relations") => {
                    lines.next();
                    loop {
                        match lines.next() {
                            Some((_, "end")) => break,
                            Some((rl, rline)) => relations.push((rl, rline.to_string())),
                            None => return err(ln, "unterminated `relations` block"),
                        }
                    }
                }
                _ => break,
            }
        }
        let (_, field) = match (field, field_override) {
            (_, Some(f)) => (0, f),
            (Some(x), None) => x,
            (None, None) => return err(1, "missing `field` declaration"),
        };
        if vars.is_empty() {
            return err(1, "missing `vars` declaration");
        }
        let ctx = crate::poly::PolyCtx::new(field, vars.clone(), weights.clone(), order);
        let mut rels = Vec::new();
        for (rl, s) in &relations {
            let p = parse_poly(s, &ctx).map_err(|e| ProblemError {
                line: *rl,
                msg: format!("relation: {e}"),
            })?;
            rels.push(p);
        }
        let ring = RingSpec::new(field, vars, weights, order, rels).map_err(|e| ProblemError {
            line: vars_line,
            msg: format!("invalid ring: {e}"),
        })?;
        let ring = Arc::new(ring);
        let mut modules: BTreeMap<String, Presentation> = BTreeMap::new();
        let mut module_order = Vec::new();
        let mut maps: BTreeMap<String, ProblemMap> = BTreeMap::new();
        let mut pairs = BTreeMap::new();
        let mut ses = BTreeMap::new();
        while let Some((ln, l)) = lines.next() {
            let mut words = l.split_whitespace();
            match words.next() {
                Some("module") => {
                    let name = match words.next() {
                        Some(n) if crate::grammar::is_valid_ident(n) => n.to_string(),
                        _ => return err(ln, "expected a module name"),
                    };
                    if modules.contains_key(&name) {
                        return err(ln, format!("module `{name}` declared twice"));
                    }
                    let pres = parse_module(&mut lines, &ring, ln)?;
                    modules.insert(name.clone(), pres);
                    module_order.push(name);
                }
                Some("map") => {
                    let name = match words.next() {
                        Some(n) if crate::grammar::is_valid_ident(n) => n.to_string(),
                        _ => return err(ln, "expected a map name"),
                    };
                    let src = words.next().map(str::to_string);
                    let dst = words.next().map(str::to_string);
                    let (src, dst) = match (src, dst) {
                        (Some(s), Some(d)) => (s, d),
                        _ => return err(ln, "expected `map NAME SRC DST`"),
                    };
                    let srcm = modules.get(&src).ok_or(ProblemError {
                        line: ln,
                        msg: format!("unknown module `{src}`"),
                    })?;
                    let dstm = modules.get(&dst).ok_or(ProblemError {
                        line: ln,
                        msg: format!("unknown module `{dst}`"),
                    })?;
                    let mut cols = Vec::new();
                    loop {
                        match lines.next() {
                            Some((_, "end")) => break,
                            Some((rl, row)) => {
                                cols.push(parse_vector(row, dstm.ngens(), &ring, rl)?)
                            }
                            None => return err(ln, "unterminated `map` block"),
                        }
                    }
                    if cols.len() != srcm.ngens() {
                        return err(
                            ln,
                            format!(
                                "map `{name}` has {} rows but `{src}` has {} generators",
                                cols.len(),
                                srcm.ngens()
                            ),
                        );
                    }
                    let matrix = PolyMatrix::from_columns(dstm.ngens(), cols);
                    if let Err((i, j)) = matrix.check_homogeneous(
                        ring.ctx(),
                        &dstm.gen_twists,
                        &srcm.gen_twists,
                    ) {
                        return err(
                            ln,
                            format!("map `{name}` entry ({i},{j}) is not homogeneous of degree 0"),
                        );
                    }
                    maps.insert(name, ProblemMap { src, dst, matrix });
                }
                Some("pair") => {
                    let name = words.next().map(str::to_string);
                    let m = words.next().map(str::to_string);
                    let n = words.next().map(str::to_string);
                    match (name, m, n) {
                        (Some(name), Some(m), Some(n)) => {
                            for x in [&m, &n] {
                                if !modules.contains_key(x) {
                                    return err(ln, format!("unknown module `{x}`"));
                                }
                            }
                            pairs.insert(name, (m, n));
                        }
                        _ => return err(ln, "expected `pair NAME M N`"),
                    }
                }
                Some("ses") => {
                    let parts: Vec<String> = words.map(str::to_string).collect();
                    if parts.len() != 6 {
                        return err(ln, "expected `ses NAME A B C ALPHA BETA`");
                    }
                    for x in &parts[1..4] {
                        if !modules.contains_key(x) {
                            return err(ln, format!("unknown module `{x}`"));
                        }
                    }
                    for x in &parts[4..6] {
                        if !maps.contains_key(x) {
                            return err(ln, format!("unknown map `{x}`"));
                        }
                    }
                    ses.insert(
                        parts[0].clone(),
                        SesDecl {
                            left: parts[1].clone(),
                            middle: parts[2].clone(),
                            right: parts[3].clone(),
                            alpha: parts[4].clone(),
                            beta: parts[5].clone(),
                        },
                    );
                }
                Some(other) => return err(ln, format!("unknown directive `{other}`")),
                None => unreachable!(),
            }
        }
        let _ = lines.last_line();
        Ok(ProblemFile {
            ring,
            modules,
            module_order,
            maps,
            pairs,
            ses,
        })
    }
}

fn parse_vector(
    row: &str,
    rank: usize,
    ring: &Arc<RingSpec>,
    line: usize,
) -> Result<PolyVec, ProblemError> {
    let parts: Vec<&str> = row.split(',').map(str::trim).collect();
    if parts.len() != rank {
        return err(
            line,
            format!("expected {rank} comma-separated entries, found {}", parts.len()),
        );
    }
    let mut comps = Vec::with_capacity(rank);
    for p in parts {
        let poly = parse_poly(p, ring.ctx()).map_err(|e| ProblemError {
            line,
            msg: format!("entry `{p}`: {e}"),
        })?;
        comps.push(poly);
    }
    Ok(PolyVec { comps })
}

fn parse_module(
    lines: &mut Lines<'_>,
    ring: &Arc<RingSpec>,
    start: usize,
) -> Result<Presentation, ProblemError> {
    let mut twists: Option<Vec<i64>> = None;
    let mut cols: Vec<PolyVec> = Vec::new();
    let mut rel_lines: Vec<usize> = Vec::new();
    loop {
        let (ln, l) = match lines.next() {
            Some(x) => x,
            None => return err(start, "unterminated `module` block"),
        };
        let mut words = l.split_whitespace();
        match words.next() {
            Some("generators") => {
                let mut t = Vec::new();
                for w in words {
                    let v: i64 = w.parse().map_err(|_| ProblemError {
                        line: ln,
                        msg: format!("bad generator degree `{w}`"),
                    })?;
                    t.push(v);
                }
                twists = Some(t);
            }
            Some("relations") => {
                let rank = match &twists {
                    Some(t) => t.len(),
                    None => return err(ln, "`generators` must precede `relations`"),
                };
                loop {
                    match lines.next() {
                        Some((_, "end")) => break,
                        Some((rl, row)) => {
                            cols.push(parse_vector(row, rank, ring, rl)?);
                            rel_lines.push(rl);
                        }
                        None => return err(ln, "unterminated `relations` block"),
                    }
                }
            }
            Some("end") => break,
            Some(other) => return err(ln, format!("unknown module directive `{other}`")),
            None => unreachable!(),
        }
    }
    let twists = match twists {
        Some(t) => t,
        None => return err(start, "module is missing its `generators` line"),
    };
    let cols_nonzero: Vec<PolyVec> = cols.iter().filter(|c| !c.is_zero()).cloned().collect();
    let mut pres_cols = Vec::new();
    for (c, &ln) in cols.iter().zip(&rel_lines) {
        if c.is_zero() {
            continue;
        }
        match c.homogeneous_degree(ring.ctx(), &twists) {
            Some(_) => pres_cols.push(c.clone()),
            None => return err(ln, "relation is not homogeneous"),
        }
    }
    let _ = cols_nonzero;
    Ok(Presentation::from_columns(
        ring.clone(),
        Base::R,
        twists,
        pres_cols,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const NODE: &str = "\
field q
vars x:1 y:1
relations
  x*y
end

module Rx
  generators 0
  relations
    x
  end
end

module Rx1
  generators 1
  relations
    x
  end
end

module K
  generators 0
  relations
    x
    y
  end
end

map mult_y Rx1 Rx
  y
end

map proj Rx K
  1
end

pair P Rx Rx
ses S Rx1 Rx K mult_y proj
";

    #[test]
    fn parses_ring_modules_maps_pairs() {
        let pf = ProblemFile::parse(NODE).unwrap();
        assert_eq!(pf.ring.codim(), 1);
        assert_eq!(pf.modules.len(), 3);
        assert_eq!(pf.modules["K"].nrels(), 2);
        assert_eq!(pf.maps["mult_y"].matrix.cols(), 1);
        assert!(pf.pairs.contains_key("P"));
        assert!(pf.ses.contains_key("S"));
        assert_eq!(pf.module_order, vec!["Rx", "Rx1", "K"]);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "field q\nvars x:1 y:1\nrelations\n  x*y\nend\nmodule M\n  generators 0\n  relations\n    x + y^2\n  end\nend\n";
        let e = ProblemFile::parse(bad).err().unwrap();
        assert_eq!(e.line, 9);
        assert!(e.msg.contains("not homogeneous"));
    }

    #[test]
    fn rejects_inhomogeneous_map() {
        let bad = "field q\nvars x:1 y:1\nrelations\n  x*y\nend\nmodule A\n  generators 0\nend\nmodule B\n  generators 0\nend\nmap f A B\n  x\nend\n";
        let e = ProblemFile::parse(bad).err().unwrap();
        assert!(e.msg.contains("not homogeneous"), "{e}");
    }

    #[test]
    fn field_override_switches_arithmetic() {
        let pf =
            ProblemFile::parse_with_field(NODE, Some(FieldSpec::parse("fp:7").unwrap())).unwrap();
        assert_eq!(pf.ring.ctx().field, FieldSpec::parse("fp:7").unwrap());
    }

    #[test]
    fn unknown_directive_is_an_error() {
        let bad = "field q\nvars x:1\nfrobnicate\n";
        let e = ProblemFile::parse(bad).err().unwrap();
        assert_eq!(e.line, 3);
    }
}
