//! Text formats for domains and SCF tables.
//!
//! Domain file: an optional `alternatives: <labels>` header, then one
//! preference per line, best first, labels separated by whitespace. Blank
//! lines and lines starting with `#` are ignored. Without a header the
//! first preference line fixes the labels. Preferences are numbered from 1
//! in file order.
//!
//! SCF file: a header `scf n=<n> domain=<ref>` followed by one line per
//! profile, `i1 .. in -> label`, with 1-based preference indices. Every
//! profile must appear exactly once.

use sha2::{Digest, Sha256};

use crate::domains::Domain;
use crate::error::{parse_error, Error, Result};
use crate::orders::{AlternativeSet, LinearOrder};
use crate::scf::{profile_count, ScfTable};

/// Non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, line))
    })
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    let mut start_col = 0;
    for (byte, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &line[s..byte]));
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &line[s..]));
    }
    out
}

fn line_end_column(line: &str) -> usize {
    line.trim_end().chars().count() + 1
}

const HEADER: &str = "alternatives:";

pub fn parse_domain(text: &str) -> Result<Domain> {
    let mut alts: Option<AlternativeSet> = None;
    let mut orders: Vec<LinearOrder> = Vec::new();
    let mut lines_of: Vec<usize> = Vec::new();

    for (lineno, line) in content_lines(text) {
        let toks = tokens(line);
        if let Some(rest) = toks[0].1.strip_prefix(HEADER) {
            if alts.is_some() || !orders.is_empty() {
                return Err(parse_error(lineno, toks[0].0, "header must come before any preference"));
            }
            let mut labels: Vec<&str> = Vec::new();
            if !rest.is_empty() {
                labels.push(rest);
            }
            labels.extend(toks[1..].iter().map(|t| t.1));
            let set = AlternativeSet::new(labels).map_err(|e| parse_error(lineno, toks[0].0, e.to_string()))?;
            alts = Some(set);
            continue;
        }
        if toks.iter().any(|t| t.1.contains(':')) {
            let (col, tok) = toks.iter().find(|t| t.1.contains(':')).unwrap();
            return Err(parse_error(lineno, *col, format!("unexpected `{tok}`")));
        }
        let set = match &alts {
            Some(set) => set,
            None => {
                let set = AlternativeSet::new(toks.iter().map(|t| t.1))
                    .map_err(|e| parse_error(lineno, toks[0].0, e.to_string()))?;
                alts.insert(set)
            }
        };
        let mut ranking = Vec::with_capacity(set.len());
        let mut seen = vec![false; set.len()];
        for &(col, tok) in &toks {
            let a = set
                .index_of(tok)
                .ok_or_else(|| parse_error(lineno, col, format!("unknown alternative `{tok}`")))?;
            if seen[a] {
                return Err(parse_error(lineno, col, format!("alternative `{tok}` repeated")));
            }
            seen[a] = true;
            ranking.push(a);
        }
        if ranking.len() != set.len() {
            return Err(parse_error(
                lineno,
                line_end_column(line),
                format!("preference ranks {} of {} alternatives", ranking.len(), set.len()),
            ));
        }
        orders.push(LinearOrder::new(ranking)?);
        lines_of.push(lineno);
    }

    let Some(alts) = alts else {
        return Err(parse_error(1, 1, "no alternatives or preferences"));
    };
    if orders.is_empty() {
        return Err(parse_error(text.lines().count().max(1), 1, "no preferences"));
    }
    Domain::new(alts, orders).map_err(|e| match e {
        Error::DuplicatePreference { first, second } => parse_error(
            lines_of[second - 1],
            1,
            format!("duplicate preference: P{second} repeats P{first} (line {})", lines_of[first - 1]),
        ),
        other => other,
    })
}

/// Canonical text: header line, then one preference per line.
pub fn domain_to_text(d: &Domain) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    for label in d.alts().labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for p in d.prefs() {
        out.push_str(&p.display(d.alts()).to_string());
        out.push('\n');
    }
    out
}

/// `sha256:` and the first 16 hex digits of the hash of the canonical text.
pub fn domain_digest(d: &Domain) -> String {
    let hash = Sha256::digest(domain_to_text(d).as_bytes());
    format!("sha256:{}", &hex::encode(hash)[..16])
}

/// A parsed SCF file; `domain_ref` is the header's `domain=` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScfFile {
    pub domain_ref: String,
    pub table: ScfTable,
}

pub fn parse_scf(text: &str, d: &Domain) -> Result<ScfFile> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(parse_error(1, 1, "missing `scf` header"));
    };
    let htoks = tokens(header);
    if htoks[0].1 != "scf" {
        return Err(parse_error(hline, htoks[0].0, "expected `scf n=<n> domain=<ref>`"));
    }
    let (mut n, mut domain_ref) = (None, None);
    for &(col, tok) in &htoks[1..] {
        if let Some(v) = tok.strip_prefix("n=") {
            let parsed: usize = v
                .parse()
                .map_err(|_| parse_error(hline, col, format!("bad voter count `{v}`")))?;
            if parsed < 2 {
                return Err(parse_error(hline, col, "need at least 2 voters"));
            }
            if n.replace(parsed).is_some() {
                return Err(parse_error(hline, col, "repeated `n=`"));
            }
        } else if let Some(v) = tok.strip_prefix("domain=") {
            if v.is_empty() {
                return Err(parse_error(hline, col, "empty domain reference"));
            }
            if domain_ref.replace(v.to_string()).is_some() {
                return Err(parse_error(hline, col, "repeated `domain=`"));
            }
        } else {
            return Err(parse_error(hline, col, format!("unexpected `{tok}` in header")));
        }
    }
    let end = line_end_column(header);
    let n = n.ok_or_else(|| parse_error(hline, end, "header lacks `n=`"))?;
    let domain_ref = domain_ref.ok_or_else(|| parse_error(hline, end, "header lacks `domain=`"))?;
    let count = profile_count(d.len(), n).map_err(|e| parse_error(hline, 1, e.to_string()))?;

    let mut values: Vec<Option<u8>> = vec![None; count];
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks = tokens(line);
        let Some(arrow) = toks.iter().position(|t| t.1 == "->") else {
            return Err(parse_error(lineno, line_end_column(line), "expected `->`"));
        };
        if arrow != n {
            let col = toks.get(arrow.min(n)).map_or(1, |t| t.0);
            return Err(parse_error(lineno, col, format!("profile needs {n} preference indices, found {arrow}")));
        }
        let mut idx = 0usize;
        for &(col, tok) in &toks[..n] {
            let p: usize = tok
                .parse()
                .ok()
                .filter(|&p| (1..=d.len()).contains(&p))
                .ok_or_else(|| {
                    parse_error(lineno, col, format!("`{tok}` is not a preference index in 1..={}", d.len()))
                })?;
            idx = idx * d.len() + (p - 1);
        }
        let outcome = match &toks[arrow + 1..] {
            [(col, label)] => d
                .alts()
                .index_of(label)
                .ok_or_else(|| parse_error(lineno, *col, format!("unknown alternative `{label}`")))?,
            [] => return Err(parse_error(lineno, line_end_column(line), "missing outcome after `->`")),
            [_, (col, _), ..] => return Err(parse_error(lineno, *col, "expected a single outcome label")),
        };
        if values[idx].replace(outcome as u8).is_some() {
            return Err(parse_error(lineno, toks[0].0, "profile listed twice"));
        }
    }

    let mut full = Vec::with_capacity(count);
    for (idx, v) in values.iter().enumerate() {
        match v {
            Some(a) => full.push(*a as usize),
            None => {
                let mut prefs = vec![0; n];
                crate::scf::decode_into(idx, d.len(), &mut prefs);
                let shown: Vec<String> = prefs.iter().map(|p| (p + 1).to_string()).collect();
                return Err(parse_error(
                    last_line + 1,
                    1,
                    format!("missing profile `{}` ({} of {count} profiles given)", shown.join(" "), values.iter().flatten().count()),
                ));
            }
        }
    }
    Ok(ScfFile {
        domain_ref,
        table: ScfTable::new(d.clone(), n, full)?,
    })
}

pub fn scf_to_text(f: &ScfTable, domain_ref: &str) -> String {
    let d = f.domain();
    let mut out = format!("scf n={} domain={}\n", f.n(), domain_ref);
    for idx in 0..f.len() {
        for p in f.decode(idx) {
            out.push_str(&(p + 1).to_string());
            out.push(' ');
        }
        out.push_str("-> ");
        out.push_str(d.alts().label(f.at(idx)));
        out.push('\n');
    }
    out
}
