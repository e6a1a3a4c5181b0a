//! Plain-text poset files and streams.
//!
//! ```text
//! poset 4
//! # comment
//! a < b
//! a < c < d
//! e
//! ```
//!
//! Names are alphanumeric tokens numbered by first appearance. A line of
//! bare names only declares vertices. Vertices beyond the named ones are
//! isolated and named by their index. Streams separate records by blank
//! lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::{Poset, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPoset {
    pub poset: Poset,
    pub names: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn is_name(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses one record. `first_line` is the 1-based line number of `text`
/// within its file, for messages.
pub fn parse_poset_at(text: &str, first_line: usize) -> Result<NamedPoset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + first_line, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(first_line, "empty input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["poset", n] => n
            .parse::<usize>()
            .map_err(|_| parse_err(header_line, format!("bad vertex count `{n}`")))?,
        _ => return Err(parse_err(header_line, "expected `poset <n>`")),
    };
    if n > MAX_VERTICES {
        return Err(Error::Size { what: "poset file", got: n, max: MAX_VERTICES });
    }

    let mut names: Vec<String> = Vec::new();
    let mut relations = Vec::new();
    let index_of = |name: &str, line: usize, names: &mut Vec<String>| -> Result<usize> {
        if !is_name(name) {
            return Err(parse_err(line, format!("bad vertex name `{name}`")));
        }
        if let Some(i) = names.iter().position(|x| x == name) {
            return Ok(i);
        }
        if names.len() == n {
            return Err(parse_err(line, format!("more than {n} vertex names")));
        }
        names.push(name.to_string());
        Ok(names.len() - 1)
    };
    for (line, body) in lines {
        if body.contains('<') {
            let chain: Vec<&str> = body.split('<').map(str::trim).collect();
            let ids = chain
                .iter()
                .map(|t| index_of(t, line, &mut names))
                .collect::<Result<Vec<_>>>()?;
            relations.extend(ids.windows(2).map(|w| (w[0], w[1])));
        } else {
            for tok in body.split_whitespace() {
                index_of(tok, line, &mut names)?;
            }
        }
    }
    for i in names.len()..n {
        let fresh = (i..).map(|k| k.to_string()).find(|s| !names.contains(s)).unwrap();
        names.push(fresh);
    }
    let poset = Poset::from_relations(n, &relations).map_err(|e| match e {
        Error::Cycle(v) => parse_err(header_line, format!("relations contain a cycle through `{}`", names[v])),
        other => other,
    })?;
    Ok(NamedPoset { poset, names })
}

pub fn parse_poset(text: &str) -> Result<NamedPoset> {
    parse_poset_at(text, 1)
}

/// Parses a blank-line separated stream of records.
pub fn parse_stream(text: &str) -> Result<Vec<NamedPoset>> {
    let mut out = Vec::new();
    let mut start = None;
    let mut buf = String::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if let Some(s) = start.take() {
                out.push(parse_poset_at(&buf, s)?);
                buf.clear();
            }
        } else {
            start.get_or_insert(i + 1);
            buf.push_str(line);
            buf.push('\n');
        }
    }
    if let Some(s) = start {
        out.push(parse_poset_at(&buf, s)?);
    }
    Ok(out)
}

/// Header, one line declaring every vertex, then the cover relations.
pub fn write_poset(p: &Poset, names: Option<&[String]>) -> String {
    let name = |v: usize| names.map_or_else(|| v.to_string(), |ns| ns[v].clone());
    let mut s = format!("poset {}\n", p.len());
    if !p.is_empty() {
        let all: Vec<String> = (0..p.len()).map(name).collect();
        writeln!(s, "{}", all.join(" ")).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(s, "{} < {}", name(a), name(b)).unwrap();
    }
    s
}

pub fn write_stream<'a>(posets: impl IntoIterator<Item = &'a Poset>) -> String {
    posets.into_iter().map(|p| write_poset(p, None)).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_chains_and_comments() {
        let np = parse_poset("poset 4\n# x\na < b < c\n\nd\n").unwrap();
        assert_eq!(np.names, vec!["a", "b", "c", "d"]);
        assert!(np.poset.lt(0, 2));
        assert!(np.poset.incomparable(3, 0));
    }

    #[test]
    fn unnamed_vertices_are_isolated() {
        let np = parse_poset("poset 3\nx < y\n").unwrap();
        assert_eq!(np.names, vec!["x", "y", "2"]);
        let empty = parse_poset("poset 0\n").unwrap();
        assert!(empty.poset.is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poset(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset("poset x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset("poset 1\na < b"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poset("poset 2\na < b\nb < a"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset("poset 2\na <"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset("poset 65"), Err(Error::Size { .. })));
    }

    #[test]
    fn round_trip() {
        let p = Poset::from_relations(5, &[(0, 1), (1, 2), (3, 2)]).unwrap();
        let text = write_poset(&p, None);
        assert_eq!(parse_poset(&text).unwrap().poset, p);
        let stream = write_stream([&p, &Poset::antichain(2), &Poset::antichain(0)]);
        let back = parse_stream(&stream).unwrap();
        assert_eq!(back.len(), 3);
        assert_eq!(back[1].poset, Poset::antichain(2));
        assert!(back[2].poset.is_empty());
    }
}
