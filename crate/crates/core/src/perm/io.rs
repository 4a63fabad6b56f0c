//! Plain-text group files.
//!
//! ```text
//! # comment
//! degree 4
//! 1 0 3 2
//! 1 2 0 3
//! ```
//!
//! Line 1 (after comments) is `degree d`; every further nonblank line is one
//! generator as `d` space-separated 0-based images.

use super::group::PermutationGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};

pub fn parse_group(text: &str) -> Result<PermutationGroup> {
    let mut lines = significant_lines(text);
    let degree = parse_degree(&mut lines)?;
    let mut gens = Vec::new();
    for (line_no, line) in lines {
        gens.push(parse_permutation(line, degree, line_no)?);
    }
    PermutationGroup::new(degree, gens)
}

pub(crate) fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_degree<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `degree d` header".into(),
    })?;
    let mut words = header.split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some("degree"), Some(d), None) => match d.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(Error::Parse {
                line: line_no,
                message: format!("invalid degree `{d}`"),
            }),
        },
        _ => Err(Error::Parse {
            line: line_no,
            message: format!("expected `degree d`, found `{header}`"),
        }),
    }
}

/// One generator line: whitespace- or comma-separated images.
pub fn parse_permutation(line: &str, degree: usize, line_no: usize) -> Result<Permutation> {
    let images = line
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{w}` is not a point index"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if images.len() != degree {
        return Err(Error::Parse {
            line: line_no,
            message: format!("expected {degree} images, found {}", images.len()),
        });
    }
    Permutation::new(images).map_err(|e| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })
}

/// Canonical serialization: generators sorted lexicographically.
pub fn write_group(group: &PermutationGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    let gens = group.canonical_generators();
    if gens.is_empty() {
        out.push_str(&format!("{}\n", group.identity()));
    }
    for g in gens {
        out.push_str(&format!("{g}\n"));
    }
    out
}
