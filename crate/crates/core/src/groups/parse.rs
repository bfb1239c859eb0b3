//! Text formats for generators and G-sets.
//!
//! Group files hold one generator per line in cycle notation, e.g.
//! `(0 1 2)(3 4)`, optionally preceded by a `degree=N` header. Without the
//! header the degree is one more than the largest point mentioned.
//!
//! G-set files start with a `gset` line followed by one line per generator
//! listing the image of each point, e.g. `1 2 0`.
//!
//! Blank lines and lines starting with `#` are ignored in both formats.

use std::sync::Arc;

use super::{FiniteGroup, GSet, GroupError, Permutation};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the cycles of `(a b c)(d e)`; `()` or an empty string is the identity.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let rest_trim = rest.trim_start();
        if rest_trim.is_empty() {
            break;
        }
        let Some(after_open) = rest_trim.strip_prefix('(') else {
            return Err(GroupError::Parse(format!("expected '(' in {s:?}")));
        };
        let close = after_open
            .find(')')
            .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {s:?}")))?;
        let body = &after_open[..close];
        let points: Result<Vec<usize>, _> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect();
        let points = points.map_err(|e| GroupError::Parse(format!("bad point in {s:?}: {e}")))?;
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(GroupError::Parse(format!("repeated point in cycle {body:?}")));
        }
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = &after_open[close + 1..];
    }
    Ok(cycles)
}

/// Parses a permutation of the given degree in cycle notation.
pub fn parse_permutation(s: &str, degree: usize) -> Result<Permutation, GroupError> {
    Permutation::from_cycles(degree, &parse_cycles(s)?)
}

/// Parses a group file into its generators.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>, GroupError> {
    let mut degree: Option<usize> = None;
    let mut raw = Vec::new();
    for (lineno, line) in content_lines(text) {
        if let Some(d) = line.strip_prefix("degree=") {
            let d = d
                .trim()
                .parse()
                .map_err(|e| GroupError::Parse(format!("line {lineno}: bad degree: {e}")))?;
            degree = Some(d);
            continue;
        }
        raw.push(parse_cycles(line).map_err(|e| GroupError::Parse(format!("line {lineno}: {e}")))?);
    }
    let inferred = raw.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
    let degree = degree.unwrap_or(inferred);
    if degree < inferred {
        return Err(GroupError::Parse(format!("degree={degree} but point {} used", inferred - 1)));
    }
    raw.iter().map(|cycles| Permutation::from_cycles(degree, cycles)).collect()
}

/// Parses a G-set file. The group is generated by the listed point
/// permutations and acts on the points naturally.
pub fn parse_gset(text: &str) -> Result<GSet, GroupError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "gset")) => {}
        _ => return Err(GroupError::Parse("G-set file must start with a 'gset' line".into())),
    }
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        let images: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let images = images.map_err(|e| GroupError::Parse(format!("line {lineno}: {e}")))?;
        gens.push(Permutation::from_images(images)?);
    }
    if gens.is_empty() {
        return Err(GroupError::Parse("G-set file lists no generators".into()));
    }
    let group = FiniteGroup::from_generators(&gens)?;
    Ok(GSet::natural(Arc::new(group)))
}
