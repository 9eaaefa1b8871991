//! Line-oriented group files.
//!
//! ```text
//! permgroup 4
//! gen (1,2,3,4)
//! gen img 2,1,3,4
//! ```
//!
//! Cycles and images are 1-based; `#` starts a comment. Matrix groups use
//! the `matgroup d q` format of [`MatGroup::parse`].

use crate::error::{Error, Result};
use crate::gf::MatGroup;
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub enum GroupFile {
    Perm(PermGroup),
    Linear(MatGroup),
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let first = text
        .lines()
        .map(strip_comment)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    if first.starts_with("matgroup") {
        let body: Vec<&str> = text.lines().map(strip_comment).filter(|l| !l.is_empty()).collect();
        return MatGroup::parse(&body.join("\n")).map(GroupFile::Linear);
    }
    parse_perm_group(text).map(GroupFile::Perm)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_perm_group(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty group file".into()))?;
    let degree: usize = header
        .strip_prefix("permgroup")
        .and_then(|d| d.trim().parse().ok())
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Parse(format!("expected `permgroup <degree>`, got {:?}", header)))?;
    let mut gens = Vec::new();
    for (no, line) in lines {
        let at = |e: Error| Error::Parse(format!("line {}: {}", no, e));
        let body = line
            .strip_prefix("gen")
            .ok_or_else(|| Error::Parse(format!("line {}: expected `gen`", no)))?
            .trim();
        let g = match body.strip_prefix("img") {
            Some(images) => parse_images(images, degree).map_err(at)?,
            None => parse_cycles(body, degree).map_err(at)?,
        };
        gens.push(g);
    }
    PermGroup::new(degree, gens)
}

fn parse_images(s: &str, degree: usize) -> Result<Permutation> {
    let images = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u32>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(Error::Parse(format!("bad image {:?}", t))),
        })
        .collect::<Result<Vec<u32>>>()?;
    if images.len() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: images.len(),
        });
    }
    Permutation::from_images(images)
}

/// `(1,2,3)(4,5)`; `()` is the identity.
fn parse_cycles(s: &str, degree: usize) -> Result<Permutation> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("bad cycle notation {:?}", s)))?;
        if !inner.0.is_empty() {
            let cycle = inner
                .0
                .split(',')
                .map(|t| match t.parse::<usize>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(Error::Parse(format!("bad point {:?}", t))),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        rest = inner.1;
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs)
}

/// Writes a group in the cycle form `parse_perm_group` reads back.
pub fn write_perm_group(g: &PermGroup) -> String {
    let mut out = format!("permgroup {}\n", g.degree());
    for s in g.generators() {
        let cycles: String = s
            .cycles()
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect();
        out.push_str(&format!("gen {}\n", if cycles.is_empty() { "()" } else { &cycles }));
    }
    out
}

pub fn write_group_file(g: &GroupFile) -> String {
    match g {
        GroupFile::Perm(p) => write_perm_group(p),
        GroupFile::Linear(m) => m.to_text(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn cycles_and_images() {
        let g = parse_perm_group("# S4\npermgroup 4\ngen (1,2,3,4)\ngen img 2,1,3,4\n").unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        let text = write_perm_group(&g);
        assert!(text.starts_with("permgroup 4\ngen (1,2,3,4)\ngen (1,2)\n"), "{}", text);
        assert_eq!(parse_perm_group(&text).unwrap().order(), g.order());
    }

    #[test]
    fn identity_and_fixed_points() {
        let g = parse_perm_group("permgroup 3\ngen ()\ngen (1, 3)\n").unwrap();
        assert_eq!(g.order(), BigUint::from(2u32));
        assert_eq!(g.orbits().len(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_perm_group("permgroup 3\ngen (1,4)\n").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{}", e);
        assert!(parse_perm_group("permgroup 3\ngen img 1,2\n").is_err());
        assert!(parse_perm_group("perm 3\n").is_err());
        assert!(parse_perm_group("permgroup 3\ngen (1,2\n").is_err());
        assert!(parse_group_file("").is_err());
    }

    #[test]
    fn matrix_groups_pass_through() {
        match parse_group_file("matgroup 2 2\ngen\n11\n01\n").unwrap() {
            GroupFile::Linear(h) => assert_eq!(h.dim(), 2),
            GroupFile::Perm(_) => panic!("expected a matrix group"),
        }
    }
}
