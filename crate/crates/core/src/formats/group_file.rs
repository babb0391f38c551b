use std::path::Path;

use super::content_lines;
use crate::error::{parse_err, Error, Result};
use crate::group::Group;
use crate::perm::Perm;

/// Parses `name`, `degree` and `gen` lines into a group. Errors carry line numbers.
pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (ln, line) in content_lines(text) {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" if !rest.is_empty() => name = Some(rest.to_string()),
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(ln, "degree given twice"));
                }
                let n: usize = rest.parse().map_err(|_| parse_err(ln, format!("bad degree {rest:?}")))?;
                if n == 0 {
                    return Err(parse_err(ln, "degree must be positive"));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or_else(|| parse_err(ln, "gen before degree"))?;
                let imgs: Vec<u32> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| parse_err(ln, format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?;
                if imgs.len() != n {
                    return Err(parse_err(ln, format!("degree mismatch: {} images for degree {n}", imgs.len())));
                }
                let p = Perm::from_images(&imgs).map_err(|e| parse_err(ln, format!("not a bijection: {e}")))?;
                gens.push(p);
            }
            _ => return Err(parse_err(ln, format!("unknown line {line:?}"))),
        }
    }
    let degree = degree.ok_or_else(|| parse_err(0, "missing degree line"))?;
    let g = Group::new(degree, gens)?;
    Ok(match name {
        Some(n) => g.named(n),
        None => g,
    })
}

pub fn read_group_file(path: &Path) -> Result<Group> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let g = parse_group_file(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    if g.label().is_some() {
        return Ok(g);
    }
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(g.named(stem))
}

pub fn serialize_group(g: &Group) -> String {
    let mut s = String::new();
    if let Some(n) = g.label() {
        s.push_str(&format!("name {n}\n"));
    }
    s.push_str(&format!("degree {}\n", g.degree()));
    for p in g.generators() {
        let imgs: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("gen {}\n", imgs.join(" ")));
    }
    s
}
