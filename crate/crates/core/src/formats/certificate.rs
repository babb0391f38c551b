use num_bigint::BigUint;

use super::content_lines;
use crate::base::{CertKind, Certificate, Relation};
use crate::double_coset::{CensusEntry, DoubleCosetCensus};
use crate::error::{parse_err, Result};
use crate::perm::Perm;
use crate::random::RandomSource;

fn images(p: &Perm) -> String {
    p.images().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn serialize_certificate(c: &Certificate) -> String {
    let mut s = format!("CERT {}\n", c.kind.as_str());
    s += &format!("GROUP {} ORDER {}\n", c.group, c.group_order);
    s += &format!("SUBGROUP {} ORDER {}\n", c.subgroup, c.subgroup_order);
    for x in &c.conjugators {
        s += &format!("CONJUGATOR {}\n", images(x));
    }
    if let Some(r) = &c.replay {
        s += &format!("SEED {} STREAM {}\n", r.seed, r.stream);
    }
    if let Some(census) = &c.census {
        s += &format!("CENSUS {}\n", if census.complete { "complete" } else { "partial" });
        for e in &census.entries {
            s += &format!("ENTRY {} {}\n", e.size, images(&e.rep));
        }
    }
    s += &format!("ESTABLISHES b {} {}\n", c.relation.as_str(), c.value);
    s
}

fn perm(ln: usize, toks: &[&str]) -> Result<Perm> {
    let imgs: Vec<u32> = toks.iter().map(|t| t.parse().map_err(|_| parse_err(ln, format!("bad point {t:?}")))).collect::<Result<_>>()?;
    Perm::from_images(&imgs).map_err(|e| parse_err(ln, e.to_string()))
}

fn big(ln: usize, t: &str) -> Result<BigUint> {
    t.parse().map_err(|_| parse_err(ln, format!("bad integer {t:?}")))
}

/// Several certificates, one after another, as written by [`serialize_certificates`].
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>> {
    let mut starts: Vec<usize> = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    for (i, l) in lines.iter().enumerate() {
        if l.trim_start().starts_with("CERT ") {
            starts.push(i);
        }
    }
    if starts.is_empty() {
        return Err(parse_err(0, "missing CERT line"));
    }
    let mut out = Vec::new();
    for (k, &s) in starts.iter().enumerate() {
        let e = starts.get(k + 1).copied().unwrap_or(lines.len());
        // Keep line numbers meaningful by padding with blank lines.
        let chunk = "\n".repeat(s) + &lines[s..e].join("\n");
        out.push(parse_certificate(&chunk)?);
    }
    Ok(out)
}

pub fn serialize_certificates(cs: &[Certificate]) -> String {
    cs.iter().map(serialize_certificate).collect::<Vec<_>>().join("\n")
}

/// Parses a certificate. Nothing here checks the claim; call `Certificate::verify`.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut kind = None;
    let mut group = None;
    let mut subgroup = None;
    let mut conjugators = Vec::new();
    let mut replay = None;
    let mut census: Option<(bool, Vec<CensusEntry>)> = None;
    let mut established = None;
    for (ln, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["CERT", k] => kind = Some(CertKind::parse(k).ok_or_else(|| parse_err(ln, format!("unknown kind {k}")))?),
            ["GROUP", n, "ORDER", o] => group = Some((n.to_string(), big(ln, o)?)),
            ["SUBGROUP", n, "ORDER", o] => subgroup = Some((n.to_string(), big(ln, o)?)),
            ["CONJUGATOR", rest @ ..] => conjugators.push(perm(ln, rest)?),
            ["SEED", s, "STREAM", t] => {
                let s = s.parse().map_err(|_| parse_err(ln, "bad seed"))?;
                let t = t.parse().map_err(|_| parse_err(ln, "bad stream"))?;
                replay = Some(RandomSource::new(s, t));
            }
            ["CENSUS", c] => {
                let complete = match *c {
                    "complete" => true,
                    "partial" => false,
                    _ => return Err(parse_err(ln, format!("bad census state {c}"))),
                };
                census = Some((complete, vec![]));
            }
            ["ENTRY", size, rest @ ..] => {
                let c = census.as_mut().ok_or_else(|| parse_err(ln, "ENTRY before CENSUS"))?;
                c.1.push(CensusEntry { size: big(ln, size)?, rep: perm(ln, rest)? });
            }
            ["ESTABLISHES", "b", rel, v] => {
                let rel = Relation::parse(rel).ok_or_else(|| parse_err(ln, format!("bad relation {rel}")))?;
                let v: u32 = v.parse().map_err(|_| parse_err(ln, "bad value"))?;
                established = Some((rel, v));
            }
            _ => return Err(parse_err(ln, format!("unknown line {line:?}"))),
        }
    }
    let kind = kind.ok_or_else(|| parse_err(0, "missing CERT line"))?;
    let (group, group_order) = group.ok_or_else(|| parse_err(0, "missing GROUP line"))?;
    let (subgroup, subgroup_order) = subgroup.ok_or_else(|| parse_err(0, "missing SUBGROUP line"))?;
    let (relation, value) = established.ok_or_else(|| parse_err(0, "missing ESTABLISHES line"))?;
    let census = census.map(|(complete, entries)| DoubleCosetCensus {
        ambient_order: group_order.clone(),
        subgroup_order: subgroup_order.clone(),
        entries,
        complete,
    });
    Ok(Certificate { kind, group, group_order, subgroup, subgroup_order, conjugators, census, relation, value, replay })
}
