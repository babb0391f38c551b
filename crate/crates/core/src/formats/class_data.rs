use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::classes::data::{CharValue, DataSet, OrderSpec, PermChar, Provenance, SubgroupRecord, Tagged};
use crate::classes::{ClassInfo, ClassTable, ExactInt, FusionMap, IntPoly, LiftRule, LiftSpec, SubgroupClassData};
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Group,
    Fusion,
    Lift,
    Subgroup,
    PermChar,
}

fn num<T: ExactInt>(ln: usize, t: &str) -> Result<T> {
    t.parse().map_err(|_| parse_err(ln, format!("bad integer {t:?}")))
}

fn expect(ln: usize, toks: &[&str], at: usize, word: &str) -> Result<()> {
    if toks.get(at) != Some(&word) {
        return Err(parse_err(ln, format!("expected {word:?} in {:?}", toks.join(" "))));
    }
    Ok(())
}

/// Parses one class data file and checks every record against the tables it defines.
pub fn parse_class_data<T: ExactInt>(text: &str) -> Result<DataSet<T>> {
    let mut ds: DataSet<T> = DataSet::default();
    let mut prov = Provenance::None;
    let mut section = Section::None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let trimmed = raw.trim();
        if let Some(c) = trimmed.strip_prefix('#') {
            if let Some(p) = c.trim().strip_prefix("provenance:") {
                prov = Provenance::parse(p);
            }
            continue;
        }
        let line = match trimmed.find('#') {
            Some(p) => trimmed[..p].trim(),
            None => trimmed,
        };
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let n = toks.len();
        match toks[0] {
            "group" => {
                if n != 4 {
                    return Err(parse_err(ln, "expected: group <name> order <int>"));
                }
                expect(ln, &toks, 2, "order")?;
                if ds.tables.iter().any(|t| t.item.name == toks[1]) {
                    return Err(parse_err(ln, format!("group {} defined twice", toks[1])));
                }
                let table = ClassTable { name: toks[1].into(), order: num(ln, toks[3])?, classes: vec![] };
                ds.tables.push(Tagged { item: table, provenance: prov.clone(), line: ln });
                ds.class_provenance.push(vec![]);
                section = Section::Group;
            }
            "class" => {
                if section != Section::Group || n != 4 {
                    return Err(parse_err(ln, "class line outside a group section or malformed"));
                }
                let t = &mut ds.tables.last_mut().unwrap().item;
                if t.class(toks[1]).is_some() {
                    return Err(parse_err(ln, format!("duplicate class label {}", toks[1])));
                }
                let element_order: u64 = toks[2].parse().map_err(|_| parse_err(ln, "bad element order"))?;
                t.classes.push(ClassInfo { label: toks[1].into(), element_order, size: num(ln, toks[3])? });
                t.validate().map_err(|e| parse_err(ln, e.to_string()))?;
                ds.class_provenance.last_mut().unwrap().push(prov.clone());
            }
            "fusion" => {
                if n != 4 || toks[2] != "->" {
                    return Err(parse_err(ln, "expected: fusion <src> -> <dst>"));
                }
                let f = FusionMap::new(toks[1], toks[3], &[]);
                ds.fusions.push(Tagged { item: f, provenance: prov.clone(), line: ln });
                section = Section::Fusion;
            }
            "map" => {
                if section != Section::Fusion || n != 3 {
                    return Err(parse_err(ln, "map line outside a fusion section or malformed"));
                }
                let f = &mut ds.fusions.last_mut().unwrap().item;
                if f.map.insert(toks[1].into(), toks[2].into()).is_some() {
                    return Err(parse_err(ln, format!("class {} mapped twice", toks[1])));
                }
            }
            "lift" => {
                if n != 6 {
                    return Err(parse_err(ln, "expected: lift <quotient> by-center-of <extension> central <label>"));
                }
                expect(ln, &toks, 2, "by-center-of")?;
                expect(ln, &toks, 4, "central")?;
                let l = LiftSpec { quotient: toks[1].into(), extension: toks[3].into(), central: toks[5].into(), rules: vec![] };
                ds.lifts.push(Tagged { item: l, provenance: prov.clone(), line: ln });
                section = Section::Lift;
            }
            "rule" => {
                if section != Section::Lift {
                    return Err(parse_err(ln, "rule line outside a lift section"));
                }
                let rule = match &toks[1..] {
                    [_, "split", a, b] => LiftRule::Split(a.to_string(), b.to_string()),
                    [_, "identified", a] => LiftRule::Identified(a.to_string()),
                    [_, "order-doubled"] => LiftRule::OrderDoubled,
                    _ => return Err(parse_err(ln, "expected: rule <class> split <l1> <l2> | identified <l1> | order-doubled")),
                };
                let l = &mut ds.lifts.last_mut().unwrap().item;
                l.rules.push((toks[1].into(), rule));
                l.validate().map_err(|e| parse_err(ln, e.to_string()))?;
            }
            "subgroupdata" => {
                if n != 6 {
                    return Err(parse_err(ln, "expected: subgroupdata <name> in <group> order <int>"));
                }
                expect(ln, &toks, 2, "in")?;
                expect(ln, &toks, 4, "order")?;
                if ds.find_subgroup(toks[1], toks[3]).is_some() {
                    return Err(parse_err(ln, format!("subgroup data {} in {} given twice", toks[1], toks[3])));
                }
                let data = SubgroupClassData { name: toks[1].into(), ambient: toks[3].into(), order: num(ln, toks[5])?, counts: vec![] };
                ds.subgroups.push(SubgroupRecord { data, cell_provenance: vec![], elements: vec![], line: ln });
                section = Section::Subgroup;
            }
            "count" => {
                if section != Section::Subgroup || n != 3 {
                    return Err(parse_err(ln, "count line outside a subgroupdata section or malformed"));
                }
                let rec = ds.subgroups.last_mut().unwrap();
                if rec.data.count(toks[1]).is_some() {
                    return Err(parse_err(ln, format!("duplicate count for {}", toks[1])));
                }
                let c: T = num(ln, toks[2])?;
                if c.is_negative() {
                    return Err(parse_err(ln, "negative count"));
                }
                rec.data.counts.push((toks[1].into(), c));
                rec.cell_provenance.push(prov.clone());
            }
            "elements" => {
                if section != Section::Subgroup || n != 3 {
                    return Err(parse_err(ln, "elements line outside a subgroupdata section or malformed"));
                }
                let spec = OrderSpec::parse(toks[1]).ok_or_else(|| parse_err(ln, format!("bad order spec {}", toks[1])))?;
                let rec = ds.subgroups.last_mut().unwrap();
                if rec.elements(spec).is_some() {
                    return Err(parse_err(ln, format!("duplicate elements {}", toks[1])));
                }
                rec.elements.push((spec, num(ln, toks[2])?, prov.clone()));
            }
            "permchar" => {
                if n != 6 {
                    return Err(parse_err(ln, "expected: permchar <sub> in <group> index <int>"));
                }
                expect(ln, &toks, 2, "in")?;
                expect(ln, &toks, 4, "index")?;
                let pc = PermChar { sub: toks[1].into(), group: toks[3].into(), index: num(ln, toks[5])?, values: vec![] };
                ds.permchars.push(Tagged { item: pc, provenance: prov.clone(), line: ln });
                section = Section::PermChar;
            }
            "chi" | "chipoly" => {
                if section != Section::PermChar {
                    return Err(parse_err(ln, "character value outside a permchar section"));
                }
                let v = if toks[0] == "chi" {
                    if n != 3 {
                        return Err(parse_err(ln, "expected: chi <label> <int>"));
                    }
                    CharValue::Value(num(ln, toks[2])?)
                } else {
                    if n < 4 {
                        return Err(parse_err(ln, "expected: chipoly <label> <q> <c0> <c1> ..."));
                    }
                    let coeffs = toks[3..].iter().map(|t| num(ln, t)).collect::<Result<Vec<T>>>()?;
                    CharValue::Poly(num(ln, toks[2])?, IntPoly::new(coeffs))
                };
                let pc = &mut ds.permchars.last_mut().unwrap().item;
                if pc.values.iter().any(|(l, _, _)| l == toks[1]) {
                    return Err(parse_err(ln, format!("duplicate value for {}", toks[1])));
                }
                pc.values.push((toks[1].into(), v, prov.clone()));
            }
            other => return Err(parse_err(ln, format!("unknown keyword {other}"))),
        }
    }
    validate(&ds)?;
    Ok(ds)
}

/// Cross-record checks among whatever is loaded: fusions respect element orders and cover
/// their source, lifts name existing classes, counts fit their classes.
pub fn validate<T: ExactInt>(ds: &DataSet<T>) -> Result<()> {
    for f in &ds.fusions {
        let (Ok(s), Ok(d)) = (ds.table(&f.item.source), ds.table(&f.item.target)) else { continue };
        f.item.check(s, d).map_err(|e| parse_err(f.line, e.to_string()))?;
        if let Some(c) = s.classes.iter().find(|c| f.item.image(&c.label).is_none()) {
            return Err(parse_err(f.line, format!("fusion {} -> {} does not map {}", f.item.source, f.item.target, c.label)));
        }
    }
    for l in &ds.lifts {
        let Ok(q) = ds.table(&l.item.quotient) else { continue };
        for c in q.of_order(2) {
            if l.item.rule(&c.label).is_none() {
                return Err(parse_err(l.line, format!("no lift rule for {}", c.label)));
            }
        }
        let known: HashSet<&str> = q.classes.iter().map(|c| c.label.as_str()).collect();
        if let Some((c, _)) = l.item.rules.iter().find(|(c, _)| !known.contains(c.as_str())) {
            return Err(parse_err(l.line, format!("lift rule for unknown class {c}")));
        }
    }
    for s in &ds.subgroups {
        if let Ok(t) = ds.table(&s.data.ambient) {
            s.data.validate(t).map_err(|e| parse_err(s.line, e.to_string()))?;
        }
    }
    for p in &ds.permchars {
        let Ok(t) = ds.table(&p.item.group) else { continue };
        for (l, _, _) in &p.item.values {
            t.size(l).map_err(|e| parse_err(p.line, e.to_string()))?;
        }
    }
    Ok(())
}

/// Loads and merges every `*.cd` file below `dir`, in path order.
pub fn load_class_data_dir<T: ExactInt>(dir: &Path) -> Result<DataSet<T>> {
    let mut files = Vec::new();
    collect(dir, &mut files)?;
    files.sort();
    if files.is_empty() {
        return Err(Error::Missing(format!("no .cd files under {}", dir.display())));
    }
    let mut ds = DataSet::default();
    for f in files {
        let text = std::fs::read_to_string(&f).map_err(|e| Error::Invalid(format!("{}: {e}", f.display())))?;
        let part = parse_class_data(&text).map_err(|e| Error::Invalid(format!("{}: {e}", f.display())))?;
        ds.merge(part);
    }
    let mut names = HashSet::new();
    for t in &ds.tables {
        if !names.insert(t.item.name.as_str()) {
            return Err(Error::Invalid(format!("group {} defined in more than one file", t.item.name)));
        }
    }
    validate(&ds)?;
    Ok(ds)
}

fn collect(dir: &Path, out: &mut Vec<std::path::PathBuf>) -> Result<()> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
    for entry in rd {
        let p = entry.map_err(|e| Error::Invalid(e.to_string()))?.path();
        if p.is_dir() {
            collect(&p, out)?;
        } else if p.extension().is_some_and(|e| e == "cd") {
            out.push(p);
        }
    }
    Ok(())
}

struct Writer {
    out: String,
    prov: Option<Provenance>,
}

impl Writer {
    fn line(&mut self, prov: &Provenance, text: String) {
        if self.prov.as_ref() != Some(prov) {
            let _ = writeln!(self.out, "# provenance: {}", prov.render());
            self.prov = Some(prov.clone());
        }
        let _ = writeln!(self.out, "{text}");
    }

    fn plain(&mut self, text: String) {
        let _ = writeln!(self.out, "{text}");
    }
}

pub fn serialize_class_data<T: ExactInt>(ds: &DataSet<T>) -> String {
    let mut w = Writer { out: String::new(), prov: None };
    for (t, provs) in ds.tables.iter().zip(&ds.class_provenance) {
        w.line(&t.provenance, format!("group {} order {}", t.item.name, t.item.order));
        for (c, p) in t.item.classes.iter().zip(provs) {
            w.line(p, format!("class {} {} {}", c.label, c.element_order, c.size));
        }
    }
    for f in &ds.fusions {
        w.line(&f.provenance, format!("fusion {} -> {}", f.item.source, f.item.target));
        for (a, b) in &f.item.map {
            w.plain(format!("map {a} {b}"));
        }
    }
    for l in &ds.lifts {
        let l2 = &l.item;
        w.line(&l.provenance, format!("lift {} by-center-of {} central {}", l2.quotient, l2.extension, l2.central));
        for (c, r) in &l2.rules {
            w.plain(match r {
                LiftRule::Split(a, b) => format!("rule {c} split {a} {b}"),
                LiftRule::Identified(a) => format!("rule {c} identified {a}"),
                LiftRule::OrderDoubled => format!("rule {c} order-doubled"),
            });
        }
    }
    for s in &ds.subgroups {
        w.plain(format!("subgroupdata {} in {} order {}", s.data.name, s.data.ambient, s.data.order));
        for ((l, n), p) in s.data.counts.iter().zip(&s.cell_provenance) {
            w.line(p, format!("count {l} {n}"));
        }
        for (spec, n, p) in &s.elements {
            w.line(p, format!("elements {} {n}", spec.render()));
        }
    }
    for pc in &ds.permchars {
        let p = &pc.item;
        w.line(&pc.provenance, format!("permchar {} in {} index {}", p.sub, p.group, p.index));
        for (l, v, prov) in &p.values {
            w.line(
                prov,
                match v {
                    CharValue::Value(x) => format!("chi {l} {x}"),
                    CharValue::Poly(q, poly) => {
                        let cs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
                        format!("chipoly {l} {q} {}", cs.join(" "))
                    }
                },
            );
        }
    }
    w.out
}
