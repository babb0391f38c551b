//! A bundle of class tables, fusions, lifts and subgroup counts, as loaded from data files.

use super::{fuse_counts, int, lift_class_table, lift_involution_counts, perm_char_count, poly_eval, ClassTable, ExactInt, FusionMap, IntPoly, LiftSpec, SubgroupClassData};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Provenance {
    #[default]
    None,
    Paper(String),
    Derived(String),
}

impl Provenance {
    pub fn parse(text: &str) -> Provenance {
        let t = text.trim();
        if let Some(r) = t.strip_prefix("PAPER") {
            Provenance::Paper(r.trim().to_string())
        } else if let Some(r) = t.strip_prefix("DERIVED") {
            Provenance::Derived(r.trim().to_string())
        } else {
            Provenance::None
        }
    }

    pub fn render(&self) -> String {
        match self {
            Provenance::None => "none".into(),
            Provenance::Paper(t) if t.is_empty() => "PAPER".into(),
            Provenance::Paper(t) => format!("PAPER {t}"),
            Provenance::Derived(t) if t.is_empty() => "DERIVED".into(),
            Provenance::Derived(t) => format!("DERIVED {t}"),
        }
    }

    pub fn is_paper(&self) -> bool {
        matches!(self, Provenance::Paper(_))
    }
}

/// Which elements an `elements` line counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Exactly(u64),
    /// All elements of odd prime order.
    OddPrime,
    /// All elements of prime order at least the given bound.
    PrimeAtLeast(u64),
}

impl OrderSpec {
    pub fn parse(s: &str) -> Option<OrderSpec> {
        if s == "odd" {
            return Some(OrderSpec::OddPrime);
        }
        if let Some(r) = s.strip_suffix('+') {
            return r.parse().ok().map(OrderSpec::PrimeAtLeast);
        }
        s.parse().ok().map(OrderSpec::Exactly)
    }

    pub fn render(&self) -> String {
        match self {
            OrderSpec::Exactly(r) => r.to_string(),
            OrderSpec::OddPrime => "odd".into(),
            OrderSpec::PrimeAtLeast(r) => format!("{r}+"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharValue<T> {
    Value(T),
    /// A polynomial in `q`, evaluated at the given `q`.
    Poly(T, IntPoly<T>),
}

impl<T: ExactInt> CharValue<T> {
    pub fn value(&self) -> T {
        match self {
            CharValue::Value(v) => v.clone(),
            CharValue::Poly(q, p) => poly_eval(p, q),
        }
    }
}

/// Values of the permutation character of `group` on the cosets of `sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermChar<T> {
    pub sub: String,
    pub group: String,
    pub index: T,
    pub values: Vec<(String, CharValue<T>, Provenance)>,
}

/// An item with the provenance in force where it was read, and its line (ignored by `==`).
#[derive(Clone, Debug)]
pub struct Tagged<X> {
    pub item: X,
    pub provenance: Provenance,
    pub line: usize,
}

impl<X: PartialEq> PartialEq for Tagged<X> {
    fn eq(&self, other: &Self) -> bool {
        self.item == other.item && self.provenance == other.provenance
    }
}

impl<X: Eq> Eq for Tagged<X> {}

/// Subgroup data with per-cell provenance and optional upper bounds on element totals.
#[derive(Clone, Debug)]
pub struct SubgroupRecord<T> {
    pub data: SubgroupClassData<T>,
    pub cell_provenance: Vec<Provenance>,
    pub elements: Vec<(OrderSpec, T, Provenance)>,
    pub line: usize,
}

impl<T: PartialEq> PartialEq for SubgroupRecord<T> {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data && self.cell_provenance == other.cell_provenance && self.elements == other.elements
    }
}

impl<T: Eq> Eq for SubgroupRecord<T> {}

impl<T: ExactInt> SubgroupRecord<T> {
    pub fn elements(&self, spec: OrderSpec) -> Option<&T> {
        self.elements.iter().find(|e| e.0 == spec).map(|e| &e.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataSet<T> {
    pub tables: Vec<Tagged<ClassTable<T>>>,
    /// Per-class provenance, parallel to each table's classes.
    pub class_provenance: Vec<Vec<Provenance>>,
    pub fusions: Vec<Tagged<FusionMap>>,
    pub lifts: Vec<Tagged<LiftSpec>>,
    pub subgroups: Vec<SubgroupRecord<T>>,
    pub permchars: Vec<Tagged<PermChar<T>>>,
}

impl<T> Default for DataSet<T> {
    fn default() -> Self {
        DataSet { tables: vec![], class_provenance: vec![], fusions: vec![], lifts: vec![], subgroups: vec![], permchars: vec![] }
    }
}

/// One recomputed cell: where it came from and whether it matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub what: String,
    pub stored: String,
    pub computed: String,
}

impl CellCheck {
    pub fn ok(&self) -> bool {
        self.stored == self.computed
    }
}

impl<T: ExactInt> DataSet<T> {
    pub fn merge(&mut self, other: DataSet<T>) {
        self.tables.extend(other.tables);
        self.class_provenance.extend(other.class_provenance);
        self.fusions.extend(other.fusions);
        self.lifts.extend(other.lifts);
        self.subgroups.extend(other.subgroups);
        self.permchars.extend(other.permchars);
    }

    pub fn table(&self, name: &str) -> Result<&ClassTable<T>> {
        self.tables.iter().map(|t| &t.item).find(|t| t.name == name).ok_or_else(|| Error::Missing(format!("class table {name}")))
    }

    pub fn fusion(&self, src: &str, dst: &str) -> Result<&FusionMap> {
        self.fusions
            .iter()
            .map(|f| &f.item)
            .find(|f| f.source == src && f.target == dst)
            .ok_or_else(|| Error::Missing(format!("fusion {src} -> {dst}")))
    }

    pub fn lift(&self, quotient: &str) -> Result<&LiftSpec> {
        self.lifts.iter().map(|l| &l.item).find(|l| l.quotient == quotient).ok_or_else(|| Error::Missing(format!("lift of {quotient}")))
    }

    pub fn subgroup(&self, name: &str, ambient: &str) -> Result<&SubgroupRecord<T>> {
        self.find_subgroup(name, ambient).ok_or_else(|| Error::Missing(format!("subgroup data {name} in {ambient}")))
    }

    pub fn find_subgroup(&self, name: &str, ambient: &str) -> Option<&SubgroupRecord<T>> {
        self.subgroups.iter().find(|s| s.data.name == name && s.data.ambient == ambient)
    }

    pub fn subgroups_in(&self, ambient: &str) -> impl Iterator<Item = &SubgroupRecord<T>> {
        let a = ambient.to_string();
        self.subgroups.iter().filter(move |s| s.data.ambient == a)
    }

    pub fn permchar(&self, sub: &str, group: &str) -> Option<&PermChar<T>> {
        self.permchars.iter().map(|p| &p.item).find(|p| p.sub == sub && p.group == group)
    }

    /// Counts of a subgroup of the quotient, moved to the ambient group of the extension's fusion:
    /// involutions through the lift, odd order classes unchanged.
    pub fn push_counts(&self, raw: &SubgroupClassData<T>, ambient: &str) -> Result<Vec<(String, T)>> {
        let q = self.table(&raw.ambient)?;
        let lift = self.lift(&raw.ambient)?;
        let fusion = self.fusion(&lift.extension, ambient)?;
        let inv: Vec<(String, T)> = raw
            .counts
            .iter()
            .filter(|(l, _)| q.class(l).is_some_and(|c| c.element_order == 2))
            .cloned()
            .collect();
        let mut out = if inv.is_empty() { vec![] } else { lift_involution_counts(&inv, lift, fusion)? };
        for (l, n) in &raw.counts {
            let cl = q.class(l).ok_or_else(|| Error::Missing(format!("class {l} in {}", q.name)))?;
            if cl.element_order % 2 == 0 {
                continue;
            }
            let dst = fusion.image(l).ok_or_else(|| Error::Missing(format!("fusion image of {l}")))?;
            match out.iter_mut().find(|(t, _)| t == dst) {
                Some(slot) => slot.1 = slot.1.clone() + n.clone(),
                None => out.push((dst.to_string(), n.clone())),
            }
        }
        Ok(out)
    }

    /// Recomputes every cell that some other record determines. Cells with no such
    /// record are raw inputs and are not listed.
    pub fn recompute(&self) -> Result<Vec<CellCheck>> {
        let mut checks = Vec::new();
        for t in &self.tables {
            t.item.validate()?;
        }
        for f in &self.fusions {
            let (s, d) = (self.table(&f.item.source), self.table(&f.item.target));
            if let (Ok(s), Ok(d)) = (s, d) {
                f.item.check(s, d)?;
            }
        }
        // Extension tables from quotient tables and lifts.
        for l in &self.lifts {
            let (Ok(q), Ok(e)) = (self.table(&l.item.quotient), self.table(&l.item.extension)) else { continue };
            let lifted = lift_class_table(q, &l.item)?;
            for c in e.of_order(2) {
                let got = lifted.class(&c.label).map(|x| x.size.to_string()).unwrap_or_else(|| "absent".into());
                checks.push(CellCheck { what: format!("|{}| in {}", c.label, e.name), stored: c.size.to_string(), computed: got });
            }
        }
        // Raw counts from permutation character values.
        for pc in &self.permchars {
            let pc = &pc.item;
            let q = self.table(&pc.group)?;
            let rec = self.find_subgroup(&pc.sub, &pc.group);
            for (label, v, _) in &pc.values {
                let n = perm_char_count(q.size(label)?, &pc.index, &v.value())?;
                if let Some(stored) = rec.and_then(|r| r.data.count(label)) {
                    checks.push(CellCheck { what: format!("|{label} ∩ {}|", pc.sub), stored: stored.to_string(), computed: n.to_string() });
                }
            }
        }
        // Ambient counts from raw counts, through a lift or a plain fusion.
        for s in &self.subgroups {
            for raw in self.subgroups.iter().filter(|r| r.data.name == s.data.name && r.data.ambient != s.data.ambient) {
                let pushed = if self.lift(&raw.data.ambient).is_ok_and(|l| self.fusion(&l.extension, &s.data.ambient).is_ok()) {
                    self.push_counts(&raw.data, &s.data.ambient)?
                } else if let Ok(f) = self.fusion(&raw.data.ambient, &s.data.ambient) {
                    let mut out: Vec<(String, T)> = Vec::new();
                    for (l, n) in &raw.data.counts {
                        let d = f.image(l).ok_or_else(|| Error::Missing(format!("fusion image of {l}")))?;
                        match out.iter_mut().find(|(t, _)| t == d) {
                            Some(slot) => slot.1 = slot.1.clone() + n.clone(),
                            None => out.push((d.to_string(), n.clone())),
                        }
                    }
                    out
                } else {
                    continue;
                };
                for (l, n) in &s.data.counts {
                    if let Some((_, m)) = pushed.iter().find(|(t, _)| t == l) {
                        checks.push(CellCheck {
                            what: format!("|{l} ∩ {}| from {}", s.data.name, raw.data.ambient),
                            stored: n.to_string(),
                            computed: m.to_string(),
                        });
                    }
                }
            }
        }
        // Subgroup tables fused into ambient counts.
        for f in &self.fusions {
            let f = &f.item;
            let (Ok(src), Some(rec)) = (self.table(&f.source), self.find_subgroup(&f.source, &f.target)) else { continue };
            let Ok(dst) = self.table(&f.target) else { continue };
            let fused = fuse_counts(src, f, dst)?;
            for (l, n) in &rec.data.counts {
                if let Some(m) = fused.count(l) {
                    checks.push(CellCheck { what: format!("|{l} ∩ {}| by fusion", f.source), stored: n.to_string(), computed: m.to_string() });
                }
            }
        }
        // Element totals against the subgroup's own table, when one is loaded.
        for s in &self.subgroups {
            let Ok(t) = self.table(&s.data.name) else { continue };
            for (spec, n, _) in &s.elements {
                let keep = |r: u64| match *spec {
                    OrderSpec::Exactly(q) => r == q,
                    OrderSpec::OddPrime => r % 2 == 1 && super::is_prime(r),
                    OrderSpec::PrimeAtLeast(q) => r >= q && super::is_prime(r),
                };
                let m = t.classes.iter().filter(|c| keep(c.element_order)).fold(T::zero(), |acc, c| acc + c.size.clone());
                checks.push(CellCheck {
                    what: format!("elements {} in {}", spec.render(), s.data.name),
                    stored: n.to_string(),
                    computed: m.to_string(),
                });
            }
        }
        Ok(checks)
    }

    /// Fails on any recomputed cell that disagrees with a stored one tagged as printed.
    pub fn strict_check(&self) -> Result<Vec<CellCheck>> {
        let checks = self.recompute()?;
        let bad: Vec<String> = checks.iter().filter(|c| !c.ok()).map(|c| format!("{}: stored {}, computed {}", c.what, c.stored, c.computed)).collect();
        if !bad.is_empty() {
            return Err(Error::Mismatch(bad.join("; ")));
        }
        Ok(checks)
    }

    /// Elements of order `r`: the stored total, else the sum of counts; 0 when `r` does not divide the order.
    pub fn elements_of_order(&self, rec: &SubgroupRecord<T>, r: u64) -> Result<T> {
        if let Some(n) = rec.elements(OrderSpec::Exactly(r)) {
            return Ok(n.clone());
        }
        let t = self.table(&rec.data.ambient)?;
        if t.of_order(r).next().is_none() || !rec.data.order.is_multiple_of(&int(r)) {
            return Ok(T::zero());
        }
        let covered = t.of_order(r).all(|c| rec.data.count(&c.label).is_some());
        if !covered {
            return Err(Error::Missing(format!("elements of order {r} in {}", rec.data.name)));
        }
        Ok(rec.data.elements_of_order(t, r))
    }
}
