//! Named contributions to `Q̂(G,H,c)` and the inequalities they must satisfy.

use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{class_term, int, lemma_bound, ExactInt};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Part<T> {
    /// A single class: `|x^G|·(count/|x^G|)^c`, exact.
    Class { label: String, size: T, count: T },
    /// Classes with at most `a` elements in `H` and sizes at least `b`: `b·(a/b)^c`.
    Lemma { what: String, a: T, b: T },
}

impl<T: ExactInt> Part<T> {
    pub fn value(&self, c: u32) -> Ratio<T> {
        match self {
            Part::Class { size, count, .. } => class_term(size, count, c),
            Part::Lemma { a, b, .. } => lemma_bound(a, b, c),
        }
    }

    fn describe(&self, c: u32) -> String {
        match self {
            Part::Class { label, size, count } => format!("{label}: {count}^{c}/{size}^{}", c - 1),
            Part::Lemma { what, a, b } => format!("{what}: {a}^{c}/{b}^{}", c - 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<T> {
    /// The contribution this term belongs to, e.g. `alpha`.
    pub group: String,
    pub part: Part<T>,
}

#[derive(Clone, Debug)]
pub struct ReportSpec<T> {
    pub title: String,
    pub c: u32,
    pub terms: Vec<Term<T>>,
    /// Strict upper bounds on named contributions.
    pub bounds: Vec<(String, Ratio<T>)>,
    /// Strict upper bound on the total, normally 1.
    pub total_bound: Ratio<T>,
}

impl<T: ExactInt> ReportSpec<T> {
    pub fn new(title: impl Into<String>, c: u32) -> ReportSpec<T> {
        ReportSpec { title: title.into(), c, terms: vec![], bounds: vec![], total_bound: Ratio::one() }
    }

    pub fn class(&mut self, group: &str, label: &str, size: T, count: T) {
        self.terms.push(Term { group: group.into(), part: Part::Class { label: label.into(), size, count } });
    }

    pub fn lemma(&mut self, group: &str, what: impl Into<String>, a: T, b: T) {
        self.terms.push(Term { group: group.into(), part: Part::Lemma { what: what.into(), a, b } });
    }

    pub fn bound(&mut self, group: &str, bound: Ratio<T>) {
        self.bounds.push((group.into(), bound));
    }
}

#[derive(Clone, Debug)]
pub struct GroupResult<T> {
    pub name: String,
    pub value: Ratio<T>,
    pub bound: Option<Ratio<T>>,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct Report<T> {
    pub title: String,
    pub c: u32,
    pub terms: Vec<(Term<T>, Ratio<T>)>,
    pub groups: Vec<GroupResult<T>>,
    pub total: Ratio<T>,
    pub total_bound: Ratio<T>,
    pub holds: bool,
}

/// `2^e` as an exact rational, for thresholds like `2^-6`.
pub fn two_pow<T: ExactInt>(e: i32) -> Ratio<T> {
    let p = super::pow(&int::<T>(2), e.unsigned_abs());
    if e >= 0 {
        Ratio::from_integer(p)
    } else {
        Ratio::new(T::one(), p)
    }
}

/// `floor(log2 x)` for positive `x`, by exact halving and doubling.
pub fn floor_log2<T: ExactInt>(x: &Ratio<T>) -> Option<i64> {
    if !x.is_positive() {
        return None;
    }
    let two: Ratio<T> = Ratio::from_integer(int(2));
    let one: Ratio<T> = Ratio::one();
    let mut y = x.clone();
    let mut k = 0i64;
    while y >= two {
        y = y / two.clone();
        k += 1;
    }
    while y < one {
        y = y * two.clone();
        k -= 1;
    }
    Some(k)
}

pub fn verify_report<T: ExactInt>(spec: &ReportSpec<T>) -> Result<Report<T>> {
    if spec.c == 0 {
        return Err(Error::Invalid(format!("{}: c must be positive", spec.title)));
    }
    let mut names: Vec<String> = Vec::new();
    for t in &spec.terms {
        if !names.contains(&t.group) {
            names.push(t.group.clone());
        }
        let (Part::Lemma { b, .. } | Part::Class { size: b, .. }) = &t.part;
        if !b.is_positive() {
            return Err(Error::Invalid(format!("{}: nonpositive class size in {}", spec.title, t.part.describe(spec.c))));
        }
    }
    for (g, _) in &spec.bounds {
        if !names.contains(g) {
            names.push(g.clone());
        }
    }
    let terms: Vec<(Term<T>, Ratio<T>)> = spec.terms.iter().map(|t| (t.clone(), t.part.value(spec.c))).collect();
    let mut groups = Vec::new();
    for n in names {
        let value = terms.iter().filter(|(t, _)| t.group == n).fold(Ratio::zero(), |acc, (_, v)| acc + v.clone());
        let bound = spec.bounds.iter().find(|(g, _)| *g == n).map(|(_, b)| b.clone());
        let holds = bound.as_ref().is_none_or(|b| value < *b);
        groups.push(GroupResult { name: n, value, bound, holds });
    }
    let total = terms.iter().fold(Ratio::zero(), |acc, (_, v)| acc + v.clone());
    let holds = total < spec.total_bound && groups.iter().all(|g| g.holds);
    Ok(Report { title: spec.title.clone(), c: spec.c, terms, groups, total, total_bound: spec.total_bound.clone(), holds })
}

fn hint<T: ExactInt>(x: &Ratio<T>) -> String {
    match floor_log2(x) {
        Some(k) => format!("  [2^{k} <= x < 2^{}]", k + 1),
        None => String::new(),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILS"
    }
}

impl<T: ExactInt> Report<T> {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} (c = {})", self.title, self.c);
        for g in &self.groups {
            for (t, v) in self.terms.iter().filter(|(t, _)| t.group == g.name) {
                let _ = writeln!(s, "  {} {} = {}{}", g.name, t.part.describe(self.c), v, hint(v));
            }
            match &g.bound {
                Some(b) => {
                    let _ = writeln!(s, "  {} = {} < {} : {}", g.name, g.value, b, verdict(g.holds));
                }
                None => {
                    let _ = writeln!(s, "  {} = {}", g.name, g.value);
                }
            }
        }
        let _ = writeln!(
            s,
            "  total = {}{} < {} : {}",
            self.total,
            hint(&self.total),
            self.total_bound,
            verdict(self.total < self.total_bound)
        );
        s
    }

    pub fn group(&self, name: &str) -> Option<&GroupResult<T>> {
        self.groups.iter().find(|g| g.name == name)
    }
}
