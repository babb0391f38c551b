//! Fixed point ratio bounds computed from class data alone.
//!
//! Everything is generic over an exact integer type; the crate-root aliases
//! `Int` and `Rational` pick arbitrary precision. No floating point anywhere.

pub mod data;
mod lie;
pub mod report;
pub mod suites;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::error::{Error, Result};

pub use lie::{centralizer_class_size, lie_group_order, LieSeries};

/// Exact integers: `BigInt` in practice, `i128` for small checks.
pub trait ExactInt: Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static {}

impl<T> ExactInt for T where T: Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static {}

pub(crate) fn int<T: ExactInt>(n: u64) -> T {
    T::from_u64(n).expect("fits")
}

pub fn pow<T: ExactInt>(base: &T, e: u32) -> T {
    num_traits::pow(base.clone(), e as usize)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo<T> {
    pub label: String,
    pub element_order: u64,
    pub size: T,
}

/// Some or all conjugacy classes of a group. A table need not list every class,
/// but for each element order it lists, it lists every class of that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable<T> {
    pub name: String,
    pub order: T,
    pub classes: Vec<ClassInfo<T>>,
}

impl<T: ExactInt> ClassTable<T> {
    pub fn new(name: impl Into<String>, order: T, classes: Vec<ClassInfo<T>>) -> Result<ClassTable<T>> {
        let t = ClassTable { name: name.into(), order, classes };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.order.is_positive() {
            return Err(Error::Invalid(format!("{}: order must be positive", self.name)));
        }
        let mut seen = HashSet::new();
        for c in &self.classes {
            if !seen.insert(c.label.as_str()) {
                return Err(Error::Invalid(format!("{}: duplicate class {}", self.name, c.label)));
            }
            if c.element_order == 0 {
                return Err(Error::Invalid(format!("{}: class {} has element order 0", self.name, c.label)));
            }
            if !c.size.is_positive() || !self.order.is_multiple_of(&c.size) {
                return Err(Error::Invalid(format!("{}: class {} size {} does not divide {}", self.name, c.label, c.size, self.order)));
            }
            if c.element_order == 1 && !c.size.is_one() {
                return Err(Error::Invalid(format!("{}: identity class {} must have size 1", self.name, c.label)));
            }
        }
        Ok(())
    }

    pub fn class(&self, label: &str) -> Option<&ClassInfo<T>> {
        self.classes.iter().find(|c| c.label == label)
    }

    pub fn size(&self, label: &str) -> Result<&T> {
        self.class(label).map(|c| &c.size).ok_or_else(|| Error::Missing(format!("class {label} in {}", self.name)))
    }

    pub fn of_order(&self, r: u64) -> impl Iterator<Item = &ClassInfo<T>> {
        self.classes.iter().filter(move |c| c.element_order == r)
    }

    pub fn prime_classes(&self) -> impl Iterator<Item = &ClassInfo<T>> {
        self.classes.iter().filter(|c| is_prime(c.element_order))
    }

    /// Element orders present, ascending.
    pub fn orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.classes.iter().map(|c| c.element_order).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Smallest class size among elements of order `r`.
    pub fn min_size(&self, r: u64) -> Option<&T> {
        self.of_order(r).map(|c| &c.size).min()
    }

    /// Number of elements of order `r`.
    pub fn elements_of_order(&self, r: u64) -> T {
        self.of_order(r).fold(T::zero(), |acc, c| acc + c.size.clone())
    }

    /// The same table keeping only classes whose element order satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(u64) -> bool) -> ClassTable<T> {
        let classes = self.classes.iter().filter(|c| keep(c.element_order)).cloned().collect();
        ClassTable { name: self.name.clone(), order: self.order.clone(), classes }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMap {
    pub source: String,
    pub target: String,
    pub map: BTreeMap<String, String>,
}

impl FusionMap {
    pub fn new(source: impl Into<String>, target: impl Into<String>, pairs: &[(&str, &str)]) -> FusionMap {
        let map = pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        FusionMap { source: source.into(), target: target.into(), map }
    }

    pub fn image(&self, label: &str) -> Option<&str> {
        self.map.get(label).map(|s| s.as_str())
    }

    /// Every mapped class exists on both sides with the same element order.
    pub fn check<T: ExactInt>(&self, src: &ClassTable<T>, dst: &ClassTable<T>) -> Result<()> {
        for (a, b) in &self.map {
            let ca = src.class(a).ok_or_else(|| Error::Missing(format!("class {a} in {}", src.name)))?;
            let cb = dst.class(b).ok_or_else(|| Error::Missing(format!("class {b} in {}", dst.name)))?;
            if ca.element_order != cb.element_order {
                return Err(Error::Invalid(format!(
                    "fusion {} -> {} sends {a} (order {}) to {b} (order {})",
                    self.source, self.target, ca.element_order, cb.element_order
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftRule {
    Split(String, String),
    Identified(String),
    OrderDoubled,
}

/// How the involution classes of `quotient` lift to `extension`, a central extension by `⟨z⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSpec {
    pub quotient: String,
    pub extension: String,
    pub central: String,
    pub rules: Vec<(String, LiftRule)>,
}

impl LiftSpec {
    pub fn rule(&self, class: &str) -> Option<&LiftRule> {
        self.rules.iter().find(|(c, _)| c == class).map(|(_, r)| r)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        let mut labels = HashSet::from([self.central.as_str()]);
        for (c, r) in &self.rules {
            if !seen.insert(c.as_str()) {
                return Err(Error::Invalid(format!("lift {}: duplicate rule for {c}", self.quotient)));
            }
            let new: Vec<&str> = match r {
                LiftRule::Split(a, b) => vec![a, b],
                LiftRule::Identified(a) => vec![a],
                LiftRule::OrderDoubled => vec![],
            };
            for l in new {
                if !labels.insert(l) {
                    return Err(Error::Invalid(format!("lift {}: lifted label {l} used twice", self.quotient)));
                }
            }
        }
        Ok(())
    }
}

/// `|x^G ∩ H|` for classes `x^G` of the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClassData<T> {
    pub name: String,
    pub ambient: String,
    pub order: T,
    pub counts: Vec<(String, T)>,
}

impl<T: ExactInt> SubgroupClassData<T> {
    pub fn count(&self, label: &str) -> Option<&T> {
        self.counts.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }

    pub fn validate(&self, table: &ClassTable<T>) -> Result<()> {
        let mut seen = HashSet::new();
        for (l, c) in &self.counts {
            if !seen.insert(l.as_str()) {
                return Err(Error::Invalid(format!("{}: duplicate count for {l}", self.name)));
            }
            let size = table.size(l)?;
            if c.is_negative() || c > size || *c > self.order {
                return Err(Error::Invalid(format!("{}: count {c} for {l} out of range", self.name)));
            }
        }
        Ok(())
    }

    /// Sum of counts over ambient classes of element order `r`.
    pub fn elements_of_order(&self, table: &ClassTable<T>, r: u64) -> T {
        self.counts
            .iter()
            .filter(|(l, _)| table.class(l).is_some_and(|c| c.element_order == r))
            .fold(T::zero(), |acc, (_, c)| acc + c.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly<T> {
    /// Ascending degree.
    pub coeffs: Vec<T>,
}

impl<T: ExactInt> IntPoly<T> {
    pub fn new(coeffs: Vec<T>) -> IntPoly<T> {
        IntPoly { coeffs }
    }

    /// From `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, i64)]) -> IntPoly<T> {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![T::zero(); deg + 1];
        for &(e, c) in terms {
            coeffs[e] = coeffs[e].clone() + T::from_i64(c).expect("fits");
        }
        IntPoly { coeffs }
    }
}

/// Horner evaluation.
pub fn poly_eval<T: ExactInt>(p: &IntPoly<T>, q: &T) -> T {
    p.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * q.clone() + c.clone())
}

/// `|x^G ∩ H| / |x^G|`.
pub fn fpr<T: ExactInt>(table: &ClassTable<T>, data: &SubgroupClassData<T>, label: &str) -> Result<Ratio<T>> {
    let size = table.size(label)?;
    let count = data.count(label).ok_or_else(|| Error::Missing(format!("count for {label} in {}", data.name)))?;
    Ok(Ratio::new(count.clone(), size.clone()))
}

/// `Σ |x^G|·fpr(x)^c` over the prime order classes; every such class must have a count.
pub fn qhat<T: ExactInt>(table: &ClassTable<T>, data: &SubgroupClassData<T>, c: u32) -> Result<Ratio<T>> {
    let mut total = Ratio::zero();
    for cl in table.prime_classes() {
        let f = fpr(table, data, &cl.label)?;
        total = total + Ratio::from_integer(cl.size.clone()) * num_traits::pow(f, c as usize);
    }
    Ok(total)
}

/// Exact contribution `|x^G|·(count/|x^G|)^c` of a single class.
pub fn class_term<T: ExactInt>(size: &T, count: &T, c: u32) -> Ratio<T> {
    lemma_bound(count, size, c)
}

/// `b·(a/b)^c = a^c / b^{c−1}`.
pub fn lemma_bound<T: ExactInt>(a: &T, b: &T, c: u32) -> Ratio<T> {
    assert!(c >= 1 && b.is_positive());
    Ratio::new(pow(a, c), pow(b, c - 1))
}

/// Pushes the class sizes of a subgroup table through a fusion map into ambient counts.
/// Ambient classes of an element order the source table covers, but that nothing maps to, get 0.
pub fn fuse_counts<T: ExactInt>(sub: &ClassTable<T>, fusion: &FusionMap, ambient: &ClassTable<T>) -> Result<SubgroupClassData<T>> {
    if fusion.source != sub.name {
        return Err(Error::Mismatch(format!("fusion source {} is not {}", fusion.source, sub.name)));
    }
    fusion.check(sub, ambient)?;
    let mut acc: HashMap<&str, T> = HashMap::new();
    for cl in &sub.classes {
        let dst = fusion.image(&cl.label).ok_or_else(|| Error::Missing(format!("fusion image of {}", cl.label)))?;
        let e = acc.entry(dst).or_insert_with(T::zero);
        *e = e.clone() + cl.size.clone();
    }
    let orders = sub.orders();
    let counts = ambient
        .classes
        .iter()
        .filter(|c| orders.contains(&c.element_order))
        .map(|c| (c.label.clone(), acc.get(c.label.as_str()).cloned().unwrap_or_else(T::zero)))
        .collect();
    Ok(SubgroupClassData { name: sub.name.clone(), ambient: ambient.name.clone(), order: sub.order.clone(), counts })
}

/// Involution classes of the extension with their sizes, central class first.
pub fn lift_class_table<T: ExactInt>(quotient: &ClassTable<T>, lift: &LiftSpec) -> Result<ClassTable<T>> {
    lift.validate()?;
    let two: T = int(2);
    let mut classes = vec![ClassInfo { label: lift.central.clone(), element_order: 2, size: T::one() }];
    for cl in quotient.of_order(2) {
        let rule = lift.rule(&cl.label).ok_or_else(|| Error::Missing(format!("lift rule for {}", cl.label)))?;
        match rule {
            LiftRule::Split(a, b) => {
                for l in [a, b] {
                    classes.push(ClassInfo { label: l.clone(), element_order: 2, size: cl.size.clone() });
                }
            }
            LiftRule::Identified(a) => classes.push(ClassInfo { label: a.clone(), element_order: 2, size: cl.size.clone() * two.clone() }),
            LiftRule::OrderDoubled => {}
        }
    }
    classes.sort_by(|x, y| x.label.cmp(&y.label));
    ClassTable::new(lift.extension.clone(), quotient.order.clone() * two, classes)
}

/// Involution counts of the extension of a subgroup containing `z`, fused into the ambient group.
pub fn lift_involution_counts<T: ExactInt>(
    quotient_counts: &[(String, T)],
    lift: &LiftSpec,
    fusion: &FusionMap,
) -> Result<Vec<(String, T)>> {
    lift.validate()?;
    let two: T = int(2);
    let mut ext: Vec<(String, T)> = vec![(lift.central.clone(), T::one())];
    for (cl, n) in quotient_counts {
        let rule = lift.rule(cl).ok_or_else(|| Error::Missing(format!("lift rule for {cl}")))?;
        match rule {
            LiftRule::Split(a, b) => {
                ext.push((a.clone(), n.clone()));
                ext.push((b.clone(), n.clone()));
            }
            LiftRule::Identified(a) => ext.push((a.clone(), n.clone() * two.clone())),
            LiftRule::OrderDoubled => {}
        }
    }
    // Every ambient class some involution of the extension fuses to is listed, possibly with 0.
    let mut lifted = vec![lift.central.as_str()];
    for (_, r) in &lift.rules {
        match r {
            LiftRule::Split(a, b) => lifted.extend([a.as_str(), b.as_str()]),
            LiftRule::Identified(a) => lifted.push(a.as_str()),
            LiftRule::OrderDoubled => {}
        }
    }
    let mut targets: Vec<&str> = lifted.iter().filter_map(|l| fusion.image(l)).collect();
    targets.sort_unstable();
    targets.dedup();
    let mut out: Vec<(String, T)> = targets.into_iter().map(|t| (t.to_string(), T::zero())).collect();
    for (l, n) in ext {
        let dst = fusion.image(&l).ok_or_else(|| Error::Missing(format!("fusion image of {l}")))?;
        let slot = out.iter_mut().find(|(t, _)| t == dst).unwrap();
        slot.1 = slot.1.clone() + n;
    }
    Ok(out)
}

/// `|x^L ∩ M| = |x^L|·1_M^L(x)/|L:M|`, which must come out integral.
pub fn perm_char_count<T: ExactInt>(class_size: &T, index: &T, chi: &T) -> Result<T> {
    if !index.is_positive() || chi.is_negative() {
        return Err(Error::Invalid(format!("bad permutation character data: index {index}, value {chi}")));
    }
    let num = class_size.clone() * chi.clone();
    let (q, r) = num.div_rem(index);
    if !r.is_zero() {
        return Err(Error::NotIntegral(format!("{class_size}*{chi}/{index}")));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    fn cls(l: &str, o: u64, s: &str) -> ClassInfo<BigInt> {
        ClassInfo { label: l.into(), element_order: o, size: big(s) }
    }

    #[test]
    fn table_validation() {
        assert!(ClassTable::new("C2", big("2"), vec![cls("1A", 1, "1"), cls("2A", 2, "1")]).is_ok());
        assert!(ClassTable::new("X", big("6"), vec![cls("2A", 2, "4")]).is_err());
        assert!(ClassTable::new("X", big("6"), vec![cls("2A", 2, "3"), cls("2A", 2, "3")]).is_err());
        assert!(ClassTable::new("X", big("6"), vec![cls("1A", 1, "2")]).is_err());
    }

    #[test]
    fn fpr_and_qhat() {
        let t = ClassTable::new("S3", big("6"), vec![cls("1A", 1, "1"), cls("2A", 2, "3"), cls("3A", 3, "2")]).unwrap();
        let d = SubgroupClassData { name: "C2".into(), ambient: "S3".into(), order: big("2"), counts: vec![("2A".into(), big("1")), ("3A".into(), big("0"))] };
        assert_eq!(fpr(&t, &d, "2A").unwrap(), Ratio::new(big("1"), big("3")));
        assert_eq!(qhat(&t, &d, 2).unwrap(), Ratio::new(big("1"), big("3")));
        let gap = SubgroupClassData { counts: vec![("2A".into(), big("1"))], ..d };
        assert!(qhat(&t, &gap, 2).is_err());
    }

    #[test]
    fn poly_and_perm_char() {
        let p: IntPoly<BigInt> = IntPoly::from_terms(&[(12, 1), (10, 1), (9, 1), (8, 1), (7, 2), (5, 2), (4, 1), (3, 1), (2, 1), (0, 1)]);
        assert_eq!(poly_eval(&p, &big("2")), big("6237"));
        assert_eq!(poly_eval(&IntPoly::<BigInt>::new(vec![]), &big("2")), big("0"));
        assert!(perm_char_count(&big("10"), &big("3"), &big("1")).is_err());
        assert_eq!(perm_char_count(&big("10"), &big("3"), &big("0")).unwrap(), big("0"));
    }

    #[test]
    fn generic_over_machine_integers() {
        let p: IntPoly<i128> = IntPoly::from_terms(&[(2, 1), (0, 1)]);
        assert_eq!(poly_eval(&p, &3), 10);
        assert_eq!(lemma_bound(&2i128, &4, 3), Ratio::new(1, 2));
    }
}
