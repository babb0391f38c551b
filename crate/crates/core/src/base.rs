//! Base sizes `b(G,H)` of coset actions, with certificates for every bound.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::cosets::{coset_action, DEFAULT_INDEX_CAP};
use crate::double_coset::{double_cosets, CensusEntry, DoubleCosetCensus, DoubleCosetProbe};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::random::RandomSource;
use crate::subgroups::{intersect, intersect_conjugate, is_core_free, is_soluble};

pub const EXHAUSTIVE_INDEX_CAP: u64 = 500;
pub const EXHAUSTIVE_ORDER_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertKind {
    Witness,
    RegularOrbit,
    NoRegularOrbitCensus,
    PartialCertificate,
    LowerBound,
    Exhaustive,
}

impl CertKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertKind::Witness => "witness",
            CertKind::RegularOrbit => "regular-orbit",
            CertKind::NoRegularOrbitCensus => "no-regular-orbit-census",
            CertKind::PartialCertificate => "partial-certificate",
            CertKind::LowerBound => "lower-bound",
            CertKind::Exhaustive => "exhaustive",
        }
    }

    pub fn parse(s: &str) -> Option<CertKind> {
        [
            CertKind::Witness,
            CertKind::RegularOrbit,
            CertKind::NoRegularOrbitCensus,
            CertKind::PartialCertificate,
            CertKind::LowerBound,
            CertKind::Exhaustive,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    pub fn parse(s: &str) -> Option<Relation> {
        match s {
            "<=" => Some(Relation::Le),
            ">=" => Some(Relation::Ge),
            "=" => Some(Relation::Eq),
            _ => None,
        }
    }
}

/// Evidence for one bound on `b(G,H)`. Trust nothing in it until [`Certificate::verify`] says so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub group: String,
    pub group_order: BigUint,
    pub subgroup: String,
    pub subgroup_order: BigUint,
    pub conjugators: Vec<Perm>,
    pub census: Option<DoubleCosetCensus>,
    pub relation: Relation,
    pub value: u32,
    pub replay: Option<RandomSource>,
}

impl Certificate {
    fn new(kind: CertKind, g: &Group, h: &Group, relation: Relation, value: u32) -> Certificate {
        Certificate {
            kind,
            group: g.name().to_string(),
            group_order: g.order(),
            subgroup: h.name().to_string(),
            subgroup_order: h.order(),
            conjugators: vec![],
            census: None,
            relation,
            value,
            replay: None,
        }
    }

    /// Re-checks the claim from scratch against `g` and `h`.
    pub fn verify(&self, g: &Group, h: &Group) -> Result<bool> {
        if g.order() != self.group_order || h.order() != self.subgroup_order || !g.contains_group(h)? {
            return Ok(false);
        }
        for x in &self.conjugators {
            if !g.contains(x)? {
                return Ok(false);
            }
        }
        let k = self.conjugators.len() as u32;
        Ok(match self.kind {
            CertKind::Witness => self.relation == Relation::Le && self.value == k + 1 && verify_witness(g, h, &self.conjugators)?,
            CertKind::RegularOrbit => {
                self.relation == Relation::Le && self.value == 2 && k == 1 && verify_witness(g, h, &self.conjugators)?
            }
            CertKind::NoRegularOrbitCensus => {
                let Some(c) = &self.census else { return Ok(false) };
                self.relation == Relation::Ge
                    && self.value == 3
                    && !h.is_trivial()
                    && c.complete
                    && c.ambient_order == self.group_order
                    && c.subgroup_order == self.subgroup_order
                    && census_is_exact(g, h, &c.entries)?
                    && !c.has_regular()
            }
            CertKind::PartialCertificate => {
                self.relation == Relation::Ge && self.value == 3 && partial_set_ok(g, h, &self.conjugators)?
            }
            CertKind::LowerBound => {
                let idx = g.order() / h.order();
                self.relation == Relation::Ge && idx > BigUint::one() && self.value == lower_bound(&g.order(), &idx)?
            }
            CertKind::Exhaustive => {
                self.relation == Relation::Eq
                    && self.value == k + 1
                    && verify_witness(g, h, &self.conjugators)?
                    && exhaustive_base_size(g, h)? == self.value
            }
        })
    }
}

/// Least `k` with `index^k ≥ order`.
pub fn lower_bound(order: &BigUint, index: &BigUint) -> Result<u32> {
    if *index < BigUint::from(2u32) || order < index {
        return Err(Error::Invalid(format!("lower bound needs order >= index >= 2, got {order} and {index}")));
    }
    let mut k = 1;
    let mut p = index.clone();
    while &p < order {
        p *= index;
        k += 1;
    }
    Ok(k)
}

/// Is `h ∩ h^{x₁} ∩ … ∩ h^{x_k}` trivial?
pub fn verify_witness(g: &Group, h: &Group, xs: &[Perm]) -> Result<bool> {
    if !g.contains_group(h)? {
        return Err(Error::NotSubgroup(h.name().into(), g.name().into()));
    }
    for x in xs {
        if !g.contains(x)? {
            return Err(Error::Invalid(format!("conjugator {x} is not in {}", g.name())));
        }
    }
    Ok(witness_holds(h, xs))
}

fn witness_holds(h: &Group, xs: &[Perm]) -> bool {
    let mut cur = h.clone();
    for x in xs {
        if cur.is_trivial() {
            break;
        }
        cur = intersect_conjugate_into(&cur, h, x);
    }
    cur.order().is_one()
}

/// `cur ∩ h^x`.
fn intersect_conjugate_into(cur: &Group, h: &Group, x: &Perm) -> Group {
    let hx = Group::from_chain(h.chain().conjugate(x));
    intersect(cur, &hx).expect("degrees agree")
}

/// Random search for `c−1` conjugators forming a witness. Absence proves nothing.
pub fn witness_search(g: &Group, h: &Group, c: u32, trials: u64, src: RandomSource, workers: usize) -> Option<Certificate> {
    if h.is_trivial() {
        let mut cert = Certificate::new(CertKind::Witness, g, h, Relation::Le, 1);
        cert.replay = Some(src);
        return Some(cert);
    }
    if c < 2 {
        return None;
    }
    let workers = workers.max(1) as u64;
    let stop = AtomicBool::new(false);
    let found: Mutex<Option<(u64, Vec<Perm>)>> = Mutex::new(None);
    std::thread::scope(|s| {
        for w in 0..workers {
            let (stop, found) = (&stop, &found);
            let share = trials / workers + u64::from(w < trials % workers);
            s.spawn(move || {
                let mut pr = g.random_source(src.worker(w));
                for _ in 0..share {
                    if stop.load(Ordering::Relaxed) {
                        return;
                    }
                    let xs: Vec<Perm> = (1..c).map(|_| pr.next_element()).collect();
                    if witness_holds(h, &xs) {
                        let mut f = found.lock().unwrap();
                        if f.as_ref().is_none_or(|(v, _)| w < *v) {
                            *f = Some((w, xs));
                        }
                        stop.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    let (w, xs) = found.into_inner().unwrap()?;
    let mut cert = Certificate::new(CertKind::Witness, g, h, Relation::Le, c);
    cert.conjugators = xs;
    cert.replay = Some(src.worker(w));
    Some(cert)
}

/// Decides `b ≤ 2` through a complete census of `(H,H)` double cosets.
pub fn has_regular_orbit(g: &Group, h: &Group) -> Result<(bool, Certificate)> {
    if h.is_trivial() {
        let mut cert = Certificate::new(CertKind::RegularOrbit, g, h, Relation::Le, 2);
        cert.conjugators = vec![Perm::identity(g.degree())];
        return Ok((true, cert));
    }
    let census = double_cosets(g, h, None)?;
    if let Some(e) = census.regular().next() {
        let mut cert = Certificate::new(CertKind::RegularOrbit, g, h, Relation::Le, 2);
        cert.conjugators = vec![e.rep.clone()];
        return Ok((true, cert));
    }
    let mut cert = Certificate::new(CertKind::NoRegularOrbitCensus, g, h, Relation::Ge, 3);
    cert.census = Some(census);
    Ok((false, cert))
}

fn kgk_size(h: &Group, x: &Perm) -> BigUint {
    let ho = h.order();
    &ho * &ho / intersect_conjugate(h, x).order()
}

/// Sizes recomputed by intersection, representatives pairwise in distinct double cosets, total `|G|`.
fn census_is_exact(g: &Group, h: &Group, entries: &[CensusEntry]) -> Result<bool> {
    let reps: Vec<Perm> = entries.iter().map(|e| e.rep.clone()).collect();
    for e in entries {
        if !g.contains(&e.rep)? || kgk_size(h, &e.rep) != e.size {
            return Ok(false);
        }
    }
    let total: BigUint = entries.iter().map(|e| &e.size).sum();
    Ok(total == g.order() && pairwise_distinct(h, &reps))
}

fn pairwise_distinct(h: &Group, reps: &[Perm]) -> bool {
    let ch = h.chain();
    for (i, a) in reps.iter().enumerate() {
        let p = DoubleCosetProbe::new(h, a);
        if reps[i + 1..].iter().any(|b| p.contains(ch, b)) {
            return false;
        }
    }
    true
}

/// Every `|HxH| < |H|²`, the `HxH` distinct, and their total exceeds `|G| − |H|²`.
fn partial_set_ok(g: &Group, h: &Group, reps: &[Perm]) -> Result<bool> {
    let ho = h.order();
    let sq = &ho * &ho;
    let mut total = BigUint::from(0u32);
    for x in reps {
        if !g.contains(x)? {
            return Ok(false);
        }
        let s = kgk_size(h, x);
        if s >= sq {
            return Ok(false);
        }
        total += s;
    }
    Ok(!h.is_trivial() && total + sq > g.order() && pairwise_distinct(h, reps))
}

/// Sampled double cosets whose masses exclude a regular orbit, or nothing within `budget` samples.
pub fn partial_certificate_search(g: &Group, h: &Group, src: RandomSource, budget: u64) -> Option<Certificate> {
    if h.is_trivial() {
        return None;
    }
    let ho = h.order();
    let sq = &ho * &ho;
    let go = g.order();
    if sq > go {
        let mut cert = Certificate::new(CertKind::PartialCertificate, g, h, Relation::Ge, 3);
        cert.replay = Some(src);
        return cert.verify(g, h).ok()?.then_some(cert);
    }
    let need = &go - &sq;
    let ch = h.chain();
    let mut pr = g.random_source(src);
    let mut probes: Vec<DoubleCosetProbe> = Vec::new();
    let mut reps = Vec::new();
    let mut total = BigUint::from(0u32);
    let mut tried = 0;
    let mut candidates = std::iter::once(Perm::identity(g.degree())).chain(std::iter::from_fn(|| Some(pr.next_element())));
    while tried < budget {
        tried += 1;
        let x = candidates.next().unwrap();
        if probes.iter().any(|p| p.contains(ch, &x)) {
            continue;
        }
        let s = kgk_size(h, &x);
        if s == sq {
            return None;
        }
        probes.push(DoubleCosetProbe::new(h, &x));
        reps.push(x);
        total += s;
        if total > need {
            let mut cert = Certificate::new(CertKind::PartialCertificate, g, h, Relation::Ge, 3);
            cert.conjugators = reps;
            cert.replay = Some(src);
            return Some(cert);
        }
    }
    None
}

/// The first subgroup in a descending chain admitting a witness; the witness serves all its subgroups.
pub fn descend_bound(g: &Group, chain: &[Group], c: u32, trials: u64, src: RandomSource) -> Option<(usize, Certificate)> {
    chain.iter().enumerate().find_map(|(i, j)| witness_search(g, j, c, trials, src, 1).map(|w| (i, w)))
}

/// Minimal base size of the action on cosets, by searching bases of the permutation image.
/// Also returns coset representatives for a minimal base, first one dropped.
pub fn exhaustive_base_size_with_witness(g: &Group, h: &Group) -> Result<(u32, Vec<Perm>)> {
    let idx = g.order() / h.order();
    if idx > BigUint::from(EXHAUSTIVE_INDEX_CAP) {
        return Err(Error::IndexCap { index: idx.to_string(), cap: EXHAUSTIVE_INDEX_CAP });
    }
    if g.order() > BigUint::from(EXHAUSTIVE_ORDER_CAP) {
        return Err(Error::Invalid(format!("group order {} exceeds {}", g.order(), EXHAUSTIVE_ORDER_CAP)));
    }
    if !is_core_free(g, h)? {
        return Err(Error::NotCoreFree(h.name().into()));
    }
    if h.is_trivial() {
        return Ok((1, vec![]));
    }
    let (act, reps) = coset_action(g, h, DEFAULT_INDEX_CAP)?;
    let pt = act.stabilizer0(&[0]);
    let mut depth = 2;
    loop {
        let mut path = vec![0u32];
        if extend(&pt, depth - 1, &mut path) {
            let xs = path[1..].iter().map(|&p| reps[p as usize].clone()).collect();
            return Ok((depth, xs));
        }
        depth += 1;
    }
}

pub fn exhaustive_base_size(g: &Group, h: &Group) -> Result<u32> {
    Ok(exhaustive_base_size_with_witness(g, h)?.0)
}

/// Can `left` more points make `s` trivial? One candidate per orbit of `s`.
fn extend(s: &Group, left: u32, path: &mut Vec<u32>) -> bool {
    if s.is_trivial() || s.order().is_one() {
        return true;
    }
    if left == 0 {
        return false;
    }
    let orbits: Vec<Vec<u32>> = s.orbits0().into_iter().filter(|o| o.len() > 1).collect();
    let longest = orbits.iter().map(|o| o.len()).max().unwrap();
    if s.order() > BigUint::from(longest).pow(left) {
        return false;
    }
    let mut orbits = orbits;
    orbits.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    for o in orbits {
        let p = o[0];
        path.push(p);
        if extend(&s.stabilizer0(&[p]), left - 1, path) {
            return true;
        }
        path.pop();
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExhaustiveMode {
    Never,
    WhenOpen,
    Always,
}

#[derive(Clone, Debug)]
pub struct Policy {
    pub max_c: u32,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    pub exhaustive: ExhaustiveMode,
}

impl Default for Policy {
    fn default() -> Policy {
        Policy { max_c: 5, trials: 10_000, seed: 42, workers: 1, exhaustive: ExhaustiveMode::WhenOpen }
    }
}

#[derive(Clone, Debug)]
pub struct BaseSizeResult {
    pub lower: u32,
    pub upper: u32,
    pub certificates: Vec<Certificate>,
    pub exact: bool,
}

impl BaseSizeResult {
    fn close(mut self) -> BaseSizeResult {
        self.exact = self.lower == self.upper;
        self
    }

    pub fn verify(&self, g: &Group, h: &Group) -> Result<bool> {
        for c in &self.certificates {
            if !c.verify(g, h)? {
                return Ok(false);
            }
        }
        Ok(self.lower <= self.upper)
    }
}

fn exhaustive_allowed(g: &Group, idx: &BigUint) -> bool {
    *idx <= BigUint::from(EXHAUSTIVE_INDEX_CAP) && g.order() <= BigUint::from(EXHAUSTIVE_ORDER_CAP)
}

/// Length of a stabilizer chain can never exceed `log₂|G|`, so neither can `b`.
fn log2_floor(n: &BigUint) -> u32 {
    (n.bits() - 1) as u32
}

/// Brackets `b(G,H)` as tightly as the policy allows.
pub fn exact_base_size(g: &Group, h: &Group, policy: &Policy) -> Result<BaseSizeResult> {
    if !g.contains_group(h)? {
        return Err(Error::NotSubgroup(h.name().into(), g.name().into()));
    }
    if !is_core_free(g, h)? {
        return Err(Error::NotCoreFree(h.name().into()));
    }
    let src = RandomSource::new(policy.seed, 0);
    if h.is_trivial() {
        let w = witness_search(g, h, 1, 0, src, 1).unwrap();
        return Ok(BaseSizeResult { lower: 1, upper: 1, certificates: vec![w], exact: true });
    }
    let idx = g.order() / h.order();
    let eq21 = lower_bound(&g.order(), &idx)?;
    let mut res = BaseSizeResult {
        lower: eq21.max(2),
        upper: log2_floor(&g.order()).max(2),
        certificates: vec![Certificate::new(CertKind::LowerBound, g, h, Relation::Ge, eq21)],
        exact: false,
    };
    if res.lower == 2 {
        let census_ok = idx <= BigUint::from(DEFAULT_INDEX_CAP);
        if census_ok {
            let (regular, cert) = has_regular_orbit(g, h)?;
            res.certificates.push(cert);
            if regular {
                res.upper = 2;
                return Ok(res.close());
            }
            res.lower = 3;
        } else if let Some(cert) = partial_certificate_search(g, h, src.worker(1 << 16), policy.trials) {
            res.certificates.push(cert);
            res.lower = 3;
        }
    }
    let can_exhaust = policy.exhaustive != ExhaustiveMode::Never && exhaustive_allowed(g, &idx);
    for c in res.lower..=policy.max_c.max(res.lower) {
        if c > policy.max_c {
            break;
        }
        if let Some(w) = witness_search(g, h, c, policy.trials, RandomSource::new(policy.seed, c as u64), policy.workers) {
            res.upper = c;
            res.certificates.push(w);
            break;
        }
        // A failed search is no evidence; hand over to the exhaustive oracle if it fits.
        if can_exhaust {
            break;
        }
    }
    let open = res.lower < res.upper;
    if can_exhaust && (open || policy.exhaustive == ExhaustiveMode::Always) {
        let (b, xs) = exhaustive_base_size_with_witness(g, h)?;
        let mut cert = Certificate::new(CertKind::Exhaustive, g, h, Relation::Eq, b);
        cert.conjugators = xs;
        res.certificates.push(cert);
        res.lower = b;
        res.upper = b;
    }
    Ok(res.close())
}

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub name: String,
    pub order: BigUint,
    pub soluble: bool,
    pub core_free: bool,
    pub result: Option<BaseSizeResult>,
}

#[derive(Clone, Debug)]
pub struct Survey {
    pub rows: Vec<SurveyRow>,
    /// Largest base size over the soluble core-free rows, as a bracket.
    pub s_lower: u32,
    pub s_upper: u32,
}

/// Base sizes of the soluble core-free members of `catalog`, sorted by order descending then name.
pub fn survey(g: &Group, catalog: &[Group], policy: &Policy) -> Result<Survey> {
    let mut items: Vec<&Group> = catalog.iter().collect();
    items.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.name().cmp(b.name())));
    let mut rows: Vec<SurveyRow> = Vec::new();
    let (mut lo, mut hi) = (1, 1);
    for h in items {
        let core_free = is_core_free(g, h)?;
        let soluble = is_soluble(h);
        let mut result = None;
        if core_free && soluble {
            let mut r = exact_base_size(g, h, policy)?;
            // A witness for a containing row also serves this one.
            for (prev, row) in items_with_results(&rows, catalog) {
                if r.upper <= row.upper || !prev.contains_group(h)? {
                    continue;
                }
                if let Some(w) = row.certificates.iter().find(|c| c.kind == CertKind::Witness) {
                    if verify_witness(g, h, &w.conjugators)? {
                        let mut w = w.clone();
                        w.subgroup = h.name().to_string();
                        w.subgroup_order = h.order();
                        r.upper = w.value;
                        r.certificates.push(w);
                        r = r.close();
                    }
                }
            }
            lo = lo.max(r.lower);
            hi = hi.max(r.upper);
            result = Some(r);
        }
        rows.push(SurveyRow { name: h.name().to_string(), order: h.order(), soluble, core_free, result });
    }
    Ok(Survey { rows, s_lower: lo, s_upper: hi })
}

fn items_with_results<'a>(rows: &'a [SurveyRow], catalog: &'a [Group]) -> impl Iterator<Item = (&'a Group, &'a BaseSizeResult)> {
    rows.iter().filter_map(move |r| {
        let res = r.result.as_ref()?;
        let grp = catalog.iter().find(|c| c.name() == r.name && c.order() == r.order)?;
        Some((grp, res))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(n: usize, cycles: &[&[&[u32]]]) -> Group {
        Group::new(n, cycles.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        let b = |a: u64, n: u64| lower_bound(&BigUint::from(a), &BigUint::from(n)).unwrap();
        assert_eq!(b(7920, 55), 3);
        assert_eq!(b(40320, 35), 3);
        assert_eq!(b(12, 12), 1);
        assert!(lower_bound(&BigUint::from(5u32), &BigUint::from(1u32)).is_err());
        assert!(lower_bound(&BigUint::from(5u32), &BigUint::from(7u32)).is_err());
    }

    #[test]
    fn s4_transposition() {
        let s4 = Group::symmetric(4);
        let t = gp(4, &[&[&[1, 2]]]);
        let (reg, cert) = has_regular_orbit(&s4, &t).unwrap();
        assert!(reg && cert.verify(&s4, &t).unwrap());
        assert!(partial_certificate_search(&s4, &t, RandomSource::new(1, 0), 200).is_none());
        let r = exact_base_size(&s4, &t, &Policy::default()).unwrap();
        assert_eq!((r.lower, r.upper), (2, 2));
        assert!(r.verify(&s4, &t).unwrap());
        assert_eq!(exhaustive_base_size(&s4, &t).unwrap(), 2);
    }

    #[test]
    fn natural_action_of_s5() {
        let s5 = Group::symmetric(5);
        let s4 = gp(5, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        assert_eq!(exhaustive_base_size(&s5, &s4).unwrap(), 4);
        let r = exact_base_size(&s5, &s4, &Policy::default()).unwrap();
        assert!(r.exact && r.lower == 4);
        assert!(r.verify(&s5, &s4).unwrap());
        let (reg, cert) = has_regular_orbit(&s5, &s4).unwrap();
        assert!(!reg);
        assert_eq!(cert.kind, CertKind::NoRegularOrbitCensus);
        assert!(cert.verify(&s5, &s4).unwrap());
        let p = partial_certificate_search(&s5, &s4, RandomSource::new(3, 0), 500).unwrap();
        assert!(p.verify(&s5, &s4).unwrap());
    }

    #[test]
    fn trivial_and_errors() {
        let s4 = Group::symmetric(4);
        let r = exact_base_size(&s4, &Group::trivial(4), &Policy::default()).unwrap();
        assert_eq!((r.lower, r.upper), (1, 1));
        let v4 = gp(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
        assert!(matches!(exact_base_size(&s4, &v4, &Policy::default()), Err(Error::NotCoreFree(_))));
        assert!(verify_witness(&s4, &Group::trivial(4), &[]).unwrap());
        assert!(!verify_witness(&s4, &s4, &[Perm::identity(4)]).unwrap());
    }

    #[test]
    fn tampered_certificates_fail() {
        let s5 = Group::symmetric(5);
        let s4 = gp(5, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        let w = witness_search(&s5, &s4, 4, 2000, RandomSource::new(5, 0), 1).unwrap();
        assert!(w.verify(&s5, &s4).unwrap());
        let mut bad = w.clone();
        bad.conjugators.pop();
        bad.value -= 1;
        assert!(!bad.verify(&s5, &s4).unwrap());
        let mut bad = w;
        bad.value = 2;
        assert!(!bad.verify(&s5, &s4).unwrap());
    }
}
