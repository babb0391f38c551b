//! `(K,K)` double cosets as `K`-orbits on right cosets of `K`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::chain::StabilizerChain;
use crate::cosets::{canonical_rep, CosetSpace, DEFAULT_INDEX_CAP};
use crate::error::Result;
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub rep: Perm,
    pub size: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetCensus {
    pub ambient_order: BigUint,
    pub subgroup_order: BigUint,
    pub entries: Vec<CensusEntry>,
    pub complete: bool,
}

impl DoubleCosetCensus {
    pub fn total(&self) -> BigUint {
        self.entries.iter().map(|e| &e.size).sum()
    }

    /// Entries of the maximal size `|K|²`, i.e. regular `K`-orbits.
    pub fn regular(&self) -> impl Iterator<Item = &CensusEntry> {
        let sq = &self.subgroup_order * &self.subgroup_order;
        self.entries.iter().filter(move |e| e.size == sq)
    }

    pub fn has_regular(&self) -> bool {
        self.regular().next().is_some()
    }

    /// Checks the counting invariants, not the representatives.
    pub fn sizes_consistent(&self) -> bool {
        let k = &self.subgroup_order;
        let sq = k * k;
        let ok = self.entries.iter().all(|e| (&e.size % k).is_zero() && (&sq % &e.size).is_zero());
        ok && (!self.complete || self.total() == self.ambient_order)
    }
}

/// Census of `K\G/K`. With a budget, at most `budget` entries are produced.
pub fn double_cosets(g: &Group, k: &Group, budget: Option<usize>) -> Result<DoubleCosetCensus> {
    let cs = CosetSpace::new(g, k, DEFAULT_INDEX_CAP)?;
    let korder = k.order();
    let mut seen = vec![false; cs.len()];
    let mut entries = Vec::new();
    let mut complete = true;
    for i in 0..cs.len() {
        if seen[i] {
            continue;
        }
        if budget.is_some_and(|b| entries.len() >= b) {
            complete = false;
            break;
        }
        seen[i] = true;
        let mut orbit = vec![i as u32];
        let mut q = 0;
        while q < orbit.len() {
            let c = orbit[q] as usize;
            for s in k.generators() {
                let d = cs.act(c, s) as usize;
                if !seen[d] {
                    seen[d] = true;
                    orbit.push(d as u32);
                }
            }
            q += 1;
        }
        entries.push(CensusEntry { rep: cs.rep(i).clone(), size: &korder * BigUint::from(orbit.len()) });
    }
    Ok(DoubleCosetCensus { ambient_order: g.order(), subgroup_order: korder, entries, complete })
}

/// Right cosets `Kx` inside `KgK`, keyed by canonical representative.
pub struct DoubleCosetProbe {
    keys: HashSet<Box<[u32]>>,
}

impl DoubleCosetProbe {
    pub fn new(k: &Group, g: &Perm) -> DoubleCosetProbe {
        let ch = k.chain();
        let start = canonical_rep(ch, g);
        let mut keys = HashSet::new();
        let mut queue = vec![start];
        keys.insert(queue[0].raw().into());
        let mut q = 0;
        while q < queue.len() {
            for s in k.generators() {
                let c = canonical_rep(ch, &queue[q].then(s));
                if keys.insert(c.raw().into()) {
                    queue.push(c);
                }
            }
            q += 1;
        }
        DoubleCosetProbe { keys }
    }

    /// Number of right cosets of `K` in the double coset.
    pub fn cosets(&self) -> usize {
        self.keys.len()
    }

    pub fn contains(&self, kchain: &StabilizerChain, x: &Perm) -> bool {
        self.keys.contains(canonical_rep(kchain, x).raw())
    }
}
