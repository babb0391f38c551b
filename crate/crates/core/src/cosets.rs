//! Right cosets `Kg`: canonical representatives, enumeration, coset actions.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

pub const DEFAULT_INDEX_CAP: u64 = 10_000_000;

/// The element of `Kg` whose images of `K`'s base points are lexicographically least.
pub fn canonical_rep(k: &StabilizerChain, g: &Perm) -> Perm {
    let mut g = g.clone();
    for lv in k.levels() {
        let best = lv.orbit().iter().copied().min_by_key(|&d| g.at(d)).unwrap();
        if best != lv.base_point() {
            g = lv.rep(best).unwrap().then(&g);
        }
    }
    g
}

pub type CosetKey = Box<[u32]>;

/// Right cosets of `k` in `g`, discovered breadth-first from `k` itself.
pub struct CosetSpace {
    kchain: StabilizerChain,
    gbase: Vec<u32>,
    reps: Vec<Perm>,
    index: HashMap<CosetKey, u32>,
}

impl CosetSpace {
    pub fn new(g: &Group, k: &Group, cap: u64) -> Result<CosetSpace> {
        if !g.contains_group(k)? {
            return Err(Error::NotSubgroup(k.name().into(), g.name().into()));
        }
        let idx = g.order() / k.order();
        if idx > BigUint::from(cap) {
            return Err(Error::IndexCap { index: idx.to_string(), cap });
        }
        let size = idx.to_usize().unwrap();
        let mut cs = CosetSpace {
            kchain: k.chain().clone(),
            gbase: g.chain().base(),
            reps: Vec::with_capacity(size),
            index: HashMap::with_capacity(size),
        };
        let id = Perm::identity(g.degree());
        let c = canonical_rep(&cs.kchain, &id);
        cs.index.insert(cs.key_of(&c), 0);
        cs.reps.push(c);
        let mut q = 0;
        while q < cs.reps.len() {
            for s in g.generators() {
                let x = cs.reps[q].then(s);
                let c = canonical_rep(&cs.kchain, &x);
                let key = cs.key_of(&c);
                if !cs.index.contains_key(&key) {
                    cs.index.insert(key, cs.reps.len() as u32);
                    cs.reps.push(c);
                }
            }
            q += 1;
        }
        debug_assert_eq!(cs.reps.len(), size);
        Ok(cs)
    }

    fn key_of(&self, c: &Perm) -> CosetKey {
        self.gbase.iter().map(|&b| c.at(b)).collect()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Canonical representative of coset `i`.
    pub fn rep(&self, i: usize) -> &Perm {
        &self.reps[i]
    }

    pub fn subgroup_chain(&self) -> &StabilizerChain {
        &self.kchain
    }

    /// Index of the coset `Kx`.
    pub fn locate(&self, x: &Perm) -> u32 {
        let c = canonical_rep(&self.kchain, x);
        self.index[&self.key_of(&c)]
    }

    /// Coset reached from coset `i` by right multiplication with `x`.
    pub fn act(&self, i: usize, x: &Perm) -> u32 {
        self.locate(&self.reps[i].then(x))
    }

    /// Permutation of the coset indices induced by `x`.
    pub fn action_of(&self, x: &Perm) -> Perm {
        let img: Vec<u32> = (0..self.len()).map(|i| self.act(i, x)).collect();
        Perm::from_raw(img)
    }
}

/// Action of `g` on the right cosets of `h`. Point `i` (1-based) is the coset of `reps[i-1]`.
pub fn coset_action(g: &Group, h: &Group, cap: u64) -> Result<(Group, Vec<Perm>)> {
    let cs = CosetSpace::new(g, h, cap)?;
    let gens: Vec<Perm> = g.generators().iter().map(|s| cs.action_of(s)).collect();
    let act = Group::new(cs.len(), gens)?;
    Ok((act, cs.reps))
}
