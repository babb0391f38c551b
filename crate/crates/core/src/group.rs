//! Finitely generated permutation groups with a lazily frozen chain.

use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::random::{ProductReplacement, RandomSource};

#[derive(Debug)]
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    name: Option<String>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for Group {
    fn clone(&self) -> Group {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        Group { degree: self.degree, gens: self.gens.clone(), name: self.name.clone(), chain }
    }
}

impl Group {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Group> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Group { degree, gens, name: None, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Group {
        Group { degree, gens: vec![], name: None, chain: OnceLock::new() }
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Group {
        if n < 2 {
            return Group::trivial(n);
        }
        let cyc: Vec<u32> = (1..=n as u32).collect();
        let gens = vec![Perm::from_cycles(n, &[&cyc]).unwrap(), Perm::from_cycles(n, &[&[1, 2]]).unwrap()];
        Group::new(n, gens).unwrap().named(format!("S{n}"))
    }

    pub fn named(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    pub fn from_chain(chain: StabilizerChain) -> Group {
        let gens = chain.strong_generators().to_vec();
        let g = Group { degree: chain.degree(), gens, name: None, chain: OnceLock::new() };
        let _ = g.chain.set(chain);
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("group")
    }

    pub fn label(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Builds the chain on first use; afterwards the group is frozen.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::new(self.degree, &self.gens))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order().clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, a: &Perm) -> Result<bool> {
        if a.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, a.degree()));
        }
        Ok(self.chain().contains(a))
    }

    pub fn contains_group(&self, h: &Group) -> Result<bool> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, h.degree));
        }
        Ok(h.gens.iter().all(|g| self.chain().contains(g)))
    }

    /// Orbit of the 1-based point `p`, sorted.
    pub fn orbit(&self, p: u32) -> Result<Vec<u32>> {
        if p == 0 || p as usize > self.degree {
            return Err(Error::PointOutOfRange(p as usize, self.degree));
        }
        let mut o: Vec<u32> = orbit0(self.degree, &self.gens, p - 1).into_iter().map(|x| x + 1).collect();
        o.sort_unstable();
        Ok(o)
    }

    /// All orbits as sorted 0-based point lists, ordered by least point.
    pub fn orbits0(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let mut o = orbit0(self.degree, &self.gens, p);
            for &q in &o {
                seen[q as usize] = true;
            }
            o.sort_unstable();
            out.push(o);
        }
        out
    }

    pub fn random_source(&self, src: RandomSource) -> ProductReplacement {
        ProductReplacement::new(self.degree, &self.gens, src)
    }

    pub fn random_element(&self, src: RandomSource) -> Perm {
        self.random_source(src).next_element()
    }

    /// Pointwise stabilizer of the given 0-based points.
    pub fn stabilizer0(&self, points: &[u32]) -> Group {
        let ch = StabilizerChain::with_base(self.degree, &self.gens, points);
        let gens = ch.stabilizer_generators(points.len()).to_vec();
        Group::from_chain(StabilizerChain::new(self.degree, &gens))
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.chain().elements()
    }

    /// Same group with its chain rebuilt so the base starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[u32]) -> StabilizerChain {
        StabilizerChain::with_base(self.degree, &self.gens, prefix)
    }
}

pub(crate) fn orbit0(n: usize, gens: &[Perm], p: u32) -> Vec<u32> {
    let mut seen = vec![false; n];
    seen[p as usize] = true;
    let mut o = vec![p];
    let mut k = 0;
    while k < o.len() {
        let d = o[k];
        for g in gens {
            let e = g.at(d);
            if !seen[e as usize] {
                seen[e as usize] = true;
                o.push(e);
            }
        }
        k += 1;
    }
    o
}
