//! Base and strong generating set via deterministic Schreier-Sims.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::perm::Perm;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    slot: Vec<u32>,
    reps: Vec<Perm>,
    inv: Vec<Perm>,
}

impl Level {
    fn new(n: usize, base: u32, gens: Vec<Perm>) -> Level {
        let mut lv = Level { base, gens, orbit: vec![], slot: vec![NONE; n], reps: vec![], inv: vec![] };
        lv.rebuild(n);
        lv
    }

    fn rebuild(&mut self, n: usize) {
        self.slot.clear();
        self.slot.resize(n, NONE);
        self.orbit.clear();
        self.reps.clear();
        self.inv.clear();
        self.orbit.push(self.base);
        self.slot[self.base as usize] = 0;
        let id = Perm::identity(n);
        self.reps.push(id.clone());
        self.inv.push(id);
        let mut k = 0;
        while k < self.orbit.len() {
            let d = self.orbit[k];
            for s in &self.gens {
                let e = s.at(d);
                if self.slot[e as usize] == NONE {
                    self.slot[e as usize] = self.orbit.len() as u32;
                    self.orbit.push(e);
                    let r = self.reps[k].then(s);
                    self.inv.push(r.inverse());
                    self.reps.push(r);
                }
            }
            k += 1;
        }
    }

    /// 0-based base point.
    pub fn base_point(&self) -> u32 {
        self.base
    }

    /// 0-based orbit of the base point, in discovery order.
    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    #[inline]
    pub fn in_orbit(&self, p: u32) -> bool {
        self.slot[p as usize] != NONE
    }

    /// Transversal element mapping the base point to `p` (0-based).
    #[inline]
    pub fn rep(&self, p: u32) -> Option<&Perm> {
        let s = self.slot[p as usize];
        (s != NONE).then(|| &self.reps[s as usize])
    }

    #[inline]
    pub fn rep_inv(&self, p: u32) -> Option<&Perm> {
        let s = self.slot[p as usize];
        (s != NONE).then(|| &self.inv[s as usize])
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabilizerChain {
    pub fn new(degree: usize, gens: &[Perm]) -> StabilizerChain {
        StabilizerChain::with_base(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `prefix` (0-based points).
    /// Prefix points are kept even when their level is trivial.
    pub fn with_base(degree: usize, gens: &[Perm], prefix: &[u32]) -> StabilizerChain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<u32> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.at(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg = gens.iter().filter(|g| base[..i].iter().all(|&c| g.at(c) == c)).cloned().collect();
            levels.push(Level::new(degree, b, lg));
        }
        let mut ch = StabilizerChain { degree, levels, order: BigUint::one() };
        ch.complete();
        ch.order = ch.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        ch
    }

    fn complete(&mut self) {
        let n = self.degree;
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut dropped = None;
            'scan: for k in 0..self.levels[lvl].orbit.len() {
                for s in 0..self.levels[lvl].gens.len() {
                    let l = &self.levels[lvl];
                    let d = l.orbit[k];
                    let e = l.gens[s].at(d);
                    let t = l.slot[e as usize] as usize;
                    let h = l.reps[k].then(&l.gens[s]).then(&l.inv[t]);
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.strip(h, lvl + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        dropped = Some((res, j));
                        break 'scan;
                    }
                }
            }
            match dropped {
                None => i -= 1,
                Some((res, j)) => {
                    if j == self.levels.len() {
                        let b = res.first_moved().unwrap();
                        self.levels.push(Level::new(n, b, vec![]));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(res.clone());
                        self.levels[l].rebuild(n);
                    }
                    i = j + 1;
                }
            }
        }
    }

    /// Sifts `g` from level `from`; returns the residue and the level where sifting stopped.
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (j, l) in self.levels.iter().enumerate().skip(from) {
            let b = g.at(l.base);
            match l.rep_inv(b) {
                Some(u) => g = g.then(u),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn sift(&self, g: &Perm) -> (Perm, usize) {
        self.strip(g.clone(), 0)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (r, j) = self.sift(g);
        j == self.levels.len() && r.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// 0-based base points.
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.levels.first().map(|l| &l.gens[..]).unwrap_or(&[])
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// Generators of the pointwise stabilizer of the first `i` base points.
    pub fn stabilizer_generators(&self, i: usize) -> &[Perm] {
        self.levels.get(i).map(|l| &l.gens[..]).unwrap_or(&[])
    }

    /// Uniformly distributed element built from random transversal choices.
    pub fn random_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for l in self.levels.iter().rev() {
            let k = rng.gen_range(0..l.reps.len());
            g = g.then(&l.reps[k]);
        }
        g
    }

    /// Every element, for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.reps.len());
            for g in &out {
                for r in &l.reps {
                    next.push(g.then(r));
                }
            }
            out = next;
        }
        out
    }

    /// The chain of `H^x` obtained by conjugating every stored element.
    pub fn conjugate(&self, x: &Perm) -> StabilizerChain {
        let n = self.degree;
        let levels = self
            .levels
            .iter()
            .map(|l| {
                let mut slot = vec![NONE; n];
                let orbit: Vec<u32> = l.orbit.iter().map(|&p| x.at(p)).collect();
                for (k, &p) in orbit.iter().enumerate() {
                    slot[p as usize] = k as u32;
                }
                Level {
                    base: x.at(l.base),
                    gens: l.gens.iter().map(|g| g.conj(x)).collect(),
                    orbit,
                    slot,
                    reps: l.reps.iter().map(|g| g.conj(x)).collect(),
                    inv: l.inv.iter().map(|g| g.conj(x)).collect(),
                }
            })
            .collect();
        StabilizerChain { degree: n, levels, order: self.order.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Perm {
        Perm::from_images(v).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        let ch = StabilizerChain::new(4, &[p(&[2, 3, 4, 1]), p(&[2, 1, 3, 4])]);
        assert_eq!(*ch.order(), BigUint::from(24u32));
        let gens = [Perm::from_cycles(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]).unwrap(), Perm::from_cycles(8, &[&[1, 2]]).unwrap()];
        assert_eq!(*StabilizerChain::new(8, &gens).order(), BigUint::from(40320u32));
        assert!(StabilizerChain::new(5, &[Perm::identity(5)]).is_trivial());
    }

    #[test]
    fn alternating_membership() {
        let a4 = StabilizerChain::new(4, &[p(&[2, 3, 1, 4]), p(&[1, 3, 4, 2])]);
        assert_eq!(*a4.order(), BigUint::from(12u32));
        assert!(!a4.contains(&p(&[2, 1, 3, 4])));
        assert!(a4.contains(&p(&[2, 1, 4, 3])));
        assert_eq!(a4.elements().len(), 12);
    }

    #[test]
    fn prefix_is_respected() {
        let gens = [p(&[2, 3, 4, 1]), p(&[2, 1, 3, 4])];
        let ch = StabilizerChain::with_base(4, &gens, &[3, 3, 1]);
        assert_eq!(&ch.base()[..3], &[3, 3, 1]);
        assert_eq!(*ch.order(), BigUint::from(24u32));
    }

    #[test]
    fn conjugate_chain_contains_conjugates() {
        let gens = [p(&[2, 1, 3, 4, 5]), p(&[1, 3, 2, 4, 5])];
        let ch = StabilizerChain::new(5, &gens);
        let x = p(&[5, 4, 3, 2, 1]);
        let cc = ch.conjugate(&x);
        for g in ch.elements() {
            assert!(cc.contains(&g.conj(&x)));
        }
        assert!(!cc.contains(&p(&[2, 1, 3, 4, 5])));
    }
}
