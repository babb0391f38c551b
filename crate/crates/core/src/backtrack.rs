//! Subgroup search by backtracking over a stabilizer chain.
//!
//! The searched set must be a subgroup of the chain's group. Elements are
//! enumerated by their base images; a refiner prunes partial image tuples
//! and decides membership at the leaves. Orbits of the subgroup found so far
//! restrict each level to one image per orbit.

use crate::chain::StabilizerChain;
use crate::group::Group;
use crate::perm::Perm;

pub trait Refiner {
    /// May some element of the target subgroup map `base[l]` to `images[l]` for all `l`?
    /// Returning `true` is always sound.
    fn prefix_ok(&self, _base: &[u32], _images: &[u32]) -> bool {
        true
    }

    fn accepts(&self, g: &Perm) -> bool;
}

/// The subgroup of `⟨chain⟩` of elements accepted by `r`.
pub fn search(chain: &StabilizerChain, r: &dyn Refiner) -> Group {
    let n = chain.degree();
    let base = chain.base();
    let k = base.len();
    let mut found: Vec<Perm> = Vec::new();
    let mut images: Vec<u32> = base.clone();
    for i in (0..k).rev() {
        let lv = &chain.levels()[i];
        let mut orb = OrbitPartition::new(n, &found);
        let mut cands: Vec<u32> = lv.orbit().to_vec();
        cands.sort_unstable();
        for &d in &cands {
            if d == base[i] || orb.find(d) == orb.find(base[i]) || orb.min_of(d) != d {
                continue;
            }
            images.truncate(i);
            images.push(d);
            if !r.prefix_ok(&base[..=i], &images) {
                continue;
            }
            let t = lv.rep(d).unwrap().clone();
            if let Some(g) = descend(chain, r, &base, &mut images, i + 1, t) {
                found.push(g);
                orb = OrbitPartition::new(n, &found);
            }
        }
        images.truncate(i);
        images.push(base[i]);
    }
    let sub = StabilizerChain::new(n, &found);
    Group::from_chain(sub)
}

fn descend(chain: &StabilizerChain, r: &dyn Refiner, base: &[u32], images: &mut Vec<u32>, j: usize, acc: Perm) -> Option<Perm> {
    if j == base.len() {
        return r.accepts(&acc).then_some(acc);
    }
    let lv = &chain.levels()[j];
    for &e in lv.orbit() {
        let img = acc.at(e);
        images.truncate(j);
        images.push(img);
        if !r.prefix_ok(&base[..=j], images) {
            continue;
        }
        let next = lv.rep(e).unwrap().then(&acc);
        if let Some(g) = descend(chain, r, base, images, j + 1, next) {
            return Some(g);
        }
    }
    None
}

/// Union-find over points under a generating set.
struct OrbitPartition {
    parent: Vec<u32>,
    min: Vec<u32>,
}

impl OrbitPartition {
    fn new(n: usize, gens: &[Perm]) -> OrbitPartition {
        let mut op = OrbitPartition { parent: (0..n as u32).collect(), min: (0..n as u32).collect() };
        for g in gens {
            for p in 0..n as u32 {
                op.union(p, g.at(p));
            }
        }
        op
    }

    fn find(&mut self, mut p: u32) -> u32 {
        while self.parent[p as usize] != p {
            let gp = self.parent[self.parent[p as usize] as usize];
            self.parent[p as usize] = gp;
            p = gp;
        }
        p
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let m = self.min[ra as usize].min(self.min[rb as usize]);
            self.parent[rb as usize] = ra;
            self.min[ra as usize] = m;
        }
    }

    fn min_of(&mut self, p: u32) -> u32 {
        let r = self.find(p);
        self.min[r as usize]
    }
}

/// Members of a second subgroup, given its chain built on the same base prefix.
pub struct InGroup<'a> {
    pub other: &'a StabilizerChain,
}

impl Refiner for InGroup<'_> {
    fn prefix_ok(&self, _base: &[u32], images: &[u32]) -> bool {
        let levels = self.other.levels();
        let mut pts: Vec<u32> = images.to_vec();
        for (l, lv) in levels.iter().enumerate().take(images.len()) {
            let p = pts[l];
            let Some(u) = lv.rep_inv(p) else { return false };
            for q in pts.iter_mut().skip(l + 1) {
                *q = u.at(*q);
            }
        }
        true
    }

    fn accepts(&self, g: &Perm) -> bool {
        self.other.contains(g)
    }
}

/// Setwise stabilizer of a point set.
pub struct SetStabilizer {
    pub inside: Vec<bool>,
}

impl Refiner for SetStabilizer {
    fn prefix_ok(&self, base: &[u32], images: &[u32]) -> bool {
        let l = base.len() - 1;
        self.inside[base[l] as usize] == self.inside[images[l] as usize]
    }

    fn accepts(&self, g: &Perm) -> bool {
        self.inside.iter().enumerate().all(|(p, &b)| !b || self.inside[g.at(p as u32) as usize])
    }
}

/// Stabilizer of an unordered partition of the points.
pub struct PartitionStabilizer {
    pub cell: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl PartitionStabilizer {
    pub fn new(n: usize, cells: &[Vec<u32>]) -> PartitionStabilizer {
        let mut cell = vec![usize::MAX; n];
        for (c, pts) in cells.iter().enumerate() {
            for &p in pts {
                cell[p as usize] = c;
            }
        }
        let extra = cells.len();
        for c in cell.iter_mut() {
            if *c == usize::MAX {
                *c = extra;
            }
        }
        let mut sizes = vec![0; extra + 1];
        for &c in &cell {
            sizes[c] += 1;
        }
        PartitionStabilizer { cell, sizes }
    }

    fn consistent(&self, pairs: impl Iterator<Item = (u32, u32)>) -> bool {
        let mut fwd = vec![usize::MAX; self.sizes.len()];
        let mut bwd = vec![usize::MAX; self.sizes.len()];
        for (a, b) in pairs {
            let (ca, cb) = (self.cell[a as usize], self.cell[b as usize]);
            if self.sizes[ca] != self.sizes[cb] {
                return false;
            }
            if fwd[ca] == usize::MAX && bwd[cb] == usize::MAX {
                fwd[ca] = cb;
                bwd[cb] = ca;
            } else if fwd[ca] != cb || bwd[cb] != ca {
                return false;
            }
        }
        true
    }
}

impl Refiner for PartitionStabilizer {
    fn prefix_ok(&self, base: &[u32], images: &[u32]) -> bool {
        self.consistent(base.iter().copied().zip(images.iter().copied()))
    }

    fn accepts(&self, g: &Perm) -> bool {
        self.consistent((0..g.degree() as u32).map(|p| (p, g.at(p))))
    }
}

/// Normalizer of a subgroup.
pub struct Normalizes<'a> {
    pub sub: &'a Group,
    orbit_id: Vec<usize>,
    orbit_len: Vec<usize>,
}

impl<'a> Normalizes<'a> {
    pub fn new(sub: &'a Group) -> Normalizes<'a> {
        let n = sub.degree();
        let mut orbit_id = vec![0; n];
        let mut orbit_len = vec![0; n];
        for (k, o) in sub.orbits0().iter().enumerate() {
            for &p in o {
                orbit_id[p as usize] = k;
                orbit_len[p as usize] = o.len();
            }
        }
        Normalizes { sub, orbit_id, orbit_len }
    }
}

impl Refiner for Normalizes<'_> {
    fn prefix_ok(&self, base: &[u32], images: &[u32]) -> bool {
        let l = base.len() - 1;
        let (b, c) = (base[l] as usize, images[l] as usize);
        if self.orbit_len[b] != self.orbit_len[c] {
            return false;
        }
        (0..l).all(|m| {
            (self.orbit_id[base[m] as usize] == self.orbit_id[b]) == (self.orbit_id[images[m] as usize] == self.orbit_id[c])
        })
    }

    fn accepts(&self, g: &Perm) -> bool {
        let ch = self.sub.chain();
        self.sub.generators().iter().all(|h| ch.contains(&h.conj(g)))
    }
}

/// Centralizer of a single element.
pub struct Centralizes {
    pub t: Perm,
    cycle_len: Vec<usize>,
}

impl Centralizes {
    pub fn new(t: Perm) -> Centralizes {
        let n = t.degree();
        let mut cycle_len = vec![1; n];
        for c in t.cycles() {
            for &p in &c {
                cycle_len[p as usize - 1] = c.len();
            }
        }
        Centralizes { t, cycle_len }
    }
}

impl Refiner for Centralizes {
    fn prefix_ok(&self, base: &[u32], images: &[u32]) -> bool {
        let l = base.len() - 1;
        self.cycle_len[base[l] as usize] == self.cycle_len[images[l] as usize]
    }

    fn accepts(&self, g: &Perm) -> bool {
        self.t.conj(g) == self.t
    }
}
