//! Brute-force oracles and instance generators shared by the integration tests.
//! Nothing here goes through stabilizer chains.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::{Path, PathBuf};

use bst_core::formats::{load_class_data_dir, read_group_file};
use bst_core::classes::data::DataSet;
use bst_core::{Group, Int, Perm};
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(rel: &str) -> Group {
    read_group_file(&fixtures().join(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn class_data() -> DataSet<Int> {
    load_class_data_dir(&fixtures().join("classdata")).unwrap()
}

pub type Elt = Vec<u32>;

fn mul(a: &[u32], b: &[u32]) -> Elt {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn inv(a: &[u32]) -> Elt {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x as usize] = i as u32;
    }
    r
}

/// All elements of the group generated by `gens`, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Elt> {
    let id: Elt = (0..degree as u32).collect();
    let gens: Vec<Elt> = gens.iter().map(|p| p.raw().to_vec()).collect();
    let mut seen: HashSet<Elt> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut q = VecDeque::from([id]);
    while let Some(x) = q.pop_front() {
        for s in &gens {
            let y = mul(&x, s);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                q.push_back(y);
            }
        }
    }
    out
}

pub fn elements(g: &Group) -> Vec<Elt> {
    closure(g.degree(), g.generators())
}

pub fn to_perm(e: &[u32]) -> Perm {
    Perm::from_images(&e.iter().map(|x| x + 1).collect::<Vec<_>>()).unwrap()
}

pub fn elt_order(e: &[u32]) -> u64 {
    let id: Elt = (0..e.len() as u32).collect();
    let mut x = e.to_vec();
    let mut k = 1;
    while x != id {
        x = mul(&x, e);
        k += 1;
    }
    k
}

/// The coset action of `G` on right cosets of `H`, computed from element lists: for every
/// element of `G` (in the order of `gs`), the permutation it induces on the cosets.
pub struct CosetOracle {
    pub gs: Vec<Elt>,
    pub n: usize,
    pub action: Vec<Vec<usize>>,
}

impl CosetOracle {
    pub fn new(g: &Group, h: &Group) -> CosetOracle {
        let gs = elements(g);
        let hs = elements(h);
        let mut coset_of: HashMap<Elt, usize> = HashMap::new();
        let mut reps: Vec<Elt> = Vec::new();
        for x in &gs {
            if coset_of.contains_key(x) {
                continue;
            }
            let id = reps.len();
            for y in &hs {
                coset_of.insert(mul(y, x), id);
            }
            reps.push(x.clone());
        }
        let action = gs.iter().map(|x| reps.iter().map(|r| coset_of[&mul(r, x)]).collect()).collect();
        CosetOracle { n: reps.len(), gs, action }
    }

    /// Bitsets over elements of `G`: bit `i` of set `w` says element `i` fixes coset `w`.
    fn fixers(&self) -> Vec<Vec<u64>> {
        let words = self.gs.len().div_ceil(64);
        let mut f = vec![vec![0u64; words]; self.n];
        for (i, act) in self.action.iter().enumerate() {
            for (w, &img) in act.iter().enumerate() {
                if img == w {
                    f[w][i / 64] |= 1 << (i % 64);
                }
            }
        }
        f
    }

    /// Smallest number of cosets whose pointwise stabilizer is trivial, by brute force.
    pub fn base_size(&self) -> u32 {
        let f = self.fixers();
        let one = |s: &[u64]| s.iter().map(|w| w.count_ones()).sum::<u32>() == 1;
        let mut level: Vec<Vec<u64>> = vec![f[0].iter().map(|_| u64::MAX).collect()];
        let mut k = 0;
        loop {
            if level.iter().any(|s| one(s)) {
                return k;
            }
            let mut next: HashSet<Vec<u64>> = HashSet::new();
            for s in &level {
                for fw in &f {
                    next.insert(s.iter().zip(fw).map(|(a, b)| a & b).collect());
                }
            }
            level = next.into_iter().collect();
            k += 1;
        }
    }

    /// Probability that a uniformly random `c`-tuple of cosets is not a base.
    pub fn q(&self, c: u32) -> BigRational {
        let f = self.fixers();
        let words = f[0].len();
        let mut bad: u64 = 0;
        let mut idx = vec![0usize; c as usize];
        loop {
            let mut s = vec![u64::MAX; words];
            for &w in &idx {
                for (a, b) in s.iter_mut().zip(&f[w]) {
                    *a &= b;
                }
            }
            if s.iter().map(|w| w.count_ones()).sum::<u32>() > 1 {
                bad += 1;
            }
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < self.n {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
        BigRational::new(bad.into(), (self.n as u64).pow(c).into())
    }

    /// Number of distinct `(H,H)` double cosets and their sizes, from `H`-orbits on cosets.
    pub fn double_coset_sizes(&self, h_order: usize, h_idx: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut q = 0;
            while q < orbit.len() {
                let w = orbit[q];
                for &i in h_idx {
                    let v = self.action[i][w];
                    if !seen[v] {
                        seen[v] = true;
                        orbit.push(v);
                    }
                }
                q += 1;
            }
            sizes.push(orbit.len() * h_order);
        }
        sizes
    }
}

/// Conjugacy classes of prime-order elements of `G` with their sizes and their intersections with `H`.
pub fn prime_classes(g: &Group, h: &Group) -> Vec<(u64, usize, usize)> {
    let gs = elements(g);
    let hs: HashSet<Elt> = elements(h).into_iter().collect();
    let mut done: HashSet<Elt> = HashSet::new();
    let mut out = Vec::new();
    for x in &gs {
        if done.contains(x) {
            continue;
        }
        let mut class: HashSet<Elt> = HashSet::new();
        for y in &gs {
            class.insert(mul(&mul(&inv(y), x), y));
        }
        let r = elt_order(x);
        if bst_core::classes::is_prime(r) {
            out.push((r, class.len(), class.iter().filter(|c| hs.contains(*c)).count()));
        }
        done.extend(class);
    }
    out
}

pub fn is_core_free(gs: &[Elt], hs: &[Elt]) -> bool {
    let hset: HashSet<&Elt> = hs.iter().collect();
    hs.iter().filter(|x| gs.iter().all(|y| hset.contains(&mul(&mul(&inv(y), x), y)))).count() == 1
}

/// Random `(G,H)` with `|G| <= max_order`, `H` a proper nontrivial core-free subgroup.
pub fn random_instances(seed: u64, count: usize, max_order: usize) -> Vec<(Group, Group)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(4..=7);
        let rand_perm = |rng: &mut ChaCha8Rng| {
            let mut v: Vec<u32> = (1..=n as u32).collect();
            for i in (1..n).rev() {
                v.swap(i, rng.gen_range(0..=i));
            }
            Perm::from_images(&v).unwrap()
        };
        let gens = vec![rand_perm(&mut rng), rand_perm(&mut rng)];
        let gs = closure(n, &gens);
        if gs.len() > max_order || gs.len() < 4 {
            continue;
        }
        let k = rng.gen_range(1..=2);
        let hgens: Vec<Perm> = (0..k).map(|_| to_perm(&gs[rng.gen_range(0..gs.len())])).collect();
        let hs = closure(n, &hgens);
        if hs.len() == 1 || hs.len() == gs.len() || !is_core_free(&gs, &hs) {
            continue;
        }
        out.push((Group::new(n, gens).unwrap(), Group::new(n, hgens).unwrap()));
    }
    out
}

pub fn big(n: usize) -> BigUint {
    BigUint::from(n)
}
