//! Reproducible pseudo-random group elements by product replacement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Perm;

const SLOTS: usize = 10;
const MIX_STEPS: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RandomSource {
    pub seed: u64,
    pub stream: u64,
}

impl RandomSource {
    pub fn new(seed: u64, stream: u64) -> RandomSource {
        RandomSource { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(self.stream);
        r
    }

    /// Source for worker `k`, on a stream disjoint from the others.
    pub fn worker(&self, k: u64) -> RandomSource {
        RandomSource { seed: self.seed, stream: self.stream.wrapping_mul(1 << 20).wrapping_add(k) }
    }
}

/// Product replacement state with an accumulator ("rattle" variant).
pub struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub fn new(degree: usize, gens: &[Perm], src: RandomSource) -> ProductReplacement {
        let mut slots: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if slots.is_empty() {
            slots.push(Perm::identity(degree));
        }
        let base = slots.len();
        let mut k = 0;
        while slots.len() < SLOTS {
            slots.push(slots[k % base].clone());
            k += 1;
        }
        let mut pr = ProductReplacement { slots, acc: Perm::identity(degree), rng: src.rng() };
        for _ in 0..MIX_STEPS {
            pr.step();
        }
        pr
    }

    fn step(&mut self) {
        let n = self.slots.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let inv = self.rng.gen_bool(0.5);
        let left = self.rng.gen_bool(0.5);
        let other = if inv { self.slots[j].inverse() } else { self.slots[j].clone() };
        self.slots[i] = if left { other.then(&self.slots[i]) } else { self.slots[i].then(&other) };
        self.acc = self.acc.then(&self.slots[i]);
    }

    pub fn next_element(&mut self) -> Perm {
        self.step();
        self.acc.clone()
    }
}
