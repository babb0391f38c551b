//! Conjugates, intersections, cores, derived series, Sylow subgroups and normalizers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backtrack::{self, Centralizes, InGroup, Normalizes, PartitionStabilizer, SetStabilizer};
use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

fn same_degree(a: &Group, b: &Group) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(())
}

fn require_subgroup(g: &Group, h: &Group) -> Result<()> {
    same_degree(g, h)?;
    if !g.contains_group(h)? {
        return Err(Error::NotSubgroup(h.name().into(), g.name().into()));
    }
    Ok(())
}

/// `h^x`, generated by `x⁻¹ g x` for the generators `g` of `h`.
pub fn conjugate_subgroup(h: &Group, x: &Perm) -> Result<Group> {
    if x.degree() != h.degree() {
        return Err(Error::DegreeMismatch(h.degree(), x.degree()));
    }
    Ok(Group::from_chain(h.chain().conjugate(x)))
}

pub fn intersect(h: &Group, k: &Group) -> Result<Group> {
    same_degree(h, k)?;
    if h.is_trivial() || k.is_trivial() {
        return Ok(Group::trivial(h.degree()));
    }
    let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
    Ok(intersect_chains(small.chain(), large))
}

/// Intersection of `⟨chain⟩` with `k`, searching over the chain.
pub fn intersect_chains(chain: &StabilizerChain, k: &Group) -> Group {
    let other = k.chain_with_base(&chain.base());
    backtrack::search(chain, &InGroup { other: &other })
}

/// Intersection with a conjugate, `h ∩ h^x`.
pub fn intersect_conjugate(h: &Group, x: &Perm) -> Group {
    let hx = Group::from_chain(h.chain().conjugate(x));
    intersect_chains(h.chain(), &hx)
}

pub fn is_normal(g: &Group, h: &Group) -> Result<bool> {
    same_degree(g, h)?;
    let ch = h.chain();
    Ok(h.generators().iter().all(|a| g.generators().iter().all(|s| ch.contains(&a.conj(s)))))
}

/// Largest normal subgroup of `g` contained in `h`.
pub fn core_in(g: &Group, h: &Group) -> Result<Group> {
    require_subgroup(g, h)?;
    let mut c = h.clone();
    loop {
        if c.is_trivial() {
            return Ok(c);
        }
        let before = c.order();
        for s in g.generators() {
            c = intersect(&c, &conjugate_subgroup(&c, s)?)?;
        }
        if c.order() == before {
            return Ok(c);
        }
    }
}

pub fn is_core_free(g: &Group, h: &Group) -> Result<bool> {
    Ok(core_in(g, h)?.order().is_one())
}

/// Normal closure of `gens` in `g`.
pub fn normal_closure(g: &Group, gens: &[Perm]) -> Group {
    let n = g.degree();
    let mut cur: Vec<Perm> = gens.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut chain = StabilizerChain::new(n, &cur);
    let mut k = 0;
    while k < cur.len() {
        let a = cur[k].clone();
        for s in g.generators() {
            let b = a.conj(s);
            if !chain.contains(&b) {
                cur.push(b);
                chain = StabilizerChain::new(n, &cur);
            }
        }
        k += 1;
    }
    Group::from_chain(chain)
}

pub fn derived_subgroup(g: &Group) -> Group {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().then(&b.inverse()).then(a).then(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn is_soluble(g: &Group) -> bool {
    let mut cur = g.clone();
    loop {
        if cur.order().is_one() {
            return true;
        }
        let d = derived_subgroup(&cur);
        if d.order() == cur.order() {
            return false;
        }
        cur = d;
    }
}

pub fn normalizer(g: &Group, h: &Group) -> Result<Group> {
    require_subgroup(g, h)?;
    Ok(backtrack::search(g.chain(), &Normalizes::new(h)))
}

pub fn centralizer_of(g: &Group, t: &Perm) -> Group {
    backtrack::search(g.chain(), &Centralizes::new(t.clone()))
}

/// Setwise stabilizer of 1-based points.
pub fn set_stabilizer(g: &Group, set: &[u32]) -> Group {
    let mut inside = vec![false; g.degree()];
    for &p in set {
        inside[p as usize - 1] = true;
    }
    let prefix: Vec<u32> = set.iter().map(|p| p - 1).collect();
    let chain = g.chain_with_base(&prefix);
    backtrack::search(&chain, &SetStabilizer { inside })
}

/// Stabilizer of an unordered partition into cells of 1-based points.
pub fn partition_stabilizer(g: &Group, cells: &[Vec<u32>]) -> Group {
    let cells0: Vec<Vec<u32>> = cells.iter().map(|c| c.iter().map(|p| p - 1).collect()).collect();
    let prefix: Vec<u32> = cells0.iter().flat_map(|c| c.iter().take(2).copied()).collect();
    let chain = g.chain_with_base(&prefix);
    backtrack::search(&chain, &PartitionStabilizer::new(g.degree(), &cells0))
}

fn p_part(order: &BigUint, p: u64) -> BigUint {
    let pb = BigUint::from(p);
    let mut m = order.clone();
    let mut out = BigUint::one();
    while (&m % &pb).is_zero() {
        m /= &pb;
        out *= &pb;
    }
    out
}

/// A Sylow `p`-subgroup, grown inside successive normalizers.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Group> {
    let order = g.order();
    if p < 2 || !(&order % p).is_zero() {
        return Err(Error::BadPrime(p));
    }
    let target = p_part(&order, p);
    let n = g.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut gens: Vec<Perm> = Vec::new();
    let mut cur = Group::trivial(n);
    while cur.order() < target {
        let norm = if gens.is_empty() { g.clone() } else { normalizer(g, &cur)? };
        loop {
            let x = norm.chain().random_uniform(&mut rng);
            let o = x.order();
            let q = p_part(&o, p);
            if q.is_one() {
                continue;
            }
            let y = x.pow((o / &q).to_u64().unwrap());
            if cur.chain().contains(&y) {
                continue;
            }
            gens.push(y);
            cur = Group::new(n, gens.clone())?;
            break;
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> Group {
        Group::symmetric(4)
    }

    fn gp(n: usize, cycles: &[&[&[u32]]]) -> Group {
        Group::new(n, cycles.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn s4_examples() {
        let d8 = gp(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]);
        let s3 = gp(4, &[&[&[1, 2, 3]], &[&[1, 2]]]);
        let i = intersect(&d8, &s3).unwrap();
        assert_eq!(i.order(), BigUint::from(2u32));
        assert!(i.contains(&Perm::from_cycles(4, &[&[1, 3]]).unwrap()).unwrap());
        assert_eq!(core_in(&s4(), &d8).unwrap().order(), BigUint::from(4u32));
        assert!(core_in(&s4(), &s3).unwrap().order().is_one());
        let c4 = gp(4, &[&[&[1, 2, 3, 4]]]);
        assert_eq!(normalizer(&s4(), &c4).unwrap().order(), BigUint::from(8u32));
        assert_eq!(sylow_subgroup(&s4(), 2).unwrap().order(), BigUint::from(8u32));
        assert!(sylow_subgroup(&s4(), 5).is_err());
    }

    #[test]
    fn solubility() {
        assert!(is_soluble(&s4()));
        let a5 = gp(5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2, 3]]]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(!is_soluble(&a5));
        assert!(is_soluble(&Group::trivial(3)));
    }

    #[test]
    fn stabilizers() {
        let s6 = Group::symmetric(6);
        assert_eq!(set_stabilizer(&s6, &[1, 2]).order(), BigUint::from(48u32));
        let p = partition_stabilizer(&s6, &[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(p.order(), BigUint::from(72u32));
        let t = Perm::from_cycles(6, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(centralizer_of(&s6, &t).order(), BigUint::from(16u32));
    }
}
