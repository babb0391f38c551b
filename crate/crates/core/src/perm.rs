//! Permutations of `{1..n}` stored as dense image arrays.
//!
//! Points are 1-based at the API surface. Internally the image array is
//! 0-based, so `raw()[i]` is the image of point `i + 1` minus one.
//! Products act on the right: `a.then(&b)` maps `i` to `b(a(i))`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Box<[u32]>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u32).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[u32]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x as usize > n {
                return Err(Error::NotBijection(format!("image {x} outside 1..={n}")));
            }
            let x0 = x as usize - 1;
            if seen[x0] {
                return Err(Error::NotBijection(format!("image {x} repeated")));
            }
            seen[x0] = true;
            img.push(x0 as u32);
        }
        Ok(Perm { img: img.into() })
    }

    /// Builds a permutation of degree `n` from disjoint cycles in 1-based points.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Perm> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p as usize > n {
                    return Err(Error::PointOutOfRange(p as usize, n));
                }
                let p0 = p as usize - 1;
                if touched[p0] {
                    return Err(Error::NotBijection(format!("point {p} in two cycles")));
                }
                touched[p0] = true;
                img[p0] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Ok(Perm { img: img.into() })
    }

    pub fn from_raw(img: Vec<u32>) -> Perm {
        debug_assert!(is_bijection(&img));
        Perm { img: img.into() }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 0-based image array.
    #[inline]
    pub fn raw(&self) -> &[u32] {
        &self.img
    }

    /// Image of the 1-based point `p`.
    pub fn image(&self, p: u32) -> u32 {
        self.img[p as usize - 1] + 1
    }

    /// 0-based image.
    #[inline]
    pub fn at(&self, p: u32) -> u32 {
        self.img[p as usize]
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<u32> {
        self.img.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { img: self.img.iter().map(|&x| other.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { img: inv.into() }
    }

    /// `x⁻¹ · self · x`, the conjugate `self^x`.
    pub fn conj(&self, x: &Perm) -> Perm {
        let mut out = vec![0u32; self.img.len()];
        for (i, &y) in self.img.iter().enumerate() {
            out[x.img[i] as usize] = x.img[y as usize];
        }
        Perm { img: out.into() }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycles of length at least two, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.img[s] as usize == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p as u32 + 1);
                p = self.img[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.img[p] as usize;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    /// Least `m ≥ 1` with `self^m = 1`.
    pub fn order(&self) -> BigUint {
        let mut lens = self.cycle_type();
        lens.dedup();
        lens.into_iter().fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    /// Smallest moved 0-based point.
    pub fn first_moved(&self) -> Option<u32> {
        self.img.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }
}

/// Composition as a free function: the result maps `i` to `b(a(i))`.
pub fn compose(a: &Perm, b: &Perm) -> Result<Perm> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(a.then(b))
}

pub fn invert(a: &Perm) -> Perm {
    a.inverse()
}

pub fn element_order(a: &Perm) -> BigUint {
    a.order()
}

fn is_bijection(img: &[u32]) -> bool {
    let mut seen = vec![false; img.len()];
    img.iter().all(|&x| (x as usize) < img.len() && !std::mem::replace(&mut seen[x as usize], true))
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
