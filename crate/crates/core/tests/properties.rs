mod common;

use std::collections::HashSet;

use bst_core::subgroups::{centralizer_of, intersect, is_core_free, normalizer, set_stabilizer};
use bst_core::{Group, Perm};
use common::*;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
}

fn perms(n: usize, k: usize) -> impl Strategy<Value = Vec<Perm>> {
    proptest::collection::vec(perm(n), k)
}

/// A small group on 4..=7 points with up to three generators.
fn group() -> impl Strategy<Value = Group> {
    (4usize..=7).prop_flat_map(|n| proptest::collection::vec(perm(n), 1..=3).prop_map(move |g| Group::new(n, g).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn perm_axioms(p in perms(9, 3)) {
        let (a, b, c) = (&p[0], &p[1], &p[2]);
        let id = Perm::identity(9);
        prop_assert_eq!(a.then(b).then(c), a.then(&b.then(c)));
        prop_assert_eq!(a.then(&a.inverse()), id.clone());
        prop_assert_eq!(a.inverse().then(a), id.clone());
        prop_assert_eq!(a.then(&id), a.clone());
        prop_assert!(a.pow(u64::try_from(a.order()).unwrap()).is_identity());
        prop_assert_eq!(a.cycle_type().iter().sum::<usize>(), 9);
        prop_assert_eq!(a.then(b).is_even(), a.is_even() == b.is_even());
        for x in 0..9 {
            prop_assert_eq!(a.then(b).raw()[x], b.raw()[a.raw()[x] as usize]);
        }
    }

    #[test]
    fn order_matches_element_closure(g in group()) {
        let els = elements(&g);
        prop_assert_eq!(big(els.len()), g.order());
        for e in els.iter().take(20) {
            prop_assert!(g.contains(&to_perm(e)).unwrap());
        }
        let mine: HashSet<Vec<u32>> = g.elements().iter().map(|p| p.raw().to_vec()).collect();
        prop_assert_eq!(mine, els.into_iter().collect::<HashSet<_>>());
    }

    #[test]
    fn orbit_stabilizer(g in group()) {
        let n = g.degree() as u32;
        for p in 0..n {
            let orbit = g.orbit(p + 1).unwrap();
            let stab = g.stabilizer0(&[p]);
            prop_assert_eq!(big(orbit.len()) * stab.order(), g.order());
            prop_assert!(stab.generators().iter().all(|s| s.raw()[p as usize] == p));
        }
    }

    #[test]
    fn subgroup_constructions_agree_with_brute_force(g in group(), x in 0usize..1000) {
        let els = elements(&g);
        let t = to_perm(&els[x % els.len()]);
        let c = centralizer_of(&g, &t);
        let brute = els.iter().filter(|e| { let e = to_perm(e); e.then(&t) == t.then(&e) }).count();
        prop_assert_eq!(big(brute), c.order());
        let s = set_stabilizer(&g, &[1, 2]);
        let brute = els.iter().filter(|e| { let mut im = vec![e[0], e[1]]; im.sort(); im == [0, 1] }).count();
        prop_assert_eq!(big(brute), s.order());
        let i = intersect(&s, &c).unwrap();
        prop_assert!(s.contains_group(&i).unwrap() && c.contains_group(&i).unwrap());
        let brute = els.iter().filter(|e| s.contains(&to_perm(e)).unwrap() && c.contains(&to_perm(e)).unwrap()).count();
        prop_assert_eq!(big(brute), i.order());
        let nrm = normalizer(&g, &c).unwrap();
        prop_assert!(nrm.contains_group(&c).unwrap() && g.contains_group(&nrm).unwrap());
    }
}

#[test]
fn core_freeness_agrees_with_brute_force() {
    for (g, h) in random_instances(3, 40, 2000) {
        let (gs, hs) = (elements(&g), elements(&h));
        assert_eq!(is_core_free(&g, &h).unwrap(), common::is_core_free(&gs, &hs));
    }
}
