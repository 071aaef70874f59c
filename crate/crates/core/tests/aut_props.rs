mod common;

use common::{arb_graph, complete, cycle, path};
use num_bigint::BigUint;
use proptest::prelude::*;
use solgroup::aut::{certify, graph_hash, group_order, AutOptions};
use solgroup::{
    automorphism_group, automorphism_group_with, brute_automorphisms, disjoint_union, kneser, Perm,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_matches_brute_force(g in arb_graph(9, 3)) {
        let fast = automorphism_group(&g).unwrap();
        prop_assert_eq!(&fast.order, &brute_automorphisms(&g).unwrap().order);
        prop_assert!(certify(&g, &fast));
        prop_assert_eq!(fast.rigid, fast.order == BigUint::from(1u32));
    }

    #[test]
    fn generators_fix_the_graph(g in arb_graph(10, 2)) {
        let h = graph_hash(&g);
        for p in automorphism_group(&g).unwrap().generators {
            prop_assert_eq!(graph_hash(&g.permuted(&p.images())), h.clone());
        }
    }

    #[test]
    fn parallel_mode_is_bit_identical(g in arb_graph(12, 2)) {
        let seq = automorphism_group(&g).unwrap();
        let par = automorphism_group_with(&g, AutOptions { parallel: true, ..AutOptions::default() }).unwrap();
        prop_assert_eq!(seq, par);
    }
}

#[test]
fn petersen_and_kneser_7_2() {
    assert_eq!(automorphism_group(&kneser(5, 2).unwrap()).unwrap().order, BigUint::from(120u32));
    let g = kneser(7, 2).unwrap();
    let report = automorphism_group(&g).unwrap();
    assert_eq!(report.order, BigUint::from(5040u32));
    // every permutation of [7] acts on 2-subsets as an automorphism, and
    // those actions generate a group of the same order
    let subsets: Vec<[usize; 2]> = (0..7).flat_map(|a| (a + 1..7).map(move |b| [a, b])).collect();
    let induced = |sigma: &[usize]| -> Vec<usize> {
        subsets
            .iter()
            .map(|s| {
                let mut t = [sigma[s[0]], sigma[s[1]]];
                t.sort_unstable();
                subsets.iter().position(|x| *x == t).unwrap()
            })
            .collect()
    };
    let swap: Vec<usize> = vec![1, 0, 2, 3, 4, 5, 6];
    let rot: Vec<usize> = vec![1, 2, 3, 4, 5, 6, 0];
    let gens: Vec<Perm> = [swap, rot].iter().map(|s| Perm::from_images(induced(s)).unwrap()).collect();
    for p in &gens {
        assert!(g.is_automorphism(&p.images()));
    }
    assert_eq!(group_order(21, &gens), report.order);
}

#[test]
fn small_families() {
    let order = |g| automorphism_group(&g).unwrap().order;
    assert_eq!(order(cycle(4)), BigUint::from(8u32));
    assert_eq!(order(path(3)), BigUint::from(2u32));
    assert_eq!(order(complete(5)), BigUint::from(120u32));
    assert_eq!(order(cycle(12)), BigUint::from(24u32));
}

#[test]
fn disjoint_union_of_distinct_parts_multiplies() {
    let parts = [kneser(5, 2).unwrap(), cycle(5), path(4), complete(4), cycle(7)];
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let u = disjoint_union(a, b);
            let expect = automorphism_group(a).unwrap().order * automorphism_group(b).unwrap().order;
            assert_eq!(automorphism_group(&u).unwrap().order, expect);
        }
    }
}
