use solgroup::aut::{certificate, certify};
use solgroup::{automorphism_group, automorphism_group_with, brute_automorphisms, kneser, AutOptions};

fn main() {
    let g = kneser(5, 2).unwrap();
    let r = automorphism_group(&g).unwrap();
    println!("order={} nodes={} base={:?} orbits={:?}", r.order, r.node_count, r.base, r.orbit_sizes);
    println!("certified={}", certify(&g, &r));
    println!("brute force agrees: {}", brute_automorphisms(&g).unwrap().order == r.order);

    let par = automorphism_group_with(&g, AutOptions { parallel: true, ..AutOptions::default() }).unwrap();
    println!("parallel identical: {}", par == r);
    print!("{}", certificate(&g, &r));

    let tiny = AutOptions { node_budget: 2, parallel: false };
    println!("with budget 2: {}", automorphism_group_with(&g, tiny).unwrap_err());
}
