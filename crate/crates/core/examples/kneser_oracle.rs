//! Parity propagation on the edges of K(7,2): every red seed edge forces a
//! contradiction, matching the full rank of the A7 system.
use solgroup::kneser_oracle::{all_seeds, certify_an};
use solgroup::{build_constraints, propagate_red_edge};

fn main() {
    let sys = build_constraints();
    println!("edges={} constraints={}", sys.edges.len(), sys.constraint_count());
    println!("seed 0: {:?}", propagate_red_edge(&sys, 0).unwrap());
    let contradictions = all_seeds(&sys).iter().filter(|p| p.is_contradiction()).count();
    println!("contradictions {contradictions}/{}", sys.edges.len());
    for n in 5..=7 {
        let c = certify_an(n).unwrap();
        println!("A{n}: rank={} nullity={} agree={}", c.rank, c.nullity, c.agree());
    }
}
