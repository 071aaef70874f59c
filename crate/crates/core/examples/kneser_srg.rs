use solgroup::graph::srg_parameters;
use solgroup::{automorphism_group, kneser};

fn main() {
    for (n, l) in [(5, 2), (7, 2), (7, 3)] {
        let g = kneser(n, l).unwrap();
        let aut = automorphism_group(&g).unwrap();
        println!("K({n},{l}): srg={:?} |Aut|={}", srg_parameters(&g), aut.order);
    }
}
