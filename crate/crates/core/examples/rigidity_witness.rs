//! The 31395-vertex uncolored graph from A7 and its trivial automorphism
//! group. Takes a few seconds in release mode.
use std::time::Instant;

use solgroup::{automorphism_group, build_mh, named_group, pipeline_uncolored};

fn main() {
    let sys = build_mh(&named_group("A7").unwrap());
    let g = pipeline_uncolored(&sys).unwrap();
    let start = Instant::now();
    let r = automorphism_group(&g).unwrap();
    println!(
        "n={} m={} order={} rigid={} nodes={} in {:.1}s",
        g.vertex_count(),
        g.edge_count(),
        r.order,
        r.rigid,
        r.node_count,
        start.elapsed().as_secs_f64()
    );
}
