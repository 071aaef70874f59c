//! Strip colors from a graph while keeping its automorphism group.
use solgroup::{automorphism_group, build_g, decolor, LinSystem};

fn main() {
    let sys: LinSystem = "2 3\n110\n011\n".parse().unwrap();
    let g = build_g(&sys).unwrap();
    let (d, trace) = decolor(&g);
    println!("colored n={} -> uncolored n={}", g.vertex_count(), d.vertex_count());
    println!("color map {:?}", trace.color_normalization);
    println!("removed {:?} leaves {:?}", trace.removed_vertices, trace.added_leaves);
    for (c, path) in &trace.gadget_paths {
        println!("gadget {c}: {} vertices", path.len());
    }
    let before = automorphism_group(&g).unwrap().order;
    let after = automorphism_group(&d).unwrap().order;
    println!("|Aut| {before} -> {after}");
}
