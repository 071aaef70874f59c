//! G(M,b) and its edge-colored sibling for one small system.
use solgroup::{build_g, build_ghat, LinSystem};

fn main() {
    let sys: LinSystem = "1 3\n111\n".parse().unwrap();
    let g = build_g(&sys).unwrap();
    println!("G: n={} m={} colors={}", g.vertex_count(), g.edge_count(), g.color_classes().len());
    for (c, class) in g.color_classes() {
        println!("  {c:?} -> {class:?}");
    }
    let gh = build_ghat(&sys).unwrap();
    println!("Ghat: n={} m={}", gh.vertex_count(), gh.edge_count());
    for ((u, v), a) in gh.edge_colors().unwrap() {
        println!("  {u}-{v}: support {:?} signs {:?}", a.support(), a.signs());
    }
}
