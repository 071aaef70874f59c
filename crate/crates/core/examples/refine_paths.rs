//! Color refinement on a small tree, and its topological paths.
use solgroup::{distinguished, stable_refinement, topological_paths, ColoredGraph};

fn main() {
    // a spider: legs of length 1, 2 and 3 from vertex 0
    let g = ColoredGraph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    let p = stable_refinement(&g);
    print!("{}", p.dump());
    println!("equitable={} discrete={}", p.is_equitable(&g), p.is_discrete());
    println!("1 vs 3 distinguished: {}", distinguished(&g, 1, 3));
    for t in topological_paths(&g) {
        println!("path {} .. {} via {:?}", t.endpoint_a, t.endpoint_b, t.interior);
    }
}
