//! Frucht graphs: a graph whose automorphism group is the given group.
use solgroup::{frucht_graph, named_group, verify_frucht};

fn main() {
    for name in ["Z3", "Z2xZ2", "S3", "Z5", "D4"] {
        let g = named_group(name).unwrap();
        let fg = frucht_graph(&g);
        let check = verify_frucht(&g).unwrap();
        println!(
            "{name}: n={} m={} |G|={} |Aut|={} ok={}",
            fg.vertex_count(),
            fg.edge_count(),
            check.group_order,
            check.search_order,
            check.ok()
        );
    }
}
