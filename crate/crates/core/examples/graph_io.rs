use solgroup::io::{colors_to_sidecar, graph_from_json, graph_to_dimacs, graph_to_json, read_graph};
use solgroup::{build_g, LinSystem};

fn main() {
    let g = build_g(&"1 2\n11\n".parse::<LinSystem>().unwrap()).unwrap();
    let json = graph_to_json(&g);
    println!("{json}");
    assert_eq!(graph_from_json(&json).unwrap(), g);

    let dimacs = graph_to_dimacs(&g);
    let side = colors_to_sidecar(&g);
    print!("{dimacs}{side}");
    let back = read_graph(&dimacs, Some(&side)).unwrap();
    println!("dimacs round trip keeps colors: {}", back.colors() == g.colors());
}
