//! Graph serialization: JSON, and DIMACS with a color sidecar.
//!
//! JSON layout:
//! `{"vertices":[{"id":0,"color":[1,0],"label":"x1+"}],"edges":[[0,1]],"edge_colors":[…]}`
//! where `edge_colors` is optional and lists
//! `{"edge":[u,v],"support":[…],"signs":[…]}` with 0-based variables.
//!
//! DIMACS uses 1-based ids: `p edge n m`, then `e u v`; the sidecar has
//! one `v <id> <c1> <c2>` per vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::decolor::DecolorTrace;
use crate::error::{Error, Result};
use crate::graph::{Assignment, Color, ColoredGraph, VertexLabel};

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: usize,
    color: [i64; 2],
    #[serde(default)]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdgeColor {
    edge: [usize; 2],
    support: Vec<usize>,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edge_colors: Option<Vec<JsonEdgeColor>>,
}

pub fn graph_to_json(g: &ColoredGraph) -> String {
    let doc = JsonGraph {
        vertices: (0..g.vertex_count())
            .map(|v| JsonVertex {
                id: v,
                color: [g.color(v).0, g.color(v).1],
                label: Some(g.label(v).to_string()),
            })
            .collect(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        edge_colors: g.edge_colors().map(|m| {
            m.iter()
                .map(|(&(u, v), a)| JsonEdgeColor {
                    edge: [u, v],
                    support: a.support().to_vec(),
                    signs: a.signs().to_vec(),
                })
                .collect()
        }),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

/// Reads the JSON layout. Ids must be exactly `0..n` in some order; labels
/// come back as text.
pub fn graph_from_json(text: &str) -> Result<ColoredGraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let n = doc.vertices.len();
    let mut slots: Vec<Option<JsonVertex>> = (0..n).map(|_| None).collect();
    for v in doc.vertices {
        if v.id >= n || slots[v.id].is_some() {
            return Err(Error::input(format!("vertex ids must be 0..{n} without repeats, saw {}", v.id)));
        }
        let id = v.id;
        slots[id] = Some(v);
    }
    let mut g = ColoredGraph::new();
    for (id, v) in slots.into_iter().enumerate() {
        let v = v.expect("every slot filled");
        let label = v.label.map_or(VertexLabel::Plain(id), VertexLabel::Text);
        g.add_vertex(Color(v.color[0], v.color[1]), label);
    }
    for [u, v] in doc.edges {
        g.add_edge(u, v)?;
    }
    if let Some(list) = doc.edge_colors {
        let mut map = BTreeMap::new();
        for ec in list {
            let [u, v] = ec.edge;
            map.insert((u.min(v), u.max(v)), Assignment::new(ec.support, ec.signs)?);
        }
        g.set_edge_colors(Some(map))?;
    }
    Ok(g)
}

pub fn graph_to_dimacs(g: &ColoredGraph) -> String {
    let mut s = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        s += &format!("e {} {}\n", u + 1, v + 1);
    }
    s
}

pub fn colors_to_sidecar(g: &ColoredGraph) -> String {
    (0..g.vertex_count())
        .map(|v| format!("v {} {} {}\n", v + 1, g.color(v).0, g.color(v).1))
        .collect()
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected {what}")))
}

/// Reads DIMACS, with an optional color sidecar. Lines starting with `c`
/// are comments.
pub fn graph_from_dimacs(text: &str, sidecar: Option<&str>) -> Result<ColoredGraph> {
    let mut g: Option<ColoredGraph> = None;
    let mut declared_edges = 0usize;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(Error::parse(ln, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(Error::parse(ln, "expected `p edge n m`"));
                }
                let n: usize = parse_num(toks.next(), ln, "vertex count")?;
                declared_edges = parse_num(toks.next(), ln, "edge count")?;
                g = Some(ColoredGraph::from_edges(n, &[])?);
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| Error::parse(ln, "edge before problem line"))?;
                let u: usize = parse_num(toks.next(), ln, "endpoint")?;
                let v: usize = parse_num(toks.next(), ln, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(ln, "DIMACS ids start at 1"));
                }
                graph.add_edge(u - 1, v - 1).map_err(|e| Error::parse(ln, e.to_string()))?;
            }
            Some(t) => return Err(Error::parse(ln, format!("unknown line type {t:?}"))),
        }
    }
    let mut g = g.ok_or_else(|| Error::parse(1, "missing problem line"))?;
    if g.edge_count() != declared_edges {
        return Err(Error::input(format!(
            "header declares {declared_edges} edges, found {}",
            g.edge_count()
        )));
    }
    if let Some(side) = sidecar {
        for (i, line) in side.lines().enumerate() {
            let ln = i + 1;
            let mut toks = line.split_whitespace();
            match toks.next() {
                None | Some("c") => {}
                Some("v") => {
                    let id: usize = parse_num(toks.next(), ln, "vertex id")?;
                    if id == 0 || id > g.vertex_count() {
                        return Err(Error::parse(ln, format!("vertex {id} out of range")));
                    }
                    let c1 = parse_num(toks.next(), ln, "color")?;
                    let c2 = parse_num(toks.next(), ln, "color")?;
                    g.set_color(id - 1, Color(c1, c2));
                }
                Some(t) => return Err(Error::parse(ln, format!("unknown sidecar line {t:?}"))),
            }
        }
    }
    Ok(g)
}

/// Picks the reader by content: JSON if it starts with `{`, DIMACS otherwise.
pub fn read_graph(text: &str, sidecar: Option<&str>) -> Result<ColoredGraph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_dimacs(text, sidecar)
    }
}

/// The decoloring trace as JSON, with vertex labels of the input graph so
/// output vertices can be traced back.
pub fn trace_to_json(trace: &DecolorTrace, input: &ColoredGraph) -> String {
    let normalization: Vec<_> = trace
        .color_normalization
        .iter()
        .map(|(c, k)| json!({"color": [c.0, c.1], "index": k}))
        .collect();
    let embedding: Vec<_> = trace
        .embedding
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.map(|w| json!({"input": v, "label": input.label(v).to_string(), "output": w})))
        .collect();
    let gadgets: Vec<_> = trace
        .gadget_paths
        .iter()
        .map(|(c, p)| json!({"color": c, "path": p}))
        .collect();
    let doc = json!({
        "color_normalization": normalization,
        "removed_vertices": trace.removed_vertices,
        "added_leaves": trace.added_leaves,
        "gadget_paths": gadgets,
        "embedding": embedding,
    });
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::{F2Matrix, LinSystem};
    use crate::graph::{build_ghat, kneser};

    #[test]
    fn json_round_trip() {
        let g = kneser(5, 2).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.colors(), g.colors());
        assert_eq!(back.label(0).to_string(), "{1,2}");
    }

    #[test]
    fn json_keeps_edge_colors() {
        let sys = LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 1, 0], [0, 1, 1]]).unwrap());
        let g = build_ghat(&sys).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back.edge_colors(), g.edge_colors());
    }

    #[test]
    fn json_rejects_bad_ids() {
        let text = r#"{"vertices":[{"id":1,"color":[0,0]}],"edges":[]}"#;
        assert!(graph_from_json(text).is_err());
        assert!(matches!(graph_from_json("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dimacs_round_trip() {
        let mut g = kneser(5, 2).unwrap();
        g.set_color(3, Color(2, 1));
        let text = graph_to_dimacs(&g);
        assert!(text.starts_with("p edge 10 15\n"));
        let back = graph_from_dimacs(&text, Some(&colors_to_sidecar(&g))).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.colors(), g.colors());
    }

    #[test]
    fn dimacs_errors() {
        assert!(graph_from_dimacs("e 1 2\n", None).is_err());
        assert!(graph_from_dimacs("p edge 2 2\ne 1 2\n", None).is_err());
        assert!(graph_from_dimacs("p edge 2 1\ne 0 1\n", None).is_err());
        assert!(graph_from_dimacs("p edge 2 1\ne 1 2\n", Some("v 3 0 0\n")).is_err());
        let g = read_graph("c hi\np edge 3 2\ne 1 2\ne 2 3\n", None).unwrap();
        assert_eq!(g.edge_count(), 2);
    }
}
