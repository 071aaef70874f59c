//! Solution groups of binary linear systems and the graphs built from them.
//!
//! The pieces, roughly in pipeline order:
//!
//! - [`f2`]: packed F₂ matrices, rank and nullspace, linear systems and
//!   homogenization.
//! - [`group`]: small permutation groups, their involutions and commuting
//!   triples, the system `M_H`, and solution-group presentations.
//! - [`graph`]: colored graphs, the system graphs `G(M,b)` and `Ĝ`, Kneser
//!   and Frucht graphs, and symmetry-preserving transforms.
//! - [`refine`]: color refinement and topological paths.
//! - [`decolor`]: turning a colored graph into an uncolored one with the same
//!   automorphisms.
//! - [`aut`]: automorphism groups by individualization–refinement, plus a
//!   brute-force oracle and Frucht verification.
//! - [`kneser_oracle`]: parity propagation on `K(7,2)` as an independent
//!   check of the rank computation.
//! - [`io`]: JSON and DIMACS.
//! - [`checks`]: the end-to-end verification suite; [`corpus`] feeds it
//!   seeded random inputs.
//!
//! ```
//! use solgroup::{build_mh, named_group};
//!
//! let a7 = named_group("A7").unwrap();
//! let m = build_mh(&a7);
//! assert_eq!((m.rows(), m.cols(), m.matrix().rank()), (140, 105, 105));
//! ```

pub mod aut;
pub mod checks;
pub mod corpus;
pub mod decolor;
pub mod error;
pub mod f2;
pub mod graph;
pub mod group;
pub mod io;
pub mod kneser_oracle;
pub mod refine;

pub use aut::{
    automorphism_group, automorphism_group_with, brute_automorphisms, brute_automorphisms_within,
    is_rigid, verify_frucht, AutOptions, AutReport, FruchtCheck,
};
pub use decolor::{decolor, pipeline_uncolored, DecolorTrace};
pub use error::{Error, Result};
pub use f2::{F2Matrix, LinSystem};
pub use graph::{
    build_g, build_ghat, disjoint_union, frucht_graph, kneser, Color, ColoredGraph, VertexLabel,
};
pub use group::{build_mh, named_group, presentation_of, FiniteGroup, Perm, Presentation};
pub use kneser_oracle::{build_constraints, propagate_red_edge, EdgeConstraintSystem, Propagation};
pub use refine::{distinguished, refine_step, stable_refinement, topological_paths, Partition, TopoPath};
