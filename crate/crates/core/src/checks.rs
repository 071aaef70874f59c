//! The end-to-end checks behind `verify-paper` and the acceptance suite.
//!
//! Each check returns a [`CheckOutcome`] with a one-line detail string. The
//! wall-clock limits are part of the pass condition.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::Rng;

use crate::aut::{
    automorphism_group, automorphism_group_with, brute_automorphisms, brute_automorphisms_within, certify,
    verify_frucht, AutOptions,
};
use crate::corpus;
use crate::decolor::{decolor, pipeline_with_trace};
use crate::error::Result;
use crate::graph::{disjoint_union, frucht_graph, kneser, srg_parameters};
use crate::group::{build_mh, involutions, named_group};
use crate::kneser_oracle::certify_an;
use crate::refine::stable_refinement;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {:.2}s",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64()
        )?;
        if let Some(l) = self.limit {
            write!(f, " (limit {}s)", l.as_secs())?;
        }
        write!(f, " {}", self.detail)
    }
}

fn timed(
    id: &'static str,
    limit: Option<u64>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CheckOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let (pass, detail) = match result {
        Ok((ok, detail)) => (ok && in_time, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome { id, pass, detail, elapsed, limit }
}

/// One criterion: id, short name, whether it belongs to the slow tier.
pub struct Criterion {
    pub id: &'static str,
    pub name: &'static str,
    pub deep: bool,
    pub run: fn() -> CheckOutcome,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: "A1", name: "M_A7 is 140x105 of rank 105", deep: false, run: mh_a7_rank },
    Criterion { id: "A2", name: "M_A8 has full column rank 315", deep: false, run: mh_a8_perfect },
    Criterion { id: "A3", name: "decolored A7 witness is rigid", deep: true, run: rigidity_witness },
    Criterion { id: "A4", name: "propagation and rank agree on A7", deep: false, run: kneser_agreement },
    Criterion { id: "A5", name: "K(7,2) is srg(21,10,3,6)", deep: false, run: kneser_srg },
    Criterion { id: "A6", name: "Frucht graphs realize their groups", deep: false, run: frucht_suite },
    Criterion { id: "A7", name: "Aut(G_Z3 + witness) has order 3", deep: true, run: composite_order },
    Criterion { id: "A8", name: "decoloring keeps Aut and separates colors", deep: false, run: decoloring_suite },
    Criterion { id: "A9", name: "search agrees with brute force", deep: false, run: oracle_equivalence },
    Criterion { id: "A10", name: "homogenization solution correspondence", deep: false, run: homogenization_suite },
];

/// Runs the fast tier, plus the slow one if `deep`.
pub fn run_all(deep: bool) -> Vec<CheckOutcome> {
    CRITERIA.iter().filter(|c| deep || !c.deep).map(|c| (c.run)()).collect()
}

pub fn mh_a7_rank() -> CheckOutcome {
    timed("A1", Some(5), || {
        let m = build_mh(&named_group("A7")?);
        let (r, c, rank) = (m.rows(), m.cols(), m.matrix().rank());
        Ok(((r, c, rank) == (140, 105, 105), format!("rows={r} cols={c} rank={rank}")))
    })
}

pub fn mh_a8_perfect() -> CheckOutcome {
    timed("A2", Some(60), || {
        // double transpositions plus products of four disjoint transpositions
        let expected = (28 * 15) / 2 + 105;
        let g = named_group("A8")?;
        let inv = involutions(&g).members.len();
        let m = build_mh(&g);
        let rank = m.matrix().rank();
        let nullity = m.matrix().nullity();
        Ok((
            inv == expected && rank == expected && nullity == 0,
            format!("involutions={inv} expected={expected} rank={rank} nullity={nullity}"),
        ))
    })
}

fn witness_size() -> usize {
    770 + (1..=245).map(|c| c + 2).sum::<usize>()
}

pub fn rigidity_witness() -> CheckOutcome {
    timed("A3", Some(600), || {
        let sys = build_mh(&named_group("A7")?);
        let (g, _, _) = pipeline_with_trace(&sys)?;
        let report = automorphism_group(&g)?;
        let n = g.vertex_count();
        Ok((
            n == witness_size() && report.rigid && certify(&g, &report),
            format!("b=0 vertices={n} expected={} order={} nodes={}", witness_size(), report.order, report.node_count),
        ))
    })
}

pub fn kneser_agreement() -> CheckOutcome {
    timed("A4", Some(30), || {
        let c = certify_an(7)?;
        Ok((
            c.contradictions == c.edges && c.nullity == 0 && c.agree(),
            format!(
                "contradictions={}/{} rank={} nullity={} agree={}",
                c.contradictions,
                c.edges,
                c.rank,
                c.nullity,
                c.agree()
            ),
        ))
    })
}

pub fn kneser_srg() -> CheckOutcome {
    timed("A5", None, || {
        let g = kneser(7, 2)?;
        let p = srg_parameters(&g);
        Ok((p == Some((21, 10, Some(3), Some(6))), format!("srg={p:?}")))
    })
}

pub fn frucht_suite() -> CheckOutcome {
    timed("A6", Some(30), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (spec, order) in [("Z3", 3u32), ("Z4", 4), ("Z2xZ2", 4), ("S3", 6), ("Z5", 5)] {
            let check = verify_frucht(&named_group(spec)?)?;
            ok &= check.ok() && check.search_order == BigUint::from(order);
            parts.push(format!("{spec}:{}", check.search_order));
        }
        Ok((ok, parts.join(" ")))
    })
}

pub fn composite_order() -> CheckOutcome {
    timed("A7", Some(900), || {
        let sys = build_mh(&named_group("A7")?);
        let (witness, _, _) = pipeline_with_trace(&sys)?;
        let g = disjoint_union(&frucht_graph(&named_group("Z3")?), &witness);
        let report = automorphism_group(&g)?;
        Ok((
            report.order == BigUint::from(3u32) && certify(&g, &report),
            format!("b=0 vertices={} order={} nodes={}", g.vertex_count(), report.order, report.node_count),
        ))
    })
}

/// Largest automorphism group the brute-force side is asked to enumerate.
pub const BRUTE_ORDER_CAP: u64 = 100_000;

pub fn decoloring_suite() -> CheckOutcome {
    timed("A8", None, || {
        let mut rng = corpus::rng(0xdec0);
        let (mut failures, mut resampled, mut pairs) = (0, 0, 0u64);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(1..=14);
            let colors = rng.gen_range(1..=4);
            let p = rng.gen_range(0.15..0.6);
            let g = corpus::random_graph(&mut rng, n, p, colors);
            if automorphism_group(&g)?.order > BigUint::from(BRUTE_ORDER_CAP) {
                resampled += 1;
                continue;
            }
            done += 1;
            let colored = brute_automorphisms_within(&g, 14)?.order;
            let (d, trace) = decolor(&g);
            let uncolored = if d.vertex_count() <= 10 {
                brute_automorphisms(&d)?.order
            } else {
                automorphism_group(&d)?.order
            };
            let part = stable_refinement(&d);
            let mut separated = true;
            for u in 0..n {
                for v in u + 1..n {
                    if let (Some(a), Some(b)) = (trace.embedding[u], trace.embedding[v]) {
                        if g.color(u) != g.color(v) {
                            pairs += 1;
                            separated &= part.class_of[a] != part.class_of[b];
                        }
                    }
                }
            }
            if colored != uncolored || !separated {
                failures += 1;
            }
        }
        Ok((
            failures == 0,
            format!("graphs=100 failures={failures} color_pairs={pairs} resampled={resampled}"),
        ))
    })
}

pub fn oracle_equivalence() -> CheckOutcome {
    timed("A9", None, || {
        let mut rng = corpus::rng(0x0a9);
        let mut failures = 0;
        for i in 0..300 {
            let n = rng.gen_range(1..=9);
            let colors = if i % 2 == 0 { 1 } else { rng.gen_range(2..=4) };
            let p = rng.gen_range(0.1..0.9);
            let g = corpus::random_graph(&mut rng, n, p, colors);
            let fast = automorphism_group_with(&g, AutOptions::default())?;
            let slow = brute_automorphisms(&g)?;
            let equitable = stable_refinement(&g).is_equitable(&g);
            if fast.order != slow.order || !equitable || !certify(&g, &fast) {
                failures += 1;
            }
        }
        Ok((failures == 0, format!("graphs=300 failures={failures}")))
    })
}

pub fn homogenization_suite() -> CheckOutcome {
    timed("A10", None, || {
        let mut rng = corpus::rng(0x0a10);
        let mut failures = 0;
        for _ in 0..200 {
            let rows = rng.gen_range(1..=12);
            let cols = rng.gen_range(1..=12);
            let sys = corpus::random_inhomogeneous(&mut rng, rows, cols);
            if !sys.solve_correspondence_check()? {
                failures += 1;
            }
        }
        Ok((failures == 0, format!("systems=200 failures={failures}")))
    })
}
