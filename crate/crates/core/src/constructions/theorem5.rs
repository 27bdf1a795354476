//! Claw-free construction with at most four arcs per vertex of S.

use super::{
    partition_swu, ratio, require_min_degree, undominated_arc, union_arcs, ArcDominationPlan,
    ArcGroup, PlanMethod, RepairCase,
};
use crate::domination::{gamma_exact, is_dominating, TargetSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRecord, VertexId};
use crate::threearc::{three_arc_graph, Arc};

/// Plan of size at most 4γ for a claw-free graph with δ ≥ 2.
///
/// For each x in a γ-set, {x1, x2} dominates G[N(x)]. With deg(x) = 2 the
/// group is {xx1, xx2, x1x, x2x}; otherwise it is {xx1, x1x3, x3x, x2x}
/// where x3 is the lowest neighbour of x outside {x1, x2}, relabeled so
/// that x3 is adjacent to x1.
pub fn theorem5_clawfree_construct(g: &Graph) -> Result<ArcDominationPlan> {
    require_min_degree(g, 2)?;
    if let Some([c, a, b, d]) = g.find_claw() {
        return Err(Error::Precondition(format!(
            "graph has a claw centered at {c} with leaves {a}, {b}, {d}"
        )));
    }
    let s = gamma_exact(g, None)?.vertices;
    let part = partition_swu(g, &s)?;
    let mut groups = Vec::with_capacity(s.len());
    let mut log = Vec::new();
    for &x in &part.s {
        let (x1, x2) = neighborhood_pair(g, x)?;
        let group = if g.degree(x) == 2 {
            log.push(format!("x={x}: degree 2, x1={x1} x2={x2}"));
            vec![
                Arc::new(x, x1),
                Arc::new(x, x2),
                Arc::new(x1, x),
                Arc::new(x2, x),
            ]
        } else {
            let x3 = *g
                .neighbors(x)
                .iter()
                .find(|&&c| c != x1 && c != x2)
                .expect("degree at least 3");
            let (x1, x2) = if g.has_edge(x3, x1) {
                (x1, x2)
            } else {
                (x2, x1)
            };
            log.push(format!("x={x}: x1={x1} x2={x2} x3={x3}"));
            vec![
                Arc::new(x, x1),
                Arc::new(x1, x3),
                Arc::new(x3, x),
                Arc::new(x2, x),
            ]
        };
        groups.push(ArcGroup {
            vertex: x,
            arcs: group,
        });
    }
    let result_arcs = union_arcs(&groups);
    let x = three_arc_graph(g);
    if let Some(miss) = undominated_arc(&x, &result_arcs) {
        return Err(Error::Verification(format!(
            "claw-free construction misses arc {miss}"
        )));
    }
    let bound = ratio(4 * part.s.len() as i64);
    let size = result_arcs.len();
    if ratio(size as i64) > bound {
        return Err(Error::Verification(format!(
            "size {size} exceeds bound {bound}"
        )));
    }
    Ok(ArcDominationPlan {
        method: PlanMethod::Clawfree,
        source: GraphRecord::from(g),
        gamma_set: part.s,
        w: part.w,
        u: part.u,
        a_s: result_arcs.clone(),
        d: Vec::new(),
        a_d: Vec::new(),
        pre_repair_dominates: true,
        repair_case: RepairCase::None,
        repair_log: log,
        groups,
        result_arcs,
        size,
        bound,
        verified: true,
    })
}

/// Two distinct neighbours of x that together dominate G[N(x)]. A single
/// dominating neighbour is padded with the lowest other neighbour.
fn neighborhood_pair(g: &Graph, x: VertexId) -> Result<(VertexId, VertexId)> {
    let nb = g.neighbors(x).to_vec();
    let local = g.induced_subgraph(&nb);
    let all = TargetSet::all(&local);
    for i in 0..nb.len() {
        if is_dominating(&local, &[i], &all) {
            let pad = (0..nb.len()).find(|&j| j != i).expect("degree at least 2");
            return Ok((nb[i], nb[pad]));
        }
    }
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if is_dominating(&local, &[i, j], &all) {
                return Ok((nb[i], nb[j]));
            }
        }
    }
    Err(Error::Precondition(format!(
        "neighbourhood of {x} has no dominating pair, so the graph is not claw-free"
    )))
}
