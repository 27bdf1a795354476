//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are generated from the classes on `n - 1`
//! vertices by adding one vertex with every possible neighborhood; graphs
//! with `m` edges (no isolated vertices) are grown one edge at a time.
//! Both generators are complete because deleting a vertex, or an edge and
//! any vertex it leaves isolated, lands in the previous level.

use std::sync::OnceLock;

use crate::domination::gamma_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{is_isomorphic, IsoClasses};

/// Largest order [`graphs_up_to_order`] will enumerate.
pub const MAX_ENUM_ORDER: usize = 8;
/// Largest edge count [`graphs_with_edges`] will enumerate.
pub const MAX_ENUM_EDGES: usize = 8;

/// `levels[n]` holds every graph of order `n` up to isomorphism.
pub fn graphs_up_to_order(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > MAX_ENUM_ORDER {
        return Err(Error::ResourceLimit(format!(
            "enumeration of order {max_n} exceeds limit {MAX_ENUM_ORDER}"
        )));
    }
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let mut classes = IsoClasses::new();
        for base in &levels[n - 1] {
            for mask in 0u32..(1 << (n - 1)) {
                let new = n - 1;
                let edges = base.edges().chain(
                    (0..n - 1)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| (i, new)),
                );
                classes.insert(Graph::from_edges_unchecked(n, edges));
            }
        }
        levels.push(classes.into_graphs());
    }
    Ok(levels)
}

/// Connected graphs of order exactly `n` with minimum degree at least `min_degree`.
pub fn connected_with_min_degree(n: usize, min_degree: usize) -> Result<Vec<Graph>> {
    let levels = graphs_up_to_order(n)?;
    Ok(levels[n]
        .iter()
        .filter(|g| g.is_connected() && g.min_degree() >= min_degree)
        .cloned()
        .collect())
}

/// Every graph with exactly `m` edges and no isolated vertex, up to
/// isomorphism, in generation order.
pub fn graphs_with_edges(m: usize) -> Result<Vec<Graph>> {
    graphs_with_edges_capped(m, usize::MAX)
}

/// As [`graphs_with_edges`], failing once any level holds more than `cap` classes.
pub fn graphs_with_edges_capped(m: usize, cap: usize) -> Result<Vec<Graph>> {
    if m > MAX_ENUM_EDGES {
        return Err(Error::ResourceLimit(format!(
            "enumeration of {m}-edge graphs exceeds limit {MAX_ENUM_EDGES}"
        )));
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 0..m {
        let mut classes = IsoClasses::new();
        for base in &level {
            let n = base.order();
            let mut extend = |u: usize, v: usize, order: usize| {
                let edges = base.edges().chain(std::iter::once((u, v)));
                classes.insert(Graph::from_edges_unchecked(order, edges));
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !base.has_edge(u, v) {
                        extend(u, v, n);
                    }
                }
            }
            for u in 0..n {
                extend(u, n, n + 1);
            }
            extend(n, n + 1, n + 2);
        }
        if classes.len() > cap {
            return Err(Error::ResourceLimit(format!(
                "more than {cap} candidate graphs with {} edges",
                level.first().map_or(0, |g| g.size()) + 1
            )));
        }
        level = classes.into_graphs();
    }
    Ok(level)
}

/// The exceptional family: connected graphs with δ ≥ 2 and 5γ > 2n, up to
/// isomorphism, of order at most `limit`.
pub fn family_a(limit: usize) -> Result<Vec<Graph>> {
    if limit < 7 {
        return Err(Error::Validation(format!(
            "family enumeration needs limit >= 7, got {limit}"
        )));
    }
    let levels = graphs_up_to_order(limit)?;
    let mut out = Vec::new();
    for level in &levels {
        for g in level {
            if g.order() == 0 || !g.is_connected() || g.min_degree() < 2 {
                continue;
            }
            let gamma = gamma_exact(g, None)?.size;
            if 5 * gamma > 2 * g.order() {
                out.push(g.clone());
            }
        }
    }
    Ok(out)
}

/// Cached `family_a(7)`.
pub fn family_a_members() -> &'static [Graph] {
    static FAMILY: OnceLock<Vec<Graph>> = OnceLock::new();
    FAMILY.get_or_init(|| family_a(7).expect("order-7 enumeration is within limits"))
}

/// Index into [`family_a_members`] of a member isomorphic to `g`.
pub fn family_a_index(g: &Graph) -> Option<usize> {
    if !matches!(g.order(), 4 | 7) || g.min_degree() < 2 {
        return None;
    }
    family_a_members().iter().position(|m| {
        is_isomorphic(m, g)
            .expect("order 7 is within limit")
            .is_some()
    })
}
