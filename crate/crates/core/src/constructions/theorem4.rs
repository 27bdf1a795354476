//! Degree-specific bounds and the minimum-degree-3 construction.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::theorem3::assemble;
use super::{
    arcs_into_s, build_as, membership, partition_swu, ratio, theorem3_construct, ArcDominationPlan,
    ArcGroup, ArcsFromD, Bound, PlanMethod, DEFAULT_GAMMA_SET_CAP,
};
use crate::domination::{all_gamma_sets, gamma_exact, vi_set};
use crate::enumerate::family_a_index;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::threearc::{three_arc_graph, Arc, LabeledGraph};

/// Bound values that apply to G; entries whose hypothesis fails are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Theorem4Bounds {
    pub gamma: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(with = "option_ratio")]
    pub delta2: Option<Bound>,
    #[serde(with = "option_ratio")]
    pub delta3: Option<Bound>,
    #[serde(with = "option_ratio")]
    pub delta4: Option<Bound>,
    /// (1 + Δ)γ, valid for connected G with n ≥ 4 and δ ≥ 2.
    #[serde(with = "option_ratio")]
    pub eq_del: Option<Bound>,
}

impl Theorem4Bounds {
    /// The bound matching δ(G), if any.
    pub fn applicable(&self) -> Option<Bound> {
        self.delta2.or(self.delta3).or(self.delta4)
    }
}

/// (Δ/2 + 3)γ − 1
pub fn delta2_bound(max_degree: usize, gamma: usize) -> Bound {
    (Bound::new(max_degree as i64, 2) + 3) * gamma as i64 - 1
}

/// (2Δ/5 + 3)γ − 1
pub fn delta3_bound(max_degree: usize, gamma: usize) -> Bound {
    (Bound::new(2 * max_degree as i64, 5) + 3) * gamma as i64 - 1
}

/// (3(Δ + 2)/8 + 3)γ − 1
pub fn delta4_bound(max_degree: usize, gamma: usize) -> Bound {
    (Bound::new(3 * (max_degree as i64 + 2), 8) + 3) * gamma as i64 - 1
}

pub fn theorem4_bounds(g: &Graph) -> Result<Theorem4Bounds> {
    if g.order() == 0 {
        return Err(Error::Precondition("graph is empty".into()));
    }
    let gamma = gamma_exact(g, None)?.size;
    let (dmin, dmax) = (g.min_degree(), g.max_degree());
    let eq_del = (g.is_connected() && g.order() >= 4 && dmin >= 2)
        .then(|| ratio(((1 + dmax) * gamma) as i64));
    Ok(Theorem4Bounds {
        gamma,
        min_degree: dmin,
        max_degree: dmax,
        delta2: (dmin == 2).then(|| delta2_bound(dmax, gamma)),
        delta3: (dmin == 3).then(|| delta3_bound(dmax, gamma)),
        delta4: (dmin == 4).then(|| delta4_bound(dmax, gamma)),
        eq_del,
    })
}

/// Plan for a graph with δ = 3 whose size is at most (2Δ/5 + 3)γ − 1.
///
/// D is assembled component by component over G − S: components outside
/// the exceptional family use a minimum (R : V₂(R))-dominating set, and
/// family members use a minimum dominating set of R − z. When every vertex
/// of a family component lies in W, the group A(u′) is rewired to
/// {u′u, uy, u′v} and the choice of (z, u, y, v) is searched until the
/// arcs leaving the component are dominated. Each γ-set is tried in turn;
/// if none succeeds the general construction is used instead.
pub fn theorem4b_construct(g: &Graph) -> Result<ArcDominationPlan> {
    if g.order() == 0 || g.min_degree() != 3 {
        return Err(Error::Precondition(format!(
            "minimum degree 3 required, got {}",
            g.min_degree()
        )));
    }
    let sets = all_gamma_sets(g, DEFAULT_GAMMA_SET_CAP)?;
    let bound = delta3_bound(g.max_degree(), sets.gamma);
    let x = three_arc_graph(g);
    let mut failures = Vec::new();
    for s in &sets.sets {
        match construct_for(g, &x, s, bound) {
            Ok(plan) => return Ok(plan),
            Err(e) if matches!(e, Error::Verification(_)) => failures.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    let mut plan = theorem3_construct(g)?;
    if ratio(plan.size as i64) > bound {
        return Err(Error::Verification(format!(
            "fallback plan of size {} exceeds bound {bound}; component search failures: {failures:?}",
            plan.size
        )));
    }
    plan.method = PlanMethod::Theorem4b;
    plan.bound = bound;
    plan.repair_log.insert(
        0,
        format!(
            "fell back to the general construction after: {}",
            failures.join("; ")
        ),
    );
    Ok(plan)
}

fn construct_for(
    g: &Graph,
    x: &LabeledGraph,
    s: &[VertexId],
    bound: Bound,
) -> Result<ArcDominationPlan> {
    let part = partition_swu(g, s)?;
    let mut groups = build_as(g, &part.s)?;
    let in_s = membership(g.order(), &part.s);
    let in_w = membership(g.order(), &part.w);
    let (h, back) = g.remove_vertices(&part.s);
    let mut rewired: BTreeSet<VertexId> = BTreeSet::new();
    let mut log = Vec::new();
    let mut d: Vec<VertexId> = Vec::new();

    for comp in h.components().into_iter().filter(|c| c.len() > 1) {
        let verts: Vec<VertexId> = comp.iter().map(|&i| back[i]).collect();
        let r = g.induced_subgraph(&verts);
        if family_a_index(&r).is_none() {
            let cert = gamma_exact(&r, Some(&vi_set(&r, 2)))?;
            d.extend(cert.vertices.iter().map(|&i| verts[i]));
            continue;
        }
        if let Some(zi) = (0..verts.len()).find(|&i| !in_w[verts[i]]) {
            d.extend(dominate_without(&r, &verts, zi)?);
            log.push(format!(
                "family component {verts:?}: dropped z={} outside W",
                verts[zi]
            ));
            continue;
        }
        let (dj, group, entry) = search_rewiring(g, x, &r, &verts, &groups, &rewired, &in_s)?;
        rewired.insert(group.vertex);
        let idx = groups
            .iter()
            .position(|gr| gr.vertex == group.vertex)
            .expect("u' lies in S");
        groups[idx] = group;
        d.extend(dj);
        log.push(entry);
    }
    d.sort_unstable();
    let arcs = arcs_into_s(g, &part.s, &d)?;
    let mut plan = assemble(
        g,
        x,
        PlanMethod::Theorem4b,
        part,
        groups,
        ArcsFromD { d, arcs },
        bound,
        true,
    )?;
    log.append(&mut plan.repair_log);
    plan.repair_log = log;
    Ok(plan)
}

/// Minimum dominating set of R − z, in G ids.
fn dominate_without(r: &Graph, verts: &[VertexId], zi: usize) -> Result<Vec<VertexId>> {
    let (rz, keep) = r.remove_vertices(&[zi]);
    let cert = gamma_exact(&rz, None)?;
    Ok(cert.vertices.iter().map(|&i| verts[keep[i]]).collect())
}

/// Searches (z, u, y, v) for a family component lying inside W.
fn search_rewiring(
    g: &Graph,
    x: &LabeledGraph,
    r: &Graph,
    verts: &[VertexId],
    groups: &[ArcGroup],
    rewired: &BTreeSet<VertexId>,
    in_s: &[bool],
) -> Result<(Vec<VertexId>, ArcGroup, String)> {
    for zi in 0..verts.len() {
        let z = verts[zi];
        let dj = dominate_without(r, verts, zi)?;
        let ad: Vec<Arc> = dj
            .iter()
            .map(|&y| {
                let yp = *g
                    .neighbors(y)
                    .iter()
                    .find(|&&c| in_s[c])
                    .expect("W vertex has an S-neighbour");
                Arc::new(y, yp)
            })
            .collect();
        for &ui in r.neighbors(zi) {
            let u = verts[ui];
            let up = *g
                .neighbors(u)
                .iter()
                .find(|&&c| in_s[c])
                .expect("W vertex has an S-neighbour");
            if rewired.contains(&up) {
                continue;
            }
            for &y in g.neighbors(u).iter().filter(|&&y| y != up && y != z) {
                for &v in g.neighbors(up).iter().filter(|&&v| v != u) {
                    let group = ArcGroup {
                        vertex: up,
                        arcs: vec![Arc::new(up, u), Arc::new(u, y), Arc::new(up, v)],
                    };
                    let chosen: Vec<Arc> = groups
                        .iter()
                        .filter(|gr| gr.vertex != up)
                        .flat_map(|gr| gr.arcs.iter().copied())
                        .chain(group.arcs.iter().copied())
                        .chain(ad.iter().copied())
                        .collect();
                    if tails_dominated(g, x, &chosen, verts) {
                        let entry = format!("family component {verts:?}: z={z} u={u} y={y} v={v}");
                        return Ok((dj, group, entry));
                    }
                }
            }
        }
    }
    Err(Error::Verification(format!(
        "no (z, u, y, v) choice dominates the arcs leaving family component {verts:?}"
    )))
}

/// Whether every arc with tail in `tails` is dominated by `chosen`.
fn tails_dominated(g: &Graph, x: &LabeledGraph, chosen: &[Arc], tails: &[VertexId]) -> bool {
    let mut covered = vec![false; x.graph.order()];
    for &a in chosen {
        if let Some(i) = x.index_of(a) {
            covered[i] = true;
            for &j in x.graph.neighbors(i) {
                covered[j] = true;
            }
        }
    }
    tails.iter().all(|&t| {
        g.neighbors(t)
            .iter()
            .all(|&b| x.index_of(Arc::new(t, b)).is_some_and(|i| covered[i]))
    })
}

mod option_ratio {
    use super::Bound;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Bound>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&r.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Bound>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse::<Bound>().map_err(D::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, petersen};

    #[test]
    fn bound_examples() {
        let k3 = theorem4_bounds(&complete(3)).unwrap();
        assert_eq!(k3.delta2, Some(ratio(3)));
        assert_eq!(k3.eq_del, None);
        let k4 = theorem4_bounds(&complete(4)).unwrap();
        assert_eq!(k4.delta3, Some(Bound::new(16, 5)));
        assert_eq!(k4.delta2, None);
        let p = theorem4_bounds(&petersen()).unwrap();
        assert_eq!(p.delta3, Some(Bound::new(58, 5)));
        assert_eq!(p.eq_del, Some(ratio(12)));
        assert_eq!(p.applicable(), p.delta3);
        let c5 = theorem4_bounds(&cycle(5)).unwrap();
        assert_eq!(c5.delta2, Some(ratio(7)));
        let k5 = theorem4_bounds(&complete(5)).unwrap();
        assert_eq!(k5.delta4, Some(Bound::new(17, 4)));
    }

    #[test]
    fn bounds_json() {
        let json = serde_json::to_string(&theorem4_bounds(&complete(4)).unwrap()).unwrap();
        assert!(json.contains("\"delta3\":\"16/5\""));
        assert!(json.contains("\"delta2\":null"));
        let back: Theorem4Bounds = serde_json::from_str(&json).unwrap();
        assert_eq!(back.delta3, Some(Bound::new(16, 5)));
    }

    #[test]
    fn construct_examples() {
        let plan = theorem4b_construct(&complete(4)).unwrap();
        assert!(plan.size <= 3 && plan.verify().unwrap());
        let plan = theorem4b_construct(&complete_bipartite(3, 3)).unwrap();
        assert!(plan.size <= 7 && plan.verify().unwrap());
        let plan = theorem4b_construct(&petersen()).unwrap();
        assert!(plan.size <= 11 && plan.verify().unwrap());
        assert!(matches!(
            theorem4b_construct(&cycle(5)),
            Err(Error::Precondition(_))
        ));
    }
}
