//! A(S) ∪ A(D) domination of X(G) with the one-arc saving repair.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{
    build_ad, build_as, membership, partition_swu, ratio, require_min_degree, undominated_arc,
    union_arcs, ArcDominationPlan, ArcGroup, ArcsFromD, Bound, PlanMethod, RepairCase,
    SwuPartition, DEFAULT_GAMMA_SET_CAP,
};
use crate::domination::{all_gamma_sets, gamma_exact, vi_set};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRecord, VertexId};
use crate::threearc::{three_arc_graph, Arc, LabeledGraph};

/// The bound 3γ + min_S γ(G−S : V_{δ−1}(G−S)) − 1 over the γ-sets examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Theorem3Bound {
    #[serde(with = "super::ratio_string")]
    pub value: Bound,
    pub gamma: usize,
    /// γ(G−S : V_{δ−1}(G−S)) for the best S.
    pub restricted: usize,
    pub best_set: Vec<VertexId>,
    pub sets_examined: usize,
    pub truncated: bool,
}

/// γ(G−S : V_{δ−1}(G−S)) for one dominating set S.
fn restricted_gamma(g: &Graph, s: &[VertexId]) -> Result<usize> {
    let (h, _) = g.remove_vertices(s);
    let target = vi_set(&h, g.min_degree() - 1);
    Ok(gamma_exact(&h, Some(&target))?.size)
}

pub fn theorem3_bound(g: &Graph, cap: usize) -> Result<Theorem3Bound> {
    require_min_degree(g, 2)?;
    let sets = all_gamma_sets(g, cap.max(1))?;
    let mut best: Option<(usize, &Vec<VertexId>)> = None;
    for s in &sets.sets {
        let r = restricted_gamma(g, s)?;
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, s));
        }
    }
    let (restricted, best_set) = best.expect("a graph with δ ≥ 2 has a γ-set");
    Ok(Theorem3Bound {
        value: ratio((3 * sets.gamma + restricted) as i64 - 1),
        gamma: sets.gamma,
        restricted,
        best_set: best_set.clone(),
        sets_examined: sets.sets.len(),
        truncated: sets.truncated,
    })
}

/// Builds the plan for the γ-set minimizing the bound.
pub fn theorem3_construct(g: &Graph) -> Result<ArcDominationPlan> {
    let bound = theorem3_bound(g, DEFAULT_GAMMA_SET_CAP)?;
    theorem3_construct_for(g, &bound.best_set)
}

/// Builds the plan for a caller-chosen γ-set `s`. The plan's bound is the
/// bound for this particular S.
pub fn theorem3_construct_for(g: &Graph, s: &[VertexId]) -> Result<ArcDominationPlan> {
    require_min_degree(g, 2)?;
    let part = partition_swu(g, s)?;
    let gamma = gamma_exact(g, None)?.size;
    if part.s.len() != gamma {
        return Err(Error::Validation(format!(
            "set of size {} is not a minimum dominating set (γ = {gamma})",
            part.s.len()
        )));
    }
    let bound = ratio((3 * gamma + restricted_gamma(g, &part.s)?) as i64 - 1);
    let groups = build_as(g, &part.s)?;
    let ad = build_ad(g, &part)?;
    let x = three_arc_graph(g);
    assemble(g, &x, PlanMethod::Theorem3, part, groups, ad, bound, false)
}

/// One candidate outcome of the repair.
pub(crate) struct RepairCandidate {
    case: RepairCase,
    groups: Vec<ArcGroup>,
    ad_arcs: Vec<Arc>,
    log: Vec<String>,
}

/// Caps the number of repair candidates tried before giving up.
const MAX_REPAIR_CANDIDATES: usize = 100_000;

/// Combines A(S) and A(D), repairing when they are disjoint, and verifies
/// the result. Repair candidates are tried in lowest-id order; the first
/// one that dominates X(G) with fewer arcs is kept. With
/// `accept_unrepaired`, a dominating union that no repair improves is
/// kept as is, and the bound check decides.
#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble(
    g: &Graph,
    x: &LabeledGraph,
    method: PlanMethod,
    part: SwuPartition,
    groups: Vec<ArcGroup>,
    ad: ArcsFromD,
    bound: Bound,
    accept_unrepaired: bool,
) -> Result<ArcDominationPlan> {
    let a_s = union_arcs(&groups);
    let pre: BTreeSet<Arc> = a_s.iter().chain(&ad.arcs).copied().collect();
    let pre: Vec<Arc> = pre.into_iter().collect();
    let pre_repair_dominates = undominated_arc(x, &pre).is_none();
    let overlap = a_s.iter().any(|a| ad.arcs.contains(a));

    let (repair_case, repair_log, final_groups, result_arcs) = if overlap {
        if let Some(miss) = undominated_arc(x, &pre) {
            return Err(Error::Verification(format!(
                "A(S) ∪ A(D) misses arc {miss} for S = {:?}",
                part.s
            )));
        }
        (
            RepairCase::None,
            vec!["A(S) and A(D) already share an arc".to_string()],
            groups.clone(),
            pre.clone(),
        )
    } else {
        let found = repair_candidates(g, &part, &groups, &ad)
            .into_iter()
            .take(MAX_REPAIR_CANDIDATES)
            .find_map(|c| {
                let arcs = union_with(&c.groups, &c.ad_arcs);
                (arcs.len() < pre.len() && undominated_arc(x, &arcs).is_none()).then_some((c, arcs))
            });
        match found {
            Some((c, arcs)) => (c.case, c.log, c.groups, arcs),
            None if accept_unrepaired && pre_repair_dominates => (
                RepairCase::None,
                vec!["no repair verifies; keeping A(S) ∪ A(D)".to_string()],
                groups.clone(),
                pre.clone(),
            ),
            None => return Err(Error::Verification(format!(
                "no repair of A(S) ∪ A(D) verifies for S = {:?} (pre-repair dominates: {pre_repair_dominates})",
                part.s
            ))),
        }
    };

    let size = result_arcs.len();
    if ratio(size as i64) > bound {
        return Err(Error::Verification(format!(
            "constructed set of size {size} exceeds bound {bound}"
        )));
    }
    Ok(ArcDominationPlan {
        method,
        source: GraphRecord::from(g),
        gamma_set: part.s,
        w: part.w,
        u: part.u,
        a_s,
        d: ad.d,
        a_d: ad.arcs,
        pre_repair_dominates,
        repair_case,
        repair_log,
        groups: final_groups,
        result_arcs,
        size,
        bound,
        verified: true,
    })
}

fn union_with(groups: &[ArcGroup], extra: &[Arc]) -> Vec<Arc> {
    let mut set: BTreeSet<Arc> = groups.iter().flat_map(|g| g.arcs.iter().copied()).collect();
    set.extend(extra.iter().copied());
    set.into_iter().collect()
}

fn replace_group(groups: &[ArcGroup], vertex: VertexId, arcs: Vec<Arc>) -> Vec<ArcGroup> {
    groups
        .iter()
        .map(|gr| {
            if gr.vertex == vertex {
                ArcGroup {
                    vertex,
                    arcs: arcs.clone(),
                }
            } else {
                gr.clone()
            }
        })
        .collect()
}

/// Replaces the A(D) arc leaving `tail` by `new`.
fn replace_ad(ad: &ArcsFromD, tail: VertexId, new: Arc) -> Vec<Arc> {
    ad.arcs
        .iter()
        .map(|&a| if a.tail == tail { new } else { a })
        .collect()
}

fn others(g: &Graph, v: VertexId, skip: &[VertexId]) -> Vec<VertexId> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|c| !skip.contains(c))
        .collect()
}

/// Every repair the proof allows for this situation, in lowest-id order.
pub(crate) fn repair_candidates(
    g: &Graph,
    part: &SwuPartition,
    groups: &[ArcGroup],
    ad: &ArcsFromD,
) -> Vec<RepairCandidate> {
    let mut out = Vec::new();
    let in_s = membership(g.order(), &part.s);
    let a = Arc::new;

    if part.s.len() == 1 {
        let x = part.s[0];
        for &y in &ad.d {
            for z in others(g, y, &[x]) {
                out.push(RepairCandidate {
                    case: RepairCase::Size1,
                    groups: replace_group(groups, x, vec![a(x, z), a(z, y), a(y, x)]),
                    ad_arcs: replace_ad(ad, y, a(y, x)),
                    log: vec![format!("size1: x={x} y={y} z={z}")],
                });
            }
        }
        return out;
    }

    let s_edges: Vec<(VertexId, VertexId)> =
        g.edges().filter(|&(p, q)| in_s[p] && in_s[q]).collect();
    if !s_edges.is_empty() {
        for (x, y) in s_edges {
            for xp in others(g, x, &[y]) {
                for yp in others(g, y, &[x]) {
                    let gs = replace_group(groups, x, vec![a(x, xp), a(x, y), a(y, yp)]);
                    let gs = replace_group(&gs, y, vec![a(y, yp), a(y, x), a(x, xp)]);
                    out.push(RepairCandidate {
                        case: RepairCase::Case1,
                        groups: gs,
                        ad_arcs: ad.arcs.clone(),
                        log: vec![format!("case1: x={x} y={y} x'={xp} y'={yp}")],
                    });
                }
            }
        }
        return out;
    }

    if !part.u.is_empty() {
        for &z in &part.u {
            let s_nb: Vec<VertexId> = g
                .neighbors(z)
                .iter()
                .copied()
                .filter(|&c| in_s[c])
                .collect();
            for (i, &x) in s_nb.iter().enumerate() {
                for &y in &s_nb[i + 1..] {
                    if g.degree(z) == 2 {
                        let gs = replace_group(groups, x, vec![a(x, z), a(z, y)]);
                        let gs = replace_group(&gs, y, vec![a(y, z), a(z, x)]);
                        out.push(RepairCandidate {
                            case: RepairCase::Case2Deg2,
                            groups: gs,
                            ad_arcs: ad.arcs.clone(),
                            log: vec![format!("case2-deg2: z={z} x={x} y={y}")],
                        });
                        continue;
                    }
                    for zp in others(g, z, &[x, y]) {
                        for xp in others(g, x, &[z]) {
                            for yp in others(g, y, &[z]) {
                                let gs =
                                    replace_group(groups, x, vec![a(x, xp), a(x, z), a(z, zp)]);
                                let gs = replace_group(&gs, y, vec![a(y, yp), a(y, z), a(z, zp)]);
                                out.push(RepairCandidate {
                                    case: RepairCase::Case2Deg3,
                                    groups: gs,
                                    ad_arcs: ad.arcs.clone(),
                                    log: vec![format!(
                                        "case2-deg3: z={z} x={x} y={y} z'={zp} x'={xp} y'={yp}"
                                    )],
                                });
                                if out.len() >= MAX_REPAIR_CANDIDATES {
                                    return out;
                                }
                            }
                        }
                    }
                }
            }
        }
        return out;
    }

    let in_d = membership(g.order(), &ad.d);
    for &z in part.w.iter().filter(|&&z| !in_d[z]) {
        let Some(&x) = g.neighbors(z).iter().find(|&&c| in_s[c]) else {
            continue;
        };
        for v in g.neighbors(z).iter().copied().filter(|&v| in_d[v]) {
            for u in g.neighbors(v).iter().copied().filter(|&u| in_s[u]) {
                out.push(RepairCandidate {
                    case: RepairCase::Case3,
                    groups: replace_group(groups, x, vec![a(x, z), a(z, v), a(v, u)]),
                    ad_arcs: replace_ad(ad, v, a(v, u)),
                    log: vec![format!("case3: z={z} x={x} v={v} u={u}")],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, friendship, petersen};

    #[test]
    fn bound_examples() {
        assert_eq!(theorem3_bound(&cycle(3), 100).unwrap().value, ratio(3));
        assert_eq!(theorem3_bound(&friendship(3), 100).unwrap().value, ratio(5));
        assert_eq!(theorem3_bound(&complete(4), 100).unwrap().value, ratio(3));
        let c4 = theorem3_bound(&cycle(4), 100).unwrap();
        assert_eq!(c4.value, ratio(5));
        assert!(!c4.truncated);
    }

    #[test]
    fn triangle_plan() {
        let plan = theorem3_construct(&cycle(3)).unwrap();
        assert_eq!(plan.size, 3);
        assert!(plan.verify().unwrap());
        assert_eq!(plan.gamma_set, vec![0]);
        assert_eq!(plan.a_d, vec![Arc::new(1, 0)]);
    }

    #[test]
    fn friendship_plans() {
        for k in 1..=4 {
            let plan = theorem3_construct(&friendship(k)).unwrap();
            assert_eq!(plan.size, k + 2, "friendship({k})");
            assert!(plan.verify().unwrap());
        }
    }

    #[test]
    fn every_gamma_set_of_small_graphs() {
        for g in [cycle(4), cycle(5), cycle(6), complete(4), petersen()] {
            let sets = all_gamma_sets(&g, 1000).unwrap();
            for s in &sets.sets {
                let plan = theorem3_construct_for(&g, s).unwrap();
                assert!(plan.pre_repair_dominates);
                assert!(plan.verify().unwrap());
                assert!(ratio(plan.size as i64) <= plan.bound);
            }
        }
    }

    #[test]
    fn rejects_non_minimum_sets() {
        assert!(matches!(
            theorem3_construct_for(&cycle(4), &[0, 1, 2]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            theorem3_construct(&crate::generators::path(4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn plan_json_keys() {
        let plan = theorem3_construct(&cycle(3)).unwrap();
        let v = serde_json::to_value(&plan).unwrap();
        for key in [
            "gammaSet",
            "W",
            "U",
            "AS",
            "AD",
            "repairCase",
            "resultArcs",
            "size",
            "bound",
            "verified",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let back: ArcDominationPlan = serde_json::from_value(v).unwrap();
        assert_eq!(back, plan);
    }
}
