//! Constructive dominating sets of X(G) and the bounds they certify.
//!
//! Every construction returns an [`ArcDominationPlan`] whose result arcs
//! have been re-checked against X(G). Wherever a neighbour has to be
//! chosen, the lowest id wins.

mod lemma2;
mod theorem3;
mod theorem4;
mod theorem5;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::domination::{first_undominated, gamma_exact, TargetSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRecord, VertexId};
use crate::threearc::{three_arc_graph, Arc, LabeledGraph};

pub use lemma2::{
    lemma2a_construct, lemma2b_construct, lemma2c_construct, AuxKind, AuxiliaryJ, ComponentBound,
    Lemma2aOutcome, Lemma2bOutcome, Lemma2cOutcome,
};
pub use theorem3::{theorem3_bound, theorem3_construct, theorem3_construct_for, Theorem3Bound};
pub use theorem4::{theorem4_bounds, theorem4b_construct, Theorem4Bounds};
pub use theorem5::theorem5_clawfree_construct;

/// Exact rational bound value.
pub type Bound = Ratio<i64>;

/// Default cap on γ-set enumeration for the minimum over γ-sets.
pub const DEFAULT_GAMMA_SET_CAP: usize = 10_000;

/// S, W, U split of V(G) for a dominating set S: W holds the outside
/// vertices with exactly one neighbour in S, U the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwuPartition {
    pub s: Vec<VertexId>,
    pub w: Vec<VertexId>,
    pub u: Vec<VertexId>,
}

pub fn partition_swu(g: &Graph, s: &[VertexId]) -> Result<SwuPartition> {
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable();
    s_sorted.dedup();
    if let Some(&v) = s_sorted.last() {
        if v >= g.order() {
            return Err(Error::Validation(format!("vertex {v} not in graph")));
        }
    }
    if let Some(v) = first_undominated(g, &s_sorted, &TargetSet::all(g)) {
        return Err(Error::Validation(format!(
            "set is not dominating: vertex {v} uncovered"
        )));
    }
    let in_s = membership(g.order(), &s_sorted);
    let (mut w, mut u) = (Vec::new(), Vec::new());
    for v in g.vertices().filter(|&v| !in_s[v]) {
        let hits = g.neighbors(v).iter().filter(|&&x| in_s[x]).count();
        if hits == 1 {
            w.push(v);
        } else {
            u.push(v);
        }
    }
    Ok(SwuPartition { s: s_sorted, w, u })
}

/// A(x) for one vertex of S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcGroup {
    pub vertex: VertexId,
    pub arcs: Vec<Arc>,
}

/// Default A(x) = {x x1, x x2, x2 x3}: x1 < x2 are the two lowest
/// neighbours of x, and x3 is the lowest neighbour of x2 outside
/// {x, x1}, falling back to x1 when x2 has no other neighbour.
pub fn default_arc_group(g: &Graph, x: VertexId) -> Result<ArcGroup> {
    let nb = g.neighbors(x);
    if nb.len() < 2 {
        return Err(Error::Precondition(format!(
            "vertex {x} has degree {} < 2",
            nb.len()
        )));
    }
    let (x1, x2) = (nb[0], nb[1]);
    let x3 = g
        .neighbors(x2)
        .iter()
        .copied()
        .find(|&c| c != x && c != x1)
        .unwrap_or(x1);
    Ok(ArcGroup {
        vertex: x,
        arcs: vec![Arc::new(x, x1), Arc::new(x, x2), Arc::new(x2, x3)],
    })
}

/// Every valid A(x) = {x x1, x x2, x2 x3}, starting with the default and
/// then in lexicographic order of (x1, x2, x3).
fn arc_group_choices(g: &Graph, x: VertexId) -> Result<Vec<ArcGroup>> {
    let first = default_arc_group(g, x)?;
    let mut out = vec![first.clone()];
    for &x1 in g.neighbors(x) {
        for &x2 in g.neighbors(x).iter().filter(|&&c| c != x1) {
            for &x3 in g.neighbors(x2).iter().filter(|&&c| c != x) {
                let arcs = vec![Arc::new(x, x1), Arc::new(x, x2), Arc::new(x2, x3)];
                if arcs != first.arcs {
                    out.push(ArcGroup { vertex: x, arcs });
                }
            }
        }
    }
    Ok(out)
}

/// Node budget for the search for pairwise disjoint groups.
const DISJOINT_SEARCH_BUDGET: usize = 100_000;

/// A(S), one group per vertex of S in increasing order. The groups are the
/// lexicographically first pairwise disjoint family of choices, so that
/// |A(S)| = 3|S| whenever that is possible; otherwise (or if the search
/// budget runs out) every vertex gets its default group. Requires δ ≥ 2
/// on the vertices of S.
pub fn build_as(g: &Graph, s: &[VertexId]) -> Result<Vec<ArcGroup>> {
    let choices: Vec<Vec<ArcGroup>> = s
        .iter()
        .map(|&x| arc_group_choices(g, x))
        .collect::<Result<_>>()?;
    let mut picked = Vec::with_capacity(s.len());
    let mut taken = BTreeSet::new();
    let mut budget = DISJOINT_SEARCH_BUDGET;
    if disjoint_search(&choices, &mut picked, &mut taken, &mut budget) {
        return Ok(picked
            .into_iter()
            .enumerate()
            .map(|(i, c)| choices[i][c].clone())
            .collect());
    }
    Ok(choices.into_iter().map(|mut c| c.swap_remove(0)).collect())
}

fn disjoint_search(
    choices: &[Vec<ArcGroup>],
    picked: &mut Vec<usize>,
    taken: &mut BTreeSet<Arc>,
    budget: &mut usize,
) -> bool {
    let level = picked.len();
    if level == choices.len() {
        return true;
    }
    for (c, group) in choices[level].iter().enumerate() {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if group.arcs.iter().any(|a| taken.contains(a)) {
            continue;
        }
        taken.extend(group.arcs.iter().copied());
        picked.push(c);
        if disjoint_search(choices, picked, taken, budget) {
            return true;
        }
        picked.pop();
        for a in &group.arcs {
            taken.remove(a);
        }
    }
    false
}

/// Union of the arcs of the groups, sorted.
pub fn union_arcs(groups: &[ArcGroup]) -> Vec<Arc> {
    let set: BTreeSet<Arc> = groups.iter().flat_map(|g| g.arcs.iter().copied()).collect();
    set.into_iter().collect()
}

/// A minimum (G−S : W)-dominating set D and A(D) = {y y' : y ∈ D}, where
/// y' is the lowest neighbour of y in S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcsFromD {
    pub d: Vec<VertexId>,
    pub arcs: Vec<Arc>,
}

pub fn build_ad(g: &Graph, part: &SwuPartition) -> Result<ArcsFromD> {
    let (h, back) = g.remove_vertices(&part.s);
    let mut forward = vec![usize::MAX; g.order()];
    for (i, &v) in back.iter().enumerate() {
        forward[v] = i;
    }
    let target = TargetSet::new(part.w.iter().map(|&w| forward[w]).collect());
    let cert = gamma_exact(&h, Some(&target))?;
    let d: Vec<VertexId> = cert.vertices.iter().map(|&i| back[i]).collect();
    let arcs = arcs_into_s(g, &part.s, &d)?;
    Ok(ArcsFromD { d, arcs })
}

/// y -> lowest S-neighbour of y, for each y in `d`.
pub(crate) fn arcs_into_s(g: &Graph, s: &[VertexId], d: &[VertexId]) -> Result<Vec<Arc>> {
    let in_s = membership(g.order(), s);
    d.iter()
        .map(|&y| {
            g.neighbors(y)
                .iter()
                .copied()
                .find(|&c| in_s[c])
                .map(|c| Arc::new(y, c))
                .ok_or_else(|| {
                    Error::Verification(format!("vertex {y} of D has no neighbour in S"))
                })
        })
        .collect()
}

/// Which modification was applied to turn A(S) ∪ A(D) into a smaller set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepairCase {
    None,
    Size1,
    Case1,
    Case2Deg3,
    Case2Deg2,
    Case3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanMethod {
    Theorem3,
    Theorem4b,
    Clawfree,
}

/// A dominating set of X(G) together with the intermediate sets that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ArcDominationPlan {
    pub method: PlanMethod,
    pub source: GraphRecord,
    pub gamma_set: Vec<VertexId>,
    #[serde(rename = "W")]
    pub w: Vec<VertexId>,
    #[serde(rename = "U")]
    pub u: Vec<VertexId>,
    /// A(S) before any repair.
    #[serde(rename = "AS")]
    pub a_s: Vec<Arc>,
    /// The vertex set D behind A(D).
    #[serde(rename = "D")]
    pub d: Vec<VertexId>,
    /// A(D) before any repair.
    #[serde(rename = "AD")]
    pub a_d: Vec<Arc>,
    /// Whether A(S) ∪ A(D) already dominated X(G) before the repair.
    pub pre_repair_dominates: bool,
    pub repair_case: RepairCase,
    /// Choices made by the repair, in order.
    pub repair_log: Vec<String>,
    /// A(x) groups after the repair.
    pub groups: Vec<ArcGroup>,
    pub result_arcs: Vec<Arc>,
    pub size: usize,
    #[serde(with = "ratio_string")]
    pub bound: Bound,
    pub verified: bool,
}

impl ArcDominationPlan {
    /// Re-checks that the result arcs dominate X(source).
    pub fn verify(&self) -> Result<bool> {
        let g = Graph::try_from(self.source.clone())?;
        let x = three_arc_graph(&g);
        Ok(self.result_arcs.iter().all(|&a| x.index_of(a).is_some())
            && undominated_arc(&x, &self.result_arcs).is_none())
    }

    /// Size of the pre-repair union A(S) ∪ A(D).
    pub fn pre_repair_size(&self) -> usize {
        self.a_s
            .iter()
            .chain(&self.a_d)
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// First arc of X not dominated by `chosen`.
pub fn undominated_arc(x: &LabeledGraph, chosen: &[Arc]) -> Option<Arc> {
    let mut covered = vec![false; x.graph.order()];
    for &a in chosen {
        if let Some(i) = x.index_of(a) {
            covered[i] = true;
            for &j in x.graph.neighbors(i) {
                covered[j] = true;
            }
        }
    }
    covered.iter().position(|c| !c).map(|i| x.label(i))
}

pub(crate) fn membership(n: usize, set: &[VertexId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

pub(crate) fn require_min_degree(g: &Graph, floor: usize) -> Result<()> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < floor) {
        return Err(Error::Precondition(format!(
            "minimum degree {floor} required; vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    if g.order() == 0 {
        return Err(Error::Precondition("graph is empty".into()));
    }
    Ok(())
}

pub(crate) fn ratio(n: i64) -> Bound {
    Ratio::from_integer(n)
}

/// Serializes a ratio as `"p/q"` (or `"p"` when integral).
pub mod ratio_string {
    use super::Bound;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Bound, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Bound, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Bound>().map_err(D::Error::custom)
    }
}
