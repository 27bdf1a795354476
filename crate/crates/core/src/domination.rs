//! Domination and restricted (G:U)-domination.
//!
//! A set D is (G:U)-dominating when U ⊆ N[D]; D need not lie inside U.
//! The exact solver is a branch-and-bound over closed neighborhoods held
//! as 128-bit masks, seeded with the greedy upper bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Sorted, duplicate-free subset of V(G) that must be dominated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TargetSet(Vec<VertexId>);

impl TargetSet {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        TargetSet(vertices)
    }

    pub fn all(g: &Graph) -> Self {
        TargetSet(g.vertices().collect())
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &TargetSet) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    fn check_within(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.order() => Err(Error::Validation(format!(
                "target vertex {v} not in graph of order {}",
                g.order()
            ))),
            _ => Ok(()),
        }
    }
}

/// V_i(G): vertices of degree at least `i`.
pub fn vi_set(g: &Graph, i: usize) -> TargetSet {
    TargetSet(g.vertices_of_degree_at_least(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub vertices: Vec<VertexId>,
    pub target: TargetSet,
    pub size: usize,
    /// Set only by the exact solver.
    pub optimal: bool,
}

impl DominationCertificate {
    pub fn new(mut vertices: Vec<VertexId>, target: TargetSet, optimal: bool) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let size = vertices.len();
        DominationCertificate {
            vertices,
            target,
            size,
            optimal,
        }
    }

    /// Re-checks U ⊆ N[D] on `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.size == self.vertices.len() && is_dominating(g, &self.vertices, &self.target)
    }
}

/// First target vertex outside N[D], if any.
pub fn first_undominated(
    g: &Graph,
    dominators: &[VertexId],
    target: &TargetSet,
) -> Option<VertexId> {
    let mut covered = vec![false; g.order()];
    for &d in dominators {
        covered[d] = true;
        for &w in g.neighbors(d) {
            covered[w] = true;
        }
    }
    target.as_slice().iter().copied().find(|&u| !covered[u])
}

pub fn is_dominating(g: &Graph, dominators: &[VertexId], target: &TargetSet) -> bool {
    first_undominated(g, dominators, target).is_none()
}

/// Greedy max-coverage followed by removal of redundant picks.
pub fn greedy_dominating(g: &Graph, target: &TargetSet) -> DominationCertificate {
    let n = g.order();
    let mut is_target = vec![false; n];
    for &u in target.as_slice() {
        is_target[u] = true;
    }
    let mut uncovered = is_target.clone();
    let mut left = target.len();
    let mut chosen = Vec::new();
    while left > 0 {
        let gain = |v: VertexId| {
            usize::from(uncovered[v]) + g.neighbors(v).iter().filter(|&&w| uncovered[w]).count()
        };
        let best = g
            .vertices()
            .max_by_key(|&v| (gain(v), std::cmp::Reverse(v)))
            .expect("a target vertex exists");
        chosen.push(best);
        for w in g.closed_neighborhood(best) {
            if uncovered[w] {
                uncovered[w] = false;
                left -= 1;
            }
        }
    }
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let v = chosen.remove(i);
        if !is_dominating(g, &chosen, target) {
            chosen.insert(i, v);
        }
    }
    DominationCertificate::new(chosen, target.clone(), false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverLimits {
    /// Graphs larger than this are rejected (the mask width is 128).
    pub max_vertices: usize,
    /// Search nodes before giving up.
    pub max_nodes: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            max_vertices: 128,
            max_nodes: 500_000_000,
        }
    }
}

/// γ(G:U), or γ(G) when `target` is `None`.
pub fn gamma_exact(g: &Graph, target: Option<&TargetSet>) -> Result<DominationCertificate> {
    gamma_exact_with(g, target, SolverLimits::default())
}

pub fn gamma_exact_with(
    g: &Graph,
    target: Option<&TargetSet>,
    limits: SolverLimits,
) -> Result<DominationCertificate> {
    let target = target.cloned().unwrap_or_else(|| TargetSet::all(g));
    target.check_within(g)?;
    let greedy = greedy_dominating(g, &target);
    if g.order() > limits.max_vertices.min(128) {
        return Err(Error::SolverBudget {
            nodes: 0,
            best: Box::new(greedy),
        });
    }
    let mut search = MaskSearch::new(g, &target, limits.max_nodes);
    search.best = greedy.vertices.clone();
    search.mode = Mode::Minimize;
    search.run();
    if search.exhausted {
        let best = DominationCertificate::new(search.best, target, false);
        return Err(Error::SolverBudget {
            nodes: search.nodes,
            best: Box::new(best),
        });
    }
    Ok(DominationCertificate::new(search.best, target, true))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSets {
    pub gamma: usize,
    /// Minimum dominating sets, each sorted, in lexicographic order.
    pub sets: Vec<Vec<VertexId>>,
    /// More than `cap` sets exist; only `cap` are listed.
    pub truncated: bool,
}

/// All γ(G)-sets, up to `cap` of them.
pub fn all_gamma_sets(g: &Graph, cap: usize) -> Result<GammaSets> {
    all_gamma_sets_for(g, &TargetSet::all(g), cap)
}

/// All minimum (G:U)-dominating sets, up to `cap` of them.
pub fn all_gamma_sets_for(g: &Graph, target: &TargetSet, cap: usize) -> Result<GammaSets> {
    let gamma = gamma_exact(g, Some(target))?.size;
    let mut search = MaskSearch::new(g, target, SolverLimits::default().max_nodes);
    search.mode = Mode::Enumerate { size: gamma, cap };
    search.run();
    if search.exhausted {
        return Err(Error::ResourceLimit(format!(
            "γ-set enumeration exceeded {} search nodes",
            search.nodes
        )));
    }
    let truncated = search.found.len() > cap;
    let mut sets = search.found;
    sets.sort();
    sets.truncate(cap);
    Ok(GammaSets {
        gamma,
        sets,
        truncated,
    })
}

#[derive(Clone, Copy)]
enum Mode {
    Minimize,
    Enumerate { size: usize, cap: usize },
}

struct MaskSearch {
    closed: Vec<u128>,
    target: u128,
    mode: Mode,
    best: Vec<VertexId>,
    found: Vec<Vec<VertexId>>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
    stopped: bool,
}

impl MaskSearch {
    fn new(g: &Graph, target: &TargetSet, max_nodes: u64) -> Self {
        let closed = g
            .vertices()
            .map(|v| {
                g.closed_neighborhood(v)
                    .iter()
                    .fold(0u128, |m, &w| m | (1u128 << w))
            })
            .collect();
        let target = target
            .as_slice()
            .iter()
            .fold(0u128, |m, &u| m | (1u128 << u));
        MaskSearch {
            closed,
            target,
            mode: Mode::Minimize,
            best: Vec::new(),
            found: Vec::new(),
            nodes: 0,
            max_nodes,
            exhausted: false,
            stopped: false,
        }
    }

    fn run(&mut self) {
        let mut chosen = Vec::new();
        self.dfs(self.target, 0, &mut chosen);
    }

    /// Size ceiling for the current branch; branches reaching it are pruned.
    fn ceiling(&self) -> usize {
        match self.mode {
            Mode::Minimize => self.best.len(),
            Mode::Enumerate { size, .. } => size + 1,
        }
    }

    fn dfs(&mut self, uncovered: u128, forbidden: u128, chosen: &mut Vec<VertexId>) {
        if self.exhausted || self.stopped {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return;
        }
        if uncovered == 0 {
            match self.mode {
                Mode::Minimize => {
                    if chosen.len() < self.best.len() {
                        self.best = chosen.clone();
                    }
                }
                Mode::Enumerate { cap, .. } => {
                    let mut set = chosen.clone();
                    set.sort_unstable();
                    self.found.push(set);
                    self.stopped = self.found.len() > cap;
                }
            }
            return;
        }

        // Lower bound: uncovered count over best single-vertex coverage.
        let mut max_cover = 0u32;
        for (v, &nb) in self.closed.iter().enumerate() {
            if forbidden & (1u128 << v) == 0 {
                max_cover = max_cover.max((nb & uncovered).count_ones());
            }
        }
        if max_cover == 0 {
            return;
        }
        let need = uncovered.count_ones().div_ceil(max_cover) as usize;
        if chosen.len() + need >= self.ceiling() {
            return;
        }

        // Branch on the uncovered vertex with the fewest allowed dominators.
        let mut pick = None;
        let mut pick_count = u32::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let count = (self.closed[u] & !forbidden).count_ones();
            if count < pick_count {
                pick_count = count;
                pick = Some(u);
            }
        }
        let u = pick.expect("uncovered is non-empty");
        if pick_count == 0 {
            return;
        }

        let mut options: Vec<(u32, VertexId)> = Vec::new();
        let mut cand = self.closed[u] & !forbidden;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            options.push(((self.closed[v] & uncovered).count_ones(), v));
        }
        options.sort_by_key(|&(gain, v)| (std::cmp::Reverse(gain), v));

        let mut excluded = forbidden;
        for (_, v) in options {
            chosen.push(v);
            self.dfs(uncovered & !self.closed[v], excluded, chosen);
            chosen.pop();
            excluded |= 1u128 << v;
            if self.exhausted || self.stopped {
                return;
            }
        }
    }
}
