//! Arcs, 3-arcs and 3-arc graphs.
//!
//! Two arcs `uv` and `xy` are adjacent in X(G, Δ) iff `(v, u, x, y) ∈ Δ`.
//! For the full 3-arc set this reads: `u ~ x`, `v ≠ x` and `y ≠ u`.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Graph, VertexId};

/// Ordered pair of adjacent vertices. Orders by `(tail, head)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(VertexId, VertexId)", from = "(VertexId, VertexId)")]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }
}

impl From<Arc> for (VertexId, VertexId) {
    fn from(a: Arc) -> Self {
        (a.tail, a.head)
    }
}

impl From<(VertexId, VertexId)> for Arc {
    fn from((tail, head): (VertexId, VertexId)) -> Self {
        Arc { tail, head }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// All arcs of `g` in `(tail, head)` order.
pub fn arcs(g: &Graph) -> Vec<Arc> {
    g.vertices()
        .flat_map(|u| g.neighbors(u).iter().map(move |&v| Arc::new(u, v)))
        .collect()
}

/// Full-3-arc adjacency between arcs `a` and `b` of `g`.
#[inline]
pub fn arcs_adjacent(g: &Graph, a: Arc, b: Arc) -> bool {
    a.head != b.tail && b.head != a.tail && g.has_edge(a.tail, b.tail)
}

/// `(v, u, x, y)`: both `(v, u, x)` and `(u, x, y)` are paths; `v = y` allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThreeArc(pub VertexId, pub VertexId, pub VertexId, pub VertexId);

impl ThreeArc {
    pub fn reversed(self) -> Self {
        let ThreeArc(v, u, x, y) = self;
        ThreeArc(y, x, u, v)
    }

    pub fn is_valid_in(self, g: &Graph) -> bool {
        let ThreeArc(v, u, x, y) = self;
        v != x && u != y && g.has_edge(u, v) && g.has_edge(u, x) && g.has_edge(x, y)
    }

    /// The pair of arcs `(uv, xy)` this 3-arc joins.
    pub fn endpoints(self) -> (Arc, Arc) {
        let ThreeArc(v, u, x, y) = self;
        (Arc::new(u, v), Arc::new(x, y))
    }
}

impl fmt::Display for ThreeArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0, self.1, self.2, self.3)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ThreeArcSet {
    arcs: BTreeSet<ThreeArc>,
}

impl ThreeArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: ThreeArc) -> bool {
        self.arcs.insert(t)
    }

    pub fn contains(&self, t: &ThreeArc) -> bool {
        self.arcs.contains(t)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ThreeArc> {
        self.arcs.iter()
    }

    pub fn is_subset(&self, other: &ThreeArcSet) -> bool {
        self.arcs.is_subset(&other.arcs)
    }

    /// First member whose reversal is missing.
    pub fn unpaired(&self) -> Option<ThreeArc> {
        self.arcs
            .iter()
            .copied()
            .find(|t| !self.arcs.contains(&t.reversed()))
    }

    pub fn is_self_paired(&self) -> bool {
        self.unpaired().is_none()
    }

    /// Parses lines of four vertex ids `v u x y`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut set = ThreeArcSet::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 4 {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected 4 vertex ids, found {}", tokens.len()),
                });
            }
            let mut ids = [0usize; 4];
            for (slot, tok) in ids.iter_mut().zip(&tokens) {
                *slot = tok.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("`{tok}` is not a non-negative integer"),
                })?;
            }
            set.insert(ThreeArc(ids[0], ids[1], ids[2], ids[3]));
        }
        Ok(set)
    }
}

impl FromIterator<ThreeArc> for ThreeArcSet {
    fn from_iter<I: IntoIterator<Item = ThreeArc>>(iter: I) -> Self {
        ThreeArcSet {
            arcs: iter.into_iter().collect(),
        }
    }
}

/// Every 3-arc of `g`.
pub fn all_three_arcs(g: &Graph) -> ThreeArcSet {
    let mut set = ThreeArcSet::new();
    for u in g.vertices() {
        for &x in g.neighbors(u) {
            for &v in g.neighbors(u) {
                if v == x {
                    continue;
                }
                for &y in g.neighbors(x) {
                    if y != u {
                        set.insert(ThreeArc(v, u, x, y));
                    }
                }
            }
        }
    }
    set
}

/// A graph whose vertex `i` stands for arc `labels[i]` of a source graph.
/// Labels are sorted, so vertex ids follow `(tail, head)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Arc>,
}

impl LabeledGraph {
    pub fn index_of(&self, arc: Arc) -> Option<VertexId> {
        self.labels.binary_search(&arc).ok()
    }

    pub fn label(&self, v: VertexId) -> Arc {
        self.labels[v]
    }

    /// Vertex ids for a set of arcs. Panics on an arc that is not a label.
    pub fn indices_of(&self, arcs: &[Arc]) -> Vec<VertexId> {
        arcs.iter()
            .map(|&a| {
                self.index_of(a)
                    .unwrap_or_else(|| panic!("{a} is not an arc"))
            })
            .collect()
    }

    /// Sidecar label table, one `vertexId: tail->head` line per vertex.
    pub fn label_table(&self) -> String {
        let mut out = String::new();
        for (i, a) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{i}: {a}");
        }
        out
    }

    pub fn parse_label_table(text: &str) -> Result<Vec<Arc>> {
        let mut labels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim().trim_start_matches('#').trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| Error::Parse {
                line: i + 1,
                message: m.to_string(),
            };
            let (id, arc) = line.split_once(':').ok_or_else(|| bad("missing `:`"))?;
            let (t, h) = arc
                .trim()
                .split_once("->")
                .ok_or_else(|| bad("missing `->`"))?;
            let id: usize = id.trim().parse().map_err(|_| bad("bad vertex id"))?;
            if id != labels.len() {
                return Err(bad("label ids must be consecutive from 0"));
            }
            let tail = t.trim().parse().map_err(|_| bad("bad tail"))?;
            let head = h.trim().parse().map_err(|_| bad("bad head"))?;
            labels.push(Arc::new(tail, head));
        }
        Ok(labels)
    }
}

/// X(G): the 3-arc graph over all 3-arcs.
pub fn three_arc_graph(g: &Graph) -> LabeledGraph {
    let labels = arcs(g);
    let mut edges = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate().skip(i + 1) {
            if arcs_adjacent(g, a, b) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph {
        graph: Graph::from_edges_unchecked(labels.len(), edges),
        labels,
    }
}

/// X(G, Δ), or X(G) when `delta` is `None`. Δ must be self-paired and
/// consist of 3-arcs of `g`.
pub fn build_x(g: &Graph, delta: Option<&ThreeArcSet>) -> Result<LabeledGraph> {
    let Some(delta) = delta else {
        return Ok(three_arc_graph(g));
    };
    if let Some(bad) = delta.iter().find(|t| !t.is_valid_in(g)) {
        return Err(Error::Validation(format!(
            "{bad} is not a 3-arc of the graph"
        )));
    }
    if let Some(t) = delta.unpaired() {
        return Err(Error::Validation(format!(
            "3-arc set is not self-paired: {t} present but {} missing",
            t.reversed()
        )));
    }
    let labels = arcs(g);
    let index = |a: Arc| labels.binary_search(&a).expect("3-arc endpoints are arcs");
    let edges = delta.iter().map(|t| {
        let (a, b) = t.endpoints();
        (index(a), index(b))
    });
    let graph = Graph::from_edges_unchecked(labels.len(), edges);
    Ok(LabeledGraph { graph, labels })
}

/// Directed adjacency used by [`build_x_directed`]: an arc in either
/// direction between `u` and `x`.
#[inline]
pub fn directed_joined(d: &DiGraph, u: VertexId, x: VertexId) -> bool {
    d.has_arc(u, x) || d.has_arc(x, u)
}

/// X(D) of a digraph: arcs `uv`, `xy` are adjacent iff `v ≠ x`, `y ≠ u`
/// and `u`, `x` are joined in D.
pub fn build_x_directed(d: &DiGraph) -> LabeledGraph {
    let labels: Vec<Arc> = d.arcs().map(Arc::from).collect();
    let mut edges = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate().skip(i + 1) {
            if a.head != b.tail && b.head != a.tail && directed_joined(d, a.tail, b.tail) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph {
        graph: Graph::from_edges_unchecked(labels.len(), edges),
        labels,
    }
}

/// X^i(G). Each stage's order is checked against `cap` before it is built.
pub fn iterate_x(g: &Graph, times: usize, cap: usize) -> Result<LabeledGraph> {
    if times == 0 {
        return Err(Error::Validation(
            "iteration count must be at least 1".into(),
        ));
    }
    let mut current = g.clone();
    let mut last = None;
    for stage in 1..=times {
        let next_order = 2 * current.size();
        if next_order > cap {
            return Err(Error::ResourceLimit(format!(
                "stage {stage} would have {next_order} vertices (cap {cap})"
            )));
        }
        let x = three_arc_graph(&current);
        current = x.graph.clone();
        last = Some(x);
    }
    Ok(last.expect("times >= 1"))
}
