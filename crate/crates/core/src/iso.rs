//! Isomorphism testing for small graphs: color refinement followed by
//! backtracking over refined color classes.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest order accepted by [`is_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 64;

/// Returns a bijection `map` with `{u, v} ∈ E(g) ⇔ {map[u], map[v]} ∈ E(h)`
/// when one exists. Deterministic for fixed inputs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<VertexId>>> {
    is_isomorphic_with_limit(g, h, DEFAULT_ISO_LIMIT)
}

pub fn is_isomorphic_with_limit(
    g: &Graph,
    h: &Graph,
    limit: usize,
) -> Result<Option<Vec<VertexId>>> {
    let n = g.order();
    if n.max(h.order()) > limit {
        return Err(Error::ResourceLimit(format!(
            "isomorphism test on order {} exceeds limit {limit}",
            n.max(h.order())
        )));
    }
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let (cg, ch) = joint_refinement(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let mut class_size = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let order = search_order(g, &cg, &class_size);
    let adj_g = AdjMatrix::new(g);
    let adj_h = AdjMatrix::new(h);
    let mut state = Search {
        order: &order,
        cg: &cg,
        ch: &ch,
        adj_g: &adj_g,
        adj_h: &adj_h,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Ok(Some(state.map))
    } else {
        Ok(None)
    }
}

/// Convenience wrapper that only reports the boolean answer.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(is_isomorphic(g, h)?.is_some())
}

/// Checks that `map` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[VertexId]) -> bool {
    if g.order() != h.order() || g.size() != h.size() || map.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &m in map {
        if m >= h.order() || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

struct AdjMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjMatrix {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut bits = vec![false; n * n];
        for (u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        AdjMatrix { n, bits }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }
}

struct Search<'a> {
    order: &'a [VertexId],
    cg: &'a [usize],
    ch: &'a [usize],
    adj_g: &'a AdjMatrix,
    adj_h: &'a AdjMatrix,
    map: Vec<VertexId>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..self.ch.len() {
            if self.used[c] || self.ch[c] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.adj_g.get(v, p) == self.adj_h.get(c, self.map[p]));
            if !consistent {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// Vertex order for backtracking: smallest color class first, then
/// greedily the vertex with the most already-placed neighbors.
fn search_order(g: &Graph, colors: &[usize], class_size: &BTreeMap<usize, usize>) -> Vec<VertexId> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

/// Color refinement run on both graphs with a shared color namespace.
fn joint_refinement(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    let mut classes = count_classes(&cg, &ch);
    loop {
        let sig = |gr: &Graph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = gr.neighbors(v).iter().map(|&w| col[w]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = g.vertices().map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = h.vertices().map(|v| sig(h, &ch, v)).collect();
        let mut names = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            names.entry(s.clone()).or_insert(0usize);
        }
        for (i, v) in names.values_mut().enumerate() {
            *v = i;
        }
        cg = sg.iter().map(|s| names[s]).collect();
        ch = sh.iter().map(|s| names[s]).collect();
        let now = count_classes(&cg, &ch);
        if now == classes {
            return (cg, ch);
        }
        classes = now;
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Isomorphism-invariant fingerprint: order, size and the multiset of
/// stable refinement colors under a graph-independent naming. Equal
/// graphs up to isomorphism always share a fingerprint.
pub fn fingerprint(g: &Graph) -> (usize, usize, Vec<u64>) {
    let mut colors: Vec<u64> = g.vertices().map(|v| g.degree(v) as u64).collect();
    let mut distinct = distinct_count(&colors);
    for _ in 0..g.order() {
        let next: Vec<u64> = g
            .vertices()
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                let mut hasher = DefaultHasher::new();
                (colors[v], nb).hash(&mut hasher);
                hasher.finish()
            })
            .collect();
        colors = next;
        let d = distinct_count(&colors);
        if d == distinct {
            break;
        }
        distinct = d;
    }
    colors.sort_unstable();
    (g.order(), g.size(), colors)
}

fn distinct_count(c: &[u64]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// A set of pairwise non-isomorphic graphs, bucketed by [`fingerprint`].
#[derive(Default)]
pub struct IsoClasses {
    buckets: BTreeMap<(usize, usize, Vec<u64>), Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `g` unless an isomorphic graph is already present.
    /// Returns whether it was inserted.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = fingerprint(&g);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            let found = is_isomorphic_with_limit(&self.graphs[i], &g, usize::MAX)
                .expect("no limit")
                .is_some();
            if found {
                return false;
            }
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Graphs in insertion order.
    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }
}
