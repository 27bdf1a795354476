//! Simple graphs and digraphs on dense vertex ids, with text IO.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex ids of a graph of order `n` are exactly `0..n`.
pub type VertexId = usize;

/// Finite simple undirected graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph on `n` vertices. Duplicate edges collapse; loops and
    /// out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge {{{u}, {v}}} out of range for order {n}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but panics on invalid input. For
    /// generators whose edges are valid by construction.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::from_edges(n, edges).expect("generator produced an invalid edge")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degree sequence sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    /// Closed neighborhood N[v], sorted.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Connected components, each sorted, listed by minimum element.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj }
    }

    /// `self - removed`, together with the map from new ids to old ids.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut drop = vec![false; self.order()];
        for &v in removed {
            drop[v] = true;
        }
        let kept: Vec<VertexId> = self.vertices().filter(|&v| !drop[v]).collect();
        (self.induced_subgraph(&kept), kept)
    }

    /// Vertices of degree at least `i`.
    pub fn vertices_of_degree_at_least(&self, i: usize) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) >= i).collect()
    }

    /// Returns `(center, a, b, c)` for the lexicographically first induced
    /// K_{1,3}, or `None` when the graph is claw-free.
    pub fn find_claw(&self) -> Option<[VertexId; 4]> {
        for x in self.vertices() {
            let nb = &self.adj[x];
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some([x, a, b, c]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Parses the edge-list format: one `u v` pair per line, `#` starts a
    /// comment. The order is max id + 1, or larger if a `# order: N`
    /// comment line is present.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut order = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let (body, comment) = match raw.find('#') {
                Some(pos) => (&raw[..pos], Some(&raw[pos + 1..])),
                None => (raw, None),
            };
            if let Some(c) = comment {
                if let Some(rest) = c.trim().strip_prefix("order:") {
                    order = order.max(parse_id(rest.trim(), line_no)?);
                }
            }
            let mut tokens = body.split_whitespace();
            let Some(first) = tokens.next() else { continue };
            let u = parse_id(first, line_no)?;
            let v = match tokens.next() {
                Some(t) => parse_id(t, line_no)?,
                None => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected two vertex ids".into(),
                    })
                }
            };
            if tokens.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "trailing tokens after edge".into(),
                });
            }
            if u == v {
                return Err(Error::Validation(format!(
                    "loop at vertex {u} (line {line_no})"
                )));
            }
            order = order.max(u + 1).max(v + 1);
            edges.push((u, v));
        }
        Graph::from_edges(order, edges)
    }

    /// Edge-list text with an `# order: N` header so isolated vertices
    /// survive a round trip.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# order: {}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Decodes one graph6 line. A leading `>>graph6<<` header is accepted.
    pub fn from_graph6(line: &str) -> Result<Self> {
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let bytes = line.as_bytes();
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} out of range 63..=126")));
            }
        }
        let (n, rest) = match bytes {
            [] => return Err(Error::Graph6("empty string".into())),
            [126, 126, ..] => {
                if bytes.len() < 8 {
                    return Err(Error::Graph6("truncated order field".into()));
                }
                let n = bytes[2..8]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                (n, &bytes[8..])
            }
            [126, ..] => {
                if bytes.len() < 4 {
                    return Err(Error::Graph6("truncated order field".into()));
                }
                let n = bytes[1..4]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                (n, &bytes[4..])
            }
            [b, ..] => ((b - 63) as usize, &bytes[1..]),
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if rest.len() != expected {
            return Err(Error::Graph6(format!(
                "expected {expected} data bytes for order {n}, found {}",
                rest.len()
            )));
        }
        let mut edges = Vec::new();
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = rest[k / 6] - 63;
                if byte & (1 << (5 - k % 6)) != 0 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    acc |= 1 << (5 - k % 6);
                }
                k += 1;
                if k.is_multiple_of(6) {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if !k.is_multiple_of(6) {
            out.push(acc + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    /// Accepts either format: a single token line is graph6, anything
    /// else is an edge list.
    pub fn parse_any(text: &str) -> Result<Self> {
        let meaningful: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        match meaningful.as_slice() {
            [single] if !single.contains(char::is_whitespace) => Graph::from_graph6(single),
            _ => Graph::from_edge_list(text),
        }
    }
}

fn parse_id(token: &str, line: usize) -> Result<VertexId> {
    token.parse::<VertexId>().map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not a non-negative integer"),
    })
}

/// Serializable edge-list form of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord {
            n: g.order(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRecord> for Graph {
    type Error = Error;
    fn try_from(r: GraphRecord) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

/// Loop-free digraph. Antiparallel arcs are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiGraph {
    out: Vec<Vec<VertexId>>,
}

impl DiGraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "arc ({u}, {v}) out of range for order {n}"
                )));
            }
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Ok(DiGraph { out })
    }

    /// Same text format as [`Graph::from_edge_list`]; each line `u v` is the
    /// arc u -> v.
    pub fn from_arc_list(text: &str) -> Result<Self> {
        let g_like = Graph::from_edge_list(text)?;
        let n = g_like.order();
        let mut arcs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("");
            let mut t = body.split_whitespace();
            if let (Some(a), Some(b)) = (t.next(), t.next()) {
                arcs.push((parse_id(a, lineno + 1)?, parse_id(b, lineno + 1)?));
            }
        }
        DiGraph::from_arcs(n, arcs)
    }

    /// Both orientations of every edge of `g`.
    pub fn symmetric(g: &Graph) -> Self {
        DiGraph {
            out: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.out[u]
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let c3 = Graph::from_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((c3.order(), c3.size()), (3, 3));
        let empty = Graph::from_edge_list("").unwrap();
        assert_eq!((empty.order(), empty.size()), (0, 0));
        let k2 = Graph::from_edge_list("0 1\n0 1").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
    }

    #[test]
    fn edge_list_errors() {
        match Graph::from_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Graph::from_edge_list("3 3"),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Graph::from_edge_list("1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("-1 2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn edge_list_comments_and_order_header() {
        let g = Graph::from_edge_list("# order: 5\n0 1 # first edge\n\n# nothing\n").unwrap();
        assert_eq!((g.order(), g.size()), (5, 1));
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, back);
    }

    /// Decodes the bit layout by hand and compares against explicit edge lists.
    #[test]
    fn graph6_known_strings() {
        // 'B' = 66 - 63 = 3 vertices; 'w' = 119 - 63 = 0b111000 -> (0,1),(0,2),(1,2)
        let c3 = Graph::from_graph6("Bw").unwrap();
        assert_eq!(c3, Graph::from_edge_list("0 1\n0 2\n1 2").unwrap());
        // 'A' = 2 vertices; '_' = 95 - 63 = 0b100000 -> (0,1)
        let k2 = Graph::from_graph6("A_").unwrap();
        assert_eq!(k2, Graph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(c3.to_graph6(), "Bw");
        assert_eq!(Graph::empty(0).to_graph6(), "?");
        assert_eq!(Graph::from_graph6(">>graph6<<A_").unwrap(), k2);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(Graph::from_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("B "), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("~?"), Err(Error::Graph6(_))));
    }

    #[test]
    fn graph6_large_order_header() {
        let g = Graph::from_edges(70, [(0, 69), (3, 4)]).unwrap();
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn parse_any_detects_format() {
        assert_eq!(Graph::parse_any("Bw\n").unwrap().size(), 3);
        assert_eq!(Graph::parse_any("0 1\n").unwrap().size(), 1);
    }

    #[test]
    fn components_sorted() {
        let g = Graph::from_edges(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        edges.extend((0..7).map(|i| (4 + i, 4 + (i + 1) % 7)));
        let sizes: Vec<usize> = Graph::from_edges(11, edges)
            .unwrap()
            .components()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![4, 7]);
    }

    #[test]
    fn claw_detection() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.find_claw(), Some([0, 1, 2, 3]));
        let bowtie =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(bowtie.is_claw_free());
    }

    #[test]
    fn digraph_arcs() {
        let d = DiGraph::from_arc_list("0 1\n1 0\n1 2").unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0), (1, 2)]);
        assert!(DiGraph::from_arcs(2, [(1, 1)]).is_err());
    }
}
