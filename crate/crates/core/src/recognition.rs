//! Recognizing 3-arc graphs: partition certificates, reconstruction of a
//! preimage, small-case search, and the cone embedding of an arbitrary graph.
//!
//! A certificate for G lists singleton classes `v1`, independent classes
//! `v2` of size at least two, and a partition `e` of E(G) into complete
//! bipartite blocks. For X(H) the classes are the out-arc sets A_H(v) and
//! the blocks are the edges of X(H) between A_H(u) and A_H(v) for each edge
//! uv of H with both ends of degree at least two.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::graphs_with_edges_capped;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::iso::{is_isomorphic, is_isomorphism};
use crate::threearc::{three_arc_graph, Arc, LabeledGraph};

pub use crate::generators::cone;

/// Default largest order accepted by [`recognize_small`].
pub const DEFAULT_RECOGNITION_LIMIT: usize = 12;
/// Default cap on candidate preimages per edge count.
pub const DEFAULT_CANDIDATE_CAP: usize = 100_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationCertificate {
    pub v1: Vec<Vec<VertexId>>,
    pub v2: Vec<Vec<VertexId>>,
    pub e: Vec<Vec<(VertexId, VertexId)>>,
}

/// Which requirement a certificate breaks. `EdgePartition` means the
/// blocks of `e` do not cover every edge; it is checked after (a)–(e).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    A,
    B,
    C,
    D,
    E,
    EdgePartition,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A => "(a)",
            Condition::B => "(b)",
            Condition::C => "(c)",
            Condition::D => "(d)",
            Condition::E => "(e)",
            Condition::EdgePartition => "edge partition",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub violation: Option<Violation>,
}

impl CertificateCheck {
    fn fail(condition: Condition, witness: String) -> Self {
        CertificateCheck {
            valid: false,
            violation: Some(Violation { condition, witness }),
        }
    }
}

/// The certificate of X(H) read off from H. Vertex ids refer to
/// `three_arc_graph(h)`.
pub fn derive_certificate(h: &Graph) -> Result<CharacterizationCertificate> {
    if h.size() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let x = three_arc_graph(h);
    Ok(certificate_from(h, &x))
}

fn certificate_from(h: &Graph, x: &LabeledGraph) -> CharacterizationCertificate {
    let out_arcs = |v: VertexId| -> Vec<VertexId> {
        h.neighbors(v)
            .iter()
            .map(|&w| x.index_of(Arc::new(v, w)).expect("arc of H"))
            .collect()
    };
    let mut cert = CharacterizationCertificate::default();
    for v in h.vertices() {
        match h.degree(v) {
            0 => {}
            1 => cert.v1.push(out_arcs(v)),
            _ => cert.v2.push(out_arcs(v)),
        }
    }
    for (u, v) in h.edges() {
        if h.degree(u) < 2 || h.degree(v) < 2 {
            continue;
        }
        let from_v: BTreeSet<VertexId> = out_arcs(v).into_iter().collect();
        let mut block = Vec::new();
        for a in out_arcs(u) {
            for &b in x.graph.neighbors(a) {
                if from_v.contains(&b) {
                    block.push((a.min(b), a.max(b)));
                }
            }
        }
        block.sort_unstable();
        cert.e.push(block);
    }
    cert
}

/// Where each vertex of G sits in the certificate.
struct Layout {
    /// Class index into `v2` for vertices in a `v2` class.
    class_of: Vec<Option<usize>>,
}

fn layout(g: &Graph, cert: &CharacterizationCertificate) -> Result<Layout> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut class_of = vec![None; n];
    let classes = cert
        .v1
        .iter()
        .map(|c| (c, None))
        .chain(cert.v2.iter().enumerate().map(|(i, c)| (c, Some(i))));
    for (class, idx) in classes {
        if class.is_empty() {
            return Err(Error::Validation(
                "certificate has an empty vertex class".into(),
            ));
        }
        for &v in class {
            if v >= n {
                return Err(Error::Validation(format!(
                    "vertex {v} not in graph of order {n}"
                )));
            }
            if seen[v] {
                return Err(Error::Validation(format!(
                    "vertex {v} appears in two classes"
                )));
            }
            seen[v] = true;
            class_of[v] = idx;
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::Validation(format!("vertex {v} is in no class")));
    }
    let mut used = BTreeSet::new();
    for block in &cert.e {
        if block.is_empty() {
            return Err(Error::Validation(
                "certificate has an empty edge block".into(),
            ));
        }
        for &(p, q) in block {
            if p >= n || q >= n || !g.has_edge(p, q) {
                return Err(Error::Validation(format!(
                    "{p}-{q} is not an edge of the graph"
                )));
            }
            if !used.insert((p.min(q), p.max(q))) {
                return Err(Error::Validation(format!(
                    "edge {p}-{q} appears in two blocks"
                )));
            }
        }
    }
    Ok(Layout { class_of })
}

/// One bipartite block resolved against the classes.
struct Block {
    /// The two `v2` classes, smaller index first.
    classes: (usize, usize),
    /// Vertices of the block inside each class.
    parts: (BTreeSet<VertexId>, BTreeSet<VertexId>),
}

impl Block {
    fn vertices(&self) -> BTreeSet<VertexId> {
        self.parts.0.union(&self.parts.1).copied().collect()
    }
}

fn resolve_block(
    cert: &CharacterizationCertificate,
    lay: &Layout,
    i: usize,
) -> std::result::Result<Block, String> {
    let block = &cert.e[i];
    let mut pair = None;
    let mut parts = (BTreeSet::new(), BTreeSet::new());
    for &(p, q) in block {
        let (Some(cp), Some(cq)) = (lay.class_of[p], lay.class_of[q]) else {
            return Err(format!(
                "block {i}: edge {p}-{q} has an end outside the v2 classes"
            ));
        };
        if cp == cq {
            return Err(format!("block {i}: edge {p}-{q} lies inside one class"));
        }
        let (lo, hi) = if cp < cq {
            ((cp, p), (cq, q))
        } else {
            ((cq, q), (cp, p))
        };
        match pair {
            None => pair = Some((lo.0, hi.0)),
            Some(pr) if pr != (lo.0, hi.0) => {
                return Err(format!(
                    "block {i}: edges join more than one pair of classes"
                ))
            }
            _ => {}
        }
        parts.0.insert(lo.1);
        parts.1.insert(hi.1);
    }
    let classes = pair.expect("blocks are non-empty");
    if block.len() != parts.0.len() * parts.1.len() {
        return Err(format!(
            "block {i}: edges do not form a complete bipartite graph"
        ));
    }
    for (part, class) in [(&parts.0, classes.0), (&parts.1, classes.1)] {
        let size = cert.v2[class].len();
        if part.len() + 1 != size {
            return Err(format!(
                "block {i}: part of size {} inside class {class} of size {size}",
                part.len()
            ));
        }
    }
    Ok(Block { classes, parts })
}

/// Checks conditions (a)–(e) in order, then that the blocks cover E(G).
/// Malformed certificates (ids out of range, classes that do not partition
/// V(G), blocks with non-edges or repeated edges) are validation errors.
pub fn verify_certificate(
    g: &Graph,
    cert: &CharacterizationCertificate,
) -> Result<CertificateCheck> {
    let lay = layout(g, cert)?;

    // (a)
    if let Some(c) = cert.v1.iter().find(|c| c.len() != 1) {
        return Ok(CertificateCheck::fail(
            Condition::A,
            format!("v1 class {c:?} is not a singleton"),
        ));
    }
    for c in &cert.v2 {
        if c.len() < 2 {
            return Ok(CertificateCheck::fail(
                Condition::A,
                format!("v2 class {c:?} has fewer than two vertices"),
            ));
        }
        for (i, &p) in c.iter().enumerate() {
            if let Some(&q) = c[i + 1..].iter().find(|&&q| g.has_edge(p, q)) {
                return Ok(CertificateCheck::fail(
                    Condition::A,
                    format!("v2 class {c:?} is not independent: edge {p}-{q}"),
                ));
            }
        }
    }

    // (b)
    let mut blocks = Vec::with_capacity(cert.e.len());
    for i in 0..cert.e.len() {
        match resolve_block(cert, &lay, i) {
            Ok(b) => blocks.push(b),
            Err(w) => return Ok(CertificateCheck::fail(Condition::B, w)),
        }
    }

    // (c)
    let mut count = vec![0usize; g.order()];
    for b in &blocks {
        for v in b.vertices() {
            count[v] += 1;
        }
    }
    for c in &cert.v2 {
        if let Some(&v) = c.iter().find(|&&v| count[v] + 1 > c.len()) {
            return Ok(CertificateCheck::fail(
                Condition::C,
                format!(
                    "vertex {v} lies in {} blocks, class size {}",
                    count[v],
                    c.len()
                ),
            ));
        }
    }

    // (d)
    for (k, c) in cert.v2.iter().enumerate() {
        let class: BTreeSet<VertexId> = c.iter().copied().collect();
        let touching: Vec<usize> = (0..blocks.len())
            .filter(|&i| blocks[i].classes.0 == k || blocks[i].classes.1 == k)
            .collect();
        for (a, &i) in touching.iter().enumerate() {
            for &j in &touching[a + 1..] {
                let common: BTreeSet<VertexId> = blocks[i]
                    .vertices()
                    .intersection(&blocks[j].vertices())
                    .copied()
                    .collect();
                if common.len() + 2 != class.len() || !common.is_subset(&class) {
                    return Ok(CertificateCheck::fail(
                        Condition::D,
                        format!("blocks {i} and {j} share {common:?} within class {c:?}"),
                    ));
                }
            }
        }
    }

    // (e)
    let lhs = 2 * cert.e.len() as i64;
    let rhs = cert.v2.iter().map(|c| c.len() as i64).sum::<i64>() - cert.v1.len() as i64;
    if lhs != rhs {
        return Ok(CertificateCheck::fail(
            Condition::E,
            format!("2|E| = {lhs} but sum |V| - |V1| = {rhs}"),
        ));
    }

    let covered: usize = cert.e.iter().map(Vec::len).sum();
    if covered != g.size() {
        return Ok(CertificateCheck::fail(
            Condition::EdgePartition,
            format!("blocks cover {covered} of {} edges", g.size()),
        ));
    }
    Ok(CertificateCheck {
        valid: true,
        violation: None,
    })
}

/// A preimage H together with an explicit isomorphism from X(H) to G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub h: Graph,
    /// X(H) with its arc labels.
    pub x: LabeledGraph,
    /// `iso[i]` is the vertex of G matched with vertex `i` of X(H).
    pub iso: Vec<VertexId>,
}

/// Builds H from a valid certificate. H has one vertex per class: the `v2`
/// classes first, then the `v1` classes. Each block adds an edge between
/// its two classes, and each `v2` class is topped up to degree |V| with
/// leaves taken from the `v1` classes in order. Leaf neighbours and free
/// class vertices are matched in increasing order.
pub fn construct_h(g: &Graph, cert: &CharacterizationCertificate) -> Result<Reconstruction> {
    let check = verify_certificate(g, cert)?;
    if let Some(v) = check.violation {
        return Err(Error::Precondition(format!(
            "certificate fails {}: {}",
            v.condition, v.witness
        )));
    }
    let lay = layout(g, cert)?;
    let blocks: Vec<Block> = (0..cert.e.len())
        .map(|i| resolve_block(cert, &lay, i).expect("checked above"))
        .collect();
    let k2 = cert.v2.len();
    let k1 = cert.v1.len();

    // Per v2 class: the neighbour class in H and the class vertex left out
    // of the block, for each block touching it.
    let mut hub: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); k2];
    let mut edges = Vec::new();
    for b in &blocks {
        let (cx, cy) = b.classes;
        let missing = |class: usize, part: &BTreeSet<VertexId>| {
            *cert.v2[class]
                .iter()
                .find(|v| !part.contains(v))
                .expect("part is one short")
        };
        hub[cx].push((cy, missing(cx, &b.parts.0)));
        hub[cy].push((cx, missing(cy, &b.parts.1)));
        edges.push((cx, cy));
    }
    let mut next_leaf = 0;
    let mut leaf_links: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); k2];
    for x in 0..k2 {
        let used: BTreeSet<VertexId> = hub[x].iter().map(|&(_, v)| v).collect();
        let mut free: Vec<VertexId> = cert.v2[x]
            .iter()
            .copied()
            .filter(|v| !used.contains(v))
            .collect();
        free.sort_unstable();
        for w in free {
            if next_leaf == k1 {
                return Err(Error::Verification(
                    "ran out of singleton classes for leaves".into(),
                ));
            }
            let leaf = k2 + next_leaf;
            next_leaf += 1;
            edges.push((x, leaf));
            leaf_links[x].push((leaf, w));
        }
    }
    if next_leaf != k1 {
        return Err(Error::Verification(format!(
            "{} singleton classes left unused",
            k1 - next_leaf
        )));
    }
    let h = Graph::from_edges(k2 + k1, edges)?;
    let x = three_arc_graph(&h);
    let mut iso = vec![usize::MAX; x.graph.order()];
    let mut place = |a: Arc, v: VertexId| -> Result<()> {
        let i = x
            .index_of(a)
            .ok_or_else(|| Error::Verification(format!("arc {a} missing from X(H)")))?;
        iso[i] = v;
        Ok(())
    };
    for cls in 0..k2 {
        for &(other, v) in &hub[cls] {
            place(Arc::new(cls, other), v)?;
        }
        for &(leaf, w) in &leaf_links[cls] {
            place(Arc::new(cls, leaf), w)?;
            place(Arc::new(leaf, cls), cert.v1[leaf - k2][0])?;
        }
    }
    if iso.contains(&usize::MAX) || !is_isomorphism(&x.graph, g, &iso) {
        return Err(Error::Verification(
            "the reconstructed arc map is not an isomorphism from X(H) onto G".into(),
        ));
    }
    Ok(Reconstruction { h, x, iso })
}

/// Outcome of the small-case preimage search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub h: Graph,
    /// `iso[i]` is the vertex of G matched with vertex `i` of X(H).
    pub iso: Vec<VertexId>,
    /// Certificate of H carried over to the vertex ids of G.
    pub certificate: CharacterizationCertificate,
    pub candidates_examined: usize,
    /// Pairwise non-isomorphic graphs without isolated vertices whose
    /// 3-arc graph is isomorphic to G. More than one means H is not unique.
    pub preimages: usize,
}

/// Searches for H with X(H) ≅ G among graphs with |V(G)|/2 edges and no
/// isolated vertices, connected candidates first, then by order.
/// The whole candidate list is scanned so that non-unique preimages are
/// counted. `Ok(None)` means no preimage exists: the search is exhaustive.
pub fn recognize_small(
    g: &Graph,
    limit: usize,
    candidate_cap: usize,
) -> Result<Option<Recognition>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Validation("graph is empty".into()));
    }
    if n % 2 == 1 {
        return Err(Error::Validation(format!(
            "order {n} is odd, but arcs come in pairs"
        )));
    }
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "order {n} exceeds recognition limit {limit}"
        )));
    }
    let mut candidates = graphs_with_edges_capped(n / 2, candidate_cap)?;
    candidates.sort_by_key(|h| (!h.is_connected(), h.order()));

    let mut target_degrees = g.degree_sequence();
    target_degrees.sort_unstable();
    let mut found: Option<Recognition> = None;
    for h in &candidates {
        let x_edges: usize = h
            .edges()
            .map(|(u, v)| (h.degree(u) - 1) * (h.degree(v) - 1))
            .sum();
        if x_edges != g.size() {
            continue;
        }
        let x = three_arc_graph(h);
        let mut degrees = x.graph.degree_sequence();
        degrees.sort_unstable();
        if degrees != target_degrees {
            continue;
        }
        let Some(iso) = is_isomorphic(&x.graph, g)? else {
            continue;
        };
        if let Some(r) = found.as_mut() {
            r.preimages += 1;
            continue;
        }
        let local = certificate_from(h, &x);
        let map_class = |c: &Vec<VertexId>| c.iter().map(|&i| iso[i]).collect();
        let certificate = CharacterizationCertificate {
            v1: local.v1.iter().map(map_class).collect(),
            v2: local.v2.iter().map(map_class).collect(),
            e: local
                .e
                .iter()
                .map(|b| {
                    let mut block: Vec<_> = b
                        .iter()
                        .map(|&(p, q)| (iso[p].min(iso[q]), iso[p].max(iso[q])))
                        .collect();
                    block.sort_unstable();
                    block
                })
                .collect(),
        };
        found = Some(Recognition {
            h: h.clone(),
            iso,
            certificate,
            candidates_examined: 0,
            preimages: 1,
        });
    }
    Ok(found.map(|r| Recognition {
        candidates_examined: candidates.len(),
        ..r
    }))
}

/// Result of checking that H sits inside X(cone(H)) as the arcs into the apex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEmbedding {
    pub holds: bool,
    /// `arc_index[v]` is the vertex of X(cone(H)) for the arc v -> apex.
    pub arc_index: Vec<VertexId>,
    /// First pair whose adjacency differs, if any.
    pub mismatch: Option<(VertexId, VertexId)>,
}

pub fn embed_in_cone_check(h: &Graph) -> ConeEmbedding {
    let n = h.order();
    let star = cone(h);
    let x = three_arc_graph(&star);
    let arc_index: Vec<VertexId> = (0..n)
        .map(|v| x.index_of(Arc::new(v, n)).expect("apex is universal"))
        .collect();
    let mismatch = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| h.has_edge(u, v) != x.graph.has_edge(arc_index[u], arc_index[v]));
    ConeEmbedding {
        holds: mismatch.is_none(),
        arc_index,
        mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, copies, cycle, path, petersen, star};

    #[test]
    fn cone_examples() {
        assert!(is_isomorphic(&cone(&Graph::empty(3)), &star(3))
            .unwrap()
            .is_some());
        assert_eq!(cone(&cycle(4)).degree(4), 4);
        assert!(is_isomorphic(&cone(&complete(3)), &complete(4))
            .unwrap()
            .is_some());
    }

    #[test]
    fn cone_embedding_examples() {
        for h in [path(3), Graph::empty(5), petersen(), Graph::empty(0)] {
            assert!(embed_in_cone_check(&h).holds);
        }
    }

    #[test]
    fn derived_certificates() {
        let c = derive_certificate(&cycle(3)).unwrap();
        assert!(c.v1.is_empty());
        assert_eq!(c.v2.len(), 3);
        assert!(c.v2.iter().all(|v| v.len() == 2));
        assert_eq!(c.e.len(), 3);
        assert!(c.e.iter().all(|b| b.len() == 1));

        let c = derive_certificate(&star(3)).unwrap();
        assert_eq!((c.v1.len(), c.v2.len(), c.e.len()), (3, 1, 0));
        assert_eq!(c.v2[0].len(), 3);

        let c = derive_certificate(&path(4)).unwrap();
        assert_eq!((c.v1.len(), c.v2.len(), c.e.len()), (2, 2, 1));

        assert!(matches!(
            derive_certificate(&Graph::empty(3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn verification_examples() {
        for h in [cycle(3), path(4), star(3), complete(4), petersen()] {
            let x = three_arc_graph(&h);
            let check = verify_certificate(&x.graph, &derive_certificate(&h).unwrap()).unwrap();
            assert!(check.valid, "{:?}", check.violation);
        }

        let c4 = cycle(4);
        let cert = CharacterizationCertificate {
            v1: (0..4).map(|v| vec![v]).collect(),
            ..Default::default()
        };
        let check = verify_certificate(&c4, &cert).unwrap();
        assert_eq!(check.violation.unwrap().condition, Condition::E);

        let p4 = path(4);
        let x = three_arc_graph(&p4);
        let mut cert = derive_certificate(&p4).unwrap();
        let pair = cert.v2.remove(0);
        cert.v1.push(pair);
        let check = verify_certificate(&x.graph, &cert).unwrap();
        assert_eq!(check.violation.unwrap().condition, Condition::A);
    }

    #[test]
    fn malformed_certificates() {
        let g = cycle(4);
        let dup = CharacterizationCertificate {
            v1: vec![vec![0], vec![0], vec![1], vec![2], vec![3]],
            ..Default::default()
        };
        assert!(matches!(
            verify_certificate(&g, &dup),
            Err(Error::Validation(_))
        ));
        let missing = CharacterizationCertificate {
            v1: vec![vec![0], vec![1]],
            ..Default::default()
        };
        assert!(matches!(
            verify_certificate(&g, &missing),
            Err(Error::Validation(_))
        ));
        let non_edge = CharacterizationCertificate {
            v1: (0..4).map(|v| vec![v]).collect(),
            e: vec![vec![(0, 2)]],
            ..Default::default()
        };
        assert!(matches!(
            verify_certificate(&g, &non_edge),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn x_of_k2_admits_no_certificate() {
        // X(K2) is two isolated vertices; neither possible partition balances (e).
        let x = three_arc_graph(&path(2));
        let singles = CharacterizationCertificate {
            v1: vec![vec![0], vec![1]],
            ..Default::default()
        };
        let pair = CharacterizationCertificate {
            v2: vec![vec![0, 1]],
            ..Default::default()
        };
        for cert in [singles, pair] {
            let check = verify_certificate(&x.graph, &cert).unwrap();
            assert_eq!(check.violation.unwrap().condition, Condition::E);
        }
    }

    #[test]
    fn conditions_do_not_force_a_preimage() {
        // Two disjoint edges pass (a)-(e) with two blocks on the same pair of
        // classes, yet no graph has 2K2 as its 3-arc graph.
        let g = copies(&path(2), 2);
        let cert = CharacterizationCertificate {
            v1: vec![],
            v2: vec![vec![0, 2], vec![1, 3]],
            e: vec![vec![(0, 1)], vec![(2, 3)]],
        };
        assert!(verify_certificate(&g, &cert).unwrap().valid);
        assert!(matches!(
            construct_h(&g, &cert),
            Err(Error::Verification(_))
        ));
        assert_eq!(
            recognize_small(&g, 12, DEFAULT_CANDIDATE_CAP).unwrap(),
            None
        );
    }

    #[test]
    fn reconstruction_round_trips() {
        for h in [cycle(3), path(4), complete(4), star(3), cycle(5)] {
            let x = three_arc_graph(&h);
            let cert = derive_certificate(&h).unwrap();
            let r = construct_h(&x.graph, &cert).unwrap();
            assert!(is_isomorphism(&r.x.graph, &x.graph, &r.iso));
            if h.size() <= 6 {
                assert!(is_isomorphic(&r.h, &h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn recognition_examples() {
        let found = recognize_small(&copies(&path(2), 3), 12, DEFAULT_CANDIDATE_CAP)
            .unwrap()
            .unwrap();
        assert!(is_isomorphic(&found.h, &cycle(3)).unwrap().is_some());
        let g = copies(&path(2), 3);
        assert!(verify_certificate(&g, &found.certificate).unwrap().valid);

        let found = recognize_small(&Graph::empty(6), 12, DEFAULT_CANDIDATE_CAP)
            .unwrap()
            .unwrap();
        assert!(is_isomorphic(&found.h, &star(3)).unwrap().is_some());
        // K13, P3 + K2 and 3K2 all have edgeless 3-arc graphs.
        assert_eq!(found.preimages, 3);

        assert!(matches!(
            recognize_small(&complete(3), 12, 10),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            recognize_small(&Graph::empty(14), 12, 10),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            recognize_small(&Graph::empty(0), 12, 10),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            recognize_small(&Graph::empty(12), 12, 3),
            Err(Error::ResourceLimit(_))
        ));
    }
}
