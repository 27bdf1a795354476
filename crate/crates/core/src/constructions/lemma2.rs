//! Restricted domination of V₁, V₂ and V₃ through auxiliary graphs.

use serde::{Deserialize, Serialize};

use super::membership;
use crate::domination::{gamma_exact, is_dominating, vi_set, DominationCertificate, TargetSet};
use crate::enumerate::family_a_index;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRecord, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2aOutcome {
    pub certificate: DominationCertificate,
    /// Every component is C₄ or a corona, which is exactly when the size is n/2.
    pub tight: bool,
}

/// Minimum (G : V₁(G))-dominating set, solved on G minus its isolated vertices.
pub fn lemma2a_construct(g: &Graph) -> Result<Lemma2aOutcome> {
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    let (h, back) = g.remove_vertices(&isolated);
    let cert = gamma_exact(&h, None)?;
    let vertices = cert.vertices.iter().map(|&i| back[i]).collect();
    let certificate = DominationCertificate::new(vertices, vi_set(g, 1), cert.optimal);
    let tight = g.components().iter().all(|c| {
        let r = g.induced_subgraph(c);
        is_c4(&r) || is_corona(&r)
    });
    Ok(Lemma2aOutcome { certificate, tight })
}

fn is_c4(r: &Graph) -> bool {
    r.order() == 4 && r.size() == 4 && r.vertices().all(|v| r.degree(v) == 2)
}

/// Connected H ∘ K₁: half the vertices are leaves, and each non-leaf has
/// its own leaf. K₂ counts, with either end as the leaf.
fn is_corona(r: &Graph) -> bool {
    let n = r.order();
    if n == 2 {
        return r.size() == 1;
    }
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let leaves: Vec<VertexId> = r.vertices().filter(|&v| r.degree(v) == 1).collect();
    if leaves.len() != n / 2 {
        return false;
    }
    let mut owner = vec![false; n];
    for &l in &leaves {
        let c = r.neighbors(l)[0];
        if r.degree(c) == 1 || owner[c] {
            return false;
        }
        owner[c] = true;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuxKind {
    Lemma2b,
    Lemma2c,
}

/// The auxiliary graph J. Vertex `i < base.len()` of J is vertex `base[i]`
/// of G; gadget vertices come after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryJ {
    pub kind: AuxKind,
    pub graph: GraphRecord,
    pub base: Vec<VertexId>,
    /// W, in G ids.
    pub w: Vec<VertexId>,
    /// Edges of J absent from G, in J ids.
    pub added_edges: Vec<(VertexId, VertexId)>,
    /// Gadget vertices, in J ids.
    pub gadget: Vec<VertexId>,
}

/// Size of the part of D inside one component of J.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBound {
    pub order: usize,
    pub size: usize,
    pub in_family_a: bool,
}

impl ComponentBound {
    /// |D_j| ≤ 2r_j/5, with family members allowed 1 (order 4) or 2 (order 7).
    pub fn within_bound(&self) -> bool {
        if self.in_family_a {
            self.size <= if self.order == 4 { 1 } else { 2 }
        } else {
            5 * self.size <= 2 * self.order
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2bOutcome {
    pub certificate: DominationCertificate,
    pub aux: AuxiliaryJ,
    pub components: Vec<ComponentBound>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2cOutcome {
    pub certificate: DominationCertificate,
    pub aux: AuxiliaryJ,
}

/// Base of J: G[V_i ∪ W] with W = N(V_i) − V_i.
struct Base {
    vi: Vec<VertexId>,
    w: Vec<VertexId>,
    verts: Vec<VertexId>,
    index: Vec<usize>,
}

fn base(g: &Graph, i: usize) -> Base {
    let in_vi = membership(g.order(), &g.vertices_of_degree_at_least(i));
    let vi: Vec<VertexId> = g.vertices().filter(|&v| in_vi[v]).collect();
    let w: Vec<VertexId> = g
        .vertices()
        .filter(|&v| !in_vi[v] && g.neighbors(v).iter().any(|&c| in_vi[c]))
        .collect();
    let mut verts: Vec<VertexId> = vi.iter().chain(&w).copied().collect();
    verts.sort_unstable();
    let mut index = vec![usize::MAX; g.order()];
    for (j, &v) in verts.iter().enumerate() {
        index[v] = j;
    }
    Base {
        vi,
        w,
        verts,
        index,
    }
}

/// (G : V₂(G))-dominating set of size at most 2n/5 when no component of G
/// belongs to the exceptional family.
///
/// W = N(V₂) − V₂ consists of leaves. J is G[V₂ ∪ W] with W joined into a
/// path, or with a single leaf x₁ joined to another neighbour of its
/// support vertex x₁′. Each component of J is solved exactly for its V₂(G)
/// vertices; a pick of x₁ is then moved to x₁′.
pub fn lemma2b_construct(g: &Graph) -> Result<Lemma2bOutcome> {
    for comp in g.components() {
        if let Some(idx) = family_a_index(&g.induced_subgraph(&comp)) {
            return Err(Error::Precondition(format!(
                "component {comp:?} is isomorphic to family member {idx}"
            )));
        }
    }
    let b = base(g, 2);
    let jn = b.verts.len();
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .filter(|&(p, q)| b.index[p] != usize::MAX && b.index[q] != usize::MAX)
        .map(|(p, q)| (b.index[p], b.index[q]))
        .collect();
    let mut added = Vec::new();
    let mut single = None;
    match b.w.len() {
        0 => {}
        1 => {
            let x1 = b.w[0];
            let support = g.neighbors(x1)[0];
            let y = *g
                .neighbors(support)
                .iter()
                .find(|&&c| c != x1)
                .expect("support vertex has degree at least 2");
            added.push((b.index[x1], b.index[y]));
            single = Some((x1, support));
        }
        _ => added.extend(b.w.windows(2).map(|p| (b.index[p[0]], b.index[p[1]]))),
    }
    edges.extend(added.iter().copied());
    let j = Graph::from_edges(jn, edges)?;

    let in_v2 = membership(g.order(), &b.vi);
    let mut d = Vec::new();
    let mut components = Vec::new();
    for comp in j.components() {
        let r = j.induced_subgraph(&comp);
        let target = TargetSet::new(
            (0..comp.len())
                .filter(|&k| in_v2[b.verts[comp[k]]])
                .collect(),
        );
        let cert = gamma_exact(&r, Some(&target))?;
        components.push(ComponentBound {
            order: comp.len(),
            size: cert.size,
            in_family_a: family_a_index(&r).is_some(),
        });
        d.extend(cert.vertices.iter().map(|&k| b.verts[comp[k]]));
    }
    if let Some((x1, support)) = single {
        for v in d.iter_mut().filter(|v| **v == x1) {
            *v = support;
        }
    }
    let certificate = finish(g, d, 2, "V2 restricted")?;
    let aux = AuxiliaryJ {
        kind: AuxKind::Lemma2b,
        graph: GraphRecord::from(&j),
        base: b.verts,
        w: b.w,
        added_edges: added,
        gadget: Vec::new(),
    };
    Ok(Lemma2bOutcome {
        certificate,
        aux,
        components,
    })
}

/// (G : V₃(G))-dominating set of size at most 3(n+2)/8.
///
/// W = N(V₃) − V₃ induces a matching plus isolated vertices. J is
/// G[V₃ ∪ W] with W closed into a cycle (matched pairs adjacent), or with
/// a two-vertex gadget when |W| ≤ 2, so that δ(J) ≥ 3. A minimum
/// dominating set of J has any gadget vertices replaced by x₁.
pub fn lemma2c_construct(g: &Graph) -> Result<Lemma2cOutcome> {
    let b = base(g, 3);
    let base_n = b.verts.len();
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .filter(|&(p, q)| b.index[p] != usize::MAX && b.index[q] != usize::MAX)
        .map(|(p, q)| (b.index[p], b.index[q]))
        .collect();
    let mut added = Vec::new();
    let mut gadget = Vec::new();
    let l = b.w.len();
    match l {
        0 => {}
        1 | 2 => {
            let (u1, u2) = (base_n, base_n + 1);
            gadget = vec![u1, u2];
            let x1 = b.index[b.w[0]];
            if l == 1 {
                let in_v3 = membership(g.order(), &b.vi);
                let x1p = *g
                    .neighbors(b.w[0])
                    .iter()
                    .find(|&&c| in_v3[c])
                    .expect("W vertex has a neighbour of degree at least 3");
                let x1p = b.index[x1p];
                added = vec![(u1, u2), (x1, u1), (x1, u2), (u1, x1p), (u2, x1p)];
            } else {
                let x2 = b.index[b.w[1]];
                added = vec![(u1, u2), (x1, u1), (x1, u2), (x2, u1), (x2, u2)];
                if !g.has_edge(b.w[0], b.w[1]) {
                    added.push((x1, x2));
                }
            }
        }
        _ => {
            let mut order: Vec<VertexId> = Vec::with_capacity(l);
            let in_w = membership(g.order(), &b.w);
            let mut placed = vec![false; g.order()];
            for &w in &b.w {
                if placed[w] {
                    continue;
                }
                placed[w] = true;
                order.push(w);
                if let Some(&mate) = g.neighbors(w).iter().find(|&&c| in_w[c]) {
                    placed[mate] = true;
                    order.push(mate);
                }
            }
            for k in 0..l {
                let (p, q) = (order[k], order[(k + 1) % l]);
                if !g.has_edge(p, q) {
                    added.push((b.index[p], b.index[q]));
                }
            }
        }
    }
    edges.extend(added.iter().copied());
    let j = Graph::from_edges(base_n + gadget.len(), edges)?;
    debug_assert!(j.order() == 0 || j.min_degree() >= 3);

    let cert = gamma_exact(&j, None)?;
    let mut d: Vec<VertexId> = Vec::new();
    let mut used_gadget = false;
    for &v in &cert.vertices {
        if v < base_n {
            d.push(b.verts[v]);
        } else {
            used_gadget = true;
        }
    }
    if used_gadget {
        d.push(b.w[0]);
    }
    let certificate = finish(g, d, 3, "V3 restricted")?;
    let aux = AuxiliaryJ {
        kind: AuxKind::Lemma2c,
        graph: GraphRecord::from(&j),
        base: b.verts,
        w: b.w,
        added_edges: added,
        gadget,
    };
    Ok(Lemma2cOutcome { certificate, aux })
}

fn finish(g: &Graph, d: Vec<VertexId>, i: usize, what: &str) -> Result<DominationCertificate> {
    let certificate = DominationCertificate::new(d, vi_set(g, i), false);
    if !is_dominating(g, &certificate.vertices, &certificate.target) {
        return Err(Error::Verification(format!(
            "{what} set fails to dominate V{i}"
        )));
    }
    Ok(certificate)
}
