//! Graph families used as fixtures and corpora.
//!
//! Labeling conventions:
//! - cycle, path: `i ~ i+1`
//! - friendship(k): center 0, triangle i on `{0, 2i+1, 2i+2}`
//! - corona(H): leaf of `x` is `n + x`
//! - cone(H): apex is `n` (the highest id)
//! - two-cliques(s, t): K_s on `0..s`, K_t on `s-1..s+t-1`, shared vertex `s-1`
//! - complete-bipartite(a, b): parts `0..a` and `a..a+b`

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on rejection-sampling attempts for random graphs.
pub const MAX_RANDOM_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GraphFamilySpec {
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Friendship {
        k: usize,
    },
    Corona {
        base: Box<GraphFamilySpec>,
    },
    Cone {
        base: Box<GraphFamilySpec>,
    },
    TwoCliques {
        s: usize,
        t: usize,
    },
    Petersen,
    /// Connected G(n, p) sample with minimum degree at least `min_degree`.
    RandomMinDegree {
        n: usize,
        min_degree: usize,
        seed: u64,
    },
}

pub fn generate(spec: &GraphFamilySpec) -> Result<Graph> {
    use GraphFamilySpec::*;
    match spec {
        Cycle { n } => {
            if *n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(cycle(*n))
        }
        Path { n } => Ok(path(*n)),
        Complete { n } => Ok(complete(*n)),
        CompleteBipartite { a, b } => Ok(complete_bipartite(*a, *b)),
        Friendship { k } => {
            if *k < 1 {
                return Err(invalid("friendship needs k >= 1".into()));
            }
            Ok(friendship(*k))
        }
        Corona { base } => Ok(corona(&generate(base)?)),
        Cone { base } => Ok(cone(&generate(base)?)),
        TwoCliques { s, t } => {
            if *s < 2 || *t < 2 {
                return Err(invalid(format!(
                    "two-cliques needs s, t >= 2, got ({s}, {t})"
                )));
            }
            Ok(two_cliques(*s, *t))
        }
        Petersen => Ok(petersen()),
        RandomMinDegree {
            n,
            min_degree,
            seed,
        } => random_min_degree(*n, *min_degree, *seed),
    }
}

fn invalid(msg: String) -> Error {
    Error::Validation(msg)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_unchecked(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Star K_{1,k} with center 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

pub fn friendship(k: usize) -> Graph {
    let edges = (0..k).flat_map(|i| {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        [(0, a), (0, b), (a, b)]
    });
    Graph::from_edges_unchecked(2 * k + 1, edges)
}

/// H ∘ K1: one pendant leaf per vertex.
pub fn corona(h: &Graph) -> Graph {
    let n = h.order();
    let edges = h.edges().chain((0..n).map(|x| (x, n + x)));
    Graph::from_edges_unchecked(2 * n, edges)
}

/// H plus a universal apex with id `n`.
pub fn cone(h: &Graph) -> Graph {
    let n = h.order();
    let edges = h.edges().chain((0..n).map(|x| (x, n)));
    Graph::from_edges_unchecked(n + 1, edges)
}

/// K_s and K_t glued at one vertex.
pub fn two_cliques(s: usize, t: usize) -> Graph {
    assert!(s >= 1 && t >= 1);
    let first = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j)));
    let base = s - 1;
    let second = (0..t).flat_map(move |i| (i + 1..t).map(move |j| (base + i, base + j)));
    Graph::from_edges_unchecked(s + t - 1, first.chain(second))
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges_unchecked(10, outer.chain(inner).chain(spokes))
}

/// Disjoint union; the vertices of `b` are shifted by `a.order()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.order();
    let edges = a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off)));
    Graph::from_edges_unchecked(a.order() + b.order(), edges)
}

/// `copies` disjoint copies of `g`.
pub fn copies(g: &Graph, copies: usize) -> Graph {
    (0..copies).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

/// Line graph; vertex `i` is the i-th edge of `g` in [`Graph::edges`] order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges_unchecked(edges.len(), out)
}

/// Uniform G(n, p) sample.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Rejection sampling over G(n, p) until the sample is connected with
/// δ ≥ `min_degree`. The edge probability targets mean degree
/// `min_degree + 2`.
pub fn random_min_degree(n: usize, min_degree: usize, seed: u64) -> Result<Graph> {
    if n == 0 || min_degree >= n {
        return Err(invalid(format!(
            "cannot reach min degree {min_degree} on {n} vertices"
        )));
    }
    let p = if n == 1 {
        0.0
    } else {
        ((min_degree + 2) as f64 / (n - 1) as f64).min(1.0)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RANDOM_ATTEMPTS {
        let g = gnp(n, p, &mut rng);
        if g.is_connected() && g.min_degree() >= min_degree {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_RANDOM_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn friendship_shape() {
        let g = friendship(2);
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 4).count(), 1);
        for k in 2..6 {
            let g = friendship(k);
            assert_eq!(g.vertices().filter(|&v| g.degree(v) == 2 * k).count(), 1);
        }
    }

    #[test]
    fn corona_of_triangle() {
        let g = corona(&cycle(3));
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), 3);
    }

    #[test]
    fn two_cliques_is_bowtie() {
        let g = two_cliques(3, 3);
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(g.degree(2), 4);
        let g = two_cliques(4, 5);
        assert_eq!((g.order(), g.size()), (8, 6 + 10));
    }

    #[test]
    fn cone_apex_is_highest() {
        let w4 = cone(&cycle(4));
        assert_eq!(w4.degree(4), 4);
        assert_eq!(cone(&Graph::empty(3)), star(3).relabel_center_last());
    }

    #[test]
    fn parameter_validation() {
        assert!(generate(&GraphFamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&GraphFamilySpec::TwoCliques { s: 1, t: 3 }).is_err());
        assert!(generate(&GraphFamilySpec::Friendship { k: 0 }).is_err());
        assert!(matches!(
            random_min_degree(4, 4, 1),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn random_min_degree_respects_floor() {
        for seed in 0..20 {
            let g = random_min_degree(8, 2, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.min_degree() >= 2);
        }
        assert_eq!(
            random_min_degree(8, 3, 7).unwrap(),
            random_min_degree(8, 3, 7).unwrap()
        );
    }

    #[test]
    fn nested_spec_serde() {
        let spec = GraphFamilySpec::Corona {
            base: Box::new(GraphFamilySpec::Cycle { n: 3 }),
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: GraphFamilySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(generate(&back).unwrap().order(), 6);
    }

    trait CenterLast {
        fn relabel_center_last(&self) -> Graph;
    }

    impl CenterLast for Graph {
        fn relabel_center_last(&self) -> Graph {
            let n = self.order();
            Graph::from_edges(
                n,
                self.edges()
                    .map(|(u, v)| ((u + n - 1) % n, (v + n - 1) % n)),
            )
            .unwrap()
        }
    }
}
