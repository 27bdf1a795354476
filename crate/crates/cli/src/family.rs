//! Family specs for benchmark campaigns.
//!
//! Grammar: `name` or `name:key=value,key=value`, where a value is a single
//! integer or an inclusive range `a..b`. Ranged keys expand to every
//! combination, in key order. Random families take `count` and derive the
//! seed of item `i` as `base seed + i`; the seed is part of the row id.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use threearc::enumerate::connected_with_min_degree;
use threearc::generators::{generate, gnp, line_graph, GraphFamilySpec, MAX_RANDOM_ATTEMPTS};
use threearc::{Error, Graph, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    params: BTreeMap<String, RangeInclusive<usize>>,
}

/// One corpus item: a stable id, the seed it was drawn with (if random)
/// and the graph.
#[derive(Clone, Debug)]
pub struct Item {
    pub id: String,
    pub seed: Option<u64>,
    pub graph: Graph,
}

const FAMILIES: &[(&str, &[&str])] = &[
    ("cycle", &["n"]),
    ("path", &["n"]),
    ("complete", &["n"]),
    ("star", &["k"]),
    ("wheel", &["n"]),
    ("friendship", &["k"]),
    ("two-cliques", &["s", "t"]),
    ("complete-bipartite", &["a", "b"]),
    ("petersen", &[]),
    ("connected-min-degree", &["n", "delta"]),
    ("random-min-degree", &["n", "delta", "count"]),
    ("line-random", &["n", "count"]),
];

fn parse_range(key: &str, text: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{key}={text}`: `{s}` is not a number"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("`{key}={text}`: empty range"));
            }
            Ok(a..=b)
        }
        None => {
            let v = num(text)?;
            Ok(v..=v)
        }
    }
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let Some((_, keys)) = FAMILIES.iter().find(|(f, _)| *f == name) else {
            let known: Vec<&str> = FAMILIES.iter().map(|(f, _)| *f).collect();
            return Err(format!(
                "unknown family `{name}`; known: {}",
                known.join(", ")
            ));
        };
        let mut params = BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("`{part}` is not key=value"))?;
            let k = k.trim();
            if !keys.contains(&k) {
                return Err(format!("family `{name}` has no parameter `{k}`"));
            }
            params.insert(k.to_string(), parse_range(k, v)?);
        }
        if let Some(missing) = keys.iter().find(|k| !params.contains_key(**k)) {
            return Err(format!("family `{name}` needs `{missing}`"));
        }
        Ok(FamilySpec {
            name: name.to_string(),
            params,
        })
    }
}

impl FamilySpec {
    fn range(&self, key: &str) -> RangeInclusive<usize> {
        self.params[key].clone()
    }

    /// Parameter combinations in key order.
    fn grid(&self) -> Vec<Vec<(String, usize)>> {
        let mut out = vec![Vec::new()];
        for (k, r) in &self.params {
            if k == "count" {
                continue;
            }
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    r.clone().map(move |v| {
                        let mut p = prefix.clone();
                        p.push((k.clone(), v));
                        p
                    })
                })
                .collect();
        }
        out
    }

    pub fn items(&self, seed: u64) -> Result<Vec<Item>> {
        let mut items = Vec::new();
        match self.name.as_str() {
            "connected-min-degree" => {
                for combo in self.grid() {
                    let get =
                        |key: &str| combo.iter().find(|(k, _)| k == key).map(|p| p.1).unwrap();
                    let (n, delta) = (get("n"), get("delta"));
                    for (i, g) in connected_with_min_degree(n, delta)?.into_iter().enumerate() {
                        items.push(Item {
                            id: format!("connected-min-degree(n={n},delta={delta})#{i}"),
                            seed: None,
                            graph: g,
                        });
                    }
                }
            }
            "random-min-degree" => {
                let mut next = seed;
                for combo in self.grid() {
                    let get =
                        |key: &str| combo.iter().find(|(k, _)| k == key).map(|p| p.1).unwrap();
                    let (n, delta) = (get("n"), get("delta"));
                    for _ in 0..*self.range("count").end() {
                        let spec = GraphFamilySpec::RandomMinDegree {
                            n,
                            min_degree: delta,
                            seed: next,
                        };
                        items.push(Item {
                            id: format!("random-min-degree(n={n},delta={delta},seed={next})"),
                            seed: Some(next),
                            graph: generate(&spec)?,
                        });
                        next = next.wrapping_add(1);
                    }
                }
            }
            "line-random" => {
                let orders = self.range("n");
                let count = *self.range("count").end();
                for i in 0..count {
                    let s = seed.wrapping_add(i as u64);
                    items.push(Item {
                        id: format!(
                            "line-random(n={}..{},seed={s})",
                            orders.start(),
                            orders.end()
                        ),
                        seed: Some(s),
                        graph: line_sample(&orders, s)?,
                    });
                }
            }
            _ => {
                for combo in self.grid() {
                    let get =
                        |key: &str| combo.iter().find(|(k, _)| k == key).map(|p| p.1).unwrap();
                    let spec = match self.name.as_str() {
                        "cycle" => GraphFamilySpec::Cycle { n: get("n") },
                        "path" => GraphFamilySpec::Path { n: get("n") },
                        "complete" => GraphFamilySpec::Complete { n: get("n") },
                        "star" => GraphFamilySpec::CompleteBipartite { a: 1, b: get("k") },
                        "wheel" => GraphFamilySpec::Cone {
                            base: Box::new(GraphFamilySpec::Cycle { n: get("n") }),
                        },
                        "friendship" => GraphFamilySpec::Friendship { k: get("k") },
                        "two-cliques" => GraphFamilySpec::TwoCliques {
                            s: get("s"),
                            t: get("t"),
                        },
                        "complete-bipartite" => GraphFamilySpec::CompleteBipartite {
                            a: get("a"),
                            b: get("b"),
                        },
                        "petersen" => GraphFamilySpec::Petersen,
                        other => unreachable!("family `{other}` is validated on parse"),
                    };
                    let args: Vec<String> = combo.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let id = if args.is_empty() {
                        self.name.clone()
                    } else {
                        format!("{}({})", self.name, args.join(","))
                    };
                    items.push(Item {
                        id,
                        seed: None,
                        graph: generate(&spec)?,
                    });
                }
            }
        }
        Ok(items)
    }
}

/// Connected line graph of a random graph whose order lies in `orders`.
/// Line graphs are claw-free.
fn line_sample(orders: &RangeInclusive<usize>, seed: u64) -> Result<Graph> {
    if *orders.start() == 0 {
        return Err(Error::Validation("line-random needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RANDOM_ATTEMPTS {
        let m = rng.gen_range(orders.clone());
        let n = rng.gen_range(2..=m + 1);
        let base = gnp(n, rng.gen_range(0.2..0.9), &mut rng);
        if base.size() != m {
            continue;
        }
        let l = line_graph(&base);
        if l.order() > 0 && l.is_connected() {
            return Ok(l);
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_RANDOM_ATTEMPTS,
    })
}
