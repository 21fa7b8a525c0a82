//! Deterministic and seeded test-instance families.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// `{"family": "loose_path", "k": 3, "m": 3, "seed": 0}`. Parameters a
/// family does not use are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn named(family: &str) -> Self {
        FamilySpec {
            family: family.to_string(),
            ..Default::default()
        }
    }

    pub fn loose_path(k: usize, m: usize) -> Self {
        FamilySpec {
            k: Some(k),
            m: Some(m),
            ..Self::named("loose_path")
        }
    }

    pub fn sunflower(k: usize, p: usize) -> Self {
        FamilySpec {
            k: Some(k),
            p: Some(p),
            ..Self::named("sunflower")
        }
    }

    pub fn random_linear(k: usize, n: usize, m: usize, seed: u64) -> Self {
        FamilySpec {
            k: Some(k),
            n: Some(n),
            m: Some(m),
            seed,
            ..Self::named("random_linear")
        }
    }

    fn param(&self, name: &str, value: Option<usize>) -> Result<usize> {
        value.ok_or_else(|| {
            Error::InvalidParameter(format!("family `{}` needs parameter `{name}`", self.family))
        })
    }

    /// The uniformity and linearity the family promises.
    pub fn declared(&self) -> (Option<usize>, bool) {
        match self.family.as_str() {
            "loose_path" | "sunflower" | "random_linear" => (self.k, true),
            "pasch" => (Some(3), true),
            "triangle2" => (Some(2), true),
            _ => (None, false),
        }
    }
}

pub const FAMILIES: [&str; 6] = ["loose_path", "sunflower", "pasch", "triangle2", "fig1", "random_linear"];

pub fn make(spec: &FamilySpec) -> Result<Hypergraph> {
    match spec.family.as_str() {
        "loose_path" => loose_path(spec.param("k", spec.k)?, spec.param("m", spec.m)?),
        "sunflower" => sunflower(spec.param("k", spec.k)?, spec.param("p", spec.p)?),
        "pasch" => Ok(pasch()),
        "triangle2" => Ok(triangle2()),
        "fig1" => Ok(fig1()),
        "random_linear" => random_linear(
            spec.param("k", spec.k)?,
            spec.param("n", spec.n)?,
            spec.param("m", spec.m)?,
            spec.seed,
        ),
        other => Err(Error::InvalidParameter(format!(
            "unknown family `{other}`; expected one of {}",
            FAMILIES.join(", ")
        ))),
    }
}

/// `m` edges of size `k` on vertices `1, 2, ...`, consecutive edges sharing
/// one vertex: `{1..k}, {k..2k-1}, ...`.
pub fn loose_path(k: usize, m: usize) -> Result<Hypergraph> {
    if k < 2 || m == 0 {
        return Err(Error::InfeasibleParameters(format!(
            "loose_path needs k >= 2 and m >= 1, got k = {k}, m = {m}"
        )));
    }
    let n = (k - 1) * m + 1;
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges = (0..m)
        .map(|i| ((k - 1) * i..(k - 1) * i + k).collect())
        .collect();
    Hypergraph::from_indices(vertices, edges, None)
}

/// `p` edges of size `k` through the core vertex `c`; petal `i` holds
/// `a{i}, b{i}, d{i}, ...`.
pub fn sunflower(k: usize, p: usize) -> Result<Hypergraph> {
    const LETTERS: &str = "abdefghijklmnopqrstuvwxyz";
    if k < 2 || p == 0 || k - 1 > LETTERS.len() {
        return Err(Error::InfeasibleParameters(format!(
            "sunflower needs 2 <= k <= {} and p >= 1, got k = {k}, p = {p}",
            LETTERS.len() + 1
        )));
    }
    let mut vertices = vec!["c".to_string()];
    let mut edges = Vec::with_capacity(p);
    for i in 1..=p {
        let mut edge = vec![0];
        for letter in LETTERS.chars().take(k - 1) {
            edge.push(vertices.len());
            vertices.push(format!("{letter}{i}"));
        }
        edges.push(edge);
    }
    Hypergraph::from_indices(vertices, edges, None)
}

/// The four lines of the Pasch configuration.
pub fn pasch() -> Hypergraph {
    Hypergraph::from_edges(&[
        vec!["1", "2", "3"],
        vec!["1", "4", "5"],
        vec!["2", "4", "6"],
        vec!["3", "5", "6"],
    ])
    .expect("static instance")
}

pub fn triangle2() -> Hypergraph {
    Hypergraph::from_edges(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).expect("static instance")
}

/// A reconstruction of the three-edge example with seven vertices:
/// `e = {u, x1, x2, v}`, `f = {x3, u, v}`, `g = {v, w, x4}`. Under
/// `T = {(u,e), (v,e), (u,f), (w,g)}` its skeleton has exactly the eight
/// edges `u–x1, u–x2, u–v, u–x3, v–x1, v–x2, v–w, w–x4`.
pub fn fig1() -> Hypergraph {
    Hypergraph::new(
        &["u", "x1", "x2", "x3", "v", "w", "x4"],
        &[
            vec!["u", "x1", "x2", "v"],
            vec!["x3", "u", "v"],
            vec!["v", "w", "x4"],
        ],
        Some(vec!["e".into(), "f".into(), "g".into()]),
    )
    .expect("static instance")
}

/// Draws random `k`-subsets of `{1..n}` and keeps each one that shares at
/// most one vertex with every edge kept so far, until `m` edges are kept.
pub fn random_linear(k: usize, n: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::InfeasibleParameters(format!(
            "random_linear needs 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let pairs_per_edge = k * (k - 1) / 2;
    let max_edges = (n * (n - 1) / 2).checked_div(pairs_per_edge).unwrap_or(n);
    if m > max_edges {
        return Err(Error::InfeasibleParameters(format!(
            "a linear {k}-uniform hypergraph on {n} vertices has at most {max_edges} edges, asked for {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covered = vec![false; n * n];
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let budget = 200 * m + 1000;
    for _ in 0..budget {
        if edges.len() == m {
            break;
        }
        let mut edge = sample(&mut rng, n, k).into_vec();
        edge.sort_unstable();
        let clash = edge
            .iter()
            .enumerate()
            .any(|(i, &a)| edge[i + 1..].iter().any(|&b| covered[a * n + b]));
        if clash || (k == 1 && covered[edge[0] * n + edge[0]]) {
            continue;
        }
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                covered[a * n + b] = true;
            }
        }
        if k == 1 {
            covered[edge[0] * n + edge[0]] = true;
        }
        edges.push(edge);
    }
    if edges.len() < m {
        return Err(Error::InfeasibleParameters(format!(
            "greedy generation stalled at {} of {m} edges (k = {k}, n = {n}, seed = {seed})",
            edges.len()
        )));
    }
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    Hypergraph::from_indices(vertices, edges, None)
}
