//! Skeleton graphs generated by incidence sets, the canonical generator
//! obtained from β-path reachability, and witness extraction.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use crate::beta::{for_each_beta_path, reduce_paths_to_cycle, BetaSequence};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A set `T` of incidences `(vertex, edge)`. Canonical generators also carry
/// the root chosen for each component and one witnessing β-path per pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    pairs: BTreeSet<(usize, usize)>,
    roots: BTreeMap<usize, usize>,
    witnesses: BTreeMap<(usize, usize), BetaSequence>,
}

impl GeneratorSet {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        GeneratorSet {
            pairs: pairs.into_iter().collect(),
            ..Default::default()
        }
    }

    /// Every incidence of `h`.
    pub fn full(h: &Hypergraph) -> Self {
        Self::new((0..h.edge_count()).flat_map(|e| h.edge(e).iter().map(move |&v| (v, e))))
    }

    pub fn with_roots(mut self, roots: BTreeMap<usize, usize>) -> Self {
        self.roots = roots;
        self
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, v: usize, e: usize) -> bool {
        self.pairs.contains(&(v, e))
    }

    /// Component id → root vertex; empty unless the set is canonical.
    pub fn roots(&self) -> &BTreeMap<usize, usize> {
        &self.roots
    }

    pub fn witness(&self, v: usize, e: usize) -> Option<&BetaSequence> {
        self.witnesses.get(&(v, e))
    }

    /// Vertices `v` with `(v, f)` in the set.
    pub fn fiber(&self, f: usize) -> Vec<usize> {
        self.pairs
            .iter()
            .filter(|&&(_, e)| e == f)
            .map(|&(v, _)| v)
            .collect()
    }

    /// `|T_f|` for every edge that has a nonempty fiber.
    pub fn fiber_sizes(&self) -> BTreeMap<usize, usize> {
        let mut sizes = BTreeMap::new();
        for &(_, e) in &self.pairs {
            *sizes.entry(e).or_insert(0) += 1;
        }
        sizes
    }

    pub fn max_fiber(&self) -> usize {
        self.fiber_sizes().into_values().max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A simple graph on the vertex indices of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    pub vertex_count: usize,
    /// Pairs `(a, b)` with `a < b`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl SkeletonGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Joins `v` to every other vertex of `e`, for each `(v, e)` in `t`.
pub fn build_skeleton(h: &Hypergraph, t: &GeneratorSet) -> Result<SkeletonGraph> {
    let mut edges = BTreeSet::new();
    for &(v, e) in t.pairs() {
        if e >= h.edge_count() || v >= h.vertex_count() || !h.contains(e, v) {
            let vname = if v < h.vertex_count() { h.vertex_name(v).to_string() } else { format!("#{v}") };
            let ename = if e < h.edge_count() { h.edge_name(e).to_string() } else { format!("#{e}") };
            return Err(Error::InvalidPair(vname, ename));
        }
        for &w in h.edge(e) {
            if w != v {
                edges.insert((v.min(w), v.max(w)));
            }
        }
    }
    Ok(SkeletonGraph {
        vertex_count: h.vertex_count(),
        edges,
    })
}

/// Connected components under "shares an edge", as sorted vertex lists,
/// ordered by their least vertex index.
pub fn components(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..h.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for edge in h.edges() {
        for w in &edge[1..] {
            let a = find(&mut parent, edge[0]);
            let b = find(&mut parent, *w);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..h.vertex_count() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootRule {
    /// Lexicographically least vertex identifier of each component.
    LeastVertex,
    /// Listed vertices become the roots of their components; components
    /// without one fall back to the least vertex.
    Explicit(Vec<usize>),
}

/// `T = {(v, e) : some β-path from the component root ends "... v e"}`,
/// the lone step `root e` included.
pub fn canonical_generator(h: &Hypergraph, rule: &RootRule) -> Result<GeneratorSet> {
    let comps = components(h);
    let mut component_of = vec![0; h.vertex_count()];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    let mut roots = BTreeMap::new();
    if let RootRule::Explicit(chosen) = rule {
        for &r in chosen {
            if r >= h.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{r}")));
            }
            if let Some(prev) = roots.insert(component_of[r], r) {
                return Err(Error::InvalidParameter(format!(
                    "`{}` and `{}` are roots of the same component",
                    h.vertex_name(prev),
                    h.vertex_name(r)
                )));
            }
        }
    }
    for (c, members) in comps.iter().enumerate() {
        roots.entry(c).or_insert_with(|| {
            *members
                .iter()
                .min_by(|&&a, &&b| h.vertex_name(a).cmp(h.vertex_name(b)))
                .expect("components are nonempty")
        });
    }

    let mut pairs = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for (c, members) in comps.iter().enumerate() {
        let root = roots[&c];
        let mut component_edges = BTreeSet::new();
        for &v in members {
            component_edges.extend(h.star(v).iter().copied());
        }
        let incidences: usize = component_edges.iter().map(|&e| h.edge(e).len()).sum();
        let mut found = 0;
        for_each_beta_path(h, root, |vertices, edges| {
            let key = (*vertices.last().unwrap(), *edges.last().unwrap());
            if pairs.insert(key) {
                found += 1;
                let path = BetaSequence::path(vertices.to_vec(), edges.to_vec())
                    .expect("search emits well-formed paths");
                witnesses.insert(key, path);
            }
            if found == incidences {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }
    Ok(GeneratorSet {
        pairs,
        roots,
        witnesses,
    })
}

/// First β-path from `root` ending "... v e" in depth-first order.
pub fn find_witness(h: &Hypergraph, root: usize, v: usize, e: usize) -> Option<BetaSequence> {
    let mut out = None;
    for_each_beta_path(h, root, |vertices, edges| {
        if *vertices.last().unwrap() == v && *edges.last().unwrap() == e {
            out = Some(
                BetaSequence::path(vertices.to_vec(), edges.to_vec())
                    .expect("search emits well-formed paths"),
            );
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    pub first: usize,
    pub second: usize,
    pub cycle: BetaSequence,
}

/// For each pair `(v, f), (w, f)` of a canonical generator, the β-cycle
/// obtained by reducing their witnessing β-paths.
pub fn generator_cycle_certificates(
    h: &Hypergraph,
    t: &GeneratorSet,
    f: usize,
) -> Result<Vec<CycleCertificate>> {
    if f >= h.edge_count() {
        return Err(Error::UnknownEdge(format!("#{f}")));
    }
    let fiber = t.fiber(f);
    if fiber.len() < 2 {
        return Err(Error::PreconditionViolated(format!(
            "edge `{}` has {} generator pair(s); at least 2 are needed",
            h.edge_name(f),
            fiber.len()
        )));
    }
    let comps = components(h);
    let anchor = h.edge(f)[0];
    let component = comps
        .iter()
        .position(|members| members.binary_search(&anchor).is_ok())
        .expect("every vertex has a component");
    let root = *t.roots().get(&component).ok_or_else(|| {
        Error::PreconditionViolated("the generator set records no root for this component".into())
    })?;
    let witness = |v: usize| -> Result<BetaSequence> {
        match t.witness(v, f) {
            Some(p) => Ok(p.clone()),
            None => find_witness(h, root, v, f).ok_or_else(|| {
                Error::PreconditionViolated(format!(
                    "no β-path from `{}` ends with `{} {}`",
                    h.vertex_name(root),
                    h.vertex_name(v),
                    h.edge_name(f)
                ))
            }),
        }
    };
    let paths = fiber.iter().map(|&v| witness(v)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..fiber.len() {
        for j in i + 1..fiber.len() {
            let cycle = reduce_paths_to_cycle(h, &paths[i], &paths[j])?;
            out.push(CycleCertificate {
                first: fiber[i],
                second: fiber[j],
                cycle,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessExtraction {
    /// Edges meeting the chosen vertex set in at least `m` vertices.
    pub edges: Vec<usize>,
    /// For each chosen vertex: whether some extracted edge `e` has `(v, e)` in T.
    pub claims: BTreeMap<usize, bool>,
}

/// Collects the edges meeting `chosen` in at least `m` vertices, after
/// checking that every chosen vertex has `m` skeleton neighbours in `chosen`.
pub fn extract_witness(
    h: &Hypergraph,
    t: &GeneratorSet,
    chosen: &[usize],
    m: usize,
) -> Result<WitnessExtraction> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let skeleton = build_skeleton(h, t)?;
    let mut inside = vec![false; h.vertex_count()];
    for &v in chosen {
        if v >= h.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        inside[v] = true;
    }
    for &v in chosen {
        let degree = skeleton.neighbors(v).into_iter().filter(|&w| inside[w]).count();
        if degree < m {
            return Err(Error::DegreeTooLow(h.vertex_name(v).to_string()));
        }
    }
    let edges: Vec<usize> = (0..h.edge_count())
        .filter(|&e| h.edge(e).iter().filter(|&&v| inside[v]).count() >= m)
        .collect();
    let claims = chosen
        .iter()
        .map(|&v| (v, edges.iter().any(|&e| t.contains(v, e))))
        .collect();
    Ok(WitnessExtraction { edges, claims })
}
