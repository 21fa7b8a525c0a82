//! Finite hypergraphs, incidence stars, hypothesis checks and duals.
//!
//! Vertices and edges are addressed by dense indices. Vertex identifiers are
//! opaque strings kept in insertion order; every edge is stored as a sorted
//! list of vertex indices and keeps its position for the lifetime of the value.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Hypergraph {
    vertices: Vec<String>,
    vertex_lookup: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
    edge_names: Vec<String>,
    edge_lookup: HashMap<Vec<usize>, usize>,
    incidence: IncidenceIndex,
}

/// `star[v]` lists, in increasing order, the indices of the edges containing `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceIndex {
    star: Vec<Vec<usize>>,
}

impl IncidenceIndex {
    pub fn build(vertex_count: usize, edges: &[Vec<usize>]) -> Self {
        let mut star = vec![Vec::new(); vertex_count];
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                star[v].push(i);
            }
        }
        IncidenceIndex { star }
    }

    pub fn star(&self, v: usize) -> &[usize] {
        &self.star[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.star[v].len()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from identifiers. Edge names default to `e0, e1, ...`.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        edges: &[Vec<S>],
        edge_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut vertex_lookup = HashMap::with_capacity(vertices.len());
        let mut names = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_lookup.insert(v.clone(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
            names.push(v);
        }
        let mut resolved = Vec::with_capacity(edges.len());
        for (i, edge) in edges.iter().enumerate() {
            let mut members = BTreeSet::new();
            for v in edge {
                let idx = *vertex_lookup
                    .get(v.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
                members.insert(idx);
            }
            if members.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            resolved.push(members.into_iter().collect());
        }
        Self::from_indices(names, resolved, edge_names)
    }

    /// Builds a hypergraph whose vertex set is the union of the edges, in
    /// order of first appearance.
    pub fn from_edges<S: AsRef<str>>(edges: &[Vec<S>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut vertices = Vec::new();
        for edge in edges {
            for v in edge {
                if seen.insert(v.as_ref()) {
                    vertices.push(v.as_ref());
                }
            }
        }
        let edges: Vec<Vec<&str>> = edges
            .iter()
            .map(|e| e.iter().map(|v| v.as_ref()).collect())
            .collect();
        Self::new(&vertices, &edges, None)
    }

    /// Builds from already-resolved vertex indices. Edge member lists need
    /// not be sorted or deduplicated.
    pub fn from_indices(
        vertices: Vec<String>,
        edges: Vec<Vec<usize>>,
        edge_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut vertex_lookup = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_lookup.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut edge_lookup = HashMap::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            edge.sort_unstable();
            edge.dedup();
            if edge.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if let Some(&bad) = edge.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            if let Some(&first) = edge_lookup.get(&edge) {
                return Err(Error::DuplicateEdge(first, i));
            }
            edge_lookup.insert(edge.clone(), i);
            normalized.push(edge);
        }
        let edge_names = match edge_names {
            Some(names) => {
                if names.len() != normalized.len() {
                    return Err(Error::EdgeNameCount {
                        expected: normalized.len(),
                        found: names.len(),
                    });
                }
                let mut seen = BTreeSet::new();
                for n in &names {
                    if !seen.insert(n.as_str()) {
                        return Err(Error::DuplicateEdgeName(n.clone()));
                    }
                }
                names
            }
            None => (0..normalized.len()).map(|i| format!("e{i}")).collect(),
        };
        let incidence = IncidenceIndex::build(vertices.len(), &normalized);
        Ok(Hypergraph {
            vertices,
            vertex_lookup,
            edges: normalized,
            edge_names,
            edge_lookup,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Members of edge `e`, sorted by vertex index.
    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edge_names[e]
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    /// Resolves an edge reference: an edge name first, then a decimal index.
    pub fn edge_ref(&self, reference: &str) -> Result<usize> {
        if let Some(i) = self.edge_names.iter().position(|n| n == reference) {
            return Ok(i);
        }
        match reference.parse::<usize>() {
            Ok(i) if i < self.edges.len() => Ok(i),
            _ => Err(Error::UnknownEdge(reference.to_string())),
        }
    }

    /// The edge whose vertex set is exactly `members` (any order).
    pub fn find_edge(&self, members: &[usize]) -> Option<usize> {
        let mut key = members.to_vec();
        key.sort_unstable();
        key.dedup();
        self.edge_lookup.get(&key).copied()
    }

    pub fn contains(&self, e: usize, v: usize) -> bool {
        self.edges[e].binary_search(&v).is_ok()
    }

    pub fn incidence(&self) -> &IncidenceIndex {
        &self.incidence
    }

    pub fn star(&self, v: usize) -> &[usize] {
        self.incidence.star(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence.degree(v)
    }

    /// Vertices shared by two edges, in index order.
    pub fn intersection(&self, e: usize, f: usize) -> Vec<usize> {
        let (a, b) = (&self.edges[e], &self.edges[f]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_linear(&self) -> bool {
        validate(self, None, true).linearity.is_empty()
    }

    /// Position of every vertex when identifiers are sorted lexicographically.
    pub fn lexicographic_ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut rank = vec![0; order.len()];
        for (r, v) in order.into_iter().enumerate() {
            rank[v] = r;
        }
        rank
    }

    /// Deletes a set of vertices from the vertex set and from every edge.
    /// Edges that become empty are dropped, and an edge whose remainder
    /// equals an earlier edge's is dropped too. Edge names are preserved.
    pub fn remove_vertices(&self, doomed: &[bool]) -> Hypergraph {
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            if !doomed[v] {
                remap[v] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        let mut names = Vec::new();
        for (e, members) in self.edges.iter().enumerate() {
            let kept: Vec<usize> = members
                .iter()
                .filter(|&&v| !doomed[v])
                .map(|&v| remap[v])
                .collect();
            if !kept.is_empty() && seen.insert(kept.clone()) {
                edges.push(kept);
                names.push(self.edge_names[e].clone());
            }
        }
        Hypergraph::from_indices(vertices, edges, Some(names))
            .expect("removing vertices preserves well-formedness")
    }

    /// Repeatedly deletes vertices of degree below `min_degree` until every
    /// surviving vertex meets it.
    pub fn min_degree_core(&self, min_degree: usize) -> Hypergraph {
        let mut current = self.clone();
        loop {
            let doomed: Vec<bool> = (0..current.vertex_count())
                .map(|v| current.degree(v) < min_degree)
                .collect();
            if !doomed.iter().any(|&d| d) {
                return current;
            }
            current = current.remove_vertices(&doomed);
        }
    }

    /// Drops isolated vertices and keeps one vertex out of every group of
    /// vertices with identical stars, so that [`dual`] succeeds.
    pub fn dual_ready(&self) -> Hypergraph {
        let mut seen: HashMap<&[usize], usize> = HashMap::new();
        let doomed: Vec<bool> = (0..self.vertex_count())
            .map(|v| {
                let star = self.star(v);
                star.is_empty() || seen.insert(star, v).is_some()
            })
            .collect();
        self.remove_vertices(&doomed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformityViolation {
    pub edge: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearityViolation {
    pub first: usize,
    pub second: usize,
    pub shared: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub uniformity: Vec<UniformityViolation>,
    pub linearity: Vec<LinearityViolation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.uniformity.is_empty() && self.linearity.is_empty()
    }
}

/// Checks k-uniformity (when `k` is given) and linearity (when requested).
pub fn validate(h: &Hypergraph, k: Option<usize>, require_linear: bool) -> ValidationReport {
    let mut report = ValidationReport::default();
    if let Some(k) = k {
        for (edge, members) in h.edges().iter().enumerate() {
            if members.len() != k {
                report.uniformity.push(UniformityViolation {
                    edge,
                    size: members.len(),
                });
            }
        }
    }
    if require_linear {
        // Only edge pairs meeting in some vertex can violate linearity.
        let mut pairs = BTreeSet::new();
        for v in 0..h.vertex_count() {
            let star = h.star(v);
            for (i, &e) in star.iter().enumerate() {
                for &f in &star[i + 1..] {
                    pairs.insert((e, f));
                }
            }
        }
        for (first, second) in pairs {
            let shared = h.intersection(first, second);
            if shared.len() >= 2 {
                report.linearity.push(LinearityViolation {
                    first,
                    second,
                    shared,
                });
            }
        }
    }
    report
}

/// Index-level link between a hypergraph and its dual: dual vertex `i` is
/// source edge `vertex_to_edge[i]`, dual edge `j` is the star of source
/// vertex `edge_to_vertex[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorrespondence {
    pub vertex_to_edge: Vec<usize>,
    pub edge_to_vertex: Vec<usize>,
}

impl DualCorrespondence {
    /// Dual vertex standing for source edge `e`.
    pub fn dual_vertex(&self, e: usize) -> usize {
        self.vertex_to_edge
            .iter()
            .position(|&x| x == e)
            .expect("every source edge has a dual vertex")
    }

    /// Dual edge `v*` standing for source vertex `v`.
    pub fn dual_edge(&self, v: usize) -> usize {
        self.edge_to_vertex
            .iter()
            .position(|&x| x == v)
            .expect("every source vertex has a dual edge")
    }
}

#[derive(Debug, Clone)]
pub struct Dual {
    pub hypergraph: Hypergraph,
    pub correspondence: DualCorrespondence,
}

/// The dual hypergraph: one vertex per edge (named after it) and one edge
/// `v*` per vertex (named `v*`).
pub fn dual(h: &Hypergraph) -> Result<Dual> {
    let mut owner: HashMap<&[usize], usize> = HashMap::new();
    for v in 0..h.vertex_count() {
        let star = h.star(v);
        if star.is_empty() {
            return Err(Error::IsolatedVertex(h.vertex_name(v).to_string()));
        }
        if let Some(&w) = owner.get(star) {
            return Err(Error::DuplicateStar(
                h.vertex_name(w).to_string(),
                h.vertex_name(v).to_string(),
            ));
        }
        owner.insert(star, v);
    }
    let vertices = h.edge_names().to_vec();
    let edges: Vec<Vec<usize>> = (0..h.vertex_count()).map(|v| h.star(v).to_vec()).collect();
    let names = h.vertex_names().iter().map(|v| format!("{v}*")).collect();
    let hypergraph = Hypergraph::from_indices(vertices, edges, Some(names))?;
    Ok(Dual {
        hypergraph,
        correspondence: DualCorrespondence {
            vertex_to_edge: (0..h.edge_count()).collect(),
            edge_to_vertex: (0..h.vertex_count()).collect(),
        },
    })
}

/// Vertex and edge bijections from a hypergraph onto its double dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub double_dual: Hypergraph,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.edge_names == other.edge_names
    }
}

impl Eq for Hypergraph {}

/// Composes the correspondences of `dual(h)` and `dual(dual(h))` and checks
/// that the result commutes with incidence.
pub fn double_dual_correspondence(h: &Hypergraph) -> Result<Isomorphism> {
    let first = dual(h)?;
    let second = dual(&first.hypergraph)?;
    let c1 = &first.correspondence;
    let c2 = &second.correspondence;
    // A source vertex v becomes dual edge v*, which becomes a vertex of the
    // double dual; a source edge becomes a dual vertex, then a double-dual edge.
    let vertex_map: Vec<usize> = (0..h.vertex_count())
        .map(|v| c2.dual_vertex(c1.dual_edge(v)))
        .collect();
    let edge_map: Vec<usize> = (0..h.edge_count())
        .map(|e| c2.dual_edge(c1.dual_vertex(e)))
        .collect();
    let dd = second.hypergraph;
    if dd.vertex_count() != h.vertex_count() || dd.edge_count() != h.edge_count() {
        return Err(Error::NotInvolutive("element counts differ".into()));
    }
    let distinct = |m: &[usize]| m.iter().collect::<BTreeSet<_>>().len() == m.len();
    if !distinct(&vertex_map) || !distinct(&edge_map) {
        return Err(Error::NotInvolutive("correspondence is not injective".into()));
    }
    for (e, &de) in edge_map.iter().enumerate() {
        for (v, &dv) in vertex_map.iter().enumerate() {
            if h.contains(e, v) != dd.contains(de, dv) {
                return Err(Error::NotInvolutive(format!(
                    "incidence of `{}` and `{}` is not preserved",
                    h.vertex_name(v),
                    h.edge_name(e)
                )));
            }
        }
    }
    Ok(Isomorphism {
        vertex_map,
        edge_map,
        double_dual: dd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(edges: &[&[&str]]) -> Hypergraph {
        let edges: Vec<Vec<&str>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::from_edges(&edges).unwrap()
    }

    fn pasch() -> Hypergraph {
        hg(&[&["1", "2", "3"], &["1", "4", "5"], &["2", "4", "6"], &["3", "5", "6"]])
    }

    #[test]
    fn rejects_bad_input() {
        let dup = Hypergraph::from_edges(&[vec!["a", "b"], vec!["b", "a"]]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateEdge(0, 1));
        let unknown = Hypergraph::new(&["a"], &[vec!["a", "z"]], None);
        assert_eq!(unknown.unwrap_err(), Error::UnknownVertex("z".into()));
        let empty = Hypergraph::new(&["a"], &[vec![]], None);
        assert_eq!(empty.unwrap_err(), Error::EmptyEdge(0));
        let names = Hypergraph::new(&["a"], &[vec!["a"]], Some(vec![]));
        assert!(matches!(names, Err(Error::EdgeNameCount { .. })));
    }

    #[test]
    fn validate_pairwise_intersections() {
        let h = hg(&[&["u", "v", "x1"], &["u", "w", "x2"], &["v", "w", "x3"]]);
        assert!(validate(&h, Some(3), true).is_ok());

        let h = hg(&[&["a", "b", "c"], &["a", "b", "d"]]);
        let report = validate(&h, None, true);
        assert_eq!(report.linearity.len(), 1);
        let shared: Vec<&str> = report.linearity[0]
            .shared
            .iter()
            .map(|&v| h.vertex_name(v))
            .collect();
        assert_eq!(shared, ["a", "b"]);

        let empty = Hypergraph::from_edges::<&str>(&[]).unwrap();
        assert!(validate(&empty, Some(3), true).is_ok());

        let mixed = hg(&[&["a", "b"], &["b", "c", "d"]]);
        let report = validate(&mixed, Some(3), false);
        assert_eq!(report.uniformity, vec![UniformityViolation { edge: 0, size: 2 }]);
    }

    #[test]
    fn triangle_is_self_dual() {
        let h = hg(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let d = dual(&h).unwrap().hypergraph;
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.edge_count(), 3);
        assert!(d.edges().iter().all(|e| e.len() == 2));
    }

    #[test]
    fn pasch_dual_is_k4() {
        let d = dual(&pasch()).unwrap().hypergraph;
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 6);
        let pairs: BTreeSet<Vec<usize>> = d.edges().iter().cloned().collect();
        let expected: BTreeSet<Vec<usize>> = (0..4)
            .flat_map(|a| ((a + 1)..4).map(move |b| vec![a, b]))
            .collect();
        assert_eq!(pairs, expected);
        assert!((0..4).all(|v| d.degree(v) == 3));
        assert_eq!(d.edge_name(0), "1*");
    }

    #[test]
    fn dual_errors() {
        let h = Hypergraph::new(&["a", "b", "c"], &[vec!["b", "c"], vec!["c"]], None).unwrap();
        assert_eq!(dual(&h).unwrap_err(), Error::IsolatedVertex("a".into()));
        let single = hg(&[&["a", "b", "c"]]);
        assert_eq!(
            dual(&single).unwrap_err(),
            Error::DuplicateStar("a".into(), "b".into())
        );
        assert_eq!(
            double_dual_correspondence(&single).unwrap_err().name(),
            "DuplicateStar"
        );
    }

    #[test]
    fn double_dual_is_identity_on_indices() {
        for h in [pasch(), hg(&[&["a", "b"], &["b", "c"], &["a", "c"]])] {
            let iso = double_dual_correspondence(&h).unwrap();
            assert_eq!(iso.vertex_map, (0..h.vertex_count()).collect::<Vec<_>>());
            assert_eq!(iso.edge_map, (0..h.edge_count()).collect::<Vec<_>>());
            assert_eq!(iso.double_dual.vertex_name(0), format!("{}*", h.vertex_name(0)));
        }
    }

    #[test]
    fn cleanup_helpers() {
        let h = hg(&[&["a", "b", "c"], &["c", "d", "e"], &["e", "a", "f"]]);
        let core = h.min_degree_core(2);
        assert_eq!(core.vertex_names(), ["a", "c", "e"]);
        assert_eq!(core.edge_count(), 3);
        assert_eq!(h.dual_ready(), h);

        let twins = Hypergraph::new(&["a", "b", "c", "d", "z"], &[vec!["a", "b", "c"], vec!["c", "d"]], None)
            .unwrap();
        let ready = twins.dual_ready();
        assert!(dual(&ready).is_ok());
        assert_eq!(ready.vertex_names(), ["a", "c", "d"]);
    }

    #[test]
    fn edge_refs() {
        let h = pasch();
        assert_eq!(h.edge_ref("e2").unwrap(), 2);
        assert_eq!(h.edge_ref("3").unwrap(), 3);
        assert!(h.edge_ref("9").is_err());
        assert_eq!(h.find_edge(&[5, 4, 2]), Some(3));
    }
}
