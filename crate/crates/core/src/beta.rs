//! β-paths and β-cycles: membership checks, canonical cycle forms,
//! backtracking enumeration, the max-index reductions that turn pairs of
//! β-paths into β-cycles or shorter β-paths, and the path transform into
//! the dual hypergraph.
//!
//! A path is stored as its vertex list `v1..` and edge list `e1..`, read as
//! `v1 e1 v2 e2 ...`; it ends with an edge when both lists have the same
//! length and with a vertex when there is one more vertex. A cycle
//! `e1 v1 e2 v2 ... en vn` (closing back to `e1`) keeps both lists at length
//! `n`, with `v_i` sitting between `e_i` and `e_{i+1}`.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::hypergraph::{Dual, Hypergraph};
use crate::labeling::{Labeling, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Vertex(usize),
    Edge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSequence {
    kind: SequenceKind,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl BetaSequence {
    /// `v1 e1 v2 e2 ...`. A lone vertex is accepted as a trivial prefix.
    pub fn path(vertices: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedSequence("a path needs a first vertex".into()));
        }
        if vertices.len() != edges.len() && vertices.len() != edges.len() + 1 {
            return Err(Error::MalformedSequence(format!(
                "{} vertices cannot alternate with {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        Ok(BetaSequence {
            kind: SequenceKind::Path,
            vertices,
            edges,
        })
    }

    /// `e1 v1 e2 v2 ... en vn`, closing back to `e1`.
    pub fn cycle(edges: Vec<usize>, vertices: Vec<usize>) -> Result<Self> {
        if edges.is_empty() || edges.len() != vertices.len() {
            return Err(Error::MalformedSequence(format!(
                "a cycle needs as many vertices as edges, got {} edges and {} vertices",
                edges.len(),
                vertices.len()
            )));
        }
        Ok(BetaSequence {
            kind: SequenceKind::Cycle,
            vertices,
            edges,
        })
    }

    pub fn from_items(kind: SequenceKind, items: &[Item]) -> Result<Self> {
        let Some(first) = items.first() else {
            return Err(Error::MalformedSequence("empty sequence".into()));
        };
        let expect_vertex_first = kind == SequenceKind::Path;
        if matches!(first, Item::Vertex(_)) != expect_vertex_first {
            return Err(Error::MalformedSequence(match kind {
                SequenceKind::Path => "a path starts with a vertex".into(),
                SequenceKind::Cycle => "a cycle starts with an edge".into(),
            }));
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (i, item) in items.iter().enumerate() {
            let vertex_slot = (i % 2 == 0) == expect_vertex_first;
            match (item, vertex_slot) {
                (Item::Vertex(v), true) => vertices.push(*v),
                (Item::Edge(e), false) => edges.push(*e),
                _ => {
                    return Err(Error::MalformedSequence(format!(
                        "item {i} breaks the vertex/edge alternation"
                    )))
                }
            }
        }
        match kind {
            SequenceKind::Path => Self::path(vertices, edges),
            SequenceKind::Cycle => Self::cycle(edges, vertices),
        }
    }

    pub fn items(&self) -> Vec<Item> {
        let mut out = Vec::with_capacity(self.vertices.len() + self.edges.len());
        match self.kind {
            SequenceKind::Path => {
                for (i, &v) in self.vertices.iter().enumerate() {
                    out.push(Item::Vertex(v));
                    if let Some(&e) = self.edges.get(i) {
                        out.push(Item::Edge(e));
                    }
                }
            }
            SequenceKind::Cycle => {
                for (&e, &v) in self.edges.iter().zip(&self.vertices) {
                    out.push(Item::Edge(e));
                    out.push(Item::Vertex(v));
                }
            }
        }
        out
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// True for paths of the form `v1 e1 ... vn en`.
    pub fn ends_with_edge(&self) -> bool {
        self.kind == SequenceKind::Path && self.vertices.len() == self.edges.len()
    }

    pub fn first_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn last_vertex(&self) -> usize {
        *self.vertices.last().expect("sequences are never empty")
    }

    pub fn last_edge(&self) -> Option<usize> {
        self.edges.last().copied()
    }

    fn check_indices(&self, h: &Hypergraph) -> Result<()> {
        if let Some(v) = self.vertices.iter().find(|&&v| v >= h.vertex_count()) {
            return Err(Error::MalformedSequence(format!("vertex index {v} out of range")));
        }
        if let Some(e) = self.edges.iter().find(|&&e| e >= h.edge_count()) {
            return Err(Error::MalformedSequence(format!("edge index {e} out of range")));
        }
        Ok(())
    }
}

/// Receives the vertices and edges of each β-path found.
type PathVisitor<'a> = dyn FnMut(&[usize], &[usize]) -> ControlFlow<()> + 'a;

fn all_distinct(xs: &[usize]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

/// Each listed vertex lies in its neighbouring edges of the sequence and in
/// no other edge of the sequence; the first vertex counts `e1` twice.
pub fn is_beta_path(h: &Hypergraph, s: &BetaSequence) -> Result<bool> {
    if s.kind != SequenceKind::Path {
        return Err(Error::MalformedSequence("expected a path".into()));
    }
    if s.edges.is_empty() {
        return Err(Error::MalformedSequence("a β-path needs at least one edge".into()));
    }
    s.check_indices(h)?;
    if !all_distinct(&s.vertices) || !all_distinct(&s.edges) {
        return Ok(false);
    }
    let n = s.edges.len();
    for (i, &v) in s.vertices.iter().enumerate() {
        for (j, &e) in s.edges.iter().enumerate() {
            let permitted = if i == n {
                j == n - 1
            } else {
                j == i || j + 1 == i
            };
            if h.contains(e, v) != permitted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// At least three distinct edges and vertices, each `v_i` lying in exactly
/// `e_i` and `e_{i+1}` among the sequence's edges.
pub fn is_beta_cycle(h: &Hypergraph, s: &BetaSequence) -> Result<bool> {
    if s.kind != SequenceKind::Cycle {
        return Err(Error::MalformedSequence("expected a cycle".into()));
    }
    s.check_indices(h)?;
    let n = s.edges.len();
    if n < 3 || !all_distinct(&s.vertices) || !all_distinct(&s.edges) {
        return Ok(false);
    }
    for (i, &v) in s.vertices.iter().enumerate() {
        for (j, &e) in s.edges.iter().enumerate() {
            let permitted = j == i || j == (i + 1) % n;
            if h.contains(e, v) != permitted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether consecutive labeled elements of the sequence strictly increase:
/// listed vertices for a vertex labeling, listed edges for an edge labeling.
pub fn is_increasing_sequence(s: &BetaSequence, phi: &Labeling) -> Result<bool> {
    let (elements, kind) = match phi.target() {
        Target::Vertices => (&s.vertices, "vertex"),
        Target::Edges => (&s.edges, "edge"),
    };
    let labels = elements
        .iter()
        .map(|&x| phi.get(x).ok_or_else(|| Error::MissingLabel(format!("{kind} #{x}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(labels.windows(2).all(|w| w[0] < w[1]))
}

/// A cycle read from its least edge, in the direction giving the smaller
/// edge sequence. Cycles equal up to rotation and reversal share one form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCycle {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl CanonicalCycle {
    pub fn of(s: &BetaSequence) -> Result<Self> {
        if s.kind != SequenceKind::Cycle {
            return Err(Error::MalformedSequence("expected a cycle".into()));
        }
        Ok(Self::from_parts(&s.edges, &s.vertices))
    }

    fn from_parts(edges: &[usize], vertices: &[usize]) -> Self {
        let n = edges.len();
        let mut best: Option<CanonicalCycle> = None;
        for start in 0..n {
            let forward = CanonicalCycle {
                edges: (0..n).map(|i| edges[(start + i) % n]).collect(),
                vertices: (0..n).map(|i| vertices[(start + i) % n]).collect(),
            };
            // e_s v_{s-1} e_{s-1} v_{s-2} ... read backwards around the cycle.
            let backward = CanonicalCycle {
                edges: (0..n).map(|i| edges[(start + n - i) % n]).collect(),
                vertices: (0..n).map(|i| vertices[(start + 2 * n - 1 - i) % n]).collect(),
            };
            for candidate in [forward, backward] {
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        best.expect("cycles are nonempty")
    }

    pub fn to_sequence(&self) -> BetaSequence {
        BetaSequence {
            kind: SequenceKind::Cycle,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn involves_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn involves_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Through {
    All,
    Vertex(usize),
    Edge(usize),
}

impl Through {
    fn admits(self, c: &CanonicalCycle) -> bool {
        match self {
            Through::All => true,
            Through::Vertex(v) => c.involves_vertex(v),
            Through::Edge(e) => c.involves_edge(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEnumeration {
    /// Sorted and free of duplicates.
    pub cycles: Vec<CanonicalCycle>,
    /// Set when more than `limit` matching cycles exist; `cycles` then holds
    /// the first `limit` found.
    pub truncated: bool,
}

/// All β-cycles (up to rotation and reversal) involving the requested vertex
/// or edge, or all of them. A vertex is involved when it is one of the
/// listed vertices `v_i`.
pub fn enumerate_beta_cycles(h: &Hypergraph, through: Through, limit: usize) -> CycleEnumeration {
    let mut found = BTreeSet::new();
    let mut truncated = false;
    let mut search = CycleSearch {
        h,
        start: 0,
        edges: Vec::new(),
        vertices: Vec::new(),
        in_sequence: vec![false; h.edge_count()],
    };
    for start in 0..h.edge_count() {
        search.start = start;
        search.edges.push(start);
        search.in_sequence[start] = true;
        let flow = search.extend(&mut |edges, vertices| {
            let cycle = CanonicalCycle::from_parts(edges, vertices);
            if !through.admits(&cycle) || found.contains(&cycle) {
                return ControlFlow::Continue(());
            }
            if found.len() == limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            found.insert(cycle);
            ControlFlow::Continue(())
        });
        search.edges.pop();
        search.in_sequence[start] = false;
        if flow.is_break() {
            break;
        }
    }
    CycleEnumeration {
        cycles: found.into_iter().collect(),
        truncated,
    }
}

/// Grows `e1 v1 e2 ... ek` where `e1` is the least edge index of the cycle.
struct CycleSearch<'a> {
    h: &'a Hypergraph,
    start: usize,
    edges: Vec<usize>,
    vertices: Vec<usize>,
    in_sequence: Vec<bool>,
}

impl CycleSearch<'_> {
    fn extend(
        &mut self,
        emit: &mut PathVisitor<'_>,
    ) -> ControlFlow<()> {
        let h = self.h;
        let k = self.edges.len();
        let current = self.edges[k - 1];
        for &x in h.edge(current) {
            if k >= 2 {
                if self.edges[1..k - 1].iter().any(|&e| h.contains(e, x)) {
                    continue;
                }
                if h.contains(self.start, x) {
                    // x can only close the cycle; each cycle is met in both
                    // directions, keep the one with e2 < ek.
                    if k >= 3 && self.edges[1] < current {
                        self.vertices.push(x);
                        let flow = emit(&self.edges, &self.vertices);
                        self.vertices.pop();
                        flow?;
                    }
                    continue;
                }
            }
            for &next in h.star(x) {
                if next <= self.start
                    || self.in_sequence[next]
                    || self.vertices.iter().any(|&v| h.contains(next, v))
                {
                    continue;
                }
                self.vertices.push(x);
                self.edges.push(next);
                self.in_sequence[next] = true;
                let flow = self.extend(emit);
                self.in_sequence[next] = false;
                self.edges.pop();
                self.vertices.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits every β-path `start e1 v2 e2 ... vn en` (ending with an edge) in
/// depth-first order: edges by increasing index, then vertices by index.
pub fn for_each_beta_path<F>(h: &Hypergraph, start: usize, mut visit: F)
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let mut state = PathSearch {
        h,
        vertices: vec![start],
        edges: Vec::new(),
        in_sequence: vec![false; h.edge_count()],
    };
    for &e in h.star(start) {
        state.edges.push(e);
        state.in_sequence[e] = true;
        let flow = state.extend(&mut visit);
        state.in_sequence[e] = false;
        state.edges.pop();
        if flow.is_break() {
            return;
        }
    }
}

struct PathSearch<'a> {
    h: &'a Hypergraph,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    in_sequence: Vec<bool>,
}

impl PathSearch<'_> {
    fn extend(
        &mut self,
        visit: &mut PathVisitor<'_>,
    ) -> ControlFlow<()> {
        visit(&self.vertices, &self.edges)?;
        let h = self.h;
        let n = self.edges.len();
        let last = self.edges[n - 1];
        for &y in h.edge(last) {
            if y == self.vertices[n - 1] || self.edges[..n - 1].iter().any(|&e| h.contains(e, y)) {
                continue;
            }
            for &next in h.star(y) {
                if self.in_sequence[next] || self.vertices.iter().any(|&v| h.contains(next, v)) {
                    continue;
                }
                self.vertices.push(y);
                self.edges.push(next);
                self.in_sequence[next] = true;
                let flow = self.extend(visit);
                self.in_sequence[next] = false;
                self.edges.pop();
                self.vertices.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Up to `limit` β-paths from `start` that end with an edge, in the order
/// of [`for_each_beta_path`].
pub fn enumerate_beta_paths(h: &Hypergraph, start: usize, limit: usize) -> Vec<BetaSequence> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_beta_path(h, start, |vertices, edges| {
        out.push(BetaSequence {
            kind: SequenceKind::Path,
            vertices: vertices.to_vec(),
            edges: edges.to_vec(),
        });
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

fn require_beta_path(h: &Hypergraph, p: &BetaSequence, name: &str) -> Result<()> {
    if !is_beta_path(h, p)? {
        return Err(Error::PreconditionViolated(format!("{name} is not a β-path")));
    }
    Ok(())
}

/// Turns two β-paths `u ... v f` and `u ... w f` (v ≠ w) in a linear
/// hypergraph into a β-cycle `f v ... w` closing back to `f`.
///
/// The first path is read backwards and followed by the second, the final
/// `f` is dropped, and the result `E1 U1 ... En Un` is thinned by always
/// jumping to the last edge containing the current vertex and then to the
/// last vertex lying in that edge, until `w` is reached.
pub fn reduce_paths_to_cycle(
    h: &Hypergraph,
    p1: &BetaSequence,
    p2: &BetaSequence,
) -> Result<BetaSequence> {
    if !h.is_linear() {
        return Err(Error::PreconditionViolated("the hypergraph is not linear".into()));
    }
    for (p, name) in [(p1, "P1"), (p2, "P2")] {
        if p.kind != SequenceKind::Path {
            return Err(Error::PreconditionViolated(format!("{name} is not a path")));
        }
        require_beta_path(h, p, name)?;
        if !p.ends_with_edge() {
            return Err(Error::PreconditionViolated(format!("{name} must end with an edge")));
        }
    }
    if p1.first_vertex() != p2.first_vertex() {
        return Err(Error::PreconditionViolated("the paths start at different vertices".into()));
    }
    if p1.last_edge() != p2.last_edge() {
        return Err(Error::PreconditionViolated("the paths end with different edges".into()));
    }
    let f = p1.last_edge().expect("β-paths have edges");
    let v = p1.last_vertex();
    let w = p2.last_vertex();
    if v == w {
        return Err(Error::PreconditionViolated(
            "the vertices before the shared final edge coincide".into(),
        ));
    }

    let mut seq_edges = Vec::new();
    let mut seq_vertices = Vec::new();
    for j in (0..p1.edges.len()).rev() {
        seq_edges.push(p1.edges[j]);
        seq_vertices.push(p1.vertices[j]);
    }
    for j in 0..p2.edges.len() - 1 {
        seq_edges.push(p2.edges[j]);
        seq_vertices.push(p2.vertices[j + 1]);
    }
    let n = seq_edges.len();

    let last_edge_with = |x: usize| (0..n).rev().find(|&j| h.contains(seq_edges[j], x));
    let last_vertex_in = |e: usize| (0..n).rev().find(|&j| h.contains(e, seq_vertices[j]));

    let mut cycle_edges = vec![f];
    let mut cycle_vertices = vec![v];
    while *cycle_vertices.last().unwrap() != w {
        if cycle_edges.len() > n {
            return Err(Error::PreconditionViolated("the reduction did not reach w".into()));
        }
        let prev = *cycle_vertices.last().unwrap();
        let e = seq_edges[last_edge_with(prev).expect("every vertex lies in its own edge")];
        let u = seq_vertices[last_vertex_in(e).expect("every edge holds a vertex")];
        cycle_edges.push(e);
        cycle_vertices.push(u);
    }
    let cycle = BetaSequence::cycle(cycle_edges, cycle_vertices)?;
    debug_assert!(cycle.edges.len() >= 3);
    debug_assert!(is_beta_cycle(h, &cycle).unwrap_or(false));
    Ok(cycle)
}

/// Joins `P1 = vC ... v1` (ending at a vertex, possibly the lone vertex
/// `v1`) with `P2 = v1 e1 ... vi ei` and thins the resulting walk to a
/// β-path `vC ... vi ei` with the same max-index rule as
/// [`reduce_paths_to_cycle`].
pub fn splice_reduce(h: &Hypergraph, p1: &BetaSequence, p2: &BetaSequence) -> Result<BetaSequence> {
    if p1.kind != SequenceKind::Path || p2.kind != SequenceKind::Path {
        return Err(Error::PreconditionViolated("both inputs must be paths".into()));
    }
    p1.check_indices(h)?;
    if p1.ends_with_edge() {
        return Err(Error::PreconditionViolated("P1 must end with a vertex".into()));
    }
    if !p1.edges.is_empty() {
        require_beta_path(h, p1, "P1")?;
    }
    require_beta_path(h, p2, "P2")?;
    if !p2.ends_with_edge() {
        return Err(Error::PreconditionViolated("P2 must end with an edge".into()));
    }
    let junction = p1.last_vertex();
    if p2.first_vertex() != junction {
        return Err(Error::PreconditionViolated("P2 does not start where P1 ends".into()));
    }
    for &e in &p2.edges {
        if let Some(&x) = p1.vertices[..p1.vertices.len() - 1]
            .iter()
            .find(|&&x| h.contains(e, x))
        {
            return Err(Error::PreconditionViolated(format!(
                "edge `{}` of P2 contains vertex `{}` of P1",
                h.edge_name(e),
                h.vertex_name(x)
            )));
        }
    }

    let walk_vertices: Vec<usize> = p1.vertices.iter().chain(&p2.vertices[1..]).copied().collect();
    let walk_edges: Vec<usize> = p1.edges.iter().chain(&p2.edges).copied().collect();
    let n = walk_edges.len();

    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut pos = 0;
    loop {
        let y = walk_vertices[pos];
        let q = (0..n)
            .rev()
            .find(|&j| h.contains(walk_edges[j], y))
            .expect("walk vertices lie in their edges");
        vertices.push(y);
        edges.push(walk_edges[q]);
        if q == n - 1 {
            break;
        }
        pos = (0..n)
            .rev()
            .find(|&j| h.contains(walk_edges[q], walk_vertices[j]))
            .expect("walk edges hold their vertices");
        if pos <= q {
            return Err(Error::PreconditionViolated("the walk does not advance".into()));
        }
    }
    let path = BetaSequence::path(vertices, edges)?;
    debug_assert!(is_beta_path(h, &path).unwrap_or(false));
    Ok(path)
}

/// Maps `v1 e1 v2 e2 v3 ...` in `h` to `e1 v2* e2 v3* ...` in its dual.
pub fn dual_transform(h: &Hypergraph, dual: &Dual, p: &BetaSequence) -> Result<BetaSequence> {
    if p.kind != SequenceKind::Path {
        return Err(Error::MalformedSequence("expected a path".into()));
    }
    if !is_beta_path(h, p)? {
        return Err(Error::PreconditionViolated("the input is not a β-path".into()));
    }
    if p.edges.len() + p.vertices.len() < 3 {
        return Err(Error::MalformedSequence(
            "the image of a one-vertex, one-edge path has no edges".into(),
        ));
    }
    let c = &dual.correspondence;
    let vertices = p.edges.iter().map(|&e| c.dual_vertex(e)).collect();
    let edges = p.vertices[1..].iter().map(|&v| c.dual_edge(v)).collect();
    BetaSequence::path(vertices, edges)
}
