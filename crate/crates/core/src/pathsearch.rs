//! Loose paths in k-uniform hypergraphs and increasing-path search.
//!
//! A loose path is a sequence of distinct vertices cut into k-blocks that
//! overlap in exactly one vertex; every block must be an edge. Under a
//! vertex labeling a path is *increasing* when all consecutive vertices
//! increase and *skip-increasing* when each block's first vertex is below
//! its last. Under an edge labeling it is increasing when consecutive edges
//! increase.

use std::cmp::Ordering;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::labeling::{Labeling, Target};

pub const DEFAULT_ADVERSARIAL_BOUND: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Full,
    Skip,
    Edge,
}

impl Mode {
    pub fn target(self) -> Target {
        match self {
            Mode::Full | Mode::Skip => Target::Vertices,
            Mode::Edge => Target::Edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoosePath {
    k: usize,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl LoosePath {
    pub fn empty(k: usize) -> Self {
        LoosePath {
            k,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices of block `i`, in path order.
    pub fn block(&self, i: usize) -> &[usize] {
        let start = (self.k - 1) * i;
        &self.vertices[start..start + self.k]
    }

    /// Number of labeled elements along the path for the given target.
    pub fn measure(&self, target: Target) -> usize {
        match target {
            Target::Vertices => self.vertices.len(),
            Target::Edges => self.edges.len(),
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    Ok(())
}

/// Cuts `seq` into k-blocks overlapping in one vertex and looks each block
/// up as an edge of `h`.
pub fn derive_edges(h: &Hypergraph, k: usize, seq: &[usize]) -> Result<LoosePath> {
    check_k(k)?;
    if seq.len() < k || !(seq.len() - k).is_multiple_of(k - 1) {
        return Err(Error::BadLength { len: seq.len(), k });
    }
    let mut seen = vec![false; h.vertex_count()];
    for &v in seq {
        if v >= h.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::RepeatedVertex(h.vertex_name(v).to_string()));
        }
    }
    let m = (seq.len() - k) / (k - 1) + 1;
    let edges = (0..m)
        .map(|i| {
            let start = (k - 1) * i;
            h.find_edge(&seq[start..start + k]).ok_or(Error::NotAnEdge(i))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LoosePath {
        k,
        vertices: seq.to_vec(),
        edges,
    })
}

fn label_of(phi: &Labeling, x: usize, kind: &str) -> Result<u64> {
    phi.get(x).ok_or_else(|| Error::MissingLabel(format!("{kind} #{x}")))
}

fn require_target(phi: &Labeling, target: Target) -> Result<()> {
    if phi.target() != target {
        return Err(Error::InvalidParameter(format!(
            "expected a labeling of {}, got one of {}",
            target.as_str(),
            phi.target().as_str()
        )));
    }
    Ok(())
}

/// Vertex-labeling predicates: `Full` compares every consecutive pair,
/// `Skip` only the two ends of each block.
pub fn is_increasing(p: &LoosePath, phi: &Labeling, mode: Mode) -> Result<bool> {
    require_target(phi, Target::Vertices)?;
    let labels = p
        .vertices
        .iter()
        .map(|&v| label_of(phi, v, "vertex"))
        .collect::<Result<Vec<_>>>()?;
    match mode {
        Mode::Full => Ok(labels.windows(2).all(|w| w[0] < w[1])),
        Mode::Skip => Ok((0..p.edges.len()).all(|i| {
            let start = (p.k - 1) * i;
            labels[start] < labels[start + p.k - 1]
        })),
        Mode::Edge => Err(Error::InvalidParameter(
            "edge mode needs an edge labeling; use is_edge_increasing".into(),
        )),
    }
}

pub fn is_edge_increasing(p: &LoosePath, phi: &Labeling) -> Result<bool> {
    require_target(phi, Target::Edges)?;
    let labels = p
        .edges
        .iter()
        .map(|&e| label_of(phi, e, "edge"))
        .collect::<Result<Vec<_>>>()?;
    Ok(labels.windows(2).all(|w| w[0] < w[1]))
}

/// Dispatches to the predicate of `mode`.
pub fn satisfies(p: &LoosePath, phi: &Labeling, mode: Mode) -> Result<bool> {
    match mode {
        Mode::Full | Mode::Skip => is_increasing(p, phi, mode),
        Mode::Edge => is_edge_increasing(p, phi),
    }
}

/// Longest loose path (by edge count) satisfying the predicate of `mode`.
/// Among the longest, the one whose vertex sequence is lexicographically
/// least by identifier is returned.
pub fn longest_increasing_path(
    h: &Hypergraph,
    k: usize,
    phi: &Labeling,
    mode: Mode,
) -> Result<LoosePath> {
    let mut search = Search::new(h, k, phi, mode, true)?;
    search.run();
    Ok(LoosePath {
        k,
        vertices: search.best_seq,
        edges: search.best_edges,
    })
}

/// Edge count of the longest path satisfying `mode`, without tie-breaking.
pub fn longest_increasing_length(h: &Hypergraph, k: usize, phi: &Labeling, mode: Mode) -> Result<usize> {
    let mut search = Search::new(h, k, phi, mode, false)?;
    search.run();
    Ok(search.best_len)
}

/// Exact branch-and-bound over loose paths. The bound for entering edge `e`
/// at vertex `x` is the longest path in the relaxation that only forbids
/// overlaps between consecutive edges; label monotonicity makes the
/// relaxation acyclic.
struct Search<'a> {
    h: &'a Hypergraph,
    mode: Mode,
    tie_break: bool,
    vertex_label: Vec<u64>,
    edge_label: Vec<u64>,
    rank: Vec<usize>,
    usable: Vec<bool>,
    offset: Vec<usize>,
    bound_memo: Vec<Option<usize>>,

    seq: Vec<usize>,
    edges: Vec<usize>,
    used: Vec<bool>,

    best_len: usize,
    best_seq: Vec<usize>,
    best_edges: Vec<usize>,
    best_key: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph, k: usize, phi: &Labeling, mode: Mode, tie_break: bool) -> Result<Self> {
        check_k(k)?;
        require_target(phi, mode.target())?;
        let usable: Vec<bool> = h.edges().iter().map(|e| e.len() == k).collect();
        let mut vertex_label = vec![0; h.vertex_count()];
        let mut edge_label = vec![0; h.edge_count()];
        for e in (0..h.edge_count()).filter(|&e| usable[e]) {
            match mode.target() {
                Target::Vertices => {
                    for &v in h.edge(e) {
                        vertex_label[v] = label_of(phi, v, "vertex")?;
                    }
                }
                Target::Edges => edge_label[e] = label_of(phi, e, "edge")?,
            }
        }
        let mut offset = Vec::with_capacity(h.edge_count() + 1);
        let mut total = 0;
        for e in h.edges() {
            offset.push(total);
            total += e.len();
        }
        offset.push(total);
        Ok(Search {
            h,
            mode,
            tie_break,
            vertex_label,
            edge_label,
            rank: h.lexicographic_ranks(),
            usable,
            offset,
            bound_memo: vec![None; total],
            seq: Vec::new(),
            edges: Vec::new(),
            used: vec![false; h.vertex_count()],
            best_len: 0,
            best_seq: Vec::new(),
            best_edges: Vec::new(),
            best_key: Vec::new(),
        })
    }

    fn slot(&self, e: usize, x: usize) -> usize {
        self.offset[e] + self.h.edge(e).binary_search(&x).expect("x lies in e")
    }

    /// Admissible last vertices of block `e` entered at `x`.
    fn exits(&self, e: usize, x: usize) -> Vec<usize> {
        let members = self.h.edge(e);
        match self.mode {
            Mode::Full => {
                let lo = *members.iter().min_by_key(|&&v| self.vertex_label[v]).unwrap();
                let hi = *members.iter().max_by_key(|&&v| self.vertex_label[v]).unwrap();
                if lo == x && hi != x {
                    vec![hi]
                } else {
                    Vec::new()
                }
            }
            Mode::Skip => members
                .iter()
                .copied()
                .filter(|&y| self.vertex_label[y] > self.vertex_label[x])
                .sorted_by_key(|&y| self.rank[y])
                .collect(),
            Mode::Edge => members
                .iter()
                .copied()
                .filter(|&y| y != x)
                .sorted_by_key(|&y| self.rank[y])
                .collect(),
        }
    }

    /// Block `e` read from `x` to `y`: interior vertices increasing by label
    /// in full mode, by identifier otherwise.
    fn interior(&self, e: usize, x: usize, y: usize) -> Vec<usize> {
        let rest = self.h.edge(e).iter().copied().filter(|&v| v != x && v != y);
        match self.mode {
            Mode::Full => rest.sorted_by_key(|&v| self.vertex_label[v]).collect(),
            _ => rest.sorted_by_key(|&v| self.rank[v]).collect(),
        }
    }

    fn may_follow(&self, e: usize, next: usize) -> bool {
        next != e
            && self.usable[next]
            && (self.mode != Mode::Edge || self.edge_label[next] > self.edge_label[e])
    }

    fn bound(&mut self, e: usize, x: usize) -> usize {
        let slot = self.slot(e, x);
        if let Some(b) = self.bound_memo[slot] {
            return b;
        }
        let mut best = 0;
        for y in self.exits(e, x) {
            let mut tail = 0;
            for &next in self.h.star(y) {
                if !self.may_follow(e, next) || self.h.intersection(e, next).len() != 1 {
                    continue;
                }
                tail = tail.max(self.bound(next, y));
            }
            best = best.max(1 + tail);
        }
        self.bound_memo[slot] = Some(best);
        best
    }

    fn key(&self) -> Vec<usize> {
        self.seq.iter().map(|&v| self.rank[v]).collect()
    }

    fn promising(&self, reachable: usize) -> bool {
        match reachable.cmp(&self.best_len) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                self.tie_break && {
                    let prefix = self.key();
                    prefix.as_slice() <= &self.best_key[..prefix.len()]
                }
            }
        }
    }

    fn consider(&mut self) {
        let len = self.edges.len();
        let better = len > self.best_len
            || (self.tie_break && len == self.best_len && self.key() < self.best_key);
        if better {
            self.best_len = len;
            self.best_seq = self.seq.clone();
            self.best_edges = self.edges.clone();
            self.best_key = self.key();
        }
    }

    fn run(&mut self) {
        for e in 0..self.h.edge_count() {
            if !self.usable[e] {
                continue;
            }
            let starts: Vec<usize> = self
                .h
                .edge(e)
                .iter()
                .copied()
                .sorted_by_key(|&v| self.rank[v])
                .collect();
            for x in starts {
                let b = self.bound(e, x);
                if b == 0 {
                    continue;
                }
                self.seq.push(x);
                self.used[x] = true;
                if self.promising(b) {
                    self.dfs(e, x);
                }
                self.used[x] = false;
                self.seq.pop();
            }
        }
    }

    fn dfs(&mut self, e: usize, x: usize) {
        for y in self.exits(e, x) {
            let interior = self.interior(e, x, y);
            let mark = self.seq.len();
            for &v in interior.iter().chain(std::iter::once(&y)) {
                self.seq.push(v);
                self.used[v] = true;
            }
            self.edges.push(e);
            self.consider();
            let h = self.h;
            for &next in h.star(y) {
                if !self.may_follow(e, next) || h.edge(next).iter().any(|&v| v != y && self.used[v]) {
                    continue;
                }
                let b = self.bound(next, y);
                if b > 0 && self.promising(self.edges.len() + b) {
                    self.dfs(next, y);
                }
            }
            self.edges.pop();
            for v in self.seq.drain(mark..) {
                self.used[v] = false;
            }
        }
    }
}

/// The labeling of the mode's target that makes the longest increasing path
/// shortest, with that length counted in labeled elements (vertices for the
/// vertex modes, edges for edge mode). Ties go to the lexicographically
/// least label vector.
pub fn adversarial_min_max(
    h: &Hypergraph,
    k: usize,
    mode: Mode,
    bound: usize,
) -> Result<(usize, Labeling)> {
    check_k(k)?;
    let target = mode.target();
    let n = match target {
        Target::Vertices => h.vertex_count(),
        Target::Edges => h.edge_count(),
    };
    if n > bound {
        return Err(Error::TooLarge { size: n, bound });
    }
    if n == 0 {
        return Ok((0, Labeling::identity(target, 0)));
    }
    let evaluate = |labels: Vec<u64>| -> Result<(usize, Vec<u64>)> {
        let phi = Labeling::total(target, labels.clone())?;
        let edges = longest_increasing_length(h, k, &phi, mode)?;
        let value = match target {
            Target::Edges => edges,
            Target::Vertices if edges == 0 => 0,
            Target::Vertices => k + (k - 1) * (edges - 1),
        };
        Ok((value, labels))
    };
    let best = (0..n)
        .into_par_iter()
        .map(|first| -> Result<(usize, Vec<u64>)> {
            let rest: Vec<u64> = (1..=n as u64).filter(|&l| l != first as u64 + 1).collect();
            let mut best: Option<(usize, Vec<u64>)> = None;
            for perm in rest.iter().copied().permutations(n - 1) {
                let mut labels = Vec::with_capacity(n);
                labels.push(first as u64 + 1);
                labels.extend(perm);
                let candidate = evaluate(labels)?;
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
            Ok(best.expect("at least one permutation"))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("n > 0");
    Ok((best.0, Labeling::total(target, best.1)?))
}
