//! Exhaustive reference implementations for cross-checking the fast
//! algorithms. Exponential; meant for instances with a handful of edges.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::beta::{is_beta_cycle, is_beta_path, BetaSequence, CanonicalCycle};
use crate::hypergraph::Hypergraph;
use crate::labeling::Labeling;
use crate::pathsearch::Mode;

/// Every β-cycle, found by trying all ordered edge sequences of length at
/// least 3 and every choice of connecting vertices.
pub fn beta_cycles(h: &Hypergraph) -> BTreeSet<CanonicalCycle> {
    fn grow(h: &Hypergraph, edges: &mut Vec<usize>, out: &mut BTreeSet<CanonicalCycle>) {
        if edges.len() >= 3 {
            let n = edges.len();
            let choices: Vec<Vec<usize>> = (0..n)
                .map(|i| h.intersection(edges[i], edges[(i + 1) % n]))
                .collect();
            let mut pick = vec![0; n];
            if choices.iter().all(|c| !c.is_empty()) {
                loop {
                    let vertices: Vec<usize> = (0..n).map(|i| choices[i][pick[i]]).collect();
                    if let Ok(s) = BetaSequence::cycle(edges.clone(), vertices) {
                        if is_beta_cycle(h, &s).unwrap_or(false) {
                            out.insert(CanonicalCycle::of(&s).expect("valid cycle"));
                        }
                    }
                    let mut i = 0;
                    while i < n {
                        pick[i] += 1;
                        if pick[i] < choices[i].len() {
                            break;
                        }
                        pick[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
        for e in 0..h.edge_count() {
            if !edges.contains(&e) {
                edges.push(e);
                grow(h, edges, out);
                edges.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    grow(h, &mut Vec::new(), &mut out);
    out
}

pub fn p_ell_qualifies(h: &Hypergraph, inside: &[bool], ell: usize, d: usize) -> bool {
    (0..h.vertex_count()).filter(|&v| inside[v]).all(|v| {
        h.star(v)
            .iter()
            .filter(|&&e| h.edge(e).iter().filter(|&&x| inside[x]).count() >= ell)
            .count()
            >= d
    })
}

pub fn p2_star_qualifies(h: &Hypergraph, inside: &[bool], d: usize) -> bool {
    (0..h.edge_count()).filter(|&e| inside[e]).all(|e| {
        h.edge(e)
            .iter()
            .filter(|&&v| h.star(v).iter().any(|&f| f != e && inside[f]))
            .count()
            >= d
    })
}

/// Union of all qualifying subsets of `0..n`, plus whether that union
/// qualifies itself.
fn union_of_qualifying(n: usize, qualifies: impl Fn(&[bool]) -> bool) -> (Vec<usize>, bool) {
    assert!(n <= 20, "subset enumeration over {n} elements");
    let mut union = vec![false; n];
    let mut inside = vec![false; n];
    for mask in 0u32..(1 << n) {
        for (i, slot) in inside.iter_mut().enumerate() {
            *slot = mask >> i & 1 == 1;
        }
        if qualifies(&inside) {
            for i in 0..n {
                union[i] |= inside[i];
            }
        }
    }
    let holds = qualifies(&union);
    ((0..n).filter(|&i| union[i]).collect(), holds)
}

/// The largest vertex set with the finite P_ℓ property, by subset
/// enumeration. The flag reports whether the union of all qualifying sets
/// qualifies (it always should).
pub fn largest_p_ell_set(h: &Hypergraph, ell: usize, d: usize) -> (Vec<usize>, bool) {
    union_of_qualifying(h.vertex_count(), |s| p_ell_qualifies(h, s, ell, d))
}

pub fn largest_p2_star_set(h: &Hypergraph, d: usize) -> (Vec<usize>, bool) {
    union_of_qualifying(h.edge_count(), |s| p2_star_qualifies(h, s, d))
}

/// Longest loose path (in edges) whose labels satisfy `mode`, by trying
/// every vertex ordering of every edge sequence.
pub fn longest_loose_path(h: &Hypergraph, k: usize, phi: &Labeling, mode: Mode) -> usize {
    struct Walk<'a> {
        h: &'a Hypergraph,
        k: usize,
        phi: &'a Labeling,
        mode: Mode,
        used: Vec<bool>,
        best: usize,
    }

    impl Walk<'_> {
        fn label(&self, i: usize) -> u64 {
            self.phi.get(i).expect("total labeling")
        }

        fn block_ok(&self, block: &[usize], e: usize, prev_edge: Option<usize>) -> bool {
            match self.mode {
                Mode::Full => block.windows(2).all(|w| self.label(w[0]) < self.label(w[1])),
                Mode::Skip => self.label(block[0]) < self.label(block[self.k - 1]),
                Mode::Edge => prev_edge.is_none_or(|p| self.label(p) < self.label(e)),
            }
        }

        fn extend(&mut self, last: usize, prev_edge: Option<usize>, len: usize) {
            self.best = self.best.max(len);
            for e in 0..self.h.edge_count() {
                let members = self.h.edge(e);
                if members.len() != self.k || !members.contains(&last) || prev_edge == Some(e) {
                    continue;
                }
                let mut rest: Vec<usize> = members.iter().copied().filter(|&v| v != last).collect();
                if rest.iter().any(|&v| self.used[v]) {
                    continue;
                }
                for order in permutations(&mut rest) {
                    let mut block = vec![last];
                    block.extend(&order);
                    if !self.block_ok(&block, e, prev_edge) {
                        continue;
                    }
                    for &v in &order {
                        self.used[v] = true;
                    }
                    self.extend(*order.last().unwrap(), Some(e), len + 1);
                    for &v in &order {
                        self.used[v] = false;
                    }
                }
            }
        }
    }

    let mut walk = Walk {
        h,
        k,
        phi,
        mode,
        used: vec![false; h.vertex_count()],
        best: 0,
    };
    for v in 0..h.vertex_count() {
        walk.used[v] = true;
        walk.extend(v, None, 0);
        walk.used[v] = false;
    }
    walk.best
}

fn permutations(items: &mut [usize]) -> Vec<Vec<usize>> {
    fn go(items: &mut [usize], i: usize, out: &mut Vec<Vec<usize>>) {
        if i == items.len() {
            out.push(items.to_vec());
            return;
        }
        for j in i..items.len() {
            items.swap(i, j);
            go(items, i + 1, out);
            items.swap(i, j);
        }
    }
    let mut out = Vec::new();
    go(items, 0, &mut out);
    out
}

/// A random β-path built by extending one step at a time, with every
/// extension re-checked by the β-path predicate. Returns `None` when the
/// chosen start lies in no edge.
pub fn random_beta_path<R: Rng>(h: &Hypergraph, rng: &mut R, max_edges: usize) -> Option<BetaSequence> {
    let start = rng.gen_range(0..h.vertex_count().max(1));
    if h.vertex_count() == 0 || h.degree(start) == 0 {
        return None;
    }
    let mut vertices = vec![start];
    let mut edges: Vec<usize> = Vec::new();
    let mut best: Option<BetaSequence> = None;
    while edges.len() < max_edges {
        let last = *vertices.last().unwrap();
        let mut options: Vec<(usize, usize)> = Vec::new();
        for &e in h.star(last) {
            for &w in h.edge(e) {
                let mut vs = vertices.clone();
                vs.push(w);
                let mut es = edges.clone();
                es.push(e);
                let Ok(s) = BetaSequence::path(vs, es) else { continue };
                if is_beta_path(h, &s).unwrap_or(false) {
                    options.push((e, w));
                }
            }
        }
        let Some(&(e, w)) = options.choose(rng) else { break };
        vertices.push(w);
        edges.push(e);
        best = Some(BetaSequence::path(vertices.clone(), edges.clone()).unwrap());
        if rng.gen_bool(0.25) {
            break;
        }
    }
    let s = best?;
    // Half the time return the trailing-edge form.
    if rng.gen_bool(0.5) {
        let trimmed = BetaSequence::path(s.vertices()[..s.edges().len()].to_vec(), s.edges().to_vec()).unwrap();
        if is_beta_path(h, &trimmed).unwrap_or(false) {
            return Some(trimmed);
        }
    }
    Some(s)
}

/// Pairs `(P1, P2)` of trailing-edge β-paths from a common start to a common
/// last edge with different penultimate vertices, drawn from `paths`.
pub fn reduction_inputs(paths: &[BetaSequence]) -> Vec<(BetaSequence, BetaSequence)> {
    let mut groups: BTreeMap<(usize, usize), Vec<&BetaSequence>> = BTreeMap::new();
    for p in paths.iter().filter(|p| p.ends_with_edge()) {
        groups
            .entry((p.first_vertex(), p.last_edge().unwrap()))
            .or_default()
            .push(p);
    }
    let mut out = Vec::new();
    for group in groups.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                if a.last_vertex() != b.last_vertex() {
                    out.push(((*a).clone(), (*b).clone()));
                }
            }
        }
    }
    out
}
