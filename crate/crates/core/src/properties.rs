//! Finite-threshold versions of the vertex property P_ℓ and the edge
//! property P_2*, computed by peeling to the greatest fixpoint.
//!
//! "Infinitely many" becomes "at least `d`". For P_ℓ a vertex set `W`
//! qualifies when every `v ∈ W` lies in at least `d` edges meeting `W` in at
//! least `ℓ` vertices. For P_2* an edge set `F` qualifies when every `e ∈ F`
//! has at least `d` vertices that also lie in another edge of `F`.
//! Qualification is closed under union, so a unique largest set exists and
//! deleting violators in any order reaches it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{dual, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Element {
    Vertices,
    Edges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelRound {
    pub round: usize,
    pub removed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    pub element: Element,
    /// Indices of the surviving vertices or edges, ascending.
    pub witness: Vec<usize>,
    /// Qualifying incidences of each witness element, counted inside the witness.
    pub counts: BTreeMap<usize, usize>,
    pub trace: Vec<PeelRound>,
    pub warnings: Vec<String>,
}

/// Incidence counts against the current alive sets. Shared by the
/// synchronous and the sequential peelers.
struct VertexPeel<'a> {
    h: &'a Hypergraph,
    ell: usize,
    alive: Vec<bool>,
    /// |W ∩ e| for every edge.
    inside: Vec<usize>,
}

impl<'a> VertexPeel<'a> {
    fn new(h: &'a Hypergraph, ell: usize) -> Self {
        VertexPeel {
            h,
            ell,
            alive: vec![true; h.vertex_count()],
            inside: h.edges().iter().map(Vec::len).collect(),
        }
    }

    fn count(&self, v: usize) -> usize {
        self.h
            .star(v)
            .iter()
            .filter(|&&e| self.inside[e] >= self.ell)
            .count()
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for &e in self.h.star(v) {
            self.inside[e] -= 1;
        }
    }
}

struct EdgePeel<'a> {
    h: &'a Hypergraph,
    alive: Vec<bool>,
    /// Number of alive edges through each vertex.
    degree: Vec<usize>,
}

impl<'a> EdgePeel<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        EdgePeel {
            h,
            alive: vec![true; h.edge_count()],
            degree: (0..h.vertex_count()).map(|v| h.degree(v)).collect(),
        }
    }

    /// Vertices of `e` shared with another alive edge (`e` itself alive).
    fn count(&self, e: usize) -> usize {
        self.h.edge(e).iter().filter(|&&v| self.degree[v] >= 2).count()
    }

    fn remove(&mut self, e: usize) {
        self.alive[e] = false;
        for &v in self.h.edge(e) {
            self.degree[v] -= 1;
        }
    }
}

fn check_threshold(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Largest vertex set in which every vertex has at least `d` edges meeting
/// the set in at least `ell` vertices. All violators of a round are removed
/// together.
pub fn peel_p_ell(h: &Hypergraph, ell: usize, d: usize) -> Result<PeelResult> {
    check_threshold("ell", ell)?;
    check_threshold("d", d)?;
    let mut warnings = Vec::new();
    let rank = h.edges().iter().map(Vec::len).max().unwrap_or(0);
    if ell > rank && h.edge_count() > 0 {
        warnings.push(format!(
            "ell = {ell} exceeds the largest edge size {rank}; the witness is empty"
        ));
    }
    let mut peel = VertexPeel::new(h, ell);
    let mut trace = Vec::new();
    loop {
        let doomed: Vec<usize> = (0..h.vertex_count())
            .filter(|&v| peel.alive[v] && peel.count(v) < d)
            .collect();
        if doomed.is_empty() {
            break;
        }
        for &v in &doomed {
            peel.remove(v);
        }
        trace.push(PeelRound {
            round: trace.len() + 1,
            removed: doomed,
        });
    }
    let witness: Vec<usize> = (0..h.vertex_count()).filter(|&v| peel.alive[v]).collect();
    let counts = witness.iter().map(|&v| (v, peel.count(v))).collect();
    Ok(PeelResult {
        element: Element::Vertices,
        witness,
        counts,
        trace,
        warnings,
    })
}

/// Largest edge set in which every edge has at least `d` vertices lying in
/// some other edge of the set.
pub fn peel_p2_star(h: &Hypergraph, d: usize) -> Result<PeelResult> {
    check_threshold("d", d)?;
    let mut peel = EdgePeel::new(h);
    let mut trace = Vec::new();
    loop {
        let doomed: Vec<usize> = (0..h.edge_count())
            .filter(|&e| peel.alive[e] && peel.count(e) < d)
            .collect();
        if doomed.is_empty() {
            break;
        }
        for &e in &doomed {
            peel.remove(e);
        }
        trace.push(PeelRound {
            round: trace.len() + 1,
            removed: doomed,
        });
    }
    let witness: Vec<usize> = (0..h.edge_count()).filter(|&e| peel.alive[e]).collect();
    let counts = witness.iter().map(|&e| (e, peel.count(e))).collect();
    Ok(PeelResult {
        element: Element::Edges,
        witness,
        counts,
        trace,
        warnings: Vec::new(),
    })
}

/// P_ℓ peeling that removes one violating vertex at a time, always the
/// first violator in `priority`. Returns the surviving vertices.
pub fn peel_p_ell_in_order(h: &Hypergraph, ell: usize, d: usize, priority: &[usize]) -> Vec<usize> {
    let mut peel = VertexPeel::new(h, ell);
    while let Some(&v) = priority.iter().find(|&&v| peel.alive[v] && peel.count(v) < d) {
        peel.remove(v);
    }
    (0..h.vertex_count()).filter(|&v| peel.alive[v]).collect()
}

/// P_2* counterpart of [`peel_p_ell_in_order`].
pub fn peel_p2_star_in_order(h: &Hypergraph, d: usize, priority: &[usize]) -> Vec<usize> {
    let mut peel = EdgePeel::new(h);
    while let Some(&e) = priority.iter().find(|&&e| peel.alive[e] && peel.count(e) < d) {
        peel.remove(e);
    }
    (0..h.edge_count()).filter(|&e| peel.alive[e]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub holds: bool,
    /// P_2 witness of `h`, mapped to dual edges `v*`.
    pub mapped_witness: Vec<usize>,
    /// P_2* witness of the dual.
    pub dual_witness: Vec<usize>,
}

/// Compares the P_2 witness of `h`, pushed through `v ↦ v*`, with the
/// P_2* witness of the dual, element by element.
pub fn p2_duality_check(h: &Hypergraph, d: usize) -> Result<DualityCheck> {
    let dh = dual(h)?;
    let primal = peel_p_ell(h, 2, d)?;
    let mut mapped_witness: Vec<usize> = primal
        .witness
        .iter()
        .map(|&v| dh.correspondence.dual_edge(v))
        .collect();
    mapped_witness.sort_unstable();
    let dual_witness = peel_p2_star(&dh.hypergraph, d)?.witness;
    Ok(DualityCheck {
        holds: mapped_witness == dual_witness,
        mapped_witness,
        dual_witness,
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

    fn sunflower() -> Hypergraph {
        hg(&[&["c", "a1", "b1"], &["c", "a2", "b2"], &["c", "a3", "b3"]])
    }

    fn loose() -> Hypergraph {
        hg(&[&["1", "2", "3"], &["3", "4", "5"], &["5", "6", "7"]])
    }

    #[test]
    fn p_ell_examples() {
        let r = peel_p_ell(&pasch(), 2, 2).unwrap();
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4, 5]);
        assert!(r.trace.is_empty());
        assert!(r.counts.values().all(|&c| c == 2));

        let r = peel_p_ell(&sunflower(), 2, 2).unwrap();
        assert!(r.witness.is_empty());
        // Petals go first, the centre follows.
        assert_eq!(r.trace.len(), 2);
        assert_eq!(r.trace[1].removed, vec![0]);

        let empty = Hypergraph::from_edges::<&str>(&[]).unwrap();
        assert!(peel_p_ell(&empty, 2, 1).unwrap().witness.is_empty());
    }

    #[test]
    fn p_ell_above_rank_warns() {
        let r = peel_p_ell(&pasch(), 4, 1).unwrap();
        assert!(r.witness.is_empty());
        assert_eq!(r.warnings.len(), 1);
        assert!(peel_p_ell(&pasch(), 0, 1).is_err());
    }

    #[test]
    fn p2_star_examples() {
        assert_eq!(peel_p2_star(&pasch(), 2).unwrap().witness, vec![0, 1, 2, 3]);
        let r = peel_p2_star(&loose(), 2).unwrap();
        assert!(r.witness.is_empty());
        assert_eq!(r.trace[0].removed, vec![0, 2]);
        assert_eq!(r.trace[1].removed, vec![1]);
        let single = hg(&[&["a", "b", "c"]]);
        assert!(peel_p2_star(&single, 1).unwrap().witness.is_empty());
    }

    #[test]
    fn sequential_matches_synchronous() {
        let h = sunflower();
        let order: Vec<usize> = (0..h.vertex_count()).rev().collect();
        assert!(peel_p_ell_in_order(&h, 2, 2, &order).is_empty());
        let h = pasch();
        assert_eq!(peel_p2_star_in_order(&h, 2, &[3, 2, 1, 0]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn duality_examples() {
        assert!(p2_duality_check(&pasch(), 2).unwrap().holds);
        assert!(p2_duality_check(&sunflower().dual_ready(), 2).unwrap().holds);
        assert!(p2_duality_check(&loose().dual_ready(), 1).unwrap().holds);
        assert_eq!(
            p2_duality_check(&sunflower(), 2).unwrap_err().name(),
            "DuplicateStar"
        );
    }
}
