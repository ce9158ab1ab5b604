//! Exhaustive enumeration of linear subdigraphs and closed walks.
//!
//! Both enumerators are exponential in the length asked for. Output order is
//! canonical and stable: subdigraphs are produced by a vertex-by-vertex cover
//! search, walks depth-first by start vertex and then by successor.

use std::fmt;

use thiserror::Error;

use crate::graph::WeightedDigraph;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("length {r} out of range 0..={n}")]
    LengthOutOfRange { r: usize, n: usize },
    #[error("walk length must be at least 1")]
    ZeroWalkLength,
}

/// A directed simple cycle, rotated so its smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes the rotation. Returns `None` for an empty list or one
    /// with a repeated vertex.
    pub fn new(mut vertices: Vec<usize>) -> Option<Cycle> {
        let min_at = vertices.iter().enumerate().min_by_key(|&(_, v)| *v)?.0;
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return None;
        }
        vertices.rotate_left(min_at);
        Some(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Arcs in traversal order, closing arc last.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |t| (self.vertices[t], self.vertices[(t + 1) % k]))
    }

    /// The cycle read as a closed walk starting and ending at `v`.
    pub fn walk_from(&self, v: usize) -> Option<ClosedWalk> {
        let at = self.vertices.iter().position(|&x| x == v)?;
        let mut seq: Vec<usize> = self.vertices[at..].iter().chain(&self.vertices[..at]).copied().collect();
        seq.push(v);
        Some(ClosedWalk { vertices: seq })
    }

    pub fn weight<R: Ring>(&self, g: &WeightedDigraph<R>) -> R {
        self.arcs()
            .fold(R::one(), |acc, (u, v)| acc.mul_ref(&g.weight_or_zero(u, v)))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, v) in self.vertices.iter().enumerate() {
            if t > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A set of pairwise vertex-disjoint cycles, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LinearSubdigraph {
    cycles: Vec<Cycle>,
}

impl LinearSubdigraph {
    pub fn empty() -> Self {
        LinearSubdigraph::default()
    }

    /// Returns `None` if two cycles share a vertex.
    pub fn new(mut cycles: Vec<Cycle>) -> Option<Self> {
        cycles.sort_by_key(Cycle::min_vertex);
        let mut seen: Vec<usize> = cycles.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        let total = seen.len();
        seen.sort_unstable();
        seen.dedup();
        (seen.len() == total).then_some(LinearSubdigraph { cycles })
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// `L(γ)`: number of edges, equal to the number of vertices covered.
    pub fn len(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `c(γ)`.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Covered vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, v: usize) -> bool {
        self.cycles.iter().any(|c| c.contains(v))
    }

    pub fn cycle_through(&self, v: usize) -> Option<&Cycle> {
        self.cycles.iter().find(|c| c.contains(v))
    }

    /// This subdigraph minus one of its cycles.
    pub fn without(&self, cycle: &Cycle) -> LinearSubdigraph {
        LinearSubdigraph {
            cycles: self.cycles.iter().filter(|c| *c != cycle).cloned().collect(),
        }
    }

    /// This subdigraph plus a disjoint cycle; `None` if they overlap.
    pub fn with(&self, cycle: Cycle) -> Option<LinearSubdigraph> {
        let mut cycles = self.cycles.clone();
        cycles.push(cycle);
        LinearSubdigraph::new(cycles)
    }

    /// `w(γ)`; one for the empty subdigraph.
    pub fn weight<R: Ring>(&self, g: &WeightedDigraph<R>) -> R {
        self.cycles.iter().fold(R::one(), |acc, c| acc.mul_ref(&c.weight(g)))
    }

    /// `(-1)^{c(γ)}`.
    pub fn sign<R: Ring>(&self) -> R {
        R::sign(self.cycle_count())
    }

    /// `(-1)^{c(γ)} w(γ)`.
    pub fn signed_weight<R: Ring>(&self, g: &WeightedDigraph<R>) -> R {
        self.weight(g).signed(self.cycle_count())
    }
}

impl fmt::Display for LinearSubdigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("∅");
        }
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A closed walk `x_0, x_1, ..., x_k = x_0` with `k >= 1`. The start vertex
/// is part of its identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedWalk {
    vertices: Vec<usize>,
}

impl ClosedWalk {
    /// Returns `None` unless the sequence has at least two entries and ends
    /// where it starts.
    pub fn new(vertices: Vec<usize>) -> Option<Self> {
        (vertices.len() >= 2 && vertices.first() == vertices.last()).then_some(ClosedWalk { vertices })
    }

    /// Full sequence including the repeated endpoint.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `L(c)`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Whether every step is an edge of `g`.
    pub fn is_walk_in<R: Ring>(&self, g: &WeightedDigraph<R>) -> bool {
        self.arcs().all(|(u, v)| g.has_edge(u, v))
    }

    /// Whether the walk is a directed cycle: no vertex repeats before the
    /// return to the start.
    pub fn is_simple(&self) -> bool {
        let body = &self.vertices[..self.len()];
        let mut sorted = body.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == body.len()
    }

    /// `w(c)`.
    pub fn weight<R: Ring>(&self, g: &WeightedDigraph<R>) -> R {
        self.arcs()
            .fold(R::one(), |acc, (u, v)| acc.mul_ref(&g.weight_or_zero(u, v)))
    }
}

impl fmt::Display for ClosedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.vertices.iter().enumerate() {
            if t > 0 {
                f.write_str("→")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// All linear subdigraphs of length `r`, i.e. the set `L_r`.
///
/// For `r = 0` this is the single empty subdigraph. Cost grows with the
/// number of subdigraphs, which is at most `n!`-like for dense graphs.
pub fn enumerate_lsd<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<Vec<LinearSubdigraph>, EnumError> {
    let n = g.n();
    if r > n {
        return Err(EnumError::LengthOutOfRange { r, n });
    }
    let mut search = CoverSearch {
        g,
        covered: vec![false; n + 1],
        cycles: Vec::new(),
        out: Vec::new(),
    };
    search.cover(1, r);
    Ok(search.out)
}

struct CoverSearch<'g, R> {
    g: &'g WeightedDigraph<R>,
    covered: Vec<bool>,
    cycles: Vec<Cycle>,
    out: Vec<LinearSubdigraph>,
}

impl<R: Ring> CoverSearch<'_, R> {
    // Decide vertex `v`: either it leads a new cycle (as that cycle's
    // minimum) or it stays uncovered. Earlier vertices are already decided.
    fn cover(&mut self, v: usize, remaining: usize) {
        if remaining == 0 {
            self.out.push(LinearSubdigraph {
                cycles: self.cycles.clone(),
            });
            return;
        }
        let n = self.g.n();
        if v > n {
            return;
        }
        let free = (v..=n).filter(|&u| !self.covered[u]).count();
        if free < remaining {
            return;
        }
        if !self.covered[v] {
            let mut path = vec![v];
            self.covered[v] = true;
            self.extend_cycle(&mut path, remaining);
            self.covered[v] = false;
        }
        self.cover(v + 1, remaining);
    }

    fn extend_cycle(&mut self, path: &mut Vec<usize>, remaining: usize) {
        let head = path[0];
        let last = *path.last().unwrap();
        for &u in self.g.successors(last) {
            if u == head {
                self.cycles.push(Cycle { vertices: path.clone() });
                self.cover(head + 1, remaining - path.len());
                self.cycles.pop();
            } else if u > head && !self.covered[u] && path.len() < remaining {
                self.covered[u] = true;
                path.push(u);
                self.extend_cycle(path, remaining);
                path.pop();
                self.covered[u] = false;
            }
        }
    }
}

/// All closed walks of length exactly `k`, one per start vertex variant.
///
/// There are `Tr(B^k)` of them for the 0/1 adjacency matrix `B`, so up to
/// `n^k`.
pub fn enumerate_closed_walks<R: Ring>(g: &WeightedDigraph<R>, k: usize) -> Result<Vec<ClosedWalk>, EnumError> {
    let mut out = Vec::new();
    for_each_closed_walk(g, k, |seq| {
        out.push(ClosedWalk { vertices: seq.to_vec() })
    })?;
    Ok(out)
}

/// Calls `visit` with each closed walk of length `k` (as its full vertex
/// sequence) in the canonical order, without collecting them.
pub fn for_each_closed_walk<R: Ring>(
    g: &WeightedDigraph<R>,
    k: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), EnumError> {
    if k == 0 {
        return Err(EnumError::ZeroWalkLength);
    }
    let mut seq = Vec::with_capacity(k + 1);
    for s in 1..=g.n() {
        seq.clear();
        seq.push(s);
        walk_dfs(g, k, &mut seq, &mut visit);
    }
    Ok(())
}

fn walk_dfs<R: Ring>(g: &WeightedDigraph<R>, k: usize, seq: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let last = *seq.last().unwrap();
    if seq.len() == k {
        let s = seq[0];
        if g.has_edge(last, s) {
            seq.push(s);
            visit(seq);
            seq.pop();
        }
        return;
    }
    for &u in g.successors(last) {
        seq.push(u);
        walk_dfs(g, k, seq, visit);
        seq.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generic_digraph;
    use crate::ring::{parse_expr, RingElement};

    fn p(s: &str) -> RingElement {
        parse_expr(s, 2).unwrap()
    }

    fn complete(n: usize) -> WeightedDigraph<i64> {
        WeightedDigraph::from_matrix(&vec![vec![1i64; n]; n]).unwrap()
    }

    #[test]
    fn cycle_canonical_rotation() {
        let c = Cycle::new(vec![3, 1, 2]).unwrap();
        assert_eq!(c.vertices(), &[1, 2, 3]);
        assert_eq!(c.to_string(), "(1 2 3)");
        assert!(Cycle::new(vec![1, 2, 1]).is_none());
        assert!(Cycle::new(vec![]).is_none());
        assert_eq!(c.walk_from(2).unwrap().vertices(), &[2, 3, 1, 2]);
        assert_eq!(c.arcs().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn lsd_rejects_overlap() {
        let a = Cycle::new(vec![1, 2]).unwrap();
        let b = Cycle::new(vec![2]).unwrap();
        assert!(LinearSubdigraph::new(vec![a.clone(), b]).is_none());
        let l = LinearSubdigraph::new(vec![Cycle::new(vec![3]).unwrap(), a]).unwrap();
        assert_eq!(l.to_string(), "(1 2)(3)");
        assert_eq!(l.len(), 3);
        assert_eq!(l.cycle_count(), 2);
        assert_eq!(l.vertices(), vec![1, 2, 3]);
    }

    #[test]
    fn length_one_subdigraphs_are_the_loops() {
        let g = generic_digraph(2);
        let l1 = enumerate_lsd(&g, 1).unwrap();
        assert_eq!(l1.len(), 2);
        assert_eq!(l1[0].to_string(), "(1)");
        assert_eq!(l1[1].to_string(), "(2)");
        assert_eq!(l1[0].weight(&g), p("a"));
        assert_eq!(l1[1].weight(&g), p("d"));
    }

    #[test]
    fn length_two_subdigraphs() {
        let g = generic_digraph(2);
        let l2 = enumerate_lsd(&g, 2).unwrap();
        assert_eq!(l2.len(), 2);
        assert_eq!(l2[0].to_string(), "(1)(2)");
        assert_eq!(l2[0].weight(&g), p("ad"));
        assert_eq!(l2[0].sign::<RingElement>(), p("1"));
        assert_eq!(l2[1].to_string(), "(1 2)");
        assert_eq!(l2[1].weight(&g), p("bc"));
        assert_eq!(l2[1].sign::<RingElement>(), p("-1"));
    }

    #[test]
    fn empty_subdigraph() {
        let g = generic_digraph(2);
        let l0 = enumerate_lsd(&g, 0).unwrap();
        assert_eq!(l0, vec![LinearSubdigraph::empty()]);
        assert_eq!(l0[0].weight(&g), p("1"));
        assert_eq!(l0[0].sign::<RingElement>(), p("1"));
        assert_eq!(
            enumerate_lsd(&g, 3),
            Err(EnumError::LengthOutOfRange { r: 3, n: 2 })
        );
    }

    #[test]
    fn spanning_subdigraphs_of_complete_three() {
        // One per permutation of [3].
        let l3 = enumerate_lsd(&complete(3), 3).unwrap();
        assert_eq!(l3.len(), 6);
        let mut perms: Vec<Vec<usize>> = l3
            .iter()
            .map(|l| {
                let mut sigma = [0; 4];
                for c in l.cycles() {
                    for (u, v) in c.arcs() {
                        sigma[u] = v;
                    }
                }
                sigma[1..].to_vec()
            })
            .collect();
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 6);
    }

    #[test]
    fn closed_walks_two_by_two() {
        let g = generic_digraph(2);
        let w1 = enumerate_closed_walks(&g, 1).unwrap();
        assert_eq!(w1.iter().map(|w| w.to_string()).collect::<Vec<_>>(), vec!["1→1", "2→2"]);
        assert_eq!(w1[0].weight(&g), p("a"));
        assert_eq!(w1[1].weight(&g), p("d"));

        let w3 = enumerate_closed_walks(&g, 3).unwrap();
        assert_eq!(w3.len(), 8);
        let weights: Vec<RingElement> = w3.iter().map(|w| w.weight(&g)).collect();
        let count = |s: &str| weights.iter().filter(|w| **w == p(s)).count();
        assert_eq!(count("a^3"), 1);
        assert_eq!(count("d^3"), 1);
        assert_eq!(count("abc"), 3);
        assert_eq!(count("bcd"), 3);
        assert_eq!(enumerate_closed_walks(&g, 0), Err(EnumError::ZeroWalkLength));
    }

    #[test]
    fn walk_weights() {
        let g = generic_digraph(2);
        let w = |v: Vec<usize>| ClosedWalk::new(v).unwrap().weight(&g);
        assert_eq!(w(vec![1, 1, 1]), p("a^2"));
        assert_eq!(w(vec![1, 2, 1]), p("bc"));
        assert_eq!(w(vec![1, 1, 2, 1]), p("abc"));
        assert!(ClosedWalk::new(vec![1]).is_none());
        assert!(ClosedWalk::new(vec![1, 2]).is_none());
    }

    #[test]
    fn simplicity() {
        assert!(ClosedWalk::new(vec![1, 2, 3, 1]).unwrap().is_simple());
        assert!(ClosedWalk::new(vec![2, 2]).unwrap().is_simple());
        assert!(!ClosedWalk::new(vec![1, 1, 1]).unwrap().is_simple());
        assert!(!ClosedWalk::new(vec![1, 2, 1, 2, 1]).unwrap().is_simple());
    }

    #[test]
    fn complete_digraph_has_n_to_the_k_walks() {
        for n in 1..=3 {
            for k in 1..=5 {
                let count = enumerate_closed_walks(&complete(n), k).unwrap().len();
                assert_eq!(count, n.pow(k as u32));
            }
        }
    }

    #[test]
    fn sparse_graph_skips_missing_edges() {
        // 1 -> 2 -> 3 -> 1 only.
        let m = vec![vec![0i64, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let g = WeightedDigraph::from_matrix(&m).unwrap();
        assert!(enumerate_lsd(&g, 1).unwrap().is_empty());
        assert!(enumerate_lsd(&g, 2).unwrap().is_empty());
        assert_eq!(enumerate_lsd(&g, 3).unwrap().len(), 1);
        assert_eq!(enumerate_closed_walks(&g, 3).unwrap().len(), 3);
        assert!(enumerate_closed_walks(&g, 2).unwrap().is_empty());
    }
}
