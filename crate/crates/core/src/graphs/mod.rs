//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency rows are single `u64` words, so induced-subgraph tests and
//! clique searches reduce to bitwise operations.

mod canon;
mod enumerate;
mod graph6;
mod induced;

pub use canon::{canonical_form, CanonicalForm, CANON_MAX_VERTICES};
pub use enumerate::{enumerate_connected, ENUMERATE_MAX_VERTICES};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use induced::{contains_induced, contains_induced_naive};

use crate::error::{Error, Result};
use std::fmt;

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Index of the largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Equality is labelled equality; use [`canonical_form`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            requested: n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are
    /// an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_capacity(n)?;
        let mask = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            for v in VertexSet(row).iter() {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|u| !self.adj[u] & full & !(1u64 << u)).collect();
        Graph { n: self.n, adj }
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if let Some(m) = s.max() {
            self.check_vertex(m)?;
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adjacent(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph { n: verts.len(), adj })
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.vertices();
        let mut count = 0;
        while let Some(v) = left.iter().next() {
            left = VertexSet(left.0 & !self.component_of(v).0);
            count += 1;
        }
        count
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        max_clique(&self.adj, 0, self.vertices().0, &mut best);
        best
    }

    /// Size of a largest stable set.
    pub fn stability_number(&self) -> usize {
        self.complement().clique_number()
    }
}

// Branch and bound: `size` vertices chosen so far, `cand` still extendable.
fn max_clique(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        max_clique(adj, size + 1, cand & adj[v], best);
    }
    *best = (*best).max(size);
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", write_graph6(self), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    check_capacity(n)?;
    let full = VertexSet::full(n).0;
    Ok(Graph {
        n,
        adj: (0..n).map(|u| full & !(1u64 << u)).collect(),
    })
}

/// The edgeless graph `T_n`.
pub fn trivial_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle `C_n`; for `n < 3` this degenerates to the path.
pub fn cycle(n: usize) -> Result<Graph> {
    let mut g = path(n)?;
    if n >= 3 {
        g.add_edge(n - 1, 0)?;
    }
    Ok(g)
}

/// `K_{n_1, .., n_k}` with each part occupying consecutive indices.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    check_capacity(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `g + h`: vertices of `g` first, no edges between the two sides.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    combine(g, h, false)
}

/// `g ∨ h`: vertices of `g` first, every cross edge present.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    combine(g, h, true)
}

fn combine(g: &Graph, h: &Graph, cross: bool) -> Result<Graph> {
    let n = g.n + h.n;
    check_capacity(n)?;
    let g_mask = VertexSet::full(g.n).0;
    let h_mask = VertexSet::full(n).0 & !g_mask;
    let mut adj = Vec::with_capacity(n);
    for u in 0..g.n {
        adj.push(g.adj[u] | if cross { h_mask } else { 0 });
    }
    for u in 0..h.n {
        adj.push((h.adj[u] << g.n) | if cross { g_mask } else { 0 });
    }
    Ok(Graph { n, adj })
}

/// Cone over `g`: a new apex (vertex 0) joined to every vertex.
pub fn cone(g: &Graph) -> Result<Graph> {
    join(&complete(1)?, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let k2 = complete(2).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let t3 = trivial_graph(3).unwrap();
        assert_eq!((t3.order(), t3.edge_count()), (3, 0));
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3).unwrap());
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(matches!(complete(65), Err(Error::Capacity { .. })));
    }

    #[test]
    fn union_and_join() {
        let star = join(&complete(1).unwrap(), &trivial_graph(3).unwrap()).unwrap();
        assert_eq!(star, complete_multipartite(&[1, 3]).unwrap());
        let k2 = complete(2).unwrap();
        let two_k2 = disjoint_union(&k2, &k2).unwrap();
        assert_eq!((two_k2.order(), two_k2.edge_count()), (4, 2));
        let coned = join(&complete(1).unwrap(), &two_k2).unwrap();
        assert_eq!(coned.degree(0), 4);
        assert_eq!(coned.edge_count(), 6);
        let big = trivial_graph(40).unwrap();
        assert!(join(&big, &big).is_err());
    }

    #[test]
    fn induced_and_delete() {
        let p4 = path(4).unwrap();
        let p3 = p4.induced_subgraph(VertexSet::from_indices([0, 1, 2])).unwrap();
        assert_eq!(p3, path(3).unwrap());
        assert_eq!(complete(4).unwrap().delete_vertex(0).unwrap(), complete(3).unwrap());
        let c5 = cycle(5).unwrap();
        let two = c5.induced_subgraph(VertexSet::from_indices([0, 2])).unwrap();
        assert_eq!(two, trivial_graph(2).unwrap());
        assert!(c5.induced_subgraph(VertexSet::singleton(7)).is_err());
        assert!(c5.delete_vertex(5).is_err());
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
    }

    #[test]
    fn clique_and_stability() {
        assert_eq!(cycle(5).unwrap().clique_number(), 2);
        assert_eq!(complete_multipartite(&[3, 3]).unwrap().stability_number(), 3);
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(prism.clique_number(), 3);
        assert_eq!(complete(7).unwrap().clique_number(), 7);
        assert_eq!(trivial_graph(0).unwrap().clique_number(), 0);
    }

    #[test]
    fn connectivity() {
        assert!(path(5).unwrap().is_connected());
        assert!(!trivial_graph(2).unwrap().is_connected());
        assert!(trivial_graph(1).unwrap().is_connected());
        let k2 = complete(2).unwrap();
        let u = disjoint_union(&k2, &complete(3).unwrap()).unwrap();
        assert_eq!(u.component_count(), 2);
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }
}
