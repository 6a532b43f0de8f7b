//! Simple undirected graphs on vertices `0..n` with bit-vector adjacency.
//!
//! Every set of vertices is a [`VertexSet`]: a fixed-capacity bit vector.
//! Neighborhood rows are themselves `VertexSet`s, so intersection-heavy
//! work (common neighbors, candidate masks in pattern search) is word
//! parallel.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("multiplicity vector has length {got}, graph has {n} vertices")]
    MultiplicityLength { got: usize, n: usize },
    #[error("multiplicity 0 at vertex {v}; every image set must be nonempty")]
    ZeroMultiplicity { v: usize },
    #[error("vertex set capacity {cap} does not match graph order {n}")]
    CapacityMismatch { cap: usize, n: usize },
}

/// Fixed-capacity set of vertices, one bit per vertex.
///
/// Capacity is part of the value: operations that combine two sets require
/// equal capacity. Bits above the capacity stay zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    cap: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(cap: usize) -> Self {
        VertexSet {
            cap,
            words: vec![0; cap.div_ceil(64)],
        }
    }

    pub fn full(cap: usize) -> Self {
        let mut s = Self::empty(cap);
        for v in 0..cap {
            s.insert(v);
        }
        s
    }

    pub fn from_slice(cap: usize, vs: &[usize]) -> Self {
        let mut s = Self::empty(cap);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    pub fn singleton(cap: usize, v: usize) -> Self {
        let mut s = Self::empty(cap);
        s.insert(v);
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.cap
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.cap, "vertex {v} out of capacity {}", self.cap);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.cap, "vertex {v} out of capacity {}", self.cap);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.cap && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest vertex in the set, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_cap(&self, other: &VertexSet) {
        assert_eq!(
            self.cap, other.cap,
            "vertex sets of different capacity combined"
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_cap(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_cap(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_cap(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_cap(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_cap(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

/// Undirected simple graph. Adjacency is symmetric and loop-free by
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; a
    /// self-loop or an endpoint `>= n` is an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("internal edge out of range");
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Union of `N(v)` over `v` in `s`, not subtracting `s` itself.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// True if `s` together with its neighborhood covers every vertex.
    pub fn dominates(&self, s: &VertexSet) -> bool {
        let mut cover = self.neighborhood_of_set(s);
        cover.union_with(s);
        cover.len() == self.n
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Subgraph induced by `s`, relabeled to `0..s.len()` in ascending
    /// order of the original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.capacity() != self.n {
            return Err(GraphError::CapacityMismatch {
                cap: s.capacity(),
                n: self.n,
            });
        }
        Ok(self.induced(s))
    }

    pub(crate) fn induced(&self, s: &VertexSet) -> Graph {
        let verts = s.to_vec();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Replaces each vertex `v` by an independent set of `mult[v]` copies;
    /// copies of `u` and `v` are adjacent iff `uv` was an edge. Every
    /// multiplicity must be at least 1.
    ///
    /// Copy `k` of vertex `v` gets id `off[v] + k` where `off` is the
    /// prefix sum of `mult`, so multiplicity-1 vertices keep their relative
    /// order.
    pub fn substitute_independent_sets(&self, mult: &[usize]) -> Result<Graph, GraphError> {
        if mult.len() != self.n {
            return Err(GraphError::MultiplicityLength {
                got: mult.len(),
                n: self.n,
            });
        }
        if let Some(v) = (0..self.n).find(|&v| mult[v] == 0) {
            return Err(GraphError::ZeroMultiplicity { v });
        }
        let mut off = vec![0usize; self.n + 1];
        for v in 0..self.n {
            off[v + 1] = off[v] + mult[v];
        }
        let mut g = Graph::empty(off[self.n]);
        for (u, v) in self.edges() {
            for a in off[u]..off[u + 1] {
                for b in off[v]..off[v + 1] {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Mycielski construction: original vertices `0..n`, shadow of `u` at
    /// `n + u` adjacent to `N(u)`, apex `2n` adjacent to every shadow.
    pub fn mycielskian(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
            g.add_edge(n + u, v);
            g.add_edge(u, n + v);
        }
        for u in 0..n {
            g.add_edge(n + u, 2 * n);
        }
        g
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// A graph with no vertices or one component counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        s.insert(69);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![0, 69]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(69));
        assert!(!s.contains(0));
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_slice(10, &[1, 3, 5]);
        let b = VertexSet::from_slice(10, &[3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::from_slice(10, &[3]).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        );
        // duplicates collapse
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degrees_and_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(k4.complement().complement(), k4);
    }

    #[test]
    fn induced_subgraph_relabels() {
        // C6 minus one vertex is P5
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let s = VertexSet::from_slice(6, &[0, 1, 2, 3, 4]);
        let p5 = c6.induced_subgraph(&s).unwrap();
        assert_eq!(p5.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);

        let bad = VertexSet::from_slice(7, &[0]);
        assert!(matches!(
            c6.induced_subgraph(&bad),
            Err(GraphError::CapacityMismatch { .. })
        ));
    }

    #[test]
    fn join_of_point_and_two_edges_is_butterfly() {
        let k1 = Graph::empty(1);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let b = k1.join(&two_k2);
        assert_eq!(b.n(), 5);
        assert_eq!(b.edge_count(), 6);
        assert_eq!(b.degree(0), 4);
    }

    #[test]
    fn substitution_identity() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let same = c5.substitute_independent_sets(&[1; 5]).unwrap();
        assert_eq!(same, c5);
    }

    #[test]
    fn substitution_rejects_zero_and_bad_length() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            c5.substitute_independent_sets(&[1, 1, 0, 1, 1]),
            Err(GraphError::ZeroMultiplicity { v: 2 })
        );
        assert_eq!(
            c5.substitute_independent_sets(&[1, 1]),
            Err(GraphError::MultiplicityLength { got: 2, n: 5 })
        );
    }

    #[test]
    fn substitution_duplicates_one_vertex() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let g = c5.substitute_independent_sets(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(g.n(), 6);
        // both copies of vertex 0 see the old neighbors of 0 and not each other
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.neighbors(0).to_vec(), g.neighbors(1).to_vec());
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn mycielskian_shape() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let m = c5.mycielskian();
        assert_eq!(m.n(), 11);
        assert_eq!(m.edge_count(), 20);
        // apex sees exactly the shadows
        assert_eq!(m.neighbors(10).to_vec(), vec![5, 6, 7, 8, 9]);
        // shadow of 0 sees N(0) = {1, 4} and the apex
        assert_eq!(m.neighbors(5).to_vec(), vec![1, 4, 10]);
    }

    #[test]
    fn components_ordered_by_smallest_member() {
        let g = Graph::from_edges(5, &[(1, 3), (0, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 4]);
        assert_eq!(comps[1].to_vec(), vec![1, 3]);
        assert_eq!(comps[2].to_vec(), vec![2]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }
}
