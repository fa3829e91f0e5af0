//! Simple undirected labeled graphs stored as per-vertex bit rows.

use crate::error::{Error, Result};

/// A finite, simple, undirected graph on vertices `0..n`.
///
/// The adjacency relation is stored as one bit row per vertex; rows are kept
/// symmetric and the diagonal is always zero (no self-loops).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    /// Build a graph from an edge list; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (iu, iv) = (u * self.stride + v / 64, v * self.stride + u / 64);
        if present {
            self.rows[iu] |= 1 << (v % 64);
            self.rows[iv] |= 1 << (u % 64);
        } else {
            self.rows[iu] &= !(1 << (v % 64));
            self.rows[iv] &= !(1 << (u % 64));
        }
    }

    /// Flip the adjacency between `u` and `v`.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        let present = self.has_edge(u, v);
        self.set_edge(u, v, !present);
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.rows[v * self.stride..(v + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.stride..(v + 1) * self.stride];
        row.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (
            &self.rows[u * self.stride..(u + 1) * self.stride],
            &self.rows[v * self.stride..(v + 1) * self.stride],
        );
        ru.iter().zip(rv).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Apply a vertex relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Complement graph: `{i,j}` is an edge iff `i != j` and it is not one here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    /// Disjoint union, relabeling each summand by a running offset.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n = parts.iter().map(|g| g.n).sum();
        let mut out = Graph::empty(n);
        let mut offset = 0;
        for g in parts {
            for (u, v) in g.edges() {
                out.set_edge(offset + u, offset + v, true);
            }
            offset += g.n;
        }
        out
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut out = Graph::disjoint_union(&[self.clone(), other.clone()]);
        for u in 0..self.n {
            for v in 0..other.n {
                out.set_edge(u, self.n + v, true);
            }
        }
        out
    }

    /// Line graph: one vertex per edge (in lexicographic edge order),
    /// adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut out = Graph::empty(edges.len());
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    out.set_edge(i, j, true);
                }
            }
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` preserving order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vertices.len());
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Graph with vertex `v` deleted; remaining vertices keep their order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Upper-triangle adjacency bits, row-major: (0,1), (0,2), ..., (n-2,n-1).
    pub fn triangle_bits(&self) -> Vec<u64> {
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; nbits.div_ceil(64).max(1)];
        let mut idx = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    bits[idx / 64] |= 1 << (idx % 64);
                }
                idx += 1;
            }
        }
        bits
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
    use crate::canon::are_isomorphic;
    use crate::family::{generate, FamilySpec};

    #[test]
    fn from_edges_deduplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert!(matches!(Graph::from_edges(3, &[(2, 2)]), Err(Error::SelfLoop(2))));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let kn = generate(&FamilySpec::Complete(6)).unwrap();
        assert_eq!(kn.complement(), Graph::empty(6));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(are_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let sub = k5.induced(&[0, 2, 4]).unwrap();
        assert!(are_isomorphic(&sub, &generate(&FamilySpec::Complete(3)).unwrap()));
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let p3 = c5.induced(&[0, 1, 2]).unwrap();
        assert!(are_isomorphic(&p3, &generate(&FamilySpec::Path(3)).unwrap()));
        assert!(c5.induced(&[0, 9]).is_err());
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = generate(&FamilySpec::CompleteBipartite(40, 40)).unwrap();
        assert_eq!(g.vertex_count(), 80);
        assert_eq!(g.edge_count(), 1600);
        assert_eq!(g.degree(0), 40);
        assert!(g.has_edge(0, 79) && !g.has_edge(0, 39));
        let relabeled = g.relabel(&(0..80).rev().collect::<Vec<_>>());
        assert_eq!(relabeled.edge_count(), 1600);
    }
}
