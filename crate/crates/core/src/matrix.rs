//! Exact matrices associated with a graph.

use crate::charpoly::{rat, Rat};
use crate::graph::Graph;
use num_traits::Zero;

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other.get(k, j);
                    out.data[i * other.cols + j] += prod;
                }
            }
        }
        out
    }
}

/// The exact matrix of the requested kind; complement kinds build the
/// matrix of the complement graph.
pub fn matrix_of(g: &Graph, kind: crate::spectra::MatrixKind) -> ExactMatrix {
    use crate::spectra::MatrixKind::*;
    match kind {
        A => adjacency_matrix(g),
        L => laplacian_matrix(g),
        Q => signless_laplacian_matrix(g),
        NL => normalized_laplacian_surrogate(g),
        ComplementA => adjacency_matrix(&g.complement()),
        ComplementL => laplacian_matrix(&g.complement()),
        ComplementQ => signless_laplacian_matrix(&g.complement()),
        ComplementNL => normalized_laplacian_surrogate(&g.complement()),
    }
}

pub fn adjacency_matrix(g: &Graph) -> ExactMatrix {
    let n = g.vertex_count();
    let mut m = ExactMatrix::zero(n, n);
    for (u, v) in g.edges() {
        m.set(u, v, rat(1));
        m.set(v, u, rat(1));
    }
    m
}

pub fn laplacian_matrix(g: &Graph) -> ExactMatrix {
    let n = g.vertex_count();
    let mut m = ExactMatrix::zero(n, n);
    for v in 0..n {
        m.set(v, v, rat(g.degree(v) as i64));
    }
    for (u, v) in g.edges() {
        m.set(u, v, rat(-1));
        m.set(v, u, rat(-1));
    }
    m
}

pub fn signless_laplacian_matrix(g: &Graph) -> ExactMatrix {
    let n = g.vertex_count();
    let mut m = ExactMatrix::zero(n, n);
    for v in 0..n {
        m.set(v, v, rat(g.degree(v) as i64));
    }
    for (u, v) in g.edges() {
        m.set(u, v, rat(1));
        m.set(v, u, rat(1));
    }
    m
}

/// Random-walk surrogate `D^+ (D - A)` for the normalized Laplacian: similar
/// to the symmetric normalized Laplacian, so it has the same spectrum, but
/// its entries stay rational. Rows of isolated vertices are zero, matching
/// the convention that d^{-1/2}(v) = 0 for isolated v.
pub fn normalized_laplacian_surrogate(g: &Graph) -> ExactMatrix {
    let n = g.vertex_count();
    let mut m = ExactMatrix::zero(n, n);
    for v in 0..n {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        m.set(v, v, rat(1));
        let inv = Rat::new(num_bigint::BigInt::from(-1), num_bigint::BigInt::from(d as i64));
        for w in g.neighbors(v) {
            m.set(v, w, inv.clone());
        }
    }
    m
}

/// Incidence matrix B (n x m) and oriented incidence N (n x m). Edges are
/// taken in lexicographic order; the orientation points each edge from its
/// smaller endpoint (tail, -1) to its larger (head, +1).
pub fn incidence_matrices(g: &Graph) -> (ExactMatrix, ExactMatrix) {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut b = ExactMatrix::zero(n, edges.len());
    let mut o = ExactMatrix::zero(n, edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        b.set(u, j, rat(1));
        b.set(v, j, rat(1));
        o.set(u, j, rat(-1));
        o.set(v, j, rat(1));
    }
    (b, o)
}
