//! Named graph families with deterministic, documented vertex labelings.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family instance. Every generator emits a fixed labeling so that
/// serialized fixtures are bit-stable across runs:
/// hubs come first (star, wheel, friendship, pyramid apexes), partite sets
/// are laid out in increasing size, and product-style constructions order
/// copies by owner index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// Star on `n` vertices, hub first: `S_n = K_{1,n-1}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// Turán graph `T(n,k)`: part sizes q (k-s times) then q+1 (s times).
    Turan(usize, usize),
    /// `K_k` joined with an independent set of `n-k` vertices; apex clique first.
    Pyramid(usize, usize),
    /// `p` triangles sharing a hub: `K_1 v (p K_2)`.
    Friendship(usize),
    /// `K_1 v (p K_q)`.
    GeneralizedFriendship(usize, usize),
    /// Wheel on `n` vertices: hub joined to a cycle of length `n-1`.
    Wheel(usize),
    /// Cycle of length `p` tied by a bridge to one end of a path on `n-p` vertices.
    Lollipop(usize, usize),
    /// Path with a triangle hung on each endpoint; `path_len >= 2` vertices in the path.
    Sandglass(usize),
    Petersen,
    /// Line graph of `K_{q,q}`, a strongly regular graph for `q >= 2`.
    Lattice(usize),
    /// Line graph of `K_k`.
    Triangular(usize),
    /// Cycle of length `l` with one pendant at position 0 and two pendants at
    /// each position reached by walking the given steps (each 4 or 6).
    NiceSunlike(usize, Vec<usize>),
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Complete(n) => {
            let mut g = Graph::empty(*n);
            for u in 0..*n {
                for v in (u + 1)..*n {
                    g.set_edge(u, v, true);
                }
            }
            Ok(g)
        }
        Empty(n) => Ok(Graph::empty(*n)),
        Path(n) => {
            let mut g = Graph::empty(*n);
            for i in 1..*n {
                g.set_edge(i - 1, i, true);
            }
            Ok(g)
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
            }
            let mut g = Graph::empty(*n);
            for i in 0..*n {
                g.set_edge(i, (i + 1) % n, true);
            }
            Ok(g)
        }
        Star(n) => {
            if *n == 0 {
                return Err(Error::InvalidFamily("star needs n >= 1".into()));
            }
            let mut g = Graph::empty(*n);
            for i in 1..*n {
                g.set_edge(0, i, true);
            }
            Ok(g)
        }
        CompleteBipartite(p, q) => {
            if *p == 0 || *q == 0 {
                return Err(Error::InvalidFamily("complete bipartite needs p,q >= 1".into()));
            }
            complete_multipartite(&[*p, *q])
        }
        CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(Error::InvalidFamily("parts must be nonempty positive sizes".into()));
            }
            let mut sorted = parts.clone();
            sorted.sort_unstable();
            complete_multipartite(&sorted)
        }
        Turan(n, k) => {
            if !(2 <= *k && *k <= *n) {
                return Err(Error::InvalidFamily(format!("Turan needs 2 <= k <= n, got n={n} k={k}")));
            }
            complete_multipartite(&turan_parts(*n, *k))
        }
        Pyramid(n, k) => {
            if !(1 <= *k && *k < *n) {
                return Err(Error::InvalidFamily(format!("pyramid needs 1 <= k < n, got n={n} k={k}")));
            }
            let clique = generate(&Complete(*k))?;
            Ok(clique.join(&Graph::empty(n - k)))
        }
        Friendship(p) => generate(&GeneralizedFriendship(*p, 2)),
        GeneralizedFriendship(p, q) => {
            if *p == 0 || *q == 0 {
                return Err(Error::InvalidFamily("generalized friendship needs p,q >= 1".into()));
            }
            let blades: Vec<Graph> = (0..*p).map(|_| generate(&Complete(*q)).unwrap()).collect();
            let hub = Graph::empty(1);
            Ok(hub.join(&Graph::disjoint_union(&blades)))
        }
        Wheel(n) => {
            if *n < 4 {
                return Err(Error::InvalidFamily(format!("wheel needs n >= 4, got {n}")));
            }
            let hub = Graph::empty(1);
            Ok(hub.join(&generate(&Cycle(n - 1))?))
        }
        Lollipop(n, p) => {
            if !(3 <= *p && *p < *n) {
                return Err(Error::InvalidFamily(format!("lollipop needs 3 <= p < n, got n={n} p={p}")));
            }
            // path on n-p vertices first, then the cycle; bridge from the
            // path's last vertex to the cycle's first
            let tail = n - p;
            let mut g = Graph::empty(*n);
            for i in 1..tail {
                g.set_edge(i - 1, i, true);
            }
            for i in 0..*p {
                g.set_edge(tail + i, tail + (i + 1) % p, true);
            }
            g.set_edge(tail - 1, tail, true);
            Ok(g)
        }
        Sandglass(path_len) => {
            if *path_len < 2 {
                return Err(Error::InvalidFamily("sandglass needs path_len >= 2".into()));
            }
            let l = *path_len;
            let mut g = Graph::empty(l + 4);
            for i in 1..l {
                g.set_edge(i - 1, i, true);
            }
            // triangle on the left pendant, then on the right
            g.set_edge(0, l, true);
            g.set_edge(0, l + 1, true);
            g.set_edge(l, l + 1, true);
            g.set_edge(l - 1, l + 2, true);
            g.set_edge(l - 1, l + 3, true);
            g.set_edge(l + 2, l + 3, true);
            Ok(g)
        }
        Petersen => Ok(generate(&Complete(5))?.line_graph().complement()),
        Lattice(q) => {
            if *q < 2 {
                return Err(Error::InvalidFamily(format!("lattice needs q >= 2, got {q}")));
            }
            Ok(generate(&CompleteBipartite(*q, *q))?.line_graph())
        }
        Triangular(k) => {
            if *k < 3 {
                return Err(Error::InvalidFamily(format!("triangular needs k >= 3, got {k}")));
            }
            Ok(generate(&Complete(*k))?.line_graph())
        }
        NiceSunlike(l, steps) => nice_sunlike(*l, steps),
    }
}

/// Turán part sizes `q` (k-s times) then `q+1` (s times), where `n = qk + s`.
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    let (q, s) = (n / k, n % k);
    let mut parts = vec![q; k - s];
    parts.extend(std::iter::repeat_n(q + 1, s));
    parts
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut bounds = Vec::with_capacity(parts.len() + 1);
    bounds.push(0);
    for p in parts {
        bounds.push(bounds.last().unwrap() + p);
    }
    let part_of = |v: usize| bounds.partition_point(|&b| b <= v) - 1;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of(u) != part_of(v) {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

fn nice_sunlike(l: usize, steps: &[usize]) -> Result<Graph> {
    if l < 3 {
        return Err(Error::InvalidFamily(format!("sunlike cycle needs l >= 3, got {l}")));
    }
    let mut positions = Vec::with_capacity(steps.len());
    let mut pos = 0usize;
    for &s in steps {
        if s != 4 && s != 6 {
            return Err(Error::InvalidFamily(format!("sunlike steps must be 4 or 6, got {s}")));
        }
        pos += s;
        if pos >= l {
            return Err(Error::InvalidFamily(format!(
                "sunlike walk leaves the cycle: position {pos} >= l = {l}"
            )));
        }
        positions.push(pos);
    }
    let k = positions.len();
    let mut g = Graph::empty(l + 1 + 2 * k);
    for i in 0..l {
        g.set_edge(i, (i + 1) % l, true);
    }
    // one pendant at the distinguished vertex, two at each step position
    g.set_edge(0, l, true);
    for (i, &p) in positions.iter().enumerate() {
        g.set_edge(p, l + 1 + 2 * i, true);
        g.set_edge(p, l + 2 + 2 * i, true);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    #[test]
    fn friendship_counts() {
        let g = generate(&FamilySpec::Friendship(4)).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(structure::triangle_count(&g), 4);
    }

    #[test]
    fn turan_17_7_parts() {
        assert_eq!(turan_parts(17, 7), vec![2, 2, 2, 2, 3, 3, 3]);
        let g = generate(&FamilySpec::Turan(17, 7)).unwrap();
        assert_eq!(g.vertex_count(), 17);
    }

    #[test]
    fn turan_degree_multisets() {
        for n in 2..=12usize {
            for k in 2..=n {
                let g = generate(&FamilySpec::Turan(n, k)).unwrap();
                let mut degs = g.degrees();
                degs.sort_unstable();
                let mut expected: Vec<usize> =
                    turan_parts(n, k).iter().flat_map(|&p| std::iter::repeat_n(n - p, p)).collect();
                expected.sort_unstable();
                assert_eq!(degs, expected, "T({n},{k})");
            }
        }
    }

    #[test]
    fn complete_bipartite_edges() {
        let g = generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn petersen_shape() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(structure::is_regular(&g), Some(3));
        assert_eq!(structure::girth(&g), Some(5));
    }

    #[test]
    fn line_graph_of_k5_is_triangular() {
        let lg = generate(&FamilySpec::Complete(5)).unwrap().line_graph();
        assert_eq!(lg.vertex_count(), 10);
        assert_eq!(structure::is_regular(&lg), Some(6));
    }

    #[test]
    fn line_graph_regular_degree_shift() {
        // line graph of a d-regular graph is (2d-2)-regular
        for spec in [FamilySpec::Cycle(6), FamilySpec::Complete(5), FamilySpec::Petersen] {
            let g = generate(&spec).unwrap();
            let d = structure::is_regular(&g).unwrap();
            let lg = g.line_graph();
            assert_eq!(structure::is_regular(&lg), Some(2 * d - 2));
            assert_eq!(lg.vertex_count(), g.vertex_count() * d / 2);
        }
    }

    #[test]
    fn lattice_4_is_16_vertex_6_regular() {
        let g = generate(&FamilySpec::Lattice(4)).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(structure::is_regular(&g), Some(6));
    }

    #[test]
    fn pyramid_is_join() {
        let g = generate(&FamilySpec::Pyramid(6, 2)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        // K_2 v empty(4): apexes have degree 5, base degree 2
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn wheel_is_hub_plus_cycle() {
        let g = generate(&FamilySpec::Wheel(5)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn lollipop_counts() {
        let g = generate(&FamilySpec::Lollipop(7, 4)).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 7); // path 2 + cycle 4 + bridge
        assert!(structure::is_connected(&g));
    }

    #[test]
    fn sandglass_is_two_triangles_on_a_path() {
        let g = generate(&FamilySpec::Sandglass(2)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(structure::triangle_count(&g), 2);
    }

    #[test]
    fn nice_sunlike_degrees() {
        let g = generate(&FamilySpec::NiceSunlike(14, vec![4, 6])).unwrap();
        assert_eq!(g.vertex_count(), 14 + 1 + 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.degree(10), 4);
        assert_eq!(g.degree(14), 1);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(generate(&FamilySpec::Turan(3, 5)).is_err());
        assert!(generate(&FamilySpec::Lollipop(4, 4)).is_err());
        assert!(generate(&FamilySpec::NiceSunlike(8, vec![4, 6])).is_err());
        assert!(generate(&FamilySpec::NiceSunlike(12, vec![5])).is_err());
    }
}
