//! Structural quantities extracted from fingerprints alone. Every operation
//! in this module consumes characteristic polynomials, never graphs, so
//! "determined by the spectrum" statements stay honest.

use crate::charpoly::{rat, CharPoly, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

fn exact_integer(value: Rat, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {}/{}", value.numer(), value.denom())))
    }
}

/// Edge count from an adjacency fingerprint: tr(A^2) / 2.
pub fn edges_from_spectrum(p_a: &CharPoly) -> Result<BigInt> {
    let sums = p_a.power_sums(2);
    exact_integer(sums[1].clone() / rat(2), "edges")
}

/// Triangle count from an adjacency fingerprint: tr(A^3) / 6.
pub fn triangles_from_spectrum(p_a: &CharPoly) -> Result<BigInt> {
    let sums = p_a.power_sums(3);
    exact_integer(sums[2].clone() / rat(6), "triangles")
}

/// Closed walks of length `len`: the power sum of that order.
pub fn closed_walks_from_spectrum(p_a: &CharPoly, len: usize) -> Result<BigInt> {
    assert!(len >= 1);
    let sums = p_a.power_sums(len);
    exact_integer(sums[len - 1].clone(), "closed walks")
}

/// Common degree when the adjacency fingerprint certifies regularity:
/// sum of squared eigenvalues equals n times the largest root. The check is
/// exact: d = p_2 / n must be an integer root with no root above it.
pub fn is_regular_from_spectrum(p_a: &CharPoly, n: usize) -> Option<usize> {
    if n == 0 || p_a.degree() != n {
        return None;
    }
    let sums = p_a.power_sums(2);
    let d_rat = sums[1].clone() / rat(n as i64);
    if !d_rat.is_integer() || d_rat.is_negative() {
        return None;
    }
    if p_a.root_multiplicity(&d_rat) == 0 {
        return None;
    }
    // no eigenvalue exceeds d: p(x + d) has no positive roots
    let shifted = p_a.shift(&d_rat);
    let (_, _, positives) = shifted.root_signature();
    if positives > 0 {
        return None;
    }
    Some(d_rat.to_integer().try_into().unwrap())
}

/// Bipartiteness from the adjacency fingerprint: the spectrum is symmetric
/// around zero iff p(x) = (-1)^n p(-x) coefficient-wise.
pub fn is_bipartite_from_a(p_a: &CharPoly) -> bool {
    let reflected = p_a.reflect();
    let n = p_a.degree();
    p_a.coeffs().iter().zip(reflected.coeffs()).all(|(c, r)| {
        if n.is_multiple_of(2) {
            c == r
        } else {
            *c == -r.clone()
        }
    })
}

/// Component count: multiplicity of 0 in the Laplacian fingerprint.
pub fn components_from_l(p_l: &CharPoly) -> usize {
    p_l.zero_root_multiplicity()
}

/// Bipartite-component count: multiplicity of 0 in the signless Laplacian
/// fingerprint.
pub fn bipartite_components_from_q(p_q: &CharPoly) -> usize {
    p_q.zero_root_multiplicity()
}

/// Kirchhoff count: product of the nonzero Laplacian eigenvalues divided by
/// n, i.e. |coefficient of x^1| / n. Rejects disconnected fingerprints.
pub fn spanning_trees(p_l: &CharPoly, n: usize) -> Result<BigInt> {
    if components_from_l(p_l) != 1 {
        return Err(Error::Disconnected(format!(
            "L-fingerprint has {} zero eigenvalues",
            components_from_l(p_l)
        )));
    }
    let c1 = p_l.coeff_of(1);
    exact_integer(c1.abs() / rat(n as i64), "spanning trees")
}

/// Bipartiteness from the L and Q fingerprints jointly: they agree exactly
/// when the graph is bipartite.
pub fn bipartite_from_l_and_q(p_l: &CharPoly, p_q: &CharPoly) -> Result<bool> {
    if p_l.degree() != p_q.degree() {
        return Err(Error::WrongKind {
            expected: "L and Q fingerprints of the same order".into(),
            reason: format!("degrees {} and {}", p_l.degree(), p_q.degree()),
        });
    }
    Ok(p_l == p_q)
}

/// Everything the spectra reveal about one graph, in one report. All fields
/// derive from fingerprints through the operations above; the graph itself
/// is consulted only to build the fingerprints.
#[derive(Debug, serde::Serialize)]
pub struct InvariantReport {
    pub edges: String,
    pub triangles: String,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub components: usize,
    pub bipartite_components: usize,
    pub srg: Option<SrgReport>,
    pub theta: Option<String>,
}

#[derive(Debug, serde::Serialize)]
pub struct SrgReport {
    pub n: usize,
    pub d: usize,
    pub lambda: usize,
    pub mu: usize,
    pub multiplicities: (usize, usize),
    pub girth: usize,
    pub diameter: usize,
}

pub fn invariant_report(g: &crate::graph::Graph) -> Result<InvariantReport> {
    use crate::spectra::{char_poly, MatrixKind};
    let n = g.vertex_count();
    let p_a = char_poly(g, MatrixKind::A);
    let p_l = char_poly(g, MatrixKind::L);
    let p_q = char_poly(g, MatrixKind::Q);
    let srg = crate::srg::detect_srg(&p_a, n);
    let (srg_report, theta) = match srg {
        Some((params, spectrum)) => {
            let (girth, diameter) = crate::srg::srg_girth_diameter(&params)?;
            let theta = crate::srg::lovasz_theta_srg(&params)?;
            (
                Some(SrgReport {
                    n: params.n,
                    d: params.d,
                    lambda: params.lambda,
                    mu: params.mu,
                    multiplicities: (spectrum.m1, spectrum.m2),
                    girth,
                    diameter,
                }),
                Some(theta.to_string()),
            )
        }
        None => (None, None),
    };
    Ok(InvariantReport {
        edges: edges_from_spectrum(&p_a)?.to_string(),
        triangles: triangles_from_spectrum(&p_a)?.to_string(),
        regular: is_regular_from_spectrum(&p_a, n),
        bipartite: is_bipartite_from_a(&p_a),
        components: components_from_l(&p_l),
        bipartite_components: bipartite_components_from_q(&p_q),
        srg: srg_report,
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::graph::Graph;
    use crate::spectra::{char_poly, MatrixKind};

    fn a_poly(spec: &FamilySpec) -> CharPoly {
        char_poly(&generate(spec).unwrap(), MatrixKind::A)
    }

    #[test]
    fn k23_edge_and_triangle_counts() {
        let p = a_poly(&FamilySpec::CompleteBipartite(2, 3));
        assert_eq!(edges_from_spectrum(&p).unwrap(), BigInt::from(6));
        assert_eq!(triangles_from_spectrum(&p).unwrap(), BigInt::from(0));
    }

    #[test]
    fn friendship_counts() {
        let p = a_poly(&FamilySpec::Friendship(4));
        assert_eq!(edges_from_spectrum(&p).unwrap(), BigInt::from(12));
        assert_eq!(triangles_from_spectrum(&p).unwrap(), BigInt::from(4));
    }

    #[test]
    fn closed_walks_of_k3() {
        let p = a_poly(&FamilySpec::Complete(3));
        assert_eq!(closed_walks_from_spectrum(&p, 4).unwrap(), BigInt::from(18));
    }

    #[test]
    fn regularity_detection() {
        assert_eq!(is_regular_from_spectrum(&a_poly(&FamilySpec::Cycle(6)), 6), Some(2));
        assert_eq!(is_regular_from_spectrum(&a_poly(&FamilySpec::Star(5)), 5), None);
        assert_eq!(is_regular_from_spectrum(&a_poly(&FamilySpec::Petersen), 10), Some(3));
        assert_eq!(is_regular_from_spectrum(&a_poly(&FamilySpec::Empty(4)), 4), Some(0));
    }

    #[test]
    fn bipartite_symmetry() {
        assert!(is_bipartite_from_a(&a_poly(&FamilySpec::Cycle(4))));
        assert!(!is_bipartite_from_a(&a_poly(&FamilySpec::Cycle(5))));
        assert!(is_bipartite_from_a(&a_poly(&FamilySpec::CompleteBipartite(2, 3))));
        assert!(!is_bipartite_from_a(&a_poly(&FamilySpec::Friendship(2))));
    }

    #[test]
    fn component_counts() {
        let c4k1 = Graph::disjoint_union(&[
            generate(&FamilySpec::Cycle(4)).unwrap(),
            Graph::empty(1),
        ]);
        assert_eq!(components_from_l(&char_poly(&c4k1, MatrixKind::L)), 2);
        let kn = generate(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(components_from_l(&char_poly(&kn, MatrixKind::L)), 1);
        let c4c3 = Graph::disjoint_union(&[
            generate(&FamilySpec::Cycle(4)).unwrap(),
            generate(&FamilySpec::Cycle(3)).unwrap(),
        ]);
        assert_eq!(bipartite_components_from_q(&char_poly(&c4c3, MatrixKind::Q)), 1);
        // least Q-eigenvalue 0 does not imply bipartite when disconnected
        let p_l = char_poly(&c4c3, MatrixKind::L);
        let p_q = char_poly(&c4c3, MatrixKind::Q);
        assert!(!bipartite_from_l_and_q(&p_l, &p_q).unwrap());
    }

    #[test]
    fn cayley_spanning_trees() {
        for n in [4usize, 5, 7] {
            let g = generate(&FamilySpec::Complete(n)).unwrap();
            let t = spanning_trees(&char_poly(&g, MatrixKind::L), n).unwrap();
            assert_eq!(t, BigInt::from(n as u64).pow(n as u32 - 2));
        }
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(spanning_trees(&char_poly(&c5, MatrixKind::L), 5).unwrap(), BigInt::from(5));
        // disconnected input rejected
        let two = Graph::disjoint_union(&[Graph::empty(1), Graph::empty(1)]);
        assert!(spanning_trees(&char_poly(&two, MatrixKind::L), 2).is_err());
    }

    #[test]
    fn l_q_agreement_on_bipartite() {
        for (spec, expect) in [
            (FamilySpec::Cycle(6), true),
            (FamilySpec::Cycle(5), false),
            (FamilySpec::Path(4), true),
        ] {
            let g = generate(&spec).unwrap();
            let agree = bipartite_from_l_and_q(
                &char_poly(&g, MatrixKind::L),
                &char_poly(&g, MatrixKind::Q),
            )
            .unwrap();
            assert_eq!(agree, expect, "{spec:?}");
        }
    }
}
