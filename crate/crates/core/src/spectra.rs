//! Matrix kinds, exact characteristic polynomials per kind, and
//! fingerprint-based cospectrality decisions.

use crate::charpoly::{char_poly_i128, char_poly_int_matrix, CharPoly, Rat};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;

/// The eight spectra a graph carries: adjacency, Laplacian, signless
/// Laplacian, normalized Laplacian, and the same four of the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MatrixKind {
    A,
    L,
    Q,
    NL,
    ComplementA,
    ComplementL,
    ComplementQ,
    ComplementNL,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 8] = [
        MatrixKind::A,
        MatrixKind::L,
        MatrixKind::Q,
        MatrixKind::NL,
        MatrixKind::ComplementA,
        MatrixKind::ComplementL,
        MatrixKind::ComplementQ,
        MatrixKind::ComplementNL,
    ];

    pub const PLAIN: [MatrixKind; 4] =
        [MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NL];

    pub fn parse(token: &str) -> Option<MatrixKind> {
        match token {
            "A" => Some(MatrixKind::A),
            "L" => Some(MatrixKind::L),
            "Q" => Some(MatrixKind::Q),
            "NL" => Some(MatrixKind::NL),
            "cA" => Some(MatrixKind::ComplementA),
            "cL" => Some(MatrixKind::ComplementL),
            "cQ" => Some(MatrixKind::ComplementQ),
            "cNL" => Some(MatrixKind::ComplementNL),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
            MatrixKind::NL => "NL",
            MatrixKind::ComplementA => "cA",
            MatrixKind::ComplementL => "cL",
            MatrixKind::ComplementQ => "cQ",
            MatrixKind::ComplementNL => "cNL",
        }
    }

    fn base(&self) -> (MatrixKind, bool) {
        match self {
            MatrixKind::A => (MatrixKind::A, false),
            MatrixKind::L => (MatrixKind::L, false),
            MatrixKind::Q => (MatrixKind::Q, false),
            MatrixKind::NL => (MatrixKind::NL, false),
            MatrixKind::ComplementA => (MatrixKind::A, true),
            MatrixKind::ComplementL => (MatrixKind::L, true),
            MatrixKind::ComplementQ => (MatrixKind::Q, true),
            MatrixKind::ComplementNL => (MatrixKind::NL, true),
        }
    }
}

/// Map from matrix kind to exact characteristic polynomial. Equality over a
/// kind set is exactly cospectrality over that set.
pub type SpectralFingerprint = BTreeMap<MatrixKind, CharPoly>;

/// Exact characteristic polynomial of the requested matrix of `g`.
///
/// A, L, Q run over the integers directly. For NL, the rational surrogate
/// D^+(D-A) is scaled by c = lcm of the distinct nonzero degrees: the scaled
/// matrix is integral, and the result is rescaled by p(x) = p'(cx)/c^n.
pub fn char_poly(g: &Graph, kind: MatrixKind) -> CharPoly {
    let (base, complemented) = kind.base();
    let graph;
    let g = if complemented {
        graph = g.complement();
        &graph
    } else {
        g
    };
    let n = g.vertex_count();
    match base {
        MatrixKind::A | MatrixKind::L | MatrixKind::Q => {
            let entry_i128 = int_entry_fn(g, base);
            if n <= 12 {
                let mut m = vec![0i128; n * n];
                for i in 0..n {
                    for j in 0..n {
                        m[i * n + j] = entry_i128(i, j);
                    }
                }
                if let Some(coeffs) = char_poly_i128(n, &m) {
                    return CharPoly::from_monic(
                        coeffs.into_iter().map(|c| Rat::from_integer(BigInt::from(c))).collect(),
                    )
                    .unwrap();
                }
            }
            let coeffs = char_poly_int_matrix(n, |i, j| BigInt::from(entry_i128(i, j)));
            CharPoly::from_monic(coeffs.into_iter().map(Rat::from_integer).collect()).unwrap()
        }
        MatrixKind::NL => {
            let degrees = g.degrees();
            let scale: i128 = degrees
                .iter()
                .filter(|&&d| d > 0)
                .fold(1i128, |acc, &d| acc.lcm(&(d as i128)));
            // entries of c * D^+ (D - A)
            let entry = |i: usize, j: usize| -> BigInt {
                let d = degrees[i];
                if d == 0 {
                    BigInt::ZERO
                } else if i == j {
                    BigInt::from(scale)
                } else if g.has_edge(i, j) {
                    BigInt::from(-(scale / d as i128))
                } else {
                    BigInt::ZERO
                }
            };
            let coeffs = char_poly_int_matrix(n, entry);
            let scale_big = BigInt::from(scale);
            let mut power = BigInt::one();
            let rescaled: Vec<Rat> = coeffs
                .into_iter()
                .map(|c| {
                    let r = BigRational::new(c, power.clone());
                    power *= &scale_big;
                    r
                })
                .collect();
            CharPoly::from_monic(rescaled).unwrap()
        }
        _ => unreachable!(),
    }
}

fn int_entry_fn(g: &Graph, base: MatrixKind) -> impl Fn(usize, usize) -> i128 + '_ {
    move |i, j| match base {
        MatrixKind::A => g.has_edge(i, j) as i128,
        MatrixKind::L => {
            if i == j {
                g.degree(i) as i128
            } else if g.has_edge(i, j) {
                -1
            } else {
                0
            }
        }
        MatrixKind::Q => {
            if i == j {
                g.degree(i) as i128
            } else {
                g.has_edge(i, j) as i128
            }
        }
        _ => unreachable!(),
    }
}

/// One characteristic polynomial per requested kind.
pub fn fingerprint(g: &Graph, kinds: &[MatrixKind]) -> SpectralFingerprint {
    kinds.iter().map(|&k| (k, char_poly(g, k))).collect()
}

/// Exact coefficient-by-coefficient cospectrality over the given kinds.
pub fn are_cospectral(g: &Graph, h: &Graph, kinds: &[MatrixKind]) -> bool {
    if g.vertex_count() != h.vertex_count() {
        return false;
    }
    kinds.iter().all(|&k| char_poly(g, k) == char_poly(h, k))
}

/// Serializable form of one fingerprint entry.
#[derive(Serialize)]
pub struct CharPolyJson {
    pub kind: &'static str,
    pub coeffs: Vec<String>,
}

pub fn fingerprint_json(fp: &SpectralFingerprint) -> Vec<CharPolyJson> {
    fp.iter()
        .map(|(k, p)| CharPolyJson { kind: k.name(), coeffs: p.coeff_strings() })
        .collect()
}

pub fn parse_kinds(csv: &str) -> Result<Vec<MatrixKind>> {
    let mut kinds = Vec::new();
    for token in csv.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let kind = MatrixKind::parse(token).ok_or_else(|| {
            Error::WrongKind { expected: "A|L|Q|NL|cA|cL|cQ|cNL".into(), reason: token.into() }
        })?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err(Error::WrongKind { expected: "nonempty kind set".into(), reason: csv.into() });
    }
    Ok(kinds)
}
