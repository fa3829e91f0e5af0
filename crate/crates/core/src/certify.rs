//! Certified construction of nonisomorphic cospectral pairs from seed pairs,
//! one recipe per construction theorem. Hypotheses are validated by
//! fingerprints before constructing; the emitted certificate carries the
//! equal fingerprints and a nonisomorphism witness (distinct canonical
//! forms), both re-checked fail-fast.

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{corona_product, sb_join, splitting_join, CoronaKind, SbJoinKind, SplitJoinKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::spectra::{fingerprint, MatrixKind, SpectralFingerprint};
use crate::structure::is_regular;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NicsRecipe {
    /// neighbors splitting join; cospectral over {A, L, Q, NL}
    BermanHamudNs,
    /// nonneighbors splitting join; cospectral over {A, L, Q, NL}
    BermanHamudNns,
    /// subdivision-vertex-bipartite-vertex join; {A, L, NL}
    DasVertexVertex,
    /// subdivision-edge-bipartite-edge join; {A, L, NL}
    DasEdgeEdge,
    /// subdivision-edge-bipartite-vertex join; {A, L, NL}
    DasEdgeVertex,
    /// subdivision-vertex-bipartite-edge join; {A, L, NL}
    DasVertexEdge,
    /// duplication corona; {A, L, Q}
    AdigaDuplicationCorona,
    /// duplication neighborhood corona; {A, L, Q}
    AdigaDuplicationNeighborhood,
    /// duplication edge corona; {A, L, Q}
    AdigaDuplicationEdge,
    /// closed neighborhood corona with the cospectral pair on the left; {A, L, Q}
    SonarClosedNeighborhoodLeft,
    /// closed neighborhood corona with the cospectral pair on the right; {A, L, Q}
    SonarClosedNeighborhoodRight,
}

impl NicsRecipe {
    pub fn parse(token: &str) -> Option<Self> {
        use NicsRecipe::*;
        match token {
            "bh-ns" => Some(BermanHamudNs),
            "bh-nns" => Some(BermanHamudNns),
            "das-vv" => Some(DasVertexVertex),
            "das-ee" => Some(DasEdgeEdge),
            "das-ev" => Some(DasEdgeVertex),
            "das-ve" => Some(DasVertexEdge),
            "adiga-dc" => Some(AdigaDuplicationCorona),
            "adiga-dnc" => Some(AdigaDuplicationNeighborhood),
            "adiga-dec" => Some(AdigaDuplicationEdge),
            "sonar-cnc-left" => Some(SonarClosedNeighborhoodLeft),
            "sonar-cnc-right" => Some(SonarClosedNeighborhoodRight),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        use NicsRecipe::*;
        match self {
            BermanHamudNs => "bh-ns",
            BermanHamudNns => "bh-nns",
            DasVertexVertex => "das-vv",
            DasEdgeEdge => "das-ee",
            DasEdgeVertex => "das-ev",
            DasVertexEdge => "das-ve",
            AdigaDuplicationCorona => "adiga-dc",
            AdigaDuplicationNeighborhood => "adiga-dnc",
            AdigaDuplicationEdge => "adiga-dec",
            SonarClosedNeighborhoodLeft => "sonar-cnc-left",
            SonarClosedNeighborhoodRight => "sonar-cnc-right",
        }
    }

    /// Kind set the underlying theorem guarantees cospectrality over.
    pub fn kinds(&self) -> &'static [MatrixKind] {
        use MatrixKind::*;
        use NicsRecipe::*;
        match self {
            BermanHamudNs | BermanHamudNns => &[A, L, Q, NL],
            DasVertexVertex | DasEdgeEdge | DasEdgeVertex | DasVertexEdge => &[A, L, NL],
            _ => &[A, L, Q],
        }
    }

    /// Number of seed graphs: two pairs, or a pair plus one free graph for
    /// the closed-neighborhood recipes.
    pub fn seed_count(&self) -> usize {
        use NicsRecipe::*;
        match self {
            SonarClosedNeighborhoodLeft | SonarClosedNeighborhoodRight => 3,
            _ => 4,
        }
    }
}

/// A verified nonisomorphic-cospectral pair with provenance.
#[derive(Debug)]
pub struct NicsCertificate {
    pub recipe: NicsRecipe,
    pub seeds: Vec<Graph>,
    pub kinds: Vec<MatrixKind>,
    pub pair: (Graph, Graph),
    pub fingerprints: (SpectralFingerprint, SpectralFingerprint),
    pub witness: (CanonicalForm, CanonicalForm),
}

impl NicsCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let polys = |fp: &SpectralFingerprint| {
            let mut map = serde_json::Map::new();
            for (kind, poly) in fp {
                map.insert(kind.name().into(), serde_json::json!(poly.coeff_strings()));
            }
            serde_json::Value::Object(map)
        };
        serde_json::json!({
            "recipe": self.recipe.name(),
            "seeds": self.seeds.iter().map(emit_graph6).collect::<Vec<_>>(),
            "kinds": self.kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
            "graphs": [emit_graph6(&self.pair.0), emit_graph6(&self.pair.1)],
            "charpolys": polys(&self.fingerprints.0),
            "canonical": [self.witness.0.to_hex(), self.witness.1.to_hex()],
        })
    }
}

fn require(condition: bool, recipe: NicsRecipe, message: &str) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::HypothesisViolation(format!("recipe {}: {message}", recipe.name())))
    }
}

fn require_regular(g: &Graph, recipe: NicsRecipe, label: &str) -> Result<usize> {
    is_regular(g).ok_or_else(|| {
        Error::HypothesisViolation(format!("recipe {}: seed {label} must be regular", recipe.name()))
    })
}

fn a_cospectral(a: &Graph, b: &Graph) -> bool {
    crate::spectra::are_cospectral(a, b, &[MatrixKind::A])
}

/// Validate the recipe hypotheses on the seeds, construct both outputs, and
/// certify. Two-pair recipes take seeds `[g1, h1, g2, h2]` with (g1, h1)
/// cospectral regular and (g2, h2) regular NICS; the closed-neighborhood
/// recipes take `[g1, g2, h]` with (g1, g2) regular NICS and h arbitrary.
pub fn certified_nics(recipe: NicsRecipe, seeds: &[Graph]) -> Result<NicsCertificate> {
    use NicsRecipe::*;
    if seeds.len() != recipe.seed_count() {
        return Err(Error::HypothesisViolation(format!(
            "recipe {} takes {} seed graphs, got {}",
            recipe.name(),
            recipe.seed_count(),
            seeds.len()
        )));
    }
    let pair = match recipe {
        SonarClosedNeighborhoodLeft | SonarClosedNeighborhoodRight => {
            let (g1, g2, free) = (&seeds[0], &seeds[1], &seeds[2]);
            require_regular(g1, recipe, "G1")?;
            require_regular(g2, recipe, "G2")?;
            require(a_cospectral(g1, g2), recipe, "seed pair (G1, G2) must be A-cospectral")?;
            require(
                !crate::canon::are_isomorphic(g1, g2),
                recipe,
                "seed pair (G1, G2) must be nonisomorphic",
            )?;
            match recipe {
                SonarClosedNeighborhoodLeft => (
                    corona_product(CoronaKind::ClosedNeighborhood, g1, free),
                    corona_product(CoronaKind::ClosedNeighborhood, g2, free),
                ),
                _ => (
                    corona_product(CoronaKind::ClosedNeighborhood, free, g1),
                    corona_product(CoronaKind::ClosedNeighborhood, free, g2),
                ),
            }
        }
        _ => {
            let (g1, h1, g2, h2) = (&seeds[0], &seeds[1], &seeds[2], &seeds[3]);
            let r1 = require_regular(g1, recipe, "G1")?;
            let s1 = require_regular(h1, recipe, "H1")?;
            let r2 = require_regular(g2, recipe, "G2")?;
            let s2 = require_regular(h2, recipe, "H2")?;
            require(r1 == s1, recipe, "first pair must share one degree")?;
            require(r2 == s2, recipe, "second pair must share one degree")?;
            require(a_cospectral(g1, h1), recipe, "first pair must be A-cospectral")?;
            require(a_cospectral(g2, h2), recipe, "second pair must be A-cospectral")?;
            require(
                !crate::canon::are_isomorphic(g2, h2),
                recipe,
                "second pair must be nonisomorphic (NICS)",
            )?;
            let build = |x: &Graph, y: &Graph| -> Graph {
                match recipe {
                    BermanHamudNs => splitting_join(SplitJoinKind::Neighbors, x, y),
                    BermanHamudNns => splitting_join(SplitJoinKind::NonNeighbors, x, y),
                    DasVertexVertex => sb_join(SbJoinKind::VertexVertex, x, y),
                    DasEdgeEdge => sb_join(SbJoinKind::EdgeEdge, x, y),
                    DasEdgeVertex => sb_join(SbJoinKind::EdgeVertex, x, y),
                    DasVertexEdge => sb_join(SbJoinKind::VertexEdge, x, y),
                    AdigaDuplicationCorona => corona_product(CoronaKind::Duplication, x, y),
                    AdigaDuplicationNeighborhood => {
                        corona_product(CoronaKind::DuplicationNeighborhood, x, y)
                    }
                    AdigaDuplicationEdge => corona_product(CoronaKind::DuplicationEdge, x, y),
                    _ => unreachable!(),
                }
            };
            (build(g1, g2), build(h1, h2))
        }
    };
    let kinds = recipe.kinds().to_vec();
    let fp0 = fingerprint(&pair.0, &kinds);
    let fp1 = fingerprint(&pair.1, &kinds);
    assert_eq!(fp0, fp1, "recipe {} emitted non-cospectral outputs", recipe.name());
    let w0 = canonical_form(&pair.0);
    let w1 = canonical_form(&pair.1);
    assert_ne!(w0, w1, "recipe {} emitted isomorphic outputs", recipe.name());
    require(
        is_regular(&pair.0).is_none() && is_regular(&pair.1).is_none(),
        recipe,
        "outputs must be irregular",
    )?;
    Ok(NicsCertificate {
        recipe,
        seeds: seeds.to_vec(),
        kinds,
        pair,
        fingerprints: (fp0, fp1),
        witness: (w0, w1),
    })
}

/// The 4-regular NICS pair on 10 vertices, the smallest regular NICS pair;
/// recovered by the regular census and frozen here as a fixture.
pub fn regular_nics_pair_10_4() -> (Graph, Graph) {
    let g = crate::io::parse_graph6("I@TkdfIx?").unwrap();
    let h = crate::io::parse_graph6("I@\\sDfEq_").unwrap();
    (g, h)
}
