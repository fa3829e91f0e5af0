//! Exhaustive enumeration of graphs up to isomorphism, cospectral-class
//! partitioning, and spectral-determination verdicts at small vertex counts.
//!
//! Enumeration is canonical augmentation level by level: every class on k+1
//! vertices arises from a class on k vertices by attaching one vertex, so
//! extending each representative by all neighborhoods and deduplicating
//! canonical forms is complete. Levels are merged by sorting, which keeps
//! the result independent of worker count and scheduling.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::spectra::{fingerprint, MatrixKind, SpectralFingerprint};
use crate::structure::is_connected;
use rayon::prelude::*;
use serde::Serialize;

/// Known isomorphism-class counts for n = 0..=9.
pub const ISO_CLASS_COUNTS: [u64; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// Hard enumeration cap; n = 10 additionally requires the long-running flag.
pub const ENUMERATION_CAP: usize = 10;

fn pack_key(g: &Graph) -> u64 {
    debug_assert!(g.vertex_count() <= 11);
    g.triangle_bits()[0]
}

fn unpack_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if key >> idx & 1 == 1 {
                g.set_edge(u, v, true);
            }
            idx += 1;
        }
    }
    g
}

fn canonical_key(g: &Graph) -> u64 {
    pack_key(&canonical_form(g).apply(g))
}

/// One canonical representative per isomorphism class on `n` vertices.
/// `predicate` filters the emitted stream only; it does not prune the
/// search. n = 10 (12,005,168 classes) must be enabled explicitly.
pub fn enumerate_graphs(
    n: usize,
    predicate: Option<&(dyn Fn(&Graph) -> bool + Sync)>,
    allow_n10: bool,
) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP || (n == 10 && !allow_n10) {
        return Err(Error::CapExceeded {
            n,
            cap: if allow_n10 { ENUMERATION_CAP } else { 9 },
            hint: if n == 10 { " (pass the long-running n=10 flag)" } else { "" },
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<u64> = vec![0]; // K_1
    for k in 1..n {
        // parents are processed in chunks so the n = 10 level never buffers
        // all 281M raw children at once; each chunk is deduplicated and
        // merged into the sorted accumulator
        let chunk_size = 8192usize;
        let mut accumulated: Vec<u64> = Vec::new();
        let mut seen_parents = 0usize;
        for chunk in level.chunks(chunk_size) {
            let mut children: Vec<u64> = chunk
                .par_iter()
                .flat_map_iter(|&parent| {
                    let g = unpack_key(k, parent);
                    (0u64..1 << k).map(move |mask| {
                        let mut child = Graph::empty(k + 1);
                        for (u, v) in g.edges() {
                            child.set_edge(u, v, true);
                        }
                        for u in 0..k {
                            if mask >> u & 1 == 1 {
                                child.set_edge(u, k, true);
                            }
                        }
                        canonical_key(&child)
                    })
                })
                .collect();
            children.par_sort_unstable();
            children.dedup();
            accumulated = merge_sorted_dedup(&accumulated, &children);
            seen_parents += chunk.len();
            if k + 1 == 10 && seen_parents % 102_400 < chunk_size {
                eprintln!(
                    "enumeration checkpoint: {seen_parents}/{} parents expanded, {} classes so far",
                    level.len(),
                    accumulated.len()
                );
            }
        }
        level = accumulated;
    }
    let graphs: Vec<Graph> = level
        .into_iter()
        .map(|key| unpack_key(n, key))
        .filter(|g| predicate.map(|p| p(g)).unwrap_or(true))
        .collect();
    Ok(graphs)
}

fn merge_sorted_dedup(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x <= y => {
                i += 1;
                if x == y {
                    j += 1;
                }
                x
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

/// Candidate-order toggle for the dual-run cross-check of the regular
/// enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    Forward,
    Reverse,
}

/// One canonical representative per isomorphism class of connected d-regular
/// graphs on n vertices. Degree-constrained canonical augmentation: partial
/// graphs keep max degree <= d, and every vertex must still be able to reach
/// degree d through the remaining vertices.
#[allow(clippy::needless_range_loop)]
pub fn enumerate_regular(n: usize, d: usize, order: SearchOrder) -> Result<Vec<Graph>> {
    if d >= n.max(1) {
        return Err(Error::InvalidFamily(format!("regular degree needs d < n, got n={n} d={d}")));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::DegreeParity { n, d });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut level: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&parent| {
                let g = unpack_key(k, parent);
                let degrees = g.degrees();
                let masks: Vec<u64> = match order {
                    SearchOrder::Forward => (0u64..1 << k).collect(),
                    SearchOrder::Reverse => (0u64..1 << k).rev().collect(),
                };
                masks.into_iter().filter_map(move |mask| {
                    let new_degree = mask.count_ones() as usize;
                    if new_degree > d {
                        return None;
                    }
                    // remaining vertices after this one
                    let future = n - k - 1;
                    if new_degree + future < d {
                        return None;
                    }
                    let mut child = Graph::empty(k + 1);
                    for (u, v) in g.edges() {
                        child.set_edge(u, v, true);
                    }
                    let mut deficit = d.saturating_sub(new_degree);
                    for u in 0..k {
                        let mut deg = degrees[u];
                        if mask >> u & 1 == 1 {
                            deg += 1;
                            child.set_edge(u, k, true);
                        }
                        if deg > d || deg + future < d {
                            return None;
                        }
                        deficit += d - deg;
                    }
                    // each future vertex supplies at most d endpoints
                    if deficit > future * d {
                        return None;
                    }
                    Some(canonical_key(&child))
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|key| unpack_key(n, key))
        .filter(|g| g.degrees().iter().all(|&deg| deg == d) && is_connected(g))
        .collect())
}

/// A class of mutually cospectral graphs.
#[derive(Debug)]
pub struct CospectralClass {
    pub fingerprint: SpectralFingerprint,
    pub members: Vec<Graph>,
}

/// Partition graphs by exact fingerprint over the given kinds. Classes are
/// ordered by fingerprint, members by canonical bit-string, so the partition
/// is reproducible regardless of input order or parallel scheduling.
pub fn cospectral_classes(graphs: &[Graph], kinds: &[MatrixKind]) -> Vec<CospectralClass> {
    let fps: Vec<SpectralFingerprint> =
        graphs.par_iter().map(|g| fingerprint(g, kinds)).collect();
    cospectral_classes_from_keys(graphs, &fps)
}

/// Grouping step shared with the cached census: fingerprints are supplied
/// per graph, in order.
pub fn cospectral_classes_from_keys(
    graphs: &[Graph],
    fps: &[SpectralFingerprint],
) -> Vec<CospectralClass> {
    assert_eq!(graphs.len(), fps.len());
    let mut map: std::collections::BTreeMap<String, Vec<usize>> = Default::default();
    for (idx, fp) in fps.iter().enumerate() {
        map.entry(fingerprint_sort_key(fp)).or_default().push(idx);
    }
    map.into_values()
        .map(|mut indices| {
            indices.sort_by_cached_key(|&i| canonical_form(&graphs[i]).bits().to_vec());
            let members: Vec<Graph> = indices.iter().map(|&i| graphs[i].clone()).collect();
            CospectralClass { fingerprint: fps[indices[0]].clone(), members }
        })
        .collect()
}

fn fingerprint_sort_key(fp: &SpectralFingerprint) -> String {
    let mut key = String::new();
    for (kind, poly) in fp {
        key.push_str(kind.name());
        key.push(':');
        key.push_str(&poly.coeff_strings().join(","));
        key.push(';');
    }
    key
}

/// Verdict of a spectral-determination query.
#[derive(Debug)]
pub enum DsVerdict {
    Determined,
    Mates(Vec<Graph>),
}

/// All nonisomorphic graphs on the same vertex count sharing the
/// fingerprint of `g`; `Determined` when there are none.
pub fn ds_verdict(g: &Graph, kinds: &[MatrixKind], allow_n10: bool) -> Result<DsVerdict> {
    let n = g.vertex_count();
    let own_key = fingerprint_sort_key(&fingerprint(g, kinds));
    let own_canon = canonical_form(g);
    let universe = enumerate_graphs(n, None, allow_n10)?;
    let mut mates: Vec<Graph> = universe
        .into_par_iter()
        .filter(|h| {
            fingerprint_sort_key(&fingerprint(h, kinds)) == own_key && canonical_form(h) != own_canon
        })
        .collect();
    mates.sort_by_cached_key(|h| canonical_form(h).bits().to_vec());
    if mates.is_empty() {
        Ok(DsVerdict::Determined)
    } else {
        Ok(DsVerdict::Mates(mates))
    }
}

/// Census row: the cospectral-class structure of all graphs on n vertices.
#[derive(Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub kinds: Vec<&'static str>,
    pub class_count: usize,
    pub singleton_count: usize,
    pub largest_class: usize,
    /// determined-graphs fraction: singleton classes over all graphs
    pub ds_fraction: String,
    /// graph6 members of every class of size >= 2
    pub nics_classes: Vec<Vec<String>>,
}

/// Full census at n: enumerate every isomorphism class, partition by
/// fingerprint, and summarize. n <= 9 unless the long-running flag is set.
pub fn ds_census(n: usize, kinds: &[MatrixKind], allow_n10: bool) -> Result<CensusRow> {
    let graphs = enumerate_graphs(n, None, allow_n10)?;
    let classes = cospectral_classes(&graphs, kinds);
    Ok(census_row_from_classes(n, kinds, &classes))
}

pub fn census_row_from_classes(
    n: usize,
    kinds: &[MatrixKind],
    classes: &[CospectralClass],
) -> CensusRow {
    let class_count = classes.len();
    let graph_count: usize = classes.iter().map(|c| c.members.len()).sum();
    let singleton_count = classes.iter().filter(|c| c.members.len() == 1).count();
    let largest_class = classes.iter().map(|c| c.members.len()).max().unwrap_or(0);
    let nics_classes = classes
        .iter()
        .filter(|c| c.members.len() >= 2)
        .map(|c| c.members.iter().map(emit_graph6).collect())
        .collect();
    CensusRow {
        n,
        kinds: kinds.iter().map(|k| k.name()).collect(),
        class_count,
        singleton_count,
        largest_class,
        // determined graphs over all isomorphism classes of graphs
        ds_fraction: format!("{singleton_count}/{graph_count}"),
        nics_classes,
    }
}
