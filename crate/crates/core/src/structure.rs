//! Combinatorial structure queries, used as the structural oracle against
//! spectrum-derived values. Nothing here touches a matrix.

use crate::graph::Graph;
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub degrees: Vec<usize>,
    pub is_regular: bool,
    pub components: usize,
    /// Two-coloring of the vertices when the graph is bipartite.
    pub bipartition: Option<Vec<bool>>,
    /// Shortest cycle length; `None` for forests or when `n > 64`.
    pub girth: Option<usize>,
    pub triangles: usize,
}

pub fn structure_report(g: &Graph) -> StructureReport {
    StructureReport {
        degrees: g.degrees(),
        is_regular: is_regular(g).is_some(),
        components: component_count(g),
        bipartition: bipartition(g),
        girth: girth(g),
        triangles: triangle_count(g),
    }
}

/// Common degree of a regular graph, `None` if degrees differ.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let degs = g.degrees();
    match degs.first() {
        None => Some(0),
        Some(&d) if degs.iter().all(|&x| x == d) => Some(d),
        _ => None,
    }
}

pub fn component_count(g: &Graph) -> usize {
    components(g).1
}

/// Component label per vertex plus the number of components.
pub fn components(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        label[start] = count;
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

/// BFS two-coloring; `None` when an odd cycle is found.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn triangle_count(g: &Graph) -> usize {
    let mut count = 0;
    for (u, v) in g.edges() {
        for w in g.neighbors(u) {
            if w > v && g.has_edge(v, w) {
                count += 1;
            }
        }
    }
    count
}

/// Shortest cycle length via one BFS per vertex. Restricted to `n <= 64`;
/// larger graphs return `None`, as do forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n > 64 {
        return None;
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    // non-tree edge closes a cycle through the root's BFS tree
                    let cycle = dist[v] + dist[w] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Diameter of a connected graph; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 || !is_connected(g) {
        return None;
    }
    let mut best = 0;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(*dist.iter().max().unwrap());
    }
    Some(best)
}
