//! Canonical labeling by iterative color refinement plus backtracking over
//! color-class orderings, selecting the lexicographically minimal adjacency
//! bit-string. Automorphisms discovered between equal leaves prune the
//! search, which keeps vertex-transitive worst cases (complete graphs,
//! lattices) tractable.

use crate::graph::Graph;

/// Canonical form of a graph: a relabeling permutation together with the
/// canonical upper-triangle adjacency bit-string. Two graphs are isomorphic
/// exactly when their canonical bit-strings (and vertex counts) agree;
/// equality and hashing ignore the permutation.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
    /// original vertex v maps to canonical position `ordering[v]`
    ordering: Vec<usize>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    /// The canonical representative: the input graph relabeled canonically.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.relabel(&self.ordering)
    }

    /// Hex rendering of the packed bit-string, used in certificates.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{:02x}:", self.n);
        for w in &self.bits {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}
impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.bits).cmp(&(other.n, &other.bits))
    }
}
impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { n, bits: vec![0], ordering: vec![] };
    }
    let mut search = Search::new(g);
    let cells = initial_partition(g);
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    CanonicalForm { n, bits: best.1, ordering: best.0 }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

type Partition = Vec<Vec<usize>>;

fn initial_partition(g: &Graph) -> Partition {
    let n = g.vertex_count();
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(Vec<usize>, Vec<u64>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search { g, n: g.vertex_count(), best: None, automorphisms: Vec::new() }
    }

    fn descend(&mut self, mut cells: Partition, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => self.leaf(&cells),
            Some(_) => {
                let target = target_cell(&cells);
                let candidates = cells[target].clone();
                let mut tried: Vec<usize> = Vec::new();
                for v in candidates {
                    if self.in_tried_orbit(&tried, v, fixed) {
                        continue;
                    }
                    tried.push(v);
                    let mut child: Partition = Vec::with_capacity(cells.len() + 1);
                    for (ci, cell) in cells.iter().enumerate() {
                        if ci == target {
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            child.push(cell.clone());
                        }
                    }
                    fixed.push(v);
                    self.descend(child, fixed);
                    fixed.pop();
                }
            }
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let bits = self.g.relabel(&perm).triangle_bits();
        match &self.best {
            None => self.best = Some((perm, bits)),
            Some((best_perm, best_bits)) => {
                if bits < *best_bits {
                    self.best = Some((perm, bits));
                } else if bits == *best_bits {
                    // both labelings reach the same canonical graph, so
                    // best_perm^{-1} . perm is an automorphism
                    let mut inv = vec![0usize; self.n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let gamma: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                    if gamma.iter().enumerate().any(|(v, &gv)| v != gv) {
                        self.automorphisms.push(gamma);
                    }
                }
            }
        }
    }

    /// True when `v` is reachable from an already-tried candidate through
    /// automorphisms that fix every individualized vertex pointwise.
    fn in_tried_orbit(&self, tried: &[usize], v: usize, fixed: &[usize]) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let usable: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|gamma| fixed.iter().all(|&u| gamma[u] == u))
            .collect();
        if usable.is_empty() {
            return false;
        }
        let mut orbit: Vec<usize> = tried.to_vec();
        let mut frontier = orbit.clone();
        while let Some(x) = frontier.pop() {
            if x == v {
                return true;
            }
            for gamma in &usable {
                let y = gamma[x];
                if !orbit.contains(&y) {
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.contains(&v)
    }
}

/// First smallest non-singleton cell; invariant under isomorphism since it
/// depends only on the ordered cell sizes.
fn target_cell(cells: &Partition) -> usize {
    let mut best = usize::MAX;
    let mut best_len = usize::MAX;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && c.len() < best_len {
            best = i;
            best_len = c.len();
        }
    }
    best
}

/// Equitable refinement: repeatedly split cells by the vector of neighbor
/// counts into every cell, keeping subcells ordered by their signature.
fn refine(g: &Graph, cells: &mut Partition) {
    let n = g.vertex_count();
    let stride = n.div_ceil(64).max(1);
    'outer: loop {
        let masks: Vec<Vec<u64>> = cells
            .iter()
            .map(|cell| {
                let mut m = vec![0u64; stride];
                for &v in cell {
                    m[v / 64] |= 1 << (v % 64);
                }
                m
            })
            .collect();
        for ci in 0..cells.len() {
            if cells[ci].len() <= 1 {
                continue;
            }
            let mut sigs: Vec<(Vec<u32>, usize)> = cells[ci]
                .iter()
                .map(|&v| {
                    let sig =
                        masks.iter().map(|m| neighbor_count_in(g, v, m)).collect::<Vec<u32>>();
                    (sig, v)
                })
                .collect();
            if sigs.iter().all(|(s, _)| *s == sigs[0].0) {
                continue;
            }
            sigs.sort();
            let mut groups: Partition = Vec::new();
            for (sig, v) in sigs {
                match groups.last_mut() {
                    Some(last) if sig_of_first(g, last, &masks) == sig => last.push(v),
                    _ => groups.push(vec![v]),
                }
            }
            cells.splice(ci..=ci, groups);
            continue 'outer;
        }
        return;
    }
}

fn sig_of_first(g: &Graph, cell: &[usize], masks: &[Vec<u64>]) -> Vec<u32> {
    masks.iter().map(|m| neighbor_count_in(g, cell[0], m)).collect()
}

fn neighbor_count_in(g: &Graph, v: usize, mask: &[u64]) -> u32 {
    let mut count = 0;
    for w in g.neighbors(v) {
        if mask[w / 64] >> (w % 64) & 1 == 1 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::graph::Graph;

    fn shuffle(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        g.relabel(&perm)
    }

    /// Exhaustive permutation oracle, independent of the canonical labeler.
    fn iso_by_permutations(g: &Graph, h: &Graph) -> bool {
        let n = g.vertex_count();
        if n != h.vertex_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v]))) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn relabeled_cycle_matches() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        for seed in 0..10 {
            assert_eq!(canonical_form(&c4), canonical_form(&shuffle(&c4, seed)));
        }
    }

    #[test]
    fn star_vs_cycle_plus_isolated() {
        let s5 = generate(&FamilySpec::Star(5)).unwrap();
        let c4k1 = Graph::disjoint_union(&[
            generate(&FamilySpec::Cycle(4)).unwrap(),
            Graph::empty(1),
        ]);
        assert_ne!(canonical_form(&s5), canonical_form(&c4k1));
        assert!(!are_isomorphic(&s5, &c4k1));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // brute-force quotient of all 64 labeled graphs by S_4
        let mut canon_forms = std::collections::HashSet::new();
        let mut brute_reps: Vec<Graph> = Vec::new();
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            canon_forms.insert(canonical_form(&g));
            if !brute_reps.iter().any(|h| iso_by_permutations(&g, h)) {
                brute_reps.push(g);
            }
        }
        assert_eq!(brute_reps.len(), 11);
        assert_eq!(canon_forms.len(), 11);
    }

    #[test]
    fn agrees_with_permutation_oracle_small() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let n = rng.gen_range(1..=7usize);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.set_edge(u, v, true);
                    }
                }
            }
            // alternate between independent graphs and shuffled copies so
            // both verdicts get exercised
            let h = if trial % 2 == 0 {
                shuffle(&g, trial)
            } else {
                let mut h = Graph::empty(n);
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(0.5) {
                            h.set_edge(u, v, true);
                        }
                    }
                }
                h
            };
            let expected = if g.degrees().iter().sum::<usize>()
                == h.degrees().iter().sum::<usize>()
            {
                iso_by_permutations(&g, &h)
            } else {
                false
            };
            assert_eq!(are_isomorphic(&g, &h), expected);
        }
    }

    #[test]
    fn vertex_transitive_worst_cases() {
        let k9 = generate(&FamilySpec::Complete(9)).unwrap();
        assert_eq!(canonical_form(&k9), canonical_form(&shuffle(&k9, 3)));
        let pet = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(canonical_form(&pet), canonical_form(&shuffle(&pet, 5)));
        let lat = generate(&FamilySpec::Lattice(4)).unwrap();
        assert_eq!(canonical_form(&lat), canonical_form(&shuffle(&lat, 11)));
    }
}
