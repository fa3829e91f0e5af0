//! Closed-form spectra for structured families and the decision procedures
//! for complete-bipartite spectral determination.

use crate::charpoly::{rat, CharPoly, Rat};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::graph::Graph;
use crate::quadratic::{QuadraticJson, QuadraticNumber};
use crate::roots::numeric_roots;
use crate::spectra::{are_cospectral, char_poly, MatrixKind};
use num_traits::{One, Zero};
use serde::Serialize;

/// Multiset of exact eigenvalues with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSpectrum {
    entries: Vec<(QuadraticNumber, usize)>,
}

impl ClosedSpectrum {
    pub fn new(entries: Vec<(QuadraticNumber, usize)>) -> Self {
        let mut entries: Vec<(QuadraticNumber, usize)> =
            entries.into_iter().filter(|(_, m)| *m > 0).collect();
        // descending by real value keeps the representation canonical; the
        // approximate key only orders distinct values (ties fall back to the
        // exact fields), so entries with different radicands compare fine
        entries.sort_by(|(x, _), (y, _)| {
            y.to_f64()
                .partial_cmp(&x.to_f64())
                .unwrap()
                .then_with(|| {
                    (x.rational_part(), x.surd_part(), x.delta()).cmp(&(
                        y.rational_part(),
                        y.surd_part(),
                        y.delta(),
                    ))
                })
        });
        // merge repeated eigenvalues
        let mut merged: Vec<(QuadraticNumber, usize)> = Vec::with_capacity(entries.len());
        for (value, mult) in entries {
            match merged.last_mut() {
                Some((last, m)) if *last == value => *m += mult,
                _ => merged.push((value, mult)),
            }
        }
        ClosedSpectrum { entries: merged }
    }

    pub fn entries(&self) -> &[(QuadraticNumber, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Exact characteristic polynomial; irrational eigenvalues must pair up
    /// with their conjugates at equal multiplicity.
    pub fn to_char_poly(&self) -> Result<CharPoly> {
        let mut poly = CharPoly::from_monic(vec![Rat::one()]).unwrap();
        let mut consumed = vec![false; self.entries.len()];
        for i in 0..self.entries.len() {
            if consumed[i] {
                continue;
            }
            let (value, mult) = &self.entries[i];
            if let Some(r) = value.as_rat() {
                let linear = CharPoly::from_monic(vec![Rat::one(), -r.clone()]).unwrap();
                for _ in 0..*mult {
                    poly = poly.multiply(&linear);
                }
                consumed[i] = true;
                continue;
            }
            let conjugate = value.conjugate();
            let j = (i + 1..self.entries.len())
                .find(|&j| !consumed[j] && self.entries[j].0 == conjugate)
                .ok_or_else(|| {
                    Error::NonIntegral(format!("unpaired irrational eigenvalue {value}"))
                })?;
            if self.entries[j].1 != *mult {
                return Err(Error::NonIntegral(format!(
                    "conjugate multiplicities differ for {value}"
                )));
            }
            let sum = value.add(&conjugate).as_rat().unwrap().clone();
            let prod = value.mul(&conjugate).as_rat().unwrap().clone();
            let quadratic = CharPoly::from_monic(vec![Rat::one(), -sum, prod]).unwrap();
            for _ in 0..*mult {
                poly = poly.multiply(&quadratic);
            }
            consumed[i] = true;
            consumed[j] = true;
        }
        Ok(poly)
    }

    pub fn to_json(&self) -> Vec<ClosedSpectrumEntry> {
        self.entries
            .iter()
            .map(|(value, mult)| ClosedSpectrumEntry { value: value.into(), mult: *mult })
            .collect()
    }
}

#[derive(Serialize)]
pub struct ClosedSpectrumEntry {
    pub value: QuadraticJson,
    pub mult: usize,
}

/// Spectrum of K_{p,q}: plus and minus sqrt(pq) around p+q-2 zeros.
pub fn complete_bipartite_spectrum(p: usize, q: usize) -> Result<ClosedSpectrum> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidFamily("complete bipartite needs p,q >= 1".into()));
    }
    let surd = QuadraticNumber::sqrt_of((p * q) as u64);
    Ok(ClosedSpectrum::new(vec![
        (surd.neg(), 1),
        (QuadraticNumber::from_int(0), p + q - 2),
        (surd, 1),
    ]))
}

/// Spectrum of the regular complete k-partite graph with parts of size q.
pub fn regular_multipartite_spectrum(q: usize, k: usize) -> Result<ClosedSpectrum> {
    if q == 0 || k == 0 {
        return Err(Error::InvalidFamily("regular multipartite needs q,k >= 1".into()));
    }
    Ok(ClosedSpectrum::new(vec![
        (QuadraticNumber::from_int(-(q as i64)), k - 1),
        (QuadraticNumber::from_int(0), (q - 1) * k),
        (QuadraticNumber::from_int((q * (k - 1)) as i64), 1),
    ]))
}

/// Closed-form adjacency spectrum of the Turán graph T(n,k).
///
/// Irregular case (n = qk + s with s >= 1): multiplicities s-1 of -(q+1) and
/// k-s-1 of -q, n-k zeros, plus the two join eigenvalues
/// (n-2q-1 +- sqrt((n-2(q+1)s+1)^2 + 4q(q+1)s(k-s))) / 2.
/// The regular case reduces to the regular multipartite spectrum.
pub fn turan_spectrum(n: usize, k: usize) -> Result<ClosedSpectrum> {
    if !(2 <= k && k <= n) {
        return Err(Error::InvalidFamily(format!("Turan needs 2 <= k <= n, got n={n} k={k}")));
    }
    let (q, s) = (n / k, n % k);
    if s == 0 {
        return regular_multipartite_spectrum(q, k);
    }
    let (n_i, q_i, s_i, k_i) = (n as i64, q as i64, s as i64, k as i64);
    let linear = n_i - 2 * (q_i + 1) * s_i + 1;
    let disc = linear * linear + 4 * q_i * (q_i + 1) * s_i * (k_i - s_i);
    let sqrt_disc = QuadraticNumber::sqrt_of(disc as u64);
    let half = Rat::new(1.into(), 2.into());
    let base = QuadraticNumber::from_int(n_i - 2 * q_i - 1);
    let join_hi = base.add(&sqrt_disc).scale(&half);
    let join_lo = base.sub(&sqrt_disc).scale(&half);
    Ok(ClosedSpectrum::new(vec![
        (QuadraticNumber::from_int(-(q_i + 1)), s - 1),
        (QuadraticNumber::from_int(-q_i), k - s - 1),
        (QuadraticNumber::from_int(0), n - k),
        (join_lo, 1),
        (join_hi, 1),
    ]))
}

/// A closed spectrum declared to come from an r-regular graph on `size`
/// vertices, as the join formula requires.
#[derive(Debug, Clone)]
pub struct RegularSpectrum {
    pub spectrum: ClosedSpectrum,
    pub degree: i64,
    pub size: usize,
}

impl RegularSpectrum {
    /// Extract the closed spectrum of a regular graph when it is expressible
    /// with quadratic surds: integer roots come off first, and whatever
    /// remains must split into quadratic square-free factors. Spectra with
    /// higher-degree irrationalities (for instance C_7) are not
    /// representable as a `ClosedSpectrum` and are rejected.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let degree = crate::structure::is_regular(g).ok_or(Error::NotRegular)? as i64;
        let poly = char_poly(g, MatrixKind::A);
        let mut entries = Vec::new();
        let mut remaining = poly;
        for r in integer_candidates(&remaining) {
            let mult = remaining.root_multiplicity(&r);
            if mult > 0 {
                entries.push((QuadraticNumber::from_rat(r.clone()), mult));
                remaining = remaining.deflate(&r, mult);
            }
        }
        for (factor, mult) in crate::roots::square_free_factors(&remaining) {
            if factor.degree() != 2 {
                return Err(Error::NonIntegral(
                    "spectrum has non-quadratic irrational eigenvalues".into(),
                ));
            }
            // x^2 - sx + p with roots (s +- sqrt(s^2 - 4p)) / 2
            let s = -factor.coeffs()[1].clone();
            let p = factor.coeffs()[2].clone();
            let disc = &s * &s - rat(4) * &p;
            if !disc.is_integer() || disc < Rat::zero() {
                return Err(Error::NonIntegral("non-real or non-integral discriminant".into()));
            }
            let surd =
                QuadraticNumber::sqrt_of(u64::try_from(disc.to_integer()).map_err(|_| {
                    Error::NonIntegral("discriminant exceeds the supported range".into())
                })?);
            let half = Rat::new(1.into(), 2.into());
            let base = QuadraticNumber::from_rat(s);
            entries.push((base.add(&surd).scale(&half), mult));
            entries.push((base.sub(&surd).scale(&half), mult));
        }
        Ok(RegularSpectrum { spectrum: ClosedSpectrum::new(entries), degree, size: g.vertex_count() })
    }
}

fn integer_candidates(p: &CharPoly) -> Vec<Rat> {
    // adjacency eigenvalues of an n-vertex graph lie strictly inside [-n, n]
    let bound = p.degree() as i64;
    (-bound..=bound).map(rat).collect()
}

/// Adjacency spectrum of the join of two regular graphs: all non-principal
/// eigenvalues survive, while the two degrees merge into the quadratic pair
/// ((r1 + r2) +- sqrt((r1 - r2)^2 + 4 n1 n2)) / 2.
pub fn join_spectrum_regular(
    g1: &RegularSpectrum,
    g2: &RegularSpectrum,
) -> Result<ClosedSpectrum> {
    let mut entries = Vec::new();
    for (part, declared) in [(g1, g1.degree), (g2, g2.degree)] {
        let degree_value = QuadraticNumber::from_int(declared);
        let mut found = false;
        for (value, mult) in part.spectrum.entries() {
            if *value == degree_value {
                found = true;
                if *mult > 1 {
                    entries.push((value.clone(), mult - 1));
                }
            } else {
                entries.push((value.clone(), *mult));
            }
        }
        if !found {
            return Err(Error::HypothesisViolation(format!(
                "declared degree {declared} not present in input spectrum"
            )));
        }
    }
    let (r1, r2) = (g1.degree, g2.degree);
    let disc = (r1 - r2) * (r1 - r2) + 4 * (g1.size * g2.size) as i64;
    let sqrt_disc = QuadraticNumber::sqrt_of(disc as u64);
    let half = Rat::new(1.into(), 2.into());
    let base = QuadraticNumber::from_int(r1 + r2);
    entries.push((base.add(&sqrt_disc).scale(&half), 1));
    entries.push((base.sub(&sqrt_disc).scale(&half), 1));
    Ok(ClosedSpectrum::new(entries))
}

/// True when {p,q} attains the minimum arithmetic mean among natural factor
/// pairs with product pq; factor pairs found by trial division.
pub fn is_am_minimizer(p: usize, q: usize) -> bool {
    assert!(p >= 1 && q >= 1);
    let product = p * q;
    let mut best = usize::MAX;
    let mut a = 1;
    while a * a <= product {
        if product.is_multiple_of(a) {
            best = best.min(a + product / a);
        }
        a += 1;
    }
    p + q == best
}

/// K_{p,q} is determined by its adjacency spectrum iff {p,q} is an
/// AM-minimizer.
pub fn complete_bipartite_is_ds(p: usize, q: usize) -> bool {
    is_am_minimizer(p, q)
}

/// A-cospectral nonisomorphic mate of K_{p,q} when one exists: the graph
/// K_{a,b} plus p+q-a-b isolated vertices, for the factor pair {a,b} of pq
/// minimizing a+b. Returns `None` exactly when {p,q} is an AM-minimizer.
pub fn complete_bipartite_cospectral_mate(p: usize, q: usize) -> Option<Graph> {
    if complete_bipartite_is_ds(p, q) {
        return None;
    }
    let product = p * q;
    let mut best: Option<(usize, usize)> = None;
    let mut a = 1;
    while a * a <= product {
        if product.is_multiple_of(a) {
            let pair = (a, product / a);
            if best.is_none_or(|(x, y)| pair.0 + pair.1 < x + y) {
                best = Some(pair);
            }
        }
        a += 1;
    }
    let (a, b) = best.unwrap();
    let isolated = p + q - a - b;
    let mate = Graph::disjoint_union(&[
        generate(&FamilySpec::CompleteBipartite(a, b)).unwrap(),
        Graph::empty(isolated),
    ]);
    let original = generate(&FamilySpec::CompleteBipartite(p, q)).unwrap();
    assert!(
        are_cospectral(&original, &mate, &[MatrixKind::A]),
        "mate construction must be A-cospectral"
    );
    assert!(!crate::canon::are_isomorphic(&original, &mate));
    Some(mate)
}

/// Check a complete multipartite fingerprint against the one-positive /
/// interlacing description: signature (k-1, n-k, 1), with the negative
/// eigenvalues interlacing the sorted part sizes to 1e-9.
pub fn multipartite_spectral_bounds_check(parts: &[usize], p_a: &CharPoly) -> bool {
    let k = parts.len();
    let n: usize = parts.iter().sum();
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    if p_a.degree() != n {
        return false;
    }
    let expected = (k - 1, n - k, 1);
    if p_a.root_signature() != expected {
        return false;
    }
    let roots = numeric_roots(p_a);
    // roots descending; negatives occupy positions n-k+1 .. n-1 (0-based)
    let tol = 1e-9;
    for i in 1..k {
        let neg = -roots[n - k + i];
        if !(sorted[i - 1] as f64 - tol <= neg && neg <= sorted[i] as f64 + tol) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn generated_poly(spec: &FamilySpec) -> CharPoly {
        char_poly(&generate(spec).unwrap(), MatrixKind::A)
    }

    #[test]
    fn k23_spectrum_matches_generated() {
        let spectrum = complete_bipartite_spectrum(2, 3).unwrap();
        assert_eq!(spectrum.total_multiplicity(), 5);
        assert_eq!(
            spectrum.to_char_poly().unwrap(),
            generated_poly(&FamilySpec::CompleteBipartite(2, 3))
        );
        // K_2 degenerate case
        let k2 = complete_bipartite_spectrum(1, 1).unwrap();
        assert_eq!(k2.to_char_poly().unwrap(), generated_poly(&FamilySpec::Complete(2)));
    }

    #[test]
    fn star5_spectrum_equals_k14() {
        let spectrum = complete_bipartite_spectrum(1, 4).unwrap();
        assert_eq!(spectrum.to_char_poly().unwrap(), generated_poly(&FamilySpec::Star(5)));
    }

    #[test]
    fn complete_bipartite_spectrum_agrees_up_to_twelve() {
        for p in 1..=12usize {
            for q in p..=12usize {
                let closed = complete_bipartite_spectrum(p, q).unwrap().to_char_poly().unwrap();
                assert_eq!(
                    closed,
                    generated_poly(&FamilySpec::CompleteBipartite(p, q)),
                    "K_{{{p},{q}}}"
                );
            }
        }
    }

    #[test]
    fn regular_multipartite_cases() {
        let s = regular_multipartite_spectrum(2, 3).unwrap();
        assert_eq!(
            s.to_char_poly().unwrap(),
            generated_poly(&FamilySpec::CompleteMultipartite(vec![2, 2, 2]))
        );
        let complete = regular_multipartite_spectrum(1, 5).unwrap();
        assert_eq!(complete.to_char_poly().unwrap(), generated_poly(&FamilySpec::Complete(5)));
        let bipartite = regular_multipartite_spectrum(3, 2).unwrap();
        assert_eq!(
            bipartite.to_char_poly().unwrap(),
            generated_poly(&FamilySpec::CompleteBipartite(3, 3))
        );
    }

    #[test]
    fn turan_spectrum_matches_generated_exactly() {
        for n in 2..=14usize {
            for k in 2..=n {
                let closed = turan_spectrum(n, k).unwrap().to_char_poly().unwrap();
                assert_eq!(closed, generated_poly(&FamilySpec::Turan(n, k)), "T({n},{k})");
            }
        }
    }

    #[test]
    fn turan_17_7_closed_form() {
        let s = turan_spectrum(17, 7).unwrap();
        assert_eq!(s.to_char_poly().unwrap(), generated_poly(&FamilySpec::Turan(17, 7)));
        let negatives: usize = s
            .entries()
            .iter()
            .filter(|(v, _)| v.sign() < 0)
            .map(|(_, m)| m)
            .sum();
        assert_eq!(negatives, 6); // k - 1 negative eigenvalues
    }

    #[test]
    fn join_formula_against_direct() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let joined = c4.join(&c4);
        let formula = join_spectrum_regular(
            &RegularSpectrum::of_graph(&c4).unwrap(),
            &RegularSpectrum::of_graph(&c4).unwrap(),
        )
        .unwrap();
        assert_eq!(formula.to_char_poly().unwrap(), char_poly(&joined, MatrixKind::A));

        let k1 = Graph::empty(1);
        let wheel = k1.join(&c4);
        let formula = join_spectrum_regular(
            &RegularSpectrum::of_graph(&k1).unwrap(),
            &RegularSpectrum::of_graph(&c4).unwrap(),
        )
        .unwrap();
        assert_eq!(formula.to_char_poly().unwrap(), char_poly(&wheel, MatrixKind::A));
    }

    #[test]
    fn join_rejects_wrong_degree() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let mut spec = RegularSpectrum::of_graph(&c4).unwrap();
        spec.degree = 3;
        let other = RegularSpectrum::of_graph(&c4).unwrap();
        assert!(join_spectrum_regular(&spec, &other).is_err());
    }

    #[test]
    fn am_minimizer_cases() {
        assert!(is_am_minimizer(3, 3));
        assert!(is_am_minimizer(7, 7));
        assert!(!is_am_minimizer(1, 4));
        assert!(is_am_minimizer(2, 3));
        assert!(is_am_minimizer(1, 7)); // prime
        assert!(!is_am_minimizer(2, 8));
    }

    #[test]
    fn mate_of_s5_is_c4_plus_k1() {
        let mate = complete_bipartite_cospectral_mate(1, 4).unwrap();
        let c4k1 = Graph::disjoint_union(&[
            generate(&FamilySpec::Cycle(4)).unwrap(),
            Graph::empty(1),
        ]);
        assert!(are_isomorphic(&mate, &c4k1));
        assert!(complete_bipartite_cospectral_mate(2, 3).is_none());
        let mate19 = complete_bipartite_cospectral_mate(1, 9).unwrap();
        assert_eq!(mate19.vertex_count(), 10);
        assert_eq!(mate19.edge_count(), 9);
        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let expected = Graph::disjoint_union(&[k33, Graph::empty(4)]);
        assert!(are_isomorphic(&mate19, &expected));
    }

    #[test]
    fn closed_spectrum_json_shape() {
        let entries = complete_bipartite_spectrum(2, 3).unwrap().to_json();
        let rendered = serde_json::to_string(&entries).unwrap();
        assert_eq!(
            rendered,
            concat!(
                r#"[{"value":{"a":"0","b":"1","delta":6},"mult":1},"#,
                r#"{"value":{"a":"0","b":"0","delta":0},"mult":3},"#,
                r#"{"value":{"a":"0","b":"-1","delta":6},"mult":1}]"#
            )
        );
    }

    #[test]
    fn signatures_of_structured_spectra() {
        // K_{p,q}: one negative, p+q-2 zeros, one positive
        for (p, q) in [(2usize, 3usize), (1, 4), (3, 3), (1, 1)] {
            let poly = generated_poly(&FamilySpec::CompleteBipartite(p, q));
            assert_eq!(poly.root_signature(), (1, p + q - 2, 1));
        }
        // irregular Turan graphs keep k-1 negative eigenvalues: the join
        // contributes one negative root beyond the k-2 integer ones
        assert_eq!(generated_poly(&FamilySpec::Turan(17, 7)).root_signature(), (6, 10, 1));
        assert_eq!(
            generated_poly(&FamilySpec::Petersen).distinct_root_count(),
            3
        );
    }

    #[test]
    fn multipartite_bounds() {
        assert!(multipartite_spectral_bounds_check(
            &[2, 3],
            &generated_poly(&FamilySpec::CompleteBipartite(2, 3))
        ));
        assert!(multipartite_spectral_bounds_check(
            &[2, 2, 3],
            &generated_poly(&FamilySpec::CompleteMultipartite(vec![2, 2, 3]))
        ));
        assert!(multipartite_spectral_bounds_check(
            &[1, 1, 1],
            &generated_poly(&FamilySpec::Complete(3))
        ));
        // a non-multipartite fingerprint fails the signature test
        assert!(!multipartite_spectral_bounds_check(
            &[2, 3],
            &generated_poly(&FamilySpec::Path(5))
        ));
    }
}
