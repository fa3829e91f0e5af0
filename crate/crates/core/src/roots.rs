//! Numeric root approximation for exact real-rooted polynomials: Yun
//! square-free decomposition, Sturm-sequence isolation, and bisection on the
//! exact polynomial down to 1e-12 intervals. Reporting only; cospectrality
//! never consults these values.

use crate::charpoly::{rat, CharPoly, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// All real roots with multiplicity, sorted descending.
pub fn numeric_roots(p: &CharPoly) -> Vec<f64> {
    let zeros = p.zero_root_multiplicity();
    let deflated = p.deflate(&Rat::zero(), zeros);
    let mut roots = vec![0.0; zeros];
    for (factor, mult) in square_free_decomposition(deflated.coeffs()) {
        if factor.len() <= 1 {
            continue;
        }
        for r in isolate_and_refine(&factor) {
            for _ in 0..mult {
                roots.push(r);
            }
        }
    }
    assert_eq!(roots.len(), p.degree(), "real-rooted input expected");
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    roots
}

/// Square-free factors of a monic polynomial with their multiplicities.
pub fn square_free_factors(p: &CharPoly) -> Vec<(CharPoly, usize)> {
    square_free_decomposition(p.coeffs())
        .into_iter()
        .map(|(coeffs, mult)| (CharPoly::from_monic(coeffs).expect("factors stay monic"), mult))
        .collect()
}

/// Yun's algorithm: returns monic square-free factors with multiplicities.
fn square_free_decomposition(coeffs: &[Rat]) -> Vec<(Vec<Rat>, usize)> {
    use crate::charpoly::{poly_div_exact, poly_gcd};
    if coeffs.len() <= 1 {
        return vec![];
    }
    let deriv = derivative(coeffs);
    let g = poly_gcd(coeffs, &deriv);
    if g.len() == 1 {
        return vec![(coeffs.to_vec(), 1)];
    }
    let mut out = Vec::new();
    let mut w = poly_div_exact(coeffs, &g);
    let mut y = poly_div_exact(&deriv, &g);
    let mut z = poly_sub(&y, &derivative(&w));
    let mut i = 1usize;
    while w.len() > 1 {
        let f = poly_gcd(&w, &z);
        if f.len() > 1 {
            out.push((f.clone(), i));
        }
        w = poly_div_exact(&w, &f);
        y = poly_div_exact(&z, &f);
        z = poly_sub(&y, &derivative(&w));
        i += 1;
    }
    out
}

fn derivative(coeffs: &[Rat]) -> Vec<Rat> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![Rat::zero()];
    }
    (0..n).map(|i| &coeffs[i] * rat((n - i) as i64)).collect()
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let len = a.len().max(b.len());
    let mut out = vec![Rat::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[len - a.len() + i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[len - b.len() + i] -= c;
    }
    let start = out.iter().position(|c| !c.is_zero()).unwrap_or(len - 1);
    out[start..].to_vec()
}

fn eval(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs {
        acc = acc * x + c;
    }
    acc
}

/// Sturm chain with monic normalization at each step.
fn sturm_chain(coeffs: &[Rat]) -> Vec<Vec<Rat>> {
    use crate::charpoly::poly_rem;
    let mut chain = vec![coeffs.to_vec(), derivative(coeffs)];
    loop {
        let last = &chain[chain.len() - 1];
        if last.len() == 1 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let mut r = poly_rem(prev, last);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        let lead = r[0].abs();
        for c in r.iter_mut() {
            *c /= &lead;
        }
        chain.push(r);
    }
    chain
}

fn sign_changes(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for poly in chain {
        let v = eval(poly, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Isolate and refine the roots of a square-free polynomial.
fn isolate_and_refine(coeffs: &[Rat]) -> Vec<f64> {
    let lead = coeffs[0].clone();
    let monic: Vec<Rat> = coeffs.iter().map(|c| c / &lead).collect();
    // Cauchy bound: all roots lie strictly inside [-bound, bound]
    let max_abs =
        monic.iter().skip(1).map(|c| c.abs()).max().unwrap_or_else(Rat::zero);
    let bound = max_abs + Rat::one();
    let chain = sturm_chain(&monic);
    let count = |a: &Rat, b: &Rat| sign_changes(&chain, a) - sign_changes(&chain, b);
    let mut intervals = vec![(-bound.clone(), bound.clone())];
    let mut isolated: Vec<(Rat, Rat)> = Vec::new();
    while let Some((a, b)) = intervals.pop() {
        let roots_here = count(&a, &b);
        if roots_here == 0 {
            continue;
        }
        if roots_here == 1 {
            isolated.push((a, b));
            continue;
        }
        // split at a non-root point so root counts stay well defined
        let mut mid = (&a + &b) / rat(2);
        let mut offset = (&b - &a) / rat(4);
        while eval(&monic, &mid).is_zero() {
            mid += &offset;
            offset /= rat(2);
        }
        intervals.push((a, mid.clone()));
        intervals.push((mid, b));
    }
    let tol = Rat::new(BigInt::one(), BigInt::from(10u64.pow(13)));
    let mut out: Vec<f64> = Vec::with_capacity(isolated.len());
    for (mut a, mut b) in isolated {
        while &b - &a > tol {
            let mid = (&a + &b) / rat(2);
            if eval(&monic, &mid).is_zero() {
                a = mid.clone();
                b = mid;
                break;
            }
            // the half-open interval (a, mid] keeps the root iff its count is 1
            if count(&a, &mid) >= 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(((&a + &b) / rat(2)).to_f64().unwrap());
    }
    out
}
