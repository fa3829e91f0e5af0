//! Exact characteristic polynomials and coefficient-level queries.
//!
//! Polynomials are monic with arbitrary-precision rational coefficients,
//! stored degree-descending. Characteristic polynomials are computed with
//! the Faddeev-LeVerrier recurrence, whose division steps are exact over
//! the integers; an i128 fast path serves the enumeration hot loop.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Monic polynomial with exact rational coefficients, degree-descending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<Rat>,
}

impl CharPoly {
    pub fn from_monic(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.first().map(|c| c.is_one()) != Some(true) {
            return Err(Error::NonMonicPolynomial);
        }
        Ok(CharPoly { coeffs })
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::from_monic(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients degree-descending, starting with the leading 1.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff_of(&self, power: usize) -> Rat {
        let n = self.degree();
        if power > n {
            Rat::zero()
        } else {
            self.coeffs[n - power].clone()
        }
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicity of the root 0: number of trailing zero coefficients.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Exact root counts `(negatives, zeros, positives)` for a real-rooted
    /// polynomial. Positive roots are counted by Descartes' rule of signs,
    /// which is exact in the real-rooted case; the three counts are checked
    /// to add up to the degree.
    pub fn root_signature(&self) -> (usize, usize, usize) {
        let zeros = self.zero_root_multiplicity();
        let positives = sign_variations(&self.coeffs);
        let negatives = sign_variations(&self.reflect().coeffs);
        assert_eq!(
            negatives + zeros + positives,
            self.degree(),
            "root signature mismatch: input not real-rooted?"
        );
        (negatives, zeros, positives)
    }

    /// Power sums `sum_i r_i^k` for `k = 1..=up_to`, by Newton's identities.
    pub fn power_sums(&self, up_to: usize) -> Vec<Rat> {
        let n = self.degree();
        // elementary symmetric functions: e_i = (-1)^i c_i
        let e: Vec<Rat> = (0..=n)
            .map(|i| if i % 2 == 0 { self.coeffs[i].clone() } else { -self.coeffs[i].clone() })
            .collect();
        let mut p: Vec<Rat> = Vec::with_capacity(up_to + 1);
        p.push(rat(0)); // unused p_0 slot
        for k in 1..=up_to {
            let mut sum = Rat::zero();
            for i in 1..k.min(n + 1) {
                let term = &e[i] * &p[k - i];
                if i % 2 == 1 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            if k <= n {
                let term = &e[k] * rat(k as i64);
                if k % 2 == 1 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            p.push(sum);
        }
        p.remove(0);
        p
    }

    /// p(-x), sign-flipped so callers can test spectral symmetry.
    pub fn reflect(&self) -> CharPoly {
        let n = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (n - i) % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        CharPoly { coeffs }
    }

    /// p(x + c) by repeated synthetic division.
    pub fn shift(&self, c: &Rat) -> CharPoly {
        let n = self.degree();
        let mut work = self.coeffs.clone();
        let mut out = vec![Rat::zero(); n + 1];
        for i in (0..=n).rev() {
            // divide work by (x - c); remainder is the coefficient of y^(n-i)
            let mut acc = Rat::zero();
            for w in work.iter_mut() {
                acc = acc * c + w.clone();
                *w = acc.clone();
            }
            out[i] = work.pop().unwrap();
        }
        CharPoly { coeffs: out }
    }

    pub fn derivative(&self) -> Vec<Rat> {
        let n = self.degree();
        (0..n).map(|i| &self.coeffs[i] * rat((n - i) as i64)).collect()
    }

    /// Multiplicity of the rational root `r` by repeated exact division.
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        let mut mult = 0;
        let mut coeffs = self.coeffs.clone();
        loop {
            let (quot, rem) = synthetic_divide(&coeffs, r);
            if !rem.is_zero() || quot.is_empty() {
                return mult;
            }
            mult += 1;
            coeffs = quot;
            if coeffs.len() == 1 {
                return mult;
            }
        }
    }

    /// Number of distinct roots: degree minus the degree of gcd(p, p').
    pub fn distinct_root_count(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let g = poly_gcd(&self.coeffs, &self.derivative());
        self.degree() - (g.len() - 1)
    }

    /// Quotient after removing the factor (x - r)^mult; r must be a root of
    /// that multiplicity.
    pub fn deflate(&self, r: &Rat, mult: usize) -> CharPoly {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..mult {
            let (quot, rem) = synthetic_divide(&coeffs, r);
            assert!(rem.is_zero(), "deflating by a non-root");
            coeffs = quot;
        }
        CharPoly { coeffs }
    }

    /// Product with another monic polynomial.
    pub fn multiply(&self, other: &CharPoly) -> CharPoly {
        CharPoly { coeffs: poly_mul(&self.coeffs, &other.coeffs) }
    }

    /// Inverse of `coeff_strings`.
    pub fn from_coeff_strings(strings: &[String]) -> Result<Self> {
        let coeffs = strings
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<Rat>>>()?;
        Self::from_monic(coeffs)
    }

    /// Coefficients rendered as exact decimal strings (integers plain,
    /// non-integers as "p/q"), degree-descending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }
}

impl std::fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharPoly{:?}", self.coeff_strings())
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::NonIntegral(format!("bad coefficient '{t}'")))
    };
    match s.split_once('/') {
        Some((num, den)) => Ok(Rat::new(parse_int(num)?, parse_int(den)?)),
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

fn sign_variations(coeffs: &[Rat]) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let pos = c.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

/// Divide by (x - r): returns (quotient coefficients, remainder).
pub fn synthetic_divide(coeffs: &[Rat], r: &Rat) -> (Vec<Rat>, Rat) {
    let mut quot = Vec::with_capacity(coeffs.len().saturating_sub(1));
    let mut acc = Rat::zero();
    for (i, c) in coeffs.iter().enumerate() {
        acc = acc * r + c.clone();
        if i + 1 < coeffs.len() {
            quot.push(acc.clone());
        }
    }
    (quot, acc)
}

pub fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact polynomial division; panics unless the division is exact.
pub fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let (mut num, den) = (num.to_vec(), trim(den));
    let num_t = trim(&num);
    if num_t.iter().all(|c| c.is_zero()) {
        return vec![Rat::zero()];
    }
    num = num_t;
    let dn = den.len() - 1;
    assert!(num.len() > dn, "exact division underflow");
    let mut quot = vec![Rat::zero(); num.len() - den.len() + 1];
    for i in 0..quot.len() {
        let factor = &num[i] / &den[0];
        quot[i] = factor.clone();
        if factor.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            let prod = &factor * dj;
            num[i + j] -= prod;
        }
    }
    assert!(num.iter().all(|c| c.is_zero()), "polynomial division not exact");
    quot
}

fn trim(coeffs: &[Rat]) -> Vec<Rat> {
    let start = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len() - 1);
    coeffs[start..].to_vec()
}

/// Monic gcd by the Euclidean algorithm.
pub fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = trim(&r);
    }
    let lead = a[0].clone();
    if !lead.is_one() && !lead.is_zero() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

pub fn poly_rem(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut num = num.to_vec();
    let den = trim(den);
    let dn = den.len();
    while num.len() >= dn && !num.iter().all(|c| c.is_zero()) {
        let num_t = trim(&num);
        if num_t.len() < dn {
            return num_t;
        }
        num = num_t;
        let factor = &num[0] / &den[0];
        for (j, dj) in den.iter().enumerate() {
            let prod = &factor * dj;
            num[j] -= prod;
        }
        num.remove(0);
    }
    if num.is_empty() {
        vec![Rat::zero()]
    } else {
        num
    }
}

/// Faddeev-LeVerrier over arbitrary-precision integers. The matrix is given
/// by an entry callback; every trace division by k is exact.
pub fn char_poly_int_matrix(n: usize, entry: impl Fn(usize, usize) -> BigInt) -> Vec<BigInt> {
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = entry(i, j);
        }
    }
    let mut b: Vec<BigInt> = (0..n * n)
        .map(|idx| if idx / n == idx % n { BigInt::one() } else { BigInt::zero() })
        .collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    for k in 1..=n {
        // b <- m * b
        let mut prod = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let mil = &m[i * n + l];
                if mil.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = mil * &b[l * n + j];
                    prod[i * n + j] += term;
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| prod[i * n + i].clone()).sum();
        let ck = -trace / BigInt::from(k);
        for i in 0..n {
            prod[i * n + i] += &ck;
        }
        coeffs.push(ck);
        b = prod;
    }
    coeffs
}

/// Faddeev-LeVerrier over rationals, for matrices that are not integral.
pub fn char_poly_rat_matrix(n: usize, entry: impl Fn(usize, usize) -> Rat) -> Vec<Rat> {
    let mut m = vec![Rat::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = entry(i, j);
        }
    }
    let mut b: Vec<Rat> = (0..n * n)
        .map(|idx| if idx / n == idx % n { Rat::one() } else { Rat::zero() })
        .collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Rat::one());
    for k in 1..=n {
        let mut prod = vec![Rat::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let mil = &m[i * n + l];
                if mil.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = mil * &b[l * n + j];
                    prod[i * n + j] += term;
                }
            }
        }
        let trace: Rat = (0..n).map(|i| prod[i * n + i].clone()).sum();
        let ck = -trace / rat(k as i64);
        for i in 0..n {
            prod[i * n + i] += &ck;
        }
        coeffs.push(ck);
        b = prod;
    }
    coeffs
}

/// i128 fast path for small integer matrices; `None` on overflow.
pub fn char_poly_i128(n: usize, m: &[i128]) -> Option<Vec<i128>> {
    debug_assert_eq!(m.len(), n * n);
    let mut b: Vec<i128> = vec![0; n * n];
    for i in 0..n {
        b[i * n + i] = 1;
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(1i128);
    for k in 1..=n {
        let mut prod = vec![0i128; n * n];
        for i in 0..n {
            for l in 0..n {
                let mil = m[i * n + l];
                if mil == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = mil.checked_mul(b[l * n + j])?;
                    prod[i * n + j] = prod[i * n + j].checked_add(term)?;
                }
            }
        }
        let mut trace = 0i128;
        for i in 0..n {
            trace = trace.checked_add(prod[i * n + i])?;
        }
        let ck = -trace / k as i128;
        for i in 0..n {
            prod[i * n + i] = prod[i * n + i].checked_add(ck)?;
        }
        coeffs.push(ck);
        b = prod;
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sums_of_k3_charpoly() {
        // A(K_3): x^3 - 3x - 2, spectrum {2, -1, -1}
        let p = CharPoly::from_int_coeffs(&[1, 0, -3, -2]).unwrap();
        assert_eq!(p.power_sums(3), vec![rat(0), rat(6), rat(6)]);
    }

    #[test]
    fn signature_of_star_poly() {
        // x^5 - 4x^3: roots {-2, 0,0,0, 2}
        let p = CharPoly::from_int_coeffs(&[1, 0, -4, 0, 0, 0]).unwrap();
        assert_eq!(p.root_signature(), (1, 3, 1));
        assert_eq!(p.root_multiplicity(&rat(0)), 3);
        assert_eq!(p.root_multiplicity(&rat(2)), 1);
        assert_eq!(p.root_multiplicity(&rat(1)), 0);
        assert_eq!(p.distinct_root_count(), 3);
    }

    #[test]
    fn shift_and_reflect() {
        // p = x^2 - 1; p(x+1) = x^2 + 2x; p(-x) = x^2 - 1
        let p = CharPoly::from_int_coeffs(&[1, 0, -1]).unwrap();
        assert_eq!(p.shift(&rat(1)).coeffs(), &[rat(1), rat(2), rat(0)]);
        assert_eq!(p.reflect().coeffs(), p.coeffs());
        // q = x^3: q(-x) = -x^3
        let q = CharPoly::from_int_coeffs(&[1, 0, 0, 0]).unwrap();
        assert_eq!(q.reflect().coeffs()[0], rat(-1));
    }

    #[test]
    fn trivial_multiplicity() {
        let p = CharPoly::from_int_coeffs(&[1, 0]).unwrap(); // x
        assert_eq!(p.root_multiplicity(&rat(1)), 0);
        assert_eq!(p.root_multiplicity(&rat(0)), 1);
    }

    #[test]
    fn i128_matches_bigint() {
        let m: Vec<i128> = vec![0, 1, 1, 1, 0, 1, 1, 1, 0]; // A(K_3)
        let fast = char_poly_i128(3, &m).unwrap();
        let slow = char_poly_int_matrix(3, |i, j| BigInt::from(m[i * 3 + j]));
        assert_eq!(
            fast.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
            slow
        );
    }

    #[test]
    fn gcd_of_repeated_roots() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = CharPoly::from_int_coeffs(&[1, 0, -3, 2]).unwrap();
        assert_eq!(p.distinct_root_count(), 2);
        assert_eq!(p.root_multiplicity(&rat(1)), 2);
    }
}
