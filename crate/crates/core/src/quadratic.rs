//! Exact numbers of the form a + b*sqrt(delta) with rational a, b and
//! square-free nonnegative integer delta. Arithmetic is closed for a fixed
//! delta, which is all the closed-form spectra require.

use crate::charpoly::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: Rat,
    b: Rat,
    delta: u64,
}

impl QuadraticNumber {
    pub fn from_rat(a: Rat) -> Self {
        QuadraticNumber { a, b: Rat::zero(), delta: 0 }
    }

    pub fn from_int(a: i64) -> Self {
        Self::from_rat(rat(a))
    }

    /// a + b*sqrt(delta), normalized: square factors move out of delta, and
    /// a perfect-square delta collapses to a rational.
    pub fn new(a: Rat, b: Rat, delta: u64) -> Self {
        if b.is_zero() || delta == 0 {
            return Self::from_rat(a);
        }
        let (square, free) = square_free_split(delta);
        let b = b * rat(square as i64);
        if free == 1 {
            Self::from_rat(a + b)
        } else {
            QuadraticNumber { a, b, delta: free }
        }
    }

    /// Exact square root of a nonnegative integer.
    pub fn sqrt_of(m: u64) -> Self {
        Self::new(Rat::zero(), rat(1), m)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn surd_part(&self) -> &Rat {
        &self.b
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rational value when the surd part vanishes.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber { a: self.a.clone(), b: -self.b.clone(), delta: self.delta }
    }

    fn unify_delta(&self, other: &Self) -> u64 {
        match (self.delta, other.delta) {
            (0, d) | (d, 0) => d,
            (d1, d2) => {
                assert_eq!(d1, d2, "mixed radicands {d1} and {d2}");
                d1
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let delta = self.unify_delta(other);
        Self::new(&self.a + &other.a, &self.b + &other.b, delta)
    }

    pub fn neg(&self) -> Self {
        QuadraticNumber { a: -self.a.clone(), b: -self.b.clone(), delta: self.delta }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let delta = self.unify_delta(other);
        let d = rat(delta as i64);
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Self::new(a, b, delta)
    }

    pub fn div(&self, other: &Self) -> Self {
        let delta = self.unify_delta(other);
        let d = rat(delta as i64);
        let norm = &other.a * &other.a - &other.b * &other.b * &d;
        assert!(!norm.is_zero(), "division by zero quadratic number");
        let conj = other.conjugate();
        let prod = self.mul(&conj);
        Self::new(prod.a / &norm, prod.b / &norm, delta)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        QuadraticNumber { a: &self.a * factor, b: &self.b * factor, delta: self.delta }
    }

    /// Sign of the real value: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let (sa, sb) = (sign_of(&self.a), sign_of(&self.b));
        if sa == sb {
            return sa;
        }
        // compare a^2 against b^2 * delta
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat(self.delta as i64);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * (self.delta as f64).sqrt()
    }
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Split m = s^2 * f with f square-free; returns (s, f).
fn square_free_split(m: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut count = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                count += 1;
            }
            square *= p.pow(count / 2);
            if count % 2 == 1 {
                free *= p;
            }
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

impl std::fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn rat_str(r: &Rat) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.b.is_zero() {
            return write!(f, "{}", rat_str(&self.a));
        }
        let surd = if self.b == rat(1) {
            format!("sqrt({})", self.delta)
        } else if self.b == rat(-1) {
            format!("-sqrt({})", self.delta)
        } else {
            format!("{}*sqrt({})", rat_str(&self.b), self.delta)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if self.b.is_positive() {
            write!(f, "{} + {}", rat_str(&self.a), surd)
        } else {
            write!(f, "{} {}", rat_str(&self.a), surd.replacen('-', "- ", 1))
        }
    }
}

impl std::fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized form used in closed-spectrum JSON.
#[derive(Serialize)]
pub struct QuadraticJson {
    pub a: String,
    pub b: String,
    pub delta: u64,
}

impl From<&QuadraticNumber> for QuadraticJson {
    fn from(q: &QuadraticNumber) -> Self {
        fn render(r: &Rat) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        QuadraticJson { a: render(&q.a), b: render(&q.b), delta: q.delta }
    }
}

pub fn big_rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
