//! Strongly regular graph parameters, their spectra, and recovery of the
//! parameter quadruple from an adjacency fingerprint alone.

use crate::charpoly::{poly_div_exact, poly_gcd, rat, synthetic_divide, CharPoly, Rat};
use crate::error::{Error, Result};
use crate::invariants::is_regular_from_spectrum;
use crate::quadratic::QuadraticNumber;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Parameter quadruple (n, d, lambda, mu) of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub fn new(n: usize, d: usize, lambda: usize, mu: usize) -> Result<Self> {
        let params = SrgParams { n, d, lambda, mu };
        params.check_feasible()?;
        Ok(params)
    }

    /// Necessary feasibility identity (n-d-1) mu = d (d-lambda-1), plus the
    /// degree bounds excluding complete and empty graphs.
    pub fn check_feasible(&self) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::InfeasibleSrg {
                n: self.n,
                d: self.d,
                lambda: self.lambda,
                mu: self.mu,
                reason: reason.into(),
            })
        };
        if self.d == 0 || self.d + 1 >= self.n {
            return fail("requires 0 < d < n - 1");
        }
        if self.lambda + 1 > self.d {
            return fail("lambda exceeds d - 1");
        }
        let lhs = (self.n - self.d - 1) * self.mu;
        let rhs = self.d * (self.d - self.lambda - 1);
        if lhs != rhs {
            return fail("identity (n-d-1)mu = d(d-lambda-1) fails");
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.mu > 0
    }
}

/// Spectrum of a strongly regular graph: degree with multiplicity one plus
/// two further eigenvalues with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgSpectrum {
    pub degree: usize,
    pub p1: QuadraticNumber,
    pub p2: QuadraticNumber,
    pub m1: usize,
    pub m2: usize,
}

/// Closed-form spectrum of feasible parameters. Non-conference parameters
/// must produce integral eigenvalues and multiplicities; the conference
/// branch (vanishing 2d + (n-1)(lambda - mu)) forces multiplicities
/// (n-1)/2 and discriminant n.
pub fn srg_spectrum(params: &SrgParams) -> Result<SrgSpectrum> {
    params.check_feasible()?;
    let SrgParams { n, d, lambda, mu } = *params;
    let fail = |reason: String| Error::InfeasibleSrg { n, d, lambda, mu, reason };
    let diff = lambda as i64 - mu as i64;
    let disc = diff * diff + 4 * (d as i64 - mu as i64);
    if disc <= 0 {
        return Err(fail(format!("nonpositive discriminant {disc}")));
    }
    let sqrt_disc = QuadraticNumber::sqrt_of(disc as u64);
    let half = Rat::new(1.into(), 2.into());
    let p1 = QuadraticNumber::from_int(diff).add(&sqrt_disc).scale(&half);
    let p2 = QuadraticNumber::from_int(diff).sub(&sqrt_disc).scale(&half);
    let balance = 2 * d as i64 + (n as i64 - 1) * diff;
    let (m1, m2) = if balance == 0 {
        if disc as u64 != n as u64 {
            return Err(fail(format!("conference balance with discriminant {disc} != n")));
        }
        if (n - 1) % 2 != 0 {
            return Err(fail("conference parameters require odd n".into()));
        }
        ((n - 1) / 2, (n - 1) / 2)
    } else {
        let root = sqrt_disc
            .as_rat()
            .ok_or_else(|| fail("irrational eigenvalues with distinct multiplicities".into()))?
            .clone();
        let ratio = rat(balance) / root;
        if !ratio.is_integer() {
            return Err(fail("non-integral multiplicities".into()));
        }
        let m1 = (rat(n as i64 - 1) - &ratio) * &half;
        let m2 = (rat(n as i64 - 1) + &ratio) * &half;
        if !m1.is_integer() || !m2.is_integer() || m1.is_negative() || m2.is_negative() {
            return Err(fail("non-integral multiplicities".into()));
        }
        (
            usize::try_from(m1.to_integer()).unwrap(),
            usize::try_from(m2.to_integer()).unwrap(),
        )
    };
    let spectrum = SrgSpectrum { degree: d, p1, p2, m1, m2 };
    // trace and trace-of-square identities, exact
    let trace = QuadraticNumber::from_int(d as i64)
        .add(&spectrum.p1.scale(&rat(m1 as i64)))
        .add(&spectrum.p2.scale(&rat(m2 as i64)));
    assert_eq!(trace, QuadraticNumber::from_int(0), "srg trace identity");
    let square_trace = QuadraticNumber::from_int((d * d) as i64)
        .add(&spectrum.p1.mul(&spectrum.p1).scale(&rat(m1 as i64)))
        .add(&spectrum.p2.mul(&spectrum.p2).scale(&rat(m2 as i64)));
    assert_eq!(
        square_trace,
        QuadraticNumber::from_int((n * d) as i64),
        "srg trace-of-square identity"
    );
    assert_eq!(1 + m1 + m2, n, "srg multiplicity identity");
    Ok(spectrum)
}

/// Exact characteristic polynomial of an SRG spectrum.
pub fn srg_char_poly(spectrum: &SrgSpectrum) -> CharPoly {
    let linear = |r: &Rat| CharPoly::from_monic(vec![Rat::one(), -r.clone()]).unwrap();
    let mut poly = linear(&rat(spectrum.degree as i64));
    match (spectrum.p1.as_rat(), spectrum.p2.as_rat()) {
        (Some(r1), Some(r2)) => {
            for _ in 0..spectrum.m1 {
                poly = poly.multiply(&linear(r1));
            }
            for _ in 0..spectrum.m2 {
                poly = poly.multiply(&linear(r2));
            }
        }
        _ => {
            // conjugate surds share one multiplicity; multiply the rational
            // quadratic (x - p1)(x - p2)
            assert_eq!(spectrum.m1, spectrum.m2);
            let sum = spectrum.p1.add(&spectrum.p2).as_rat().unwrap().clone();
            let prod = spectrum.p1.mul(&spectrum.p2).as_rat().unwrap().clone();
            let quad = CharPoly::from_monic(vec![Rat::one(), -sum, prod]).unwrap();
            for _ in 0..spectrum.m1 {
                poly = poly.multiply(&quad);
            }
        }
    }
    poly
}

/// Recover strongly regular structure from an adjacency fingerprint.
///
/// Succeeds exactly when the fingerprint certifies a connected regular graph
/// (degree of multiplicity one) with three distinct eigenvalues whose
/// recovered lambda and mu are nonnegative integers satisfying the
/// feasibility identity; the full spectrum is then cross-checked against the
/// closed form.
pub fn detect_srg(p_a: &CharPoly, n: usize) -> Option<(SrgParams, SrgSpectrum)> {
    let d = is_regular_from_spectrum(p_a, n)?;
    if p_a.root_multiplicity(&rat(d as i64)) != 1 {
        return None;
    }
    if p_a.distinct_root_count() != 3 {
        return None;
    }
    // remaining distinct roots solve x^2 - sigma x + pi with rational
    // sigma, pi read off the square-free part
    let square_free = poly_div_exact(p_a.coeffs(), &poly_gcd(p_a.coeffs(), &p_a.derivative()));
    let (quad, rem) = synthetic_divide(&square_free, &rat(d as i64));
    if !rem.is_zero() || quad.len() != 3 {
        return None;
    }
    let sigma = -quad[1].clone();
    let pi = quad[2].clone();
    // lambda = d + sigma + pi, mu = d + pi
    let lambda = rat(d as i64) + &sigma + &pi;
    let mu = rat(d as i64) + &pi;
    if !lambda.is_integer() || !mu.is_integer() || lambda.is_negative() || mu.is_negative() {
        return None;
    }
    let params = SrgParams::new(
        n,
        d,
        usize::try_from(lambda.to_integer()).ok()?,
        usize::try_from(mu.to_integer()).ok()?,
    )
    .ok()?;
    let spectrum = srg_spectrum(&params).ok()?;
    if &srg_char_poly(&spectrum) != p_a {
        return None;
    }
    Some((params, spectrum))
}

/// Closed-form Lovasz theta of a connected strongly regular graph:
/// -n p2 / (d - p2) with p2 the least eigenvalue.
pub fn lovasz_theta_srg(params: &SrgParams) -> Result<QuadraticNumber> {
    params.check_feasible()?;
    if !params.is_connected() {
        return Err(Error::InfeasibleSrg {
            n: params.n,
            d: params.d,
            lambda: params.lambda,
            mu: params.mu,
            reason: "theta closed form requires a connected graph (mu > 0)".into(),
        });
    }
    let spectrum = srg_spectrum(params)?;
    let least = spectrum.p2;
    let numerator = least.scale(&rat(-(params.n as i64)));
    let denominator = QuadraticNumber::from_int(params.d as i64).sub(&least);
    Ok(numerator.div(&denominator))
}

/// Girth (by the three-case rule on lambda and mu) and diameter, always 2,
/// of a connected strongly regular graph.
pub fn srg_girth_diameter(params: &SrgParams) -> Result<(usize, usize)> {
    params.check_feasible()?;
    if !params.is_connected() {
        return Err(Error::InfeasibleSrg {
            n: params.n,
            d: params.d,
            lambda: params.lambda,
            mu: params.mu,
            reason: "girth rule requires a connected graph (mu > 0)".into(),
        });
    }
    let girth = if params.lambda > 0 {
        3
    } else if params.mu >= 2 {
        4
    } else {
        5
    };
    Ok((girth, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::spectra::{char_poly, MatrixKind};

    fn detect(spec: &FamilySpec) -> Option<(SrgParams, SrgSpectrum)> {
        let g = generate(spec).unwrap();
        detect_srg(&char_poly(&g, MatrixKind::A), g.vertex_count())
    }

    #[test]
    fn petersen_parameters() {
        let (params, spectrum) = detect(&FamilySpec::Petersen).unwrap();
        assert_eq!(params, SrgParams { n: 10, d: 3, lambda: 0, mu: 1 });
        assert_eq!(spectrum.p1, QuadraticNumber::from_int(1));
        assert_eq!(spectrum.p2, QuadraticNumber::from_int(-2));
        assert_eq!((spectrum.m1, spectrum.m2), (5, 4));
    }

    #[test]
    fn lattice_and_triangular_parameters() {
        let (params, _) = detect(&FamilySpec::Lattice(4)).unwrap();
        assert_eq!(params, SrgParams { n: 16, d: 6, lambda: 2, mu: 2 });
        let (params, _) = detect(&FamilySpec::Triangular(5)).unwrap();
        assert_eq!(params, SrgParams { n: 10, d: 6, lambda: 3, mu: 4 });
    }

    #[test]
    fn non_srg_rejected() {
        assert!(detect(&FamilySpec::Cycle(6)).is_none());
        assert!(detect(&FamilySpec::Star(5)).is_none());
        assert!(detect(&FamilySpec::Complete(5)).is_none()); // two distinct roots
        assert!(detect(&FamilySpec::Path(4)).is_none());
    }

    #[test]
    fn conference_branch_c5() {
        let (params, spectrum) = detect(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(params, SrgParams { n: 5, d: 2, lambda: 0, mu: 1 });
        assert_eq!(spectrum.p1.delta(), 5);
        assert_eq!((spectrum.m1, spectrum.m2), (2, 2));
    }

    #[test]
    fn chang_parameters_spectrum() {
        let spectrum = srg_spectrum(&SrgParams::new(28, 12, 6, 4).unwrap()).unwrap();
        assert_eq!(spectrum.p1, QuadraticNumber::from_int(4));
        assert_eq!(spectrum.p2, QuadraticNumber::from_int(-2));
        assert_eq!((spectrum.m1, spectrum.m2), (7, 20));
    }

    #[test]
    fn theta_values() {
        let theta = lovasz_theta_srg(&SrgParams::new(10, 3, 0, 1).unwrap()).unwrap();
        assert_eq!(theta, QuadraticNumber::from_int(4));
        let theta = lovasz_theta_srg(&SrgParams::new(5, 2, 0, 1).unwrap()).unwrap();
        assert_eq!(theta, QuadraticNumber::sqrt_of(5));
        let theta = lovasz_theta_srg(&SrgParams::new(16, 6, 2, 2).unwrap()).unwrap();
        assert_eq!(theta, QuadraticNumber::from_int(4));
    }

    #[test]
    fn girth_rule() {
        assert_eq!(srg_girth_diameter(&SrgParams::new(16, 6, 2, 2).unwrap()).unwrap(), (3, 2));
        assert_eq!(srg_girth_diameter(&SrgParams::new(10, 3, 0, 1).unwrap()).unwrap(), (5, 2));
        assert_eq!(srg_girth_diameter(&SrgParams::new(16, 5, 0, 2).unwrap()).unwrap(), (4, 2));
    }

    #[test]
    fn infeasible_rejected() {
        assert!(SrgParams::new(10, 3, 1, 1).is_err());
        // disconnected family mK_r has mu = 0
        let params = SrgParams::new(10, 4, 3, 0).unwrap();
        assert!(lovasz_theta_srg(&params).is_err());
        assert!(srg_girth_diameter(&params).is_err());
    }
}
