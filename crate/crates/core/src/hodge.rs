//! The Hodge-theoretic dictionary for smooth hypersurfaces.
//!
//! For a smooth degree-d hypersurface X in P^{n+1} with Jacobian ring
//! R = S/J(F), the primitive Hodge numbers are graded dimensions:
//!
//! ```text
//! h^{n-p,p}_prim(X) = dim R_{(p+1)d - (n+2)},   0 <= p <= n,
//! ```
//!
//! and R is Artinian Gorenstein with socle degree sigma = (n+2)(d-2).
//! Smoothness of X is equivalent to the quotient vanishing above sigma,
//! which is what [`Hypersurface::new`] checks before exposing any of the
//! dictionary.

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::quotient::{ArtinianOutcome, QuotientRing};
use crate::ring::Polynomial;

/// Socle degree sigma = (n+2)(d-2) of the Jacobian ring of a smooth
/// degree-d hypersurface in P^{n+1}. Negative for d < 2.
pub fn socle_degree(n: u32, d: i64) -> i64 {
    (n as i64 + 2) * (d - 2)
}

/// The graded degree a_p = (p+1)d - (n+2) carrying h^{n-p,p}_prim.
/// May be negative, in which case the Hodge number is zero.
pub fn hodge_degree(n: u32, d: i64, p: u32) -> Result<i64> {
    if p > n {
        return Err(Error::InvalidInput(format!(
            "Hodge index p={p} exceeds the dimension n={n}"
        )));
    }
    Ok((p as i64 + 1) * d - (n as i64 + 2))
}

/// Socle degree of the Milnor-style bigraded piece for a weighted
/// complete intersection: sum of equation degrees minus sum of weights.
pub fn weighted_socle(weights: &[u32], degrees: &[i64]) -> Result<i64> {
    if weights.is_empty() || degrees.is_empty() {
        return Err(Error::InvalidInput(
            "weighted socle needs at least one weight and one degree".into(),
        ));
    }
    if degrees.iter().any(|&d| d < 1) || weights.contains(&0) {
        return Err(Error::InvalidInput(
            "weights and degrees must be positive".into(),
        ));
    }
    Ok(degrees.iter().sum::<i64>() - weights.iter().map(|&w| w as i64).sum::<i64>())
}

/// Coarse classification of a smooth complete intersection of
/// codimension c and multidegree (d_1, ..., d_c) in P^{n+c}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiClass {
    GeneralType,
    CalabiYau,
    FanoOrQuadric,
}

impl CiClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CiClass::GeneralType => "GeneralType",
            CiClass::CalabiYau => "CalabiYau",
            CiClass::FanoOrQuadric => "FanoOrQuadric",
        }
    }
}

/// Numerical classification data of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiProfile {
    pub n: u32,
    pub codimension: u32,
    pub degrees: Vec<i64>,
    /// kappa = sum d_i - (n + c + 1); the sign decides the class.
    pub kappa: i64,
    pub class: CiClass,
    /// True exactly for the quadric hypersurface case c = 1, d = 2.
    pub is_quadric: bool,
}

/// Classifies by kappa = sum(d_i) - (n + c + 1): positive is general
/// type, zero is Calabi-Yau, negative is Fano (with the quadric
/// hypersurface flagged separately).
pub fn classify_ci(n: u32, degrees: &[i64]) -> Result<CiProfile> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension n must be at least 1".into()));
    }
    if degrees.is_empty() {
        return Err(Error::InvalidInput("at least one degree is required".into()));
    }
    if degrees.iter().any(|&d| d < 2) {
        return Err(Error::InvalidInput(
            "complete intersection degrees must be at least 2".into(),
        ));
    }
    let c = degrees.len() as u32;
    let kappa = degrees.iter().sum::<i64>() - (n as i64 + c as i64 + 1);
    let class = match kappa.signum() {
        1 => CiClass::GeneralType,
        0 => CiClass::CalabiYau,
        _ => CiClass::FanoOrQuadric,
    };
    Ok(CiProfile {
        n,
        codimension: c,
        degrees: degrees.to_vec(),
        kappa,
        class,
        is_quadric: c == 1 && degrees[0] == 2,
    })
}

/// A smooth hypersurface with its Jacobian ring, the smoothness gate
/// already passed. Every Hodge-theoretic operation lives on this type so
/// the dictionary is never quoted for singular input.
#[derive(Debug)]
pub struct Hypersurface<D: Domain> {
    f: Polynomial<D>,
    n: u32,
    d: i64,
    sigma: i64,
    quotient: QuotientRing<D>,
}

impl<D: Domain> Hypersurface<D> {
    /// Validates the input and checks smoothness.
    ///
    /// Requirements: standard grading, exactly n+2 variables, F nonzero
    /// homogeneous of degree at least 2, and the Jacobian quotient
    /// Artinian at sigma (dimensions vanish at sigma+1 and sigma+2).
    /// The last check is the smoothness certificate; failing it returns
    /// [`Error::SingularInput`] with the offending dimensions.
    pub fn new(f: Polynomial<D>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dimension n must be at least 1".into()));
        }
        let ring = f.ring();
        if !ring.is_standard_graded() {
            return Err(Error::InvalidInput(
                "hypersurface operations need the standard grading".into(),
            ));
        }
        if ring.num_vars() != n as usize + 2 {
            return Err(Error::InvalidInput(format!(
                "a hypersurface in P^{} needs {} variables, ring has {}",
                n + 1,
                n + 2,
                ring.num_vars()
            )));
        }
        let d = f.homogeneous_degree()?;
        if d < 2 {
            return Err(Error::InvalidInput(format!(
                "hypersurface degree must be at least 2, found {d}"
            )));
        }
        let quotient = QuotientRing::jacobian(&f)?;
        let sigma = socle_degree(n, d);
        if let ArtinianOutcome::NotArtinian { dim1, dim2 } = quotient.artinian_check(sigma) {
            return Err(Error::SingularInput {
                deg1: sigma + 1,
                dim1,
                deg2: sigma + 2,
                dim2,
            });
        }
        Ok(Hypersurface {
            f,
            n,
            d,
            sigma,
            quotient,
        })
    }

    /// Assembles from parts a caller has already validated and gated.
    /// The quotient must be the Jacobian quotient of `f`, `f` must be a
    /// valid degree-d hypersurface input, and the Artinian smoothness
    /// check at `socle_degree(n, d)` must have passed.
    pub(crate) fn from_checked_parts(f: Polynomial<D>, n: u32, quotient: QuotientRing<D>) -> Self {
        let d = f.homogeneous_degree().expect("checked by caller");
        Hypersurface {
            f,
            n,
            d,
            sigma: socle_degree(n, d),
            quotient,
        }
    }

    pub fn polynomial(&self) -> &Polynomial<D> {
        &self.f
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn socle(&self) -> i64 {
        self.sigma
    }

    pub fn quotient(&self) -> &QuotientRing<D> {
        &self.quotient
    }

    /// The degrees a_0 < a_1 < ... < a_n carrying the Hodge pieces.
    pub fn hodge_degrees(&self) -> Vec<i64> {
        (0..=self.n)
            .map(|p| hodge_degree(self.n, self.d, p).expect("p <= n"))
            .collect()
    }

    /// Primitive Hodge numbers [h^{n,0}, h^{n-1,1}, ..., h^{0,n}].
    pub fn hodge_numbers(&self) -> Vec<usize> {
        self.hodge_degrees()
            .iter()
            .map(|&a| self.quotient.graded_dim(a))
            .collect()
    }
}

/// Primitive Hodge numbers of a smooth hypersurface, gate included.
pub fn primitive_hodge_numbers<D: Domain>(f: Polynomial<D>, n: u32) -> Result<Vec<usize>> {
    Ok(Hypersurface::new(f, n)?.hodge_numbers())
}

/// Graded dimensions at the Hodge degrees without the smoothness gate.
/// For singular input these are not Hodge numbers, only dimensions; the
/// caller is responsible for saying so.
pub fn hodge_slice_dims_unchecked<D: Domain>(f: &Polynomial<D>, n: u32) -> Result<Vec<usize>> {
    let d = f.homogeneous_degree()?;
    let q = QuotientRing::jacobian(f)?;
    (0..=n)
        .map(|p| hodge_degree(n, d, p).map(|a| q.graded_dim(a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::PrimeField;
    use crate::parse::parse_polynomial;
    use crate::ring::RingDescriptor;

    fn field() -> PrimeField {
        PrimeField::new(12289).unwrap()
    }

    fn hypersurface(text: &str, num_vars: usize, n: u32) -> Result<Hypersurface<PrimeField>> {
        let ring = RingDescriptor::standard(num_vars, field()).unwrap();
        Hypersurface::new(parse_polynomial(text, &ring).unwrap(), n)
    }

    #[test]
    fn socle_and_hodge_degrees() {
        assert_eq!(socle_degree(2, 4), 8);
        assert_eq!(socle_degree(3, 5), 15);
        assert_eq!(socle_degree(1, 3), 3);
        assert_eq!(socle_degree(1, 2), 0);
        assert_eq!(hodge_degree(2, 4, 0).unwrap(), 0);
        assert_eq!(hodge_degree(2, 4, 2).unwrap(), 8);
        // Cubic surface: a_0 = -1, so h^{2,0} = 0.
        assert_eq!(hodge_degree(2, 3, 0).unwrap(), -1);
        assert!(hodge_degree(2, 4, 3).is_err());
    }

    #[test]
    fn hodge_degrees_pair_to_the_socle() {
        // a_p + a_{n-p} = sigma for all p.
        for (n, d) in [(1u32, 3i64), (2, 4), (2, 5), (3, 5), (4, 6)] {
            let sigma = socle_degree(n, d);
            for p in 0..=n {
                let a = hodge_degree(n, d, p).unwrap();
                let b = hodge_degree(n, d, n - p).unwrap();
                assert_eq!(a + b, sigma, "n={n} d={d} p={p}");
            }
        }
    }

    #[test]
    fn quartic_k3_hodge_numbers() {
        let h = hypersurface("x0^4+x1^4+x2^4+x3^4", 4, 2).unwrap();
        assert_eq!(h.socle(), 8);
        assert_eq!(h.hodge_numbers(), vec![1, 19, 1]);
    }

    #[test]
    fn cubic_surface_hodge_numbers() {
        let h = hypersurface("x0^3+x1^3+x2^3+x3^3", 4, 2).unwrap();
        assert_eq!(h.hodge_numbers(), vec![0, 6, 0]);
    }

    #[test]
    fn singular_quartic_is_refused() {
        // F = x0^4 + x1^4 + x2^4 + x3^4 - 2 x0^2 x1^2 is singular at
        // (1:1:0:0) and (1:-1:0:0), tau = 9 at each, so the quotient
        // keeps dimension 18 above the socle degree 8.
        let err = hypersurface("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", 4, 2);
        match err {
            Err(Error::SingularInput {
                deg1, dim1, deg2, dim2,
            }) => {
                assert_eq!((deg1, deg2), (9, 10));
                assert_eq!((dim1, dim2), (18, 18));
            }
            other => panic!("expected SingularInput, got {other:?}"),
        }
    }

    #[test]
    fn unchecked_dims_work_on_singular_input() {
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let f = parse_polynomial("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", &ring).unwrap();
        let dims = hodge_slice_dims_unchecked(&f, 2).unwrap();
        assert_eq!(dims.len(), 3);
        assert_eq!(dims[0], 1);
    }

    #[test]
    fn input_validation() {
        // Wrong variable count for the claimed dimension.
        assert!(hypersurface("x0^3+x1^3+x2^3", 3, 2).is_err());
        // Degree too small.
        assert!(hypersurface("x0+x1+x2+x3", 4, 2).is_err());
        // Weighted ring rejected.
        let ring = RingDescriptor::new(4, vec![1, 1, 1, 2], field()).unwrap();
        let f = parse_polynomial("x0^4+x1^4+x2^4+x3^2", &ring).unwrap();
        assert!(Hypersurface::new(f, 2).is_err());
    }

    #[test]
    fn classification_by_kappa() {
        // Quintic threefold: kappa = 5 - 5 = 0.
        let quintic = classify_ci(3, &[5]).unwrap();
        assert_eq!(quintic.kappa, 0);
        assert_eq!(quintic.class, CiClass::CalabiYau);
        assert!(!quintic.is_quadric);

        // Sextic threefold: general type.
        let sextic = classify_ci(3, &[6]).unwrap();
        assert_eq!(sextic.class, CiClass::GeneralType);

        // Cubic surface: kappa = 3 - 4 < 0.
        let cubic = classify_ci(2, &[3]).unwrap();
        assert_eq!(cubic.class, CiClass::FanoOrQuadric);
        assert!(!cubic.is_quadric);

        // Quadric surface.
        let quadric = classify_ci(2, &[2]).unwrap();
        assert_eq!(quadric.class, CiClass::FanoOrQuadric);
        assert!(quadric.is_quadric);

        // (2,3) complete intersection surface in P^4 is a K3: kappa = 0.
        let ci = classify_ci(2, &[2, 3]).unwrap();
        assert_eq!(ci.codimension, 2);
        assert_eq!(ci.class, CiClass::CalabiYau);
        assert!(!ci.is_quadric);

        // The same degrees one dimension up are Fano: kappa = 5 - 6.
        let ci = classify_ci(3, &[2, 3]).unwrap();
        assert_eq!(ci.kappa, -1);
        assert_eq!(ci.class, CiClass::FanoOrQuadric);

        assert!(classify_ci(3, &[1]).is_err());
        assert!(classify_ci(0, &[3]).is_err());
        assert!(classify_ci(3, &[]).is_err());
    }

    #[test]
    fn weighted_socle_examples() {
        // Jacobian ideal of the quartic surface: generator degrees
        // d - w_j = (3,3,3,3), weights all 1; matches (n+2)(d-2) = 8.
        assert_eq!(weighted_socle(&[1, 1, 1, 1], &[3, 3, 3, 3]).unwrap(), 8);
        // Weighted example: weights (1,1,1,2,5), one equation of degree 10.
        assert_eq!(
            weighted_socle(&[1, 1, 1, 2, 5], &[9, 9, 9, 8, 5]).unwrap(),
            30
        );
        assert!(weighted_socle(&[], &[3]).is_err());
        assert!(weighted_socle(&[1], &[0]).is_err());
    }
}
