//! Degenerating families F_t and singular-fiber diagnostics.
//!
//! A family template is a polynomial in the ring variables whose
//! coefficients are polynomials in one deformation parameter t over Q.
//! Substituting a rational value for t gives a fiber over any coefficient
//! domain, and the fiber invariants below measure how the Jacobian ring
//! degenerates there:
//!
//! * [`total_tjurina`]: the stabilized Hilbert function value of the
//!   Jacobian quotient above the socle degree, which counts the total
//!   Tjurina number when the singular locus is finite;
//! * [`rank_drop_delta`]: the excess of a graded dimension over its
//!   smooth-fiber value, read off the complete-intersection series;
//! * [`family_scan`]: both of these plus Hodge-degree dimensions and the
//!   maximal-variation report, tabulated over a list of t values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::hodge::{weighted_socle, Hypersurface};
use crate::ivhs::VariationReport;
use crate::parse::{eval_ast, parse_ast};
use crate::quotient::{ci_hilbert_series, ArtinianOutcome, QuotientRing};
use crate::ring::{Polynomial, RingDescriptor};

/// Coefficients that are dense polynomials in the deformation parameter
/// t over Q: `elem[k]` is the coefficient of t^k, the vector carries no
/// trailing zeros, and the empty vector is zero. Only constants are
/// units, so templates support ring arithmetic but not elimination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParamDomain;

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl Domain for ParamDomain {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }

    fn one(&self) -> Self::Elem {
        vec![BigRational::one()]
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = vec![BigRational::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| -c).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in b.iter().enumerate() {
                out[i + j] += c * d;
            }
        }
        trim(out)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.len() == 1 && !a[0].is_zero() {
            Some(vec![a[0].recip()])
        } else {
            None
        }
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        if n == 0 {
            Vec::new()
        } else {
            vec![BigRational::from_integer(BigInt::from(n))]
        }
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let r = BigRational::new(num.clone(), den.clone());
        if r.is_zero() {
            Ok(Vec::new())
        } else {
            Ok(vec![r])
        }
    }

    fn display(&self, a: &Self::Elem) -> String {
        fn rat(c: &BigRational) -> String {
            if c.denom().is_one() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        }
        fn piece(c: &BigRational, k: usize) -> String {
            let power = if k == 1 { "t".into() } else { format!("t^{k}") };
            if k == 0 {
                rat(c)
            } else if c.is_one() {
                power
            } else if (-c).is_one() {
                format!("-{power}")
            } else {
                format!("{}*{}", rat(c), power)
            }
        }
        let nonzero: Vec<(usize, &BigRational)> = a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        match nonzero.len() {
            0 => "0".into(),
            1 => piece(nonzero[0].1, nonzero[0].0),
            // Multiple terms are parenthesized so the string composes
            // inside a polynomial display without sign ambiguity.
            _ => {
                let mut out = String::from("(");
                for (i, (k, c)) in nonzero.iter().enumerate() {
                    let p = piece(c, *k);
                    if i == 0 {
                        out.push_str(&p);
                    } else if let Some(rest) = p.strip_prefix('-') {
                        out.push('-');
                        out.push_str(rest);
                    } else {
                        out.push('+');
                        out.push_str(&p);
                    }
                }
                out.push(')');
                out
            }
        }
    }

    fn label(&self) -> String {
        "rationals[t]".into()
    }
}

/// A one-parameter family of (weighted) homogeneous forms.
///
/// The template is homogeneous in the ring variables for every t; the
/// parameter only moves coefficients, so every nonzero fiber has the
/// same degree.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyTemplate {
    poly: Polynomial<ParamDomain>,
    text: String,
}

impl FamilyTemplate {
    /// Parses a template such as `x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2`.
    /// The result must be nonzero and homogeneous in the x variables.
    pub fn parse(text: &str, ring: &RingDescriptor<ParamDomain>) -> Result<Self> {
        let ast = parse_ast(text)?;
        let t = ring.constant(vec![BigRational::zero(), BigRational::one()]);
        let poly = eval_ast(&ast, ring, Some(&t))?;
        if poly.is_zero() {
            return Err(Error::InvalidInput(
                "family template is identically zero".into(),
            ));
        }
        poly.homogeneous_degree()?;
        Ok(FamilyTemplate {
            poly,
            text: text.to_string(),
        })
    }

    /// Parses over the standard grading with the given variable count.
    pub fn parse_standard(text: &str, num_vars: usize) -> Result<Self> {
        let ring = RingDescriptor::standard(num_vars, ParamDomain)?;
        FamilyTemplate::parse(text, &ring)
    }

    /// The original input text.
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn template(&self) -> &Polynomial<ParamDomain> {
        &self.poly
    }

    pub fn ring(&self) -> &RingDescriptor<ParamDomain> {
        self.poly.ring()
    }

    /// Degree in the x variables, shared by every nonzero fiber.
    pub fn degree(&self) -> i64 {
        self.poly.homogeneous_degree().expect("checked at parse")
    }

    /// The fiber at t over the given domain. The result is zero exactly
    /// when every coefficient vanishes at t. Errors when a coefficient
    /// value does not embed in the domain (denominator divisible by the
    /// prime).
    pub fn substitute<D: Domain>(&self, domain: &D, t: &BigRational) -> Result<Polynomial<D>> {
        let src = self.poly.ring();
        let ring = RingDescriptor::new(src.num_vars(), src.weights().to_vec(), domain.clone())?;
        let mut out = ring.zero();
        for (m, coeff) in self.poly.terms() {
            // Horner evaluation of the coefficient polynomial at t.
            let mut value = BigRational::zero();
            for c in coeff.iter().rev() {
                value = value * t + c;
            }
            if value.is_zero() {
                continue;
            }
            out.add_term(m.clone(), domain.from_ratio(value.numer(), value.denom())?);
        }
        Ok(out)
    }
}

/// Outcome of the Tjurina stabilization scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TjurinaReport {
    /// The stabilized graded dimension: the total Tjurina number when
    /// the singular locus is finite (0 for a smooth fiber).
    pub total: usize,
    /// First degree k above the socle with dim_k = dim_{k+1}.
    pub stabilized_at: i64,
}

/// Socle degree of the Jacobian quotient from the ring shape alone:
/// the partial of a degree-d form by a weight-w variable has degree
/// d - w, and the socle sits at (sum of generator degrees) - (sum of
/// weights).
fn jacobian_socle(ring_weights: &[u32], d: i64) -> Result<i64> {
    let degrees: Vec<i64> = ring_weights.iter().map(|&w| d - w as i64).collect();
    weighted_socle(ring_weights, &degrees)
}

fn total_tjurina_in<D: Domain>(
    q: &QuotientRing<D>,
    sigma: i64,
    cap: i64,
) -> Result<TjurinaReport> {
    let mut k = (sigma + 1).max(0);
    let mut dim = q.graded_dim(k);
    while k < cap {
        let next = q.graded_dim(k + 1);
        if next == dim {
            return Ok(TjurinaReport {
                total: dim,
                stabilized_at: k,
            });
        }
        dim = next;
        k += 1;
    }
    Err(Error::NoStabilization { cap })
}

/// Total Tjurina number of a hypersurface fiber with at most isolated
/// singularities, computed as the stabilized Hilbert function of the
/// Jacobian quotient above the socle degree. The scan runs from
/// sigma + 1 to sigma + `extra` (default 20) and refuses with
/// [`Error::NoStabilization`] if no two consecutive dimensions agree;
/// that is the signature of a positive-dimensional singular locus.
pub fn total_tjurina<D: Domain>(f: &Polynomial<D>, extra: Option<i64>) -> Result<TjurinaReport> {
    let d = f.homogeneous_degree()?;
    let sigma = jacobian_socle(f.ring().weights(), d)?;
    let q = QuotientRing::jacobian(f)?;
    total_tjurina_in(&q, sigma, sigma + extra.unwrap_or(20).max(1))
}

/// The rank drop of one graded slice against the smooth reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub degree: i64,
    /// dim R(F)_degree for the given fiber.
    pub actual_dim: usize,
    /// The complete-intersection series coefficient: dim R(F)_degree
    /// for any smooth fiber of the same shape.
    pub smooth_dim: i64,
    /// actual - smooth; nonnegative, positive only at singular fibers.
    pub delta: i64,
    /// True when the degree lies below every Jacobian generator degree,
    /// where the two dimensions agree for trivial reasons.
    pub trivially_zero: bool,
}

fn delta_in<D: Domain>(
    q: &QuotientRing<D>,
    series: &[i64],
    min_gen_degree: i64,
    degree: i64,
) -> DeltaReport {
    let actual_dim = q.graded_dim(degree);
    let smooth_dim = if degree >= 0 {
        series.get(degree as usize).copied().unwrap_or(0)
    } else {
        0
    };
    DeltaReport {
        degree,
        actual_dim,
        smooth_dim,
        delta: actual_dim as i64 - smooth_dim,
        trivially_zero: degree < min_gen_degree,
    }
}

/// Series and minimum generator degree of the smooth reference for a
/// degree-d hypersurface in the given ring shape.
fn smooth_reference(weights: &[u32], d: i64) -> Result<(Vec<i64>, i64)> {
    let degrees: Vec<i64> = weights.iter().map(|&w| d - w as i64).collect();
    let series = ci_hilbert_series(&degrees, weights)?;
    let min_gen = degrees.iter().copied().min().expect("ring has variables");
    Ok((series, min_gen))
}

/// Measures dim R(F)_degree against the smooth value of the same shape.
/// The smooth value comes from the complete-intersection series of the
/// generator degrees, which is the Hilbert function of every smooth
/// fiber; the difference is the rank drop concentrated at the singular
/// points. Degrees below every generator degree are flagged: the delta
/// there is zero no matter how singular the fiber is.
pub fn rank_drop_delta<D: Domain>(f: &Polynomial<D>, degree: i64) -> Result<DeltaReport> {
    let d = f.homogeneous_degree()?;
    let (series, min_gen) = smooth_reference(f.ring().weights(), d)?;
    let q = QuotientRing::jacobian(f)?;
    Ok(delta_in(&q, &series, min_gen, degree))
}

/// Options for [`family_scan`].
#[derive(Clone, Debug)]
pub struct FamilyScanConfig {
    /// Random Kodaira-Spencer classes per smooth fiber.
    pub samples: u32,
    /// Base seed; fiber i uses seed + i, so rows are independent of the
    /// order they are computed in.
    pub seed: u64,
    /// Degree for the rank-drop column; defaults to the middle degree
    /// floor(sigma / 2).
    pub delta_degree: Option<i64>,
    /// Headroom above the socle for the Tjurina scan.
    pub tjurina_extra: i64,
    /// Worker threads; 0 or 1 scans serially.
    pub threads: usize,
}

impl Default for FamilyScanConfig {
    fn default() -> Self {
        FamilyScanConfig {
            samples: 8,
            seed: 0,
            delta_degree: None,
            tjurina_extra: 20,
            threads: 1,
        }
    }
}

/// One fiber's row in a family scan.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberRow<D: Domain> {
    pub t: BigRational,
    /// True when every coefficient vanishes at t; all other fields are
    /// inert in that case.
    pub zero_fiber: bool,
    /// The Artinian smoothness certificate at the socle degree.
    pub smooth: bool,
    /// dim R_{a_0}, the geometric-genus slice.
    pub dim_first_hodge: usize,
    /// dim R at floor(sigma / 2).
    pub dim_middle: usize,
    /// dim R at the socle degree sigma.
    pub dim_socle: usize,
    /// dim R at sigma + 1; positive exactly when the fiber is singular.
    pub dim_above_socle: usize,
    /// Total Tjurina number; None when the scan hit its cap.
    pub tjurina: Option<usize>,
    /// Maximal-variation report; None for singular or zero fibers.
    pub variation: Option<VariationReport<D>>,
    /// Rank drop at the configured delta degree.
    pub delta: Option<DeltaReport>,
    pub warnings: Vec<String>,
}

/// A family scan: one row per t value plus family-level extremes.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyScan<D: Domain> {
    pub rows: Vec<FiberRow<D>>,
    /// Socle degree shared by every fiber.
    pub sigma: i64,
    /// Degree used for the delta column.
    pub delta_degree: i64,
    /// Minimum best variation rank over smooth fibers; the family-level
    /// lower bound for the variation rank at a general fiber.
    pub min_smooth_variation: Option<usize>,
}

fn scan_fiber<D: Domain>(
    template: &FamilyTemplate,
    domain: &D,
    t: &BigRational,
    index: usize,
    n: u32,
    sigma: i64,
    series: &[i64],
    min_gen: i64,
    config: &FamilyScanConfig,
    delta_degree: i64,
) -> Result<FiberRow<D>> {
    let f = template.substitute(domain, t)?;
    if f.is_zero() {
        return Ok(FiberRow {
            t: t.clone(),
            zero_fiber: true,
            smooth: false,
            dim_first_hodge: 0,
            dim_middle: 0,
            dim_socle: 0,
            dim_above_socle: 0,
            tjurina: None,
            variation: None,
            delta: None,
            warnings: vec!["fiber is identically zero".into()],
        });
    }
    let d = template.degree();
    let q = QuotientRing::jacobian(&f)?;
    let mut warnings = Vec::new();
    let smooth = matches!(q.artinian_check(sigma), ArtinianOutcome::Artinian);
    let a0 = d - (n as i64 + 2);
    let dim_first_hodge = q.graded_dim(a0);
    let dim_middle = q.graded_dim(sigma / 2);
    let dim_socle = q.graded_dim(sigma);
    let dim_above_socle = q.graded_dim(sigma + 1);
    let tjurina = match total_tjurina_in(&q, sigma, sigma + config.tjurina_extra.max(1)) {
        Ok(report) => Some(report.total),
        Err(Error::NoStabilization { cap }) => {
            warnings.push(format!(
                "tjurina scan did not stabilize by degree {cap}: singular locus is not finite"
            ));
            None
        }
        Err(e) => return Err(e),
    };
    let delta = delta_in(&q, series, min_gen, delta_degree);
    if delta.trivially_zero {
        warnings.push(format!(
            "delta degree {delta_degree} lies below every generator degree; the drop is 0 by degree reasons"
        ));
    }
    let variation = if smooth {
        let h = Hypersurface::from_checked_parts(f, n, q);
        Some(h.max_yukawa_rank(config.samples, config.seed.wrapping_add(index as u64))?)
    } else {
        None
    };
    Ok(FiberRow {
        t: t.clone(),
        zero_fiber: false,
        smooth,
        dim_first_hodge,
        dim_middle,
        dim_socle,
        dim_above_socle,
        tjurina,
        variation,
        delta: Some(delta),
        warnings,
    })
}

/// Tabulates fiber invariants over a list of t values.
///
/// Requires a standard-graded template in n + 2 variables of degree at
/// least 2, because smooth fibers feed the hypersurface variation
/// machinery. Rows come back in input order whatever the thread count,
/// and fiber i draws its random classes from seed + i.
pub fn family_scan<D: Domain>(
    template: &FamilyTemplate,
    domain: &D,
    t_values: &[BigRational],
    config: &FamilyScanConfig,
) -> Result<FamilyScan<D>> {
    let ring = template.ring();
    if !ring.is_standard_graded() {
        return Err(Error::InvalidInput(
            "family scans need the standard grading".into(),
        ));
    }
    if ring.num_vars() < 3 {
        return Err(Error::InvalidInput(format!(
            "a family of n-folds needs at least 3 variables, ring has {}",
            ring.num_vars()
        )));
    }
    let n = ring.num_vars() as u32 - 2;
    let d = template.degree();
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "family degree must be at least 2, found {d}"
        )));
    }
    let sigma = jacobian_socle(ring.weights(), d)?;
    let (series, min_gen) = smooth_reference(ring.weights(), d)?;
    let delta_degree = config.delta_degree.unwrap_or(sigma / 2);

    let run = |(index, t): (usize, &BigRational)| {
        scan_fiber(
            template,
            domain,
            t,
            index,
            n,
            sigma,
            &series,
            min_gen,
            config,
            delta_degree,
        )
    };
    let rows: Vec<FiberRow<D>> = if config.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
        pool.install(|| {
            t_values
                .par_iter()
                .enumerate()
                .map(run)
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        t_values
            .iter()
            .enumerate()
            .map(run)
            .collect::<Result<Vec<_>>>()?
    };

    let min_smooth_variation = rows
        .iter()
        .filter_map(|r| r.variation.as_ref().map(|v| v.best_rank))
        .min();
    Ok(FamilyScan {
        rows,
        sigma,
        delta_degree,
        min_smooth_variation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{PrimeField, Rationals};
    use crate::ivhs::VariationVerdict;
    use crate::parse::{parse_polynomial, parse_rational};

    fn field() -> PrimeField {
        PrimeField::new(12289).unwrap()
    }

    fn rat(text: &str) -> BigRational {
        parse_rational(text).unwrap()
    }

    fn quartic_family() -> FamilyTemplate {
        FamilyTemplate::parse_standard("x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2", 4).unwrap()
    }

    #[test]
    fn param_domain_arithmetic() {
        let d = ParamDomain;
        let one_plus_t = vec![rat("1"), rat("1")];
        let one_minus_t = vec![rat("1"), rat("-1")];
        assert_eq!(
            d.mul(&one_plus_t, &one_minus_t),
            vec![rat("1"), rat("0"), rat("-1")]
        );
        assert_eq!(d.add(&one_plus_t, &one_minus_t), vec![rat("2")]);
        assert!(d.is_zero(&d.sub(&one_plus_t, &one_plus_t)));
        assert_eq!(d.inv(&vec![rat("2")]), Some(vec![rat("1/2")]));
        assert_eq!(d.inv(&vec![rat("0"), rat("1")]), None);
        assert_eq!(d.inv(&d.zero()), None);
    }

    #[test]
    fn param_domain_display() {
        let d = ParamDomain;
        assert_eq!(d.display(&d.zero()), "0");
        assert_eq!(d.display(&vec![rat("-3/2")]), "-3/2");
        assert_eq!(d.display(&vec![rat("0"), rat("1")]), "t");
        assert_eq!(d.display(&vec![rat("0"), rat("0"), rat("-1")]), "-t^2");
        assert_eq!(d.display(&vec![rat("0"), rat("2")]), "2*t");
        assert_eq!(
            d.display(&vec![rat("3"), rat("-2"), rat("1")]),
            "(t^2-2*t+3)"
        );
    }

    #[test]
    fn template_renders_with_parameter_coefficients() {
        let t = FamilyTemplate::parse_standard("x0^2+(1-t^2)*x1^2", 2).unwrap();
        assert_eq!(t.template().to_text(), "x0^2+(-t^2+1)*x1^2");
        assert_eq!(t.degree(), 2);
    }

    #[test]
    fn template_rejects_bad_input() {
        // Inhomogeneous in x.
        assert!(matches!(
            FamilyTemplate::parse_standard("x0^2+t*x1", 2),
            Err(Error::NonHomogeneous { .. })
        ));
        // Identically zero once t collects.
        assert!(matches!(
            FamilyTemplate::parse_standard("t*x0-t*x0", 2),
            Err(Error::InvalidInput(_))
        ));
        // The parameter is rejected outside templates.
        let ring = RingDescriptor::standard(2, Rationals).unwrap();
        assert!(matches!(
            parse_polynomial("t*x0^2", &ring),
            Err(Error::Parse { pos: 0, .. })
        ));
    }

    #[test]
    fn substitution_recovers_fibers() {
        let family = quartic_family();
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let fermat = parse_polynomial("x0^4+x1^4+x2^4+x3^4", &ring).unwrap();
        assert_eq!(family.substitute(&field(), &rat("0")).unwrap(), fermat);
        let at_two = family.substitute(&field(), &rat("2")).unwrap();
        let expected = parse_polynomial("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", &ring).unwrap();
        assert_eq!(at_two, expected);

        // Rational t over Q keeps exact coefficients.
        let qring = RingDescriptor::standard(4, Rationals).unwrap();
        let at_half = family.substitute(&Rationals, &rat("1/2")).unwrap();
        let expected =
            parse_polynomial("x0^4+x1^4+x2^4+x3^4-1/2*x0^2*x1^2", &qring).unwrap();
        assert_eq!(at_half, expected);
    }

    #[test]
    fn substitution_rejects_bad_denominators() {
        let family = quartic_family();
        let t = BigRational::new(BigInt::from(1), BigInt::from(12289));
        assert!(matches!(
            family.substitute(&field(), &t),
            Err(Error::BadDenominator { .. })
        ));
    }

    #[test]
    fn zero_fiber_detection() {
        let family = FamilyTemplate::parse_standard("t*x0^2+t*x1^2", 2).unwrap();
        assert!(family.substitute(&field(), &rat("0")).unwrap().is_zero());
        assert!(!family.substitute(&field(), &rat("1")).unwrap().is_zero());
    }

    #[test]
    fn tjurina_vanishes_on_smooth_fibers() {
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let f = parse_polynomial("x0^4+x1^4+x2^4+x3^4", &ring).unwrap();
        let report = total_tjurina(&f, None).unwrap();
        assert_eq!(report.total, 0);
        assert_eq!(report.stabilized_at, 9);
    }

    #[test]
    fn tjurina_of_the_degenerate_quartic_fiber() {
        // F_2 is singular exactly at (1:1:0:0) and (1:-1:0:0). Neither
        // is a node: locally F_2 = v^2 + z^4 + w^4 (the Hessian has rank
        // 1), so each point contributes tau = (2-1)(4-1)(4-1) = 9.
        // Cross-check: J = ((x0^2-x1^2)(x0,x1), x2^3, x3^3), so R is
        // k[x0,x1]/((x0^2-x1^2)(x0,x1)) tensor k[x2,x3]/(x2^3,x3^3)
        // with stabilized dimension 2 * 9 = 18.
        let f = quartic_family().substitute(&field(), &rat("2")).unwrap();
        let report = total_tjurina(&f, None).unwrap();
        assert_eq!(report.total, 18);
    }

    #[test]
    fn tjurina_of_a_cone_counts_the_apex() {
        // The cone in P^3 over a plane Fermat cubic: one isolated
        // singular point whose Tjurina algebra is the cubic's Milnor
        // algebra, of length 2^3 = 8.
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let f = parse_polynomial("x0^3+x1^3+x2^3", &ring).unwrap();
        let report = total_tjurina(&f, None).unwrap();
        assert_eq!(report.total, 8);
    }

    #[test]
    fn tjurina_refuses_nonisolated_loci() {
        // x0^4 + x1^4 in four variables is singular along a line; the
        // quotient keeps two free variables and the scan cannot settle.
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let f = parse_polynomial("x0^4+x1^4", &ring).unwrap();
        assert!(matches!(
            total_tjurina(&f, None),
            Err(Error::NoStabilization { .. })
        ));
    }

    #[test]
    fn delta_detects_the_rank_drop() {
        let family = quartic_family();
        let singular = family.substitute(&field(), &rat("2")).unwrap();
        let report = rank_drop_delta(&singular, 4).unwrap();
        assert_eq!(report.actual_dim, 20);
        assert_eq!(report.smooth_dim, 19);
        assert_eq!(report.delta, 1);
        assert!(!report.trivially_zero);

        // Below the generator degree the drop is forced to zero.
        let report = rank_drop_delta(&singular, 2).unwrap();
        assert_eq!(report.delta, 0);
        assert!(report.trivially_zero);

        let smooth = family.substitute(&field(), &rat("0")).unwrap();
        let report = rank_drop_delta(&smooth, 4).unwrap();
        assert_eq!(report.delta, 0);
    }

    #[test]
    fn family_scan_tabulates_the_quartic_family() {
        let family = quartic_family();
        let ts: Vec<BigRational> = ["0", "1", "2", "-2"].iter().map(|s| rat(s)).collect();
        let scan = family_scan(&family, &field(), &ts, &FamilyScanConfig::default()).unwrap();
        assert_eq!(scan.sigma, 8);
        assert_eq!(scan.delta_degree, 4);
        assert_eq!(scan.rows.len(), 4);

        let smooth_flags: Vec<bool> = scan.rows.iter().map(|r| r.smooth).collect();
        assert_eq!(smooth_flags, vec![true, true, false, false]);

        for row in &scan.rows[..2] {
            assert_eq!(row.tjurina, Some(0));
            assert_eq!(row.delta.as_ref().unwrap().delta, 0);
            assert_eq!(row.dim_above_socle, 0);
            assert_eq!(row.dim_socle, 1);
            let v = row.variation.as_ref().unwrap();
            assert_eq!(v.best_rank, 1);
            assert_eq!(v.verdict, VariationVerdict::IMaximal);
        }
        for row in &scan.rows[2..] {
            assert_eq!(row.tjurina, Some(18));
            assert_eq!(row.delta.as_ref().unwrap().delta, 1);
            assert!(row.dim_above_socle > 0);
            assert!(row.variation.is_none());
        }
        assert_eq!(scan.min_smooth_variation, Some(1));
    }

    #[test]
    fn family_scan_is_deterministic_and_thread_invariant() {
        let family = quartic_family();
        let ts: Vec<BigRational> = ["0", "2", "5"].iter().map(|s| rat(s)).collect();
        let config = FamilyScanConfig {
            samples: 3,
            seed: 42,
            ..FamilyScanConfig::default()
        };
        let serial = family_scan(&family, &field(), &ts, &config).unwrap();
        let again = family_scan(&family, &field(), &ts, &config).unwrap();
        assert_eq!(serial, again);
        let parallel = family_scan(
            &family,
            &field(),
            &ts,
            &FamilyScanConfig {
                threads: 3,
                ..config
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn family_scan_flags_zero_fibers() {
        let family = FamilyTemplate::parse_standard("t*(x0^3+x1^3+x2^3)", 3).unwrap();
        let ts = vec![rat("0"), rat("1")];
        let scan = family_scan(&family, &field(), &ts, &FamilyScanConfig::default()).unwrap();
        assert!(scan.rows[0].zero_fiber);
        assert!(!scan.rows[0].smooth);
        assert!(!scan.rows[0].warnings.is_empty());
        assert!(scan.rows[1].smooth);
    }

    #[test]
    fn family_scan_rejects_weighted_templates() {
        let ring = RingDescriptor::new(3, vec![1, 1, 2], ParamDomain).unwrap();
        let family = FamilyTemplate::parse("x0^4+x1^4+x2^2-t*x0^2*x2", &ring).unwrap();
        assert!(matches!(
            family_scan(&family, &field(), &[rat("0")], &FamilyScanConfig::default()),
            Err(Error::InvalidInput(_))
        ));
    }
}
