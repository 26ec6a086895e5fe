//! Infinitesimal variation of Hodge structure through the Jacobian ring.
//!
//! A Kodaira-Spencer class of a degree-d hypersurface is an element
//! xi in R_d. It acts on the Hodge slices by multiplication:
//!
//! ```text
//! *xi : R_{a_p} -> R_{a_{p+1}},      a_p = (p+1)d - (n+2),
//! ```
//!
//! and the n-fold composite *xi^n : R_{a_0} -> R_{a_n} is the n-fold
//! Yukawa pairing in coordinates. The two ways of computing it (expand
//! xi^n, or compose the n step matrices) agree because multiplication in
//! the quotient is functorial; both are exposed so tests can cross-check
//! them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::hodge::Hypersurface;
use crate::lefschetz::{find_lefschetz_witness, LefschetzMode, WitnessSearch};
use crate::linalg::Echelon;
use crate::quotient::GradedMap;
use crate::ring::Polynomial;

/// Which evaluation strategy produced a Yukawa map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YukawaPath {
    /// Expand xi^n in the polynomial ring, then one multiplication map.
    ExpandedPower,
    /// Compose the n step maps *xi : R_{a_p} -> R_{a_{p+1}}.
    ComposedSteps,
}

/// The n-fold Yukawa multiplication map for one Kodaira-Spencer class.
#[derive(Clone, Debug, PartialEq)]
pub struct YukawaEvaluation<D: Domain> {
    pub xi: Polynomial<D>,
    pub map: GradedMap<D>,
    pub rank: usize,
    pub path: YukawaPath,
}

/// Verdict for the maximal-variation question at one fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariationVerdict {
    /// Some xi achieves the theoretical maximum h^{n,0}.
    IMaximal,
    /// Sampling produced only a lower bound below the maximum.
    LowerBoundOnly,
    /// h^{n,0} = 0: every xi trivially achieves the maximum.
    Vacuous,
}

impl VariationVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            VariationVerdict::IMaximal => "IMaximal",
            VariationVerdict::LowerBoundOnly => "LowerBoundOnly",
            VariationVerdict::Vacuous => "Vacuous",
        }
    }
}

/// Result of maximizing the Yukawa rank over sampled classes.
#[derive(Clone, Debug, PartialEq)]
pub struct VariationReport<D: Domain> {
    /// Largest rank seen; a certified lower bound for d_M.
    pub best_rank: usize,
    /// h^{n,0} = dim R_{a_0}, the a-priori maximum.
    pub theoretical_max: usize,
    /// A class achieving `best_rank`, if any class was tested.
    pub witness: Option<Polynomial<D>>,
    pub classes_tested: usize,
    pub seed: u64,
    pub verdict: VariationVerdict,
}

/// Injectivity data for the period-map differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorelliReport {
    /// Rank of R_d -> direct sum of Hom(R_{a_p}, R_{a_{p+1}}).
    pub rank: usize,
    /// dim R_d, the source dimension.
    pub source_dim: usize,
    pub injective: bool,
}

/// Per-fiber outcome in a family sweep of variation ranks.
#[derive(Clone, Debug, PartialEq)]
pub enum FiberOutcome<D: Domain> {
    Smooth(VariationReport<D>),
    /// The fiber failed the smoothness gate (or another precondition).
    Rejected(Error),
}

/// Extremal variation data over a finite set of fibers.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyExtremes<D: Domain> {
    pub fibers: Vec<FiberOutcome<D>>,
    /// Minimum over smooth fibers of the best observed rank; None when
    /// no fiber is smooth.
    pub min_best_rank: Option<usize>,
    /// Maximum over smooth fibers of the best observed rank.
    pub max_best_rank: Option<usize>,
}

impl<D: Domain> Hypersurface<D> {
    /// Degrees (a_0, ..., a_n) as a vector, for indexing convenience.
    fn hodge_degree(&self, p: u32) -> i64 {
        (p as i64 + 1) * self.degree() - (self.dimension() as i64 + 2)
    }

    fn check_class(&self, xi: &Polynomial<D>) -> Result<()> {
        if xi.ring() != self.polynomial().ring() {
            return Err(Error::RingMismatch);
        }
        if !xi.is_zero() && xi.homogeneous_degree()? != self.degree() {
            return Err(Error::InvalidInput(format!(
                "a Kodaira-Spencer class must be homogeneous of degree {}",
                self.degree()
            )));
        }
        Ok(())
    }

    /// The step map *xi : R_{a_p} -> R_{a_{p+1}} for 0 <= p < n.
    /// Negative source degree gives the empty map of the right shape.
    pub fn step_map(&self, xi: &Polynomial<D>, p: u32) -> Result<GradedMap<D>> {
        if p >= self.dimension() {
            return Err(Error::InvalidInput(format!(
                "step index p={p} out of range: the flag has {} steps",
                self.dimension()
            )));
        }
        self.check_class(xi)?;
        self.quotient()
            .multiplication_matrix_with_degree(xi, self.degree(), self.hodge_degree(p))
    }

    /// The n-fold Yukawa map by the cheaper of the two strategies:
    /// expansion when xi^n stays small, composition otherwise.
    pub fn yukawa_map(&self, xi: &Polynomial<D>) -> Result<YukawaEvaluation<D>> {
        self.check_class(xi)?;
        let n = self.dimension();
        match xi.pow_with_term_cap(n, 100_000) {
            Some(power) => self.yukawa_from_power(xi, power),
            None => self.yukawa_map_via(xi, YukawaPath::ComposedSteps),
        }
    }

    /// The n-fold Yukawa map by an explicit strategy.
    pub fn yukawa_map_via(&self, xi: &Polynomial<D>, path: YukawaPath) -> Result<YukawaEvaluation<D>> {
        self.check_class(xi)?;
        match path {
            YukawaPath::ExpandedPower => {
                let power = xi.pow(self.dimension());
                self.yukawa_from_power(xi, power)
            }
            YukawaPath::ComposedSteps => {
                let domain = self.polynomial().ring().domain().clone();
                let mut acc = self.step_map(xi, 0)?;
                for p in 1..self.dimension() {
                    acc = self.step_map(xi, p)?.compose(&domain, &acc)?;
                }
                let rank = acc.rank(&domain);
                Ok(YukawaEvaluation {
                    xi: xi.clone(),
                    map: acc,
                    rank,
                    path: YukawaPath::ComposedSteps,
                })
            }
        }
    }

    fn yukawa_from_power(
        &self,
        xi: &Polynomial<D>,
        power: Polynomial<D>,
    ) -> Result<YukawaEvaluation<D>> {
        let n = self.dimension();
        let domain = self.polynomial().ring().domain().clone();
        let map = self.quotient().multiplication_matrix_with_degree(
            &power,
            self.degree() * n as i64,
            self.hodge_degree(0),
        )?;
        let rank = map.rank(&domain);
        Ok(YukawaEvaluation {
            xi: xi.clone(),
            map,
            rank,
            path: YukawaPath::ExpandedPower,
        })
    }

    /// Maximizes the Yukawa rank over a deterministic candidate list:
    /// ell^d for each Strong Lefschetz witness found with the same
    /// budget, then coordinate powers x_j^d, then `samples` random
    /// classes. Stops early once the theoretical maximum h^{n,0} is
    /// reached. The result is always a certified lower bound for d_M.
    pub fn max_yukawa_rank(&self, samples: u32, seed: u64) -> Result<VariationReport<D>> {
        let theoretical_max = self.quotient().graded_dim(self.hodge_degree(0));
        if theoretical_max == 0 {
            return Ok(VariationReport {
                best_rank: 0,
                theoretical_max,
                witness: None,
                classes_tested: 0,
                seed,
                verdict: VariationVerdict::Vacuous,
            });
        }
        let ring = self.polynomial().ring().clone();
        let domain = ring.domain().clone();
        let d = self.degree();

        let mut candidates: Vec<Polynomial<D>> = Vec::new();
        if let WitnessSearch::Witness(report) = find_lefschetz_witness(
            self.quotient(),
            LefschetzMode::Strong,
            samples,
            seed,
            Some(self.socle() + 2),
        )? {
            candidates.push(report.ell.pow(d as u32));
        }
        for j in 0..ring.num_vars() {
            candidates.push(ring.variable(j).pow(d as u32));
        }
        let basis = self.quotient().standard_monomials(d);
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let mut xi = ring.zero();
            for m in &basis {
                let c = domain.from_i64(rng.random_range(-50..=50));
                xi.add_term(m.clone(), c);
            }
            if !xi.is_zero() {
                candidates.push(xi);
            }
        }

        let mut best_rank = 0usize;
        let mut witness: Option<Polynomial<D>> = None;
        let mut tested = 0usize;
        for xi in candidates {
            tested += 1;
            let eval = self.yukawa_map(&xi)?;
            if eval.rank > best_rank || witness.is_none() {
                best_rank = eval.rank;
                witness = Some(xi);
            }
            if best_rank == theoretical_max {
                break;
            }
        }
        let verdict = if best_rank == theoretical_max {
            VariationVerdict::IMaximal
        } else {
            VariationVerdict::LowerBoundOnly
        };
        Ok(VariationReport {
            best_rank,
            theoretical_max,
            witness,
            classes_tested: tested,
            seed,
            verdict,
        })
    }

    /// Rank of the stacked multiplication map
    /// R_d -> Hom(R_{a_0}, R_{a_1}) + ... + Hom(R_{a_{n-1}}, R_{a_n}),
    /// whose injectivity is the infinitesimal Torelli property.
    pub fn torelli_rank(&self) -> Result<TorelliReport> {
        let domain = self.polynomial().ring().domain().clone();
        let d = self.degree();
        let basis = self.quotient().standard_monomials(d);
        let source_dim = basis.len();
        // Column length: sum over p of dim R_{a_p} * dim R_{a_{p+1}}.
        let mut col_len = 0usize;
        for p in 0..self.dimension() {
            let s = self.quotient().graded_dim(self.hodge_degree(p));
            let t = self.quotient().graded_dim(self.hodge_degree(p + 1));
            col_len += s * t;
        }
        let mut echelon = Echelon::new(domain.clone(), col_len);
        let mut rank = 0usize;
        for b in &basis {
            let xi = self.polynomial().ring().monomial(b.clone());
            let mut column: Vec<(u32, D::Elem)> = Vec::new();
            let mut offset = 0usize;
            for p in 0..self.dimension() {
                let map = self.step_map(&xi, p)?;
                for row in &map.entries {
                    for (j, e) in row.iter().enumerate() {
                        if !domain.is_zero(e) {
                            column.push(((offset + j) as u32, e.clone()));
                        }
                    }
                    offset += map.source_dim();
                }
            }
            if echelon.insert(column) {
                rank += 1;
            }
        }
        Ok(TorelliReport {
            rank,
            source_dim,
            injective: rank == source_dim,
        })
    }
}

/// Evaluates the variation report on every fiber and records the
/// extremes over the smooth ones. Fiber i uses seed + i so rows are
/// independent and reproducible in any order.
pub fn family_extremes<D: Domain>(
    fibers: &[Polynomial<D>],
    n: u32,
    samples: u32,
    seed: u64,
) -> FamilyExtremes<D> {
    let mut outcomes = Vec::with_capacity(fibers.len());
    for (i, f) in fibers.iter().enumerate() {
        let fiber_seed = seed.wrapping_add(i as u64);
        let outcome = match Hypersurface::new(f.clone(), n) {
            Ok(h) => match h.max_yukawa_rank(samples, fiber_seed) {
                Ok(report) => FiberOutcome::Smooth(report),
                Err(e) => FiberOutcome::Rejected(e),
            },
            Err(e) => FiberOutcome::Rejected(e),
        };
        outcomes.push(outcome);
    }
    let ranks: Vec<usize> = outcomes
        .iter()
        .filter_map(|o| match o {
            FiberOutcome::Smooth(r) => Some(r.best_rank),
            FiberOutcome::Rejected(_) => None,
        })
        .collect();
    FamilyExtremes {
        min_best_rank: ranks.iter().copied().min(),
        max_best_rank: ranks.iter().copied().max(),
        fibers: outcomes,
    }
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

    fn surface(text: &str) -> Hypersurface<PrimeField> {
        let ring = RingDescriptor::standard(4, field()).unwrap();
        Hypersurface::new(parse_polynomial(text, &ring).unwrap(), 2).unwrap()
    }

    fn quartic() -> Hypersurface<PrimeField> {
        surface("x0^4+x1^4+x2^4+x3^4")
    }

    #[test]
    fn step_map_shapes_for_the_quartic_surface() {
        let h = quartic();
        let ring = h.polynomial().ring().clone();
        let xi = parse_polynomial("(x0+x1+x2+x3)^4", &ring).unwrap();
        let m0 = h.step_map(&xi, 0).unwrap();
        assert_eq!((m0.source_dim(), m0.target_dim()), (1, 19));
        assert_eq!(m0.rank(&field()), 1);
        let m1 = h.step_map(&xi, 1).unwrap();
        assert_eq!((m1.source_dim(), m1.target_dim()), (19, 1));
        assert!(h.step_map(&xi, 2).is_err());
    }

    #[test]
    fn cubic_surface_step_map_is_empty_from_negative_degree() {
        let h = surface("x0^3+x1^3+x2^3+x3^3");
        let xi = h.polynomial().clone();
        let m0 = h.step_map(&xi, 0).unwrap();
        assert_eq!((m0.source_dim(), m0.target_dim()), (0, 6));
        assert_eq!(m0.rank(&field()), 0);
    }

    #[test]
    fn yukawa_paths_agree_on_the_quartic() {
        let h = quartic();
        let ring = h.polynomial().ring().clone();
        for text in ["(x0+x1+x2+x3)^4", "x0^4", "x0^2*x1^2 - 3*x2^4"] {
            let xi = parse_polynomial(text, &ring).unwrap();
            let a = h.yukawa_map_via(&xi, YukawaPath::ExpandedPower).unwrap();
            let b = h.yukawa_map_via(&xi, YukawaPath::ComposedSteps).unwrap();
            assert_eq!(a.map.entries, b.map.entries, "xi = {text}");
            assert_eq!(a.rank, b.rank);
        }
    }

    #[test]
    fn yukawa_socle_value_is_the_multinomial() {
        // The 2-fold Yukawa map of (x0+..+x3)^4 on the quartic sends the
        // generator of R_0 to 8!/(2!^4) = 2520 times the socle monomial.
        let h = quartic();
        let ring = h.polynomial().ring().clone();
        let xi = parse_polynomial("(x0+x1+x2+x3)^4", &ring).unwrap();
        let eval = h.yukawa_map(&xi).unwrap();
        assert_eq!(eval.rank, 1);
        assert_eq!(eval.map.entries.len(), 1);
        assert_eq!(field().lift(&eval.map.entries[0][0]), 2520);
    }

    #[test]
    fn zero_class_gives_zero_map() {
        let h = quartic();
        let zero = h.polynomial().ring().zero();
        let eval = h.yukawa_map(&zero).unwrap();
        assert_eq!(eval.rank, 0);
        assert_eq!(eval.map.source_dim(), 1);
        assert_eq!(eval.map.target_dim(), 1);
    }

    #[test]
    fn yukawa_rank_scales_invariantly() {
        let h = quartic();
        let ring = h.polynomial().ring().clone();
        let xi = parse_polynomial("x0^4+x1^3*x2", &ring).unwrap();
        let scaled = xi.scale(&field().from_i64(7));
        assert_eq!(
            h.yukawa_map(&xi).unwrap().rank,
            h.yukawa_map(&scaled).unwrap().rank
        );
    }

    #[test]
    fn quartic_variation_is_maximal_with_rank_one() {
        let h = quartic();
        let report = h.max_yukawa_rank(4, 3).unwrap();
        assert_eq!(report.theoretical_max, 1);
        assert_eq!(report.best_rank, 1);
        assert_eq!(report.verdict, VariationVerdict::IMaximal);
        assert!(report.witness.is_some());
    }

    #[test]
    fn cubic_surface_variation_is_vacuous() {
        let h = surface("x0^3+x1^3+x2^3+x3^3");
        let report = h.max_yukawa_rank(4, 3).unwrap();
        assert_eq!(report.theoretical_max, 0);
        assert_eq!(report.verdict, VariationVerdict::Vacuous);
        assert_eq!(report.classes_tested, 0);
    }

    #[test]
    fn torelli_examples() {
        // Quartic surface: injective with rank 19.
        let report = quartic().torelli_rank().unwrap();
        assert_eq!(report.rank, 19);
        assert_eq!(report.source_dim, 19);
        assert!(report.injective);

        // Cubic surface: both Hodge blocks are empty, rank 0 < 4.
        let report = surface("x0^3+x1^3+x2^3+x3^3").torelli_rank().unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(report.source_dim, 4);
        assert!(!report.injective);

        // Plane cubic curve: rank 1 on a 1-dimensional source.
        let ring = RingDescriptor::standard(3, field()).unwrap();
        let cubic = parse_polynomial("x0^3+x1^3+x2^3", &ring).unwrap();
        let h = Hypersurface::new(cubic, 1).unwrap();
        let report = h.torelli_rank().unwrap();
        assert_eq!(report.rank, 1);
        assert_eq!(report.source_dim, 1);
        assert!(report.injective);
    }

    #[test]
    fn family_extremes_skips_singular_fibers() {
        let ring = RingDescriptor::standard(4, field()).unwrap();
        let fibers: Vec<_> = [
            "x0^4+x1^4+x2^4+x3^4",
            "x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2",
            "x0^4+x1^4+x2^4+x3^4-x0^2*x1^2",
        ]
        .iter()
        .map(|t| parse_polynomial(t, &ring).unwrap())
        .collect();
        let extremes = family_extremes(&fibers, 2, 4, 11);
        assert_eq!(extremes.fibers.len(), 3);
        assert!(matches!(extremes.fibers[0], FiberOutcome::Smooth(_)));
        assert!(matches!(
            extremes.fibers[1],
            FiberOutcome::Rejected(Error::SingularInput { .. })
        ));
        assert!(matches!(extremes.fibers[2], FiberOutcome::Smooth(_)));
        assert_eq!(extremes.min_best_rank, Some(1));
        assert_eq!(extremes.max_best_rank, Some(1));
    }
}
