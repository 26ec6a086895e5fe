//! Weak and Strong Lefschetz testing for Artinian graded quotients.
//!
//! The checks are witness-based: a fixed linear form ell is tested by
//! computing exact ranks of multiplication maps.
//!
//! * Weak (WLP): *ell : R_k -> R_{k+1} has maximal rank for every k.
//! * Strong (SLP): the reflections *ell^{sigma-2k} : R_k -> R_{sigma-k}
//!   are isomorphisms for every k <= sigma/2, and the k -> k+1 maps have
//!   maximal rank.
//!
//! The reflection form of SLP makes the Hilbert function itself a
//! two-sided gate: the reflections can all be isomorphisms for some ell
//! only if the Hilbert function is symmetric and unimodal. A failed gate
//! is therefore a definitive negative for every ell at once, which is
//! the only definitive negative a finite witness search can produce.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::quotient::QuotientRing;
use crate::ring::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LefschetzMode {
    Weak,
    Strong,
}

impl LefschetzMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            LefschetzMode::Weak => "WLP",
            LefschetzMode::Strong => "SLP",
        }
    }
}

/// Shape verdict on a Hilbert function, as an SLP obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HfVerdict {
    NoObstruction,
    /// dims[k] != dims[sigma - k] at the reported k.
    NotSymmetric { k: i64 },
    /// Some slice strictly inside (k, sigma - k) is smaller than
    /// dims[k], so the reflection at the reported k cannot be an
    /// isomorphism.
    NotUnimodal { k: i64 },
}

/// A Hilbert function together with its shape verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfReport {
    pub dims: Vec<usize>,
    pub top_degree: Option<i64>,
    pub verdict: HfVerdict,
}

/// Shape check on a raw dimension sequence (index = degree). Trailing
/// zeros are ignored.
pub fn hf_obstruction_of(dims: &[usize]) -> HfVerdict {
    let mut len = dims.len();
    while len > 0 && dims[len - 1] == 0 {
        len -= 1;
    }
    let dims = &dims[..len];
    if dims.is_empty() {
        return HfVerdict::NoObstruction;
    }
    let sigma = dims.len() - 1;
    for k in 0..=sigma / 2 {
        if dims[k] != dims[sigma - k] {
            return HfVerdict::NotSymmetric { k: k as i64 };
        }
    }
    // With symmetry in hand, unimodality is equivalent to the first
    // half being non-decreasing. A fall at k blocks the reflection at
    // k - 1: the map R_{k-1} -> R_{sigma-k+1} between equal dimensions
    // factors through the smaller R_k.
    for k in 1..=sigma / 2 {
        if dims[k] < dims[k - 1] {
            return HfVerdict::NotUnimodal { k: k as i64 - 1 };
        }
    }
    HfVerdict::NoObstruction
}

/// Computes the Hilbert function of the quotient and applies the shape
/// check. Errors with [`Error::NotArtinian`] if the scan hits its cap.
pub fn hf_obstruction<D: Domain>(q: &QuotientRing<D>, cap: Option<i64>) -> Result<HfReport> {
    let (dims, top_degree) = q.hilbert_function(cap)?;
    let verdict = hf_obstruction_of(&dims);
    Ok(HfReport {
        dims,
        top_degree,
        verdict,
    })
}

/// One rank computation in a Lefschetz certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCheck {
    /// Source degree k.
    pub degree: i64,
    /// Power m of the linear form.
    pub power: i64,
    pub rank: usize,
    /// Required rank: the larger of the two dimensions for reflections
    /// (an isomorphism must attain both), min of the two otherwise.
    pub expected: usize,
    /// True when the check demands an isomorphism.
    pub requires_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LefschetzVerdict {
    Witness,
    /// First failing (degree, power) pair.
    Fails { degree: i64, power: i64 },
}

/// Certificate for one linear form: per-(k, m) rank table plus verdict.
/// On failure the table covers the checks performed up to and including
/// the failing one.
#[derive(Clone, Debug, PartialEq)]
pub struct LefschetzReport<D: Domain> {
    pub mode: LefschetzMode,
    pub ell: Polynomial<D>,
    pub hilbert_function: Vec<usize>,
    pub top_degree: Option<i64>,
    pub checks: Vec<RankCheck>,
    pub verdict: LefschetzVerdict,
}

impl<D: Domain> LefschetzReport<D> {
    pub fn passed(&self) -> bool {
        self.verdict == LefschetzVerdict::Witness
    }

    fn checks_passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.rank == c.expected)
            .count()
    }
}

/// Outcome of a witness search.
#[derive(Clone, Debug, PartialEq)]
pub enum WitnessSearch<D: Domain> {
    /// Some candidate passed every check.
    Witness(LefschetzReport<D>),
    /// No candidate passed; the best-scoring certificate is retained.
    /// This is evidence, not a proof of failure.
    NoneFound {
        candidates_tested: usize,
        best: Option<LefschetzReport<D>>,
    },
    /// SLP only: the Hilbert function itself rules out every witness.
    Obstructed(HfReport),
}

/// Tests a fixed linear form. `ell` must be homogeneous of weighted
/// degree 1 and nonzero. `cap` bounds the top-degree scan.
pub fn lefschetz_check<D: Domain>(
    q: &QuotientRing<D>,
    ell: &Polynomial<D>,
    mode: LefschetzMode,
    cap: Option<i64>,
) -> Result<LefschetzReport<D>> {
    if ell.ring() != q.ring() {
        return Err(Error::RingMismatch);
    }
    if ell.homogeneous_degree()? != 1 {
        return Err(Error::InvalidInput(
            "a Lefschetz element must have weighted degree 1".into(),
        ));
    }
    let (dims, top_degree) = q.hilbert_function(cap)?;
    let mut report = LefschetzReport {
        mode,
        ell: ell.clone(),
        hilbert_function: dims,
        top_degree,
        checks: Vec::new(),
        verdict: LefschetzVerdict::Witness,
    };
    let sigma = match top_degree {
        Some(s) => s,
        None => return Ok(report), // zero algebra: vacuously a witness
    };

    // The shape gate is only meaningful over the standard grading:
    // weighted Hilbert functions have legitimate gaps that the sequence
    // check would misread as troughs.
    if mode == LefschetzMode::Strong && q.ring().is_standard_graded() {
        match hf_obstruction_of(&report.hilbert_function) {
            HfVerdict::NoObstruction => {}
            HfVerdict::NotSymmetric { k } | HfVerdict::NotUnimodal { k } => {
                // No ell can make the reflection at k an isomorphism.
                report.verdict = LefschetzVerdict::Fails {
                    degree: k,
                    power: sigma - 2 * k,
                };
                return Ok(report);
            }
        }
    }

    let mut schedule: Vec<(i64, i64, bool)> = Vec::new();
    if mode == LefschetzMode::Strong {
        for k in 0..=sigma / 2 {
            schedule.push((k, sigma - 2 * k, true));
        }
    }
    for k in 0..sigma {
        schedule.push((k, 1, false));
    }

    let domain = q.ring().domain().clone();
    let mut powers: Vec<Polynomial<D>> = vec![q.ring().constant(domain.one())];
    for (k, m, requires_iso) in schedule {
        while (powers.len() as i64) <= m {
            let next = powers.last().unwrap().mul(ell).expect("same ring");
            powers.push(next);
        }
        let h_k = report.hilbert_function[k as usize];
        let h_target = *report.hilbert_function.get((k + m) as usize).unwrap_or(&0);
        let expected = if requires_iso {
            h_k.max(h_target)
        } else {
            h_k.min(h_target)
        };
        let map = q.multiplication_matrix_with_degree(&powers[m as usize], m, k)?;
        let rank = map.rank(&domain);
        report.checks.push(RankCheck {
            degree: k,
            power: m,
            rank,
            expected,
            requires_iso,
        });
        if rank < expected {
            report.verdict = LefschetzVerdict::Fails { degree: k, power: m };
            return Ok(report);
        }
    }
    Ok(report)
}

/// Searches for a Lefschetz witness among coordinate forms, the all-ones
/// form, and seeded random linear forms, in that fixed order. The same
/// (seed, samples) always replays the same candidate sequence.
///
/// In Strong mode the Hilbert function gate runs first; a failed gate
/// returns [`WitnessSearch::Obstructed`], the definitive negative. In
/// Weak mode there is no gate: algebras with asymmetric Hilbert
/// functions can still have WLP witnesses.
pub fn find_lefschetz_witness<D: Domain>(
    q: &QuotientRing<D>,
    mode: LefschetzMode,
    samples: u32,
    seed: u64,
    cap: Option<i64>,
) -> Result<WitnessSearch<D>> {
    let hf = hf_obstruction(q, cap)?;
    if mode == LefschetzMode::Strong
        && q.ring().is_standard_graded()
        && hf.verdict != HfVerdict::NoObstruction
    {
        return Ok(WitnessSearch::Obstructed(hf));
    }
    let ring = q.ring();
    let domain = ring.domain().clone();
    let weight_one_vars: Vec<usize> = (0..ring.num_vars())
        .filter(|&j| ring.weights()[j] == 1)
        .collect();

    let mut candidates: Vec<Polynomial<D>> = Vec::new();
    for &j in &weight_one_vars {
        candidates.push(ring.variable(j));
    }
    if weight_one_vars.len() > 1 {
        let mut all_ones = ring.zero();
        for &j in &weight_one_vars {
            all_ones = all_ones.add(&ring.variable(j)).expect("same ring");
        }
        candidates.push(all_ones);
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut ell = ring.zero();
        for &j in &weight_one_vars {
            let c = domain.from_i64(rng.random_range(-50..=50));
            ell = ell.add(&ring.variable(j).scale(&c)).expect("same ring");
        }
        if !ell.is_zero() {
            candidates.push(ell);
        }
    }

    let mut best: Option<LefschetzReport<D>> = None;
    let mut tested = 0usize;
    for ell in candidates {
        tested += 1;
        let report = lefschetz_check(q, &ell, mode, cap)?;
        if report.passed() {
            return Ok(WitnessSearch::Witness(report));
        }
        let better = match &best {
            None => true,
            Some(b) => report.checks_passed() > b.checks_passed(),
        };
        if better {
            best = Some(report);
        }
    }
    Ok(WitnessSearch::NoneFound {
        candidates_tested: tested,
        best,
    })
}
