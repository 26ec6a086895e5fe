//! Python bindings for the jacring engine.
//!
//! The module exposes the prime-field backend: every object computes
//! over one fixed word-size prime (default `DEFAULT_PRIME`), so graded
//! dimensions are upper-bounded by the rational ones and agree for all
//! but finitely many primes. Exact rational and multi-prime agreement
//! runs stay in the Rust API and the CLI. Methods return plain tuples,
//! lists, and strings; the module needs nothing on the Python side.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use jacring as engine;
use jacring::{
    infer_num_vars, Error, FamilyScanConfig, FamilyTemplate, Hypersurface, LefschetzMode,
    Polynomial, PrimeField, QuotientRing, RingDescriptor, WitnessSearch, DEFAULT_PRIME,
};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(prime: Option<u64>) -> PyResult<PrimeField> {
    match prime {
        Some(p) => PrimeField::new(p).map_err(err),
        None => Ok(PrimeField::default_field()),
    }
}

/// Number of variables: explicit wins, else the highest index used.
fn resolved_vars(texts: &[&str], explicit: Option<usize>) -> usize {
    explicit.unwrap_or_else(|| {
        texts
            .iter()
            .map(|t| infer_num_vars(t))
            .max()
            .unwrap_or(0)
            .max(1)
    })
}

fn build_ring(
    domain: PrimeField,
    n: usize,
    weights: &Option<Vec<u32>>,
) -> PyResult<RingDescriptor<PrimeField>> {
    match weights {
        Some(w) => RingDescriptor::new(n, w.clone(), domain),
        None => RingDescriptor::standard(n, domain),
    }
    .map_err(err)
}

fn parse_nonzero(text: &str, ring: &RingDescriptor<PrimeField>) -> PyResult<Polynomial<PrimeField>> {
    let f = engine::parse_polynomial(text, ring).map_err(err)?;
    if f.is_zero() {
        return Err(err(Error::ZeroPolynomial));
    }
    Ok(f)
}

fn mode_from(name: &str) -> PyResult<LefschetzMode> {
    match name.to_ascii_lowercase().as_str() {
        "strong" | "slp" => Ok(LefschetzMode::Strong),
        "weak" | "wlp" => Ok(LefschetzMode::Weak),
        other => Err(PyValueError::new_err(format!(
            "unknown Lefschetz mode {other:?}; use \"strong\" or \"weak\""
        ))),
    }
}

/// ("witness", ell) on success, ("none_found", None) when sampling was
/// inconclusive, ("obstructed", None) when the Hilbert function already
/// rules the property out.
fn witness_summary(search: WitnessSearch<PrimeField>) -> (String, Option<String>) {
    match search {
        WitnessSearch::Witness(report) => ("witness".into(), Some(report.ell.to_text())),
        WitnessSearch::NoneFound { .. } => ("none_found".into(), None),
        WitnessSearch::Obstructed(_) => ("obstructed".into(), None),
    }
}

fn search_witness(
    quotient: &QuotientRing<PrimeField>,
    mode: &str,
    samples: u32,
    seed: u64,
) -> PyResult<(String, Option<String>)> {
    let search = engine::find_lefschetz_witness(quotient, mode_from(mode)?, samples, seed, None)
        .map_err(err)?;
    Ok(witness_summary(search))
}

fn hilbert_or_truncated(
    quotient: &QuotientRing<PrimeField>,
    cap: Option<i64>,
) -> PyResult<(Vec<usize>, Option<i64>)> {
    match cap {
        None => quotient.hilbert_function(None).map_err(err),
        Some(c) => Ok((
            (0..=c.max(0)).map(|k| quotient.graded_dim(k)).collect(),
            None,
        )),
    }
}

fn exponent_rows(quotient: &QuotientRing<PrimeField>, degree: i64) -> Vec<Vec<u32>> {
    quotient
        .standard_monomials(degree)
        .iter()
        .map(|m| m.exponents().to_vec())
        .collect()
}

/// Jacobian ring R(F) = S/J_F of a nonzero homogeneous polynomial.
#[pyclass]
struct JacobianRing {
    f: Polynomial<PrimeField>,
    quotient: QuotientRing<PrimeField>,
}

impl JacobianRing {
    fn hypersurface(&self, dim: u32) -> PyResult<Hypersurface<PrimeField>> {
        Hypersurface::new(self.f.clone(), dim).map_err(err)
    }
}

#[pymethods]
impl JacobianRing {
    #[new]
    #[pyo3(signature = (poly, vars=None, weights=None, prime=None))]
    fn new(
        poly: &str,
        vars: Option<usize>,
        weights: Option<Vec<u32>>,
        prime: Option<u64>,
    ) -> PyResult<Self> {
        let n = resolved_vars(&[poly], vars);
        let ring = build_ring(field(prime)?, n, &weights)?;
        let f = parse_nonzero(poly, &ring)?;
        let quotient = QuotientRing::jacobian(&f).map_err(err)?;
        Ok(Self { f, quotient })
    }

    /// dim R(F)_k.
    fn graded_dim(&self, degree: i64) -> usize {
        self.quotient.graded_dim(degree)
    }

    /// (dims 0..=top, top). Raises when the quotient never vanishes;
    /// pass `cap` to truncate instead (second entry is then None).
    #[pyo3(signature = (cap=None))]
    fn hilbert_function(&self, cap: Option<i64>) -> PyResult<(Vec<usize>, Option<i64>)> {
        hilbert_or_truncated(&self.quotient, cap)
    }

    /// Exponent vectors of the standard monomial basis in one degree.
    fn standard_monomials(&self, degree: i64) -> Vec<Vec<u32>> {
        exponent_rows(&self.quotient, degree)
    }

    /// True when the quotient vanishes in degrees sigma+1 and sigma+2.
    fn is_artinian(&self, sigma: i64) -> bool {
        matches!(
            self.quotient.artinian_check(sigma),
            engine::ArtinianOutcome::Artinian
        )
    }

    /// Hodge numbers h^{n-p,p}(X_F), p = 0..=n, for F cutting a smooth
    /// hypersurface of dimension `dim`. Raises on singular input.
    fn hodge_numbers(&self, dim: u32) -> PyResult<Vec<usize>> {
        Ok(self.hypersurface(dim)?.hodge_numbers())
    }

    /// Search for a Lefschetz witness; returns (outcome, linear_form).
    #[pyo3(signature = (mode="strong", samples=8, seed=0))]
    fn lefschetz_witness(
        &self,
        mode: &str,
        samples: u32,
        seed: u64,
    ) -> PyResult<(String, Option<String>)> {
        search_witness(&self.quotient, mode, samples, seed)
    }

    /// Largest sampled n-fold Yukawa rank: (best_rank, theoretical_max,
    /// verdict). Verdict "IMaximal" certifies d_M = h^{n,0}.
    #[pyo3(signature = (dim, samples=8, seed=0))]
    fn yukawa_max_rank(&self, dim: u32, samples: u32, seed: u64) -> PyResult<(usize, usize, String)> {
        let report = self.hypersurface(dim)?.max_yukawa_rank(samples, seed).map_err(err)?;
        Ok((
            report.best_rank,
            report.theoretical_max,
            report.verdict.as_str().to_string(),
        ))
    }

    /// Rank of the infinitesimal-period map on R_d: (rank, source_dim,
    /// injective).
    fn torelli_rank(&self, dim: u32) -> PyResult<(usize, usize, bool)> {
        let report = self.hypersurface(dim)?.torelli_rank().map_err(err)?;
        Ok((report.rank, report.source_dim, report.injective))
    }

    /// Sum of local Tjurina numbers: (total, stabilized_at). Raises
    /// when the dimensions never stabilize (non-isolated locus).
    #[pyo3(signature = (extra=None))]
    fn total_tjurina(&self, extra: Option<i64>) -> PyResult<(usize, i64)> {
        let report = engine::total_tjurina(&self.f, extra).map_err(err)?;
        Ok((report.total, report.stabilized_at))
    }

    /// Rank drop of one graded slice against the smooth reference:
    /// (delta, actual_dim, smooth_dim, trivially_zero).
    fn rank_drop_delta(&self, degree: i64) -> PyResult<(i64, usize, i64, bool)> {
        let report = engine::rank_drop_delta(&self.f, degree).map_err(err)?;
        Ok((
            report.delta,
            report.actual_dim,
            report.smooth_dim,
            report.trivially_zero,
        ))
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.f.ring().num_vars()
    }

    #[getter]
    fn degree(&self) -> PyResult<i64> {
        self.f.homogeneous_degree().map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "JacobianRing({:?}, vars={}, prime={})",
            self.f.to_text(),
            self.f.ring().num_vars(),
            self.f.ring().domain().modulus(),
        )
    }
}

/// Graded quotient S/I by an explicit list of homogeneous generators.
#[pyclass]
struct IdealQuotient {
    quotient: QuotientRing<PrimeField>,
}

#[pymethods]
impl IdealQuotient {
    #[new]
    #[pyo3(signature = (generators, vars=None, weights=None, prime=None))]
    fn new(
        generators: Vec<String>,
        vars: Option<usize>,
        weights: Option<Vec<u32>>,
        prime: Option<u64>,
    ) -> PyResult<Self> {
        if generators.is_empty() {
            return Err(PyValueError::new_err("at least one generator is required"));
        }
        let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
        let n = resolved_vars(&refs, vars);
        let ring = build_ring(field(prime)?, n, &weights)?;
        let gens = generators
            .iter()
            .map(|g| engine::parse_polynomial(g, &ring))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let quotient = QuotientRing::new(ring, gens).map_err(err)?;
        Ok(Self { quotient })
    }

    /// dim (S/I)_k.
    fn graded_dim(&self, degree: i64) -> usize {
        self.quotient.graded_dim(degree)
    }

    /// (dims 0..=top, top); see JacobianRing.hilbert_function.
    #[pyo3(signature = (cap=None))]
    fn hilbert_function(&self, cap: Option<i64>) -> PyResult<(Vec<usize>, Option<i64>)> {
        hilbert_or_truncated(&self.quotient, cap)
    }

    /// Exponent vectors of the standard monomial basis in one degree.
    fn standard_monomials(&self, degree: i64) -> Vec<Vec<u32>> {
        exponent_rows(&self.quotient, degree)
    }

    /// True when the quotient vanishes in degrees sigma+1 and sigma+2.
    fn is_artinian(&self, sigma: i64) -> bool {
        matches!(
            self.quotient.artinian_check(sigma),
            engine::ArtinianOutcome::Artinian
        )
    }

    /// Search for a Lefschetz witness; returns (outcome, linear_form).
    #[pyo3(signature = (mode="strong", samples=8, seed=0))]
    fn lefschetz_witness(
        &self,
        mode: &str,
        samples: u32,
        seed: u64,
    ) -> PyResult<(String, Option<String>)> {
        search_witness(&self.quotient, mode, samples, seed)
    }

    #[getter]
    fn generator_degrees(&self) -> Vec<i64> {
        self.quotient.generator_degrees().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "IdealQuotient({} generators, vars={})",
            self.quotient.generators().len(),
            self.quotient.ring().num_vars(),
        )
    }
}

/// Numerical type of the complete intersection: (kappa, class,
/// is_quadric) where class is "GeneralType", "CalabiYau", or
/// "FanoOrQuadric".
#[pyfunction]
fn classify_ci(dim: u32, degrees: Vec<i64>) -> PyResult<(i64, String, bool)> {
    let profile = engine::classify_ci(dim, &degrees).map_err(err)?;
    Ok((
        profile.kappa,
        profile.class.as_str().to_string(),
        profile.is_quadric,
    ))
}

/// Hilbert function of an Artinian complete intersection with the
/// given generator degrees; weights default to all 1.
#[pyfunction]
#[pyo3(signature = (degrees, weights=None))]
fn ci_hilbert_series(degrees: Vec<i64>, weights: Option<Vec<u32>>) -> PyResult<Vec<i64>> {
    let w = weights.unwrap_or_else(|| vec![1; degrees.len()]);
    engine::ci_hilbert_series(&degrees, &w).map_err(err)
}

/// Socle degree sum(d_i - w_i) - sum(w_j) of a weighted complete
/// intersection quotient.
#[pyfunction]
fn weighted_socle(weights: Vec<u32>, degrees: Vec<i64>) -> PyResult<i64> {
    engine::weighted_socle(&weights, &degrees).map_err(err)
}

/// Scan a pencil F_t over rational parameter values. Rows are
/// (t, zero_fiber, smooth, dim_a0, dim_mid, dim_sigma, dim_sigma_plus1,
/// tjurina, yukawa_rank, delta); the last three are None where they do
/// not apply (smooth fiber, or singular fiber for yukawa_rank).
#[pyfunction]
#[pyo3(signature = (family, t_values, vars=None, samples=2, seed=0, delta_degree=None, threads=1, prime=None))]
#[allow(clippy::too_many_arguments)]
fn family_scan(
    family: &str,
    t_values: Vec<String>,
    vars: Option<usize>,
    samples: u32,
    seed: u64,
    delta_degree: Option<i64>,
    threads: usize,
    prime: Option<u64>,
) -> PyResult<Vec<FiberTuple>> {
    let n = resolved_vars(&[family], vars);
    let template = FamilyTemplate::parse_standard(family, n).map_err(err)?;
    let ts = t_values
        .iter()
        .map(|s| engine::parse_rational(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let config = FamilyScanConfig {
        samples,
        seed,
        delta_degree,
        tjurina_extra: 20,
        threads,
    };
    let scan = engine::family_scan(&template, &field(prime)?, &ts, &config).map_err(err)?;
    Ok(scan
        .rows
        .iter()
        .map(|row| {
            (
                row.t.to_string(),
                row.zero_fiber,
                row.smooth,
                row.dim_first_hodge,
                row.dim_middle,
                row.dim_socle,
                row.dim_above_socle,
                row.tjurina,
                row.variation.as_ref().map(|v| v.best_rank),
                row.delta.as_ref().map(|d| d.delta),
            )
        })
        .collect())
}

type FiberTuple = (
    String,
    bool,
    bool,
    usize,
    usize,
    usize,
    usize,
    Option<usize>,
    Option<usize>,
    Option<i64>,
);

#[pymodule]
fn jacring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("DEFAULT_PRIME", DEFAULT_PRIME)?;
    m.add_class::<JacobianRing>()?;
    m.add_class::<IdealQuotient>()?;
    m.add_function(wrap_pyfunction!(classify_ci, m)?)?;
    m.add_function(wrap_pyfunction!(ci_hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_socle, m)?)?;
    m.add_function(wrap_pyfunction!(family_scan, m)?)?;
    Ok(())
}
