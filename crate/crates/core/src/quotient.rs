//! Graded quotients S/I by an ideal with homogeneous generators, computed
//! degree by degree.
//!
//! A degree slice materializes the image of the ideal inside S_k as a
//! sparse echelon: rows are m * g for each generator g and each monomial
//! m of complementary degree. The non-pivot columns are the standard
//! monomials; they form a basis of (S/I)_k and every normal form is
//! expressed in it. Slices are cached, so repeated queries at one degree
//! cost one construction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::ring::{Polynomial, RingDescriptor};

/// One graded piece of the quotient, with its reduction data.
#[derive(Debug)]
pub struct DegreeSlice<D: Domain> {
    pub degree: i64,
    /// Monomial basis of S_k in descending lex order (column order).
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    echelon: Echelon<D>,
    /// Columns that are not pivots, ascending; their monomials are the
    /// standard monomials and form a basis of the quotient slice.
    pub standard_columns: Vec<usize>,
}

impl<D: Domain> DegreeSlice<D> {
    pub fn dim(&self) -> usize {
        self.standard_columns.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.standard_columns
            .iter()
            .map(|&c| self.monomials[c].clone())
            .collect()
    }

    pub fn column_of(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Reduces a homogeneous polynomial of this degree to standard-basis
    /// coordinates.
    fn coordinates(&self, f: &Polynomial<D>, domain: &D) -> Vec<D::Elem> {
        let mut dense = vec![domain.zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            let col = self.index[m] as usize;
            dense[col] = c.clone();
        }
        self.echelon.reduce_dense(&mut dense);
        self.standard_columns
            .iter()
            .map(|&c| dense[c].clone())
            .collect()
    }
}

/// The graded algebra S/I for homogeneous generators of I.
#[derive(Debug)]
pub struct QuotientRing<D: Domain> {
    ring: RingDescriptor<D>,
    generators: Vec<Polynomial<D>>,
    gen_degrees: Vec<i64>,
    slices: Mutex<HashMap<i64, Arc<DegreeSlice<D>>>>,
}

/// Outcome of checking that the quotient vanishes above its socle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArtinianOutcome {
    Artinian,
    /// Dimensions found at the two degrees just above the expected top.
    NotArtinian { dim1: usize, dim2: usize },
}

impl<D: Domain> QuotientRing<D> {
    /// Builds S/(g_1, ..., g_r). Generators must be homogeneous; zero
    /// generators are dropped. A degree-0 generator is a unit, making the
    /// quotient the zero ring, and is rejected as input.
    pub fn new(ring: RingDescriptor<D>, generators: Vec<Polynomial<D>>) -> Result<Self> {
        let mut kept = Vec::new();
        let mut degrees = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            let d = g.homogeneous_degree()?;
            if d == 0 {
                return Err(Error::InvalidInput(
                    "ideal generator of degree 0 makes the quotient zero".into(),
                ));
            }
            kept.push(g);
            degrees.push(d);
        }
        Ok(QuotientRing {
            ring,
            generators: kept,
            gen_degrees: degrees,
            slices: Mutex::new(HashMap::new()),
        })
    }

    /// The Jacobian ring S/J(F): the quotient by all partial derivatives.
    pub fn jacobian(f: &Polynomial<D>) -> Result<Self> {
        let gens = crate::ring::jacobian_generators(std::slice::from_ref(f))?;
        QuotientRing::new(f.ring().clone(), gens)
    }

    pub fn ring(&self) -> &RingDescriptor<D> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<D>] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    /// Sum of generator degrees; basis of the default degree cap.
    pub fn degree_budget(&self) -> i64 {
        self.gen_degrees.iter().sum()
    }

    /// Default cap for open-ended degree scans.
    pub fn default_degree_cap(&self) -> i64 {
        (4 * self.degree_budget()).max(4)
    }

    /// The cached degree-k slice, building it on first use.
    pub fn slice(&self, degree: i64) -> Arc<DegreeSlice<D>> {
        if let Some(s) = self.slices.lock().unwrap().get(&degree) {
            return Arc::clone(s);
        }
        let built = Arc::new(self.build_slice(degree));
        let mut cache = self.slices.lock().unwrap();
        Arc::clone(cache.entry(degree).or_insert(built))
    }

    fn build_slice(&self, degree: i64) -> DegreeSlice<D> {
        let monomials = self.ring.slice_monomials(degree);
        let index: HashMap<Monomial, u32> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let mut echelon = Echelon::new(self.ring.domain().clone(), monomials.len());
        for (g, &gdeg) in self.generators.iter().zip(&self.gen_degrees) {
            for m in self.ring.slice_monomials(degree - gdeg) {
                let shifted = g.mul_monomial(&m);
                let mut row: Vec<(u32, D::Elem)> = shifted
                    .terms()
                    .map(|(mono, c)| (index[mono], c.clone()))
                    .collect();
                row.sort_unstable_by_key(|(c, _)| *c);
                echelon.insert(row);
            }
        }
        let standard_columns = echelon.free_columns();
        DegreeSlice {
            degree,
            monomials,
            index,
            echelon,
            standard_columns,
        }
    }

    /// dim (S/I)_k; zero for negative k.
    pub fn graded_dim(&self, degree: i64) -> usize {
        if degree < 0 {
            return 0;
        }
        self.slice(degree).dim()
    }

    /// Standard monomial basis of the degree-k slice, descending lex.
    pub fn standard_monomials(&self, degree: i64) -> Vec<Monomial> {
        if degree < 0 {
            return Vec::new();
        }
        self.slice(degree).standard_monomials()
    }

    /// Coordinates of a nonzero homogeneous f in the standard basis of
    /// its degree. The zero vector means f lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial<D>) -> Result<Vec<D::Elem>> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let degree = f.homogeneous_degree()?;
        Ok(self.slice(degree).coordinates(f, self.ring.domain()))
    }

    /// The multiplication map  *g : (S/I)_k -> (S/I)_{k + deg g}  in the
    /// standard bases. For a zero multiplier use
    /// [`QuotientRing::multiplication_matrix_with_degree`].
    pub fn multiplication_matrix(&self, g: &Polynomial<D>, degree: i64) -> Result<GradedMap<D>> {
        let gdeg = g.homogeneous_degree()?;
        self.multiplication_matrix_with_degree(g, gdeg, degree)
    }

    /// Multiplication matrix with the multiplier degree given explicitly,
    /// so the zero polynomial (of conventional degree `gdeg`) yields the
    /// zero map of the right shape.
    pub fn multiplication_matrix_with_degree(
        &self,
        g: &Polynomial<D>,
        gdeg: i64,
        degree: i64,
    ) -> Result<GradedMap<D>> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if !g.is_zero() {
            let actual = g.homogeneous_degree()?;
            if actual != gdeg {
                return Err(Error::InvalidInput(format!(
                    "multiplier has degree {actual}, not {gdeg}"
                )));
            }
        }
        let domain = self.ring.domain().clone();
        let target_degree = degree + gdeg;
        let (source_basis, source_dim) = if degree < 0 {
            (Vec::new(), 0)
        } else {
            let s = self.slice(degree);
            (s.standard_monomials(), s.dim())
        };
        let (target, target_basis) = if target_degree < 0 {
            (None, Vec::new())
        } else {
            let t = self.slice(target_degree);
            let basis = t.standard_monomials();
            (Some(t), basis)
        };
        let target_dim = target_basis.len();
        let mut entries = vec![vec![domain.zero(); source_dim]; target_dim];
        if let Some(t) = &target {
            for (j, b) in source_basis.iter().enumerate() {
                let product = g.mul_monomial(b);
                let coords = t.coordinates(&product, &domain);
                for (i, c) in coords.into_iter().enumerate() {
                    entries[i][j] = c;
                }
            }
        }
        Ok(GradedMap {
            source_degree: degree,
            target_degree,
            source_basis,
            target_basis,
            entries,
        })
    }

    /// Graded dimensions 0..=top, where the top degree is detected by a
    /// run of zero dimensions long enough to be conclusive: standard
    /// monomials are divisibility-closed, so max(2, max weight)
    /// consecutive zeros above a degree force zero everywhere above it.
    /// Errors with [`Error::NotArtinian`] when the cap (default
    /// [`QuotientRing::default_degree_cap`]) is hit first. Returns the
    /// dimension list and the top degree.
    pub fn hilbert_function(&self, cap: Option<i64>) -> Result<(Vec<usize>, Option<i64>)> {
        let cap = cap.unwrap_or_else(|| self.default_degree_cap());
        let required_run = (*self.ring.weights().iter().max().unwrap() as usize).max(2);
        let mut dims = Vec::new();
        let mut zero_run = 0usize;
        let mut k = 0i64;
        loop {
            let dim = self.graded_dim(k);
            dims.push(dim);
            zero_run = if dim == 0 { zero_run + 1 } else { 0 };
            if zero_run >= required_run {
                while dims.last() == Some(&0) {
                    dims.pop();
                }
                let top = if dims.is_empty() {
                    None
                } else {
                    Some(dims.len() as i64 - 1)
                };
                return Ok((dims, top));
            }
            if k >= cap {
                return Err(Error::NotArtinian { cap });
            }
            k += 1;
        }
    }

    /// Checks vanishing at sigma+1 and sigma+2, the cheap smoothness
    /// certificate for a quotient whose expected socle degree is sigma.
    pub fn artinian_check(&self, sigma: i64) -> ArtinianOutcome {
        let dim1 = self.graded_dim(sigma + 1);
        let dim2 = self.graded_dim(sigma + 2);
        if dim1 == 0 && dim2 == 0 {
            ArtinianOutcome::Artinian
        } else {
            ArtinianOutcome::NotArtinian { dim1, dim2 }
        }
    }
}

/// A linear map between two degree slices, stored densely row-major in
/// the standard monomial bases.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<D: Domain> {
    pub source_degree: i64,
    pub target_degree: i64,
    pub source_basis: Vec<Monomial>,
    pub target_basis: Vec<Monomial>,
    /// entries[i][j]: coefficient of target basis i in the image of
    /// source basis j. target_dim rows by source_dim columns.
    pub entries: Vec<Vec<D::Elem>>,
}

impl<D: Domain> GradedMap<D> {
    pub fn source_dim(&self) -> usize {
        self.source_basis.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target_basis.len()
    }

    pub fn rank(&self, domain: &D) -> usize {
        crate::linalg::rank_of_dense_rows(domain, &self.entries)
    }

    /// The composite  self . other  (apply `other` first). Degrees and
    /// bases must be compatible.
    pub fn compose(&self, domain: &D, other: &GradedMap<D>) -> Result<GradedMap<D>> {
        if other.target_degree != self.source_degree || other.target_dim() != self.source_dim() {
            return Err(Error::InvalidInput(format!(
                "cannot compose maps: inner target degree {} does not match outer source degree {}",
                other.target_degree, self.source_degree
            )));
        }
        let rows = self.target_dim();
        let cols = other.source_dim();
        let inner = self.source_dim();
        let mut entries = vec![vec![domain.zero(); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = domain.zero();
                for k in 0..inner {
                    acc = domain.add(&acc, &domain.mul(&self.entries[i][k], &other.entries[k][j]));
                }
                entries[i][j] = acc;
            }
        }
        Ok(GradedMap {
            source_degree: other.source_degree,
            target_degree: self.target_degree,
            source_basis: other.source_basis.clone(),
            target_basis: self.target_basis.clone(),
            entries,
        })
    }

    /// Applies the map to a coordinate vector in the source basis.
    pub fn apply(&self, domain: &D, v: &[D::Elem]) -> Vec<D::Elem> {
        self.entries
            .iter()
            .map(|row| {
                let mut acc = domain.zero();
                for (a, b) in row.iter().zip(v) {
                    acc = domain.add(&acc, &domain.mul(a, b));
                }
                acc
            })
            .collect()
    }
}

/// Coefficients of the polynomial  prod (1 - t^{e_i}) / prod (1 - t^{w_j}),
/// the Hilbert series of a complete intersection with generator degrees
/// e_i inside the weighted ring with weights w_j.
///
/// Errors with [`Error::NonCiShape`] unless the generator count equals
/// the variable count and the division is exact.
pub fn ci_hilbert_series(gen_degrees: &[i64], weights: &[u32]) -> Result<Vec<i64>> {
    if gen_degrees.len() != weights.len() {
        return Err(Error::NonCiShape(format!(
            "{} generator degrees for {} variables",
            gen_degrees.len(),
            weights.len()
        )));
    }
    if gen_degrees.iter().any(|&e| e < 1) {
        return Err(Error::NonCiShape("generator degree below 1".into()));
    }
    let numerator = one_minus_t_product(gen_degrees.iter().map(|&e| e as usize));
    let denominator = one_minus_t_product(weights.iter().map(|&w| w as usize));
    let top = (numerator.len() as i64 - 1) - (denominator.len() as i64 - 1);
    if top < 0 {
        return Err(Error::NonCiShape(
            "total generator degree is below total variable weight".into(),
        ));
    }
    // Power series division: denominator has constant term 1.
    let mut quotient = vec![0i128; top as usize + 1];
    for k in 0..=top as usize {
        let mut acc = *numerator.get(k).unwrap_or(&0);
        for j in 1..=k.min(denominator.len() - 1) {
            acc -= denominator[j] * quotient[k - j];
        }
        quotient[k] = acc;
    }
    // The division must be exact for a complete intersection.
    let mut check = vec![0i128; numerator.len().max(quotient.len() + denominator.len() - 1)];
    for (i, &q) in quotient.iter().enumerate() {
        for (j, &d) in denominator.iter().enumerate() {
            check[i + j] += q * d;
        }
    }
    for (k, &c) in check.iter().enumerate() {
        if c != *numerator.get(k).unwrap_or(&0) {
            return Err(Error::NonCiShape(
                "series is not a polynomial: weighted degrees are incompatible".into(),
            ));
        }
    }
    quotient
        .into_iter()
        .map(|c| {
            i64::try_from(c).map_err(|_| Error::NonCiShape("series coefficient overflow".into()))
        })
        .collect()
}

fn one_minus_t_product(degrees: impl Iterator<Item = usize>) -> Vec<i128> {
    let mut poly = vec![1i128];
    for e in degrees {
        let mut next = vec![0i128; poly.len() + e];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + e] -= c;
        }
        poly = next;
    }
    poly
}
