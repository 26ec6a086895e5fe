//! Graded polynomial rings and sparse polynomials over a [`Domain`].
//!
//! A [`RingDescriptor`] fixes the variable count, the positive weights
//! that grade the ring, and the coefficient domain. Polynomials store
//! their terms in a BTreeMap keyed by monomial, so every polynomial has a
//! single canonical form and printing is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

/// A graded polynomial ring D[x0..x_{n-1}] with weights deg x_i = w_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingDescriptor<D: Domain> {
    num_vars: usize,
    weights: Vec<u32>,
    domain: D,
}

impl<D: Domain> RingDescriptor<D> {
    pub fn new(num_vars: usize, weights: Vec<u32>, domain: D) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidInput("ring needs at least one variable".into()));
        }
        if weights.len() != num_vars {
            return Err(Error::InvalidInput(format!(
                "{} weights given for {} variables",
                weights.len(),
                num_vars
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        Ok(RingDescriptor {
            num_vars,
            weights,
            domain,
        })
    }

    /// Standard grading: every variable has weight 1.
    pub fn standard(num_vars: usize, domain: D) -> Result<Self> {
        RingDescriptor::new(num_vars, vec![1; num_vars], domain)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Monomial basis of the degree-k slice, descending lex.
    pub fn slice_monomials(&self, degree: i64) -> Vec<Monomial> {
        monomials_of_degree(&self.weights, degree)
    }

    pub fn zero(&self) -> Polynomial<D> {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<D> {
        let mut p = self.zero();
        p.add_term(m, self.domain.one());
        p
    }

    pub fn variable(&self, index: usize) -> Polynomial<D> {
        self.monomial(Monomial::variable(self.num_vars, index))
    }

    pub fn constant(&self, c: D::Elem) -> Polynomial<D> {
        let mut p = self.zero();
        p.add_term(Monomial::unit(self.num_vars), c);
        p
    }

    /// A homogeneous polynomial of the given degree with coefficients
    /// drawn from the RNG, dense over the degree slice. Coefficients may
    /// individually be zero; the zero polynomial is possible only when
    /// the RNG yields all zeros.
    pub fn random_homogeneous<R: Rng>(&self, degree: i64, rng: &mut R) -> Polynomial<D> {
        let mut p = self.zero();
        for m in self.slice_monomials(degree) {
            let c = self.domain.from_i64(rng.random_range(-50..=50));
            p.add_term(m, c);
        }
        p
    }
}

/// A sparse multivariate polynomial with canonical term storage.
#[derive(Clone, Debug)]
pub struct Polynomial<D: Domain> {
    ring: RingDescriptor<D>,
    terms: BTreeMap<Monomial, D::Elem>,
}

impl<D: Domain> PartialEq for Polynomial<D> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<D: Domain> Polynomial<D> {
    pub fn ring(&self) -> &RingDescriptor<D> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &D::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&D::Elem> {
        self.terms.get(m)
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: D::Elem) {
        let domain = self.ring.domain.clone();
        if domain.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = domain.add(e.get(), &c);
                if domain.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn ensure_same_ring(&self, other: &Polynomial<D>) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial<D>) -> Result<Polynomial<D>> {
        self.ensure_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial<D>) -> Result<Polynomial<D>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial<D> {
        let domain = &self.ring.domain;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), domain.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &D::Elem) -> Polynomial<D> {
        let domain = self.ring.domain.clone();
        if domain.is_zero(c) {
            return self.ring.zero();
        }
        let mut out = self.ring.zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), domain.mul(a, c));
        }
        out
    }

    /// Multiplies by a bare monomial: a cheap exponent shift.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial<D> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial<D>) -> Result<Polynomial<D>> {
        self.ensure_same_ring(other)?;
        let domain = self.ring.domain.clone();
        let mut out = self.ring.zero();
        // Iterate the shorter operand outside for fewer monomial clones.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), domain.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Binary exponentiation; `pow(0)` is the constant 1.
    pub fn pow(&self, e: u32) -> Polynomial<D> {
        let mut acc = self.ring.constant(self.ring.domain.one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Like `pow`, but gives up (returns None) once an intermediate
    /// product would exceed `term_cap` terms.
    pub fn pow_with_term_cap(&self, e: u32, term_cap: usize) -> Option<Polynomial<D>> {
        let mut acc = self.ring.constant(self.ring.domain.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
            if acc.num_terms() > term_cap {
                return None;
            }
        }
        Some(acc)
    }

    /// Weighted degree of the leading term; error for the zero polynomial.
    pub fn degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring.weights))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring.weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial; errors otherwise.
    pub fn homogeneous_degree(&self) -> Result<i64> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring.weights));
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        for d in degs {
            if d != first {
                return Err(Error::NonHomogeneous {
                    expected: first,
                    found: d,
                });
            }
        }
        Ok(first)
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial<D>> {
        if var >= self.ring.num_vars {
            return Err(Error::InvalidInput(format!(
                "no variable x{var} in a ring with {} variables",
                self.ring.num_vars
            )));
        }
        let domain = self.ring.domain.clone();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let lowered = m.div_variable(var).expect("exponent is positive");
            out.add_term(lowered, domain.mul(c, &domain.from_i64(e as i64)));
        }
        Ok(out)
    }

    /// Canonical text form; round-trips through the parser.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<D: Domain> fmt::Display for Polynomial<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let domain = &self.ring.domain;
        let weights = &self.ring.weights;
        // Descending (weighted degree, lex): highest-degree terms first.
        let mut ordered: Vec<(&Monomial, &D::Elem)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            (b.weighted_degree(weights), *b).cmp(&(a.weighted_degree(weights), *a))
        });
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let text = domain.display(c);
            let (sign, magnitude) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            if m.is_unit() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// All nonzero partial derivatives of the given polynomials, flattened.
///
/// This is the generator list of the Jacobian ideal when handed a single
/// hypersurface equation, and of the sum of Jacobian ideals for several.
/// Every generator is homogeneous because the inputs must be.
pub fn jacobian_generators<D: Domain>(polys: &[Polynomial<D>]) -> Result<Vec<Polynomial<D>>> {
    let mut gens = Vec::new();
    for f in polys {
        f.homogeneous_degree()?;
        for var in 0..f.ring().num_vars() {
            let g = f.partial_derivative(var)?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    Ok(gens)
}

/// Verifies the weighted Euler identity  sum_j w_j x_j dF/dx_j = deg(F) * F.
///
/// Over F_p the identity degrades when p divides deg(F): the right side
/// collapses and the check would pass vacuously for the wrong reason, so
/// that case is refused. Pass a field whose modulus does not divide the
/// degree, or use the rationals.
pub fn euler_identity_holds<D: Domain>(f: &Polynomial<D>, char_divides_degree: impl Fn(i64) -> bool) -> Result<bool> {
    let d = f.homogeneous_degree()?;
    if char_divides_degree(d) {
        return Err(Error::InvalidInput(format!(
            "euler identity is degenerate: coefficient characteristic divides the degree {d}"
        )));
    }
    let ring = f.ring();
    let domain = ring.domain().clone();
    let mut lhs = ring.zero();
    for (var, &w) in ring.weights().iter().enumerate() {
        let term = f
            .partial_derivative(var)?
            .mul_monomial(&Monomial::variable(ring.num_vars(), var))
            .scale(&domain.from_i64(w as i64));
        lhs = lhs.add(&term)?;
    }
    let rhs = f.scale(&domain.from_i64(d));
    Ok(lhs == rhs)
}

/// Euler identity check for a prime field, refusing p | deg(F).
pub fn euler_check_mod_p(f: &Polynomial<crate::domain::PrimeField>) -> Result<bool> {
    let p = f.ring().domain().modulus();
    euler_identity_holds(f, |d| d != 0 && (d.unsigned_abs() % p == 0))
}

/// Euler identity check over the rationals; never degenerate.
pub fn euler_check_rational(f: &Polynomial<crate::domain::Rationals>) -> Result<bool> {
    euler_identity_holds(f, |_| false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{PrimeField, Rationals};

    fn ring() -> RingDescriptor<PrimeField> {
        RingDescriptor::standard(3, PrimeField::new(12289).unwrap()).unwrap()
    }

    #[test]
    fn ring_validation() {
        let f = PrimeField::new(12289).unwrap();
        assert!(RingDescriptor::standard(0, f).is_err());
        assert!(RingDescriptor::new(2, vec![1], f).is_err());
        assert!(RingDescriptor::new(2, vec![1, 0], f).is_err());
    }

    #[test]
    fn canonical_form_merges_and_drops() {
        let r = ring();
        let x = r.variable(0);
        let y = r.variable(1);
        // x*y - y*x = 0.
        let p = x.mul(&y).unwrap().sub(&y.mul(&x).unwrap()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn display_orders_terms_descending() {
        let r = ring();
        let d = *r.domain();
        let mut p = r.zero();
        p.add_term(Monomial::new(vec![0, 2, 0]), d.from_i64(1));
        p.add_term(Monomial::new(vec![1, 1, 0]), d.from_i64(-3));
        p.add_term(Monomial::new(vec![2, 0, 0]), d.from_i64(1));
        assert_eq!(p.to_string(), "x0^2-3*x0*x1+x1^2");
    }

    #[test]
    fn degree_and_homogeneity() {
        let r = ring();
        let x = r.variable(0);
        let y = r.variable(1);
        let h = x.pow(3).add(&y.pow(3)).unwrap();
        assert_eq!(h.homogeneous_degree().unwrap(), 3);
        let mixed = h.add(&x).unwrap();
        assert!(!mixed.is_homogeneous());
        assert!(matches!(
            mixed.homogeneous_degree(),
            Err(Error::NonHomogeneous { .. })
        ));
        assert!(matches!(r.zero().degree(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn weighted_degree_uses_ring_weights() {
        let f = PrimeField::new(12289).unwrap();
        let r = RingDescriptor::new(2, vec![1, 3], f).unwrap();
        // x0^3 and x1 both have weighted degree 3.
        let p = r.variable(0).pow(3).add(&r.variable(1)).unwrap();
        assert_eq!(p.homogeneous_degree().unwrap(), 3);
    }

    #[test]
    fn partial_derivatives_of_fermat_cubic() {
        let r = ring();
        let f = r
            .variable(0)
            .pow(3)
            .add(&r.variable(1).pow(3))
            .unwrap()
            .add(&r.variable(2).pow(3))
            .unwrap();
        let gens = jacobian_generators(&[f]).unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].to_string(), "3*x0^2");
        assert_eq!(gens[2].to_string(), "3*x2^2");
    }

    #[test]
    fn derivative_drops_terms_killed_by_characteristic() {
        let r = RingDescriptor::standard(2, PrimeField::new(3).unwrap()).unwrap();
        let f = r.variable(0).pow(3);
        // d/dx0 (x0^3) = 3 x0^2 = 0 mod 3.
        assert!(f.partial_derivative(0).unwrap().is_zero());
        assert!(jacobian_generators(&[f]).unwrap().is_empty());
    }

    #[test]
    fn euler_identity_on_homogeneous_inputs() {
        let r = ring();
        let f = r
            .variable(0)
            .pow(4)
            .add(&r.variable(1).pow(2).mul(&r.variable(2).pow(2)).unwrap())
            .unwrap();
        assert!(euler_check_mod_p(&f).unwrap());

        let q: RingDescriptor<Rationals> = RingDescriptor::standard(2, Rationals).unwrap();
        let g = q.variable(0).pow(5).add(&q.variable(1).pow(5)).unwrap();
        assert!(euler_check_rational(&g).unwrap());
    }

    #[test]
    fn euler_identity_refuses_bad_characteristic() {
        let r = RingDescriptor::standard(2, PrimeField::new(5).unwrap()).unwrap();
        let f = r.variable(0).pow(5).add(&r.variable(1).pow(5)).unwrap();
        assert!(matches!(euler_check_mod_p(&f), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let r = ring();
        let l = r
            .variable(0)
            .add(&r.variable(1))
            .unwrap()
            .add(&r.variable(2))
            .unwrap();
        let mut by_mul = r.constant(r.domain().one());
        for _ in 0..6 {
            by_mul = by_mul.mul(&l).unwrap();
        }
        assert_eq!(l.pow(6), by_mul);
        assert_eq!(l.pow(0), r.constant(r.domain().one()));
        // (x0+x1+x2)^6 is dense in degree 6: C(8,2) = 28 terms.
        assert_eq!(l.pow(6).num_terms(), 28);
        assert!(l.pow_with_term_cap(6, 10).is_none());
        assert_eq!(l.pow_with_term_cap(6, 100).unwrap(), l.pow(6));
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = ring();
        let b = RingDescriptor::standard(2, PrimeField::new(12289).unwrap()).unwrap();
        let err = a.variable(0).add(&b.variable(0));
        assert!(matches!(err, Err(Error::RingMismatch)));
    }

    #[test]
    fn random_homogeneous_is_homogeneous() {
        use rand::SeedableRng;
        let r = ring();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let p = r.random_homogeneous(4, &mut rng);
        assert!(p.is_homogeneous());
        assert_eq!(p.homogeneous_degree().unwrap(), 4);
    }
}
