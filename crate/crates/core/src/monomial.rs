//! Monomials with explicit exponent vectors and degree-slice enumeration.
//!
//! The monomial order is lexicographic with x0 > x1 > ... Within a fixed
//! weighted degree this agrees with graded lex, which is the order every
//! degree slice uses: column 0 of a slice matrix is the largest monomial.

use std::cmp::Ordering;
use std::fmt;

/// A power product of the ring variables. Exponents are stored densely;
/// the vector length is the ring's variable count.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn unit(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The single variable x_index.
    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// Divides the exponent at `index` down by one; `None` if it is zero.
    pub fn div_variable(&self, index: usize) -> Option<Monomial> {
        if self.exps[index] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] -= 1;
        Some(Monomial { exps })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Plain lex with x0 most significant. Callers comparing across
    /// different degrees must order by (weighted degree, lex) themselves.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given weighted degree, in descending lex order.
///
/// Descending lex is what slice construction relies on: the first entry is
/// the largest monomial and becomes column 0. Degree below zero or an
/// unreachable weighted degree yields an empty list.
pub fn monomials_of_degree(weights: &[u32], degree: i64) -> Vec<Monomial> {
    if degree < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![0u32; weights.len()];
    descend(weights, 0, degree, &mut stack, &mut out);
    out
}

fn descend(weights: &[u32], var: usize, remaining: i64, stack: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(stack.clone()));
        }
        return;
    }
    let w = weights[var] as i64;
    let max_exp = remaining / w;
    // Largest exponent first gives descending lex.
    for e in (0..=max_exp).rev() {
        stack[var] = e as u32;
        descend(weights, var + 1, remaining - e * w, stack, out);
    }
    stack[var] = 0;
}
