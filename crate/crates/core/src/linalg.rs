//! Sparse exact row reduction.
//!
//! [`Echelon`] maintains a reduced row echelon basis incrementally: each
//! inserted row is reduced against the existing pivots, normalized, and
//! back-eliminated from all stored rows. The invariant after every insert
//! is full Gauss-Jordan form: every stored row has a unit pivot and zeros
//! at every other pivot column. That makes reduction order-independent
//! and the resulting normal forms canonical, so identical inputs produce
//! identical pivot sets, standard monomials, and report bytes.
//!
//! Pivoting always selects the first nonzero column of the reduced row.
//! Columns are expected in descending monomial order, so pivots prefer
//! the largest monomial, matching the classical choice of standard
//! monomials as the basis of a quotient.

use crate::domain::Domain;

/// One stored row: sorted nonzero entries, first entry is the pivot with
/// coefficient one.
type SparseRow<E> = Vec<(u32, E)>;

#[derive(Clone, Debug)]
pub struct Echelon<D: Domain> {
    domain: D,
    num_cols: usize,
    rows: Vec<SparseRow<D::Elem>>,
    /// Column index -> index into `rows` for pivot columns.
    pivot_row: Vec<Option<u32>>,
}

impl<D: Domain> Echelon<D> {
    pub fn new(domain: D, num_cols: usize) -> Self {
        Echelon {
            domain,
            num_cols,
            rows: Vec::new(),
            pivot_row: vec![None; num_cols],
        }
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in ascending order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.num_cols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Non-pivot columns in ascending order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.num_cols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Fully reduces a sparse vector against the stored rows.
    ///
    /// Stored rows carry zeros at every pivot column except their own, so
    /// eliminating the pivot-column entries of `v` never reintroduces
    /// one; a single pass over the original support suffices.
    pub fn reduce(&self, mut v: SparseRow<D::Elem>) -> SparseRow<D::Elem> {
        let hits: Vec<(u32, D::Elem)> = v
            .iter()
            .filter(|(c, _)| self.pivot_row[*c as usize].is_some())
            .map(|(c, e)| (*c, e.clone()))
            .collect();
        for (col, coeff) in hits {
            let row = &self.rows[self.pivot_row[col as usize].unwrap() as usize];
            v = axpy(&self.domain, &v, &coeff, row);
        }
        v
    }

    /// Inserts a row, returning true when it was independent (rank grew).
    pub fn insert(&mut self, v: SparseRow<D::Elem>) -> bool {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0), "row must be sorted");
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        // Normalize the pivot to one. The domain must be a field here.
        let pivot_col = v[0].0;
        let inv = self
            .domain
            .inv(&v[0].1)
            .expect("elimination requires invertible pivots");
        if v[0].1 != self.domain.one() {
            for (_, e) in v.iter_mut() {
                *e = self.domain.mul(e, &inv);
            }
            v[0].1 = self.domain.one();
        }
        // Back-eliminate the new pivot column from every stored row.
        for row in &mut self.rows {
            if let Ok(ix) = row.binary_search_by_key(&pivot_col, |(c, _)| *c) {
                let coeff = row[ix].1.clone();
                *row = axpy(&self.domain, row, &coeff, &v);
            }
        }
        self.pivot_row[pivot_col as usize] = Some(self.rows.len() as u32);
        self.rows.push(v);
        true
    }

    /// Reduces a dense vector in place against the stored rows.
    pub fn reduce_dense(&self, v: &mut [D::Elem]) {
        let d = &self.domain;
        for row in &self.rows {
            let pivot_col = row[0].0 as usize;
            let coeff = v[pivot_col].clone();
            if d.is_zero(&coeff) {
                continue;
            }
            for (col, e) in row {
                let delta = d.mul(&coeff, e);
                v[*col as usize] = d.sub(&v[*col as usize], &delta);
            }
        }
    }
}

/// v := v - c * row, merging sorted sparse vectors.
fn axpy<D: Domain>(
    d: &D,
    v: &SparseRow<D::Elem>,
    c: &D::Elem,
    row: &SparseRow<D::Elem>,
) -> SparseRow<D::Elem> {
    let mut out = Vec::with_capacity(v.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() && j < row.len() {
        match v[i].0.cmp(&row[j].0) {
            std::cmp::Ordering::Less => {
                out.push(v[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((row[j].0, d.neg(&d.mul(c, &row[j].1))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = d.sub(&v[i].1, &d.mul(c, &row[j].1));
                if !d.is_zero(&e) {
                    out.push((v[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&v[i..]);
    for (col, e) in &row[j..] {
        out.push((*col, d.neg(&d.mul(c, e))));
    }
    out
}

/// Rank of a matrix given as sparse rows (columns 0..num_cols).
pub fn rank_of_sparse_rows<D: Domain>(
    domain: &D,
    num_cols: usize,
    rows: impl IntoIterator<Item = Vec<(u32, D::Elem)>>,
) -> usize {
    let mut ech = Echelon::new(domain.clone(), num_cols);
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Rank of a dense matrix (rows of equal length).
pub fn rank_of_dense_rows<D: Domain>(domain: &D, rows: &[Vec<D::Elem>]) -> usize {
    let num_cols = rows.first().map_or(0, |r| r.len());
    rank_of_sparse_rows(
        domain,
        num_cols,
        rows.iter().map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, e)| !domain.is_zero(e))
                .map(|(c, e)| (c as u32, e.clone()))
                .collect::<Vec<_>>()
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn field() -> PrimeField {
        PrimeField::new(12289).unwrap()
    }

    fn row(f: &PrimeField, entries: &[(u32, i64)]) -> Vec<(u32, u64)> {
        entries.iter().map(|&(c, v)| (c, f.from_i64(v))).collect()
    }

    #[test]
    fn rank_and_pivots_of_small_matrix() {
        let f = field();
        let mut ech = Echelon::new(f, 4);
        assert!(ech.insert(row(&f, &[(0, 1), (1, 2), (2, 3)])));
        assert!(ech.insert(row(&f, &[(1, 1), (3, 1)])));
        // Dependent: row0 + 2*row1 relative to the originals.
        assert!(!ech.insert(row(&f, &[(0, 1), (1, 4), (2, 3), (3, 2)])));
        assert_eq!(ech.rank(), 2);
        assert_eq!(ech.pivot_columns(), vec![0, 1]);
        assert_eq!(ech.free_columns(), vec![2, 3]);
    }

    #[test]
    fn gauss_jordan_invariant_holds_after_each_insert() {
        let f = field();
        let mut ech = Echelon::new(f, 5);
        let data: Vec<Vec<(u32, i64)>> = vec![
            vec![(1, 2), (2, 1), (4, 5)],
            vec![(0, 3), (1, 1)],
            vec![(1, 7), (3, 2)],
            vec![(0, 1), (2, 1), (3, 1), (4, 1)],
        ];
        for r in data {
            ech.insert(row(&f, &r));
            let pivots = ech.pivot_columns();
            for stored in &ech.rows {
                assert_eq!(f.lift(&stored[0].1), 1, "unit pivot");
                for (c, _) in &stored[1..] {
                    assert!(
                        !pivots.contains(&(*c as usize)),
                        "tail entry at another pivot column"
                    );
                }
            }
        }
        assert_eq!(ech.rank(), 4);
    }

    #[test]
    fn reduce_dense_zeroes_dependent_vectors() {
        let f = field();
        let mut ech = Echelon::new(f, 3);
        ech.insert(row(&f, &[(0, 1), (2, 1)]));
        ech.insert(row(&f, &[(1, 1), (2, 2)]));
        // 3*(row0) + 1*(row1):
        let mut v = vec![f.from_i64(3), f.from_i64(1), f.from_i64(5)];
        ech.reduce_dense(&mut v);
        assert!(v.iter().all(|e| f.is_zero(e)));
        // An independent vector keeps a nonzero free coordinate.
        let mut w = vec![f.from_i64(0), f.from_i64(0), f.from_i64(1)];
        ech.reduce_dense(&mut w);
        assert_eq!(f.lift(&w[2]), 1);
    }

    #[test]
    fn pivot_prefers_first_column() {
        let f = field();
        let mut ech = Echelon::new(f, 3);
        ech.insert(row(&f, &[(1, 5), (2, 1)]));
        assert_eq!(ech.pivot_columns(), vec![1]);
        ech.insert(row(&f, &[(0, 2), (1, 1)]));
        assert_eq!(ech.pivot_columns(), vec![0, 1]);
    }

    #[test]
    fn works_over_rationals() {
        let q = Rationals;
        let r = |vals: &[i64]| -> Vec<(u32, BigRational)> {
            vals.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c as u32, BigRational::from_integer(v.into())))
                .collect()
        };
        let mut ech = Echelon::new(q, 3);
        assert!(ech.insert(r(&[2, 4, 6])));
        assert!(ech.insert(r(&[1, 3, 5])));
        assert!(!ech.insert(r(&[3, 7, 11])));
        assert_eq!(ech.rank(), 2);
    }

    #[test]
    fn dense_rank_oracle() {
        let f = field();
        let rows: Vec<Vec<u64>> = vec![
            vec![f.from_i64(1), f.from_i64(0), f.from_i64(2)],
            vec![f.from_i64(0), f.from_i64(1), f.from_i64(3)],
            vec![f.from_i64(1), f.from_i64(1), f.from_i64(5)],
        ];
        assert_eq!(rank_of_dense_rows(&f, &rows), 2);
        assert_eq!(rank_of_dense_rows(&f, &[] as &[Vec<u64>]), 0);
    }
}
