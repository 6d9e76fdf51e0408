//! Sparse exact matrices over Q.
//!
//! `rank` works fraction-free: every row is scaled to a primitive integer
//! vector and elimination uses integer cross-multiplication followed by
//! content removal, so no rational normalisation happens in the inner loop.
//! `kernel_basis` and `in_span` go through a rational reduced row echelon
//! form and give an independent route to the same rank.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{null_space, rref, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// From row vectors. All rows must share one length.
    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// The matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Stored (nonzero) entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rat) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        let e = self.entries.entry((i, j)).or_insert_with(Rat::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut d = vec![vec![Rat::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::dims("matrix-vector product", self.cols, v.len()));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for (&(i, j), x) in &self.entries {
            out[i] += x * &v[j];
        }
        Ok(out)
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::dims("matrix product", self.cols, rhs.rows));
        }
        let mut by_row: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); rhs.rows];
        for (&(i, j), v) in &rhs.entries {
            by_row[i].push((j, v));
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                out.add_to(i, j, &(a * b));
            }
        }
        Ok(out)
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, &Rat)>> {
        let mut rows: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].push((j, v));
        }
        rows
    }

    /// Exact rank over Q.
    ///
    /// Rows are processed in index order; each is reduced against the pivot
    /// rows found so far by eliminating its leading entry, and if anything
    /// survives its leading column becomes a new pivot. The result is the
    /// same whatever order entries were inserted in.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
        for row in self.sparse_rows() {
            if row.is_empty() {
                continue;
            }
            let mut r = integer_row(&row);
            while let Some(&(lead, _)) = r.first() {
                match pivots.get(&lead) {
                    Some(p) => r = eliminate(&r, p),
                    None => {
                        pivots.insert(lead, r);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// Basis of the right null space, one vector per non-pivot column of the
    /// reduced row echelon form, free coordinate equal to one.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        null_space(&self.to_dense(), self.cols)
    }

    /// Reduced row echelon basis of the row space.
    pub fn row_basis(&self) -> Vec<Vec<Rat>> {
        let mut d = self.to_dense();
        let r = rref(&mut d, self.cols).len();
        d.truncate(r);
        d
    }
}

/// Clears denominators and divides by the content, keeping the sign of the
/// leading entry positive.
fn integer_row(row: &[(usize, &Rat)]) -> Vec<(usize, BigInt)> {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: Vec<(usize, BigInt)> = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    primitive(ints)
}

fn primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// `lead(p) * r - lead(r) * p`, made primitive. Both rows share a leading
/// column, which cancels.
fn eliminate(r: &[(usize, BigInt)], p: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let g = r[0].1.gcd(&p[0].1);
    let a = &p[0].1 / &g;
    let b = &r[0].1 / &g;
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |x| x.0);
        let cj = p.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, &a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &a * &r[i - 1].1 - &b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    primitive(out)
}

/// Rank of a list of vectors of a common length.
pub fn rank_of_vectors(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(vectors).rank()
}

/// Coefficients `c` with `sum c_i basis_i = v`, or `None` when `v` is not in
/// the span. With a dependent basis, free coefficients are set to zero.
pub fn in_span(v: &[Rat], basis: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>> {
    let n = v.len();
    for b in basis {
        if b.len() != n {
            return Err(Error::dims("span membership", n, b.len()));
        }
    }
    let k = basis.len();
    // Augmented system [B | v] with the basis vectors as columns.
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![Rat::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        coeffs[p] = rows[r][k].clone();
    }
    Ok(Some(coeffs))
}
