//! Slices, slice elimination and projection of one factor.
//!
//! Writing `T = sum_i a_i ⊗ M_i` along a factor, removing a slice after
//! subtracting multiples of it from the others lowers rank by at most one,
//! and quotienting a factor by a suitable line lowers border rank by one.
//! Neither the multiples nor the line are searched for here: they are inputs.

use num_traits::Zero;

use crate::algebra::{Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::tensor::{apply_factor_map, Factor, Tensor3};

/// `T = sum_i e_i ⊗ slices[i]` along `factor`.
///
/// Slice shapes follow the cyclic order: along A the slice is indexed by
/// `(j, k)`, along B by `(k, i)`, along C by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDecomp {
    pub factor: Factor,
    pub slices: Vec<RatMatrix>,
}

fn other_dims(dims: [usize; 3], factor: Factor) -> (usize, usize) {
    match factor {
        Factor::A => (dims[1], dims[2]),
        Factor::B => (dims[2], dims[0]),
        Factor::C => (dims[0], dims[1]),
    }
}

fn split(idx: (usize, usize, usize), factor: Factor) -> (usize, usize, usize) {
    let (i, j, k) = idx;
    match factor {
        Factor::A => (i, j, k),
        Factor::B => (j, k, i),
        Factor::C => (k, i, j),
    }
}

fn join(s: usize, r: usize, c: usize, factor: Factor) -> (usize, usize, usize) {
    match factor {
        Factor::A => (s, r, c),
        Factor::B => (c, s, r),
        Factor::C => (r, c, s),
    }
}

pub fn slices(t: &Tensor3, factor: Factor) -> SliceDecomp {
    let (rows, cols) = other_dims(t.dims(), factor);
    let mut out = vec![RatMatrix::zeros(rows, cols); t.dim(factor)];
    for (idx, v) in t.entries() {
        let (s, r, c) = split(idx, factor);
        out[s].set(r, c, v.clone());
    }
    SliceDecomp { factor, slices: out }
}

/// Inverse of [`slices`]. All slices must share one shape.
pub fn reassemble(d: &SliceDecomp) -> Result<Tensor3> {
    let (rows, cols) = d.slices.first().map_or((0, 0), |m| (m.rows(), m.cols()));
    for (n, m) in d.slices.iter().enumerate() {
        if (m.rows(), m.cols()) != (rows, cols) {
            return Err(Error::dims(format!("slices[{n}]"), rows * cols, m.rows() * m.cols()));
        }
    }
    let dims = match d.factor {
        Factor::A => [d.slices.len(), rows, cols],
        Factor::B => [cols, d.slices.len(), rows],
        Factor::C => [rows, cols, d.slices.len()],
    };
    let mut t = Tensor3::zeros(dims);
    for (s, m) in d.slices.iter().enumerate() {
        for (r, c, v) in m.entries() {
            t.set(join(s, r, c, d.factor), v.clone());
        }
    }
    Ok(t)
}

fn slice_minus(m: &RatMatrix, lambda: &Rat, pivot: &RatMatrix) -> RatMatrix {
    let mut out = m.clone();
    if !lambda.is_zero() {
        for (r, c, v) in pivot.entries() {
            out.add_to(r, c, &-(lambda * v));
        }
    }
    out
}

/// Tensor with slices `M_j - lambda_j M_pivot` for `j != pivot`, in the
/// factor of dimension one less. `lambdas` lists the `j != pivot` in order.
pub fn aft_reduce(t: &Tensor3, factor: Factor, pivot: usize, lambdas: &[Rat]) -> Result<Tensor3> {
    let d = t.dim(factor);
    if pivot >= d {
        return Err(Error::arg("pivot", format!("index {pivot} out of range for dimension {d}")));
    }
    if lambdas.len() + 1 != d {
        return Err(Error::dims("lambdas", d.saturating_sub(1), lambdas.len()));
    }
    let dec = slices(t, factor);
    let m0 = &dec.slices[pivot];
    if m0.nnz() == 0 {
        return Err(Error::ZeroVector(format!("pivot slice {pivot}")));
    }
    let reduced: Vec<RatMatrix> = dec
        .slices
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != pivot)
        .zip(lambdas)
        .map(|((_, m), l)| slice_minus(m, l, m0))
        .collect();
    let mut out = reassemble(&SliceDecomp {
        factor,
        slices: reduced,
    })?;
    if out.dim(factor) == 0 {
        let mut dims = t.dims();
        dims[factor.index()] = 0;
        out = Tensor3::zeros(dims);
    }
    Ok(out)
}

/// Index of the coordinate dropped when quotienting by `a`: its last nonzero
/// entry.
pub fn dropped_coordinate(a: &[Rat]) -> Option<usize> {
    a.iter().rposition(|x| !x.is_zero())
}

/// Matrix of `V -> V / <a>` in the basis `e_i + <a>`, `i != p`, where `p` is
/// [`dropped_coordinate`]: `x -> (x_i - x_p a_i / a_p)_{i != p}`.
pub fn quotient_map(a: &[Rat]) -> Result<RatMatrix> {
    let p = dropped_coordinate(a).ok_or_else(|| Error::ZeroVector("projection vector".into()))?;
    let n = a.len();
    let mut m = RatMatrix::zeros(n - 1, n);
    for (row, i) in (0..n).filter(|&i| i != p).enumerate() {
        m.set(row, i, Rat::from_integer(1.into()));
        m.set(row, p, -(&a[i] / &a[p]));
    }
    Ok(m)
}

/// Image of `T` in `(A / a) ⊗ B ⊗ C` (or the analogue for B, C).
pub fn project_factor(t: &Tensor3, factor: Factor, a: &[Rat]) -> Result<Tensor3> {
    if a.len() != t.dim(factor) {
        return Err(Error::dims(format!("projection vector for {factor}"), t.dim(factor), a.len()));
    }
    apply_factor_map(t, factor, &quotient_map(a)?)
}
