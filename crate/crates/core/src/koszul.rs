//! Koszul flattenings and the border-rank lower bounds they certify.
//!
//! For `T ∈ A⊗B⊗C` the Koszul flattening `T^{∧p}_A : Λ^p A ⊗ B* -> Λ^{p+1} A ⊗ C`
//! sends `e_S ⊗ β` to `sum β(b_j) t^{ijk} e_i ∧ e_S ⊗ c_k`. A rank-one tensor
//! gives rank `C(dim A - 1, p)`, so `ceil(rank / C(dim A - 1, p))` bounds the
//! border rank from below.
//!
//! Matrix layout: rows are `(S, k)` with `|S| = p+1`, columns `(S', j)` with
//! `|S'| = p`, at index `subset_rank * dim + vector_index`. Subsets are in
//! lexicographic order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::tensor::{apply_factor_map, staircase_tensor, Factor, Tensor3};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All `p`-subsets of `{0, .., n-1}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetBasis {
    n: usize,
    p: usize,
    subsets: Vec<Vec<usize>>,
}

impl SubsetBasis {
    pub fn new(n: usize, p: usize) -> Self {
        let mut subsets = Vec::with_capacity(binomial(n, p));
        if p <= n {
            let mut cur: Vec<usize> = (0..p).collect();
            loop {
                subsets.push(cur.clone());
                // advance the rightmost position that still has room
                let Some(i) = (0..p).rev().find(|&i| cur[i] < n - p + i) else {
                    break;
                };
                cur[i] += 1;
                for j in i + 1..p {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }
        Self { n, p, subsets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn unrank(&self, r: usize) -> &[usize] {
        &self.subsets[r]
    }

    /// Position of a sorted subset in the lexicographic list.
    pub fn rank(&self, s: &[usize]) -> usize {
        debug_assert_eq!(s.len(), self.p);
        let mut r = 0;
        let mut next = 0;
        for (i, &si) in s.iter().enumerate() {
            for x in next..si {
                r += binomial(self.n - 1 - x, self.p - 1 - i);
            }
            next = si + 1;
        }
        r
    }
}

/// Sign of `e_m ∧ e_S` relative to the sorted wedge of `S ∪ {m}`: zero when
/// `m ∈ S`, otherwise `(-1)^{#{s ∈ S : s < m}}`.
pub fn wedge_sign(m: usize, s: &[usize]) -> i8 {
    if s.contains(&m) {
        return 0;
    }
    if s.iter().filter(|&&x| x < m).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn pivot_first(t: &Tensor3, pivot: Factor) -> Tensor3 {
    match pivot {
        Factor::A => t.clone(),
        Factor::B => t.permute_factors([1, 2, 0]),
        Factor::C => t.permute_factors([2, 0, 1]),
    }
}

/// The matrix of `T^{∧p}` with the given pivot factor. Pivot `B` uses
/// `Λ^p B ⊗ C* -> Λ^{p+1} B ⊗ A` and pivot `C` uses
/// `Λ^p C ⊗ A* -> Λ^{p+1} C ⊗ B` (cyclic order).
pub fn koszul_matrix(t: &Tensor3, p: usize, pivot: Factor) -> Result<RatMatrix> {
    let t = pivot_first(t, pivot);
    let [a, b, c] = t.dims();
    if p >= a {
        return Err(Error::arg("p", format!("need p < {a} (dimension of the pivot factor), got {p}")));
    }
    let source = SubsetBasis::new(a, p);
    let target = SubsetBasis::new(a, p + 1);
    let mut by_i: Vec<Vec<(usize, usize, &Rat)>> = vec![Vec::new(); a];
    for ((i, j, k), v) in t.entries() {
        by_i[i].push((j, k, v));
    }
    let blocks: Vec<Vec<(usize, usize, Rat)>> = source
        .subsets()
        .par_iter()
        .enumerate()
        .map(|(col_s, s)| {
            let mut out = Vec::new();
            let mut joined = Vec::with_capacity(p + 1);
            for (i, entries) in by_i.iter().enumerate() {
                let sign = wedge_sign(i, s);
                if sign == 0 || entries.is_empty() {
                    continue;
                }
                joined.clear();
                joined.extend_from_slice(s);
                let pos = joined.partition_point(|&x| x < i);
                joined.insert(pos, i);
                let row_s = target.rank(&joined);
                for &(j, k, v) in entries {
                    let val = if sign > 0 { v.clone() } else { -v.clone() };
                    out.push((row_s * c + k, col_s * b + j, val));
                }
            }
            out
        })
        .collect();
    let mut m = RatMatrix::zeros(target.len() * c, source.len() * b);
    for block in blocks {
        for (r, col, v) in block {
            m.set(r, col, v);
        }
    }
    Ok(m)
}

/// A certified border-rank lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub tensor_id: String,
    pub p: usize,
    pub restricted_dim: usize,
    pub flattening_rank: usize,
    /// `C(restricted_dim - 1, p)`, the flattening rank of a rank-one tensor.
    pub divisor: usize,
    /// `ceil(flattening_rank / divisor)`.
    pub bound: usize,
    pub notes: String,
}

impl BoundReport {
    /// `bound * divisor >= flattening_rank > (bound - 1) * divisor`.
    pub fn is_consistent(&self) -> bool {
        self.divisor > 0
            && self.bound * self.divisor >= self.flattening_rank
            && (self.bound == 0 || self.flattening_rank > (self.bound - 1) * self.divisor)
    }
}

/// Border-rank lower bound from `T^{∧p}_{A'}`, where `A'` is the image of the
/// optional restriction `A -> A'`.
pub fn koszul_bound(t: &Tensor3, p: usize, restriction: Option<&RatMatrix>, tensor_id: &str) -> Result<BoundReport> {
    let (restricted, notes) = match restriction {
        Some(r) => {
            if r.cols() != t.dim(Factor::A) {
                return Err(Error::dims("restriction columns", t.dim(Factor::A), r.cols()));
            }
            if r.rank() != r.rows() {
                return Err(Error::arg("restriction", "must have full row rank"));
            }
            (
                apply_factor_map(t, Factor::A, r)?,
                format!("restricted A: {} -> {}", t.dim(Factor::A), r.rows()),
            )
        }
        None => (t.clone(), "no restriction".to_string()),
    };
    let dim = restricted.dim(Factor::A);
    if dim == 0 || p >= dim {
        return Err(Error::arg("p", format!("need p < {dim} (restricted dimension), got {p}")));
    }
    let flattening_rank = koszul_matrix(&restricted, p, Factor::A)?.rank();
    let divisor = binomial(dim - 1, p);
    Ok(BoundReport {
        tensor_id: tensor_id.to_string(),
        p,
        restricted_dim: dim,
        flattening_rank,
        divisor,
        bound: flattening_rank.div_ceil(divisor),
        notes,
    })
}

/// `φ : C^{n^2} -> C^{2n-1}`, `x^i_j -> e_{i+j-1}`; 0-based, column `i*n + j`
/// goes to row `i + j`.
pub fn phi_restriction(n: usize) -> Result<RatMatrix> {
    if n == 0 {
        return Err(Error::arg("n", "must be at least 1"));
    }
    let mut m = RatMatrix::zeros(2 * n - 1, n * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i + j, i * n + j, Rat::from_integer(1.into()));
        }
    }
    Ok(m)
}

/// Rank of `T^{∧(n-1)}_{A'}` for the staircase tensor, the block that the
/// φ-restricted flattening of `M<n>` (or its reduced variant) repeats `n`
/// times.
pub fn mm_koszul_rank_factored(n: usize, reduced: bool) -> Result<usize> {
    if n < 2 {
        return Err(Error::arg("n", "must be at least 2"));
    }
    Ok(koszul_matrix(&staircase_tensor(n, reduced)?, n - 1, Factor::A)?.rank())
}

/// Intermediate values of the matrix-multiplication bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MmBound {
    pub n: usize,
    pub p: usize,
    pub restricted_dim: usize,
    pub staircase_rank_reduced: usize,
    pub staircase_rank_full: usize,
    pub flattening_rank_reduced: usize,
    pub divisor: usize,
    pub reduced_bound: usize,
    pub bound: usize,
}

/// Runs the full pipeline: factored Koszul rank of the reduced tensor, the
/// resulting bound for `M^red<n>`, plus one for the border substitution step.
pub fn mm_bound_pipeline(n: usize) -> Result<MmBound> {
    let reduced = mm_koszul_rank_factored(n, true)?;
    let full = mm_koszul_rank_factored(n, false)?;
    let divisor = binomial(2 * n - 2, n - 1);
    let flattening_rank_reduced = n * reduced;
    let reduced_bound = flattening_rank_reduced.div_ceil(divisor);
    Ok(MmBound {
        n,
        p: n - 1,
        restricted_dim: 2 * n - 1,
        staircase_rank_reduced: reduced,
        staircase_rank_full: full,
        flattening_rank_reduced,
        divisor,
        reduced_bound,
        bound: reduced_bound + 1,
    })
}

/// `ceil(n * rank_factored / C(2n-2, n-1)) + 1`.
pub fn mm_border_rank_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::arg("n", "must be at least 2"));
    }
    let divisor = binomial(2 * n - 2, n - 1);
    Ok((n * mm_koszul_rank_factored(n, true)?).div_ceil(divisor) + 1)
}
