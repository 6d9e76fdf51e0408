//! Sparse order-3 tensors over Q.
//!
//! Indices are 0-based throughout. A conventional 1-based label `x^i_j` of an
//! `l x m` matrix space is stored at index `(i-1)*m + (j-1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, RatMatrix, Rat};
use crate::error::{Error, Result};

/// One of the three tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    A,
    B,
    C,
}

impl Factor {
    pub const ALL: [Factor; 3] = [Factor::A, Factor::B, Factor::C];

    pub fn index(self) -> usize {
        match self {
            Factor::A => 0,
            Factor::B => 1,
            Factor::C => 2,
        }
    }
}

impl FromStr for Factor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Factor::A),
            "B" | "b" => Ok(Factor::B),
            "C" | "c" => Ok(Factor::C),
            _ => Err(Error::arg("factor", format!("expected A, B or C, got `{s}`"))),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

pub type Index3 = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    entries: BTreeMap<Index3, Rat>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(dims: [usize; 3], entries: impl IntoIterator<Item = (Index3, Rat)>) -> Self {
        let mut t = Self::zeros(dims);
        for (idx, v) in entries {
            t.add_to(idx, &v);
        }
        t
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn dim(&self, f: Factor) -> usize {
        self.dims[f.index()]
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index3, &Rat)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    fn check(&self, (i, j, k): Index3) {
        assert!(
            i < self.dims[0] && j < self.dims[1] && k < self.dims[2],
            "index ({i}, {j}, {k}) outside dims {:?}",
            self.dims
        );
    }

    pub fn get(&self, idx: Index3) -> Rat {
        self.entries.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, idx: Index3, v: Rat) {
        self.check(idx);
        if v.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, v);
        }
    }

    pub fn add_to(&mut self, idx: Index3, v: &Rat) {
        self.check(idx);
        let e = self.entries.entry(idx).or_insert_with(Rat::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&idx);
        }
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        if self.dims != other.dims {
            return Err(Error::arg("tensor", format!("dims {:?} vs {:?}", self.dims, other.dims)));
        }
        let mut out = self.clone();
        for (idx, v) in other.entries() {
            out.add_to(idx, v);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> Tensor3 {
        if s.is_zero() {
            return Tensor3::zeros(self.dims);
        }
        Tensor3 {
            dims: self.dims,
            entries: self.entries.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    /// Reorders the factors: factor `f` of the result is factor `perm[f]` of
    /// `self`.
    pub fn permute_factors(&self, perm: [usize; 3]) -> Tensor3 {
        let mut sorted = perm;
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2], "not a permutation");
        let dims = [self.dims[perm[0]], self.dims[perm[1]], self.dims[perm[2]]];
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j, k), v)| {
                let old = [i, j, k];
                ((old[perm[0]], old[perm[1]], old[perm[2]]), v.clone())
            })
            .collect();
        Tensor3 { dims, entries }
    }

    /// Row-major vectorisation, index `(i*b + j)*c + k`.
    pub fn flatten(&self) -> Vec<Rat> {
        let [_, b, c] = self.dims;
        let mut v = vec![Rat::zero(); self.dims.iter().product()];
        for (&(i, j, k), x) in &self.entries {
            v[(i * b + j) * c + k] = x.clone();
        }
        v
    }

    pub fn from_flat(dims: [usize; 3], v: &[Rat]) -> Result<Tensor3> {
        let n: usize = dims.iter().product();
        if v.len() != n {
            return Err(Error::dims("flattened tensor", n, v.len()));
        }
        let [_, b, c] = dims;
        Ok(Tensor3::from_entries(
            dims,
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(n, x)| ((n / (b * c), (n / c) % b, n % c), x.clone())),
        ))
    }
}

/// `a ⊗ b ⊗ c` with all three vectors nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneTerm {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
}

impl RankOneTerm {
    pub fn new(a: Vec<Rat>, b: Vec<Rat>, c: Vec<Rat>) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
            if v.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector(format!("rank-one factor {name}")));
            }
        }
        Ok(Self { a, b, c })
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.a.len(), self.b.len(), self.c.len()]
    }

    pub fn tensor(&self) -> Tensor3 {
        let mut t = Tensor3::zeros(self.dims());
        for (i, x) in self.a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in self.b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, z) in self.c.iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    t.set((i, j, k), &xy * z);
                }
            }
        }
        t
    }
}

/// `M<l,m,n> = sum x^i_j ⊗ y^j_k ⊗ z^k_i` in `C^{lm} ⊗ C^{mn} ⊗ C^{nl}`.
pub fn mm_tensor(l: usize, m: usize, n: usize) -> Result<Tensor3> {
    if l == 0 || m == 0 || n == 0 {
        return Err(Error::arg("mm_tensor", "all dimensions must be at least 1"));
    }
    let mut t = Tensor3::zeros([l * m, m * n, n * l]);
    for i in 0..l {
        for j in 0..m {
            for k in 0..n {
                t.set((i * m + j, j * n + k, k * l + i), Rat::one());
            }
        }
    }
    Ok(t)
}

/// `M<n>` minus the `n` terms `x^1_n ⊗ y^n_k ⊗ z^k_1`. Dimensions are kept at
/// `n^2` in every factor, so the `x^1_n` slice (index `n-1`) is zero.
pub fn reduced_mm(n: usize) -> Result<Tensor3> {
    if n < 2 {
        return Err(Error::arg("n", "reduced matrix multiplication needs n >= 2"));
    }
    let mut t = mm_tensor(n, n, n)?;
    for k in 0..n {
        t.set((n - 1, (n - 1) * n + k, k * n), Rat::zero());
    }
    Ok(t)
}

/// `M<1,1,n>` pushed through `x^i_j -> e_{i+j-1}`: entry 1 at `(s, k, m)`
/// whenever `s = m + k` (0-based), in dims `(2n-1, n, n)`. The reduced
/// variant drops `(m, k) = (n-1, 0)`.
pub fn staircase_tensor(n: usize, reduced: bool) -> Result<Tensor3> {
    if n == 0 || (reduced && n < 2) {
        return Err(Error::arg("n", "staircase tensor needs n >= 1 (n >= 2 when reduced)"));
    }
    let mut t = Tensor3::zeros([2 * n - 1, n, n]);
    for k in 0..n {
        for m in 0..n {
            if reduced && m == n - 1 && k == 0 {
                continue;
            }
            t.set((m + k, k, m), Rat::one());
        }
    }
    Ok(t)
}

/// The second Coppersmith–Winograd tensor in `(C^{q+2})^{⊗3}`.
pub fn cw_tensor(q: usize) -> Result<Tensor3> {
    if q == 0 {
        return Err(Error::arg("q", "must be at least 1"));
    }
    let d = q + 2;
    let mut t = Tensor3::zeros([d, d, d]);
    for j in 1..=q {
        t.set((0, j, j), Rat::one());
        t.set((j, 0, j), Rat::one());
        t.set((j, j, 0), Rat::one());
    }
    t.set((0, 0, q + 1), Rat::one());
    t.set((0, q + 1, 0), Rat::one());
    t.set((q + 1, 0, 0), Rat::one());
    Ok(t)
}

/// Contracts one factor with `map` (new_dim x old_dim).
pub fn apply_factor_map(t: &Tensor3, factor: Factor, map: &RatMatrix) -> Result<Tensor3> {
    let f = factor.index();
    if map.cols() != t.dims[f] {
        return Err(Error::dims(format!("factor map on {factor}"), t.dims[f], map.cols()));
    }
    let mut dims = t.dims;
    dims[f] = map.rows();
    let mut columns: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); map.cols()];
    for (r, c, v) in map.entries() {
        columns[c].push((r, v));
    }
    let mut out = Tensor3::zeros(dims);
    for (&idx, v) in &t.entries {
        let mut at = [idx.0, idx.1, idx.2];
        for &(r, m) in &columns[at[f]] {
            at[f] = r;
            out.add_to((at[0], at[1], at[2]), &(m * v));
        }
    }
    Ok(out)
}

/// The chosen factor against the tensor product of the other two, in their
/// natural order: A against `(j, k)`, B against `(i, k)`, C against `(i, j)`.
pub fn standard_flattening(t: &Tensor3, factor: Factor) -> RatMatrix {
    let [a, b, c] = t.dims;
    let (rows, cols) = match factor {
        Factor::A => (a, b * c),
        Factor::B => (b, a * c),
        Factor::C => (c, a * b),
    };
    let mut m = RatMatrix::zeros(rows, cols);
    for (&(i, j, k), v) in &t.entries {
        let (r, col) = match factor {
            Factor::A => (i, j * c + k),
            Factor::B => (j, i * c + k),
            Factor::C => (k, i * b + j),
        };
        m.set(r, col, v.clone());
    }
    m
}

/// Ranks of the three standard flattenings.
pub fn flattening_ranks(t: &Tensor3) -> [usize; 3] {
    Factor::ALL.map(|f| standard_flattening(t, f).rank())
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if n == 0 || v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Random rank-one term with small integer entries.
pub fn random_rank_one(dims: [usize; 3], rng: &mut ChaCha8Rng) -> RankOneTerm {
    RankOneTerm {
        a: random_vector(rng, dims[0]),
        b: random_vector(rng, dims[1]),
        c: random_vector(rng, dims[2]),
    }
}

/// Sum of `r` random rank-one terms, entries drawn from `-3..=3`,
/// reproducible from `seed`.
pub fn random_rank_r(dims: [usize; 3], r: usize, seed: u64) -> Tensor3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tensor3::zeros(dims);
    for _ in 0..r {
        let term = random_rank_one(dims, &mut rng).tensor();
        t = t.add(&term).expect("same dims");
    }
    t
}

/// `sum_{i1+i2+i3 <= r-1} a_{i1} ⊗ b_{i2} ⊗ c_{i3}`: a general point of the
/// bud of the Segre variety built from `r` vectors per factor, index 0 being
/// the base point.
pub fn segre_bud_point(r: usize, a_rows: &[Vec<Rat>], b_rows: &[Vec<Rat>], c_rows: &[Vec<Rat>]) -> Result<Tensor3> {
    for (name, rows) in [("a_rows", a_rows), ("b_rows", b_rows), ("c_rows", c_rows)] {
        if rows.len() != r {
            return Err(Error::dims(name, r, rows.len()));
        }
    }
    if r == 0 {
        return Err(Error::arg("r", "must be at least 1"));
    }
    let dims = [a_rows[0].len(), b_rows[0].len(), c_rows[0].len()];
    for (name, rows, d) in [("a_rows", a_rows, dims[0]), ("b_rows", b_rows, dims[1]), ("c_rows", c_rows, dims[2])] {
        if let Some(bad) = rows.iter().find(|v| v.len() != d) {
            return Err(Error::dims(name, d, bad.len()));
        }
    }
    let mut t = Tensor3::zeros(dims);
    for i1 in 0..r {
        for i2 in 0..r - i1 {
            for i3 in 0..r - i1 - i2 {
                let term = RankOneTerm {
                    a: a_rows[i1].clone(),
                    b: b_rows[i2].clone(),
                    c: c_rows[i3].clone(),
                };
                t = t.add(&term.tensor())?;
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(t: &Tensor3) -> bool {
        t.entries().all(|(_, v)| v.is_one())
    }

    fn e(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    }

    #[test]
    fn matrix_multiplication_tensors() {
        let t = mm_tensor(1, 1, 1).unwrap();
        assert_eq!(t.dims(), [1, 1, 1]);
        assert_eq!(t.nnz(), 1);
        let t = mm_tensor(2, 2, 2).unwrap();
        assert_eq!((t.dims(), t.nnz()), ([4, 4, 4], 8));
        assert!(ones(&t));
        let t = mm_tensor(2, 3, 4).unwrap();
        assert_eq!((t.dims(), t.nnz()), ([6, 12, 8], 24));
        assert_eq!(flattening_ranks(&mm_tensor(3, 3, 3).unwrap()), [9, 9, 9]);
        assert!(mm_tensor(0, 2, 2).is_err());
    }

    #[test]
    fn reduced_matrix_multiplication() {
        let t = reduced_mm(2).unwrap();
        assert_eq!(t.nnz(), 6);
        assert_eq!(standard_flattening(&t, Factor::A).rank(), 3);
        let t = reduced_mm(3).unwrap();
        assert_eq!(t.nnz(), 24);
        assert_eq!(standard_flattening(&t, Factor::A).rank(), 8);
        assert!(reduced_mm(1).is_err());
    }

    #[test]
    fn staircase() {
        let t = staircase_tensor(2, false).unwrap();
        let idx: Vec<Index3> = t.entries().map(|(i, _)| i).collect();
        assert_eq!(idx, vec![(0, 0, 0), (1, 0, 1), (1, 1, 0), (2, 1, 1)]);
        let t = staircase_tensor(2, true).unwrap();
        let idx: Vec<Index3> = t.entries().map(|(i, _)| i).collect();
        assert_eq!(idx, vec![(0, 0, 0), (1, 1, 0), (2, 1, 1)]);
        assert_eq!(staircase_tensor(3, true).unwrap().nnz(), 8);
        assert!(staircase_tensor(1, true).is_err());
    }

    #[test]
    fn coppersmith_winograd() {
        let t = cw_tensor(1).unwrap();
        assert_eq!((t.dims(), t.nnz()), ([3, 3, 3], 6));
        let t = cw_tensor(2).unwrap();
        assert_eq!(t.nnz(), 9);
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert_eq!(t.permute_factors(perm), t);
        }
        assert_eq!(flattening_ranks(&t), [4, 4, 4]);
        for q in 1..=4 {
            assert_eq!(flattening_ranks(&cw_tensor(q).unwrap()), [q + 2; 3]);
        }
        assert!(cw_tensor(0).is_err());
    }

    #[test]
    fn factor_maps() {
        let t = random_rank_r([3, 2, 4], 2, 7);
        for f in Factor::ALL {
            let id = RatMatrix::identity(t.dim(f));
            assert_eq!(apply_factor_map(&t, f, &id).unwrap(), t);
        }
        let wrong = RatMatrix::identity(5);
        assert!(apply_factor_map(&t, Factor::A, &wrong).is_err());
    }

    #[test]
    fn flattenings_of_rank_one() {
        let term = RankOneTerm::new(
            vec![rat(1), rat(2)],
            vec![rat(0), rat(1), rat(-1)],
            vec![rat(3), rat(0)],
        )
        .unwrap();
        let t = term.tensor();
        assert_eq!(t.nnz(), 4);
        assert_eq!(flattening_ranks(&t), [1, 1, 1]);
        assert!(RankOneTerm::new(vec![rat(0)], vec![rat(1)], vec![rat(1)]).is_err());
    }

    #[test]
    fn random_tensors() {
        assert!(random_rank_r([3, 3, 3], 0, 1).is_zero());
        assert_eq!(flattening_ranks(&random_rank_r([3, 3, 3], 1, 2)), [1, 1, 1]);
        for r in flattening_ranks(&random_rank_r([3, 3, 3], 3, 3)) {
            assert!(r <= 3);
        }
        assert_eq!(random_rank_r([2, 3, 4], 2, 11), random_rank_r([2, 3, 4], 2, 11));
    }

    #[test]
    fn flat_round_trip() {
        let t = random_rank_r([2, 3, 4], 2, 5);
        assert_eq!(Tensor3::from_flat(t.dims(), &t.flatten()).unwrap(), t);
    }

    #[test]
    fn bud_points() {
        let rows = |n: usize| (0..2).map(|i| e(n, i)).collect::<Vec<_>>();
        let one = segre_bud_point(1, &rows(2)[..1], &rows(2)[..1], &rows(2)[..1]).unwrap();
        assert_eq!(one, Tensor3::from_entries([2, 2, 2], [((0, 0, 0), rat(1))]));
        let two = segre_bud_point(2, &rows(2), &rows(2), &rows(2)).unwrap();
        let expected = Tensor3::from_entries(
            [2, 2, 2],
            [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)].map(|i| (i, rat(1))),
        );
        assert_eq!(two, expected);
        assert!(segre_bud_point(2, &rows(2)[..1], &rows(2), &rows(2)).is_err());
    }
}
