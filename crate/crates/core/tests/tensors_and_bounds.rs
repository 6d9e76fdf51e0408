mod common;

use brank::algebra::{rat, Rat, RatMatrix};
use brank::catalog::osculating_curves;
use brank::degeneration::verify_algorithm;
use brank::io::{parse_tensor, write_tensor};
use brank::koszul::{
    binomial, koszul_bound, koszul_matrix, mm_border_rank_bound, mm_bound_pipeline, mm_koszul_rank_factored,
    phi_restriction,
};
use brank::substitution::{aft_reduce, reassemble, slices};
use brank::tensor::{
    apply_factor_map, cw_tensor, flattening_ranks, mm_tensor, random_rank_one, random_rank_r, reduced_mm,
    segre_bud_point, Factor, Tensor3,
};
use common::{random_vec, subsets};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_tensor(seed: u64) -> Tensor3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims = [rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=4)];
    let mut t = Tensor3::zeros(dims);
    for _ in 0..rng.gen_range(0..=12) {
        let idx = (rng.gen_range(0..dims[0]), rng.gen_range(0..dims[1]), rng.gen_range(0..dims[2]));
        t.set(idx, Rat::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into()));
    }
    t
}

/// Random invertible `n x n` matrix: unit lower times unit upper triangular,
/// times a random permutation.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let mut l = RatMatrix::identity(n);
    let mut u = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, rat(rng.gen_range(-2..=2)));
            u.set(j, i, rat(rng.gen_range(-2..=2)));
        }
        u.set(i, i, rat(rng.gen_range(1..=3)));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut p = RatMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, Rat::one());
    }
    l.matmul(&u).unwrap().matmul(&p).unwrap()
}

fn transform_all(t: &Tensor3, maps: &[RatMatrix; 3]) -> Tensor3 {
    let mut out = t.clone();
    for (f, m) in Factor::ALL.into_iter().zip(maps) {
        out = apply_factor_map(&out, f, m).unwrap();
    }
    out
}

/// `T^{∧p}_A` straight from the definition: `e_S ⊗ β_j -> sum_{i,k} t_ijk
/// (e_i ∧ e_S) ⊗ c_k`, with the wedge sign from counting transpositions.
fn koszul_by_definition(t: &Tensor3, p: usize) -> Vec<Vec<Rat>> {
    let [a, b, c] = t.dims();
    let src = subsets(a, p);
    let dst = subsets(a, p + 1);
    let mut m = vec![vec![Rat::zero(); src.len() * b]; dst.len() * c];
    for (col_s, s) in src.iter().enumerate() {
        for ((i, j, k), v) in t.entries() {
            if s.contains(&i) {
                continue;
            }
            let mut word = vec![i];
            word.extend(s);
            let mut sign = 1i64;
            for x in 0..word.len() {
                for y in 0..word.len() - 1 - x {
                    if word[y] > word[y + 1] {
                        word.swap(y, y + 1);
                        sign = -sign;
                    }
                }
            }
            let row_s = dst.iter().position(|d| *d == word).unwrap();
            m[row_s * c + k][col_s * b + j] += v * rat(sign);
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn koszul_matrix_matches_definition(seed in any::<u64>()) {
        let t = random_tensor(seed);
        for p in 0..t.dim(Factor::A) {
            let m = koszul_matrix(&t, p, Factor::A).unwrap();
            prop_assert_eq!(m.to_dense(), koszul_by_definition(&t, p));
        }
    }

    #[test]
    fn koszul_rank_is_gl_invariant(seed in any::<u64>()) {
        let t = random_tensor(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let maps = t.dims().map(|n| random_invertible(&mut rng, n));
        let g = transform_all(&t, &maps);
        for p in 0..t.dim(Factor::A).min(3) {
            prop_assert_eq!(
                koszul_matrix(&t, p, Factor::A).unwrap().rank(),
                koszul_matrix(&g, p, Factor::A).unwrap().rank()
            );
        }
        prop_assert_eq!(flattening_ranks(&t), flattening_ranks(&g));
    }

    #[test]
    fn slices_round_trip(seed in any::<u64>()) {
        let t = random_tensor(seed);
        for f in Factor::ALL {
            prop_assert_eq!(reassemble(&slices(&t, f)).unwrap(), t.clone());
        }
    }

    #[test]
    fn aft_with_zero_lambdas_then_reinsertion(seed in any::<u64>()) {
        let t = random_tensor(seed);
        for f in Factor::ALL {
            let dec = slices(&t, f);
            let Some(pivot) = dec.slices.iter().position(|m| m.nnz() > 0) else { continue };
            let zeros = vec![Rat::zero(); t.dim(f) - 1];
            let reduced = aft_reduce(&t, f, pivot, &zeros).unwrap();
            let mut back = slices(&reduced, f);
            back.slices.insert(pivot, dec.slices[pivot].clone());
            prop_assert_eq!(reassemble(&back).unwrap(), t.clone());
        }
    }

    #[test]
    fn tensor_json_round_trip(seed in any::<u64>()) {
        let t = random_tensor(seed);
        let text = write_tensor(&t);
        let back = parse_tensor(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(write_tensor(&back), text);
    }
}

#[test]
fn soundness_on_random_low_rank_tensors() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..100u64 {
        let dims = [rng.gen_range(2..=5), rng.gen_range(1..=5), rng.gen_range(1..=5)];
        let r = rng.gen_range(1..=6);
        let t = random_rank_r(dims, r, 1000 + trial);
        for p in 0..dims[0] {
            let b = koszul_bound(&t, p, None, "random").unwrap();
            assert!(b.is_consistent());
            assert!(b.bound <= r, "trial {trial}: {b:?}, r = {r}");
        }
        // a random full-rank restriction of A
        if dims[0] >= 3 {
            let k = dims[0] - 1;
            let mut m = RatMatrix::zeros(k, dims[0]);
            for i in 0..k {
                m.set(i, i, Rat::one());
                m.set(i, dims[0] - 1, rat(rng.gen_range(-2..=2)));
            }
            for p in 0..k {
                let b = koszul_bound(&t, p, Some(&m), "restricted").unwrap();
                assert!(b.is_consistent() && b.bound <= r, "trial {trial}: {b:?}");
            }
        }
    }
}

#[test]
fn rank_one_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..200 {
        let p = 1 + trial % 3;
        let dims = [2 * p + 1, rng.gen_range(1..=3), rng.gen_range(1..=3)];
        let t = random_rank_one(dims, &mut rng).tensor();
        assert_eq!(koszul_matrix(&t, p, Factor::A).unwrap().rank(), binomial(2 * p, p), "trial {trial}");
    }
}

#[test]
fn restricted_flattening_factors_through_the_staircase() {
    for n in [2, 3] {
        let restricted = apply_factor_map(&reduced_mm(n).unwrap(), Factor::A, &phi_restriction(n).unwrap()).unwrap();
        let full = koszul_matrix(&restricted, n - 1, Factor::A).unwrap().rank();
        assert_eq!(full, n * mm_koszul_rank_factored(n, true).unwrap());
        let unreduced = apply_factor_map(&mm_tensor(n, n, n).unwrap(), Factor::A, &phi_restriction(n).unwrap()).unwrap();
        let full = koszul_matrix(&unreduced, n - 1, Factor::A).unwrap().rank();
        assert_eq!(full, n * mm_koszul_rank_factored(n, false).unwrap());
    }
}

#[test]
fn pipeline_adds_one_to_the_reduced_bound() {
    for n in 2..=4 {
        let b = mm_bound_pipeline(n).unwrap();
        let direct = koszul_bound(&reduced_mm(n).unwrap(), n - 1, Some(&phi_restriction(n).unwrap()), "reduced").unwrap();
        assert!(direct.is_consistent());
        assert_eq!(direct.bound, b.reduced_bound);
        assert_eq!(b.bound, b.reduced_bound + 1);
        assert_eq!(mm_border_rank_bound(n).unwrap(), b.bound);
    }
}

#[test]
fn entry_counts() {
    for n in 1..=4 {
        let t = mm_tensor(n, n, n).unwrap();
        assert_eq!(t.nnz(), n * n * n);
        assert!(t.entries().all(|(_, v)| v.is_one()));
        if n >= 2 {
            assert_eq!(reduced_mm(n).unwrap().nnz(), n * n * n - n);
        }
    }
}

#[test]
fn cw_tensor_is_symmetric() {
    for q in 1..=4 {
        let t = cw_tensor(q).unwrap();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert_eq!(t.permute_factors(perm), t);
        }
    }
}

#[test]
fn invertible_maps_preserve_flattening_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in [mm_tensor(2, 2, 2).unwrap(), reduced_mm(2).unwrap(), cw_tensor(2).unwrap(), random_rank_r([3, 4, 2], 2, 9)] {
        let maps = t.dims().map(|n| random_invertible(&mut rng, n));
        assert_eq!(flattening_ranks(&transform_all(&t, &maps)), flattening_ranks(&t));
    }
}

#[test]
fn bud_points_lie_in_osculating_limits() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for r in 1..=4 {
        for _ in 0..3 {
            let d = [rng.gen_range(2..=3), rng.gen_range(2..=3), rng.gen_range(2..=3)];
            let rows = |rng: &mut ChaCha8Rng, n: usize| (0..r).map(|_| random_vec(rng, n)).collect::<Vec<_>>();
            let (a, b, c) = (rows(&mut rng, d[0]), rows(&mut rng, d[1]), rows(&mut rng, d[2]));
            let target = segre_bud_point(r, &a, &b, &c).unwrap();
            let family = osculating_curves(&a, &b, &c).unwrap();
            let v = verify_algorithm(&family, &target).unwrap();
            assert!(v.contains_target && v.e0_dim == r, "r = {r}");
        }
    }
}
