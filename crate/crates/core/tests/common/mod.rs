#![allow(dead_code)]

pub mod jet;

use brank::algebra::{rat, LaurentPoly, LaurentVec, Rat};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    rat(rng.gen_range(lo..=hi))
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..n).map(|_| small_rat(rng, -2, 2)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> LaurentPoly {
    let mut terms = Vec::new();
    for e in lo..=hi {
        if rng.gen_bool(0.5) {
            terms.push((e, small_rat(rng, -2, 2)));
        }
    }
    LaurentPoly::from_terms(terms)
}

/// Generators that collide at `t = 0`: combinations of a few base vectors
/// with polynomial coefficients, plus a small higher-order perturbation.
pub fn colliding_family(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Vec<LaurentVec> {
    let bases = rng.gen_range(1..=r);
    let base: Vec<Vec<Rat>> = (0..bases).map(|_| random_vec(rng, n)).collect();
    (0..r)
        .map(|_| {
            let mut v = LaurentVec::zeros(n);
            for b in &base {
                let c = random_poly(rng, 0, 2);
                v.add_assign_scaled(&LaurentVec::constant(b), &c);
            }
            let k = rng.gen_range(1..=3);
            let extra = random_vec(rng, n);
            v.add_assign_scaled(&LaurentVec::constant(&extra), &LaurentPoly::monomial(Rat::one(), k));
            let shift = rng.gen_range(-1..=1);
            v.shift(shift)
        })
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn grow(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            grow(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // inserting at `pos` moves the new largest element past `len - pos` others
            let swaps = p.len() - pos;
            out.push((q, even == (swaps % 2 == 0)));
        }
    }
    out
}

/// Plücker coordinates of `vectors` (Leibniz expansion of each maximal minor).
pub fn wedge<T: Clone>(
    vectors: &[Vec<T>],
    zero: T,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
) -> Vec<T> {
    let k = vectors.len();
    let n = vectors[0].len();
    let perms = permutations(k);
    subsets(n, k)
        .into_iter()
        .map(|cols| {
            let mut acc = zero.clone();
            for (p, even) in &perms {
                let mut term: Option<T> = None;
                for (row, &c) in p.iter().enumerate() {
                    let x = &vectors[row][cols[c]];
                    term = Some(match term {
                        None => x.clone(),
                        Some(t) => mul(&t, x),
                    });
                }
                let term = term.expect("k >= 1");
                acc = if *even { add(&acc, &term) } else { add(&acc, &neg(&term)) };
            }
            acc
        })
        .collect()
}

pub fn rat_wedge(vectors: &[Vec<Rat>]) -> Vec<Rat> {
    wedge(vectors, Rat::zero(), |a, b| a * b, |a, b| a + b, |a| -a)
}

pub fn laurent_wedge(vectors: &[LaurentVec]) -> LaurentVec {
    let rows: Vec<Vec<LaurentPoly>> = vectors.iter().map(|v| v.0.clone()).collect();
    LaurentVec(wedge(&rows, LaurentPoly::zero(), |a, b| a * b, |a, b| a + b, |a| -a))
}

/// Whether two vectors are nonzero multiples of each other.
pub fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[i].is_zero() {
        return false;
    }
    let s = &b[i] / &a[i];
    a.iter().zip(b).all(|(x, y)| &(x * &s) == y)
}
