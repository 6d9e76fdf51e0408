//! Independent check of limit schemes through their dual spaces.
//!
//! The evaluation functionals at `r` points span an `r`-dimensional space of
//! functionals on polynomials of degree `<= d` for generic `t`. Its limit is
//! read off order by order: at order `s`, the lowest-order coefficients of all
//! combinations `sum_j c_j(t) ev_j(t)` with polynomial `c_j` of degree `<= s`
//! whose terms below `t^s` cancel. The limit functionals annihilate exactly
//! the limit ideal, so the quotient by `m^k` has dimension equal to the
//! dimension of the limit functionals supported on monomials of degree `< k`.
//!
//! Only dense Gaussian elimination over `Q` is used here.

#![allow(dead_code)]

use brank::algebra::{LaurentVec, Rat};
use num_traits::{One, Zero};

/// Dense polynomial in `t`, lowest degree first.
type TPoly = Vec<Rat>;

fn tpoly_mul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn exponents(m: usize, d: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for e in &all {
            let used: usize = e.iter().sum();
            for k in 0..=d - used {
                let mut f = e.clone();
                f.push(k);
                next.push(f);
            }
        }
        all = next;
    }
    all
}

/// Row-reduces in place; returns the pivot columns in order.
fn eliminate(rows: &mut Vec<Vec<Rat>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn rank(mut rows: Vec<Vec<Rat>>, cols: usize) -> usize {
    eliminate(&mut rows, cols).len()
}

/// Limit at `t = 0` of the span of the evaluation functionals on polynomials
/// of degree `<= d`, with the monomial exponents used as coordinates.
pub fn limit_functionals(points: &[LaurentVec], d: usize) -> (Vec<Vec<usize>>, Vec<Vec<Rat>>) {
    let m = points[0].len();
    let monos = exponents(m, d);
    let n = monos.len();
    let r = points.len();
    // ev[j][mono] as a dense polynomial in t
    let ev: Vec<Vec<TPoly>> = points
        .iter()
        .map(|p| {
            let coords: Vec<TPoly> = p
                .0
                .iter()
                .map(|x| {
                    let deg = x.degree().unwrap_or(0).max(0) as usize;
                    let mut v = vec![Rat::zero(); deg + 1];
                    for (e, c) in x.terms() {
                        assert!(*e >= 0, "points must be polynomial");
                        v[*e as usize] = c.clone();
                    }
                    v
                })
                .collect();
            monos
                .iter()
                .map(|e| {
                    let mut acc: TPoly = vec![Rat::one()];
                    for (x, &k) in coords.iter().zip(e) {
                        for _ in 0..k {
                            acc = tpoly_mul(&acc, x);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let coeff = |j: usize, mono: usize, order: usize| -> Rat {
        ev[j][mono].get(order).cloned().unwrap_or_else(Rat::zero)
    };
    for s in 0..=64 {
        // unknown c_{j,l} t^l contributes t^{l+o} coeff(j, ., o)
        let cols = (s + 1) * n;
        let mut rows = Vec::new();
        for j in 0..r {
            for l in 0..=s {
                let mut row = vec![Rat::zero(); cols];
                for order in l..=s {
                    for mono in 0..n {
                        row[order * n + mono] = coeff(j, mono, order - l);
                    }
                }
                rows.push(row);
            }
        }
        let pivots = eliminate(&mut rows, cols);
        let top: Vec<Vec<Rat>> = rows
            .iter()
            .zip(&pivots)
            .filter(|(_, &p)| p >= s * n)
            .map(|(row, _)| row[s * n..].to_vec())
            .collect();
        if top.len() == r {
            return (monos, top);
        }
        assert!(top.len() < r);
    }
    panic!("limit functionals did not stabilise");
}

/// Local Hilbert function and length of the limit scheme, from the dual side.
pub fn dual_hilbert_function(points: &[LaurentVec]) -> (usize, Vec<usize>) {
    let r = points.len();
    let (monos, funcs) = limit_functionals(points, r);
    // functionals vanishing on m^k: the part of the limit space supported on
    // monomials of degree < k
    let q = |k: usize| -> usize {
        let high: Vec<usize> = (0..monos.len()).filter(|&i| monos[i].iter().sum::<usize>() >= k).collect();
        let rows: Vec<Vec<Rat>> = funcs.iter().map(|f| high.iter().map(|&i| f[i].clone()).collect()).collect();
        funcs.len() - rank(rows, high.len())
    };
    let qs: Vec<usize> = (0..=r + 1).map(q).collect();
    let mut hf: Vec<usize> = qs.windows(2).map(|w| w[1] - w[0]).collect();
    while hf.last() == Some(&0) {
        hf.pop();
    }
    (qs[r + 1], hf)
}
