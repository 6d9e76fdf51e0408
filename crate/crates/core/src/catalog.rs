//! Worked examples: explicit curve families, targets and point
//! configurations.
//!
//! Basis vectors labelled `a_1, ..., a_4` in the usual 1-based notation are
//! stored at indices `0..4`.

use num_traits::One;

use crate::algebra::{LaurentPoly, LaurentVec, Rat};
use crate::degeneration::{CurveFamily, RankOneCurve};
use crate::error::{Error, Result};
use crate::schemes::ParamPoints;
use crate::tensor::Tensor3;

fn tp(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Rat::from_integer(c.into()), e)
}

fn lvec(d: usize, terms: &[(usize, LaurentPoly)]) -> LaurentVec {
    let mut v = LaurentVec::zeros(d);
    for (i, p) in terms {
        v.0[*i] = &v.0[*i] + p;
    }
    v
}

fn cube(v: LaurentVec) -> RankOneCurve {
    RankOneCurve {
        a: v.clone(),
        b: v.clone(),
        c: v,
    }
}

/// Four symmetric curves in `(C^4)^{⊗3}` through `a_1 ⊗ b_1 ⊗ c_1`:
/// the base point, `(a_1 + t a_2 + t^2 a_4)^{⊗3}`, `(a_1 + t a_3)^{⊗3}` and
/// `(a_1 - t(a_2 + a_3))^{⊗3}`.
pub fn four_curves() -> CurveFamily {
    let one = LaurentPoly::one();
    let curves = vec![
        cube(lvec(4, &[(0, one.clone())])),
        cube(lvec(4, &[(0, one.clone()), (1, tp(1, 1)), (3, tp(1, 2))])),
        cube(lvec(4, &[(0, one.clone()), (2, tp(1, 1))])),
        cube(lvec(4, &[(0, one), (1, tp(-1, 1)), (2, tp(-1, 1))])),
    ];
    CurveFamily::new([4, 4, 4], curves).expect("consistent dims")
}

/// `a_1⊗b_1⊗c_4 + a_1⊗b_4⊗c_1 + a_4⊗b_1⊗c_1 + sum over permutations σ of
/// a_σ(1)⊗b_σ(2)⊗c_σ(3)`.
pub fn four_curve_target() -> Tensor3 {
    let mut t = Tensor3::zeros([4, 4, 4]);
    for idx in [(0, 0, 3), (0, 3, 0), (3, 0, 0)] {
        t.add_to(idx, &Rat::one());
    }
    for idx in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        t.add_to(idx, &Rat::one());
    }
    t
}

/// The four curves in the affine chart where the `a_1⊗b_1⊗c_1` coordinate is
/// one: `(0,0,0)`, `(t,0,t^2)`, `(0,t,0)`, `(-t,-t,0)`.
pub fn four_points_space() -> ParamPoints {
    let z = LaurentPoly::zero;
    let pts = vec![
        LaurentVec(vec![z(), z(), z()]),
        LaurentVec(vec![tp(1, 1), z(), tp(1, 2)]),
        LaurentVec(vec![z(), tp(1, 1), z()]),
        LaurentVec(vec![tp(-1, 1), tp(-1, 1), z()]),
    ];
    ParamPoints::new(3, pts).expect("valid configuration")
}

/// [`four_points_space`] with the third coordinate eliminated through
/// `y_3 = y_1 (y_2 + t)`.
pub fn four_points_plane() -> ParamPoints {
    let z = LaurentPoly::zero;
    let pts = vec![
        LaurentVec(vec![z(), z()]),
        LaurentVec(vec![tp(1, 1), z()]),
        LaurentVec(vec![z(), tp(1, 1)]),
        LaurentVec(vec![tp(-1, 1), tp(-1, 1)]),
    ];
    ParamPoints::new(2, pts).expect("valid configuration")
}

/// The Coppersmith–Winograd curves in the chart `a_0 = 1`, in `q + 1`
/// coordinates: `t e_i` for `i = 1..q`, `t^2 (e_1 + ... + e_q)` and
/// `t^3 e_{q+1}`.
pub fn cw_points_full(q: usize) -> Result<ParamPoints> {
    if q == 0 {
        return Err(Error::arg("q", "must be at least 1"));
    }
    let d = q + 1;
    let mut pts: Vec<LaurentVec> = (0..q).map(|i| lvec(d, &[(i, tp(1, 1))])).collect();
    pts.push(lvec(d, &(0..q).map(|i| (i, tp(1, 2))).collect::<Vec<_>>()));
    pts.push(lvec(d, &[(q, tp(1, 3))]));
    ParamPoints::new(d, pts)
}

/// The reduced configuration in `q` coordinates: the origin, `t e_i` for
/// `i = 1..q` and `t^2 (e_1 + ... + e_q)`.
pub fn cw_points(q: usize) -> Result<ParamPoints> {
    if q == 0 {
        return Err(Error::arg("q", "must be at least 1"));
    }
    let mut pts = vec![LaurentVec::zeros(q)];
    pts.extend((0..q).map(|i| lvec(q, &[(i, tp(1, 1))])));
    pts.push(lvec(q, &(0..q).map(|i| (i, tp(1, 2))).collect::<Vec<_>>()));
    ParamPoints::new(q, pts)
}

fn osculating_factor(rows: &[Vec<Rat>], lambda: &Rat) -> LaurentVec {
    let d = rows[0].len();
    let mut v = LaurentVec::zeros(d);
    let mut scale = Rat::one();
    for (i, row) in rows.iter().enumerate() {
        for (x, c) in v.0.iter_mut().zip(row) {
            *x = &*x + &LaurentPoly::monomial(c * &scale, i as i64);
        }
        scale *= lambda;
    }
    v
}

/// `r` curves `x_j(t) = γ(j t)`, `j = 0..r-1`, along
/// `γ(s) = (sum_i s^i a_i) ⊗ (sum_i s^i b_i) ⊗ (sum_i s^i c_i)`. Their limit
/// plane is spanned by the first `r` Taylor coefficients of `γ`, which sum to
/// [`crate::tensor::segre_bud_point`].
pub fn osculating_curves(a_rows: &[Vec<Rat>], b_rows: &[Vec<Rat>], c_rows: &[Vec<Rat>]) -> Result<CurveFamily> {
    let r = a_rows.len();
    if r == 0 || b_rows.len() != r || c_rows.len() != r {
        return Err(Error::arg("rows", "need the same positive number of vectors per factor"));
    }
    let dims = [a_rows[0].len(), b_rows[0].len(), c_rows[0].len()];
    let curves = (0..r)
        .map(|j| {
            let l = Rat::from_integer((j as i64).into());
            RankOneCurve::new(
                osculating_factor(a_rows, &l),
                osculating_factor(b_rows, &l),
                osculating_factor(c_rows, &l),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    CurveFamily::new(dims, curves)
}
