//! Border-rank algorithms as curves of rank-one tensors over `Q[t, 1/t]`.
//!
//! A family of `r` curves `a_i(t) ⊗ b_i(t) ⊗ c_i(t)` spans an `r`-plane `E_t`
//! for generic `t`; the algorithm proves `border rank(T) <= r` when `T` lies in
//! the limit plane `E_0`.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{in_span, limit_subspace, LaurentPoly, LaurentVec, Rat, SubspaceFamily};
use crate::error::{Error, Result};
use crate::tensor::{Index3, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneCurve {
    pub a: LaurentVec,
    pub b: LaurentVec,
    pub c: LaurentVec,
}

impl RankOneCurve {
    pub fn new(a: LaurentVec, b: LaurentVec, c: LaurentVec) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
            if v.is_zero() {
                return Err(Error::ZeroVector(format!("curve factor {name}")));
            }
        }
        Ok(Self { a, b, c })
    }

    /// A curve that does not move.
    pub fn constant(a: &[Rat], b: &[Rat], c: &[Rat]) -> Result<Self> {
        Self::new(LaurentVec::constant(a), LaurentVec::constant(b), LaurentVec::constant(c))
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.a.len(), self.b.len(), self.c.len()]
    }
}

/// Tensor with Laurent polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTensor {
    pub dims: [usize; 3],
    pub entries: BTreeMap<Index3, LaurentPoly>,
}

impl LaurentTensor {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn add_scaled(&mut self, other: &LaurentTensor, s: &LaurentPoly) {
        for (idx, p) in &other.entries {
            let e = self.entries.entry(*idx).or_default();
            *e = &*e + &(p * s);
            if e.is_zero() {
                self.entries.remove(idx);
            }
        }
    }

    /// Row-major, matching [`Tensor3::flatten`].
    pub fn flatten(&self) -> LaurentVec {
        let [_, b, c] = self.dims;
        let mut v = LaurentVec::zeros(self.dims.iter().product());
        for (&(i, j, k), p) in &self.entries {
            v.0[(i * b + j) * c + k] = p.clone();
        }
        v
    }

    /// Value at `t = 0`, or the first entry (in flattened order) with a
    /// negative power of `t`.
    pub fn value_at_zero(&self) -> Result<Tensor3> {
        let [_, b, c] = self.dims;
        let mut t = Tensor3::zeros(self.dims);
        for (&(i, j, k), p) in &self.entries {
            let v = p.valuation().unwrap_or(0);
            if v < 0 {
                return Err(Error::NegativeValuation {
                    index: (i * b + j) * c + k,
                    valuation: v,
                });
            }
            t.set((i, j, k), p.coeff(0));
        }
        Ok(t)
    }
}

/// `a(t) ⊗ b(t) ⊗ c(t)` expanded entrywise.
pub fn curve_tensor(curve: &RankOneCurve) -> LaurentTensor {
    let mut out = LaurentTensor::zeros(curve.dims());
    for (i, x) in curve.a.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in curve.b.0.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let xy = x * y;
            for (k, z) in curve.c.0.iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                out.entries.insert((i, j, k), &xy * z);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    dims: [usize; 3],
    curves: Vec<RankOneCurve>,
}

impl CurveFamily {
    /// Checks shapes only; independence over `Q(t)` is checked when the limit
    /// is taken.
    pub fn new(dims: [usize; 3], curves: Vec<RankOneCurve>) -> Result<Self> {
        for (n, c) in curves.iter().enumerate() {
            for f in 0..3 {
                if c.dims()[f] != dims[f] {
                    return Err(Error::dims(format!("curves[{n}] factor {}", ["a", "b", "c"][f]), dims[f], c.dims()[f]));
                }
            }
        }
        Ok(Self { dims, curves })
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn curves(&self) -> &[RankOneCurve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn subspace_family(&self) -> SubspaceFamily {
        let gens = self.curves.iter().map(|c| curve_tensor(c).flatten()).collect();
        SubspaceFamily::new(self.dims.iter().product(), gens).expect("curve tensors have ambient length")
    }
}

/// Basis of the limit plane `E_0`, as tensors.
pub fn limit_span(family: &CurveFamily) -> Result<Vec<Tensor3>> {
    limit_subspace(&family.subspace_family())?
        .iter()
        .map(|v| Tensor3::from_flat(family.dims, v))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Target `= sum coefficients[i] * basis[i]` for the limit basis.
    Coefficients { coefficients: Vec<String> },
    Refutation { note: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub r: usize,
    pub e0_dim: usize,
    pub contains_target: bool,
    pub certificate: Certificate,
}

/// Decides exactly whether `target` lies in the limit plane of `family`.
pub fn verify_algorithm(family: &CurveFamily, target: &Tensor3) -> Result<Verdict> {
    if target.dims() != family.dims {
        return Err(Error::arg(
            "target",
            format!("dims {:?} do not match curve dims {:?}", target.dims(), family.dims),
        ));
    }
    let basis = limit_subspace(&family.subspace_family())?;
    let (contains_target, certificate) = match in_span(&target.flatten(), &basis)? {
        Some(c) => (
            true,
            Certificate::Coefficients {
                coefficients: c.iter().map(ToString::to_string).collect(),
            },
        ),
        None => (
            false,
            Certificate::Refutation {
                note: format!(
                    "target is not in the span of the {}-dimensional limit plane (inconsistent exact system)",
                    basis.len()
                ),
            },
        ),
    };
    Ok(Verdict {
        r: family.len(),
        e0_dim: basis.len(),
        contains_target,
        certificate,
    })
}

/// `lim_{t->0} sum coeffs_i(t) * curve_i(t)`, which must exist.
pub fn laurent_combination_limit(coeffs: &[LaurentPoly], family: &CurveFamily) -> Result<Tensor3> {
    if coeffs.len() != family.len() {
        return Err(Error::dims("combination coefficients", family.len(), coeffs.len()));
    }
    let mut acc = LaurentTensor::zeros(family.dims);
    for (c, curve) in coeffs.iter().zip(&family.curves) {
        acc.add_scaled(&curve_tensor(curve), c);
    }
    acc.value_at_zero()
}

fn basis_curve(d: usize, terms: &[(usize, LaurentPoly)]) -> LaurentVec {
    let mut v = LaurentVec::zeros(d);
    for (i, p) in terms {
        v.0[*i] = &v.0[*i] + p;
    }
    v
}

fn symmetric_curve(v: LaurentVec) -> RankOneCurve {
    RankOneCurve {
        a: v.clone(),
        b: v.clone(),
        c: v,
    }
}

/// The `q + 2` curves of the symmetric border-rank algorithm for the
/// Coppersmith–Winograd tensor: `(e_0 + t e_i)^{⊗3}` for `i = 1..q`,
/// `(e_0 + t^2 sum_j e_j)^{⊗3}` and `(e_0 + t^3 e_{q+1})^{⊗3}`.
pub fn cw_curves(q: usize) -> Result<CurveFamily> {
    if q == 0 {
        return Err(Error::arg("q", "must be at least 1"));
    }
    let d = q + 2;
    let one = LaurentPoly::one();
    let t = |e: i64| LaurentPoly::monomial(Rat::one(), e);
    let mut curves = Vec::with_capacity(d);
    for i in 1..=q {
        curves.push(symmetric_curve(basis_curve(d, &[(0, one.clone()), (i, t(1))])));
    }
    let mut mid = vec![(0, one.clone())];
    mid.extend((1..=q).map(|j| (j, t(2))));
    curves.push(symmetric_curve(basis_curve(d, &mid)));
    curves.push(symmetric_curve(basis_curve(d, &[(0, one), (q + 1, t(3))])));
    CurveFamily::new([d, d, d], curves)
}

/// Coefficients whose combination of [`cw_curves`] converges to the
/// Coppersmith–Winograd tensor: `t^-2` on the first `q` curves, `-t^-3` on the
/// next and `t^-3 - q t^-2` on the last.
pub fn cw_coefficients(q: usize) -> Vec<LaurentPoly> {
    let mut c = vec![LaurentPoly::monomial(Rat::one(), -2); q];
    c.push(LaurentPoly::monomial(-Rat::one(), -3));
    c.push(LaurentPoly::from_terms([
        (-3, Rat::one()),
        (-2, -Rat::from_integer((q as i64).into())),
    ]));
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rank_of_vectors};
    use crate::tensor::{cw_tensor, RankOneTerm};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn constant_curve_tensor() {
        let c = RankOneCurve::constant(&[rat(1), rat(2)], &[rat(1)], &[rat(0), rat(3)]).unwrap();
        let t = curve_tensor(&c).value_at_zero().unwrap();
        let expected = RankOneTerm::new(vec![rat(1), rat(2)], vec![rat(1)], vec![rat(0), rat(3)]).unwrap().tensor();
        assert_eq!(t, expected);
    }

    #[test]
    fn moving_first_factor() {
        let a = LaurentVec(vec![lp(&[(0, 1)]), lp(&[(1, 1)])]);
        let e0 = LaurentVec(vec![lp(&[(0, 1)]), LaurentPoly::zero()]);
        let c = RankOneCurve::new(a, e0.clone(), e0).unwrap();
        let t = curve_tensor(&c);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.entries[&(0, 0, 0)], lp(&[(0, 1)]));
        assert_eq!(t.entries[&(1, 0, 0)], lp(&[(1, 1)]));
    }

    #[test]
    fn first_cw_curve_expansion() {
        let f = cw_curves(1).unwrap();
        let t = curve_tensor(&f.curves()[0]);
        assert_eq!(t.entries.len(), 8);
        let degrees: Vec<i64> = t.entries.values().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degrees.iter().min(), Some(&0));
        assert_eq!(degrees.iter().max(), Some(&3));
    }

    #[test]
    fn cw_curves_share_base_point() {
        for q in 1..=3 {
            let f = cw_curves(q).unwrap();
            assert_eq!(f.len(), q + 2);
            let base: Vec<Tensor3> = f.curves().iter().map(|c| curve_tensor(c).value_at_zero().unwrap()).collect();
            assert!(base.iter().all(|b| b == &base[0]));
            assert_eq!(base[0].nnz(), 1);
        }
        assert!(cw_curves(0).is_err());
    }

    #[test]
    fn cw_combination_converges_to_cw_tensor() {
        let f = cw_curves(2).unwrap();
        assert_eq!(laurent_combination_limit(&cw_coefficients(2), &f).unwrap(), cw_tensor(2).unwrap());
    }

    #[test]
    fn flipped_sign_diverges() {
        let f = cw_curves(2).unwrap();
        let mut c = cw_coefficients(2);
        c[2] = -c[2].clone();
        assert!(matches!(
            laurent_combination_limit(&c, &f),
            Err(Error::NegativeValuation { valuation: -3, .. })
        ));
        assert!(laurent_combination_limit(&c[..2], &f).is_err());
    }

    #[test]
    fn constant_curves_limit_to_themselves() {
        let e = |i: usize| {
            let mut v = vec![rat(0); 2];
            v[i] = rat(1);
            v
        };
        let curves = vec![
            RankOneCurve::constant(&e(0), &e(0), &e(0)).unwrap(),
            RankOneCurve::constant(&e(1), &e(0), &e(1)).unwrap(),
        ];
        let f = CurveFamily::new([2, 2, 2], curves.clone()).unwrap();
        let span = limit_span(&f).unwrap();
        for (s, c) in span.iter().zip(&curves) {
            assert_eq!(s, &curve_tensor(c).value_at_zero().unwrap());
        }
        let sum = laurent_combination_limit(&[LaurentPoly::one(), LaurentPoly::one()], &f).unwrap();
        assert_eq!(sum, span[0].add(&span[1]).unwrap());
        let v = verify_algorithm(&CurveFamily::new([2, 2, 2], curves[..1].to_vec()).unwrap(), &span[0]).unwrap();
        assert!(v.contains_target);
        assert_eq!((v.r, v.e0_dim), (1, 1));
    }

    #[test]
    fn cw_limit_contains_cw() {
        let f = cw_curves(3).unwrap();
        let span = limit_span(&f).unwrap();
        assert_eq!(span.len(), 5);
        assert_eq!(rank_of_vectors(&span.iter().map(Tensor3::flatten).collect::<Vec<_>>()), 5);
        let v = verify_algorithm(&cw_curves(2).unwrap(), &cw_tensor(2).unwrap()).unwrap();
        assert!(v.contains_target);
        assert_eq!(v.r, 4);
    }

    #[test]
    fn dimension_checks() {
        let f = cw_curves(1).unwrap();
        assert!(verify_algorithm(&f, &cw_tensor(2).unwrap()).is_err());
        let c = RankOneCurve::constant(&[rat(1)], &[rat(1)], &[rat(1)]).unwrap();
        assert!(CurveFamily::new([2, 1, 1], vec![c]).is_err());
        assert!(RankOneCurve::new(LaurentVec::zeros(1), LaurentVec::zeros(1), LaurentVec::zeros(1)).is_err());
    }
}
