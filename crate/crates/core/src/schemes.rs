//! Limit schemes of point configurations collapsing to the origin.
//!
//! Given `r` points `y(t) ∈ Q[t]^m` that are distinct for generic `t` and all
//! equal to the origin at `t = 0`, the flat limit is a local scheme of length
//! `r`. Its ideal is computed degree by degree: the polynomials of degree
//! `<= d` vanishing at the points form a subspace over `Q(t)`, whose limit at
//! `t = 0` is the degree-`<= d` part of the limit ideal. With `d = r` the
//! truncation already determines the scheme because `m^r` lies in the ideal
//! of a local scheme of length `r`.
//!
//! Monomials are ordered by total degree, then lexicographically with higher
//! powers of earlier variables first: `1, y1, y2, y1^2, y1 y2, y2^2, ...`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::ratfunc::{poly_null_space, Poly};
use crate::algebra::{limit_subspace, LaurentPoly, LaurentVec, Rat, RatMatrix, SubspaceFamily};
use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

/// All exponent vectors in `m` variables of total degree `<= d`, in the
/// module's monomial order.
pub fn monomials(m: usize, d: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    for deg in 0..=d as u32 {
        let mut cur = vec![0u32; m];
        push_degree(&mut out, &mut cur, 0, deg);
    }
    out
}

fn push_degree(out: &mut Vec<Exponents>, cur: &mut Exponents, pos: usize, left: u32) {
    if pos + 1 >= cur.len() {
        if let Some(last) = cur.last_mut() {
            *last = left;
            out.push(cur.clone());
        } else if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        push_degree(out, cur, pos + 1, left - e);
    }
    cur[pos] = 0;
}

fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

/// `r` parametric points in affine `m`-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoints {
    m: usize,
    points: Vec<LaurentVec>,
}

impl ParamPoints {
    /// Rejects points with negative powers of `t`, points that do not pass
    /// through the origin at `t = 0`, and repeated points.
    pub fn new(m: usize, points: Vec<LaurentVec>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::arg("points", "at least one point is required"));
        }
        for (n, p) in points.iter().enumerate() {
            if p.len() != m {
                return Err(Error::dims(format!("points[{n}]"), m, p.len()));
            }
            for (c, x) in p.0.iter().enumerate() {
                match x.valuation() {
                    Some(v) if v < 0 => {
                        return Err(Error::arg(format!("points[{n}][{c}]"), "negative power of t"));
                    }
                    Some(0) => {
                        return Err(Error::arg(
                            format!("points[{n}][{c}]"),
                            "point does not collapse to the origin at t = 0",
                        ));
                    }
                    _ => {}
                }
            }
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::arg(format!("points[{i}]"), format!("repeats points[{j}]")));
                }
            }
        }
        Ok(Self { m, points })
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[LaurentVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn monomial_at(&self, point: usize, e: &[u32]) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (x, &k) in self.points[point].0.iter().zip(e) {
            for _ in 0..k {
                acc = &acc * x;
            }
        }
        acc
    }
}

/// Polynomial in `y_1..y_m` with rational coefficients, terms in monomial
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: Vec<(Exponents, Rat)>,
}

impl Polynomial {
    fn from_coords(basis: &[Exponents], coords: &[Rat]) -> Self {
        Polynomial {
            terms: basis
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(e, _)| total_degree(e)).max().unwrap_or(0)
    }

    pub fn eval(&self, y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in y.iter().zip(e) {
                m *= num_traits::pow(x.clone(), k as usize);
            }
            acc += m;
        }
        acc
    }

    /// Coordinates in `basis`, which must contain every monomial present.
    pub fn coords(&self, basis: &[Exponents]) -> Vec<Rat> {
        let index: HashMap<&Exponents, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut v = vec![Rat::zero(); basis.len()];
        for (e, c) in &self.terms {
            v[index[e]] = c.clone();
        }
        v
    }
}

/// Generators of an ideal, stored as a spanning set of a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySet {
    pub variables: usize,
    pub generators: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub ideal: PolySet,
    pub length: usize,
    pub hilbert_function: Vec<usize>,
}

/// Polynomials of degree `<= d` vanishing at all points for generic `t`, as
/// polynomial curves in the coefficient space (monomial order), each cleared
/// of denominators and content over `Q[t]`.
pub fn vanishing_family(points: &ParamPoints, d: usize) -> Result<SubspaceFamily> {
    if d == 0 {
        return Err(Error::arg("d", "degree must be at least 1"));
    }
    let basis = monomials(points.m, d);
    let n = basis.len();
    let rows: Vec<Vec<Poly>> = (0..points.len())
        .map(|p| {
            basis
                .iter()
                .map(|e| Poly::from_laurent(&points.monomial_at(p, e)).expect("points are polynomial"))
                .collect()
        })
        .collect();
    let generators = poly_null_space(&rows, n)
        .into_iter()
        .map(|(free, v)| primitive(free, &v))
        .collect();
    SubspaceFamily::new(n, generators)
}

/// Divides out the polynomial content and scales so that the free coordinate
/// is monic.
fn primitive(free: usize, v: &[Poly]) -> LaurentVec {
    let mut content = Poly::zero();
    for p in v {
        content = Poly::gcd(&content, p);
        if content.degree() == Some(0) {
            break;
        }
    }
    let polys: Vec<Poly> = v.iter().map(|p| p.div_rem(&content).0).collect();
    let lead = polys[free].lead().expect("free coordinate is nonzero").recip();
    LaurentVec(polys.iter().map(|p| p.scale(&lead).to_laurent()).collect())
}

/// Spanning set (reduced echelon form, monomial order) of the degree-`<= cap`
/// part of the limit ideal at `t = 0`.
pub fn limit_ideal(points: &ParamPoints, cap: usize) -> Result<PolySet> {
    if cap == 0 {
        return Err(Error::arg("cap", "degree cap must be at least 1"));
    }
    let basis = monomials(points.m, cap);
    let mut rows = Vec::new();
    for d in 1..=cap {
        let family = vanishing_family(points, d)?;
        if family.generators().is_empty() {
            continue;
        }
        for mut v in limit_subspace(&family)? {
            v.resize(basis.len(), Rat::zero());
            rows.push(v);
        }
    }
    let generators = if rows.is_empty() {
        Vec::new()
    } else {
        RatMatrix::from_rows(&rows)
            .row_basis()
            .iter()
            .map(|v| Polynomial::from_coords(&basis, v))
            .collect()
    };
    Ok(PolySet {
        variables: points.m,
        generators,
    })
}

/// Vector space spanned by all monomial multiples of the generators that stay
/// within degree `cap`, in coordinates of `monomials(m, cap)`.
fn truncated_ideal_span(ideal: &PolySet, cap: usize) -> (Vec<Exponents>, Vec<Vec<Rat>>) {
    let basis = monomials(ideal.variables, cap);
    let index: HashMap<&Exponents, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in &ideal.generators {
        let room = cap.saturating_sub(g.degree());
        for shift in monomials(ideal.variables, room) {
            let mut v = vec![Rat::zero(); basis.len()];
            for (e, c) in &g.terms {
                let prod: Exponents = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                v[index[&prod]] = c.clone();
            }
            rows.push(v);
        }
    }
    (basis, rows)
}

/// Length and local Hilbert function of a truncated quotient
/// `Q[y]_{<= cap} / J`, where `J` is the truncated ideal span.
///
/// `h(k) = q(k+1) - q(k)` with `q(k) = dim Q[y] / (J + m^k)`, which is the
/// number of monomials of degree `< k` minus the rank of `J` projected onto
/// them.
pub fn truncated_hilbert_function(ideal: &PolySet, cap: usize) -> (usize, Vec<usize>) {
    let (basis, rows) = truncated_ideal_span(ideal, cap);
    let q = |k: usize| -> usize {
        let cols: Vec<usize> = (0..basis.len()).filter(|&i| total_degree(&basis[i]) < k).collect();
        if rows.is_empty() {
            return cols.len();
        }
        let projected: Vec<Vec<Rat>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        cols.len() - RatMatrix::from_rows(&projected).rank()
    };
    let qs: Vec<usize> = (0..=cap + 1).map(q).collect();
    let mut hf: Vec<usize> = qs.windows(2).map(|w| w[1] - w[0]).collect();
    while hf.last() == Some(&0) {
        hf.pop();
    }
    (qs[cap + 1], hf)
}

/// Limit ideal, length and local Hilbert function, with degree cap `r`.
pub fn local_hilbert_report(points: &ParamPoints) -> Result<SchemeReport> {
    let r = points.len();
    let ideal = limit_ideal(points, r)?;
    let (length, hilbert_function) = truncated_hilbert_function(&ideal, r);
    if length > r {
        return Err(Error::CapInsufficient { length, expected: r });
    }
    if length < r {
        return Err(Error::LengthMismatch { length, expected: r });
    }
    Ok(SchemeReport {
        ideal,
        length,
        hilbert_function,
    })
}

/// Whether the last nonzero Hilbert function value is 1. Necessary for a
/// Gorenstein scheme, not sufficient.
pub fn last_socle_check(report: &SchemeReport) -> bool {
    hilbert_ends_in_one(&report.hilbert_function)
}

pub fn hilbert_ends_in_one(hf: &[usize]) -> bool {
    hf.iter().rev().find(|&&h| h != 0) == Some(&1)
}

/// Serialized form: generators as `[[exponents], "coefficient"]` term lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeReportJson {
    pub variables: usize,
    pub generators: Vec<Vec<(Exponents, String)>>,
    pub length: usize,
    pub hilbert_function: Vec<usize>,
    pub gorenstein_compatible: bool,
}

impl From<&SchemeReport> for SchemeReportJson {
    fn from(r: &SchemeReport) -> Self {
        SchemeReportJson {
            variables: r.ideal.variables,
            generators: r
                .ideal
                .generators
                .iter()
                .map(|g| g.terms.iter().map(|(e, c)| (e.clone(), c.to_string())).collect())
                .collect(),
            length: r.length,
            hilbert_function: r.hilbert_function.clone(),
            gorenstein_compatible: last_socle_check(r),
        }
    }
}
