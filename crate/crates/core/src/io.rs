//! JSON file formats.
//!
//! * Tensor: `{"dims":[a,b,c],"entries":[{"i":0,"j":0,"k":0,"v":"3/2"},...]}`.
//!   Indices are 0-based, values are exact rationals as strings, zero values
//!   and repeated positions are rejected. Writing sorts entries by `(i,j,k)`
//!   and emits compact JSON, so equal tensors produce identical bytes.
//! * Curves: `{"dims":[a,b,c],"curves":[{"a":[POLY,...],"b":[...],"c":[...]}]}`
//!   where `POLY` is a list of `[exponent, "p/q"]` pairs in `t`.
//! * Points: `{"vars":m,"points":[[POLY,...],...]}`.
//! * Matrix: `{"rows":r,"cols":c,"entries":[{"i":0,"j":1,"v":"-1"},...]}`.
//!
//! Parse errors name the offending field, for example `entries[3].v`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rat, LaurentPoly, LaurentVec, Rat, RatMatrix};
use crate::degeneration::{CurveFamily, RankOneCurve};
use crate::error::{Error, Result};
use crate::schemes::ParamPoints;
use crate::tensor::Tensor3;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorEntry {
    i: usize,
    j: usize,
    k: usize,
    v: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    dims: [usize; 3],
    entries: Vec<TensorEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixEntry {
    i: usize,
    j: usize,
    v: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<MatrixEntry>,
}

pub type PolyJson = Vec<(i64, String)>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveJson {
    a: Vec<PolyJson>,
    b: Vec<PolyJson>,
    c: Vec<PolyJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurvesFile {
    dims: [usize; 3],
    curves: Vec<CurveJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsFile {
    vars: usize,
    points: Vec<Vec<PolyJson>>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))
}

fn nonzero_rat(field: String, s: &str) -> Result<Rat> {
    let v = parse_rat(s).map_err(|e| Error::parse(field.clone(), e))?;
    if num_traits::Zero::is_zero(&v) {
        return Err(Error::parse(field, "zero entries must be omitted"));
    }
    Ok(v)
}

fn check_index(field: String, i: usize, dim: usize) -> Result<()> {
    if i >= dim {
        return Err(Error::parse(field, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(())
}

pub fn parse_tensor(text: &str) -> Result<Tensor3> {
    let f: TensorFile = from_json(text)?;
    let mut seen = BTreeSet::new();
    let mut t = Tensor3::zeros(f.dims);
    for (n, e) in f.entries.iter().enumerate() {
        for (name, i, d) in [("i", e.i, f.dims[0]), ("j", e.j, f.dims[1]), ("k", e.k, f.dims[2])] {
            check_index(format!("entries[{n}].{name}"), i, d)?;
        }
        let v = nonzero_rat(format!("entries[{n}].v"), &e.v)?;
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::parse(
                format!("entries[{n}]"),
                format!("duplicate position ({}, {}, {})", e.i, e.j, e.k),
            ));
        }
        t.set((e.i, e.j, e.k), v);
    }
    Ok(t)
}

pub fn write_tensor(t: &Tensor3) -> String {
    let f = TensorFile {
        dims: t.dims(),
        entries: t
            .entries()
            .map(|((i, j, k), v)| TensorEntry {
                i,
                j,
                k,
                v: v.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&f).expect("tensor serializes")
}

pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let f: MatrixFile = from_json(text)?;
    let mut seen = BTreeSet::new();
    let mut m = RatMatrix::zeros(f.rows, f.cols);
    for (n, e) in f.entries.iter().enumerate() {
        check_index(format!("entries[{n}].i"), e.i, f.rows)?;
        check_index(format!("entries[{n}].j"), e.j, f.cols)?;
        let v = nonzero_rat(format!("entries[{n}].v"), &e.v)?;
        if !seen.insert((e.i, e.j)) {
            return Err(Error::parse(format!("entries[{n}]"), format!("duplicate position ({}, {})", e.i, e.j)));
        }
        m.set(e.i, e.j, v);
    }
    Ok(m)
}

pub fn write_matrix(m: &RatMatrix) -> String {
    let f = MatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        entries: m
            .entries()
            .map(|(i, j, v)| MatrixEntry { i, j, v: v.to_string() })
            .collect(),
    };
    serde_json::to_string(&f).expect("matrix serializes")
}

pub fn parse_poly(field: &str, p: &PolyJson) -> Result<LaurentPoly> {
    let mut exps = BTreeSet::new();
    let mut terms = Vec::with_capacity(p.len());
    for (n, (e, c)) in p.iter().enumerate() {
        if !exps.insert(*e) {
            return Err(Error::parse(format!("{field}[{n}]"), format!("repeated exponent {e}")));
        }
        let v = parse_rat(c).map_err(|r| Error::parse(format!("{field}[{n}]"), r))?;
        terms.push((*e, v));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn poly_json(p: &LaurentPoly) -> PolyJson {
    p.terms().iter().map(|(e, c)| (*e, c.to_string())).collect()
}

fn parse_vec(field: &str, v: &[PolyJson], len: usize) -> Result<LaurentVec> {
    if v.len() != len {
        return Err(Error::parse(field, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(n, p)| parse_poly(&format!("{field}[{n}]"), p))
        .collect::<Result<Vec<_>>>()
        .map(LaurentVec)
}

pub fn parse_curves(text: &str) -> Result<CurveFamily> {
    let f: CurvesFile = from_json(text)?;
    let mut curves = Vec::with_capacity(f.curves.len());
    for (n, c) in f.curves.iter().enumerate() {
        let a = parse_vec(&format!("curves[{n}].a"), &c.a, f.dims[0])?;
        let b = parse_vec(&format!("curves[{n}].b"), &c.b, f.dims[1])?;
        let cc = parse_vec(&format!("curves[{n}].c"), &c.c, f.dims[2])?;
        let curve = RankOneCurve::new(a, b, cc).map_err(|e| Error::parse(format!("curves[{n}]"), e.to_string()))?;
        curves.push(curve);
    }
    CurveFamily::new(f.dims, curves)
}

pub fn write_curves(family: &CurveFamily) -> String {
    let vec_json = |v: &LaurentVec| v.0.iter().map(poly_json).collect::<Vec<_>>();
    let f = CurvesFile {
        dims: family.dims(),
        curves: family
            .curves()
            .iter()
            .map(|c| CurveJson {
                a: vec_json(&c.a),
                b: vec_json(&c.b),
                c: vec_json(&c.c),
            })
            .collect(),
    };
    serde_json::to_string(&f).expect("curves serialize")
}

pub fn parse_points(text: &str) -> Result<ParamPoints> {
    let f: PointsFile = from_json(text)?;
    let points = f
        .points
        .iter()
        .enumerate()
        .map(|(n, p)| parse_vec(&format!("points[{n}]"), p, f.vars))
        .collect::<Result<Vec<_>>>()?;
    ParamPoints::new(f.vars, points).map_err(|e| match e {
        Error::InvalidArgument { name, reason } => Error::parse(name, reason),
        other => other,
    })
}

pub fn write_points(points: &ParamPoints) -> String {
    let f = PointsFile {
        vars: points.vars(),
        points: points.points().iter().map(|p| p.0.iter().map(poly_json).collect()).collect(),
    };
    serde_json::to_string(&f).expect("points serialize")
}
