//! Limits of one-parameter families of subspaces.
//!
//! A family `E_t = <w_1(t), ..., w_r(t)>` with Laurent polynomial generators
//! has a well defined limit `E_0` in the Grassmannian as `t -> 0`. It is found
//! by repeatedly dividing out t-content and replacing a generator by a
//! combination that vanishes at `t = 0`, until the values at zero are
//! independent.

use num_traits::{One, Zero};

use super::laurent::{t_content_normalize, LaurentPoly, LaurentVec};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Generators of a subspace of `Q(t)^ambient_dim`, meant to be independent
/// over `Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceFamily {
    ambient_dim: usize,
    generators: Vec<LaurentVec>,
}

impl SubspaceFamily {
    pub fn new(ambient_dim: usize, generators: Vec<LaurentVec>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::dims("subspace family generator", ambient_dim, g.len()));
            }
        }
        Ok(Self {
            ambient_dim,
            generators,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[LaurentVec] {
        &self.generators
    }
}

/// Result of [`limit_subspace_detailed`].
#[derive(Clone, Debug)]
pub struct LimitSubspace {
    /// Basis of `E_0`, one vector per generator.
    pub basis: Vec<Vec<Rat>>,
    /// Polynomial curves whose values at `t = 0` are `basis`.
    pub representatives: Vec<LaurentVec>,
    /// `representatives[i] = sum_j transform[i][j] * generators[j]`.
    pub transform: Vec<Vec<LaurentPoly>>,
    /// Number of replacement steps taken.
    pub steps: usize,
}

/// Basis of the limit subspace at `t = 0`.
pub fn limit_subspace(family: &SubspaceFamily) -> Result<Vec<Vec<Rat>>> {
    limit_subspace_detailed(family).map(|l| l.basis)
}

pub fn limit_subspace_detailed(family: &SubspaceFamily) -> Result<LimitSubspace> {
    let r = family.generators.len();
    let n = family.ambient_dim;
    let mut gens = Vec::with_capacity(r);
    let mut transform = Vec::with_capacity(r);
    for (i, g) in family.generators.iter().enumerate() {
        let (v, w) = t_content_normalize(g).map_err(|_| Error::DependentGenerators)?;
        let mut row = vec![LaurentPoly::zero(); r];
        row[i] = LaurentPoly::monomial(Rat::one(), -v);
        gens.push(w);
        transform.push(row);
    }

    // Each replacement divides the wedge w_1 ^ ... ^ w_r by a positive power
    // of t. The wedge starts as a polynomial of degree at most the sum of the
    // generator degrees and must stay polynomial, so exceeding that budget
    // means the wedge is zero.
    let budget: i64 = gens.iter().map(|g| g.degree().unwrap_or(0)).sum();
    let mut spent = 0i64;
    let mut steps = 0usize;

    // Generators are admitted in order. The values at zero of the admitted
    // ones are kept in echelon form, each row carrying its expression in
    // those values. When the value of generator `i` reduces to zero, the
    // first dependency among all values ends at `i`, so `i` is the
    // highest-index generator with nonzero coefficient and is the one
    // replaced.
    let mut echelon: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::with_capacity(r);
    let mut basis = Vec::with_capacity(r);
    for i in 0..r {
        loop {
            let value = gens[i].value_at_zero().expect("normalized generators are polynomial");
            let mut rest = value.clone();
            let mut coeffs = vec![Rat::zero(); r];
            coeffs[i] = Rat::one();
            for (pivot, row, row_coeffs) in &echelon {
                if rest[*pivot].is_zero() {
                    continue;
                }
                let f = rest[*pivot].clone();
                for (x, y) in rest.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                for (x, y) in coeffs.iter_mut().zip(row_coeffs) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(pivot) = rest.iter().position(|x| !x.is_zero()) {
                let inv = rest[pivot].recip();
                rest.iter_mut().for_each(|x| *x *= &inv);
                coeffs.iter_mut().for_each(|x| *x *= &inv);
                echelon.push((pivot, rest, coeffs));
                basis.push(value);
                break;
            }

            let mut combo = LaurentVec::zeros(n);
            let mut combo_t = vec![LaurentPoly::zero(); r];
            for (k, ck) in coeffs.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                let s = LaurentPoly::constant(ck.clone());
                combo.add_assign_scaled(&gens[k], &s);
                for (acc, x) in combo_t.iter_mut().zip(&transform[k]) {
                    if !x.is_zero() {
                        *acc = &*acc + &(x * &s);
                    }
                }
            }
            if combo.is_zero() {
                return Err(Error::DependentGenerators);
            }
            let (v, w) = t_content_normalize(&combo)?;
            debug_assert!(v >= 1);
            spent += v;
            steps += 1;
            if spent > budget {
                return Err(Error::DependentGenerators);
            }
            gens[i] = w;
            transform[i] = combo_t.iter().map(|x| x.shift(-v)).collect();
        }
    }
    Ok(LimitSubspace {
        basis,
        representatives: gens,
        transform,
        steps,
    })
}
