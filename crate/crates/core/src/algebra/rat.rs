//! Exact rational scalars and the small field abstraction shared by the
//! elimination routines.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`. A zero denominator is rejected instead of
/// panicking.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator `{n}`: {e}"))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator `{d}`: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(n, d))
    } else {
        BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|e| format!("bad rational `{s}`: {e}"))
    }
}

/// Canonical text form: `"3"`, `"-3/2"`.
pub fn format_rat(x: &Rat) -> String {
    x.to_string()
}

/// The operations Gaussian elimination needs. Implemented for [`Rat`] and for
/// rational functions in `t`.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for Rat {}

/// Reduced row echelon form in place. Pivot search runs column by column and
/// takes the smallest row index at or below the current pivot row. Returns the
/// pivot columns; the first `pivots.len()` rows hold the reduced pivot rows.
pub fn rref<F: Field>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow >= rows.len() {
            break;
        }
        let Some(found) = (prow..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(prow, found);
        let inv = F::one() / rows[prow][col].clone();
        if !inv.is_one() {
            for x in rows[prow][col..].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let (head, tail) = rows.split_at_mut(prow);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                if !pivot[c].is_zero() {
                    row[c] = row[c].clone() - factor.clone() * pivot[c].clone();
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}

/// Right null space of a dense matrix, one vector per free column, with the
/// free coordinate set to one.
pub fn null_space<F: Field>(matrix: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut rows = matrix.to_vec();
    let pivots = rref(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}
