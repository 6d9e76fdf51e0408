//! Finite Laurent polynomials in one parameter `t` with rational
//! coefficients, and vectors of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{format_rat, Rat};
use crate::error::{Error, Result};

/// `sum c_e t^e` with exponents strictly increasing and no zero coefficients.
/// The empty term list is the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Rat)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rat, exponent: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exponent, c)],
            }
        }
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeated
    /// exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut terms: Vec<(i64, Rat)> = terms.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, Rat)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i64, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coeff(&self, exponent: i64) -> Rat {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Value at `t = 0`; defined only when no negative powers occur.
    pub fn value_at_zero(&self) -> Option<Rat> {
        match self.valuation() {
            None => Some(Rat::zero()),
            Some(v) if v >= 0 => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    /// Evaluation at a nonzero rational `t`.
    pub fn eval(&self, t: &Rat) -> Rat {
        assert!(!t.is_zero() || self.valuation().map_or(true, |v| v >= 0));
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(t, *e);
        }
        acc
    }
}

fn pow_rat(t: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(t.clone(), e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl<'a> Neg for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e1, c1)| rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", format_rat(c))?,
                1 => write!(f, "({})*t", format_rat(c))?,
                _ => write!(f, "({})*t^{}", format_rat(c), e)?,
            }
        }
        Ok(())
    }
}

/// A vector whose entries are Laurent polynomials: a curve in a vector space
/// over `Q[t, 1/t]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentVec(pub Vec<LaurentPoly>);

impl LaurentVec {
    pub fn zeros(n: usize) -> Self {
        Self(vec![LaurentPoly::zero(); n])
    }

    pub fn constant(v: &[Rat]) -> Self {
        Self(v.iter().cloned().map(LaurentPoly::constant).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(LaurentPoly::is_zero)
    }

    /// The t-content: minimum valuation over the entries.
    pub fn valuation(&self) -> Option<i64> {
        self.0.iter().filter_map(LaurentPoly::valuation).min()
    }

    pub fn degree(&self) -> Option<i64> {
        self.0.iter().filter_map(LaurentPoly::degree).max()
    }

    pub fn shift(&self, k: i64) -> Self {
        Self(self.0.iter().map(|p| p.shift(k)).collect())
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self(self.0.iter().map(|p| p * s).collect())
    }

    pub fn add_assign_scaled(&mut self, other: &LaurentVec, s: &LaurentPoly) {
        assert_eq!(self.len(), other.len());
        if s.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x = &*x + &(y * s);
            }
        }
    }

    /// Entrywise value at `t = 0`; `None` if some entry has a negative power.
    pub fn value_at_zero(&self) -> Option<Vec<Rat>> {
        self.0.iter().map(LaurentPoly::value_at_zero).collect()
    }

    pub fn eval(&self, t: &Rat) -> Vec<Rat> {
        self.0.iter().map(|p| p.eval(t)).collect()
    }
}

/// Divides out the t-content: returns `(v, t^-v * x)` where `v` is the least
/// valuation among the entries, so the result is polynomial in `t` with a
/// nonzero value at `t = 0`.
pub fn t_content_normalize(x: &LaurentVec) -> Result<(i64, LaurentVec)> {
    let v = x
        .valuation()
        .ok_or_else(|| Error::ZeroVector("t-content normalization".into()))?;
    Ok((v, x.shift(-v)))
}
