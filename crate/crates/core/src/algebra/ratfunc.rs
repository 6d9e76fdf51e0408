//! Univariate polynomials over Q and the field Q(t) of rational functions,
//! used to take kernels of matrices whose entries depend on the parameter.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::rat::{Field, Rat};

/// Dense polynomial in `t`, coefficients from low to high degree, no
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.0.last()
    }

    /// Polynomial with nonnegative exponents only.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let deg = match p.degree() {
            None => return Some(Poly::default()),
            Some(d) => d,
        };
        if p.valuation()? < 0 {
            return None;
        }
        let mut c = vec![Rat::zero(); deg as usize + 1];
        for (e, x) in p.terms() {
            c[*e as usize] = x.clone();
        }
        Some(Poly::new(c))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.0.iter().enumerate().map(|(e, c)| (e as i64, c.clone())))
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::default(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::default(), Poly::default());
        };
        if nd < dd {
            return (Poly::default(), self.clone());
        }
        let inv = d.lead().unwrap().recip();
        let mut rem = self.0.clone();
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.0.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
            quot[k] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            // monic remainders keep the rational coefficients small
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Fraction-free Gauss-Jordan elimination over `Q[t]`. Returns one kernel
/// vector per free column together with that column: the free coordinate is
/// the pivot minor and the pivot coordinates are the negated Cramer minors.
/// Each division by the previous pivot is exact, so no gcds are needed.
pub fn poly_null_space(matrix: &[Vec<Poly>], cols: usize) -> Vec<(usize, Vec<Poly>)> {
    let mut rows = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut prev = Poly::one();
    for col in 0..cols {
        let prow = pivots.len();
        if prow >= rows.len() {
            break;
        }
        let Some(found) = (prow..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(prow, found);
        let pivot_row = rows[prow].clone();
        let p = pivot_row[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == prow {
                continue;
            }
            let a = row[col].clone();
            for c in 0..cols {
                let x = p.clone() * row[c].clone() - a.clone() * pivot_row[c].clone();
                let (q, r) = x.div_rem(&prev);
                debug_assert!(r.is_zero(), "inexact fraction-free step");
                row[c] = q;
            }
        }
        prev = p;
        pivots.push(col);
    }
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Poly::zero(); cols];
            v[free] = prev.clone();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            (free, v)
        })
        .collect()
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly(vec![Rat::one()])
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let (mut long, short) = if self.0.len() >= rhs.0.len() { (self.0, rhs.0) } else { (rhs.0, self.0) };
        for (x, y) in long.iter_mut().zip(short) {
            *x += y;
        }
        Poly::new(long)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Element of Q(t) as `num / den`, coprime, `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let l = den.lead().unwrap().recip();
        RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(self.num + rhs.num, self.den);
        }
        RatFunc::new(self.num * rhs.den.clone() + rhs.num * self.den.clone(), self.den * rhs.den)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero in Q(t)");
        RatFunc::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Field for RatFunc {}
