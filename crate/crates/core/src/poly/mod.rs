//! Exact integer polynomials in one variable (`x`) and two variables
//! (`x`, `y`), with the substitutions that relate the cube, distance cube
//! and distance-weight polynomials.
//!
//! Coefficients are arbitrary-precision integers. Zero coefficients are
//! never stored.

mod json;
pub mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use series::{series_coefficients, RationalSeries};

/// `C(a, b)`, taken to be 0 when `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn insert_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Univariate polynomial in `x`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

/// Bivariate polynomial in `x` and `y`; keys are `(x-degree, y-degree)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `Σ coeffs[k] x^k`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(k as u32, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: BigInt) {
        insert_term(&mut self.terms, k, c);
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn evaluate(&self, at: &BigInt) -> BigInt {
        let Some(top) = self.degree() else {
            return BigInt::zero();
        };
        (0..=top).rev().fold(BigInt::zero(), |acc, k| acc * at + self.coeff(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: i64) -> Self {
        let mut out = Self::zero();
        for (j, c) in self.terms() {
            // (x + a)^j = Σ_i C(j, i) a^(j-i) x^i
            for i in 0..=j {
                let term = c * binomial(j as i64, i as i64) * BigInt::from(a).pow(j - i);
                out.add_term(i, term);
            }
        }
        out
    }

    /// `W(x + 1)`, turning a distance-weight polynomial at `0^n` into the
    /// cube polynomial of a daisy cube.
    pub fn substitute_univariate_shift(&self) -> Self {
        self.shift(1)
    }

    /// `C(x + y + a)` as a bivariate polynomial.
    pub fn substitute_shift(&self, a: i64) -> BiPoly {
        self.shift(a).substitute_sum()
    }

    /// `W(x + y)`: the coefficient of `x^k y^d` is `w_{k+d} C(k+d, d)`.
    pub fn substitute_sum(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, c) in self.terms() {
            for d in 0..=j {
                out.add_term(j - d, d, c * binomial(j as i64, d as i64));
            }
        }
        out
    }

    /// Embeds `p(x)` as a bivariate polynomial with no `y`.
    pub fn to_bi(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k, c) in self.terms() {
            out.add_term(k, 0, c.clone());
        }
        out
    }
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, k: u32, d: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, d, c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(x-degree, y-degree, coefficient)` triples.
    pub fn from_terms<C: Into<BigInt> + Clone>(terms: &[(u32, u32, C)]) -> Self {
        let mut p = Self::zero();
        for (k, d, c) in terms {
            p.add_term(*k, *d, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, k: u32, d: u32, c: BigInt) {
        insert_term(&mut self.terms, (k, d), c);
    }

    pub fn coeff(&self, k: u32, d: u32) -> BigInt {
        self.terms.get(&(k, d)).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(k, d, c)` ordered by `(k, d)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(k, d), c)| (k, d, c))
    }

    /// Nonzero terms in canonical order: ascending total degree, then
    /// ascending `x`-degree.
    pub fn canonical_terms(&self) -> Vec<(u32, u32, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&(k, d, _)| (k + d, k));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self, c: i64) -> bool {
        *self == BiPoly::constant(c)
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms()
            .map(|(k, d, c)| c * x.pow(k) * y.pow(d))
            .fold(BigInt::zero(), |acc, t| acc + t)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `D(x, -x)`.
    pub fn substitute_neg(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (k, d, c) in self.terms() {
            let c = if d % 2 == 1 { -c } else { c.clone() };
            out.add_term(k + d, c);
        }
        out
    }

    /// `D(y, x)`.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero();
        for (k, d, c) in self.terms() {
            out.add_term(d, k, c.clone());
        }
        out
    }

    /// `D(x, 1)`.
    pub fn at_y_one(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (k, _, c) in self.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    /// `D(0, x)`.
    pub fn at_x_zero(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (_, d, c) in self.terms().filter(|&(k, _, _)| k == 0) {
            out.add_term(d, c.clone());
        }
        out
    }

    /// The polynomial as univariate in `x`, if it has no `y`.
    pub fn to_uni(&self) -> Option<UniPoly> {
        if self.terms().any(|(_, d, _)| d != 0) {
            return None;
        }
        Some(self.at_y_one())
    }
}

macro_rules! ring_ops {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let mut out = self.clone();
                for (key, c) in &rhs.terms {
                    insert_term(&mut out.terms, *key, c.clone());
                }
                out
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { terms: self.terms.iter().map(|(key, c)| (*key, -c)).collect() }
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }

        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::zero(), |a, b| &a + &b)
            }
        }
    };
}

ring_ops!(UniPoly);
ring_ops!(BiPoly);

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k1, d1, c1) in self.terms() {
            for (k2, d2, c2) in rhs.terms() {
                out.add_term(k1 + k2, d1 + d2, c1 * c2);
            }
        }
        out
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    powers: &[(&str, u32)],
) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = c.abs();
    let mut parts: Vec<String> = Vec::new();
    let has_vars = powers.iter().any(|&(_, e)| e > 0);
    if !mag.is_one() || !has_vars {
        parts.push(mag.to_string());
    }
    for &(var, e) in powers {
        match e {
            0 => {}
            1 => parts.push(var.to_string()),
            e => parts.push(format!("{var}^{e}")),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            write_term(f, i == 0, c, &[("x", k)])?;
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, d, c)) in self.canonical_terms().into_iter().enumerate() {
            write_term(f, i == 0, c, &[("x", k), ("y", d)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
