//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Coefficients are field codes, lowest degree first, with no trailing zeros;
//! the zero polynomial has an empty coefficient vector and degree `None`.
//!
//! The total order on polynomials (used by enumeration, factor sorting, and
//! the canonical field modulus) is by degree, then by the base-`q` integer
//! value of the coefficient vector with the constant term least significant.

mod enumerate;
mod factor;
mod order;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub use enumerate::{
    count_all_of_degree, enumerate_all, enumerate_all_capped, enumerate_monic,
    enumerate_monic_capped, enumerate_monic_irreducible, enumerate_monic_irreducible_capped,
    DegreeIter, DEFAULT_ENUMERATION_CAP,
};
pub use factor::{moebius_poly, Factorization};
pub use order::order_mod;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(spec: &FieldSpec) -> Poly {
        Poly { spec: spec.clone(), coeffs: Vec::new() }
    }

    pub fn one(spec: &FieldSpec) -> Poly {
        Poly { spec: spec.clone(), coeffs: vec![1] }
    }

    /// The indeterminate `x`.
    pub fn x(spec: &FieldSpec) -> Poly {
        Poly { spec: spec.clone(), coeffs: vec![0, 1] }
    }

    pub fn constant(spec: &FieldSpec, code: u32) -> Poly {
        Poly::from_codes(spec, vec![code])
    }

    pub fn monomial(spec: &FieldSpec, code: u32, degree: usize) -> Poly {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = code;
        Poly::from_codes(spec, coeffs)
    }

    /// Builds a polynomial from field codes (lowest degree first), trimming
    /// trailing zeros.
    ///
    /// # Panics
    /// If a code is not below `q`; use [`Poly::try_from_codes`] for untrusted input.
    pub fn from_codes(spec: &FieldSpec, mut coeffs: Vec<u32>) -> Poly {
        assert!(coeffs.iter().all(|&c| c < spec.q()), "coefficient code out of range");
        trim(&mut coeffs);
        Poly { spec: spec.clone(), coeffs }
    }

    pub fn try_from_codes(spec: &FieldSpec, coeffs: Vec<u32>) -> Result<Poly> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= spec.q()) {
            return Err(Error::invalid(format!("coefficient code {c} out of range for {spec:?}")));
        }
        Ok(Poly::from_codes(spec, coeffs))
    }

    /// Coefficients taken from the prime subfield (integers reduced mod `p`).
    pub fn from_ints(spec: &FieldSpec, ints: &[i64]) -> Poly {
        Poly::from_codes(spec, ints.iter().map(|&n| spec.from_int(n)).collect())
    }

    pub fn from_elements(spec: &FieldSpec, coeffs: &[FieldElement]) -> Result<Poly> {
        let mut codes = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            spec.check_same(c.spec())?;
            codes.push(c.code());
        }
        Ok(Poly::from_codes(spec, codes))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Coefficient codes, lowest degree first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_code(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.leading_code().map(|c| self.spec.element(c).unwrap())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_code() == Some(1)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_code() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(self.spec.inv(lc).unwrap()),
        }
    }

    pub fn scale(&self, code: u32) -> Poly {
        if code == 0 {
            return Poly::zero(&self.spec);
        }
        let coeffs = self.coeffs.iter().map(|&c| self.spec.mul(c, code)).collect();
        Poly { spec: self.spec.clone(), coeffs }
    }

    /// `|f| = q^deg f`; zero has norm zero.
    pub fn norm(&self) -> BigUint {
        match self.degree() {
            None => BigUint::zero(),
            Some(d) => BigUint::from(self.spec.q()).pow(d as u32),
        }
    }

    /// Base-`q` integer of the coefficient vector, if it fits in `u64`.
    pub fn key(&self) -> Option<u64> {
        let q = self.spec.q() as u64;
        self.coeffs
            .iter()
            .rev()
            .try_fold(0u64, |acc, &c| acc.checked_mul(q)?.checked_add(c as u64))
    }

    pub fn from_key(spec: &FieldSpec, mut key: u64) -> Poly {
        let q = spec.q() as u64;
        let mut coeffs = Vec::new();
        while key > 0 {
            coeffs.push((key % q) as u32);
            key /= q;
        }
        Poly { spec: spec.clone(), coeffs }
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.spec.mul(self.spec.from_int(i as i64), c))
            .collect();
        Poly::from_codes(&self.spec, coeffs)
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.spec.check_same(&other.spec)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.spec.check_same(&other.spec)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.spec.check_same(&other.spec)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.spec;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_codes(f, coeffs)
    }

    fn sub_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.spec;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_codes(f, coeffs)
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        Poly { spec: self.spec.clone(), coeffs: mul_codes(&self.spec, &self.coeffs, &other.coeffs) }
    }

    /// Euclidean division `self = quotient * divisor + remainder`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.spec.check_same(&divisor.spec)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        let quot = div_rem_codes(&self.spec, &mut rem, &divisor.coeffs);
        Ok((Poly::from_codes(&self.spec, quot), Poly::from_codes(&self.spec, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.spec.check_same(&divisor.spec)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        rem_codes(&self.spec, &mut rem, &divisor.coeffs);
        Ok(Poly { spec: self.spec.clone(), coeffs: rem })
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::invalid(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.spec.check_same(&other.spec)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::invalid("gcd(0, 0) is undefined"));
        }
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        while !b.is_empty() {
            rem_codes(&self.spec, &mut a, &b);
            std::mem::swap(&mut a, &mut b);
        }
        Ok(Poly { spec: self.spec.clone(), coeffs: a }.monic())
    }

    pub fn pow(&self, mut k: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.spec);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^k mod modulus` by square-and-multiply; `modulus` must have positive degree.
    pub fn powmod(&self, k: &BigUint, modulus: &Poly) -> Result<Poly> {
        self.spec.check_same(&modulus.spec)?;
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::invalid("modulus must have positive degree"));
        }
        let m = &modulus.coeffs;
        let mut base = self.coeffs.clone();
        rem_codes(&self.spec, &mut base, m);
        let mut acc = vec![1u32];
        for i in (0..k.bits()).rev() {
            acc = mul_codes(&self.spec, &acc, &acc);
            rem_codes(&self.spec, &mut acc, m);
            if k.bit(i) {
                acc = mul_codes(&self.spec, &acc, &base);
                rem_codes(&self.spec, &mut acc, m);
            }
        }
        Ok(Poly { spec: self.spec.clone(), coeffs: acc })
    }

    pub fn powmod_u64(&self, k: u64, modulus: &Poly) -> Result<Poly> {
        self.powmod(&BigUint::from(k), modulus)
    }

    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.try_mul(other)?.rem(modulus)
    }

    /// Evaluates at a field code by Horner's rule.
    pub fn eval(&self, at: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.spec.add(self.spec.mul(acc, at), c))
    }

    fn assert_same(&self, other: &Poly) {
        if let Err(e) = self.spec.check_same(&other.spec) {
            panic!("{e}");
        }
    }
}

/// Strips trailing zero coefficients.
pub(crate) fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn mul_codes(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Reduces `a` modulo the nonzero `m` in place.
pub(crate) fn rem_codes(f: &FieldSpec, a: &mut Vec<u32>, m: &[u32]) {
    let dm = m.len() - 1;
    let lc = m[dm];
    let inv = if lc == 1 { 1 } else { f.inv(lc).unwrap() };
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], inv);
        if c != 0 {
            let shift = top - dm;
            for (i, &mi) in m.iter().enumerate() {
                a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
            }
        }
        a.pop();
        trim(a);
    }
    trim(a);
}

/// Reduces `a` modulo `m` in place and returns the quotient.
pub(crate) fn div_rem_codes(f: &FieldSpec, a: &mut Vec<u32>, m: &[u32]) -> Vec<u32> {
    let dm = m.len() - 1;
    let inv = f.inv(m[dm]).unwrap();
    if a.len() <= dm {
        return Vec::new();
    }
    let mut quot = vec![0u32; a.len() - dm];
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], inv);
        let shift = top - dm;
        quot[shift] = c;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
            }
        }
        a.pop();
        trim(a);
    }
    trim(&mut quot);
    quot
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            /// # Panics
            /// If the operands live in different fields.
            fn $method(self, rhs: &Poly) -> Poly {
                self.assert_same(rhs);
                self.$impl(rhs)
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.spec.neg(c)).collect();
        Poly { spec: self.spec.clone(), coeffs }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", parse::render_poly(self), self.spec)
    }
}

impl Poly {
    /// Parses the polynomial grammar (see [`Poly::render`] for canonical form).
    pub fn parse(text: &str, spec: &FieldSpec) -> Result<Poly> {
        parse::parse_poly(text, spec)
    }

    /// Canonical text: descending powers joined by `+`, unit coefficients and
    /// zero terms omitted, extension-field coefficients in `t`, zero as `"0"`.
    pub fn render(&self) -> String {
        parse::render_poly(self)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }
}

/// Product over an iterator of polynomials; `one` when empty.
pub fn product<'a>(spec: &FieldSpec, items: impl IntoIterator<Item = &'a Poly>) -> Poly {
    items.into_iter().fold(Poly::one(spec), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn p(s: &str, f: &FieldSpec) -> Poly {
        Poly::parse(s, f).unwrap()
    }

    #[test]
    fn add_mul_examples() {
        let f = gf(2);
        assert_eq!(&p("x^2+x+1", &f) + &p("x+1", &f), p("x^2", &f));
        assert_eq!(&p("x+1", &f) * &p("x+1", &f), p("x^2+1", &f));
        let g = p("x^3+x", &f);
        assert_eq!(&g + &Poly::zero(&f), g);
        assert!((&g - &g).is_zero());
    }

    #[test]
    fn divmod_examples() {
        let f = gf(2);
        let (q, r) = p("x^3", &f).div_rem(&p("x^2+x+1", &f)).unwrap();
        assert_eq!((q, r), (p("x+1", &f), Poly::one(&f)));
        let a = p("x^4+x+1", &f);
        assert_eq!(a.div_rem(&a).unwrap(), (Poly::one(&f), Poly::zero(&f)));
        let f3 = gf(3);
        assert_eq!(p("x^2+1", &f3).div_rem(&p("x", &f3)).unwrap(), (p("x", &f3), Poly::one(&f3)));
        assert!(matches!(a.div_rem(&Poly::zero(&f)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn gcd_examples() {
        let f = gf(2);
        assert_eq!(p("x^2+x", &f).gcd(&p("x", &f)).unwrap(), p("x", &f));
        assert_eq!(p("x^2+x+1", &f).gcd(&p("x+1", &f)).unwrap(), Poly::one(&f));
        let f3 = gf(3);
        let g = p("2*x^2+1", &f3);
        assert_eq!(g.gcd(&Poly::zero(&f3)).unwrap(), g.monic());
        assert!(Poly::zero(&f).gcd(&Poly::zero(&f)).is_err());
    }

    #[test]
    fn powmod_examples() {
        let f = gf(2);
        let x = Poly::x(&f);
        assert!(x.powmod_u64(3, &p("x^2+x+1", &f)).unwrap().is_one());
        assert!(p("x^3+x", &f).powmod_u64(0, &p("x^2+x+1", &f)).unwrap().is_one());
        assert!(x.powmod_u64(2, &p("x+1", &f)).unwrap().is_one());
        assert!(x.powmod_u64(2, &Poly::one(&f)).is_err());
        assert!(x.powmod_u64(2, &Poly::zero(&f)).is_err());
    }

    #[test]
    fn powmod_matches_repeated_multiplication() {
        let f = gf(9);
        let m = p("x^4+t*x+1", &f);
        let g = p("(t+2)*x^3+x+t", &f);
        let mut acc = Poly::one(&f);
        for k in 0..40u64 {
            assert_eq!(g.powmod_u64(k, &m).unwrap(), acc.rem(&m).unwrap());
            acc = &acc * &g;
            acc = acc.rem(&m).unwrap();
        }
    }

    #[test]
    fn key_round_trip_and_order() {
        let f = gf(3);
        let a = p("x^2+2", &f);
        assert_eq!(a.key(), Some(9 + 2));
        assert_eq!(Poly::from_key(&f, 11), a);
        assert!(p("x^2", &f) < p("x^2+1", &f));
        assert!(p("2*x+2", &f) < p("x^2", &f));
        assert!(Poly::zero(&f) < Poly::one(&f));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = Poly::x(&gf(2));
        let b = Poly::x(&gf(3));
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
        assert!(a.gcd(&b).is_err());
    }

    #[test]
    fn derivative_in_characteristic_p() {
        let f = gf(3);
        assert!(p("x^3+x^6+1", &f).derivative().is_zero());
        assert_eq!(p("x^2+x", &f).derivative(), p("2*x+1", &f));
    }
}
