//! Finite fields `GF(q)`, `q = p^e`.
//!
//! Elements are stored as canonical codes in `[0, q)`. For a prime field the
//! code is the residue itself. For an extension field the code is the base-`p`
//! integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` of the coefficient vector of
//! the representative polynomial in `t`, reduced modulo the field's modulus.
//!
//! The modulus of `GF(p^e)` is the monic irreducible degree-`e` polynomial over
//! `GF(p)` whose coefficient vector is smallest as a base-`p` integer, so the
//! same `(p, e)` always yields bit-identical arithmetic.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::integer::{is_prime_u64, prime_divisors, prime_power_decompose};
use crate::poly::Poly;

/// Default upper bound on `q`.
pub const DEFAULT_FIELD_LIMIT: u64 = 1 << 20;

/// Hard upper bound: codes must fit in `u32` and products in `u64`.
pub const MAX_FIELD_LIMIT: u64 = 1 << 31;

struct LogTables {
    /// `exp[i] = α^i` for `i < 2(q-1)`, so a sum of two logs needs no reduction.
    exp: Vec<u32>,
    /// `log[c]` for nonzero codes; `log[0]` is unused.
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// `p^i` for `i < e`.
    digit_weights: Vec<u32>,
    /// Monic modulus coefficients `c_0..c_e`, present iff `e > 1`.
    modulus: Option<Vec<u32>>,
    tables: Option<LogTables>,
}

/// A finite field `GF(p^e)`. Cheap to clone; immutable and shareable across threads.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.e == other.inner.e)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.p.hash(state);
        self.inner.e.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus_string() {
            None => write!(f, "GF({})", self.inner.q),
            Some(m) => write!(f, "GF({}) = GF({})[t]/({})", self.inner.q, self.inner.p, m),
        }
    }
}

impl FieldSpec {
    /// `GF(p^e)` with the default size limit.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_limit(p, e, DEFAULT_FIELD_LIMIT)
    }

    pub fn with_limit(p: u64, e: u32, limit: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::invalid("field extension degree must be at least 1"));
        }
        let limit = limit.min(MAX_FIELD_LIMIT);
        let q = BigUint::from(p).pow(e);
        let q = match q.to_u64().filter(|&q| q <= limit) {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge { q, limit }),
        };
        let p = p as u32;
        let digit_weights: Vec<u32> = (0..e).map(|i| p.pow(i)).collect();
        if e == 1 {
            return Ok(FieldSpec {
                inner: Arc::new(Inner { p, e, q, digit_weights, modulus: None, tables: None }),
            });
        }
        let modulus = canonical_modulus(p, e)?;
        let tables = build_log_tables(p, e, q, &modulus);
        Ok(FieldSpec {
            inner: Arc::new(Inner {
                p,
                e,
                q,
                digit_weights,
                modulus: Some(modulus),
                tables: Some(tables),
            }),
        })
    }

    /// Parses a field order `q` and splits it as `p^e`.
    pub fn from_order(q: u64) -> Result<Self> {
        Self::from_order_with_limit(q, DEFAULT_FIELD_LIMIT)
    }

    pub fn from_order_with_limit(q: u64, limit: u64) -> Result<Self> {
        let (p, e) = prime_power_decompose(q).ok_or(Error::NotPrimePower(q))?;
        Self::with_limit(p, e, limit)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients `c_0..c_e` (monic) of an extension field.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.inner.modulus.as_deref()
    }

    /// The modulus rendered as a polynomial in `t`.
    pub fn modulus_string(&self) -> Option<String> {
        self.inner.modulus.as_ref().map(|m| render_in_t(m))
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.e == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: self.clone(), rep: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: self.clone(), rep: 1 }
    }

    /// Element from a canonical code.
    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code >= self.inner.q {
            return Err(Error::invalid(format!("code {code} is out of range for {self:?}")));
        }
        Ok(FieldElement { spec: self.clone(), rep: code })
    }

    /// Element from its coefficient vector in `t` (entries in `[0, p)`, reduced).
    pub fn element_from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.e as usize || coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(Error::invalid("coefficient vector is not a canonical representative"));
        }
        let code = coeffs.iter().zip(&self.inner.digit_weights).map(|(c, w)| c * w).sum();
        Ok(FieldElement { spec: self.clone(), rep: code })
    }

    /// The generator `t` of an extension field (root of the modulus).
    pub fn generator(&self) -> Option<FieldElement> {
        (self.inner.e > 1).then(|| FieldElement { spec: self.clone(), rep: self.inner.p })
    }

    /// Iterates over all `q` elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |c| FieldElement { spec: self.clone(), rep: c })
    }

    // ---- raw code arithmetic, used by the polynomial kernels ----

    /// Image of an integer in the prime subfield.
    #[inline]
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.inner.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.inner;
        if inner.e == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if inner.p == 2 {
            a ^ b
        } else {
            let (p, mut a, mut b) = (inner.p, a, b);
            let mut out = 0;
            for &w in &inner.digit_weights {
                let d = (a % p + b % p) % p;
                out += d * w;
                a /= p;
                b /= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let inner = &*self.inner;
        if inner.p == 2 || a == 0 {
            a
        } else if inner.e == 1 {
            inner.p - a
        } else {
            let (p, mut a) = (inner.p, a);
            let mut out = 0;
            for &w in &inner.digit_weights {
                out += ((p - a % p) % p) * w;
                a /= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        match &inner.tables {
            None => ((a as u64 * b as u64) % inner.p as u64) as u32,
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inner = &*self.inner;
        Some(match &inner.tables {
            None => self.pow(a, (inner.p - 2) as u64),
            Some(t) => {
                let l = t.log[a as usize];
                t.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]
            }
        })
    }

    /// `a^k` with `0^0 = 1`.
    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^k` for a big exponent, reducing `k` modulo `q - 1` when `a != 0`.
    pub fn pow_big(&self, a: u32, k: &BigUint) -> u32 {
        if k.is_zero() {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let r = (k % BigUint::from(self.inner.q - 1)).to_u64().unwrap();
        self.pow(a, r)
    }

    /// Inverse Frobenius `a ↦ a^{p^{e-1}}`, the unique `p`-th root of `a`.
    pub fn pth_root(&self, a: u32) -> u32 {
        let mut r = a;
        for _ in 1..self.inner.e {
            r = self.pow(r, self.inner.p as u64);
        }
        r
    }

    /// Coefficient digits `c_0..c_{e-1}` of a code.
    pub fn digits(&self, mut code: u32) -> Vec<u32> {
        let p = self.inner.p;
        (0..self.inner.e)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    }

    /// Canonical text of a code: a residue for prime fields, a polynomial in `t` otherwise.
    pub fn render(&self, code: u32) -> String {
        if self.inner.e == 1 {
            code.to_string()
        } else {
            render_in_t(&self.digits(code))
        }
    }

    pub(crate) fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: format!("{self:?}"), right: format!("{other:?}") })
        }
    }
}

fn render_in_t(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}*{var}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// First monic irreducible of degree `e` over `GF(p)` in base-`p` order.
fn canonical_modulus(p: u32, e: u32) -> Result<Vec<u32>> {
    let base = FieldSpec::with_limit(p as u64, 1, MAX_FIELD_LIMIT)?;
    let count = (p as u64).pow(e);
    for index in 0..count {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut rest = index;
        for _ in 0..e {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        let candidate = Poly::from_codes(&base, coeffs.clone());
        if candidate.is_irreducible()? {
            return Ok(coeffs);
        }
    }
    unreachable!("an irreducible of every degree exists over a finite field")
}

/// Product of two codes by schoolbook multiplication modulo the modulus.
fn slow_mul(p: u32, e: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let e = e as usize;
    let digits = |mut c: u32| -> Vec<u64> {
        (0..e)
            .map(|_| {
                let d = (c % p) as u64;
                c /= p;
                d
            })
            .collect()
    };
    let (da, db) = (digits(a), digits(b));
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p64;
        }
    }
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &m) in modulus[..e].iter().enumerate() {
            let sub = c * m as u64 % p64;
            prod[k - e + i] = (prod[k - e + i] + p64 - sub) % p64;
        }
    }
    prod[..e].iter().rev().fold(0u32, |acc, &d| acc * p + d as u32)
}

fn slow_pow(p: u32, e: u32, modulus: &[u32], a: u32, mut k: u64) -> u32 {
    let mut base = a;
    let mut acc = 1;
    while k > 0 {
        if k & 1 == 1 {
            acc = slow_mul(p, e, modulus, acc, base);
        }
        base = slow_mul(p, e, modulus, base, base);
        k >>= 1;
    }
    acc
}

fn build_log_tables(p: u32, e: u32, q: u32, modulus: &[u32]) -> LogTables {
    let order = (q - 1) as u64;
    let primes = prime_divisors(order);
    let alpha = (2..q)
        .find(|&c| primes.iter().all(|&r| slow_pow(p, e, modulus, c, order / r) != 1))
        .expect("the multiplicative group of a finite field is cyclic");
    let mut exp = Vec::with_capacity(2 * (q as usize - 1));
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..(q - 1) {
        exp.push(x);
        log[x as usize] = i;
        x = slow_mul(p, e, modulus, x, alpha);
    }
    debug_assert_eq!(x, 1);
    exp.extend_from_within(..);
    LogTables { exp, log }
}

/// An element of a [`FieldSpec`], held as its canonical code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    rep: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.render(self.rep))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.render(self.rep))
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn code(&self) -> u32 {
        self.rep
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.digits(self.rep)
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    pub fn is_one(&self) -> bool {
        self.rep == 1
    }

    fn with(&self, rep: u32) -> FieldElement {
        FieldElement { spec: self.spec.clone(), rep }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.with(self.spec.add(self.rep, other.rep)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.with(self.spec.sub(self.rep, other.rep)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.with(self.spec.mul(self.rep, other.rep)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.spec.neg(self.rep))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.spec.inv(self.rep).map(|r| self.with(r)).ok_or(Error::DivisionByZero)
    }

    /// `self^k`; `0^0 = 1`, since `g^0 = 1` must hold for every `g`.
    pub fn pow(&self, k: &BigUint) -> FieldElement {
        self.with(self.spec.pow_big(self.rep, k))
    }

    pub fn pow_u64(&self, k: u64) -> FieldElement {
        self.with(self.spec.pow(self.rep, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn prime_field_has_no_modulus() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(f.modulus_string().unwrap(), "t^2+t+1");
    }

    #[test]
    fn canonical_moduli_small_extensions() {
        // GF(9): x^2+1 is the first monic irreducible quadratic over GF(3) in base-3 order
        assert_eq!(gf(9).modulus(), Some(&[1, 0, 1][..]));
        // GF(8): x^3+x+1 (code 11) precedes x^3+x^2+1 (code 13)
        assert_eq!(gf(8).modulus(), Some(&[1, 1, 0, 1][..]));
        // GF(25): x^2+2 (2 is a non-residue mod 5)
        assert_eq!(gf(25).modulus(), Some(&[2, 0, 1][..]));
    }

    #[test]
    fn composite_characteristic_rejected() {
        let err = FieldSpec::new(4, 1).unwrap_err();
        assert!(err.to_string().contains("not prime"));
        assert!(matches!(FieldSpec::from_order(6), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn oversized_field_rejected() {
        let err = FieldSpec::new(2, 21).unwrap_err();
        assert!(err.to_string().contains("field too large"));
        assert!(FieldSpec::with_limit(2, 21, 1 << 21).is_ok());
    }

    #[test]
    fn spec_arithmetic_examples() {
        let f2 = gf(2);
        assert!(f2.one().add(&f2.one()).unwrap().is_zero());
        let f5 = gf(5);
        let three = f5.element(3).unwrap();
        let four = f5.element(4).unwrap();
        assert_eq!(three.mul(&four).unwrap().code(), 2);
        assert_eq!(f5.element(2).unwrap().inv().unwrap().code(), 3);
        assert_eq!(f5.element(2).unwrap().pow_u64(4).code(), 1);

        let f4 = gf(4);
        let t = f4.generator().unwrap();
        let t_plus_1 = t.add(&f4.one()).unwrap();
        assert_eq!(t.mul(&t).unwrap(), t_plus_1);
        assert_eq!(t.inv().unwrap(), t_plus_1);
        assert!(t.pow_u64(3).is_one());
        assert_eq!(t_plus_1.to_string(), "t+1");
    }

    #[test]
    fn zero_has_no_inverse_and_zero_pow_zero_is_one() {
        let f2 = gf(2);
        assert!(matches!(f2.zero().inv(), Err(Error::DivisionByZero)));
        assert!(f2.zero().pow(&BigUint::zero()).is_one());
        assert!(gf(9).zero().pow_u64(0).is_one());
    }

    #[test]
    fn mismatched_fields_error() {
        let a = gf(2).one();
        let b = gf(3).one();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = gf(q);
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    assert_eq!(f.pow(a, (q - 1) as u64), 1, "GF({q}) group order");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in (0..q).step_by(((q / 8).max(1)) as usize) {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        for q in [4u64, 9, 27, 8] {
            let f = gf(q);
            for a in 0..f.q() {
                assert_eq!(f.pow(f.pth_root(a), f.p() as u64), a);
            }
        }
    }

    #[test]
    fn modulus_is_stable_across_constructions() {
        let a = FieldSpec::new(3, 4).unwrap();
        let b = FieldSpec::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.element(17).unwrap().inv().unwrap().code(), b.element(17).unwrap().inv().unwrap().code());
    }
}
