//! Rabin's irreducibility test and Cantor–Zassenhaus factorization
//! (squarefree decomposition, distinct-degree, equal-degree splitting).

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::integer::prime_divisors;

use super::Poly;

/// `unit * Π factor^multiplicity`, factors monic irreducible, pairwise
/// distinct, sorted by the canonical polynomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    unit: FieldElement,
    factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn unit(&self) -> &FieldElement {
        &self.unit
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    /// The distinct monic irreducible factors.
    pub fn primes(&self) -> impl Iterator<Item = &Poly> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    pub fn reconstruct(&self) -> Poly {
        let spec = self.unit.spec();
        let mut acc = Poly::constant(spec, self.unit.code());
        for (p, k) in &self.factors {
            acc = &acc * &p.pow(*k as u64);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            let u = self.unit.to_string();
            parts.push(if u.contains('+') { format!("({u})") } else { u });
        }
        for (p, k) in &self.factors {
            let s = p.render();
            let s = if s.contains('+') { format!("({s})") } else { s };
            parts.push(if *k > 1 { format!("{s}^{k}") } else { s });
        }
        f.write_str(&parts.join(" * "))
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Poly {
    /// Rabin's test: `f` of degree `n` is irreducible iff `x^{q^n} ≡ x (mod f)`
    /// and `gcd(x^{q^{n/ℓ}} - x, f) = 1` for every prime `ℓ | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            None | Some(0) => {
                return Err(Error::invalid("irreducibility is undefined for constants"))
            }
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let x = Poly::x(self.spec());
        let q = self.spec().q() as u64;
        let checkpoints: Vec<usize> = prime_divisors(n as u64).into_iter().map(|l| n / l as usize).collect();
        let mut h = x.clone();
        for k in 1..=n {
            h = h.powmod_u64(q, &f)?;
            if checkpoints.contains(&k) && !(&h - &x).gcd(&f)?.is_one() {
                return Ok(false);
            }
        }
        Ok(h == x)
    }

    /// `true` iff no irreducible factor appears twice.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::invalid("zero polynomial"));
        }
        if self.is_constant() {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.is_one())
    }

    /// Complete factorization into a unit and monic irreducible powers.
    ///
    /// Equal-degree splitting draws from a ChaCha generator seeded with a
    /// hash of the coefficient vector, so results and timings are reproducible.
    pub fn factor(&self) -> Result<Factorization> {
        let unit_code = self.leading_code().ok_or_else(|| Error::invalid("cannot factor zero"))?;
        let spec = self.spec().clone();
        let unit = spec.element(unit_code)?;
        let mut factors = Vec::new();
        if !self.is_constant() {
            let mut rng = ChaCha8Rng::seed_from_u64(fnv1a(self.coeffs()));
            for (part, mult) in squarefree_decomposition(&self.monic())? {
                for (block, d) in distinct_degree(&part)? {
                    for p in equal_degree(&block, d, &mut rng)? {
                        factors.push((p, mult));
                    }
                }
            }
            factors.sort();
        }
        Ok(Factorization { unit, factors })
    }
}

/// Möbius function on monic polynomials: `0` unless squarefree, otherwise
/// `(-1)^(number of irreducible factors)`; `μ(1) = 1`.
pub fn moebius_poly(f: &Poly) -> Result<i32> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.render()));
    }
    let fac = f.factor()?;
    if !fac.is_squarefree() {
        return Ok(0);
    }
    Ok(if fac.factors().len() % 2 == 0 { 1 } else { -1 })
}

fn fnv1a(coeffs: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in coeffs {
        for b in c.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// `u` with `u(x)^p = f(x)`, for `f` a polynomial in `x^p`.
fn pth_root(f: &Poly) -> Poly {
    let spec = f.spec();
    let p = spec.p() as usize;
    debug_assert!(f.coeffs().iter().enumerate().all(|(i, &c)| i % p == 0 || c == 0));
    let coeffs = f.coeffs().iter().step_by(p).map(|&c| spec.pth_root(c)).collect();
    Poly::from_codes(spec, coeffs)
}

/// Pairwise coprime squarefree `(part, multiplicity)` with `f = Π part^multiplicity`.
fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    debug_assert!(f.is_monic());
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let part = w.div_exact(&y)?;
        if !part.is_one() {
            out.push((part, i));
        }
        c = c.div_exact(&y)?;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        let p = f.spec().p();
        for (part, k) in squarefree_decomposition(&pth_root(&c))? {
            out.push((part, k * p));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into products of same-degree irreducibles.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let spec = f.spec();
    let q = spec.q() as u64;
    let x = Poly::x(spec);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree().unwrap() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod_u64(q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

fn random_poly(spec: &FieldSpec, below_degree: usize, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = (0..below_degree).map(|_| rng.gen_range(0..spec.q())).collect();
    Poly::from_codes(spec, coeffs)
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap();
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let spec = f.spec();
    let q = spec.q();
    loop {
        let a = random_poly(spec, n, rng);
        if a.is_constant() {
            continue;
        }
        let b = if q % 2 == 1 {
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            &a.powmod(&e, f)? - &Poly::one(spec)
        } else {
            // absolute trace GF(q^d) → GF(2): Σ a^{2^i}, i < e·d
            let rounds = spec.e() as usize * d;
            let mut t = a.rem(f)?;
            let mut s = t.clone();
            for _ in 1..rounds {
                t = t.mulmod(&t, f)?;
                s = &s + &t;
            }
            s
        };
        if b.is_zero() {
            continue;
        }
        let g = b.gcd(f)?;
        let dg = g.degree().unwrap();
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}
