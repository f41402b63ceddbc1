//! Brute-force oracles built only from ring arithmetic and enumeration.
#![allow(dead_code)]

use num_rational::BigRational;
use romanoff::poly::enumerate_monic;
use romanoff::{FieldSpec, Poly};

pub fn gf(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

pub fn poly(s: &str, q: u64) -> Poly {
    Poly::parse(s, &gf(q)).unwrap()
}

pub fn monic(spec: &FieldSpec, n: usize) -> Vec<Poly> {
    enumerate_monic(spec, n).unwrap().collect()
}

/// Base-`q` index of the coefficients below the leading one.
pub fn monic_index(f: &Poly) -> usize {
    let q = f.spec().q() as usize;
    let d = f.degree().unwrap();
    (0..d).rev().fold(0, |acc, i| acc * q + f.coeff(i) as usize)
}

/// Irreducibility of every monic degree-`n` polynomial, by marking all products.
pub fn irreducible_sieve(spec: &FieldSpec, n: usize) -> Vec<bool> {
    let size = (spec.q() as usize).pow(n as u32);
    let mut prime = vec![true; size];
    for i in 1..=n / 2 {
        let small = monic(spec, i);
        let large = monic(spec, n - i);
        for a in &small {
            for b in &large {
                prime[monic_index(&(a * b))] = false;
            }
        }
    }
    prime
}

pub fn sieve_count(spec: &FieldSpec, n: usize) -> u64 {
    irreducible_sieve(spec, n).into_iter().filter(|&p| p).count() as u64
}

/// Irreducible iff no monic polynomial of degree `1..=deg/2` divides it.
pub fn is_irreducible_trial(f: &Poly) -> bool {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for k in 1..=d / 2 {
        for m in monic(f.spec(), k) {
            if f.rem(&m).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

/// Smallest `k >= 1` with `g^k ≡ 1 (mod m)`, by repeated multiplication.
pub fn naive_order(g: &Poly, m: &Poly) -> Option<u64> {
    let one = Poly::one(g.spec()).rem(m).unwrap();
    let base = g.rem(m).unwrap();
    let mut acc = base.clone();
    let bound = (g.spec().q() as u64).pow(m.degree().unwrap() as u32);
    for k in 1..=bound {
        if acc == one {
            return Some(k);
        }
        acc = acc.mulmod(&base, m).unwrap();
    }
    None
}

/// Distinct monic irreducible divisors, found by trial division.
pub fn distinct_prime_divisors(f: &Poly) -> Vec<Poly> {
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut k = 1;
    while rest.degree().unwrap_or(0) >= 1 {
        if 2 * k > rest.degree().unwrap() {
            out.push(rest.clone());
            break;
        }
        for m in monic(f.spec(), k) {
            if rest.rem(&m).unwrap().is_zero() {
                out.push(m.clone());
                while rest.rem(&m).unwrap().is_zero() {
                    rest = rest.div_exact(&m).unwrap();
                }
            }
        }
        k += 1;
    }
    out
}

/// `Π_{p | f} (1 + 1/|p|)` from trial-division factors.
pub fn e_oracle(f: &Poly) -> BigRational {
    let q = f.spec().q() as i64;
    distinct_prime_divisors(f)
        .iter()
        .map(|p| {
            let norm = num_bigint::BigInt::from(q).pow(p.degree().unwrap() as u32);
            BigRational::new(&norm + 1, norm)
        })
        .product()
}
