//! Exhaustive enumeration of polynomials of a fixed degree in canonical order.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::Poly;

pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

/// Degree-`n` polynomials with leading coefficients drawn from `leads`,
/// in base-`q` order of the full coefficient vector.
pub struct DegreeIter {
    spec: FieldSpec,
    n: usize,
    leads: Vec<u32>,
    lead_index: usize,
    body: u64,
    body_count: u64,
}

impl Iterator for DegreeIter {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.body == self.body_count {
            self.body = 0;
            self.lead_index += 1;
        }
        let lead = *self.leads.get(self.lead_index)?;
        let q = self.spec.q() as u64;
        let mut rest = self.body;
        let mut coeffs = Vec::with_capacity(self.n + 1);
        for _ in 0..self.n {
            coeffs.push((rest % q) as u32);
            rest /= q;
        }
        coeffs.push(lead);
        self.body += 1;
        Some(Poly::from_codes(&self.spec, coeffs))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = ((self.leads.len().saturating_sub(self.lead_index)) as u64 * self.body_count)
            .saturating_sub(self.body);
        (remaining as usize, Some(remaining as usize))
    }
}

fn degree_iter(spec: &FieldSpec, n: usize, leads: Vec<u32>, cap: u64) -> Result<DegreeIter> {
    let body = BigUint::from(spec.q()).pow(n as u32);
    let required = &body * BigUint::from(leads.len());
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    Ok(DegreeIter {
        spec: spec.clone(),
        n,
        leads,
        lead_index: 0,
        body: 0,
        body_count: body.to_u64().unwrap(),
    })
}

/// All `q^n` monic polynomials of degree `n`, constant term varying fastest.
pub fn enumerate_monic(spec: &FieldSpec, n: usize) -> Result<DegreeIter> {
    enumerate_monic_capped(spec, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_monic_capped(spec: &FieldSpec, n: usize, cap: u64) -> Result<DegreeIter> {
    degree_iter(spec, n, vec![1], cap)
}

/// All `(q-1) q^n` polynomials of exact degree `n`.
pub fn enumerate_all(spec: &FieldSpec, n: usize) -> Result<DegreeIter> {
    enumerate_all_capped(spec, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_all_capped(spec: &FieldSpec, n: usize, cap: u64) -> Result<DegreeIter> {
    degree_iter(spec, n, (1..spec.q()).collect(), cap)
}

pub fn count_all_of_degree(spec: &FieldSpec, n: usize) -> BigUint {
    BigUint::from(spec.q() - 1) * BigUint::from(spec.q()).pow(n as u32)
}

/// Monic irreducibles of degree `n >= 1` in canonical order.
pub fn enumerate_monic_irreducible(
    spec: &FieldSpec,
    n: usize,
) -> Result<impl Iterator<Item = Poly>> {
    enumerate_monic_irreducible_capped(spec, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_monic_irreducible_capped(
    spec: &FieldSpec,
    n: usize,
    cap: u64,
) -> Result<impl Iterator<Item = Poly>> {
    if n == 0 {
        return Err(Error::invalid("irreducible polynomials have degree at least 1"));
    }
    Ok(enumerate_monic_capped(spec, n, cap)?.filter(|f| f.is_irreducible().unwrap()))
}
