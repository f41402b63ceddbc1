//! Truncations of `S(g) = Σ μ²(f) / (|f| ord_f(g))` and the bounds that control it.
//!
//! The sum runs over monic `f` with `deg f >= 1` and `gcd(f, g) = 1`; `f = 1`
//! is excluded. Partial sums only ever underestimate `S(g)`, so they can
//! falsify an upper bound but never certify one.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::check::{CheckResult, Params, Relation, Status};
use crate::error::{Error, Result};
use crate::poly::{enumerate_monic_capped, order_mod, Poly};
use crate::real::BoundValue;

use super::divisor::e_bound_at;
use super::e_of;

pub const DEFAULT_SERIES_CUTOFF: usize = 6;

#[derive(Clone, Debug)]
pub struct SeriesTruncation {
    pub g: Poly,
    pub cutoff: usize,
    /// `Σ μ²(f) / (|f| ord_f(g))` over `1 <= deg f <= cutoff`.
    pub partial: BigRational,
    /// Number of contributing `f`.
    pub terms: u64,
    /// `T_g(ℓ) = Σ_{ord_f(g) = ℓ} μ²(f)/|f|`, restricted to the cutoff.
    pub by_order: BTreeMap<BigUint, BigRational>,
}

impl SeriesTruncation {
    pub fn t(&self, l: &BigUint) -> BigRational {
        self.by_order.get(l).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `H_g(x) = Σ_{ℓ <= x} T_g(ℓ)`.
    pub fn h(&self, x: &BigRational) -> BigRational {
        if *x < BigRational::one() {
            return BigRational::zero();
        }
        let fx = x.floor().to_integer().to_biguint().unwrap();
        self.by_order.range(..=fx).map(|(_, v)| v).sum()
    }
}

/// Enumerates every monic squarefree `f` coprime to `g` with `1 <= deg f <= cutoff`.
pub fn s_truncated(g: &Poly, cutoff: usize, cap: u64) -> Result<SeriesTruncation> {
    if g.degree().unwrap_or(0) == 0 {
        return Err(Error::invalid("g must have degree at least 1"));
    }
    if cutoff == 0 {
        return Err(Error::invalid("cutoff must be at least 1"));
    }
    let spec = g.spec();
    let mut candidates = Vec::new();
    for d in 1..=cutoff {
        candidates.extend(enumerate_monic_capped(spec, d, cap)?);
    }
    let terms: Vec<(BigUint, BigRational)> = candidates
        .par_iter()
        .map(|f| -> Result<Option<(BigUint, BigRational)>> {
            if !f.gcd(g)?.is_one() || !f.is_squarefree()? {
                return Ok(None);
            }
            let ord = order_mod(g, f)?;
            Ok(Some((ord, BigRational::new(BigInt::one(), f.norm().into()))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut by_order: BTreeMap<BigUint, BigRational> = BTreeMap::new();
    for (ord, w) in &terms {
        *by_order.entry(ord.clone()).or_insert_with(BigRational::zero) += w;
    }
    let partial = by_order
        .iter()
        .map(|(l, t)| t / BigRational::from_integer(BigInt::from(l.clone())))
        .sum();
    Ok(SeriesTruncation { g: g.clone(), cutoff, partial, terms: terms.len() as u64, by_order })
}

/// `1 + e^γ min{5 sqrt(δ/q), log 6δ / log q}`.
pub fn eg_sg_budget(q: u32, delta: usize) -> BoundValue {
    let d = delta as i64;
    let root = BoundValue::from_ratio(d, q as i64).sqrt().mul_int(5);
    let log = BoundValue::from_int(6 * d).ln() / BoundValue::from_int(q as i64).ln();
    &BoundValue::from_int(1) + &(BoundValue::exp_gamma() * root.min(&log))
}

/// `E(g) · S_D(g) < budget(q, δ)`.
pub fn budget_check(g: &Poly, cutoff: usize, cap: u64) -> Result<CheckResult> {
    let trunc = s_truncated(g, cutoff, cap)?;
    let lhs = BoundValue::from_rational(&(e_of(g)? * &trunc.partial));
    let rhs = eg_sg_budget(g.spec().q(), g.degree().unwrap());
    let p = Params::new().with("q", g.spec().q()).with("g", g.render()).with("D", cutoff);
    Ok(CheckResult::directed("budget", p, &lhs, Relation::Less, &rhs))
}

/// `E(g) H_g(x) <= 1 + e^γ min{z/q, log z / log q}` and `H_g(x) <= E(Π_{ℓ<=x}(g^ℓ - 1))`.
///
/// `z = δ(1 + ⌊x⌋⌊x+1⌋/2)`. Requires `cutoff >= δ⌊x⌋(⌊x⌋+1)/2 + δ` so that
/// every `f` with `ord_f(g) <= x` is enumerated.
pub fn check_eh_bound(g: &Poly, x: &BigRational, cutoff: usize, cap: u64) -> Result<Vec<CheckResult>> {
    let delta = g.degree().filter(|&d| d >= 1).ok_or_else(|| Error::invalid("g must have degree at least 1"))?;
    let p = || Params::new().with("q", g.spec().q()).with("g", g.render()).with("x", x).with("D", cutoff);
    if *x < BigRational::one() {
        let zero = BigRational::zero();
        return Ok(vec![CheckResult::exact("eh_bound", p(), &zero, Relation::LessOrEqual, &BigRational::one())]);
    }
    let fx: usize = x.floor().to_integer().try_into().map_err(|_| Error::invalid("x too large"))?;
    let needed = delta * fx * (fx + 1) / 2 + delta;
    if cutoff < needed {
        return Err(Error::invalid(format!("cutoff D = {cutoff} too small for x = {x}; need D >= {needed}")));
    }
    let trunc = s_truncated(g, cutoff, cap)?;
    let h = trunc.h(x);
    let z = delta * (1 + fx * (fx + 1) / 2);
    let lhs = BoundValue::from_rational(&(e_of(g)? * &h));
    let rhs = e_bound_at(g.spec().q() as i64, z as i64);
    let first = CheckResult::directed("eh_bound", p().with("z", z), &lhs, Relation::LessOrEqual, &rhs);

    let one = Poly::one(g.spec());
    let mut prod = one.clone();
    let mut gl = one.clone();
    for _ in 0..fx {
        gl = &gl * g;
        prod = &prod * &(&gl - &one);
    }
    let second = CheckResult::exact("eh_divisor_sum", p(), &h, Relation::LessOrEqual, &e_of(&prod)?);
    Ok(vec![first, second])
}

/// The `q >= 4δ` integral estimate, or the displayed fallback chain when `q < 4δ`.
pub fn check_large_q_estimate(delta: usize, q: u32) -> Result<Vec<CheckResult>> {
    if delta == 0 || q < 2 {
        return Err(Error::invalid("need delta >= 1 and q >= 2"));
    }
    let (d, qi) = (delta as i64, q as i64);
    let p = || Params::new().with("delta", delta).with("q", q);
    let eg = BoundValue::exp_gamma();
    let one = BoundValue::from_int(1);
    let ln_q = BoundValue::from_int(qi).ln();
    if qi >= 4 * d {
        // ∫_1^2 (2δ/q) x^-2 + ∫_2^s (δ/q) + ∫_s^∞ log(δx²)/log q · x^-2 with s = sqrt(q/δ)
        let s = BoundValue::from_ratio(qi, d).sqrt();
        let piece1 = BoundValue::from_ratio(d, qi);
        let piece2 = &(&s - &BoundValue::from_int(2)) * &BoundValue::from_ratio(d, qi);
        let piece3 = &(&BoundValue::from_int(2) + &ln_q) / &(&s * &ln_q);
        let pieces = &(&piece1 + &piece2) + &piece3;

        let root = BoundValue::from_ratio(d, qi).sqrt();
        let closed = &(&(&BoundValue::from_ratio(d, qi) + &root) - &BoundValue::from_ratio(2 * d, qi)) + &piece3;
        let consistent = matches!(pieces.certain_cmp(&closed), None | Some(std::cmp::Ordering::Equal));
        let mut agree = CheckResult::directed("largeq_pieces", p(), &pieces, Relation::LessOrEqual, &closed);
        agree = agree.with_status(if consistent { Status::Pass } else { Status::Fail });

        let lhs = &one + &(&eg * &closed);
        let rhs = &one + &(&eg * &root).mul_int(5);
        Ok(vec![agree, CheckResult::directed("largeq_estimate", p(), &lhs, Relation::Less, &rhs)])
    } else {
        let ln6d = BoundValue::from_int(6 * d).ln();
        let a = BoundValue::from_int(d).sqrt().mul_int(5) / ln6d.clone();
        let b = BoundValue::from_int(6 * d).sqrt().mul_int(2) / ln6d;
        let c = BoundValue::from_int(qi).sqrt() / ln_q;
        Ok(vec![
            CheckResult::directed("largeq_fallback_first", p(), &b, Relation::Less, &a),
            CheckResult::directed("largeq_fallback_second", p(), &c, Relation::Less, &b),
        ])
    }
}
