use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::check::{CheckResult, Params, Relation, Status};
use crate::counting::count_irreducible;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::real::{rational_to_sci, BoundValue};

use super::rat;

/// `E(f) = Π_{p | f} (1 + 1/|p|)` over the distinct monic irreducible factors of `f`.
pub fn e_of(f: &Poly) -> Result<BigRational> {
    if f.is_zero() {
        return Err(Error::invalid("E(0) is undefined"));
    }
    let q = BigInt::from(f.spec().q());
    let mut acc = BigRational::one();
    for p in f.factor()?.primes() {
        let norm = q.pow(p.degree().unwrap() as u32);
        acc *= BigRational::new(&norm + 1, norm);
    }
    Ok(acc)
}

/// `H_m = 1 + 1/2 + ... + 1/m`.
pub fn harmonic(m: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::invalid("harmonic numbers start at m = 1"));
    }
    Ok((1..=m).map(|k| rat(1, k)).sum())
}

/// `Π_{deg p <= m} (1 + 1/|p|)` kept as an unreduced fraction.
#[derive(Clone, Debug)]
pub struct SmoothProduct {
    pub m: u32,
    pub num: BigUint,
    pub den: BigUint,
}

impl SmoothProduct {
    /// `r <= self`, by cross-multiplication.
    pub fn dominates(&self, r: &BigRational) -> bool {
        let (n, d) = (r.numer().to_biguint().unwrap(), r.denom().to_biguint().unwrap());
        n * &self.den <= &self.num * d
    }
}

pub fn smooth_product(spec: &FieldSpec, m: u32) -> Result<SmoothProduct> {
    let q = BigUint::from(spec.q());
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 1..=m {
        let count = count_irreducible(k as usize, spec)?.to_u32().expect("exponent too large");
        let qk = q.pow(k);
        num *= (&qk + 1u32).pow(count);
        den *= qk.pow(count);
    }
    Ok(SmoothProduct { m, num, den })
}

/// `log Π_{deg p <= m} (1 + 1/|p|) = Σ_k I_q(k) log(1 + q^{-k})`.
pub fn ln_smooth_product(spec: &FieldSpec, m: u32) -> Result<BoundValue> {
    let mut acc = BoundValue::from_int(0);
    for k in 1..=m {
        let count = count_irreducible(k as usize, spec)?.to_i64().expect("count too large");
        let qk = BigInt::from(spec.q()).pow(k);
        let term = BoundValue::from_rational(&BigRational::new(&qk + 1, qk)).ln();
        acc = acc + term.mul_int(count);
    }
    Ok(acc)
}

fn params(spec: &FieldSpec, m: u32) -> Params {
    Params::new().with("q", spec.q()).with("m", m)
}

/// `E(f) <= Π_{deg p <= m} (1 + 1/|p|)` when `q^m >= deg f`.
pub fn check_lemma1(f: &Poly, m: u32) -> Result<CheckResult> {
    let spec = f.spec();
    let deg = f.degree().ok_or_else(|| Error::invalid("f must be nonzero"))?;
    if m == 0 || BigUint::from(spec.q()).pow(m) < BigUint::from(deg) {
        return Err(Error::invalid(format!("need m >= 1 and q^m >= deg f = {deg}")));
    }
    let e = e_of(f)?;
    let prod = smooth_product(spec, m)?;
    let ok = prod.dominates(&e);
    Ok(CheckResult {
        check: "lemma1".into(),
        params: params(spec, m).with("f", f.render()).into_map(),
        lhs: format!("{e}"),
        rhs: ln_smooth_product(spec, m)?.exp().to_decimal(12),
        status: if ok { Status::Pass } else { Status::Fail },
        slack: "0".into(),
    })
}

/// `Π_{deg p <= m} (1 + 1/|p|) < exp(H_m)`, compared in log form.
pub fn check_lemma2(spec: &FieldSpec, m: u32) -> Result<CheckResult> {
    let lhs = ln_smooth_product(spec, m)?;
    let rhs = BoundValue::from_rational(&harmonic(m as u64)?);
    let mut res = CheckResult::directed("lemma2", params(spec, m), &lhs, Relation::Less, &rhs);
    res.lhs = format!("log {}", res.lhs);
    res.rhs = format!("log {}", res.rhs);
    Ok(res)
}

/// `exp(H_m) <= e + e^γ (m-1) < 1 + e^γ m`.
pub fn check_lemma_h(m: u32) -> Result<Vec<CheckResult>> {
    let exp_h = BoundValue::from_rational(&harmonic(m as u64)?).exp();
    let e = BoundValue::e();
    let eg = BoundValue::exp_gamma();
    let mid = &e + &eg.mul_int(m as i64 - 1);
    let top = &BoundValue::from_int(1) + &eg.mul_int(m as i64);
    let p = || Params::new().with("m", m);
    let mut first = CheckResult::directed("lemma_h_batir", p(), &exp_h, Relation::LessOrEqual, &mid);
    if m == 1 {
        // exp(H_1) = e exactly
        first = first.with_status(Status::Pass);
        first.slack = rational_to_sci(&(exp_h.slack() + mid.slack()));
    }
    let second = CheckResult::directed("lemma_h_second", p(), &mid, Relation::Less, &top);
    Ok(vec![first, second])
}

/// The `E(f)` bound for `sample_f`, the smooth product bound and both halves of the harmonic chain at `m`.
pub fn check_smooth_product_bounds(spec: &FieldSpec, m: u32, sample_f: &Poly) -> Result<Vec<CheckResult>> {
    spec.check_same(sample_f.spec())?;
    let mut out = vec![check_lemma1(sample_f, m)?, check_lemma2(spec, m)?];
    out.extend(check_lemma_h(m)?);
    Ok(out)
}

/// `1 + e^γ min{deg f / q, log deg f / log q}` for `deg f >= 2`.
pub fn e_upper_bound(f: &Poly) -> Result<BoundValue> {
    let deg = match f.degree() {
        Some(d) if d >= 2 => d as i64,
        _ => return Err(Error::invalid("the bound needs deg f >= 2")),
    };
    Ok(e_bound_at(f.spec().q() as i64, deg))
}

pub(crate) fn e_bound_at(q: i64, deg: i64) -> BoundValue {
    let linear = BoundValue::from_ratio(deg, q);
    let log = BoundValue::from_int(deg).ln() / BoundValue::from_int(q).ln();
    &BoundValue::from_int(1) + &(BoundValue::exp_gamma() * linear.min(&log))
}

/// `E(f) <= 1 + e^γ min{deg f / q, log deg f / log q}`.
pub fn check_lemma3(f: &Poly) -> Result<CheckResult> {
    let rhs = e_upper_bound(f)?;
    let lhs = BoundValue::from_rational(&e_of(f)?);
    let p = Params::new().with("q", f.spec().q()).with("f", f.render());
    Ok(CheckResult::directed("lemma3", p, &lhs, Relation::LessOrEqual, &rhs))
}
