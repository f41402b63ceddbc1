use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::check::{CheckResult, Params, Relation, Status};
use crate::counting::{count_irreducible, IrreducibleTable};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{enumerate_all_capped, enumerate_monic_capped};

use super::{e_of, rat};

/// Pair-count bounds for every nonzero `f` with `deg f < n`.
///
/// Three checks per `f`, all exact:
/// `A(f,n) <= 8q^n/n² Π_{p|f} (1 - 1/|p|)^{-1}`,
/// `A(f,n) <= 8q^n/(n²(1 - 1/q)) E(f)` and
/// `Ã(f,n) <= 8q^{n+1}/n² E(f)`.
pub fn check_pollack(spec: &FieldSpec, n: usize, cap: u64) -> Result<Vec<CheckResult>> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let table = IrreducibleTable::shared(spec, n, cap)?;
    let q = BigInt::from(spec.q());
    let qn = q.pow(n as u32);
    let n2 = BigInt::from(n * n);
    let base = BigRational::new(BigInt::from(8) * &qn, n2.clone());
    let unit_scaled_base = &base / (BigRational::one() - rat(1, q.clone()));
    let tilde_base = BigRational::new(BigInt::from(8) * &qn * &q, n2);

    let mut out = Vec::new();
    for d in 0..n {
        for f in enumerate_all_capped(spec, d, cap)? {
            let a = table.monic().iter().filter(|h| table.contains_monic(&(*h + &f))).count();
            let at = table.all().filter(|h| table.contains_any(&(h + &f))).count();
            let a = BigRational::from_integer(a.into());
            let at = BigRational::from_integer(at.into());
            let mut euler = BigRational::one();
            for p in f.factor()?.primes() {
                let norm = q.pow(p.degree().unwrap() as u32);
                euler *= BigRational::new(norm.clone(), norm - 1);
            }
            let e = e_of(&f)?;
            let p = || Params::new().with("q", spec.q()).with("n", n).with("f", f.render());
            out.push(CheckResult::exact("pollack", p(), &a, Relation::LessOrEqual, &(&base * euler)));
            out.push(CheckResult::exact("pollack_e_form", p(), &a, Relation::LessOrEqual, &(&unit_scaled_base * &e)));
            out.push(CheckResult::exact("pollack_tilde", p(), &at, Relation::LessOrEqual, &(&tilde_base * &e)));
        }
    }
    Ok(out)
}

/// `Σ_{monic f, deg f <= N} |f|^{-2}` against its closed form and the truncated Euler product.
///
/// Checks, exactly:
/// the sum equals `(1 - q^{-(N+1)}) / (1 - 1/q)`;
/// the sum is below `Π_{k <= N} (1 - q^{-2k})^{-I_q(k)}`;
/// that product is below `1 / (1 - 1/q)`.
pub fn check_zeta_identity(spec: &FieldSpec, big_n: usize, cap: u64) -> Result<Vec<CheckResult>> {
    if big_n == 0 {
        return Err(Error::invalid("N must be at least 1"));
    }
    let q = BigInt::from(spec.q());
    let mut sum = BigRational::zero();
    for d in 0..=big_n {
        let count = enumerate_monic_capped(spec, d, cap)?.count();
        sum += BigRational::new(count.into(), q.pow(2 * d as u32));
    }
    let one = BigRational::one();
    let limit = &one / (&one - rat(1, q.clone()));
    let closed = (&one - rat(1, q.pow(big_n as u32 + 1))) * &limit;

    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let qu = BigUint::from(spec.q());
    for k in 1..=big_n as u32 {
        let count = count_irreducible(k as usize, spec)?.to_u32().expect("exponent too large");
        let q2k = qu.pow(2 * k);
        num *= q2k.pow(count);
        den *= (q2k - 1u32).pow(count);
    }
    let euler = BigRational::new(num.into(), den.into());

    let p = || Params::new().with("q", spec.q()).with("N", big_n);
    let mut identity = CheckResult::exact("zeta_closed_form", p(), &sum, Relation::LessOrEqual, &closed);
    if sum != closed {
        identity = identity.with_status(Status::Fail);
    }
    Ok(vec![
        identity,
        CheckResult::exact("zeta_euler_lower", p(), &sum, Relation::Less, &euler),
        CheckResult::exact("zeta_euler_upper", p(), &euler, Relation::Less, &limit),
    ])
}
