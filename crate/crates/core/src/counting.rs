//! Exact brute-force counts for representations `f = h + g^k`.
//!
//! Every quantity is computed by enumeration over `GF(q)[x]` and is exact.
//! Polynomials are keyed by their base-`q` coefficient integer so that sets of
//! representable `f` are plain hash sets of `u64`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::check::Status;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::integer::{divisors, moebius};
use crate::poly::{enumerate_monic_capped, Poly};

/// Default bound on `q^n` for brute-force instances.
pub const DEFAULT_COUNT_CAP: u64 = 10_000_000;

/// `I_q(n)` from the Möbius formula.
///
/// # Panics
/// If the divisor sum is not divisible by `n` or the classical sandwich
/// `q^n/n - 2q^{n/2}/n < I_q(n) <= q^n/n` fails; both are theorems.
pub fn count_irreducible(n: usize, spec: &FieldSpec) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let q = BigInt::from(spec.q());
    let mut sum = BigInt::zero();
    for d in divisors(n as u64) {
        let mu = moebius(n as u64 / d);
        if mu != 0 {
            sum += BigInt::from(mu) * q.pow(d as u32);
        }
    }
    let (count, rem) = sum.div_rem(&BigInt::from(n));
    assert!(rem.is_zero(), "necklace sum not divisible by n");
    let count = count.to_biguint().expect("negative irreducible count");
    assert!(irreducible_sandwich_holds(n, spec, &count));
    Ok(count)
}

/// `q^n/n - 2q^{n/2}/n < count <= q^n/n`, decided exactly by squaring.
pub fn irreducible_sandwich_holds(n: usize, spec: &FieldSpec, count: &BigUint) -> bool {
    let qn = BigUint::from(spec.q()).pow(n as u32);
    let n_count = count * BigUint::from(n);
    if n_count > qn {
        return false;
    }
    let gap = &qn - n_count;
    &gap * &gap < qn * 4u32
}

/// Monic irreducibles of one degree, with key sets for membership tests.
pub struct IrreducibleTable {
    spec: FieldSpec,
    n: usize,
    monic: Vec<Poly>,
    monic_keys: HashSet<u64>,
    any_keys: HashSet<u64>,
}

impl IrreducibleTable {
    pub fn new(spec: &FieldSpec, n: usize, cap: u64) -> Result<IrreducibleTable> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        let mut monic = Vec::new();
        for f in enumerate_monic_capped(spec, n, cap)? {
            if f.is_irreducible()? {
                monic.push(f);
            }
        }
        let monic_keys: HashSet<u64> = monic.iter().map(key).collect();
        let mut any_keys = HashSet::with_capacity(monic.len() * (spec.q() as usize - 1));
        for h in &monic {
            for a in 1..spec.q() {
                any_keys.insert(key(&h.scale(a)));
            }
        }
        Ok(IrreducibleTable { spec: spec.clone(), n, monic, monic_keys, any_keys })
    }

    /// Process-wide cached table for `(spec, n)`.
    pub fn shared(spec: &FieldSpec, n: usize, cap: u64) -> Result<Arc<IrreducibleTable>> {
        type Cache = Mutex<HashMap<(u32, u32, usize), Arc<OnceLock<Arc<IrreducibleTable>>>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        check_cap(spec, n, cap)?;
        let cell = {
            let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
            map.entry((spec.p(), spec.e(), n)).or_default().clone()
        };
        if let Some(t) = cell.get() {
            return Ok(t.clone());
        }
        let table = Arc::new(IrreducibleTable::new(spec, n, u64::MAX)?);
        Ok(cell.get_or_init(|| table).clone())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn monic(&self) -> &[Poly] {
        &self.monic
    }

    pub fn len(&self) -> usize {
        self.monic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monic.is_empty()
    }

    pub fn contains_monic(&self, f: &Poly) -> bool {
        f.degree() == Some(self.n) && self.monic_keys.contains(&key(f))
    }

    pub fn contains_any(&self, f: &Poly) -> bool {
        f.degree() == Some(self.n) && self.any_keys.contains(&key(f))
    }

    /// All irreducibles of degree `n`, every leading coefficient.
    pub fn all(&self) -> impl Iterator<Item = Poly> + '_ {
        (1..self.spec.q()).flat_map(move |a| self.monic.iter().map(move |h| h.scale(a)))
    }
}

fn check_cap(spec: &FieldSpec, n: usize, cap: u64) -> Result<()> {
    let required = BigUint::from(spec.q()).pow(n as u32);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    Ok(())
}

fn key(f: &Poly) -> u64 {
    f.key().expect("polynomial key overflows u64")
}

/// `(spec, g, n)` with `deg g = δ >= 1` and `n >= 1`.
#[derive(Clone, Debug)]
pub struct RomanoffInstance {
    g: Poly,
    n: usize,
    cap: u64,
}

impl RomanoffInstance {
    pub fn new(g: &Poly, n: usize) -> Result<RomanoffInstance> {
        match g.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::invalid("g must have degree at least 1")),
        }
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        Ok(RomanoffInstance { g: g.clone(), n, cap: DEFAULT_COUNT_CAP })
    }

    pub fn with_cap(mut self, cap: u64) -> RomanoffInstance {
        self.cap = cap;
        self
    }

    pub fn spec(&self) -> &FieldSpec {
        self.g.spec()
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.g.degree().unwrap()
    }

    pub fn q(&self) -> u32 {
        self.spec().q()
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// `⌈n/δ⌉`, the number of `k` with `0 <= δk < n`.
    pub fn strict_k_count(&self) -> usize {
        self.n.div_ceil(self.delta())
    }

    /// `g^k` for `0 <= δk <= n`.
    pub fn powers(&self) -> Vec<Poly> {
        let kmax = self.n / self.delta();
        let mut out = Vec::with_capacity(kmax + 1);
        let mut acc = Poly::one(self.spec());
        for _ in 0..=kmax {
            out.push(acc.clone());
            acc = &acc * &self.g;
        }
        out
    }

    /// `g^k` for `0 <= δk < n`.
    pub fn strict_powers(&self) -> Vec<Poly> {
        let mut p = self.powers();
        p.truncate(self.strict_k_count());
        p
    }

    pub fn table(&self) -> Result<Arc<IrreducibleTable>> {
        IrreducibleTable::shared(self.spec(), self.n, self.cap)
    }

    fn q_pow_n(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.n as u32)
    }
}

/// Monic count `R` and the number of `(h, k)` sums discarded for leaving the monic degree-`n` set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentableSet {
    pub keys: HashSet<u64>,
    pub excluded_sums: u64,
}

fn representable(inst: &RomanoffInstance, monic_only: bool) -> Result<RepresentableSet> {
    let table = inst.table()?;
    let powers = inst.powers();
    let n = inst.n();
    let mut keys = HashSet::new();
    let mut excluded = 0u64;
    let hs: Box<dyn Iterator<Item = Poly>> =
        if monic_only { Box::new(table.monic().iter().cloned()) } else { Box::new(table.all()) };
    for h in hs {
        for gk in &powers {
            let f = &h + gk;
            let keep = f.degree() == Some(n) && (!monic_only || f.is_monic());
            if keep {
                keys.insert(key(&f));
            } else {
                excluded += 1;
            }
        }
    }
    Ok(RepresentableSet { keys, excluded_sums: excluded })
}

/// `R(n,g,q)` and `r = R/q^n`.
pub fn romanoff_count(inst: &RomanoffInstance) -> Result<(BigUint, BigRational)> {
    let set = representable(inst, true)?;
    let big_r = BigUint::from(set.keys.len());
    let r = ratio(&big_r, &inst.q_pow_n());
    Ok((big_r, r))
}

/// `R̃(n,g,q)` over all degree-`n` polynomials and `r̃ = R̃/((q-1)q^n)`.
pub fn romanoff_count_all(inst: &RomanoffInstance) -> Result<(BigUint, BigRational)> {
    let set = representable(inst, false)?;
    let big_r = BigUint::from(set.keys.len());
    let r = ratio(&big_r, &(inst.q_pow_n() * BigUint::from(inst.q() - 1)));
    Ok((big_r, r))
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn check_shift(f: &Poly, n: usize) -> Result<()> {
    if let Some(d) = f.degree() {
        if d >= n {
            return Err(Error::invalid(format!("shift must have degree below n = {n}, got {d}")));
        }
    }
    Ok(())
}

/// `A(f,n)`: monic irreducible `h` of degree `n` with `h + f` monic irreducible.
pub fn pair_count_a(f: &Poly, n: usize, cap: u64) -> Result<u64> {
    check_shift(f, n)?;
    let table = IrreducibleTable::shared(f.spec(), n, cap)?;
    Ok(pair_count_with(&table, f, false))
}

/// `Ã(f,n)`: the same over irreducibles with any leading coefficient.
pub fn pair_count_a_tilde(f: &Poly, n: usize, cap: u64) -> Result<u64> {
    check_shift(f, n)?;
    let table = IrreducibleTable::shared(f.spec(), n, cap)?;
    Ok(pair_count_with(&table, f, true))
}

fn pair_count_with(table: &IrreducibleTable, f: &Poly, any: bool) -> u64 {
    if any {
        table.all().filter(|h| table.contains_any(&(h + f))).count() as u64
    } else {
        table.monic().iter().filter(|h| table.contains_monic(&(*h + f))).count() as u64
    }
}

/// Ordered pairs `(k1, k2)` with `g^{k1} - g^{k2} = f` and `0 <= δk_i < n`.
pub fn diff_count_b(f: &Poly, inst: &RomanoffInstance) -> u64 {
    let powers = inst.strict_powers();
    let mut count = 0;
    for a in &powers {
        for b in &powers {
            if &(a - b) == f {
                count += 1;
            }
        }
    }
    count
}

fn rep_count(f: &Poly, inst: &RomanoffInstance, any: bool) -> Result<u64> {
    let table = inst.table()?;
    let mut count = 0;
    for gk in inst.strict_powers() {
        let h = f - &gk;
        let hit = if any { table.contains_any(&h) } else { table.contains_monic(&h) };
        count += hit as u64;
    }
    Ok(count)
}

/// `C(f,n)`: pairs `(h, k)` with `h + g^k = f`, `h` monic irreducible of degree `n`, `0 <= δk < n`.
pub fn rep_count_c(f: &Poly, inst: &RomanoffInstance) -> Result<u64> {
    rep_count(f, inst, false)
}

/// `C̃(f,n)`: as [`rep_count_c`] with `h` of any leading coefficient.
pub fn rep_count_c_tilde(f: &Poly, inst: &RomanoffInstance) -> Result<u64> {
    rep_count(f, inst, true)
}

/// Result of [`verify_double_count`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub q: u32,
    pub n: usize,
    pub delta: usize,
    pub g: String,
    pub irreducible_count: u64,
    #[serde(rename = "R")]
    pub big_r: u64,
    #[serde(with = "rational_text")]
    pub r: BigRational,
    #[serde(rename = "R_tilde")]
    pub big_r_tilde: u64,
    #[serde(with = "rational_text")]
    pub r_tilde: BigRational,
    pub sum_c: u64,
    pub sum_c2: u64,
    pub sum_ab: u64,
    pub sum_b: u64,
    pub epsilon_support: u64,
    pub sum_c_tilde: u64,
    pub sum_c2_tilde: u64,
    pub sum_ab_tilde: u64,
    pub epsilon_support_tilde: u64,
    /// `(h, k)` sums with `δk <= n` that are not monic of degree `n`.
    pub excluded_sums: u64,
    /// `(h, k)` sums over all irreducibles that drop below degree `n`.
    pub excluded_sums_tilde: u64,
    /// Names of identities that did not hold; empty on success.
    pub failures: Vec<String>,
}

impl CountReport {
    pub fn identity_status(&self) -> Status {
        if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Serializes a rational as `"num/den"` (or `"num"` for integers).
pub mod rational_text {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("bad rational '{text}'")))
    }
}

/// Computes every count for one instance and checks the structural identities.
///
/// Asserted exactly:
/// `ΣC² = ΣAB`, `ΣC = I_q(n)⌈n/δ⌉`, `ΣB = ⌈n/δ⌉²`, `B(0) = ⌈n/δ⌉`,
/// `ΣC̃ = (q-1)ΣC`, `ΣC̃² = ΣÃB`, `Ã(f) = Σ_α A(α⁻¹f)` on the difference support,
/// `R · ΣC² >= (ΣC)²`, `R = #{f : C(f) >= 1}`, and the counting upper bounds
/// `R <= I(1+⌊n/δ⌋)`, `R̃ <= (q-1)I(1+⌊n/δ⌋)`.
pub fn verify_double_count(inst: &RomanoffInstance) -> Result<CountReport> {
    let spec = inst.spec().clone();
    let table = inst.table()?;
    let strict = inst.strict_powers();
    let kc = strict.len() as u64;
    let q = spec.q();

    let mono = representable(inst, true)?;
    let any = representable(inst, false)?;

    let mut c: HashMap<u64, u64> = HashMap::new();
    for h in table.monic() {
        for gk in &strict {
            *c.entry(key(&(h + gk))).or_default() += 1;
        }
    }
    let mut c_tilde: HashMap<u64, u64> = HashMap::new();
    for h in table.all() {
        for gk in &strict {
            *c_tilde.entry(key(&(&h + gk))).or_default() += 1;
        }
    }

    let mut b: BTreeMap<Poly, u64> = BTreeMap::new();
    for a in &strict {
        for bb in &strict {
            *b.entry(a - bb).or_default() += 1;
        }
    }

    let mut sum_ab = 0u64;
    let mut sum_ab_tilde = 0u64;
    let mut failures = Vec::new();
    let mut unit_sum_ok = true;
    for (f, &bf) in &b {
        let a = pair_count_with(&table, f, false);
        let at = pair_count_with(&table, f, true);
        sum_ab += a * bf;
        sum_ab_tilde += at * bf;
        let by_units: u64 = (1..q)
            .map(|alpha| pair_count_with(&table, &f.scale(spec.inv(alpha).unwrap()), false))
            .sum();
        unit_sum_ok &= by_units == at;
    }
    if !unit_sum_ok {
        failures.push("A_tilde(f) = sum_alpha A(f/alpha)".to_string());
    }

    let sum_c: u64 = c.values().sum();
    let sum_c2: u64 = c.values().map(|v| v * v).sum();
    let sum_c_tilde: u64 = c_tilde.values().sum();
    let sum_c2_tilde: u64 = c_tilde.values().map(|v| v * v).sum();
    let sum_b: u64 = b.values().sum();
    let irr = table.len() as u64;
    let big_r = mono.keys.len() as u64;
    let big_r_tilde = any.keys.len() as u64;
    let bound_k = 1 + (inst.n() / inst.delta()) as u64;

    let mut expect = |ok: bool, name: &str| {
        if !ok {
            failures.push(name.to_string());
        }
    };
    expect(sum_c2 == sum_ab, "sum_C2 = sum_AB");
    expect(sum_c == irr * kc, "sum_C = I*ceil(n/delta)");
    expect(sum_b == kc * kc, "sum_B = ceil(n/delta)^2");
    expect(b.get(&Poly::zero(&spec)).copied() == Some(kc), "B(0) = ceil(n/delta)");
    expect(sum_c_tilde == (q as u64 - 1) * sum_c, "sum_C_tilde = (q-1) sum_C");
    expect(sum_c2_tilde == sum_ab_tilde, "sum_C2_tilde = sum_A_tilde_B");
    expect(
        BigUint::from(big_r) * BigUint::from(sum_c2) >= BigUint::from(sum_c).pow(2),
        "R >= (sum_C)^2 / sum_C2",
    );
    expect(big_r == c.len() as u64, "R = epsilon support");
    expect(big_r <= irr * bound_k, "R <= I(1+floor(n/delta))");
    expect(big_r_tilde <= (q as u64 - 1) * irr * bound_k, "R_tilde <= (q-1)I(1+floor(n/delta))");
    expect(BigUint::from(big_r_tilde) <= inst.q_pow_n() * BigUint::from(q - 1), "R_tilde <= (q-1)q^n");

    let qn = inst.q_pow_n();
    Ok(CountReport {
        q,
        n: inst.n(),
        delta: inst.delta(),
        g: inst.g().render(),
        irreducible_count: irr,
        big_r,
        r: ratio(&BigUint::from(big_r), &qn),
        big_r_tilde,
        r_tilde: ratio(&BigUint::from(big_r_tilde), &(qn * BigUint::from(q - 1))),
        sum_c,
        sum_c2,
        sum_ab,
        sum_b,
        epsilon_support: c.len() as u64,
        sum_c_tilde,
        sum_c2_tilde,
        sum_ab_tilde,
        epsilon_support_tilde: c_tilde.len() as u64,
        excluded_sums: mono.excluded_sums,
        excluded_sums_tilde: any.excluded_sums,
        failures,
    })
}

/// `R · Σ C² >= (Σ C)²` as an exact rational statement, `true` when `ΣC² = 0`.
pub fn cauchy_schwarz_holds(report: &CountReport) -> bool {
    if report.sum_c2 == 0 {
        return true;
    }
    let lhs = BigRational::from_integer(report.big_r.into());
    let rhs = BigRational::new(BigInt::from(report.sum_c).pow(2), BigInt::from(report.sum_c2));
    lhs >= rhs
}

/// `q^n` as a `u64`, when it fits.
pub fn q_pow_n_u64(spec: &FieldSpec, n: usize) -> Option<u64> {
    BigUint::from(spec.q()).pow(n as u32).to_u64()
}

impl std::fmt::Display for CountReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "q={} n={} g={} R={} r={} R~={} r~={} sum_C={} sum_C2={} sum_AB={}",
            self.q, self.n, self.g, self.big_r, self.r, self.big_r_tilde, self.r_tilde, self.sum_c, self.sum_c2, self.sum_ab
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn inst(q: u64, g: &str, n: usize) -> RomanoffInstance {
        let f = gf(q);
        RomanoffInstance::new(&Poly::parse(g, &f).unwrap(), n).unwrap()
    }

    #[test]
    fn irreducible_count_examples() {
        assert_eq!(count_irreducible(1, &gf(2)).unwrap(), BigUint::from(2u32));
        assert_eq!(count_irreducible(4, &gf(2)).unwrap(), BigUint::from(3u32));
        assert_eq!(count_irreducible(2, &gf(3)).unwrap(), BigUint::from(3u32));
        assert!(count_irreducible(0, &gf(2)).is_err());
    }

    #[test]
    fn romanoff_examples() {
        let (r, ratio) = romanoff_count(&inst(2, "x", 2)).unwrap();
        assert_eq!(r, BigUint::from(2u32));
        assert_eq!(ratio, BigRational::new(1.into(), 2.into()));
        assert_eq!(romanoff_count(&inst(2, "x+1", 2)).unwrap().0, BigUint::from(2u32));
        let (rt, rtr) = romanoff_count_all(&inst(2, "x", 2)).unwrap();
        assert_eq!((rt, rtr), romanoff_count(&inst(2, "x", 2)).unwrap());
    }

    #[test]
    fn representable_sets_match_hand_enumeration() {
        let f = gf(2);
        let set = representable(&inst(2, "x", 2), true).unwrap();
        let want: HashSet<u64> =
            ["x^2+x", "x^2+1"].iter().map(|s| Poly::parse(s, &f).unwrap().key().unwrap()).collect();
        assert_eq!(set.keys, want);
        assert_eq!(set.excluded_sums, 1);
        let set = representable(&inst(2, "x+1", 2), true).unwrap();
        let want: HashSet<u64> =
            ["x^2+x", "x^2"].iter().map(|s| Poly::parse(s, &f).unwrap().key().unwrap()).collect();
        assert_eq!(set.keys, want);
    }

    #[test]
    fn pair_and_difference_examples() {
        let f = gf(2);
        let p = |s: &str| Poly::parse(s, &f).unwrap();
        assert_eq!(pair_count_a(&Poly::zero(&f), 3, DEFAULT_COUNT_CAP).unwrap(), 2);
        assert_eq!(pair_count_a(&p("1"), 3, DEFAULT_COUNT_CAP).unwrap(), 0);
        assert_eq!(pair_count_a(&p("x+1"), 2, DEFAULT_COUNT_CAP).unwrap(), 0);
        assert!(pair_count_a(&p("x^2"), 2, DEFAULT_COUNT_CAP).is_err());

        let i = inst(2, "x", 2);
        assert_eq!(diff_count_b(&Poly::zero(&f), &i), 2);
        assert_eq!(diff_count_b(&p("x+1"), &i), 2);
        assert_eq!(diff_count_b(&p("x^3"), &i), 0);

        assert_eq!(rep_count_c(&p("x^2+x"), &i).unwrap(), 1);
        assert_eq!(rep_count_c(&p("x^2+1"), &i).unwrap(), 1);
        assert_eq!(rep_count_c(&p("x"), &i).unwrap(), 0);
        assert_eq!(rep_count_c_tilde(&p("x^2+x"), &i).unwrap(), 1);
    }

    #[test]
    fn double_count_examples() {
        let rep = verify_double_count(&inst(2, "x", 2)).unwrap();
        assert_eq!((rep.sum_c2, rep.sum_ab, rep.sum_c), (2, 2, 2));
        assert!(rep.failures.is_empty(), "{:?}", rep.failures);
        let rep = verify_double_count(&inst(2, "x", 3)).unwrap();
        assert!(rep.failures.is_empty(), "{:?}", rep.failures);
        assert_eq!(rep.sum_c2, rep.sum_ab);
    }

    #[test]
    fn degenerate_n_below_delta() {
        let rep = verify_double_count(&inst(3, "x^3+x+1", 2)).unwrap();
        assert!(rep.failures.is_empty());
        assert_eq!(rep.sum_c, rep.irreducible_count);
        assert_eq!(rep.sum_c2, rep.irreducible_count);
        assert_eq!(rep.sum_b, 1);
    }

    #[test]
    fn non_monic_g_over_gf3() {
        let rep = verify_double_count(&inst(3, "2*x+1", 3)).unwrap();
        assert!(rep.failures.is_empty(), "{:?}", rep.failures);
        assert!(cauchy_schwarz_holds(&rep));
        assert!(rep.big_r_tilde >= rep.big_r);
    }

    #[test]
    fn report_json_round_trip() {
        let rep = verify_double_count(&inst(3, "x", 2)).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.contains("\"R\":"));
        let back: CountReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn instance_validation() {
        let f = gf(2);
        assert!(RomanoffInstance::new(&Poly::one(&f), 2).is_err());
        assert!(RomanoffInstance::new(&Poly::x(&f), 0).is_err());
        let i = inst(2, "x", 3).with_cap(4);
        assert!(matches!(romanoff_count(&i), Err(Error::CapExceeded { .. })));
    }
}
