mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;

use common::{gf, irreducible_sieve, is_irreducible_trial, monic, monic_index, naive_order, poly};
use romanoff::analytic::{check_large_q_estimate, check_zeta_identity, eg_sg_budget, theorem_bounds};
use romanoff::check::Status;
use romanoff::counting::{
    diff_count_b, pair_count_a, rep_count_c, romanoff_count, romanoff_count_all, IrreducibleTable, RomanoffInstance,
    DEFAULT_COUNT_CAP,
};
use romanoff::poly::{enumerate_all, enumerate_monic_irreducible, moebius_poly, order_mod};
use romanoff::Poly;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn inst(q: u64, g: &str, n: usize) -> RomanoffInstance {
    RomanoffInstance::new(&poly(g, q), n).unwrap()
}

/// Distinct `h + g^k` over all degree-`n` irreducibles `h` (any leading coefficient), `δk <= n`.
fn brute_r_tilde(q: u64, g: &str, n: usize) -> usize {
    let spec = gf(q);
    let g = poly(g, q);
    let delta = g.degree().unwrap();
    let mut seen = BTreeSet::new();
    for h in enumerate_all(&spec, n).unwrap().filter(is_irreducible_trial) {
        for k in 0..=n / delta {
            let f = &h + &g.pow(k as u64);
            if f.degree() == Some(n) {
                seen.insert(f);
            }
        }
    }
    seen.len()
}

#[test]
fn small_field_arithmetic() {
    let f4 = gf(4);
    assert_eq!(f4.modulus_string().unwrap(), "t^2+t+1");
    let t = f4.generator().unwrap();
    assert_eq!(f4.render(t.mul(&t).unwrap().code()), "t+1");
    assert_eq!(f4.render(t.inv().unwrap().code()), "t+1");
    assert!(t.pow_u64(3).is_one());
    let f5 = gf(5);
    assert_eq!(f5.mul(3, 4), 2);
    assert_eq!(f5.inv(2), Some(3));
    assert_eq!(f5.pow(2, 4), 1);
    assert_eq!(f5.inv(0), None);
}

#[test]
fn polynomial_examples() {
    assert_eq!(&poly("x^2+x+1", 2) + &poly("x+1", 2), poly("x^2", 2));
    assert_eq!(&poly("x+1", 2) * &poly("x+1", 2), poly("x^2+1", 2));
    let (quo, rem) = poly("x^3", 2).div_rem(&poly("x^2+x+1", 2)).unwrap();
    assert_eq!((quo, rem), (poly("x+1", 2), poly("1", 2)));
    assert_eq!(poly("x^2+x+1", 2).gcd(&poly("x+1", 2)).unwrap(), poly("1", 2));
    assert_eq!(poly("x", 2).powmod_u64(3, &poly("x^2+x+1", 2)).unwrap(), poly("1", 2));
    assert!(poly("x^2+1", 3).is_irreducible().unwrap());
    assert!(!poly("x^2+1", 2).is_irreducible().unwrap());
    let fac = poly("2*x^2+2", 3).factor().unwrap();
    assert_eq!(fac.unit().code(), 2);
    assert_eq!(fac.factors(), &[(poly("x^2+1", 3), 1)]);
    assert_eq!(moebius_poly(&poly("x^2+x", 2)).unwrap(), 1);
    assert_eq!(moebius_poly(&poly("x^2", 2)).unwrap(), 0);
}

#[test]
fn irreducible_lists_match_trial_division() {
    for q in [2u64, 3, 4] {
        let spec = gf(q);
        for n in 1..=4 {
            let lib: Vec<Poly> = enumerate_monic_irreducible(&spec, n).unwrap().collect();
            let brute: Vec<Poly> = monic(&spec, n).into_iter().filter(is_irreducible_trial).collect();
            assert_eq!(lib, brute, "GF({q}) degree {n}");
        }
    }
    let cubics: Vec<String> = enumerate_monic_irreducible(&gf(2), 3).unwrap().map(|p| p.render()).collect();
    assert_eq!(cubics, ["x^3+x+1", "x^3+x^2+1"]);
}

#[test]
fn orders_match_naive_search_over_gf3() {
    let spec = gf(3);
    for m in (1..=3).flat_map(|d| monic(&spec, d)) {
        if !m.is_squarefree().unwrap() {
            continue;
        }
        for g in (0..m.degree().unwrap()).flat_map(|d| enumerate_all(&spec, d).unwrap()) {
            let lib = order_mod(&g, &m).ok().map(|o| u64::try_from(o).unwrap());
            assert_eq!(lib, naive_order(&g, &m), "ord_{}({})", m.render(), g.render());
        }
    }
    assert_eq!(order_mod(&poly("x", 2), &poly("x+1", 2)).unwrap(), BigUint::from(1u32));
}

#[test]
fn representation_counts_by_brute_force() {
    assert_eq!(romanoff_count(&inst(2, "x", 2)).unwrap(), (BigUint::from(2u32), rat(1, 2)));
    assert_eq!(romanoff_count(&inst(2, "x+1", 2)).unwrap().0, BigUint::from(2u32));
    for (q, g, n) in [(3, "x", 1), (3, "x", 2), (3, "2*x^2+1", 3), (4, "x", 2), (5, "x+2", 2)] {
        let (lib, _) = romanoff_count_all(&inst(q, g, n)).unwrap();
        assert_eq!(lib, BigUint::from(brute_r_tilde(q, g, n)), "q={q} g={g} n={n}");
    }
    let (r, rt) = (romanoff_count(&inst(2, "x^2+x+1", 5)).unwrap(), romanoff_count_all(&inst(2, "x^2+x+1", 5)).unwrap());
    assert_eq!(r, rt);
}

#[test]
fn pair_difference_and_representation_examples() {
    let cap = DEFAULT_COUNT_CAP;
    assert_eq!(pair_count_a(&poly("1", 2), 3, cap).unwrap(), 0);
    assert_eq!(pair_count_a(&poly("x+1", 2), 2, cap).unwrap(), 0);
    assert_eq!(pair_count_a(&poly("0", 3), 3, cap).unwrap(), 8);
    let i = inst(2, "x", 2);
    assert_eq!(diff_count_b(&poly("x+1", 2), &i), 2);
    assert_eq!(diff_count_b(&poly("0", 2), &i), 2);
    assert_eq!(rep_count_c(&poly("x^2+x", 2), &i).unwrap(), 1);
    assert_eq!(rep_count_c(&poly("x^2+1", 2), &i).unwrap(), 1);
    assert_eq!(rep_count_c(&poly("x^2", 2), &i).unwrap(), 0);
}

#[test]
fn sieve_agrees_with_irreducible_table() {
    for (q, n) in [(2u64, 7usize), (3, 5), (4, 4), (7, 3)] {
        let spec = gf(q);
        let table = IrreducibleTable::new(&spec, n, DEFAULT_COUNT_CAP).unwrap();
        let sieve = irreducible_sieve(&spec, n);
        for f in monic(&spec, n) {
            assert_eq!(table.contains_monic(&f), sieve[monic_index(&f)], "{}", f.render());
        }
    }
}

#[test]
fn zeta_partial_sums() {
    let res = check_zeta_identity(&gf(2), 3, DEFAULT_COUNT_CAP).unwrap();
    assert!(res.iter().all(|c| c.status == Status::Pass));
    assert!(res[0].lhs.starts_with("15/8"), "{}", res[0].lhs);
    let res = check_zeta_identity(&gf(3), 2, DEFAULT_COUNT_CAP).unwrap();
    assert!(res[0].lhs.starts_with("13/9"), "{}", res[0].lhs);
}

#[test]
fn budget_and_bound_values() {
    assert_eq!(eg_sg_budget(2, 1).to_decimal(3), "5.604");
    let b = theorem_bounds(4, 4, 1).unwrap();
    assert_eq!(b.lower.to_decimal(4), "0.0169");
    assert_eq!(theorem_bounds(7, 3, 3).unwrap().upper, rat(2, 3));
    let at_boundary = check_large_q_estimate(1, 4).unwrap();
    assert_eq!(at_boundary[1].check, "largeq_estimate");
    assert!(at_boundary.iter().all(|c| c.status == Status::Pass));
    let fallback = check_large_q_estimate(1, 2).unwrap();
    assert_eq!(fallback[0].check, "largeq_fallback_first");
    assert!(fallback.iter().all(|c| c.status == Status::Pass));
}
