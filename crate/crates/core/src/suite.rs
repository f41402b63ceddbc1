//! Named check suites over a [`SweepConfig`] grid, and their tabular output.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::analytic::{
    budget_check, check_alpha, check_constant_1771, check_e_minus_exp_gamma, check_eh_bound, check_large_q_estimate,
    check_lemma1, check_lemma2, check_lemma3, check_lemma_h, check_pollack, check_zeta_identity, DEFAULT_SERIES_TERMS,
};
use crate::check::{CheckResult, Tally};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{enumerate_monic_capped, Poly};
use crate::sweep::{select_g, OutputFormat, SweepConfig};

/// Points `x` at which the `H_g(x)` bound is evaluated, when the cutoff `D` captures them.
pub const EH_POINTS: [i64; 3] = [1, 2, 3];

/// `δ` samples for the monotonicity checks on `α`.
pub const ALPHA_DELTA_SAMPLES: [usize; 4] = [1, 2, 3, 6];
pub const ALPHA_Q_SAMPLES: [u32; 6] = [2, 3, 4, 5, 7, 8];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    Pollack,
    Lemma1,
    Lemma2,
    Lemma3,
    Zeta,
    Eh,
    Budget,
    LargeQ,
}

impl Lemma {
    pub const ALL: [Lemma; 8] =
        [Lemma::Pollack, Lemma::Lemma1, Lemma::Lemma2, Lemma::Lemma3, Lemma::Zeta, Lemma::Eh, Lemma::Budget, Lemma::LargeQ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Pollack => "pollack",
            Lemma::Lemma1 => "lemma1",
            Lemma::Lemma2 => "lemma2",
            Lemma::Lemma3 => "lemma3",
            Lemma::Zeta => "zeta",
            Lemma::Eh => "eh",
            Lemma::Budget => "budget",
            Lemma::LargeQ => "largeq",
        }
    }
}

impl FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Lemma> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown lemma '{s}'")))
    }
}

fn specs(config: &SweepConfig) -> Result<Vec<FieldSpec>> {
    config.q_list.iter().map(|&q| FieldSpec::from_order(q as u64)).collect()
}

fn grid_g(config: &SweepConfig, spec: &FieldSpec) -> Result<Vec<Poly>> {
    if !config.g_list.is_empty() {
        return config.g_list.iter().map(|s| Poly::parse(s, spec)).collect();
    }
    let mut out = Vec::new();
    for d in config.deg_min..=config.deg_max {
        out.extend(select_g(spec, d, config.seed)?);
    }
    Ok(out)
}

/// Smallest `m >= 1` with `q^m >= d`.
fn smallest_admissible_m(q: u32, d: usize) -> u32 {
    let mut m = 1;
    while BigUint::from(q).pow(m) < BigUint::from(d) {
        m += 1;
    }
    m
}

/// Runs one lemma suite over the grid.
///
/// The `n` range supplies `n` for `pollack`, `m` for `lemma2`, the degree
/// range of `f` for `lemma1` / `lemma3` and `N` for `zeta`; `g` comes from the
/// degree range (or explicit list) for `eh` and `budget`, and `δ` from the
/// degree range for `largeq`. `eh` skips any `x` whose terms `D` would not
/// capture.
pub fn run_lemma(lemma: Lemma, config: &SweepConfig) -> Result<Vec<CheckResult>> {
    config.validate()?;
    let ns = config.n_min..=config.n_max;
    let mut out = Vec::new();
    match lemma {
        Lemma::Pollack => {
            for spec in specs(config)? {
                for n in ns.clone() {
                    out.extend(check_pollack(&spec, n, config.cap)?);
                }
            }
        }
        Lemma::Lemma1 => {
            for spec in specs(config)? {
                for d in ns.clone() {
                    let m = smallest_admissible_m(spec.q(), d);
                    for f in enumerate_monic_capped(&spec, d, config.cap)? {
                        out.push(check_lemma1(&f, m)?);
                    }
                }
            }
        }
        Lemma::Lemma2 => {
            for spec in specs(config)? {
                for m in ns.clone() {
                    out.push(check_lemma2(&spec, m as u32)?);
                }
            }
            for m in ns {
                out.extend(check_lemma_h(m as u32)?);
            }
        }
        Lemma::Lemma3 => {
            for spec in specs(config)? {
                for d in ns.clone().filter(|&d| d >= 2) {
                    for f in enumerate_monic_capped(&spec, d, config.cap)? {
                        out.push(check_lemma3(&f)?);
                    }
                }
            }
        }
        Lemma::Zeta => {
            for spec in specs(config)? {
                for n in ns.clone() {
                    out.extend(check_zeta_identity(&spec, n, config.cap)?);
                }
            }
        }
        Lemma::Eh => {
            for spec in specs(config)? {
                for g in grid_g(config, &spec)? {
                    let delta = g.degree().unwrap_or(0);
                    for x in EH_POINTS {
                        let fx = x as usize;
                        if delta * fx * (fx + 1) / 2 + delta > config.cutoff_d {
                            continue;
                        }
                        let x = BigRational::from_integer(x.into());
                        out.extend(check_eh_bound(&g, &x, config.cutoff_d, config.cap)?);
                    }
                }
            }
        }
        Lemma::Budget => {
            for spec in specs(config)? {
                for g in grid_g(config, &spec)? {
                    out.push(budget_check(&g, config.cutoff_d, config.cap)?);
                }
            }
        }
        Lemma::LargeQ => {
            for &q in &config.q_list {
                for d in config.deg_min..=config.deg_max {
                    out.extend(check_large_q_estimate(d, q)?);
                }
            }
        }
    }
    Ok(out)
}

/// `I <= 1.771 < log 6`, `α(2,1) < 91` with sampled monotonicity, and `e - e^γ < 1`.
pub fn run_constants() -> Result<Vec<CheckResult>> {
    let mut out = check_constant_1771(DEFAULT_SERIES_TERMS)?;
    out.extend(check_alpha(&ALPHA_Q_SAMPLES, &ALPHA_DELTA_SAMPLES));
    out.extend(check_e_minus_exp_gamma());
    Ok(out)
}

pub fn tally(checks: &[CheckResult]) -> Tally {
    let mut t = Tally::default();
    checks.iter().for_each(|c| t.record(c.status));
    t
}

pub const CHECK_CSV_HEADER: [&str; 6] = ["check", "params", "lhs", "rhs", "status", "slack"];

/// `k=v` pairs joined by `;`.
pub fn params_text(c: &CheckResult) -> String {
    c.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn write_checks<W: Write>(checks: &[CheckResult], format: OutputFormat, mut out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CHECK_CSV_HEADER)?;
            for c in checks {
                let params = params_text(c);
                w.write_record([&c.check, &params, &c.lhs, &c.rhs, c.status.as_str(), &c.slack])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            for c in checks {
                serde_json::to_writer(&mut out, c)?;
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;

    fn config(q: &str, n_max: &str) -> SweepConfig {
        let mut c = SweepConfig::default();
        c.apply("q", q).unwrap();
        c.apply("n-max", n_max).unwrap();
        c
    }

    #[test]
    fn lemma_names_round_trip() {
        for l in Lemma::ALL {
            assert_eq!(l.name().parse::<Lemma>().unwrap(), l);
        }
        assert!("lemma9".parse::<Lemma>().is_err());
    }

    #[test]
    fn admissible_m() {
        assert_eq!(smallest_admissible_m(2, 1), 1);
        assert_eq!(smallest_admissible_m(2, 3), 2);
        assert_eq!(smallest_admissible_m(3, 9), 2);
        assert_eq!(smallest_admissible_m(3, 10), 3);
    }

    #[test]
    fn small_suites_pass() {
        let c = config("2", "3");
        for l in [Lemma::Pollack, Lemma::Lemma1, Lemma::Lemma2, Lemma::Lemma3, Lemma::Zeta, Lemma::LargeQ] {
            let res = run_lemma(l, &c).unwrap();
            assert!(!res.is_empty(), "{}", l.name());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{}: {res:?}", l.name());
        }
    }

    #[test]
    fn check_csv_quotes_params() {
        let res = run_lemma(Lemma::Zeta, &config("3", "1")).unwrap();
        let mut buf = Vec::new();
        write_checks(&res, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("check,params,lhs,rhs,status,slack\n"));
        assert!(text.contains("zeta_closed_form,N=1;q=3,"), "{text}");
    }
}
