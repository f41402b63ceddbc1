//! Parameter grids, per-instance report rows and their CSV / JSON-lines forms.
//!
//! A sweep enumerates `(q, δ, n, g)`, evaluates each instance on a bounded
//! worker pool and sorts the rows by `(q, n, δ, g)` so output is byte-identical
//! across runs and worker counts.

use std::collections::BTreeSet;
use std::io::{BufRead, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{check_simple_bounds, check_theorem, theorem_bounds, DEFAULT_SERIES_CUTOFF};
use crate::check::{Status, Tally};
use crate::counting::{verify_double_count, CountReport, RomanoffInstance, DEFAULT_COUNT_CAP};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::integer::prime_power_decompose;
use crate::poly::{enumerate_all, Poly};
use crate::real::rational_to_sci;

/// Exhaustive `g` selection applies while `q^δ` stays at or below this.
pub const EXHAUSTIVE_G_LIMIT: u64 = 512;
pub const SAMPLED_MONIC: usize = 50;
pub const SAMPLED_NON_MONIC: usize = 10;

pub const CSV_HEADER: &str = "q,n,delta,g,R,r_num,r_den,lower_bound,lower_slack,upper_num,upper_den,\
sum_C,sum_C2,sum_AB,theorem_lower_status,theorem_upper_status,identity_status,simple_status";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::invalid(format!("unknown format '{s}' (expected csv or json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub q_list: Vec<u32>,
    pub n_min: usize,
    pub n_max: usize,
    pub deg_min: usize,
    pub deg_max: usize,
    /// Explicit `g` strings; when nonempty they replace the degree range.
    pub g_list: Vec<String>,
    pub cutoff_d: usize,
    pub cap: u64,
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub seed: u64,
    pub strict: bool,
    pub strict_vacuous: bool,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            q_list: vec![2],
            n_min: 1,
            n_max: 4,
            deg_min: 1,
            deg_max: 2,
            g_list: Vec::new(),
            cutoff_d: DEFAULT_SERIES_CUTOFF,
            cap: DEFAULT_COUNT_CAP,
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            out: None,
            format: OutputFormat::Csv,
            seed: 0,
            strict: false,
            strict_vacuous: false,
        }
    }
}

/// Parses `"2,3,4"`, `"q=4"` or `"2^2"` forms into field orders.
pub fn parse_q_list(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let item = item.strip_prefix("q=").unwrap_or(item);
        let q: u64 = match item.split_once('^') {
            Some((p, e)) => {
                let p: u64 = p.trim().parse().map_err(|_| Error::invalid(format!("bad field order '{item}'")))?;
                let e: u32 = e.trim().parse().map_err(|_| Error::invalid(format!("bad field order '{item}'")))?;
                p.checked_pow(e).ok_or_else(|| Error::invalid(format!("field order '{item}' overflows")))?
            }
            None => item.parse().map_err(|_| Error::invalid(format!("bad field order '{item}'")))?,
        };
        if prime_power_decompose(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        FieldSpec::from_order(q)?;
        out.push(q as u32);
    }
    if out.is_empty() {
        return Err(Error::invalid("empty q list"));
    }
    Ok(out)
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::invalid(format!("bad value '{value}' for {key}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim() {
        "" | "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(Error::invalid(format!("bad boolean '{value}' for {key}"))),
    }
}

impl SweepConfig {
    /// Applies one `key=value` setting; keys mirror the long flag names.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim().trim_start_matches("--") {
            "q" => self.q_list = parse_q_list(value)?,
            "n" => {
                let n = parse_num(key, value)?;
                self.n_min = n;
                self.n_max = n;
            }
            "n-max" => {
                self.n_max = parse_num(key, value)?;
                self.n_min = 1;
            }
            "deg-max" => self.deg_max = parse_num(key, value)?,
            "g" => self.g_list = value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
            "cutoff-D" | "cutoff-d" => self.cutoff_d = parse_num(key, value)?,
            "cap" => self.cap = parse_num(key, value)?,
            "workers" => self.workers = parse_num::<usize>(key, value)?.max(1),
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "format" => self.format = value.trim().parse()?,
            "seed" => self.seed = parse_num(key, value)?,
            "strict" => self.strict = parse_bool(key, value)?,
            "strict-vacuous" => self.strict_vacuous = parse_bool(key, value)?,
            other => return Err(Error::invalid(format!("unknown setting '{other}'"))),
        }
        Ok(())
    }

    /// Reads `key=value` lines; `#` starts a comment.
    pub fn apply_config_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("config line {}: expected key=value", i + 1)))?;
            self.apply(k, v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_max < self.n_min {
            return Err(Error::invalid("n range must be nonempty and start at 1 or more"));
        }
        if self.g_list.is_empty() && (self.deg_min == 0 || self.deg_max < self.deg_min) {
            return Err(Error::invalid("degree range must be nonempty"));
        }
        Ok(())
    }

    /// Every instance of the grid, in canonical order.
    pub fn instances(&self) -> Result<Vec<RomanoffInstance>> {
        self.validate()?;
        let mut out = Vec::new();
        for &q in &self.q_list {
            let spec = FieldSpec::from_order(q as u64)?;
            let gs: Vec<Poly> = if self.g_list.is_empty() {
                let mut v = Vec::new();
                for d in self.deg_min..=self.deg_max {
                    v.extend(select_g(&spec, d, self.seed)?);
                }
                v
            } else {
                self.g_list.iter().map(|s| Poly::parse(s, &spec)).collect::<Result<_>>()?
            };
            for g in &gs {
                for n in self.n_min..=self.n_max {
                    out.push(RomanoffInstance::new(g, n)?.with_cap(self.cap));
                }
            }
        }
        Ok(out)
    }
}

/// Degree-`delta` polynomials used as `g`.
///
/// All of them when `q^δ <= 512`; otherwise 50 distinct monic and 10 distinct
/// non-monic ones drawn from a ChaCha stream seeded by `(seed, q, δ)`.
pub fn select_g(spec: &FieldSpec, delta: usize, seed: u64) -> Result<Vec<Poly>> {
    if delta == 0 {
        return Err(Error::invalid("g must have degree at least 1"));
    }
    let q = spec.q() as u64;
    let small = BigUint::from(q).pow(delta as u32) <= BigUint::from(EXHAUSTIVE_G_LIMIT);
    if small {
        return Ok(enumerate_all(spec, delta)?.collect());
    }
    let mix = seed ^ (q << 32) ^ (delta as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    let mut draw = |monic: bool| -> Poly {
        let mut coeffs: Vec<u32> = (0..delta).map(|_| rng.gen_range(0..spec.q())).collect();
        coeffs.push(if monic { 1 } else { rng.gen_range(2..spec.q()) });
        Poly::from_codes(spec, coeffs)
    };
    let mut monic = BTreeSet::new();
    while monic.len() < SAMPLED_MONIC {
        monic.insert(draw(true));
    }
    // GF(2) has no non-monic leading coefficient
    let mut other = BTreeSet::new();
    while q > 2 && other.len() < SAMPLED_NON_MONIC {
        other.insert(draw(false));
    }
    Ok(monic.into_iter().chain(other).collect())
}

/// One CSV / JSON row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub q: u32,
    pub n: usize,
    pub delta: usize,
    pub g: String,
    #[serde(rename = "R")]
    pub big_r: u64,
    pub r_num: String,
    pub r_den: String,
    pub lower_bound: String,
    pub lower_slack: String,
    pub upper_num: String,
    pub upper_den: String,
    #[serde(rename = "sum_C")]
    pub sum_c: u64,
    #[serde(rename = "sum_C2")]
    pub sum_c2: u64,
    #[serde(rename = "sum_AB")]
    pub sum_ab: u64,
    pub theorem_lower_status: Status,
    pub theorem_upper_status: Status,
    pub identity_status: Status,
    pub simple_status: Status,
}

impl ReportRow {
    fn sort_key(&self) -> (u32, usize, usize, String) {
        (self.q, self.n, self.delta, self.g.clone())
    }

    pub fn statuses(&self) -> [Status; 4] {
        [self.theorem_lower_status, self.theorem_upper_status, self.identity_status, self.simple_status]
    }
}

/// Digits kept for the lower bound column.
pub const LOWER_BOUND_DIGITS: usize = 20;

/// Counts, identities, the theorem sandwich for `r` and `r̃`, and the simple bounds.
pub fn evaluate(inst: &RomanoffInstance) -> Result<(ReportRow, CountReport)> {
    let report = verify_double_count(inst)?;
    let bounds = theorem_bounds(inst.q(), inst.n(), inst.delta())?;
    let (lo_r, up_r) = check_theorem("r", &report.r, &bounds, &report.g);
    let (lo_t, up_t) = check_theorem("r_tilde", &report.r_tilde, &bounds, &report.g);
    let simple = check_simple_bounds("r", &report.r, inst.n(), inst.delta())
        .into_iter()
        .chain(check_simple_bounds("r_tilde", &report.r_tilde, inst.n(), inst.delta()))
        .map(|c| c.status)
        .fold(Status::Pass, Status::worst);
    let row = ReportRow {
        q: inst.q(),
        n: inst.n(),
        delta: inst.delta(),
        g: report.g.clone(),
        big_r: report.big_r,
        r_num: report.r.numer().to_string(),
        r_den: report.r.denom().to_string(),
        lower_bound: bounds.lower.to_decimal(LOWER_BOUND_DIGITS),
        lower_slack: rational_to_sci(&bounds.lower.slack()),
        upper_num: bounds.upper.numer().to_string(),
        upper_den: bounds.upper.denom().to_string(),
        sum_c: report.sum_c,
        sum_c2: report.sum_c2,
        sum_ab: report.sum_ab,
        theorem_lower_status: lo_r.status.worst(lo_t.status),
        theorem_upper_status: up_r.status.worst(up_t.status),
        identity_status: report.identity_status(),
        simple_status: simple,
    };
    Ok((row, report))
}

/// Which row columns a suite tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem,
    Identities,
    All,
}

pub struct SweepOutcome {
    pub rows: Vec<ReportRow>,
    pub reports: Vec<CountReport>,
    pub tally: Tally,
}

/// Evaluates the grid on `config.workers` threads; rows come back in canonical order.
pub fn run_sweep(config: &SweepConfig, suite: Suite) -> Result<SweepOutcome> {
    let instances = config.instances()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::invalid(format!("worker pool: {e}")))?;
    let mut results: Vec<(ReportRow, CountReport)> =
        pool.install(|| instances.par_iter().map(evaluate).collect::<Result<Vec<_>>>())?;
    results.sort_by_key(|(row, _)| row.sort_key());
    let mut tally = Tally::default();
    for (row, _) in &results {
        let cols: Vec<Status> = match suite {
            Suite::Theorem => vec![row.theorem_lower_status, row.theorem_upper_status, row.simple_status],
            Suite::Identities => vec![row.identity_status],
            Suite::All => row.statuses().to_vec(),
        };
        cols.into_iter().for_each(|s| tally.record(s));
    }
    let (rows, reports) = results.into_iter().unzip();
    Ok(SweepOutcome { rows, reports, tally })
}

pub fn write_rows<W: Write>(rows: &[ReportRow], format: OutputFormat, out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(rows, out),
        OutputFormat::Json => write_json_lines(rows, out),
    }
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::invalid("unexpected CSV header"));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn write_json_lines<W: Write>(rows: &[ReportRow], mut out: W) -> Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_json_lines<R: BufRead>(input: R) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            rows.push(serde_json::from_str(&line)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_list_forms() {
        assert_eq!(parse_q_list("2,3, 4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_q_list("q=4").unwrap(), vec![4]);
        assert_eq!(parse_q_list("3^2").unwrap(), vec![9]);
        match parse_q_list("6") {
            Err(e) => assert_eq!(e.to_string(), "6 is not a prime power"),
            Ok(_) => panic!(),
        }
    }

    #[test]
    fn config_text_and_override() {
        let mut c = SweepConfig::default();
        c.apply_config_text("# grid\nq=2,3\nn-max=3\nformat=json\nstrict=true\n").unwrap();
        assert_eq!((c.q_list.clone(), c.n_max, c.format, c.strict), (vec![2, 3], 3, OutputFormat::Json, true));
        c.apply("n-max", "5").unwrap();
        assert_eq!(c.n_max, 5);
        assert!(c.apply_config_text("bogus=1").is_err());
        assert!(c.apply_config_text("q").is_err());
    }

    #[test]
    fn g_selection() {
        let f2 = FieldSpec::from_order(2).unwrap();
        assert_eq!(select_g(&f2, 2, 0).unwrap().len(), 4);
        let f5 = FieldSpec::from_order(5).unwrap();
        let big = select_g(&f5, 4, 0).unwrap();
        assert_eq!(big.len(), SAMPLED_MONIC + SAMPLED_NON_MONIC);
        assert_eq!(big.iter().filter(|g| g.is_monic()).count(), SAMPLED_MONIC);
        assert!(big.iter().all(|g| g.degree() == Some(4)));
        assert_eq!(big, select_g(&f5, 4, 0).unwrap());
        assert_ne!(big, select_g(&f5, 4, 1).unwrap());
    }

    #[test]
    fn rows_are_sorted_and_round_trip() {
        let mut c = SweepConfig::default();
        c.q_list = vec![3, 2];
        c.n_max = 3;
        c.workers = 3;
        let out = run_sweep(&c, Suite::All).unwrap();
        let keys: Vec<_> = out.rows.iter().map(|r| r.sort_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(out.tally.fail, 0);

        let mut csv_bytes = Vec::new();
        write_csv(&out.rows, &mut csv_bytes).unwrap();
        let text = String::from_utf8(csv_bytes.clone()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(read_csv(&csv_bytes[..]).unwrap(), out.rows);

        let mut json = Vec::new();
        write_json_lines(&out.rows, &mut json).unwrap();
        assert_eq!(read_json_lines(&json[..]).unwrap(), out.rows);
    }
}
