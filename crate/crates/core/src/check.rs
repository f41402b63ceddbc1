//! Verdicts for individual inequality checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::{rational_to_decimal, rational_to_sci, BoundValue, Placement};

/// Outcome of a check, ordered from best to worst.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Vacuous,
    PrecisionInsufficient,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::PrecisionInsufficient => "precision-insufficient",
            Status::Fail => "fail",
        }
    }

    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Status> {
        match s {
            "pass" => Ok(Status::Pass),
            "vacuous" => Ok(Status::Vacuous),
            "precision-insufficient" => Ok(Status::PrecisionInsufficient),
            "fail" => Ok(Status::Fail),
            _ => Err(Error::invalid(format!("unknown status '{s}'"))),
        }
    }
}

/// The relation a check asserts between its two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessOrEqual,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub slack: String,
}

/// Digits printed for each side of a check.
pub const DISPLAY_DIGITS: usize = 12;

impl CheckResult {
    /// Exact comparison of two rationals.
    pub fn exact(
        check: &str,
        params: Params,
        lhs: &BigRational,
        rel: Relation,
        rhs: &BigRational,
    ) -> CheckResult {
        let holds = match rel {
            Relation::Less => lhs < rhs,
            Relation::LessOrEqual => lhs <= rhs,
        };
        CheckResult {
            check: check.to_string(),
            params: params.0,
            lhs: fmt_rational(lhs),
            rhs: fmt_rational(rhs),
            status: if holds { Status::Pass } else { Status::Fail },
            slack: "0".to_string(),
        }
    }

    /// Directed comparison of two enclosures.
    ///
    /// Passes only when the enclosures are disjoint in the asserted direction,
    /// fails only when they are disjoint the other way (or touch at a point for
    /// a strict relation), and is precision-insufficient otherwise.
    pub fn directed(check: &str, params: Params, lhs: &BoundValue, rel: Relation, rhs: &BoundValue) -> CheckResult {
        let diff = rhs - lhs;
        let zero = BigRational::from_integer(0.into());
        let status = match (diff.place(&zero), rel) {
            (Placement::Above, _) => Status::Pass,
            (Placement::Below, _) => Status::Fail,
            (Placement::Overlaps, Relation::LessOrEqual) if diff.is_exact() => Status::Pass,
            (Placement::Overlaps, Relation::Less) if diff.is_exact() => Status::Fail,
            (Placement::Overlaps, _) => Status::PrecisionInsufficient,
        };
        CheckResult {
            check: check.to_string(),
            params: params.0,
            lhs: lhs.to_decimal(DISPLAY_DIGITS),
            rhs: rhs.to_decimal(DISPLAY_DIGITS),
            status,
            slack: rational_to_sci(&(lhs.slack() + rhs.slack())),
        }
    }

    pub fn with_status(mut self, status: Status) -> CheckResult {
        self.status = status;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A one-line human summary.
    pub fn summary(&self, rel: Relation) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "[{}] {} ({}): {} {} {} (slack {})",
            self.status,
            self.check,
            params.join(", "),
            self.lhs,
            rel.symbol(),
            self.rhs,
            self.slack
        )
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{} (~{})", r, rational_to_decimal(r, DISPLAY_DIGITS))
    }
}

/// Ordered key/value parameters attached to a check.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Params {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn into_map(self) -> BTreeMap<String, String> {
        self.0
    }
}

/// Counts of statuses across a suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub vacuous: u64,
    pub precision_insufficient: u64,
}

impl Tally {
    pub fn record(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::PrecisionInsufficient => self.precision_insufficient += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.vacuous += other.vacuous;
        self.precision_insufficient += other.precision_insufficient;
    }

    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.vacuous + self.precision_insufficient
    }

    /// `true` when the suite should exit successfully.
    pub fn ok(&self, strict: bool, strict_vacuous: bool) -> bool {
        self.fail == 0 && (!strict || self.precision_insufficient == 0) && (!strict_vacuous || self.vacuous == 0)
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks: {} pass, {} fail, {} vacuous, {} precision-insufficient",
            self.total(),
            self.pass,
            self.fail,
            self.vacuous,
            self.precision_insufficient
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exact_relations() {
        let p = || Params::new();
        assert_eq!(CheckResult::exact("c", p(), &rat(1, 2), Relation::Less, &rat(2, 3)).status, Status::Pass);
        assert_eq!(CheckResult::exact("c", p(), &rat(1, 2), Relation::Less, &rat(1, 2)).status, Status::Fail);
        assert_eq!(CheckResult::exact("c", p(), &rat(1, 2), Relation::LessOrEqual, &rat(1, 2)).status, Status::Pass);
    }

    #[test]
    fn directed_relations_distinguish_overlap() {
        let p = || Params::new();
        let e = BoundValue::e();
        let three = BoundValue::from_int(3);
        assert_eq!(CheckResult::directed("c", p(), &e, Relation::Less, &three).status, Status::Pass);
        assert_eq!(CheckResult::directed("c", p(), &three, Relation::Less, &e).status, Status::Fail);
        assert_eq!(
            CheckResult::directed("c", p(), &e, Relation::LessOrEqual, &BoundValue::e()).status,
            Status::PrecisionInsufficient
        );
        let half = BoundValue::from_ratio(1, 2);
        assert_eq!(CheckResult::directed("c", p(), &half, Relation::LessOrEqual, &half).status, Status::Pass);
        assert_eq!(CheckResult::directed("c", p(), &half, Relation::Less, &half).status, Status::Fail);
    }

    #[test]
    fn status_text_round_trips_and_orders() {
        for s in [Status::Pass, Status::Vacuous, Status::PrecisionInsufficient, Status::Fail] {
            assert_eq!(s.as_str().parse::<Status>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.as_str()));
        }
        assert_eq!(Status::Pass.worst(Status::Vacuous), Status::Vacuous);
        assert_eq!(Status::Fail.worst(Status::PrecisionInsufficient), Status::Fail);
    }

    #[test]
    fn tally_exit_policy() {
        let mut t = Tally::default();
        t.record(Status::Pass);
        t.record(Status::Vacuous);
        assert!(t.ok(false, false));
        assert!(!t.ok(false, true));
        t.record(Status::PrecisionInsufficient);
        assert!(t.ok(false, false));
        assert!(!t.ok(true, false));
        t.record(Status::Fail);
        assert!(!t.ok(false, false));
    }
}
