use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use romanoff::check::Tally;
use romanoff::counting::{count_irreducible, verify_double_count, RomanoffInstance};
use romanoff::poly::order_mod;
use romanoff::suite::{self, Lemma};
use romanoff::sweep::{self, Suite, SweepConfig};
use romanoff::{FieldSpec, Poly, Result};

#[derive(Parser)]
#[command(name = "romanoff", version, about = "Exact checks for sums of irreducibles and powers over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args, Default)]
struct GlobalArgs {
    /// Field orders, e.g. `2,3,4` or `3^2`
    #[arg(long, global = true)]
    q: Option<String>,
    /// A single degree n; use --n-max for 1..=n
    #[arg(long, global = true)]
    n: Option<String>,
    #[arg(long = "n-max", global = true)]
    n_max: Option<String>,
    /// Comma-separated polynomials used as g
    #[arg(long, global = true, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long = "deg-max", global = true)]
    deg_max: Option<String>,
    #[arg(long = "cutoff-D", global = true)]
    cutoff_d: Option<String>,
    #[arg(long, global = true)]
    cap: Option<String>,
    #[arg(long, global = true)]
    workers: Option<String>,
    #[arg(long, global = true)]
    out: Option<String>,
    /// `csv` or `json` (JSON lines)
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Treat precision-insufficient results as failures
    #[arg(long, global = true)]
    strict: bool,
    /// Treat vacuous results as failures
    #[arg(long = "strict-vacuous", global = true)]
    strict_vacuous: bool,
    /// `key=value` file; flags override it
    #[arg(long, global = true)]
    config: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// R, r, R~ and r~ for one instance, or I_q(n) without --g
    Count,
    /// Run one family of checks and report pass, fail or vacuous per row
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Factor --poly into monic irreducibles times a unit
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Multiplicative order of --g modulo --mod
    Order {
        #[arg(long = "mod", allow_hyphen_values = true)]
        modulus: String,
    },
    /// Every per-instance check over the grid
    Sweep,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Lower and upper bounds on r over the grid
    Theorem,
    /// Double-counting identities over the grid
    Identities,
    /// One auxiliary inequality family
    Lemma {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Lemma::ALL.map(Lemma::name)))]
        name: String,
    },
    /// Certified numeric constants
    Constants,
}

impl GlobalArgs {
    fn config(&self) -> Result<SweepConfig> {
        let mut c = SweepConfig::default();
        if let Some(path) = &self.config {
            c.apply_config_text(&std::fs::read_to_string(path)?)?;
        }
        let flags = [
            ("q", &self.q),
            ("n", &self.n),
            ("n-max", &self.n_max),
            ("g", &self.g),
            ("deg-max", &self.deg_max),
            ("cutoff-D", &self.cutoff_d),
            ("cap", &self.cap),
            ("workers", &self.workers),
            ("out", &self.out),
            ("format", &self.format),
            ("seed", &self.seed),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                c.apply(key, v)?;
            }
        }
        c.strict |= self.strict;
        c.strict_vacuous |= self.strict_vacuous;
        Ok(c)
    }
}

/// The first field of the q list.
fn single_spec(config: &SweepConfig) -> Result<FieldSpec> {
    FieldSpec::from_order(config.q_list[0] as u64)
}

fn output(config: &SweepConfig) -> Result<Box<dyn Write>> {
    Ok(match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish(label: &str, tally: &Tally, config: &SweepConfig) -> ExitCode {
    eprintln!("{label}: {tally}");
    if tally.ok(config.strict, config.strict_vacuous) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = cli.global.config()?;
    match cli.command {
        Command::Count => {
            let spec = single_spec(&config)?;
            let n = config.n_max;
            match config.g_list.first() {
                None => println!("I_{}({n}) = {}", spec.q(), count_irreducible(n, &spec)?),
                Some(g) => {
                    let inst = RomanoffInstance::new(&Poly::parse(g, &spec)?, n)?.with_cap(config.cap);
                    println!("{}", verify_double_count(&inst)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor { poly } => {
            let spec = single_spec(&config)?;
            println!("{}", Poly::parse(&poly, &spec)?.factor()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { modulus } => {
            let spec = single_spec(&config)?;
            let g = config.g_list.first().ok_or_else(|| romanoff::Error::InvalidArgument("order needs --g".into()))?;
            println!("{}", order_mod(&Poly::parse(g, &spec)?, &Poly::parse(&modulus, &spec)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep => grid(&config, Suite::All, "sweep"),
        Command::Verify { suite: VerifySuite::Theorem } => grid(&config, Suite::Theorem, "theorem"),
        Command::Verify { suite: VerifySuite::Identities } => grid(&config, Suite::Identities, "identities"),
        Command::Verify { suite: VerifySuite::Lemma { name } } => {
            let checks = suite::run_lemma(name.parse()?, &config)?;
            suite::write_checks(&checks, config.format, output(&config)?)?;
            Ok(finish(&name, &suite::tally(&checks), &config))
        }
        Command::Verify { suite: VerifySuite::Constants } => {
            let checks = suite::run_constants()?;
            suite::write_checks(&checks, config.format, output(&config)?)?;
            Ok(finish("constants", &suite::tally(&checks), &config))
        }
    }
}

fn grid(config: &SweepConfig, which: Suite, label: &str) -> Result<ExitCode> {
    let outcome = sweep::run_sweep(config, which)?;
    sweep::write_rows(&outcome.rows, config.format, output(config)?)?;
    Ok(finish(label, &outcome.tally, config))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
