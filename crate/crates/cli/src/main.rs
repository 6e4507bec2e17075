//! `holeorbit`: command-line access to critical hole sizes, partitions and
//! the word combinatorics behind them.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use holeorbit::bullet::bullet_fold;
use holeorbit::chains::{anchor, chain_word, enumerate_chains, interval_type, psi, psi_table};
use holeorbit::critical::{
    classify_beta, komornik_loreti, partition_table, sample, tau, tau_compare_at, theta,
    theta_tilde, Classification, CriticalValue,
};
use holeorbit::extremal::{max_lyndon, min_perron};
use holeorbit::numerics::{decimal_ceil, decimal_floor, parse_decimal, BetaParam, RealInterval};
use holeorbit::words::{farey_word, EventuallyPeriodicSequence, Word};
use holeorbit::Error;

#[derive(Parser)]
#[command(
    name = "holeorbit",
    version,
    about = "Critical hole sizes for periodic orbits of beta-transformations"
)]
struct Cli {
    /// Working precision in bits for enclosures of word-defined bases.
    #[arg(long, global = true, env = "HOLEORBIT_PRECISION", default_value_t = holeorbit::numerics::DEFAULT_PRECISION)]
    precision: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of admissible m-chains.
    Psi {
        m: Option<u64>,
        /// Print psi(1..=N) as CSV instead.
        #[arg(long, value_name = "N")]
        table: Option<u64>,
    },
    /// Admissible m-chains in order, with their words and anchors.
    Chains {
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// The critical value tau_m(beta).
    Tau {
        m: u64,
        /// p/q, word:<bits>, a decimal, mid+-radius, or kl.
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "1e-12")]
        tol: String,
        #[arg(long)]
        json: bool,
    },
    /// The partition of (1,2] into intervals, one per chain.
    Partition {
        m: u64,
        #[arg(long, default_value = "1e-12")]
        tol: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// tau_m on an evenly spaced grid of bases, as CSV.
    Sample {
        m: u64,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "1e-12")]
        tol: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The symbolic critical orbit for the subshift bounded by b (or, with
    /// --a, bounded below by a).
    Theta {
        m: u64,
        /// Upper bound as preperiod:period.
        #[arg(long, required_unless_present = "a", conflicts_with = "a")]
        b: Option<String>,
        /// Lower bound as preperiod:period.
        #[arg(long)]
        a: Option<String>,
    },
    /// Largest Lyndon and smallest Perron word of length m with k ones.
    Extremal { m: u64, k: u64 },
    /// The Farey word of p/q.
    Farey { fraction: String },
    /// w1 • w2 • ... • wn.
    Bullet {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Compares tau_m(beta) with tau_n(beta).
    Compare {
        m: u64,
        n: u64,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "1e-12")]
        tol: String,
    },
    /// Enclosure of the Komornik-Loreti constant.
    Kl {
        #[arg(long, default_value = "1e-12")]
        tol: String,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Serialize)]
struct Enclosure {
    lo: String,
    hi: String,
}

impl Enclosure {
    fn new(iv: &RealInterval, digits: usize) -> Self {
        Enclosure {
            lo: decimal_floor(iv.lo(), digits),
            hi: decimal_ceil(iv.hi(), digits),
        }
    }
}

#[derive(Serialize)]
struct ChainRecord {
    chain: String,
    word: String,
    anchor: String,
}

#[derive(Serialize)]
struct TauRecord {
    m: u64,
    beta: String,
    value: Enclosure,
    exact: Option<String>,
    expansion: String,
    classification: String,
    interval_type: Option<String>,
}

#[derive(Serialize)]
struct PartitionRecord {
    chain: String,
    anchor: String,
    tau_word: String,
    interval_type: String,
    left_endpoint: Enclosure,
}

#[derive(Serialize)]
struct PartitionCsvRecord {
    chain: String,
    anchor: String,
    tau_word: String,
    interval_type: String,
    left_lo: String,
    left_hi: String,
    left_mid: String,
}

#[derive(Serialize)]
struct SampleCsvRecord {
    beta: String,
    beta_exact: String,
    tau_lo: String,
    tau_hi: String,
    tau_mid: String,
    expansion: String,
    chain: String,
}

/// Decimal places needed to show a quantity to within `tol`.
fn parse_tol(s: &str) -> CliResult<(BigRational, usize)> {
    let (tol, _) = parse_decimal(s)?;
    if tol <= BigRational::zero() {
        return Err(CliError::Usage("tolerance must be positive".into()));
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut digits = 0;
    let mut unit = BigRational::one();
    while unit > tol {
        unit /= &ten;
        digits += 1;
    }
    Ok((tol, digits.max(1)))
}

fn parse_beta(input: &str, tol: &BigRational, precision: u32) -> CliResult<BetaParam> {
    let beta = if input.trim().eq_ignore_ascii_case("kl") {
        BetaParam::approximate(komornik_loreti(tol)?)?
    } else {
        input.parse::<BetaParam>()?
    };
    Ok(beta.with_precision(precision))
}

/// `p/q` or a decimal literal, read exactly.
fn parse_rational(s: &str) -> CliResult<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let bad = || CliError::Usage(format!("not a fraction: {s:?}"));
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(parse_decimal(s)?.0),
    }
}

fn parse_word(s: &str) -> CliResult<Word> {
    Ok(s.parse::<Word>()?)
}

fn parse_sequence(s: &str) -> CliResult<EventuallyPeriodicSequence> {
    Ok(s.parse::<EventuallyPeriodicSequence>()?)
}

fn type_of(c: &Classification) -> Option<String> {
    match c {
        Classification::BelowFirst => None,
        Classification::AboveLast => Some("last".into()),
        Classification::In(chain) => Some(interval_type(chain).to_string()),
    }
}

fn tau_record(m: u64, input: &str, beta: &BetaParam, digits: usize) -> CliResult<TauRecord> {
    let class = classify_beta(m, beta)?;
    let value: CriticalValue = tau(m, beta)?;
    Ok(TauRecord {
        m,
        beta: input.to_string(),
        value: Enclosure::new(&value.value, digits),
        exact: value.exact.as_ref().map(|r| r.to_string()),
        expansion: value.expansion.period().to_string(),
        classification: class.to_string(),
        interval_type: type_of(&class),
    })
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let precision = cli.precision;
    match cli.command {
        Command::Psi { m, table } => match (m, table) {
            (_, Some(n)) => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["n", "psi"])?;
                for (i, v) in psi_table(n).iter().enumerate() {
                    w.write_record([(i + 1).to_string(), v.to_string()])?;
                }
                w.flush()?;
            }
            (Some(m), None) => {
                if m == 0 {
                    return Err(CliError::Usage("m must be >= 1".into()));
                }
                writeln!(out, "{}", psi(m))?;
            }
            (None, None) => return Err(CliError::Usage("give m or --table N".into())),
        },
        Command::Chains { m, json } => {
            let records: Vec<ChainRecord> = enumerate_chains(m)?
                .iter()
                .map(|c| ChainRecord {
                    chain: c.to_string(),
                    word: chain_word(c).to_string(),
                    anchor: anchor(c).to_string(),
                })
                .collect();
            if json {
                serde_json::to_writer_pretty(&mut *out, &records)?;
                writeln!(out)?;
            } else {
                for r in records {
                    writeln!(out, "{} {} ({})^∞", r.chain, r.word, r.anchor)?;
                }
            }
        }
        Command::Tau { m, beta, tol, json } => {
            let (tol, digits) = parse_tol(&tol)?;
            let param = parse_beta(&beta, &tol, precision)?;
            let r = tau_record(m, &beta, &param, digits)?;
            if json {
                serde_json::to_writer_pretty(&mut *out, &r)?;
                writeln!(out)?;
            } else {
                writeln!(out, "value: [{},{}]", r.value.lo, r.value.hi)?;
                if let Some(e) = &r.exact {
                    writeln!(out, "exact: {e}")?;
                }
                writeln!(out, "expansion: ({})^∞", r.expansion)?;
                writeln!(out, "chain: {}", r.classification)?;
                if let Some(t) = &r.interval_type {
                    writeln!(out, "type: {t}")?;
                }
            }
        }
        Command::Partition { m, tol, json, csv } => {
            let (tol, digits) = parse_tol(&tol)?;
            let rows = partition_table(m, &tol)?;
            if csv {
                let mut w = csv::Writer::from_writer(out);
                for r in &rows {
                    w.serialize(PartitionCsvRecord {
                        chain: r.chain.to_string(),
                        anchor: r.anchor.to_string(),
                        tau_word: r.tau_word.to_string(),
                        interval_type: r.interval_type.to_string(),
                        left_lo: decimal_floor(r.left_endpoint.lo(), digits),
                        left_hi: decimal_ceil(r.left_endpoint.hi(), digits),
                        left_mid: decimal_floor(&r.left_endpoint.mid(), digits),
                    })?;
                }
                w.flush()?;
            } else {
                let records: Vec<PartitionRecord> = rows
                    .iter()
                    .map(|r| PartitionRecord {
                        chain: r.chain.to_string(),
                        anchor: r.anchor.to_string(),
                        tau_word: r.tau_word.to_string(),
                        interval_type: r.interval_type.to_string(),
                        left_endpoint: Enclosure::new(&r.left_endpoint, digits),
                    })
                    .collect();
                if json {
                    serde_json::to_writer_pretty(&mut *out, &records)?;
                    writeln!(out)?;
                } else {
                    for r in records {
                        writeln!(
                            out,
                            "{} ({})^∞ [{},{}] {} {}",
                            r.chain,
                            r.anchor,
                            r.left_endpoint.lo,
                            r.left_endpoint.hi,
                            r.tau_word,
                            r.interval_type
                        )?;
                    }
                }
            }
        }
        Command::Sample {
            m,
            from,
            to,
            steps,
            tol,
            out: path,
        } => {
            let (_, digits) = parse_tol(&tol)?;
            let from = parse_rational(&from)?;
            let to = parse_rational(&to)?;
            if steps > 1 && from >= to {
                return Err(CliError::Usage("--from must be below --to".into()));
            }
            let points = sample(m, &from, &to, steps)?;
            let sink: Box<dyn Write + '_> = match &path {
                Some(p) => Box::new(File::create(p)?),
                None => Box::new(&mut *out),
            };
            let mut w = csv::Writer::from_writer(sink);
            for p in &points {
                w.serialize(SampleCsvRecord {
                    beta: decimal_floor(&p.beta, digits),
                    beta_exact: p.beta.to_string(),
                    tau_lo: decimal_floor(p.tau.value.lo(), digits),
                    tau_hi: decimal_ceil(p.tau.value.hi(), digits),
                    tau_mid: decimal_floor(&p.tau.value.mid(), digits),
                    expansion: p.tau.expansion.period().to_string(),
                    chain: p.classification.to_string(),
                })?;
            }
            w.flush()?;
        }
        Command::Theta { m, b, a } => {
            let seq = match (b, a) {
                (Some(b), _) => theta(m, &parse_sequence(&b)?)?,
                (None, Some(a)) => theta_tilde(m, &parse_sequence(&a)?)?,
                (None, None) => return Err(CliError::Usage("give --b or --a".into())),
            };
            writeln!(out, "{seq}")?;
        }
        Command::Extremal { m, k } => {
            writeln!(out, "max-lyndon {}", max_lyndon(m, k)?)?;
            writeln!(out, "min-perron {}", min_perron(m, k)?)?;
        }
        Command::Farey { fraction } => {
            let bad = || CliError::Usage(format!("expected p/q, got {fraction:?}"));
            let (p, q) = fraction.split_once('/').ok_or_else(bad)?;
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let q: u64 = q.trim().parse().map_err(|_| bad())?;
            writeln!(out, "{}", farey_word(p, q)?)?;
        }
        Command::Bullet { words } => {
            let ws = words
                .iter()
                .map(|s| parse_word(s))
                .collect::<CliResult<Vec<_>>>()?;
            writeln!(out, "{}", bullet_fold(&ws)?)?;
        }
        Command::Compare { m, n, beta, tol } => {
            let (tol, digits) = parse_tol(&tol)?;
            let param = parse_beta(&beta, &tol, precision)?;
            let ord = tau_compare_at(m, n, &param)?;
            let word = match ord {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            writeln!(out, "{word}")?;
            for k in [m, n] {
                let r = tau_record(k, &beta, &param, digits)?;
                writeln!(
                    out,
                    "tau_{k}: [{},{}] ({})^∞ {}",
                    r.value.lo, r.value.hi, r.expansion, r.classification
                )?;
            }
        }
        Command::Kl { tol } => {
            let (tol, digits) = parse_tol(&tol)?;
            writeln!(out, "{}", komornik_loreti(&tol)?.to_decimal_string(digits))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Ambiguous { .. } | Error::Precision { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
