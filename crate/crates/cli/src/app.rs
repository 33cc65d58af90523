//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use radix_economy_core::economy::{self, DEFAULT_TOLERANCE};
use radix_economy_core::numeral::{self, BalancedTernary, Numeral, Radix};
use radix_economy_core::tree::{self, TreeSpec};
use radix_economy_core::CostModel;

use crate::csv;
use crate::error::CliError;

/// Largest radix the CLI accepts.
pub const MAX_CLI_RADIX: u64 = 4096;

/// Upper bounds reproduced by `table`, in row order.
pub const TABLE_ROWS: [(&str, f64); 6] = [
    ("e", std::f64::consts::E),
    ("10", 10.0),
    ("50", 50.0),
    ("200", 200.0),
    ("500", 500.0),
    ("1000", 1000.0),
];

#[derive(Debug, Parser)]
#[command(
    name = "radix",
    version,
    about = "Positional numerals and radix-economy analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a decimal integer in another radix or in balanced ternary
    Convert {
        /// Decimal integer, may be negative
        #[arg(allow_hyphen_values = true)]
        value: BigInt,
        /// Target radix (2..=4096) or `bt` for balanced ternary
        #[arg(long, value_parser = parse_target)]
        to: Target,
    },
    /// Number of digits needed to write a value
    Width {
        /// Non-negative decimal integer
        value: BigUint,
        /// Radix (2..=4096)
        #[arg(long, value_parser = parse_radix)]
        radix: u64,
    },
    /// Largest value that fits in `width + 1` digits
    Maxval {
        /// Radix (2..=4096)
        #[arg(long, value_parser = parse_radix)]
        radix: u64,
        /// Highest power index w; the digit count is w + 1
        #[arg(long)]
        width: u64,
    },
    /// Encode to or decode from balanced ternary (digits 1, 0, T)
    Balanced {
        /// Decimal integer to encode, may be negative
        #[arg(allow_hyphen_values = true, required_unless_present = "decode")]
        value: Option<BigInt>,
        /// Balanced-ternary digits to decode, e.g. 1TT
        #[arg(long, conflicts_with = "value")]
        decode: Option<String>,
    },
    /// Capacity or depth of a packed tree
    Tree(TreeArgs),
    /// Sample a cost curve as CSV
    Curve(CurveArgs),
    /// Radix minimising a cost
    Optimize {
        /// Cost function
        #[arg(long, value_enum)]
        cost: Cost,
        /// Upper bound C (a number, or `e`); ignored by e1
        #[arg(long, value_parser = parse_upper, default_value = "e")]
        upper: f64,
        /// Residual tolerance for the e2 root
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Optimal e2 radix for C = e, 10, 50, 200, 500, 1000
    Table {
        /// Residual tolerance for each root
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Compare trits with bits and state usage of a ternary device
    Compare {
        /// Number of trits
        #[arg(long)]
        trits: u64,
        /// States the device can hold
        #[arg(long, default_value_t = 4)]
        states_available: u32,
        /// States the encoding uses
        #[arg(long, default_value_t = 3)]
        states_used: u32,
    },
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    /// Items per node (m)
    #[arg(long)]
    pub node_size: u64,
    /// Depth d; prints the capacity
    #[arg(long, required_unless_present = "total", conflicts_with = "total")]
    pub depth: Option<u64>,
    /// Item total including the root; prints the minimal depth
    #[arg(long)]
    pub total: Option<BigUint>,
    /// Count the root item in the capacity
    #[arg(long, requires = "depth")]
    pub include_root: bool,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Cost function
    #[arg(long, value_enum)]
    pub cost: Cost,
    /// Upper bound C (a number, or `e`)
    #[arg(long, value_parser = parse_upper, default_value = "e")]
    pub upper: f64,
    /// Smallest radix sampled
    #[arg(long, default_value_t = 1.2)]
    pub rmin: f64,
    /// Largest radix sampled
    #[arg(long, default_value_t = 6.0)]
    pub rmax: f64,
    /// Number of intervals; steps + 1 rows are written
    #[arg(long, default_value_t = 480)]
    pub steps: usize,
    /// Output file; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Cost {
    /// Product r·w
    E1,
    /// Sum r + w
    E2,
}

impl From<Cost> for CostModel {
    fn from(c: Cost) -> CostModel {
        match c {
            Cost::E1 => CostModel::Product,
            Cost::E2 => CostModel::Sum,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Radix(u64),
    BalancedTernary,
}

fn parse_radix(s: &str) -> Result<u64, String> {
    let r: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if r > MAX_CLI_RADIX {
        return Err(format!("radix above {MAX_CLI_RADIX} is not supported"));
    }
    Ok(r)
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s.eq_ignore_ascii_case("bt") {
        return Ok(Target::BalancedTernary);
    }
    parse_radix(s)
        .map(Target::Radix)
        .map_err(|e| format!("expected a radix or `bt`: {e}"))
}

fn parse_upper(s: &str) -> Result<f64, String> {
    if s == "e" {
        return Ok(std::f64::consts::E);
    }
    s.parse().map_err(|e| format!("{e}"))
}

/// Parses `args` (program name first) and runs the command.
///
/// Returns the process exit status: 0 on success, 1 on a domain or IO
/// error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let mut text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                if !text.contains("Usage:") {
                    text.push_str(&format!("\n{}\n", usage_for(&args)));
                }
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Usage line of the subcommand named in `args`, or of the program.
fn usage_for(args: &[OsString]) -> String {
    let mut cmd = Cli::command();
    let sub = args
        .get(1)
        .and_then(|a| a.to_str())
        .and_then(|name| cmd.find_subcommand_mut(name).map(|c| c.clone()));
    match sub {
        Some(sub) => {
            let name = format!("radix {}", sub.get_name());
            sub.bin_name(name).render_usage().to_string()
        }
        None => cmd.render_usage().to_string(),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Convert { value, to } => match to {
            Target::Radix(r) => writeln!(out, "{}", Numeral::from_bigint(&value, Radix::new(r)?))?,
            Target::BalancedTernary => writeln!(out, "{}", BalancedTernary::encode(&value))?,
        },
        Command::Width { value, radix } => writeln!(out, "{}", numeral::width_for(&value, radix)?)?,
        Command::Maxval { radix, width } => writeln!(out, "{}", numeral::max_value(radix, width)?)?,
        Command::Balanced { value, decode } => match (value, decode) {
            (_, Some(text)) => writeln!(out, "{}", text.parse::<BalancedTernary>()?.decode())?,
            (Some(value), None) => writeln!(out, "{}", BalancedTernary::encode(&value))?,
            (None, None) => unreachable!("clap requires one of value or --decode"),
        },
        Command::Tree(args) => match (args.depth, args.total) {
            (Some(depth), _) => {
                let spec = TreeSpec::new(args.node_size, depth)?;
                writeln!(out, "{}", tree::capacity(&spec, args.include_root))?
            }
            (None, Some(total)) => writeln!(out, "{}", tree::depth_for(&total, args.node_size)?)?,
            (None, None) => unreachable!("clap requires one of --depth or --total"),
        },
        Command::Curve(args) => {
            let samples = economy::cost_curve(
                args.cost.into(),
                args.upper,
                args.rmin,
                args.rmax,
                args.steps,
            )?;
            match args.out {
                Some(path) => csv::write_curve_file(&path, &samples)
                    .map_err(|source| CliError::Write { path, source })?,
                None => csv::write_curve(&mut *out, &samples)?,
            }
        }
        Command::Optimize { cost, upper, tol } => match cost {
            Cost::E1 => writeln!(
                out,
                "r = {:.4} (e, independent of C)",
                economy::e1_optimal_radix()
            )?,
            Cost::E2 => {
                let root = solve(upper, tol)?;
                writeln!(
                    out,
                    "r = {:.4} (C = {}, residual = {:.3e}, iterations = {})",
                    root.r, upper, root.residual, root.iterations
                )?
            }
        },
        Command::Table { tol } => write_table(out, tol)?,
        Command::Compare {
            trits,
            states_available,
            states_used,
        } => {
            let range = economy::ternary_range(trits)?;
            let bits = economy::trit_bit_equivalence(trits)?;
            let efficiency = economy::device_state_efficiency(states_available, states_used)?;
            let whole_bits = (range.clone() - 1u32).bits().max(1);
            writeln!(out, "trits: {trits}")?;
            writeln!(out, "ternary range: {range}")?;
            writeln!(out, "equivalent bits: {bits:.3}")?;
            writeln!(out, "whole bits needed: {whole_bits}")?;
            writeln!(
                out,
                "state efficiency: {efficiency:.2} ({states_used} of {states_available} states, {:.0}% unused)",
                (1.0 - efficiency) * 100.0
            )?;
        }
    }
    Ok(())
}

fn solve(upper: f64, tol: f64) -> Result<economy::RootResult, CliError> {
    let root = economy::e2_optimal_radix(upper, tol)?;
    if !root.converged {
        return Err(CliError::NotConverged {
            upper,
            tolerance: tol,
            residual: root.residual,
        });
    }
    Ok(root)
}

/// Recomputes every row before printing so a failure leaves no partial table.
pub fn write_table(out: &mut dyn Write, tol: f64) -> Result<(), CliError> {
    let roots = TABLE_ROWS
        .iter()
        .map(|&(label, upper)| solve(upper, tol).map(|root| (label, root.r)))
        .collect::<Result<Vec<_>, _>>()?;
    writeln!(out, "{:<6} r", "C")?;
    for (label, r) in roots {
        writeln!(out, "{label:<6} {r:.4}")?;
    }
    Ok(())
}
