use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumset_core::bounds::sweep::{DEFAULT_SEED, DEFAULT_SWEEP_CAP};
use sumset_core::bounds::Check;
use sumset_core::engine::SumsetKind;

#[derive(Debug, Parser)]
#[command(name = "sumsets", version, about = "Restricted sumsets and their lower bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one sumset and print its elements and cardinality
    Enumerate(EnumerateArgs),

    /// Check the transform and coefficient identities over a range of sizes
    Identities(IdentityArgs),

    /// Check a bound on one family, or on every family in a range
    Verify(CheckArgs),

    /// Like verify over ranges, writing every record to a report file
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Records {
    /// Every evaluated family and every skipped shape
    All,
    /// Violations and skipped shapes only
    Notable,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Work in F_p; verify and sweep accept a comma-separated list of primes
    #[arg(long, value_name = "P", value_delimiter = ',', conflicts_with = "int")]
    pub zp: Vec<u32>,

    /// Work in the integer lattice Z^r
    #[arg(long)]
    pub int: bool,

    /// Lattice dimension r for --int
    #[arg(long, value_name = "R", default_value_t = 1, requires = "int")]
    pub dim: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: SumsetKind,

    #[command(flatten)]
    pub domain: DomainArgs,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Family literal such as "{0,1,2};{0,1}" or "{0,1,2}x4"
    pub family: String,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// Largest number of variables for the transform identities
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,

    /// Largest exponent k in the coefficient identities
    #[arg(long, default_value_t = 5)]
    pub max_k: u32,

    /// Largest number of variables in the coefficient identities
    #[arg(long, default_value_t = 8)]
    pub max_coeff_n: usize,

    /// Also print the expanded path and cycle polynomials
    #[arg(long)]
    pub show_polynomials: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// A bound check, or the equality classification of the torsion-free bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Bound(Check),
    Equality,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "equality" {
            return Ok(Target::Equality);
        }
        Check::from_str(s).map(Target::Bound).map_err(|_| {
            let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
            format!("unknown check {s:?}; expected one of {}, equality", names.join(", "))
        })
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// One of conjecture-l, conjecture-c, theorem-l3, theorem-even-c,
    /// theorem-odd-l, corollary, torsionfree-l, torsionfree-c, equality
    #[arg(value_parser = Target::from_str)]
    pub check: Target,

    /// Check this family only instead of sweeping a range
    pub family: Option<String>,

    #[command(flatten)]
    pub domain: DomainArgs,

    /// Sumset kinds for the equality classification
    #[arg(long, value_parser = parse_kind, value_delimiter = ',')]
    pub kind: Vec<SumsetKind>,

    /// Number of summands, as N or LO..HI
    #[arg(long, value_parser = parse_usize_range)]
    pub n: Option<(usize, usize)>,

    /// Member sizes, as K or LO..HI
    #[arg(long, value_parser = parse_usize_range)]
    pub sizes: Option<(usize, usize)>,

    /// Integer window for torsion-free sweeps, as LO..HI
    #[arg(long, value_parser = parse_i64_range, allow_hyphen_values = true)]
    pub window: Option<(i64, i64)>,

    /// Most families evaluated exhaustively per shape, such as 100000 or 1e8
    #[arg(long, value_parser = parse_cap, default_value_t = DEFAULT_SWEEP_CAP)]
    pub cap: u128,

    /// Families drawn at random from each shape over the cap
    #[arg(long, default_value_t = 0)]
    pub samples: u64,

    /// Seed for sampling, decimal or 0x-prefixed hex
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub check: CheckArgs,

    /// Report file; defaults to a name derived from the check, inside
    /// $SUMSETS_OUT_DIR or the working directory
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Records::All)]
    pub records: Records,
}

fn parse_kind(s: &str) -> Result<SumsetKind, String> {
    SumsetKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_range<T: FromStr + PartialOrd + Copy>(s: &str) -> Result<(T, T), String> {
    let parse = |part: &str| {
        part.trim()
            .parse::<T>()
            .map_err(|_| format!("{part:?} is not a valid bound"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn parse_usize_range(s: &str) -> Result<(usize, usize), String> {
    parse_range(s)
}

fn parse_i64_range(s: &str) -> Result<(i64, i64), String> {
    parse_range(s)
}

/// Accepts plain integers and `MeE` shorthand such as `1e10`.
fn parse_cap(s: &str) -> Result<u128, String> {
    let value = match s.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let m: u128 = mantissa.parse().map_err(|_| format!("bad cap {s:?}"))?;
            let e: u32 = exp.parse().map_err(|_| format!("bad cap {s:?}"))?;
            10u128
                .checked_pow(e)
                .and_then(|p| p.checked_mul(m))
                .ok_or_else(|| format!("cap {s:?} is too large"))?
        }
        None => s.parse().map_err(|_| format!("bad cap {s:?}"))?,
    };
    if value == 0 {
        return Err("the cap must be positive".into());
    }
    Ok(value)
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x") {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|_| format!("bad seed {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_usize_range("3"), Ok((3, 3)));
        assert_eq!(parse_usize_range("2..5"), Ok((2, 5)));
        assert_eq!(parse_usize_range("2..=5"), Ok((2, 5)));
        assert_eq!(parse_i64_range("-3..4"), Ok((-3, 4)));
        assert!(parse_usize_range("5..2").is_err());
        assert!(parse_usize_range("a..2").is_err());
    }

    #[test]
    fn caps_and_seeds() {
        assert_eq!(parse_cap("1e10"), Ok(10_000_000_000));
        assert_eq!(parse_cap("250"), Ok(250));
        assert!(parse_cap("0").is_err());
        assert!(parse_cap("1e40").is_err());
        assert_eq!(parse_seed("0x10"), Ok(16));
        assert_eq!(parse_seed("1_000"), Ok(1000));
    }

    #[test]
    fn targets() {
        assert_eq!("equality".parse::<Target>(), Ok(Target::Equality));
        assert_eq!("theorem-l3".parse::<Target>(), Ok(Target::Bound(Check::TheoremL3)));
        assert!("theorem-l4".parse::<Target>().unwrap_err().contains("torsionfree-c"));
    }

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
