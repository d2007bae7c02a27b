use clap::{Parser, Subcommand, ValueEnum};

use wreath_traces::cli::{
    cmd_census, cmd_charpoly, cmd_groups, cmd_series, cmd_verify, CommandOutput, Format,
    SeriesKind, VerifyOptions,
};
use wreath_traces::oracle::oracle_cap_from_env;

/// Exact trace and supertrace counts for symplectic reflection algebras
/// of wreath-product groups Γ≀S_N.
#[derive(Parser)]
#[command(name = "wreath-traces", version, about)]
struct Args {
    /// Output format: human-readable text, JSON, or CSV
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(value: FormatArg) -> Format {
        match value {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichSeries {
    T,
    S,
    C,
}

impl From<WhichSeries> for SeriesKind {
    fn from(value: WhichSeries) -> SeriesKind {
        match value {
            WhichSeries::T => SeriesKind::Trace,
            WhichSeries::S => SeriesKind::Supertrace,
            WhichSeries::C => SeriesKind::Classes,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Class table and predicates of a finite subgroup of Sp(2, C)
    Groups {
        /// Group spec: Z<n>, D<n>, 2T, 2O, 2I (case-insensitive)
        #[arg(long)]
        gamma: String,
    },
    /// Count conjugacy classes and t-/s-admissible classes of Γ≀S_N
    Census {
        #[arg(long)]
        gamma: String,
        /// Number of blocks N
        #[arg(long)]
        n: u64,
        /// List every marked partition with admissibility and char-poly
        #[arg(long)]
        list: bool,
    },
    /// Coefficients of the generating functions t, s, or c
    Series {
        #[arg(long)]
        gamma: String,
        /// Which series: t (traces), s (supertraces), c (classes)
        #[arg(long, value_enum)]
        which: WhichSeries,
        /// Truncation order
        #[arg(long)]
        nmax: usize,
    },
    /// Cross-validate census, generating functions, and the brute-force oracle
    Verify {
        #[arg(long)]
        gamma: String,
        /// Largest N for the census/series comparison
        #[arg(long, default_value_t = 8)]
        nmax: u64,
        /// Largest N for the element-level oracle
        #[arg(long = "oracle-max", default_value_t = 2)]
        oracle_max: u64,
        /// Skip the element-level oracle
        #[arg(long)]
        skip_oracle: bool,
        /// Determinant tolerance for the ±1 eigenvalue test
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[arg(long, hide = true)]
        inject_mismatch: bool,
    },
    /// Characteristic polynomial of one marked partition
    Charpoly {
        #[arg(long)]
        gamma: String,
        /// Partition string, e.g. "2^1[c1] 1^2[c0]"
        #[arg(long)]
        mp: String,
    },
}

fn emit(output: &CommandOutput, format: Format) {
    println!("{}", output.render(format).trim_end());
}

fn main() {
    let args = Args::parse();
    let format = Format::from(args.format);

    let result = match args.command {
        Command::Groups { gamma } => cmd_groups(&gamma).map(|out| (out, 0)),
        Command::Census { gamma, n, list } => cmd_census(&gamma, n, list).map(|out| (out, 0)),
        Command::Series { gamma, which, nmax } => {
            cmd_series(&gamma, which.into(), nmax).map(|out| (out, 0))
        }
        Command::Charpoly { gamma, mp } => cmd_charpoly(&gamma, &mp).map(|out| (out, 0)),
        Command::Verify {
            gamma,
            nmax,
            oracle_max,
            skip_oracle,
            tolerance,
            inject_mismatch,
        } => {
            let options = VerifyOptions {
                nmax,
                oracle_max,
                skip_oracle,
                tolerance,
                oracle_cap: oracle_cap_from_env(),
                inject_mismatch,
            };
            cmd_verify(&gamma, &options)
                .map(|outcome| (outcome.output, if outcome.passed { 0 } else { 1 }))
        }
    };

    match result {
        Ok((output, code)) => {
            emit(&output, format);
            std::process::exit(code);
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(error.exit_code());
        }
    }
}
