use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ihull_cli::commands::{run_command, Options};
use ihull_cli::error::CliError;
use ihull_cli::freeprod::cmd_freeprod;
use ihull_cli::input::{parse_input, parse_monoid_factor, InputDocument};
use ihull_cli::report::Report;
use ihull_cli::verify::run_verify;

/// Workbench for finite semigroups with zero: the regular representation,
/// the inverse hull, constructible sets, strings, and the character
/// spectrum.
#[derive(Parser)]
#[command(name = "ihull", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input file (semigroup:, language:, markov: or monoid: kind).
    file: String,
    /// Emit the report as JSON with sorted keys.
    #[arg(long)]
    json: bool,
    /// Enable brute-force cross-checks.
    #[arg(long)]
    oracle: bool,
    /// Cap on the number of inverse-hull elements.
    #[arg(long, default_value_t = 100_000)]
    max_hull: usize,
    /// Cap on the lower-set size for cover enumeration.
    #[arg(long, default_value_t = 20)]
    max_cover: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Structural flags, element classification, lcm and alignment tables.
    Props(Common),
    /// The inverse hull with witnesses.
    Hull(Common),
    /// The constructible subsets.
    Constructible(Common),
    /// Strings, their classification, and the star-action domains.
    Strings(Common),
    /// The semilattice of constructible sets and its characters.
    Spectrum(Common),
    /// The ultracharacter census.
    Census(Common),
    /// Run the verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Only run suites whose name contains this string.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Evaluate an expression in the zero-free product of two monoids.
    Freeprod {
        /// Monoid file for the first factor (M).
        factor_m: String,
        /// Monoid file for the second factor (N).
        factor_n: String,
        /// Expression, e.g. `a.M * b.N` or `a.M | a.M b.N`.
        expr: String,
        /// Emit the report as JSON with sorted keys.
        #[arg(long)]
        json: bool,
        /// Syllable length bound for lcm verification.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

fn load(common: &Common) -> Result<(InputDocument, Options), CliError> {
    let text = fs::read_to_string(&common.file)
        .map_err(|e| CliError::Input(format!("{}: {e}", common.file)))?;
    let doc = parse_input(&text)?;
    let options = Options {
        max_hull: common.max_hull,
        max_cover: common.max_cover,
        oracle: common.oracle,
    };
    Ok((doc, options))
}

fn emit(report: &Report, json: bool) {
    if json {
        print!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Props(c) => report_command("props", &c),
        Command::Hull(c) => report_command("hull", &c),
        Command::Constructible(c) => report_command("constructible", &c),
        Command::Strings(c) => report_command("strings", &c),
        Command::Spectrum(c) => report_command("spectrum", &c),
        Command::Census(c) => report_command("census", &c),
        Command::Verify { common, suite } => {
            let (doc, options) = load(&common)?;
            let (report, failures) = run_verify(&doc, &options, suite.as_deref())?;
            emit(&report, common.json);
            if failures > 0 {
                return Err(CliError::Verification(format!("{failures} suite(s) failed")));
            }
            Ok(())
        }
        Command::Freeprod { factor_m, factor_n, expr, json, bound } => {
            let read = |path: &str| -> Result<_, CliError> {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
                Ok(parse_monoid_factor(&text)?)
            };
            let m = read(&factor_m)?;
            let n = read(&factor_n)?;
            let report = cmd_freeprod(&m, &n, &expr, bound)?;
            emit(&report, json);
            Ok(())
        }
    }
}

fn report_command(name: &str, common: &Common) -> Result<(), CliError> {
    let (doc, options) = load(common)?;
    let report = run_command(name, &doc, &options)?;
    emit(&report, common.json);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage problems are input errors under the exit-code contract;
            // --help and --version exit cleanly
            let printed_help = !e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if printed_help { 0 } else { 1 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
