use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bottsam_cli::report::Report;
use bottsam_cli::spec::ProblemSpec;
use bottsam_cli::{CliError, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
use clap::{Args, Parser, Subcommand};

/// Cohomology of line bundles on Bott-Samelson varieties and their toric
/// degenerations.
#[derive(Parser)]
#[command(name = "bottsam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vanishing conditions, certificates and the toric table of D = Σ a_i Z_i.
    Analyze(Common),
    /// Cohomology table of a toric divisor on the degenerate fiber.
    Toric(Common),
    /// Per-weight dump over the weight box.
    Weights {
        #[command(flatten)]
        common: Common,
        /// Include weights with no cohomology.
        #[arg(long)]
        all: bool,
    },
    /// Vanishing conclusions over a box of divisor coefficients.
    Scan {
        #[command(flatten)]
        common: Common,
        /// Coefficient range LO:HI; give once for every index or once per index.
        #[arg(long = "range", value_name = "LO:HI", allow_hyphen_values = true, value_parser = parse_range)]
        ranges: Vec<[i64; 2]>,
    },
    /// Compare closed form, simplicial and Čech computations weight by weight.
    Oracle(Common),
}

#[derive(Args)]
struct Common {
    /// Problem document (JSON); `-` reads standard input.
    input: PathBuf,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Record witness weights.
    #[arg(long)]
    witnesses: bool,
    /// Maximum number of enumeration steps.
    #[arg(long, value_name = "POINTS")]
    cap: Option<u64>,
    /// Skip the toric table.
    #[arg(long)]
    no_toric: bool,
}

fn parse_range(s: &str) -> Result<[i64; 2], String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok([parse(lo)?, parse(hi)?])
}

impl Common {
    fn load(&self) -> Result<ProblemSpec, CliError> {
        let text = if self.input.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Invalid(format!("cannot read standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(&self.input)
                .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", self.input.display())))?
        };
        let mut spec = ProblemSpec::parse(&text)?;
        spec.options.witnesses |= self.witnesses;
        spec.options.no_toric |= self.no_toric;
        if self.cap.is_some() {
            spec.options.cap = self.cap;
        }
        Ok(spec)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn emit_report(out: &mut impl Write, report: &Report, json: bool) -> io::Result<i32> {
    if json {
        out.write_all(to_json(report).as_bytes())?;
    } else {
        out.write_all(report.render_text().as_bytes())?;
    }
    let code = report.exit_code();
    if code == EXIT_MISMATCH {
        match report.oracle.as_ref().and_then(|o| o.first_mismatch.as_ref()) {
            Some(m) => eprintln!("oracle mismatch at weight {:?}", m.weight),
            None => eprintln!("oracle mismatch in table totals"),
        }
    }
    Ok(code)
}

enum Failure {
    Cli(CliError),
    Io(io::Error),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Cli(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<i32, Failure> {
    let code = match cli.command {
        Command::Analyze(c) => emit_report(out, &bottsam_cli::analyze(&c.load()?)?, c.json)?,
        Command::Toric(c) => emit_report(out, &bottsam_cli::toric(&c.load()?)?, c.json)?,
        Command::Oracle(c) => emit_report(out, &bottsam_cli::oracle(&c.load()?)?, c.json)?,
        Command::Weights { common, all } => {
            let dump = bottsam_cli::weights(&common.load()?, all)?;
            if common.json {
                out.write_all(to_json(&dump).as_bytes())?;
            } else {
                out.write_all(dump.render_text().as_bytes())?;
            }
            EXIT_OK
        }
        Command::Scan { common, ranges } => {
            let mut spec = common.load()?;
            if !ranges.is_empty() {
                spec.options.scan_ranges = Some(ranges);
            }
            for record in bottsam_cli::scan(&spec)? {
                if common.json {
                    writeln!(out, "{}", serde_json::to_string(&record).expect("records serialize"))?;
                } else {
                    writeln!(out, "{}", record.render_text())?;
                }
            }
            EXIT_OK
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID as u8 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        // a closed pipe downstream (e.g. `| head`) is not an error
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(EXIT_INVALID as u8)
        }
        Err(Failure::Cli(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
