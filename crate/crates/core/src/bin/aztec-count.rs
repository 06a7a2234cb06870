use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use aztec_count::cli::{self, record, verify, Format, VerifyConfig};
use aztec_count::{Error, Method, RegionSpec};

/// Exact domino tiling counts of expanded (p,q)-Aztec diamonds.
#[derive(Parser)]
#[command(name = "aztec-count", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the tilings of one region.
    Compute(Target),
    /// Count every region with p, q, n up to the given maxima.
    Sweep(Target),
    /// Run the self-check suites.
    Verify {
        /// Largest region, in squares, compared with brute-force enumeration.
        #[arg(long, default_value_t = 36)]
        max_squares: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

/// Parameters may be given positionally (`compute 0 0 4 vector`) or as flags.
#[derive(Args)]
struct Target {
    #[arg(value_name = "P")]
    p_pos: Option<u32>,
    #[arg(value_name = "Q")]
    q_pos: Option<u32>,
    #[arg(value_name = "N")]
    n_pos: Option<u32>,
    #[arg(value_name = "METHOD")]
    method_pos: Option<Method>,
    #[arg(long, conflicts_with = "p_pos")]
    p: Option<u32>,
    #[arg(long, conflicts_with = "q_pos")]
    q: Option<u32>,
    #[arg(long, conflicts_with = "n_pos")]
    n: Option<u32>,
    #[arg(long, conflicts_with = "method_pos")]
    method: Option<Method>,
    #[arg(long, default_value = "csv")]
    format: Format,
}

impl Target {
    fn resolve(&self) -> Result<(u32, u32, u32, Method, Format), Error> {
        let missing = |name: &str| Error::InvalidArgument(format!("missing parameter {name}"));
        Ok((
            self.p.or(self.p_pos).ok_or_else(|| missing("p"))?,
            self.q.or(self.q_pos).ok_or_else(|| missing("q"))?,
            self.n.or(self.n_pos).ok_or_else(|| missing("n"))?,
            self.method.or(self.method_pos).unwrap_or(Method::Vector),
            self.format,
        ))
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("{}", cli::error_json(err));
    ExitCode::from(cli::exit_code(err) as u8)
}

fn emit(format: Format, records: &[cli::OutputRecord]) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    record::write_records(&mut out, format, records)?;
    out.flush()
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() {
                cli::EXIT_USAGE
            } else {
                cli::EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match args.command {
        Command::Compute(target) => {
            let (p, q, n, method, format) = match target.resolve() {
                Ok(t) => t,
                Err(e) => return fail(&e),
            };
            match cli::compute(RegionSpec::new(p, q, n), method).and_then(|r| emit(format, &[r])) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&e),
            }
        }
        Command::Sweep(target) => {
            let (p, q, n, method, format) = match target.resolve() {
                Ok(t) => t,
                Err(e) => return fail(&e),
            };
            match emit(format, &cli::sweep(p, q, n, method)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&e),
            }
        }
        Command::Verify {
            max_squares,
            inject_fault,
        } => {
            let mut config = VerifyConfig {
                max_squares,
                ..VerifyConfig::default()
            };
            match inject_fault.as_deref() {
                None => {}
                Some("corrupt-bar-seed") => config.bar_source = verify::corrupted_bar_pair,
                Some(other) => {
                    return fail(&Error::InvalidArgument(format!("unknown fault {other:?}")));
                }
            }
            let report = cli::verify(&config);
            println!("{report}");
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(cli::EXIT_VERIFY_FAILED as u8)
            }
        }
    }
}
