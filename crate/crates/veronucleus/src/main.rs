//! Thin command-line front end; all computation lives in the library.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use veronucleus::base_p::Prime;
use veronucleus::gf::DEFAULT_FIELD_CAP;
use veronucleus::report;
use veronucleus::verify::{self, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "veronucleus", version, about = "Nuclei and invariant subspaces of normal rational curves and Veronese varieties over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Ascii,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Pascal's triangle mod p with per-row zero-class statistics
    Pascal {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// k-nucleus table of a degree-n normal rational curve over GF(p^e),
    /// digit formula against the brute-force intersection
    Nuclei {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Lattice of invariant subspaces of the degree-n curve in
    /// characteristic p
    Lattice {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Hyperplane nucleus of the Veronese variety V_m^t over GF(p^e)
    Veronese {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run the formula-vs-oracle verification suites; exits non-zero on any
    /// mismatch
    Verify {
        /// Restrict to one suite: base_p, nrc, lattice, veronese
        #[arg(long)]
        only: Option<String>,
        /// Blanket bound applied to every n-like scope cap
        #[arg(long)]
        n_max: Option<u64>,
        /// Bound for multinomial enumerations
        #[arg(long)]
        t_max: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn field_cap() -> u64 {
    std::env::var("VERONUCLEUS_FIELD_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_FIELD_CAP)
}

fn emit(text: String, output: Option<PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn prime(p: u64) -> Result<Prime, String> {
    Prime::new(p).map_err(|e| e.to_string())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Pascal { rows, p, format, output } => {
            if rows < 1 {
                return Err("--rows must be at least 1".into());
            }
            let p = prime(p)?;
            let text = match format {
                Format::Ascii => report::pascal_ascii(rows, p),
                Format::Json => to_json(&report::pascal_report(rows, p)),
                Format::Table => report::pascal_table(&report::pascal_report(rows, p)),
                Format::Dot => return Err("pascal has no dot output".into()),
            };
            emit(text, output)?;
            Ok(true)
        }
        Command::Nuclei { n, p, e, format, output } => {
            let rep = report::nuclei_report(n, p, e, field_cap()).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Table => report::nuclei_table(&rep),
                Format::Json => to_json(&rep),
                _ => return Err("nuclei supports table or json output".into()),
            };
            emit(text, output)?;
            Ok(true)
        }
        Command::Lattice { n, p, format, output } => {
            let p = prime(p)?;
            let rep = report::lattice_report(n, p);
            let text = match format {
                Format::Json => to_json(&rep),
                Format::Dot => report::lattice_dot(&rep),
                _ => return Err("lattice supports json or dot output".into()),
            };
            emit(text, output)?;
            Ok(true)
        }
        Command::Veronese { m, t, p, e, format, output } => {
            let rep = report::veronese_report(m, t, p, e, field_cap()).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => to_json(&rep),
                Format::Table => report::veronese_table(&rep),
                _ => return Err("veronese supports json or table output".into()),
            };
            emit(text, output)?;
            Ok(true)
        }
        Command::Verify { only, n_max, t_max, format, output } => {
            let mut opts = VerifyOptions { field_cap: field_cap(), ..VerifyOptions::default() };
            if let Some(name) = only {
                opts.only = Some(Suite::parse(&name).ok_or_else(|| {
                    format!("unknown suite {name:?} (base_p | nrc | lattice | veronese)")
                })?);
            }
            if let Some(n) = n_max {
                opts = opts.with_n_max(n);
            }
            if let Some(t) = t_max {
                opts.multinomial_t_max = t;
            }
            let rep = verify::run(&opts);
            let text = match format {
                Format::Json => to_json(&rep),
                Format::Table | Format::Ascii => rep.summary(),
                Format::Dot => return Err("verify has no dot output".into()),
            };
            emit(text, output)?;
            Ok(rep.ok())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
