use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tlimm::checks::{registry, run_check, Params};
use tlimm::combinatorics::parse_shapes;
use tlimm::immanants::hadamard_tl_immanant;
use tlimm::symfun::{expand_in_monomial, expand_in_schur};
use tlimm::Error;

#[derive(Parser)]
#[command(name = "tlimm", version, about = "Temperley–Lieb immanants of Hadamard products of Jacobi–Trudi matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a registered check and report pass/fail per instance.
    Verify {
        check: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Semicolon-separated shapes, e.g. "2,2,2;2,1/1".
        #[arg(long)]
        shapes: Option<String>,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Expand imm_τ of the Hadamard product of dual Jacobi–Trudi matrices.
    Expand {
        #[arg(long)]
        shapes: String,
        /// "identity", "I=1,3" or a generator word such as "t1*t3".
        #[arg(long, default_value = "identity")]
        tau: String,
        #[arg(long, value_enum, default_value = "s")]
        basis: BasisArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the registered checks.
    ListChecks,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    S,
    M,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownCheck(_) | Error::InvalidParam(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn write_json(path: &PathBuf, value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("plain data");
    std::fs::write(path, text + "\n").map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn verify(check: &str, params: Params, json: Option<PathBuf>) -> Result<bool, Failure> {
    let report = run_check(check, &params)?;
    println!("{}: {}", report.check, report.anchor);
    println!("  {} passed, {} failed ({} ms)", report.passed, report.failed, report.runtime_ms);
    if let Some(bad) = report.first_failure() {
        println!("  first failure: {}", bad.params);
        if let Some(w) = &bad.witness {
            println!("  witness: {w}");
        }
    } else if let Some(inst) = report.instances.iter().find(|i| i.witness.is_some()) {
        println!("  {}: {}", inst.status, inst.params);
        println!("  witness: {}", inst.witness.as_ref().expect("checked"));
    }
    if let Some(path) = json {
        write_json(&path, &report.to_json())?;
    }
    Ok(report.all_passed())
}

fn expand(shapes: &str, tau: &str, basis: BasisArg, json: Option<PathBuf>) -> Result<(), Failure> {
    let imm = hadamard_tl_immanant(&parse_shapes(shapes)?, tau)?;
    let expansion = match basis {
        BasisArg::S => expand_in_schur(&imm)?,
        BasisArg::M => expand_in_monomial(&imm)?,
    };
    println!("{expansion}");
    if let Some(path) = json {
        write_json(&path, &expansion.to_json())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::ListChecks => {
            for c in registry() {
                let params = if c.params.is_empty() { "-".to_string() } else { c.params.join(",") };
                println!("{:<18} [{params}] {}", c.id, c.anchor);
            }
            Ok(true)
        }
        Command::Verify { check, max_size, k, n, m, shapes, json } => {
            let parsed = shapes.as_deref().map(parse_shapes).transpose();
            match parsed {
                Ok(shapes) => verify(&check, Params { max_size, k, n, m, shapes }, json),
                Err(e) => Err(e.into()),
            }
        }
        Command::Expand { shapes, tau, basis, json } => expand(&shapes, &tau, basis, json).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
