mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use xhopf::Error;

#[derive(Parser)]
#[command(name = "xhopf", version, about = "Exact Ext/Tor, products and duality for x_A-Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResolutionKind {
    Bar,
    Ce,
}

#[derive(Subcommand)]
enum Command {
    /// Takeuchi and Schauenburg identity sweeps (translation-map identities for U(g)).
    VerifyHopf { instance: String },
    /// Ext^n_U(A, M) for n ≤ max-degree.
    Ext(DerivedArgs),
    /// Tor_n^U(M, A) for n ≤ max-degree, M taken as a right module.
    Tor(DerivedArgs),
    /// Cup products Ext^m(A,A) × Ext^n(A,A), compared with Yoneda composites.
    Cup {
        instance: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Caps Ext^m(A,A) × Tor_n(N,A), compared with the bullet action.
    Cap {
        instance: String,
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Duality data and the cap-with-ω table.
    Duality {
        instance: String,
        #[arg(long, default_value = "trivial")]
        module: String,
    },
    /// The instance catalog.
    Instances {
        #[command(subcommand)]
        action: InstancesAction,
    },
    /// Independent brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(clap::Args)]
pub struct DerivedArgs {
    pub instance: String,
    #[arg(long, default_value = "trivial")]
    pub module: String,
    #[arg(long)]
    pub max_degree: usize,
    #[arg(long, value_enum)]
    pub resolution: Option<ResolutionKind>,
}

#[derive(Subcommand)]
enum InstancesAction {
    List,
    /// Export one instance as JSON.
    Show { name: String },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Hochschild (co)homology dimensions from the standard complexes.
    Hochschild {
        algebra: String,
        #[arg(long)]
        max_degree: usize,
    },
}

/// Exit codes: 0 success, 1 verification failure, 2 usage, 3 window exceeded.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::WindowExceeded { .. } => 3,
        Error::Invalid(_) | Error::Parse(_) | Error::NotProjective(_) | Error::NotDuality { .. } => 2,
        Error::NotInvertible { .. }
        | Error::NotWellDefined(_)
        | Error::LiftFailed { .. }
        | Error::DegreeOverflow { .. } => 1,
    }
}

/// A closed stdout (as under `| head`) is not an error worth a panic.
fn emit(report: &serde_json::Value) {
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(report).expect("reports serialize"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::VerifyHopf { instance } => commands::verify_hopf(&instance),
        Command::Ext(args) => commands::derived(&args, false),
        Command::Tor(args) => commands::derived(&args, true),
        Command::Cup { instance, m, n } => commands::cup(&instance, m, n),
        Command::Cap { instance, module, m, n } => commands::cap(&instance, &module, m, n),
        Command::Duality { instance, module } => commands::duality(&instance, &module),
        Command::Instances { action: InstancesAction::List } => commands::instances_list(),
        Command::Instances { action: InstancesAction::Show { name } } => commands::instances_show(&name),
        Command::Oracle { action: OracleAction::Hochschild { algebra, max_degree } } => {
            commands::oracle_hochschild(&algebra, max_degree)
        }
    };
    match result {
        Ok(out) => {
            emit(&out.report);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let report = serde_json::json!({ "error": e.to_string(), "exit_code": exit_code(&e) });
            emit(&report);
            eprintln!("xhopf: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
