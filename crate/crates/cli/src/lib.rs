//! Batch front end: every subcommand prints one JSON [`CommandReport`].

pub mod commands;
pub mod golden;
pub mod report;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

pub use report::{CommandReport, Failure, Status, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "smaralg",
    version,
    about = "Exact algebra over subfields of Z_n, semigroup representations, semivector spaces and Leontief models"
)]
pub struct Cli {
    /// Pretty-print the JSON and write a summary table to stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every subfield of Z_n.
    Subfields {
        n: u64,
    },
    /// Check whether a residue set is a subfield of Z_n.
    Certify {
        n: u64,
        /// Comma-separated residues, e.g. 0,2,4.
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<u64>,
    },
    /// Polynomial criteria over Z_n.
    Poly(PolyArgs),
    /// Eigen-analysis and spectral decomposition of a matrix over a subfield.
    Spectral(SpectralArgs),
    /// Three-valued root classification relative to a subfield.
    ClassifyRoots {
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        subfield: Vec<u64>,
        /// Polynomial in the terms grammar, e.g. "x^2+2".
        poly: String,
    },
    /// Maximal subgroups of a finite semigroup.
    Semigroup(SemigroupArgs),
    /// Regular representations of a subgroup.
    Rep(RepArgs),
    /// Semivector-space queries from a JSON request.
    Semivec(JsonInput),
    /// Iterate a (Smarandache) Markov chain.
    Markov(MarkovArgs),
    /// Closed or open Leontief model.
    Leontief(LeontiefArgs),
    /// Replay the worked examples and report pass/fail per anchor.
    Golden,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("poly_mode").required(true).args(["expr", "family", "kernel", "power_sum"])))]
pub struct PolyArgs {
    #[arg(long = "mod")]
    pub modulus: u64,
    /// Polynomial in the terms grammar, e.g. "2x^3+2x^2+x+1".
    pub expr: Option<String>,
    /// Multiply the polynomial by these factors first.
    #[arg(long, requires = "expr")]
    pub times: Vec<String>,
    #[arg(long, value_enum, requires = "c")]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub c: Option<u64>,
    /// Kernel of the coefficient-sum map up to this degree.
    #[arg(long)]
    pub kernel: Option<usize>,
    /// Base a of the power sum a + a^2 + ... + a^(r-1).
    #[arg(long, requires = "exponent")]
    pub power_sum: Option<u64>,
    #[arg(long)]
    pub exponent: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    XpLinear,
    GeometricSum,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "json"])))]
pub struct JsonInput {
    /// Read the request from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline JSON request.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("matrix_input").required(true).args(["file", "matrix"])))]
pub struct SpectralArgs {
    /// Matrix JSON file: {"n","subfield","rows","cols","entries"}.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline matrix JSON.
    #[arg(long)]
    pub matrix: Option<String>,
    #[arg(long, value_enum, default_value = "decompose")]
    pub mode: SpectralMode,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SpectralMode {
    Decompose,
    Eigen,
    Charpoly,
    Rref,
    Adjoint,
    Form,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("table_input").required(true).args(["named", "file", "table"])))]
pub struct TableSource {
    /// Built-in semigroup: T1-T3, S1-S4, C1-C6, N1-N6.
    #[arg(long)]
    pub named: Option<String>,
    /// Table file, JSON {"order","table"} or headerless CSV (.csv).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline JSON table.
    #[arg(long)]
    pub table: Option<String>,
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    #[command(flatten)]
    pub source: TableSource,
    /// Enumerate every subgroup, not only the maximal ones.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[command(flatten)]
    pub source: TableSource,
    /// Idempotent whose maximal subgroup is used; defaults to the largest.
    #[arg(long)]
    pub identity: Option<usize>,
    #[arg(long, value_enum, default_value = "left")]
    pub side: SideArg,
    #[arg(long, value_enum, default_value = "matrices")]
    pub action: RepAction,
    /// Subspace basis for `--action project`, JSON list of rational vectors.
    #[arg(long)]
    pub subspace: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepAction {
    Matrices,
    Intertwiner,
    Isomorphic,
    Decompose,
    Project,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("markov_input").required(true).args(["matrix", "file"])))]
pub struct MarkovArgs {
    /// Transition matrix JSON (rows of "p/q" strings or integers).
    #[arg(long)]
    pub matrix: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Initial state vector JSON; omit to only classify the matrix.
    #[arg(long)]
    pub state: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("leontief_input").required(true).args(["matrix", "file", "csv"])))]
pub struct LeontiefArgs {
    #[arg(value_enum)]
    pub model: ModelArg,
    #[arg(long)]
    pub matrix: Option<String>,
    /// Matrix JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Consumption CSV with a header row of industry names.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Demand vector JSON, required for the open model.
    #[arg(long)]
    pub demand: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Closed,
    Open,
}

/// Everything a process needs to emit: stdout, stderr and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

pub fn run(cli: &Cli) -> (CommandReport, i32) {
    let (result, citations) = commands::dispatch(&cli.command);
    match result {
        Ok(payload) => {
            let failed = payload.get("all_passed") == Some(&serde_json::Value::Bool(false));
            let report = CommandReport {
                status: Status::Ok,
                payload,
                citations,
            };
            (report, if failed { EXIT_DOMAIN } else { EXIT_OK })
        }
        Err(f) => {
            let exit = f.exit;
            (f.into_report(citations), exit)
        }
    }
}

fn render(report: &CommandReport, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    }
    .expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs it.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::error::ErrorKind;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                stdout: e.render().to_string(),
                stderr: String::new(),
                exit: EXIT_OK,
            };
        }
        Err(e) => {
            let report = Failure::usage(e.render().to_string().trim_end()).into_report(Vec::new());
            return Outcome {
                stdout: render(&report, false),
                stderr: String::new(),
                exit: EXIT_USAGE,
            };
        }
    };
    let (report, exit) = run(&cli);
    let stderr = if cli.pretty {
        match (&cli.command, &report.status) {
            (Command::Golden, Status::Ok) => golden::table(&report.payload),
            _ => report::human_table(&report.payload),
        }
    } else {
        String::new()
    };
    Outcome {
        stdout: render(&report, cli.pretty),
        stderr,
        exit,
    }
}
