mod commands;

use clap::{Parser, ValueEnum};
use serde::Deserialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Basis,
    Hasse,
    Qchevalley,
    Semisimple,
    OddsympPresent,
    OddsympVerify,
    Bott,
    VerifyClaims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Markdown,
}

/// Exact (quantum) cohomology of horospherical varieties, odd symplectic
/// presentations and Bott cohomology of line bundles.
#[derive(Debug, Parser)]
#[command(name = "horosphere", version)]
struct Cli {
    command: Option<Command>,
    /// Variety family 1..=5.
    #[arg(long)]
    case: Option<u8>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Value of q as an integer or `a/b`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Claims file for `verify-claims`.
    #[arg(long)]
    claims: Option<PathBuf>,
    /// Reference table for `qchevalley`; any difference exits with status 1.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Root system for `bott`, e.g. G2 or B3.
    #[arg(long)]
    group: Option<String>,
    /// Weight for `bott` in fundamental-weight coordinates, e.g. `-2,1`.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    weight: Option<Vec<i64>>,
    /// Print the quantum Hasse diagram instead of the classical one.
    #[arg(long)]
    quantum: bool,
    /// JSON file whose fields override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Fully resolved run parameters.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<Command>,
    pub case: Option<u8>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub q: Option<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub claims: Option<PathBuf>,
    pub golden: Option<PathBuf>,
    pub group: Option<String>,
    pub weight: Option<Vec<i64>>,
    #[serde(default)]
    pub quantum: bool,
}

impl RunConfig {
    fn from_cli(c: Cli) -> Self {
        RunConfig {
            command: c.command,
            case: c.case,
            n: c.n,
            m: c.m,
            q: c.q,
            format: c.format,
            out: c.out,
            claims: c.claims,
            golden: c.golden,
            group: c.group,
            weight: c.weight,
            quantum: c.quantum,
        }
    }

    fn overlay(mut self, o: RunConfig) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if o.$f.is_some() { self.$f = o.$f; } )* };
        }
        take!(command, case, n, m, q, format, out, claims, golden, group, weight);
        self.quantum |= o.quantum;
        self
    }
}

/// Failure classes mapped to exit statuses 1 and 2.
pub enum Failure {
    Verification(String),
    Usage(String),
}

impl From<horosphere::Error> for Failure {
    fn from(e: horosphere::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_config(cli: Cli) -> Result<RunConfig, Failure> {
    let path = cli.config.clone();
    let base = RunConfig::from_cli(cli);
    match path {
        None => Ok(base),
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            let o: RunConfig =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Ok(base.overlay(o))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_config(cli).and_then(|cfg| commands::run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
