//! Argument and config-file handling.
//!
//! Precedence is fixed: command-line flags override config-file values,
//! which override the built-in defaults. The subcommand and `--suites`
//! are two spellings of the same choice and may not be combined. Every
//! rejected invocation surfaces as a [`UsageError`] with a one-line
//! message; the process maps those to exit code 2.

use std::fmt;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;

pub const DEFAULT_MU_HEIGHT: i64 = 4;
pub const DEFAULT_CHAIN_MAX: usize = 12;

/// Where the Cartan matrix comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanSource {
    Symbol(String),
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl Format {
    fn parse(text: &str) -> Result<Format, UsageError> {
        match text {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(UsageError::new(format!(
                "unknown format {other:?}: expected json, csv, or table"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteKind {
    Fibers,
    Delta0,
    Tensor,
    Plucker,
    Selftest,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 5] = [
        SuiteKind::Fibers,
        SuiteKind::Delta0,
        SuiteKind::Tensor,
        SuiteKind::Plucker,
        SuiteKind::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Fibers => "fibers",
            SuiteKind::Delta0 => "delta0",
            SuiteKind::Tensor => "tensor",
            SuiteKind::Plucker => "plucker",
            SuiteKind::Selftest => "selftest",
        }
    }

    /// Suites that run stabilization chains and therefore need a usable
    /// detection window.
    pub fn needs_chain(self) -> bool {
        matches!(self, SuiteKind::Fibers | SuiteKind::Plucker)
    }

    fn parse(text: &str) -> Result<SuiteKind, UsageError> {
        SuiteKind::ALL
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| {
                UsageError::new(format!(
                    "unknown suite {text:?}: expected names from fibers, delta0, tensor, plucker, selftest"
                ))
            })
    }
}

/// A rejected invocation; the message is a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(String);

impl UsageError {
    pub fn new(message: impl Into<String>) -> Self {
        UsageError(message.into())
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// The fully resolved run request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub source: CartanSource,
    pub mu_height_bound: i64,
    pub chain_max: usize,
    /// Fundamental coordinates of the chain generator; `None` means
    /// all-ones at the datum's rank.
    pub chain_generator: Option<Vec<i64>>,
    /// Suites in canonical order, deduplicated; empty for the datum
    /// summary alone.
    pub suites: Vec<SuiteKind>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

#[derive(Parser, Debug)]
#[command(
    name = "fiber-cli",
    version,
    about = "Batch verification of stable fiber data over finite root systems"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Builtin Cartan type (A1-A8, B2-B4, C2-C4, D4, F4, G2).
    #[arg(long = "type", value_name = "SYMBOL", global = true)]
    type_symbol: Option<String>,

    /// JSON file holding a Cartan matrix as an array of integer rows.
    #[arg(long, value_name = "FILE", global = true)]
    cartan: Option<PathBuf>,

    /// Bound on height(-mu) for the fiber and filtration suites.
    #[arg(long = "mu-height", value_name = "N", global = true)]
    mu_height: Option<i64>,

    /// Last chain index; stabilization scans indices 0..=N.
    #[arg(long = "chain-max", value_name = "N", global = true)]
    chain_max: Option<usize>,

    /// Chain generator as comma-separated fundamental coordinates.
    #[arg(long = "chain-gen", value_name = "INTS", global = true)]
    chain_gen: Option<String>,

    /// Comma-separated suites (fibers,delta0,tensor,plucker,selftest).
    #[arg(long, value_name = "LIST", global = true)]
    suites: Option<String>,

    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,

    /// Output format: json, csv, or table.
    #[arg(long, value_name = "FORMAT", global = true)]
    format: Option<String>,

    /// JSON config file supplying defaults for the flags above.
    #[arg(long, value_name = "FILE", global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Print the datum summary only.
    Datum,
    /// Stable costalk and stalk values per mu, with closed-form targets.
    Fibers,
    /// Filtration polynomial positivity per mu.
    Delta0,
    /// Deep tensor decompositions against reindexed weight multiplicities.
    Tensor,
    /// Hom-space stabilization toward dual characters.
    Plucker,
    /// Fixed cross-validation battery.
    Selftest,
}

impl Command {
    fn suites(self) -> Vec<SuiteKind> {
        match self {
            Command::Datum => Vec::new(),
            Command::Fibers => vec![SuiteKind::Fibers],
            Command::Delta0 => vec![SuiteKind::Delta0],
            Command::Tensor => vec![SuiteKind::Tensor],
            Command::Plucker => vec![SuiteKind::Plucker],
            Command::Selftest => vec![SuiteKind::Selftest],
        }
    }
}

/// Optional JSON config file; keys mirror the long flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(rename = "type")]
    type_symbol: Option<String>,
    cartan: Option<PathBuf>,
    mu_height: Option<i64>,
    chain_max: Option<usize>,
    chain_gen: Option<Vec<i64>>,
    suites: Option<Vec<String>>,
    out: Option<PathBuf>,
    format: Option<String>,
}

/// Either a run request or help/version text to print with exit code 0.
#[derive(Debug)]
pub enum ParseOutcome {
    Run(RunConfig),
    Help(String),
}

pub fn parse_args<I, T>(argv: I) -> Result<ParseOutcome, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                return Ok(ParseOutcome::Help(err.to_string()));
            }
            _ => return Err(UsageError::new(one_line(&err))),
        },
    };
    resolve(cli).map(ParseOutcome::Run)
}

fn one_line(err: &clap::Error) -> String {
    err.to_string()
        .lines()
        .find(|line| !line.trim().is_empty())
        .unwrap_or("invalid arguments")
        .trim()
        .trim_start_matches("error:")
        .trim()
        .to_string()
}

fn resolve(cli: Cli) -> Result<RunConfig, UsageError> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                UsageError::new(format!("cannot read config file {}: {e}", path.display()))
            })?;
            serde_json::from_str::<FileConfig>(&text).map_err(|e| {
                UsageError::new(format!("malformed config file {}: {e}", path.display()))
            })?
        }
        None => FileConfig::default(),
    };

    let source = match (&cli.type_symbol, &cli.cartan) {
        (Some(_), Some(_)) => {
            return Err(UsageError::new("pass exactly one of --type and --cartan"));
        }
        (Some(symbol), None) => CartanSource::Symbol(symbol.clone()),
        (None, Some(path)) => CartanSource::File(path.clone()),
        (None, None) => match (&file.type_symbol, &file.cartan) {
            (Some(_), Some(_)) => {
                return Err(UsageError::new(
                    "config file sets both \"type\" and \"cartan\"; keep exactly one",
                ));
            }
            (Some(symbol), None) => CartanSource::Symbol(symbol.clone()),
            (None, Some(path)) => CartanSource::File(path.clone()),
            (None, None) => {
                return Err(UsageError::new(
                    "no Cartan input: pass --type SYMBOL or --cartan FILE",
                ));
            }
        },
    };

    let suites = resolve_suites(&cli, &file)?;

    let mu_height_bound = cli
        .mu_height
        .or(file.mu_height)
        .unwrap_or(DEFAULT_MU_HEIGHT);
    if mu_height_bound < 0 {
        return Err(UsageError::new("--mu-height must be nonnegative"));
    }

    let chain_max = cli
        .chain_max
        .or(file.chain_max)
        .unwrap_or(DEFAULT_CHAIN_MAX);
    if chain_max == 0 {
        return Err(UsageError::new("--chain-max must be positive"));
    }
    if chain_max < 3 && suites.iter().any(|s| s.needs_chain()) {
        return Err(UsageError::new(
            "--chain-max must be at least 3 when the fibers or plucker suite is selected",
        ));
    }

    let chain_generator = match (&cli.chain_gen, &file.chain_gen) {
        (Some(text), _) => Some(parse_generator(text)?),
        (None, Some(coords)) => Some(coords.clone()),
        (None, None) => None,
    };
    if let Some(coords) = &chain_generator {
        if coords.is_empty() {
            return Err(UsageError::new("--chain-gen needs at least one coordinate"));
        }
        if coords.iter().any(|&c| c < 1) {
            return Err(UsageError::new(
                "--chain-gen coordinates must all be positive",
            ));
        }
    }

    let format = match cli.format.as_deref().or(file.format.as_deref()) {
        Some(text) => Format::parse(text)?,
        None => Format::Table,
    };

    Ok(RunConfig {
        source,
        mu_height_bound,
        chain_max,
        chain_generator,
        suites,
        out: cli.out.or(file.out),
        format,
    })
}

fn resolve_suites(cli: &Cli, file: &FileConfig) -> Result<Vec<SuiteKind>, UsageError> {
    if cli.command.is_some() && cli.suites.is_some() {
        return Err(UsageError::new(
            "pass either a command or --suites, not both",
        ));
    }
    if let Some(command) = cli.command {
        return Ok(command.suites());
    }
    let listed: Vec<String> = if let Some(text) = &cli.suites {
        text.split(',').map(|s| s.trim().to_string()).collect()
    } else if let Some(names) = &file.suites {
        names.clone()
    } else {
        // No selection at all: run nothing and report the datum summary.
        return Ok(Vec::new());
    };
    let mut parsed = Vec::new();
    for name in &listed {
        if name.is_empty() {
            return Err(UsageError::new("--suites contains an empty name"));
        }
        parsed.push(SuiteKind::parse(name)?);
    }
    Ok(SuiteKind::ALL
        .into_iter()
        .filter(|s| parsed.contains(s))
        .collect())
}

fn parse_generator(text: &str) -> Result<Vec<i64>, UsageError> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| {
                UsageError::new(format!(
                    "--chain-gen expects comma-separated integers, got {part:?}"
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn run(args: &[&str]) -> Result<RunConfig, UsageError> {
        let mut argv = vec!["fiber-cli"];
        argv.extend_from_slice(args);
        match parse_args(argv)? {
            ParseOutcome::Run(config) => Ok(config),
            ParseOutcome::Help(_) => panic!("unexpected help output"),
        }
    }

    #[test]
    fn subcommand_with_flags_maps_directly() {
        let config = run(&[
            "fibers",
            "--type",
            "A2",
            "--mu-height",
            "4",
            "--chain-max",
            "10",
            "--format",
            "json",
        ])
        .unwrap();
        assert_eq!(config.source, CartanSource::Symbol("A2".into()));
        assert_eq!(config.mu_height_bound, 4);
        assert_eq!(config.chain_max, 10);
        assert_eq!(config.suites, vec![SuiteKind::Fibers]);
        assert_eq!(config.format, Format::Json);
        assert_eq!(config.chain_generator, None);
        assert_eq!(config.out, None);
    }

    #[test]
    fn suite_list_parses_and_normalizes() {
        let config = run(&["--type", "A1", "--suites", "plucker,fibers,fibers"]).unwrap();
        assert_eq!(config.suites, vec![SuiteKind::Fibers, SuiteKind::Plucker]);
    }

    #[test]
    fn datum_command_runs_no_suites() {
        let config = run(&["datum", "--type", "G2"]).unwrap();
        assert!(config.suites.is_empty());
        assert_eq!(config.format, Format::Table);
        assert_eq!(config.mu_height_bound, DEFAULT_MU_HEIGHT);
        assert_eq!(config.chain_max, DEFAULT_CHAIN_MAX);
    }

    #[test]
    fn absent_suite_selection_means_datum_summary_only() {
        let config = run(&["--type", "A1"]).unwrap();
        assert!(config.suites.is_empty());
    }

    #[test]
    fn missing_source_is_a_usage_error() {
        let err = run(&["selftest"]).unwrap_err();
        assert!(err.to_string().contains("--type"));
    }

    #[test]
    fn both_sources_are_rejected() {
        let err = run(&["datum", "--type", "A1", "--cartan", "m.json"]).unwrap_err();
        assert!(err.to_string().contains("exactly one"));
    }

    #[test]
    fn command_and_suites_conflict() {
        let err = run(&["fibers", "--type", "A1", "--suites", "delta0"]).unwrap_err();
        assert!(err.to_string().contains("not both"));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let err = run(&["--type", "A1", "--suites", "fibres"]).unwrap_err();
        assert!(err.to_string().contains("unknown suite"));
    }

    #[test]
    fn short_chain_rejected_only_for_stabilization_suites() {
        let err = run(&["fibers", "--type", "A1", "--chain-max", "2"]).unwrap_err();
        assert!(err.to_string().contains("at least 3"));
        let config = run(&["delta0", "--type", "A1", "--chain-max", "2"]).unwrap();
        assert_eq!(config.chain_max, 2);
    }

    #[test]
    fn generator_parsing_checks_shape() {
        let config = run(&["fibers", "--type", "C2", "--chain-gen", "2, 1"]).unwrap();
        assert_eq!(config.chain_generator, Some(vec![2, 1]));
        assert!(run(&["fibers", "--type", "C2", "--chain-gen", "2,x"]).is_err());
        assert!(run(&["fibers", "--type", "C2", "--chain-gen", "0,1"]).is_err());
    }

    #[test]
    fn unknown_flags_are_rejected() {
        let err = run(&["fibers", "--type", "A1", "--frobnicate"]).unwrap_err();
        assert!(err.to_string().contains("--frobnicate"));
    }

    #[test]
    fn config_file_fills_gaps_and_cli_wins() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        write!(
            file,
            r#"{{"type": "A2", "mu_height": 6, "format": "csv", "suites": ["delta0"]}}"#
        )
        .unwrap();
        let path = file.path().to_str().unwrap().to_string();

        let config = run(&["--config", &path]).unwrap();
        assert_eq!(config.source, CartanSource::Symbol("A2".into()));
        assert_eq!(config.mu_height_bound, 6);
        assert_eq!(config.format, Format::Csv);
        assert_eq!(config.suites, vec![SuiteKind::Delta0]);

        let config = run(&["--config", &path, "--type", "B2", "--format", "table"]).unwrap();
        assert_eq!(config.source, CartanSource::Symbol("B2".into()));
        assert_eq!(config.format, Format::Table);
        assert_eq!(config.mu_height_bound, 6);

        let config = run(&["fibers", "--config", &path]).unwrap();
        assert_eq!(config.suites, vec![SuiteKind::Fibers]);
    }

    #[test]
    fn config_file_with_unknown_keys_is_rejected() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        write!(file, r#"{{"type": "A2", "depth": 3}}"#).unwrap();
        let path = file.path().to_str().unwrap().to_string();
        let err = run(&["datum", "--config", &path]).unwrap_err();
        assert!(err.to_string().contains("malformed config file"));
    }

    #[test]
    fn help_is_not_an_error() {
        let outcome = parse_args(["fiber-cli", "--help"]).unwrap();
        assert!(matches!(outcome, ParseOutcome::Help(_)));
    }
}
