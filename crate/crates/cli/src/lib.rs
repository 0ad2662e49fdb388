//! Command implementations behind the `gln-dual` binary. Every command
//! produces a JSON document; identical inputs and seeds give byte-identical
//! output.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use gln_dual::arith::{twist_to_complex, ArithError};
use gln_dual::check::{run_check, CheckConfig, CheckError, CheckKind, CheckReport};
use gln_dual::params::{
    alpha, beta, infinitesimal_character, langlands_data, validate_param, CuspidalPoint,
    ExtendedPoint, ParamError, ParamSpec, SegmentParam,
};
use gln_dual::report::{catalog_report, CatalogReport};
use gln_dual::spectrum::SpectrumError;
use gln_dual::tempered::{homotopy, is_tempered, retract, stratum_of, TemperedError};
use gln_dual::{ComponentIndex, Execution, Inventory, Rational, WDParam};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("inventory {path}: {source}")]
    Inventory {
        path: PathBuf,
        source: SpectrumError,
    },
    #[error("parameter {path}: {message}")]
    ParamJson { path: PathBuf, message: String },
    #[error("parameter {path}: {source}")]
    Param { path: PathBuf, source: ParamError },
    #[error("n must be at least 1")]
    ZeroRank,
    #[error("--t is required for homotopy")]
    MissingT,
    #[error(transparent)]
    Tempered(#[from] TemperedError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("cannot serialize report: {0}")]
    Serialize(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "gln-dual",
    version,
    about = "Extended quotients, parameter maps and Hecke-block homology for GL(n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List inertial classes of rank n with their extended-quotient components and homology.
    Catalog {
        #[arg(long)]
        inventory: PathBuf,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate, retract or deform a Weil-Deligne parameter.
    Param {
        action: ParamAction,
        #[arg(long)]
        inventory: PathBuf,
        #[arg(long)]
        param: PathBuf,
        /// Rank to validate against; defaults to the parameter's own n.
        #[arg(long)]
        n: Option<u32>,
        /// Residue field cardinality, for numeric rendering of twists.
        #[arg(long)]
        q: Option<u64>,
        /// Homotopy time, an exact rational in [0, 1].
        #[arg(long)]
        t: Option<Rational>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a seeded randomized property suite.
    Check {
        check: CheckName,
        /// Fixed inventory; required for injectivity.
        #[arg(long)]
        inventory: Option<PathBuf>,
        /// Largest rank sampled.
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameters per run, or pairs per component for injectivity.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamAction {
    Eval,
    Retract,
    Homotopy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Diagram,
    Injectivity,
    Retraction,
}

impl From<CheckName> for CheckKind {
    fn from(name: CheckName) -> Self {
        match name {
            CheckName::Diagram => CheckKind::Diagram,
            CheckName::Injectivity => CheckKind::Injectivity,
            CheckName::Retraction => CheckKind::Retraction,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_inventory(path: &Path) -> Result<Inventory, CliError> {
    Inventory::from_json(&read(path)?).map_err(|source| CliError::Inventory {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_param(path: &Path) -> Result<ParamSpec, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::ParamJson {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

pub fn cmd_catalog(inv: &Inventory, n: u32) -> Result<CatalogReport, CliError> {
    if n == 0 {
        return Err(CliError::ZeroRank);
    }
    Ok(catalog_report(inv, n, Execution::default()))
}

#[derive(Debug, Serialize)]
pub struct NumericTwist {
    pub label: String,
    pub value: (f64, f64),
}

#[derive(Debug, Serialize)]
pub struct NumericView {
    pub q: u64,
    pub segments: Vec<NumericTwist>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinitesimal_character: Option<Vec<NumericTwist>>,
}

fn numeric_segments(segments: &[SegmentParam], q: u64) -> Result<Vec<NumericTwist>, CliError> {
    segments
        .iter()
        .map(|s| {
            Ok(NumericTwist {
                label: s.label.clone(),
                value: twist_to_complex(s.twist, q)?,
            })
        })
        .collect()
}

fn numeric_support(point: &CuspidalPoint, q: u64) -> Result<Vec<NumericTwist>, CliError> {
    point
        .support
        .iter()
        .map(|(label, z)| {
            Ok(NumericTwist {
                label: label.clone(),
                value: twist_to_complex(*z, q)?,
            })
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct EvalReport {
    pub param: WDParam,
    pub alpha: ExtendedPoint,
    pub beta_alpha: CuspidalPoint,
    pub infinitesimal_character: CuspidalPoint,
    pub diagram_commutes: bool,
    pub langlands_data: Vec<SegmentParam>,
    pub stratum: ComponentIndex,
    pub tempered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericView>,
}

#[derive(Debug, Serialize)]
pub struct TransformReport {
    pub action: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Rational>,
    pub input: WDParam,
    pub param: WDParam,
    pub tempered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericView>,
}

pub fn eval_report(p: &WDParam, q: Option<u64>) -> Result<EvalReport, CliError> {
    let extended = alpha(p);
    let beta_alpha = beta(&extended);
    let inf_ch = infinitesimal_character(p);
    let numeric = q
        .map(|q| -> Result<NumericView, CliError> {
            Ok(NumericView {
                q,
                segments: numeric_segments(p.segments(), q)?,
                infinitesimal_character: Some(numeric_support(&inf_ch, q)?),
            })
        })
        .transpose()?;
    Ok(EvalReport {
        param: p.clone(),
        diagram_commutes: beta_alpha == inf_ch,
        alpha: extended,
        beta_alpha,
        infinitesimal_character: inf_ch,
        langlands_data: langlands_data(p),
        stratum: stratum_of(p),
        tempered: is_tempered(p),
        numeric,
    })
}

pub fn transform_report(
    p: &WDParam,
    action: ParamAction,
    t: Option<Rational>,
    q: Option<u64>,
) -> Result<TransformReport, CliError> {
    let (name, moved, t) = match action {
        ParamAction::Retract => ("retract", retract(p), None),
        ParamAction::Homotopy => {
            let t = t.ok_or(CliError::MissingT)?;
            ("homotopy", homotopy(p, t)?, Some(t))
        }
        ParamAction::Eval => unreachable!("eval has its own report"),
    };
    let numeric = q
        .map(|q| -> Result<NumericView, CliError> {
            Ok(NumericView {
                q,
                segments: numeric_segments(moved.segments(), q)?,
                infinitesimal_character: None,
            })
        })
        .transpose()?;
    Ok(TransformReport {
        action: name,
        t,
        input: p.clone(),
        tempered: is_tempered(&moved),
        param: moved,
        numeric,
    })
}

/// Validates `spec` and builds the report for `action` as JSON.
pub fn cmd_param(
    inv: &Inventory,
    spec: &ParamSpec,
    spec_path: &Path,
    action: ParamAction,
    n: Option<u32>,
    q: Option<u64>,
    t: Option<Rational>,
) -> Result<Value, CliError> {
    let n = n.unwrap_or(spec.n);
    let p = validate_param(spec, inv, n).map_err(|source| CliError::Param {
        path: spec_path.to_path_buf(),
        source,
    })?;
    if let Some(q) = q {
        // reject a bad q up front, even when nothing gets rendered
        twist_to_complex(Default::default(), q)?;
    }
    let value = match action {
        ParamAction::Eval => serde_json::to_value(eval_report(&p, q)?)?,
        _ => serde_json::to_value(transform_report(&p, action, t, q)?)?,
    };
    Ok(value)
}

pub fn check_exit_code(report: &CheckReport) -> i32 {
    if report.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn cmd_check(kind: CheckKind, config: &CheckConfig) -> Result<CheckReport, CliError> {
    Ok(run_check(kind, config, Execution::default())?)
}

/// Runs a parsed command, returning the exit code and the rendered report
/// (if any). The caller decides where the report goes.
pub fn execute(command: &Command) -> Result<(i32, String), CliError> {
    match command {
        Command::Catalog { inventory, n, .. } => {
            let inv = load_inventory(inventory)?;
            Ok((EXIT_OK, render(&cmd_catalog(&inv, *n)?)?))
        }
        Command::Param {
            action,
            inventory,
            param,
            n,
            q,
            t,
            ..
        } => {
            let inv = load_inventory(inventory)?;
            let spec = load_param(param)?;
            let value = cmd_param(&inv, &spec, param, *action, *n, *q, *t)?;
            Ok((EXIT_OK, render(&value)?))
        }
        Command::Check {
            check,
            inventory,
            n,
            seed,
            samples,
            ..
        } => {
            let inventory = inventory.as_deref().map(load_inventory).transpose()?;
            let config = CheckConfig {
                seed: *seed,
                samples: *samples,
                max_n: *n,
                inventory,
                ..CheckConfig::default()
            };
            let report = cmd_check((*check).into(), &config)?;
            Ok((check_exit_code(&report), render(&report)?))
        }
    }
}

impl Command {
    pub fn json_out(&self) -> Option<&Path> {
        match self {
            Command::Catalog { out, .. }
            | Command::Param { out, .. }
            | Command::Check { out, .. } => out.json_out.as_deref(),
        }
    }
}
