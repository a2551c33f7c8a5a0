//! Command-line frontend: point evaluation, sweeps, sudden-death search and
//! figure surfaces.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 usage error, 3 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::correlations::{
    concurrence_dephasing_werner, discord, discord_bell_diagonal, published_discord_dephasing_werner,
    published_concurrence_dephasing_werner,
};
use crate::error::Error;
use crate::experiments::{
    esd_gamma, evolve, sweep, ChannelConfig, NoiseKind, StateFamily, SweepGrid, SweepRow, DEFAULT_STEPS,
};
use crate::states::to_bloch;

pub const CSV_HEADER: &str = "alpha,gamma,concurrence,discord,mutual_info,classical_corr,theta_opt,phi_opt";

#[derive(Debug, Parser)]
#[command(name = "qdiscord", version, about = "Concurrence and quantum discord of two qubits under local Markovian noise")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate all correlation measures at one (α, γ) point and print JSON.
    Point(PointArgs),
    /// Evaluate a uniform (α, γ) grid and write CSV or JSON.
    Sweep(SweepArgs),
    /// Locate the sudden-death γ for one α.
    Esd(EsdArgs),
    /// Write concurrence and discord surfaces for one of the reference figures.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelArg {
    Dephasing,
    Gad,
    Depolarizing,
    #[value(name = "dephasing+gad")]
    DephasingGad,
}

impl From<ChannelArg> for NoiseKind {
    fn from(c: ChannelArg) -> Self {
        match c {
            ChannelArg::Dephasing => NoiseKind::Dephasing,
            ChannelArg::Gad => NoiseKind::Gad,
            ChannelArg::Depolarizing => NoiseKind::Depolarizing,
            ChannelArg::DephasingGad => NoiseKind::DephasingPlusGad,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    Werner,
    Phi,
}

impl From<StateArg> for StateFamily {
    fn from(s: StateArg) -> Self {
        match s {
            StateArg::Werner => StateFamily::Werner,
            StateArg::Phi => StateFamily::Phi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    #[arg(long, value_enum)]
    pub channel: ChannelArg,
    #[arg(long, value_enum)]
    pub state: StateArg,
    /// GAD asymptotic ground-state population (1 = zero temperature).
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
}

impl ConfigArgs {
    fn config(&self) -> Result<ChannelConfig, CliError> {
        ChannelConfig::new(self.channel.into(), self.state.into(), self.q).map_err(CliError::from)
    }
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    pub alpha_steps: usize,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    pub gamma_steps: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EsdArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// One of 1, 2a, 2b, 2c, 2d, 3, 4.
    #[arg(long)]
    pub id: String,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    pub steps: usize,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Numeric(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numeric(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Numeric(e) => write!(f, "numerical error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ParamOutOfRange { .. } | Error::NegativeInput { .. } => CliError::Usage(e.to_string()),
            other => CliError::Numeric(other),
        }
    }
}

fn io_err(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// Round to 15 significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal that round-trips the 15-significant-digit value.
pub fn format_number(x: f64) -> String {
    let r = round_sig(x);
    let a = r.abs();
    if r == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// One emitted grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub alpha: f64,
    pub gamma: f64,
    pub concurrence: f64,
    pub discord: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub theta_opt: f64,
    pub phi_opt: f64,
}

impl OutputRecord {
    pub fn from_row(row: &SweepRow) -> Self {
        let r = &row.report;
        OutputRecord {
            alpha: round_sig(row.alpha),
            gamma: round_sig(row.gamma),
            concurrence: round_sig(r.concurrence),
            discord: round_sig(r.discord),
            mutual_info: round_sig(r.mutual_info),
            classical_corr: round_sig(r.classical_corr),
            theta_opt: round_sig(r.argmax_basis.theta),
            phi_opt: round_sig(r.argmax_basis.phi),
        }
    }

    pub fn fields(&self) -> [f64; 8] {
        [
            self.alpha,
            self.gamma,
            self.concurrence,
            self.discord,
            self.mutual_info,
            self.classical_corr,
            self.theta_opt,
            self.phi_opt,
        ]
    }

    pub fn csv_line(&self) -> String {
        self.fields().iter().map(|&x| format_number(x)).collect::<Vec<_>>().join(",")
    }
}

pub fn records(grid: &SweepGrid) -> Vec<OutputRecord> {
    grid.rows.iter().map(OutputRecord::from_row).collect()
}

pub fn to_csv(records: &[OutputRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 120);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

pub fn to_json(records: &[OutputRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

/// Closed forms printed alongside the numerical values for dephased Werner
/// states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DephasingWernerReference {
    pub channel_concurrence: f64,
    pub published_concurrence: f64,
    pub bell_diagonal_discord: f64,
    /// `None` outside the published formula's domain.
    pub published_discord: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointOutput {
    #[serde(flatten)]
    pub record: OutputRecord,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference: Option<DephasingWernerReference>,
}

fn check_unit_arg(name: &str, value: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--{name} must lie in [0, 1], got {value}")))
    }
}

pub fn cmd_point(args: &PointArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let config = args.config.config()?;
    check_unit_arg("alpha", args.alpha)?;
    check_unit_arg("gamma", args.gamma)?;
    let rho = evolve(&config, args.alpha, args.gamma)?;
    let report = discord(&rho)?;
    let record = OutputRecord::from_row(&SweepRow { alpha: args.alpha, gamma: args.gamma, report });

    let reference = if config.kind == NoiseKind::Dephasing && config.state_family == StateFamily::Werner {
        Some(DephasingWernerReference {
            channel_concurrence: round_sig(concurrence_dephasing_werner(args.alpha, args.gamma)?),
            published_concurrence: round_sig(published_concurrence_dephasing_werner(args.alpha, args.gamma)?),
            bell_diagonal_discord: round_sig(discord_bell_diagonal(&to_bloch(&rho)?)?),
            published_discord: published_discord_dephasing_werner(args.alpha, args.gamma).ok().map(round_sig),
        })
    } else {
        None
    };
    let json = serde_json::to_string_pretty(&PointOutput { record, reference }).expect("serialize point");
    writeln!(out, "{json}").map_err(|e| CliError::Io(e.to_string()))
}

fn check_steps(name: &str, n: usize) -> Result<(), CliError> {
    if n < 2 {
        Err(CliError::Usage(format!("--{name} must be at least 2, got {n}")))
    } else {
        Ok(())
    }
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let config = args.config.config()?;
    check_steps("alpha-steps", args.alpha_steps)?;
    check_steps("gamma-steps", args.gamma_steps)?;
    let grid = sweep(&config, args.alpha_steps, args.gamma_steps)?;
    let recs = records(&grid);
    let body = match args.format {
        Format::Csv => to_csv(&recs),
        Format::Json => to_json(&recs),
    };
    fs::write(&args.out, body).map_err(|e| io_err(&args.out, e))
}

pub fn cmd_esd(args: &EsdArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let config = args.config.config()?;
    check_unit_arg("alpha", args.alpha)?;
    if !(args.tol > 0.0 && args.tol < 1.0) {
        return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {}", args.tol)));
    }
    let esd = esd_gamma(&config, args.alpha, args.tol)?;
    let text = match esd.gamma_esd {
        Some(g) => format_number(g),
        None => "none".to_string(),
    };
    writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))
}

/// Configuration behind each figure id.
pub fn figure_config(id: &str) -> Option<ChannelConfig> {
    let (kind, family, q) = match id {
        "1" => (NoiseKind::Dephasing, StateFamily::Werner, 1.0),
        "2a" | "2b" => (NoiseKind::Gad, StateFamily::Phi, 1.0),
        "2c" | "2d" => (NoiseKind::Gad, StateFamily::Phi, 2.0 / 3.0),
        "3" => (NoiseKind::Depolarizing, StateFamily::Phi, 1.0),
        "4" => (NoiseKind::DephasingPlusGad, StateFamily::Phi, 1.0),
        _ => return None,
    };
    Some(ChannelConfig::new(kind, family, q).expect("static figure configuration"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureMeta {
    pub id: String,
    pub config: ChannelConfig,
    pub steps: usize,
    pub rows: usize,
    pub files: Vec<String>,
}

fn surface_csv(grid: &SweepGrid, column: &str, pick: impl Fn(&SweepRow) -> f64) -> String {
    let mut out = format!("alpha,gamma,{column}\n");
    for row in &grid.rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_number(row.alpha),
            format_number(row.gamma),
            format_number(pick(row))
        );
    }
    out
}

pub fn cmd_figure(args: &FigureArgs) -> Result<(), CliError> {
    let config = figure_config(&args.id).ok_or_else(|| {
        CliError::Usage(format!("unknown figure id {:?}; expected one of 1, 2a, 2b, 2c, 2d, 3, 4", args.id))
    })?;
    check_steps("steps", args.steps)?;
    fs::create_dir_all(&args.out).map_err(|e| io_err(&args.out, e))?;

    let grid = sweep(&config, args.steps, args.steps)?;
    let conc_name = format!("{}_concurrence.csv", args.id);
    let disc_name = format!("{}_discord.csv", args.id);
    let meta_name = format!("{}_meta.json", args.id);

    let write = |name: &str, body: String| {
        let path = args.out.join(name);
        fs::write(&path, body).map_err(|e| io_err(&path, e))
    };
    write(&conc_name, surface_csv(&grid, "concurrence", |r| r.report.concurrence))?;
    write(&disc_name, surface_csv(&grid, "discord", |r| r.report.discord))?;
    let meta = FigureMeta {
        id: args.id.clone(),
        config,
        steps: args.steps,
        rows: grid.rows.len(),
        files: vec![conc_name, disc_name],
    };
    let mut json = serde_json::to_string_pretty(&meta).expect("serialize meta");
    json.push('\n');
    write(&meta_name, json)
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Point(a) => cmd_point(a, stdout),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Esd(a) => cmd_esd(a, stdout),
        Command::Figure(a) => cmd_figure(a),
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333333");
        assert_eq!(format_number(2.5e-7), "2.5e-7");
        assert_eq!(format_number(std::f64::consts::PI), "3.14159265358979");
    }

    #[test]
    fn format_is_idempotent() {
        for x in [1.0 / 7.0, 1e-9 / 3.0, 0.123456789012345678, std::f64::consts::TAU, 4.2e-12] {
            let s = format_number(x);
            assert_eq!(format_number(s.parse().unwrap()), s);
        }
    }

    #[test]
    fn figure_ids() {
        for id in ["1", "2a", "2b", "2c", "2d", "3", "4"] {
            assert!(figure_config(id).is_some());
        }
        assert!(figure_config("5").is_none());
        assert_eq!(figure_config("2c").unwrap().q, 2.0 / 3.0);
        assert_eq!(figure_config("4").unwrap().kind, NoiseKind::DephasingPlusGad);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(CliError::from(Error::ParamOutOfRange { name: "q", value: 2.0 }).exit_code(), 2);
        assert_eq!(CliError::Io("x".into()).exit_code(), 3);
        assert_eq!(CliError::from(Error::OptimizerDidNotConverge(500)).exit_code(), 1);
    }
}
