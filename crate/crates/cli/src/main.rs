//! `laqc`: correlation reports, oracle cross-checks, channels and sweeps for
//! two-qubit states.

mod source;

use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use laqc_core::closed_form::{classical_correlations_x, laqc_x_with_branch, OptimalBasisBranch};
use laqc_core::io::StateSpec;
use laqc_core::sweep::{Preset, Quantity, SweepAxis, SweepDomain, SweepSpec, SweepTable};
use laqc_core::{
    amplitude_damping_kraus, apply_channel, depolarizing_kraus, full_report_with, laqc_numeric, phase_damping_kraus,
    CorrelationReport, DensityMatrix4, Execution, FamilyKind, SearchConfig, Source,
};
use source::{load_any, parse_family, LoadedState, StateArgs, WernerAdArgs};

#[derive(Debug)]
pub enum CliError {
    /// Invalid input or a failed invariant; exit code 2.
    Validation(String),
    /// Unreadable input or unwritable output; exit code 3.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<laqc_core::Error> for CliError {
    fn from(e: laqc_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "laqc", version, about = "Quantum correlation quantifiers for two-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every quantifier for one state
    Compute(ComputeArgs),
    /// Evaluate quantifiers over a parameter grid and emit CSV
    Sweep(SweepArgs),
    /// Compare the closed forms with the brute-force search
    Oracle(OracleArgs),
    /// Apply a local channel to both qubits of a state
    Channel(ChannelArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Coarse grid points per angle (the phase search uses twice as many)
    #[arg(long, default_value_t = 24)]
    grid: usize,
    /// Maximum refinement rounds
    #[arg(long, default_value_t = 40)]
    rounds: usize,
    /// Target accuracy of the search
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, CliError> {
        let cfg = SearchConfig {
            grid: self.grid,
            complementary_grid: 2 * self.grid,
            rounds: self.rounds,
            tol: self.tol,
            ..SearchConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    werner_ad: WernerAdArgs,
    /// Fall back to the numerical search for states without closed forms
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// One of fig1..fig5
    #[arg(long, value_parser = parse_preset, conflicts_with_all = ["family", "werner_ad"])]
    preset: Option<Preset>,
    /// Sweep this family's parameter over [0, 1]
    #[arg(long, value_parser = parse_family)]
    family: Option<FamilyKind>,
    /// Sweep the amplitude-damped Werner state over (z, p) in [0, 1]^2
    #[arg(long, conflicts_with = "family")]
    werner_ad: bool,
    /// Comma-separated subset of classical,laqc,discord,concurrence,S,Sprime,gplus,g1
    #[arg(long, value_delimiter = ',', value_parser = parse_quantity, default_value = "laqc,discord,concurrence")]
    quantities: Vec<Quantity>,
    /// Points per axis
    #[arg(long, default_value_t = 101)]
    points: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Skip the preset's inequality checks
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    werner_ad: WernerAdArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ChannelKind {
    AmplitudeDamping,
    Depolarizing,
    PhaseDamping,
}

#[derive(Args, Debug)]
struct ChannelArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, value_enum)]
    channel: ChannelKind,
    /// Channel strength in [0, 1], applied to both qubits
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the evolved state as JSON (readable with --matrix)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: laqc_core::Error| e.to_string())
}

fn parse_quantity(s: &str) -> Result<Quantity, String> {
    s.parse().map_err(|e: laqc_core::Error| e.to_string())
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(content.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io(e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn num(v: f64) -> String {
    format!("{v:.9}")
}

fn branch_text(b: &OptimalBasisBranch) -> String {
    format!("{:?} (theta={:.6}, phi={:.6}){}", b.branch, b.theta, b.phi, if b.tied { ", tied" } else { "" })
}

fn report_text(label: &str, r: &CorrelationReport) -> String {
    let mut s = String::new();
    let class = r.symmetry_class.map_or("not an X state".to_string(), |c| c.to_string());
    let source = match r.source {
        Source::ClosedForm => "closed form",
        Source::Oracle => "numerical search",
    };
    let _ = writeln!(s, "state               {label}");
    let _ = writeln!(s, "symmetry class      {class}");
    let _ = writeln!(s, "source              {source}");
    let _ = writeln!(s, "classical           {}", num(r.classical));
    let _ = writeln!(s, "laqc                {}", num(r.laqc));
    let _ = writeln!(s, "discord             {}", num(r.discord));
    let _ = writeln!(s, "concurrence         {}", num(r.concurrence));
    let _ = writeln!(s, "mutual information  {}", num(r.mutual_information));
    if let Some(b) = &r.branch {
        let _ = writeln!(s, "classical branch    {}", branch_text(b));
    }
    if let Some(b) = &r.laqc_branch {
        let _ = writeln!(s, "laqc branch         {}", branch_text(b));
    }
    s
}

const REPORT_COLUMNS: &str = "classical,laqc,discord,concurrence,mutual_information";

fn report_csv_row(r: &CorrelationReport) -> String {
    [r.classical, r.laqc, r.discord, r.concurrence, r.mutual_information]
        .map(laqc_core::sweep::format_sig9)
        .join(",")
}

fn compute(args: &ComputeArgs) -> Result<(), CliError> {
    let LoadedState { rho, label } = load_any(&args.state, &args.werner_ad)?;
    let closed = rho.x_params().is_some_and(|x| x.symmetry_class().has_closed_form());
    if !closed && !args.oracle {
        let class = rho.x_params().map_or("non-X".to_string(), |x| x.symmetry_class().to_string());
        return Err(CliError::Validation(format!(
            "no closed form for a {class} state; rerun with --oracle to use the numerical search"
        )));
    }
    let report = full_report_with(&rho, &args.search.config()?)?;
    let content = match args.format {
        Format::Text => report_text(&label, &report),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => format!("{REPORT_COLUMNS}\n{}\n", report_csv_row(&report)),
    };
    emit(args.out.as_deref(), &content)
}

fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let spec = match (args.preset, args.family, args.werner_ad) {
        (Some(preset), _, _) => preset.spec(),
        (None, Some(family), _) => SweepSpec {
            domain: SweepDomain::Family { family, param: SweepAxis::unit(args.points) },
            quantities: args.quantities.clone(),
        },
        (None, None, true) => SweepSpec {
            domain: SweepDomain::WernerAd { z: SweepAxis::unit(args.points), p: SweepAxis::unit(args.points) },
            quantities: args.quantities.clone(),
        },
        (None, None, false) => {
            return Err(CliError::Validation("sweep needs --preset, --family or --werner-ad".into()))
        }
    };
    let table: SweepTable = spec.run(Execution::default())?;
    if let (Some(preset), false) = (args.preset, args.no_verify) {
        preset.verify(&table)?;
    }
    let content = match args.format {
        Format::Json => serde_json::to_string(&table).expect("table serializes") + "\n",
        Format::Csv | Format::Text => table.to_csv(),
    };
    emit(args.out.as_deref(), &content)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn oracle(args: &OracleArgs) -> Result<(), CliError> {
    let LoadedState { rho, label } = load_any(&args.state, &args.werner_ad)?;
    let cfg = args.search.config()?;
    let numeric = laqc_numeric(&rho, &cfg)?;
    let x = rho.x_params();
    let closed = match x.filter(|x| x.symmetry_class().has_closed_form()) {
        Some(x) => Some((classical_correlations_x(&x)?, laqc_x_with_branch(&x)?)),
        None => None,
    };
    let diff = |c: f64, o: f64| (c - o).abs();
    let content = match args.format {
        Format::Json => {
            let closed_json = closed.map(|((c, cb), (l, lb))| {
                json!({
                    "classical": c, "laqc": l, "classical_branch": cb, "laqc_branch": lb,
                    "classical_difference": diff(c, numeric.classical), "laqc_difference": diff(l, numeric.laqc),
                })
            });
            let value = json!({
                "state": label,
                "symmetry_class": x.map(|x| x.symmetry_class()),
                "closed_form": closed_json,
                "oracle": numeric,
            });
            serde_json::to_string_pretty(&value).expect("serializes") + "\n"
        }
        Format::Csv => {
            let cell = |v: Option<f64>| v.map(laqc_core::sweep::format_sig9).unwrap_or_default();
            let (cc, cl) = closed.map_or((None, None), |((c, _), (l, _))| (Some(c), Some(l)));
            format!(
                "closed_classical,oracle_classical,closed_laqc,oracle_laqc,classical_degenerate,laqc_degenerate\n{},{},{},{},{},{}\n",
                cell(cc),
                cell(Some(numeric.classical)),
                cell(cl),
                cell(Some(numeric.laqc)),
                numeric.classical_degenerate,
                numeric.laqc_degenerate
            )
        }
        Format::Text => {
            let mut s = String::new();
            let class = x.map_or("not an X state".to_string(), |x| x.symmetry_class().to_string());
            let _ = writeln!(s, "state               {label}");
            let _ = writeln!(s, "symmetry class      {class}");
            let _ = writeln!(s, "                    {:<14}{:<14}|difference|", "closed form", "oracle");
            let rows = [
                ("classical", closed.map(|((c, _), _)| c), numeric.classical),
                ("laqc", closed.map(|(_, (l, _))| l), numeric.laqc),
            ];
            for (name, c, o) in rows {
                let c_text = c.map_or("-".to_string(), num);
                let d_text = c.map_or("-".to_string(), |c| format!("{:.3e}", diff(c, o)));
                let _ = writeln!(s, "{name:<20}{c_text:<14}{:<14}{d_text}", num(o));
            }
            let b = numeric.basis;
            let _ = writeln!(
                s,
                "optimal basis       theta1={:.6} theta2={:.6} phi1={:.6} phi2={:.6} degenerate={}",
                b.theta1,
                b.theta2,
                b.phi1,
                b.phi2,
                yes_no(numeric.classical_degenerate)
            );
            let _ = writeln!(
                s,
                "optimal phases      Phi1={:.6} Phi2={:.6} degenerate={}",
                numeric.phases.phase1,
                numeric.phases.phase2,
                yes_no(numeric.laqc_degenerate)
            );
            let _ = writeln!(s, "relative entropy    {}", num(numeric.relative_entropy));
            if let Some(((_, cb), (_, lb))) = closed {
                let _ = writeln!(s, "classical branch    {}", branch_text(&cb));
                let _ = writeln!(s, "laqc branch         {}", branch_text(&lb));
            }
            let _ = writeln!(s, "evaluations         {}", numeric.evaluations);
            s
        }
    };
    emit(args.out.as_deref(), &content)
}

fn channel(args: &ChannelArgs) -> Result<(), CliError> {
    let LoadedState { rho, label } = args.state.load()?;
    let set = match args.channel {
        ChannelKind::AmplitudeDamping => amplitude_damping_kraus(args.p)?,
        ChannelKind::Depolarizing => depolarizing_kraus(args.p)?,
        ChannelKind::PhaseDamping => phase_damping_kraus(args.p)?,
    };
    let evolved: DensityMatrix4 = apply_channel(&rho, &set, &set)?;
    let report = full_report_with(&evolved, &args.search.config()?)?;
    if let Some(path) = &args.out {
        let state = serde_json::to_string_pretty(&StateSpec::from_density(&evolved)).expect("serializes") + "\n";
        emit(Some(path), &state)?;
    }
    let label = format!("{label} after {:?}(p={}) on both qubits", args.channel, args.p);
    let content = match args.format {
        Format::Json => {
            let value = json!({
                "state": label,
                "x_params": evolved.x_params(),
                "matrix": StateSpec::from_density(&evolved),
                "report": report,
            });
            serde_json::to_string_pretty(&value).expect("serializes") + "\n"
        }
        Format::Csv => format!("{REPORT_COLUMNS}\n{}\n", report_csv_row(&report)),
        Format::Text => {
            let mut s = String::new();
            if let Some(x) = evolved.x_params() {
                let _ = writeln!(
                    s,
                    "bloch               x3={:.9} y3={:.9} T1={:.9} T2={:.9} T3={:.9}",
                    x.x3, x.y3, x.t1, x.t2, x.t3
                );
            }
            s + &report_text(&label, &report)
        }
    };
    // stdout still receives the report when the state went to --out
    emit(None, &content)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Sweep(a) => sweep(a),
        Command::Oracle(a) => oracle(a),
        Command::Channel(a) => channel(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
