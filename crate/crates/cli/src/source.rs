use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use laqc_core::io::{BlochSpec, Entry, StateSpec};
use laqc_core::{make_family, werner_ad_closed_form, DensityMatrix4, FamilyKind};

use crate::CliError;

/// Where the input state comes from. Exactly one of `--family`, `--matrix`,
/// `--bloch` or `--z/--p` must be given.
#[derive(Args, Debug, Clone)]
pub struct StateArgs {
    /// Named family: werner, psi-minus-mix, ara-mix or verstraete-mix
    #[arg(long, value_parser = parse_family)]
    pub family: Option<FamilyKind>,

    /// Family parameter (z for werner, F otherwise)
    #[arg(long, requires = "family")]
    pub param: Option<f64>,

    /// JSON file holding a 4x4 matrix of {"re", "im"} entries
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "bloch"])]
    pub matrix: Option<PathBuf>,

    /// JSON file holding {"x3", "y3", "T1", "T2", "T3"}
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "matrix"])]
    pub bloch: Option<PathBuf>,
}

/// `--z/--p` select the amplitude-damped Werner state.
#[derive(Args, Debug, Clone)]
pub struct WernerAdArgs {
    /// Werner mixing parameter of the amplitude-damped Werner state
    #[arg(long, requires = "p", conflicts_with_all = ["family", "matrix", "bloch"])]
    pub z: Option<f64>,

    /// Damping strength of the amplitude-damped Werner state
    #[arg(long, requires = "z")]
    pub p: Option<f64>,
}

pub fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse::<FamilyKind>().map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn parse_spec(text: &str, bare: impl FnOnce(&str) -> Option<StateSpec>) -> Result<StateSpec, CliError> {
    match StateSpec::parse(text) {
        Ok(spec) => Ok(spec),
        Err(err) => bare(text).ok_or_else(|| CliError::Validation(err.to_string())),
    }
}

pub struct LoadedState {
    pub rho: DensityMatrix4,
    pub label: String,
}

impl StateArgs {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.matrix.is_some() || self.bloch.is_some()
    }

    pub fn load(&self) -> Result<LoadedState, CliError> {
        if let Some(kind) = self.family {
            let param = self.param.ok_or_else(|| CliError::Validation("--family requires --param".into()))?;
            let rho = make_family(kind.with(param))?;
            return Ok(LoadedState { rho, label: format!("{kind}({}={param})", kind.parameter_name()) });
        }
        if let Some(path) = &self.matrix {
            // a bare 4x4 array is accepted as well as {"matrix": ...}
            let spec = parse_spec(&read(path)?, |t| serde_json::from_str::<Vec<Vec<Entry>>>(t).ok().map(StateSpec::Matrix))?;
            return Ok(LoadedState { rho: spec.to_density()?, label: path.display().to_string() });
        }
        if let Some(path) = &self.bloch {
            let spec = parse_spec(&read(path)?, |t| serde_json::from_str::<BlochSpec>(t).ok().map(StateSpec::Bloch))?;
            return Ok(LoadedState { rho: spec.to_density()?, label: path.display().to_string() });
        }
        Err(CliError::Validation("no state given: use --family/--param, --matrix, --bloch or --z/--p".into()))
    }
}

impl WernerAdArgs {
    pub fn load(&self) -> Result<Option<LoadedState>, CliError> {
        match (self.z, self.p) {
            (Some(z), Some(p)) => {
                let rho = werner_ad_closed_form(z, p)?.density()?;
                Ok(Some(LoadedState { rho, label: format!("werner-ad(z={z}, p={p})") }))
            }
            _ => Ok(None),
        }
    }
}

pub fn load_any(state: &StateArgs, werner_ad: &WernerAdArgs) -> Result<LoadedState, CliError> {
    match werner_ad.load()? {
        Some(s) if !state.is_given() => Ok(s),
        _ => state.load(),
    }
}
