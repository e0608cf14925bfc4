//! One-call summary of every quantifier for a state.

use serde::{Deserialize, Serialize};

use crate::closed_form::{classical_correlations_x, laqc_x_with_branch, OptimalBasisBranch};
use crate::concurrence::{concurrence_wootters, concurrence_x};
use crate::discord::{mutual_information, quantum_discord_x};
use crate::error::Result;
use crate::oracle::{discord_numeric, laqc_numeric, OracleReport, SearchConfig};
use crate::state::{DensityMatrix4, SymmetryClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub classical: f64,
    pub laqc: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub mutual_information: f64,
    /// Branch attaining the classical correlations (closed form only).
    pub branch: Option<OptimalBasisBranch>,
    /// Branch attaining LAQC (closed form only).
    pub laqc_branch: Option<OptimalBasisBranch>,
    /// `None` when the state is not a canonical X state.
    pub symmetry_class: Option<SymmetryClass>,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

pub fn full_report(rho: &DensityMatrix4) -> Result<CorrelationReport> {
    full_report_with(rho, &SearchConfig::default())
}

/// Closed forms where they apply, the numerical oracle otherwise.
pub fn full_report_with(rho: &DensityMatrix4, cfg: &SearchConfig) -> Result<CorrelationReport> {
    let x = rho.x_params();
    let class = x.map(|x| x.symmetry_class());
    if let Some(x) = x.filter(|x| x.symmetry_class().has_closed_form()) {
        let (classical, branch) = classical_correlations_x(&x)?;
        let (laqc, laqc_branch) = laqc_x_with_branch(&x)?;
        let (discord, internals) = quantum_discord_x(&x)?;
        return Ok(CorrelationReport {
            classical,
            laqc,
            discord,
            concurrence: concurrence_x(&x),
            mutual_information: internals.mutual_information,
            branch: Some(branch),
            laqc_branch: Some(laqc_branch),
            symmetry_class: class,
            source: Source::ClosedForm,
            oracle: None,
        });
    }
    let oracle = laqc_numeric(rho, cfg)?;
    let discord = discord_numeric(rho, cfg)?;
    Ok(CorrelationReport {
        classical: oracle.classical,
        laqc: oracle.laqc,
        discord: discord.discord,
        concurrence: x.map_or_else(|| concurrence_wootters(rho), |x| concurrence_x(&x)),
        mutual_information: mutual_information(rho)?,
        branch: None,
        laqc_branch: None,
        symmetry_class: class,
        source: Source::Oracle,
        oracle: Some(oracle),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{make_family, StateFamily, XStateParams};

    #[test]
    fn singlet() {
        let r = full_report(&make_family(StateFamily::Werner(1.0)).unwrap()).unwrap();
        for v in [r.classical, r.laqc, r.discord, r.concurrence] {
            assert!((v - 1.0).abs() < 1e-12);
        }
        assert!((r.mutual_information - 2.0).abs() < 1e-12);
        assert_eq!(r.source, Source::ClosedForm);
    }

    #[test]
    fn maximally_mixed_is_all_zero() {
        let r = full_report(&DensityMatrix4::maximally_mixed()).unwrap();
        for v in [r.classical, r.laqc, r.discord, r.concurrence, r.mutual_information] {
            assert!(v.abs() < 1e-12);
        }
        assert_eq!(r.symmetry_class, Some(SymmetryClass::BellDiagonal));
    }

    #[test]
    fn symmetric_family_laqc() {
        let r = full_report(&make_family(StateFamily::PsiMinusMix(0.5)).unwrap()).unwrap();
        assert!((r.laqc - 0.188722).abs() < 1e-6);
        assert!(r.laqc <= r.mutual_information + 1e-9);
    }

    #[test]
    fn other_class_falls_back_to_oracle() {
        let x = XStateParams::new(0.3, 0.1, 0.2, -0.1, 0.2).unwrap();
        let r = full_report(&x.density().unwrap()).unwrap();
        assert_eq!(r.source, Source::Oracle);
        assert_eq!(r.symmetry_class, Some(SymmetryClass::Other));
        assert!(r.oracle.is_some() && r.branch.is_none());
        assert!(r.laqc <= r.mutual_information + 1e-9);
        assert!(r.discord >= 0.0);
    }
}
