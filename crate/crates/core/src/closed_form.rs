//! Closed-form classical correlations and LAQC for symmetric and
//! anti-symmetric X states.
//!
//! Every quantifier is built from three functions of the Bloch parameters:
//! `g1(T1)`, `g2(T2)` and a third one, `g+` for symmetric states or `g-` for
//! anti-symmetric ones. The classical correlations are the smallest of the
//! three and LAQC the largest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{correlation_information, xlog2_ratio};
use crate::state::{SymmetryClass, XStateParams};

/// Two g-values closer than this are reported as tied.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GValues {
    pub g1: f64,
    pub g2: f64,
    /// Defined for symmetric and Bell-diagonal states.
    pub g_plus: Option<f64>,
    /// Defined for anti-symmetric and Bell-diagonal states.
    pub g_minus: Option<f64>,
    pub class: SymmetryClass,
}

impl GValues {
    /// The class-specific third function (`g+`, or `g-` for anti-symmetric
    /// states).
    pub fn third(&self) -> Option<f64> {
        match self.class {
            SymmetryClass::AntiSymmetric => self.g_minus,
            _ => self.g_plus,
        }
    }
}

/// `g1` and `g2`: mutual information of an unbiased pair with correlation `t`.
pub fn g_single(t: f64) -> f64 {
    correlation_information(t)
}

/// `g+(x3, T3)`, the θ = 0 mutual information of a symmetric X state.
pub fn g_plus(x3: f64, t3: f64) -> Result<f64> {
    const CTX: &str = "g+";
    Ok(0.25 * xlog2_ratio(1.0 + t3 + 2.0 * x3, (1.0 + x3).powi(2), CTX)?
        + 0.25 * xlog2_ratio(1.0 + t3 - 2.0 * x3, (1.0 - x3).powi(2), CTX)?
        + 0.5 * xlog2_ratio(1.0 - t3, 1.0 - x3 * x3, CTX)?)
}

/// `g-(x3, T3)`, the θ = 0 mutual information of an anti-symmetric X state.
///
/// The off-diagonal populations of an anti-symmetric state in the
/// computational basis are `(1+T3)/4`, so the last term carries `1+T3`.
pub fn g_minus(x3: f64, t3: f64) -> Result<f64> {
    const CTX: &str = "g-";
    Ok(0.25 * xlog2_ratio(1.0 - t3 + 2.0 * x3, (1.0 + x3).powi(2), CTX)?
        + 0.25 * xlog2_ratio(1.0 - t3 - 2.0 * x3, (1.0 - x3).powi(2), CTX)?
        + 0.5 * xlog2_ratio(1.0 + t3, 1.0 - x3 * x3, CTX)?)
}

pub fn g_functions(x: &XStateParams) -> Result<GValues> {
    let class = x.symmetry_class();
    let (g_plus, g_minus) = match class {
        SymmetryClass::Symmetric => (Some(g_plus(x.x3, x.t3)?), None),
        SymmetryClass::AntiSymmetric => (None, Some(g_minus(x.x3, x.t3)?)),
        SymmetryClass::BellDiagonal => (Some(g_plus(0.0, x.t3)?), Some(g_minus(0.0, x.t3)?)),
        SymmetryClass::Other => (None, None),
    };
    Ok(GValues { g1: g_single(x.t1), g2: g_single(x.t2), g_plus, g_minus, class })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `θ = 0`, `φ` free.
    ThetaZero,
    /// `θ = π/2`, `φ = 0`.
    ThetaPi2PhiZero,
    /// `θ = π/2`, `φ = π/2`.
    ThetaPi2PhiPi2,
}

impl Branch {
    /// Common local angles `(θ, φ)` of the branch (`φ = 0` stands in for
    /// the free phase of [`Branch::ThetaZero`]).
    pub fn angles(self) -> (f64, f64) {
        use std::f64::consts::FRAC_PI_2;
        match self {
            Branch::ThetaZero => (0.0, 0.0),
            Branch::ThetaPi2PhiZero => (FRAC_PI_2, 0.0),
            Branch::ThetaPi2PhiPi2 => (FRAC_PI_2, FRAC_PI_2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimalBasisBranch {
    pub branch: Branch,
    pub theta: f64,
    pub phi: f64,
    /// Another g-value matched the selected one within [`TIE_TOL`].
    pub tied: bool,
}

impl OptimalBasisBranch {
    fn new(branch: Branch, tied: bool) -> Self {
        let (theta, phi) = branch.angles();
        Self { branch, theta, phi, tied }
    }
}

#[derive(Clone, Copy)]
enum Extremum {
    Min,
    Max,
}

fn candidates(x: &XStateParams) -> Result<[(f64, Branch); 3]> {
    let g = g_functions(x)?;
    let third = g.third().ok_or(Error::UnsupportedClass(g.class))?;
    // precedence order on ties: g± ≻ g1 ≻ g2
    Ok([(third, Branch::ThetaZero), (g.g1, Branch::ThetaPi2PhiZero), (g.g2, Branch::ThetaPi2PhiPi2)])
}

fn select(x: &XStateParams, ext: Extremum) -> Result<(f64, OptimalBasisBranch)> {
    let cands = candidates(x)?;
    let better = |a: f64, b: f64| match ext {
        Extremum::Min => a < b - TIE_TOL,
        Extremum::Max => a > b + TIE_TOL,
    };
    let mut best = cands[0];
    for &c in &cands[1..] {
        if better(c.0, best.0) {
            best = c;
        }
    }
    let tied = cands.iter().filter(|c| (c.0 - best.0).abs() <= TIE_TOL).count() > 1;
    Ok((best.0, OptimalBasisBranch::new(best.1, tied)))
}

/// Classical correlations `min(g1, g2, g±)` and the branch that attains it.
pub fn classical_correlations_x(x: &XStateParams) -> Result<(f64, OptimalBasisBranch)> {
    select(x, Extremum::Min)
}

/// LAQC `max(g1, g2, g±)`.
pub fn laqc_x(x: &XStateParams) -> Result<f64> {
    Ok(laqc_x_with_branch(x)?.0)
}

/// LAQC together with the g-function that attains it.
pub fn laqc_x_with_branch(x: &XStateParams) -> Result<(f64, OptimalBasisBranch)> {
    select(x, Extremum::Max)
}
