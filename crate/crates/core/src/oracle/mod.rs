//! Brute-force evaluation of the two-stage variational LAQC definition for
//! arbitrary two-qubit states.
//!
//! Stage one searches local projective bases `{μᵢ⁽¹⁾ ⊗ μⱼ⁽²⁾}` for the induced
//! classical state closest to `ρ` in relative entropy, which for a dephased
//! state reduces to minimising the Shannon entropy of the outcome
//! distribution; the classical correlations are the mutual information of that
//! distribution. Stage two maximises the mutual information of measurements in
//! the complementary bases `(μ0 ± e^{iΦ}μ1)/√2` over the phases `(Φ1, Φ2)`.

mod discord;
pub mod search;

use std::f64::consts::{PI, TAU};

use nalgebra::Vector2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::spectral::{shannon_entropy, von_neumann_entropy, xlog2x};
use crate::state::{pauli, DensityMatrix4, FanoBloch};
use search::{grid_refine, Axis, Goal, RefineSettings, SearchOutcome};

pub use discord::{discord_numeric, NumericDiscord};

/// Two measurement axes are treated as the same measurement when their
/// unsigned overlap exceeds `1 - AXIS_TOL`.
const AXIS_TOL: f64 = 1e-6;

/// Angles of the local bases `μ0 = cos(θ/2)|0⟩ + sin(θ/2)e^{iφ}|1⟩`,
/// `μ1 = -sin(θ/2)|0⟩ + cos(θ/2)e^{iφ}|1⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct LocalBasisAngles {
    pub theta1: f64,
    pub theta2: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl LocalBasisAngles {
    pub fn new(theta1: f64, theta2: f64, phi1: f64, phi2: f64) -> Self {
        Self { theta1, theta2, phi1, phi2 }
    }

    /// Same angles on both sides.
    pub fn common(theta: f64, phi: f64) -> Self {
        Self::new(theta, theta, phi, phi)
    }

    pub fn in_range(&self) -> bool {
        let theta_ok = |t: f64| (0.0..=PI).contains(&t);
        let phi_ok = |p: f64| (0.0..TAU).contains(&p);
        theta_ok(self.theta1) && theta_ok(self.theta2) && phi_ok(self.phi1) && phi_ok(self.phi2)
    }

    fn from_point(p: &[f64; 4]) -> Self {
        Self::new(p[0], p[1], p[2], p[3])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplementaryPhases {
    #[serde(rename = "Phi1")]
    pub phase1: f64,
    #[serde(rename = "Phi2")]
    pub phase2: f64,
}

impl ComplementaryPhases {
    pub fn new(phase1: f64, phase2: f64) -> Self {
        Self { phase1, phase2 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    pub p: [[f64; 2]; 2],
    pub pa: [f64; 2],
    pub pb: [f64; 2],
}

impl JointDistribution {
    /// Round-off negatives are clipped to zero.
    pub fn new(p: [[f64; 2]; 2]) -> Self {
        let p = p.map(|row| row.map(|v| v.max(0.0)));
        Self { p, pa: [p[0][0] + p[0][1], p[1][0] + p[1][1]], pb: [p[0][0] + p[1][0], p[0][1] + p[1][1]] }
    }

    pub fn total(&self) -> f64 {
        self.pa[0] + self.pa[1]
    }

    pub fn entropy(&self) -> f64 {
        shannon_entropy(&[self.p[0][0], self.p[0][1], self.p[1][0], self.p[1][1]])
    }
}

/// `Σ p log2[p / (pA pB)]` with `0 log 0 = 0`.
pub fn distribution_mutual_information(d: &JointDistribution) -> f64 {
    let mut mi = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let p = d.p[i][j];
            if p > 0.0 {
                mi += p * (p / (d.pa[i] * d.pb[j])).log2();
            }
        }
    }
    mi.max(0.0)
}

type Ket2 = Vector2<Complex64>;

/// `[μ0, μ1]` for the given angles.
pub fn basis_vectors(theta: f64, phi: f64) -> [Ket2; 2] {
    let (s, c) = (0.5 * theta).sin_cos();
    let e = Complex64::from_polar(1.0, phi);
    [Ket2::new(Complex64::new(c, 0.0), e * s), Ket2::new(Complex64::new(-s, 0.0), e * c)]
}

/// `[u0, u1]` with `u_k = (μ0 + (-1)^k e^{iΦ} μ1)/√2`.
pub fn complementary_vectors(theta: f64, phi: f64, phase: f64) -> [Ket2; 2] {
    let [m0, m1] = basis_vectors(theta, phi);
    let e = Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, phase);
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [m0 * h + m1 * e, m0 * h - m1 * e]
}

fn product_expectation(rho: &DensityMatrix4, a: &Ket2, b: &Ket2) -> f64 {
    let psi = nalgebra::Vector4::new(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]);
    (psi.adjoint() * rho.matrix() * psi)[(0, 0)].re
}

fn distribution_from_kets(rho: &DensityMatrix4, a: &[Ket2; 2], b: &[Ket2; 2]) -> JointDistribution {
    let mut p = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            p[i][j] = product_expectation(rho, &a[i], &b[j]);
        }
    }
    JointDistribution::new(p)
}

/// Outcome distribution of the product measurement in the local bases.
/// Angles outside their nominal ranges are accepted and used as given.
pub fn induced_distribution(rho: &DensityMatrix4, basis: &LocalBasisAngles) -> JointDistribution {
    distribution_from_kets(
        rho,
        &basis_vectors(basis.theta1, basis.phi1),
        &basis_vectors(basis.theta2, basis.phi2),
    )
}

/// Outcome distribution of the measurement in the complementary bases of
/// `basis` with phases `phases`.
pub fn complementary_distribution(
    rho: &DensityMatrix4,
    basis: &LocalBasisAngles,
    phases: &ComplementaryPhases,
) -> JointDistribution {
    distribution_from_kets(
        rho,
        &complementary_vectors(basis.theta1, basis.phi1, phases.phase1),
        &complementary_vectors(basis.theta2, basis.phi2, phases.phase2),
    )
}

/// Bloch-form evaluation of product-measurement statistics:
/// `p_ij = ¼(1 + s_i a·u + s_j b·v + s_i s_j u·Tv)`, `s_0 = 1`, `s_1 = -1`.
#[derive(Clone, Copy, Debug)]
struct BlochKernel {
    fb: FanoBloch,
}

impl BlochKernel {
    fn new(rho: &DensityMatrix4) -> Self {
        Self { fb: rho.to_bloch() }
    }

    fn distribution(&self, u: &[f64; 3], v: &[f64; 3]) -> [f64; 4] {
        let au = dot(&self.fb.a, u);
        let bv = dot(&self.fb.b, v);
        let mut utv = 0.0;
        for m in 0..3 {
            utv += u[m] * dot(&self.fb.t[m], v);
        }
        [
            0.25 * (1.0 + au + bv + utv),
            0.25 * (1.0 + au - bv - utv),
            0.25 * (1.0 - au + bv - utv),
            0.25 * (1.0 - au - bv + utv),
        ]
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn bloch_axis(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// `w_k = ⟨μ0|σ_k|μ1⟩`, split into real and imaginary parts. The Bloch vector
/// of `u0(Φ)` is `cosΦ Re w - sinΦ Im w`.
fn transition_vectors(theta: f64, phi: f64) -> ([f64; 3], [f64; 3]) {
    let [m0, m1] = basis_vectors(theta, phi);
    let mut re = [0.0; 3];
    let mut im = [0.0; 3];
    for k in 0..3 {
        let w = (m0.adjoint() * pauli(k + 1) * m1)[(0, 0)];
        re[k] = w.re;
        im[k] = w.im;
    }
    (re, im)
}

fn complementary_axis(re: &[f64; 3], im: &[f64; 3], phase: f64) -> [f64; 3] {
    let (s, c) = phase.sin_cos();
    [c * re[0] - s * im[0], c * re[1] - s * im[1], c * re[2] - s * im[2]]
}

fn mi_of(p: &[f64; 4]) -> f64 {
    distribution_mutual_information(&JointDistribution::new([[p[0], p[1]], [p[2], p[3]]]))
}

fn entropy_of(p: &[f64; 4]) -> f64 {
    p.iter().map(|&x| -xlog2x(x.max(0.0))).sum()
}

fn same_measurement(a: &[[f64; 3]; 2], b: &[[f64; 3]; 2]) -> bool {
    dot(&a[0], &b[0]).abs() >= 1.0 - AXIS_TOL && dot(&a[1], &b[1]).abs() >= 1.0 - AXIS_TOL
}

/// True when the optimal points of `outcome` describe at least two
/// physically different measurements.
fn distinct_optima<const D: usize>(outcome: &SearchOutcome<D>, axes_of: impl Fn(&[f64; D]) -> [[f64; 3]; 2]) -> bool {
    let reference = axes_of(&outcome.best.point);
    outcome.optimal_points().any(|p| !same_measurement(&reference, &axes_of(&p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Coarse points per angle in the stage-one search.
    pub grid: usize,
    /// Coarse points per phase in the stage-two search.
    pub complementary_grid: usize,
    /// Upper bound on refinement rounds; refinement also stops once the step
    /// falls below `tol * 1e-3`.
    pub rounds: usize,
    /// Coarse optima refined independently.
    pub seeds: usize,
    pub tol: f64,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { grid: 24, complementary_grid: 48, rounds: 40, seeds: 3, tol: 1e-6, execution: Execution::default() }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid < 16 || self.complementary_grid < 16 {
            return Err(Error::InvalidSearch(format!(
                "grid must have at least 16 points per angle (got {} and {})",
                self.grid, self.complementary_grid
            )));
        }
        if self.rounds < 2 {
            return Err(Error::InvalidSearch(format!("at least 2 refinement rounds required (got {})", self.rounds)));
        }
        if self.seeds == 0 {
            return Err(Error::InvalidSearch("at least one seed required".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidSearch(format!("tolerance must be positive (got {})", self.tol)));
        }
        Ok(())
    }

    fn refine_settings(&self) -> RefineSettings {
        RefineSettings { rounds: self.rounds, seeds: self.seeds, min_step: self.tol * 1e-3, execution: self.execution }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalSearch {
    /// Mutual information of the induced classical state.
    pub value: f64,
    /// `S(ρ || X_ρ)` at the optimum.
    pub relative_entropy: f64,
    pub basis: LocalBasisAngles,
    pub degenerate: bool,
    pub evaluations: usize,
}

/// Stage one: the local basis whose dephased state is closest to `ρ`.
pub fn minimize_classical(rho: &DensityMatrix4, cfg: &SearchConfig) -> Result<ClassicalSearch> {
    cfg.validate()?;
    let s_rho = von_neumann_entropy(rho)?;
    let kernel = BlochKernel::new(rho);
    let axes = [
        Axis::closed(0.0, PI, cfg.grid),
        Axis::closed(0.0, PI, cfg.grid),
        Axis::periodic(0.0, TAU, cfg.grid),
        Axis::periodic(0.0, TAU, cfg.grid),
    ];
    let measurement = |p: &[f64; 4]| [bloch_axis(p[0], p[2]), bloch_axis(p[1], p[3])];
    let outcome = grid_refine(&axes, Goal::Minimize, &cfg.refine_settings(), |p| {
        let [u, v] = measurement(p);
        entropy_of(&kernel.distribution(&u, &v))
    });
    let basis = LocalBasisAngles::from_point(&outcome.best.point);
    let value = distribution_mutual_information(&induced_distribution(rho, &basis));
    Ok(ClassicalSearch {
        value,
        relative_entropy: (outcome.best.value - s_rho).max(0.0),
        basis,
        degenerate: distinct_optima(&outcome, measurement),
        evaluations: outcome.evaluations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplementarySearch {
    pub value: f64,
    pub phases: ComplementaryPhases,
    pub degenerate: bool,
    pub evaluations: usize,
}

/// Stage two: the complementary-basis phases maximising mutual information.
pub fn maximize_complementary(
    rho: &DensityMatrix4,
    basis: &LocalBasisAngles,
    cfg: &SearchConfig,
) -> Result<ComplementarySearch> {
    cfg.validate()?;
    let kernel = BlochKernel::new(rho);
    let (re_a, im_a) = transition_vectors(basis.theta1, basis.phi1);
    let (re_b, im_b) = transition_vectors(basis.theta2, basis.phi2);
    let axes = [Axis::periodic(0.0, TAU, cfg.complementary_grid), Axis::periodic(0.0, TAU, cfg.complementary_grid)];
    let measurement =
        |p: &[f64; 2]| [complementary_axis(&re_a, &im_a, p[0]), complementary_axis(&re_b, &im_b, p[1])];
    let outcome = grid_refine(&axes, Goal::Maximize, &cfg.refine_settings(), |p| {
        let [u, v] = measurement(p);
        mi_of(&kernel.distribution(&u, &v))
    });
    let phases = ComplementaryPhases::new(outcome.best.point[0], outcome.best.point[1]);
    let value = distribution_mutual_information(&complementary_distribution(rho, basis, &phases));
    Ok(ComplementarySearch {
        value,
        phases,
        degenerate: distinct_optima(&outcome, measurement),
        evaluations: outcome.evaluations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub classical: f64,
    pub laqc: f64,
    pub relative_entropy: f64,
    pub basis: LocalBasisAngles,
    pub phases: ComplementaryPhases,
    pub classical_degenerate: bool,
    pub laqc_degenerate: bool,
    pub evaluations: usize,
}

/// Both stages in sequence.
pub fn laqc_numeric(rho: &DensityMatrix4, cfg: &SearchConfig) -> Result<OracleReport> {
    let stage1 = minimize_classical(rho, cfg)?;
    let stage2 = maximize_complementary(rho, &stage1.basis, cfg)?;
    Ok(OracleReport {
        classical: stage1.value,
        laqc: stage2.value,
        relative_entropy: stage1.relative_entropy,
        basis: stage1.basis,
        phases: stage2.phases,
        classical_degenerate: stage1.degenerate,
        laqc_degenerate: stage2.degenerate,
        evaluations: stage1.evaluations + stage2.evaluations,
    })
}
