//! Single-qubit Kraus channels acting independently on each subsystem.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{kron, pauli, DensityMatrix4, XStateParams};

pub const COMPLETENESS_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p", rename_all = "kebab-case")]
pub enum ChannelLabel {
    AmplitudeDamping(f64),
    Depolarizing(f64),
    PhaseDamping(f64),
    Identity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    operators: Vec<Matrix2<Complex64>>,
    label: ChannelLabel,
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_probability(p: f64) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::NonFinite("channel parameter p"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange { name: "p", value: p });
    }
    Ok(())
}

impl KrausSet {
    /// Checks `Σ E†E = 𝟙` to [`COMPLETENESS_TOL`].
    pub fn new(operators: Vec<Matrix2<Complex64>>, label: ChannelLabel) -> Result<Self> {
        let set = Self { operators, label };
        let deviation = set.completeness_deviation();
        if deviation.is_nan() || deviation > COMPLETENESS_TOL {
            return Err(Error::IncompleteKraus { deviation });
        }
        Ok(set)
    }

    pub fn identity() -> Self {
        Self { operators: vec![pauli(0)], label: ChannelLabel::Identity }
    }

    pub fn operators(&self) -> &[Matrix2<Complex64>] {
        &self.operators
    }

    pub fn label(&self) -> ChannelLabel {
        self.label
    }

    /// Largest entry of `|Σ E†E - 𝟙|`.
    pub fn completeness_deviation(&self) -> f64 {
        let sum: Matrix2<Complex64> = self.operators.iter().map(|e| e.adjoint() * e).sum();
        (sum - pauli(0)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Applies the channel to a single-qubit operator.
    pub fn apply_qubit(&self, m: &Matrix2<Complex64>) -> Matrix2<Complex64> {
        self.operators.iter().map(|e| e * m * e.adjoint()).sum()
    }
}

/// `E0 = diag(1, √(1-p))`, `E1 = √p |0⟩⟨1|`.
pub fn amplitude_damping_kraus(p: f64) -> Result<KrausSet> {
    check_probability(p)?;
    let z = c(0.0);
    let e0 = Matrix2::new(c(1.0), z, z, c((1.0 - p).sqrt()));
    let e1 = Matrix2::new(z, c(p.sqrt()), z, z);
    KrausSet::new(vec![e0, e1], ChannelLabel::AmplitudeDamping(p))
}

/// `ρ → (1-p)ρ + p𝟙/2`: `E0 = √(1-3p/4) 𝟙`, `E_k = (√p/2) σ_k`.
pub fn depolarizing_kraus(p: f64) -> Result<KrausSet> {
    check_probability(p)?;
    let mut ops = vec![pauli(0) * c((1.0 - 0.75 * p).sqrt())];
    for k in 1..=3 {
        ops.push(pauli(k) * c(0.5 * p.sqrt()));
    }
    KrausSet::new(ops, ChannelLabel::Depolarizing(p))
}

/// `E0 = diag(1, √(1-p))`, `E1 = diag(0, √p)`: coherences scale by `√(1-p)`.
pub fn phase_damping_kraus(p: f64) -> Result<KrausSet> {
    check_probability(p)?;
    let z = c(0.0);
    let e0 = Matrix2::new(c(1.0), z, z, c((1.0 - p).sqrt()));
    let e1 = Matrix2::new(z, z, z, c(p.sqrt()));
    KrausSet::new(vec![e0, e1], ChannelLabel::PhaseDamping(p))
}

/// `ρ' = Σᵢⱼ (Eᵢ⊗Fⱼ) ρ (Eᵢ⊗Fⱼ)†`.
pub fn apply_channel(rho: &DensityMatrix4, ka: &KrausSet, kb: &KrausSet) -> Result<DensityMatrix4> {
    for set in [ka, kb] {
        let deviation = set.completeness_deviation();
        if deviation.is_nan() || deviation > COMPLETENESS_TOL {
            return Err(Error::IncompleteKraus { deviation });
        }
    }
    let m = rho.matrix();
    let mut out = Matrix4::<Complex64>::zeros();
    for ea in ka.operators() {
        for eb in kb.operators() {
            let k = kron(ea, eb);
            out += k * m * k.adjoint();
        }
    }
    DensityMatrix4::new(out)
}

/// Werner state after amplitude damping of strength `p` on both qubits.
pub fn werner_ad_closed_form(z: f64, p: f64) -> Result<XStateParams> {
    if !z.is_finite() || !(0.0..=1.0).contains(&z) {
        return Err(Error::ParameterOutOfRange { name: "z", value: z });
    }
    check_probability(p)?;
    let t = -(1.0 - p) * z;
    XStateParams::new(p, p, t, t, p * p - (1.0 - p).powi(2) * z)
}
