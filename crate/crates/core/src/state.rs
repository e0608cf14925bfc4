//! Two-qubit states: validated density matrices, the Fano-Bloch form, the
//! canonical five-parameter X states and the named one-parameter families.
//!
//! Basis ordering is `|00⟩, |01⟩, |10⟩, |11⟩` with subsystem A the left
//! tensor factor.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{
    hermitian_eigenvalues_2x2, hermitian_eigenvalues_unchecked, DensityOperator, HERMITIAN_TOL,
    PSD_TOL,
};

pub const TRACE_TOL: f64 = 1e-12;
/// Tolerance used to classify local Bloch parameters and canonical X shape.
pub const CLASS_TOL: f64 = 1e-12;
const BLOCH_RANGE_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Pauli matrix `σ_k` for `k ∈ {1,2,3}`, identity for `k = 0`.
pub fn pauli(k: usize) -> Matrix2<Complex64> {
    match k {
        0 => Matrix2::new(ONE, ZERO, ZERO, ONE),
        1 => Matrix2::new(ZERO, ONE, ONE, ZERO),
        2 => Matrix2::new(ZERO, -I, I, ZERO),
        3 => Matrix2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {k} out of range"),
    }
}

pub(crate) fn kron(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>) -> Matrix4<Complex64> {
    Matrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix4 {
    m: Matrix4<Complex64>,
}

impl DensityMatrix4 {
    /// Validates the three state invariants and reports the first violation.
    pub fn new(m: Matrix4<Complex64>) -> Result<Self> {
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("density matrix entry"));
        }
        for i in 0..4 {
            for j in 0..4 {
                let d = (m[(i, j)] - m[(j, i)].conj()).norm();
                if d > HERMITIAN_TOL {
                    return Err(Error::NotHermitian { row: i, col: j, deviation: d });
                }
            }
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::TraceNotUnit { trace: trace.re });
        }
        let min = hermitian_eigenvalues_unchecked(&m)[3];
        if min < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
        Ok(Self { m })
    }

    pub fn maximally_mixed() -> Self {
        Self { m: Matrix4::identity() * Complex64::new(0.25, 0.0) }
    }

    /// Projector onto a (normalised on the fly) pure state.
    pub fn pure(psi: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NonFinite("state vector"));
        }
        let psi = psi.map(|z| z / norm);
        Self::new(Matrix4::from_fn(|r, c| psi[r] * psi[c].conj()))
    }

    pub fn product(a: &QubitDensity, b: &QubitDensity) -> Self {
        // tensor product of two valid states is valid
        Self { m: kron(a.matrix(), b.matrix()) }
    }

    /// Convex mixture `w·self + (1-w)·other`.
    pub fn mix(&self, w: f64, other: &Self) -> Result<Self> {
        check_unit("weight", w)?;
        Self::new(self.m * Complex64::new(w, 0.0) + other.m * Complex64::new(1.0 - w, 0.0))
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[(row, col)]
    }

    /// Descending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues_unchecked(&self.m)
    }

    pub fn partial_trace(&self, keep: Subsystem) -> QubitDensity {
        let m = &self.m;
        let r = match keep {
            // trace out B: sum over the right index
            Subsystem::A => Matrix2::from_fn(|i, j| m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)]),
            Subsystem::B => Matrix2::from_fn(|i, j| m[(i, j)] + m[(2 + i, 2 + j)]),
        };
        QubitDensity { m: r }
    }

    pub fn to_bloch(&self) -> FanoBloch {
        bloch_from_density(self)
    }

    /// Canonical X-state parameters when the state has that form.
    pub fn x_params(&self) -> Option<XStateParams> {
        XStateParams::from_bloch(&self.to_bloch())
    }

    /// Largest modulus among entries outside the diagonal and anti-diagonal.
    pub fn off_x_magnitude(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 {
                    worst = worst.max(self.m[(i, j)].norm());
                }
            }
        }
        worst
    }
}

impl DensityOperator for DensityMatrix4 {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }

    fn dimension(&self) -> usize {
        4
    }
}

/// A validated single-qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitDensity {
    m: Matrix2<Complex64>,
}

impl QubitDensity {
    pub fn new(m: Matrix2<Complex64>) -> Result<Self> {
        let ev = hermitian_eigenvalues_2x2(&m)?;
        let trace = m.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotUnit { trace: trace.re });
        }
        if ev[1] < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: ev[1] });
        }
        Ok(Self { m })
    }

    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let m = (pauli(0) + pauli(1) * c(r[0]) + pauli(2) * c(r[1]) + pauli(3) * c(r[2])) * c(0.5);
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.m
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        std::array::from_fn(|k| (pauli(k + 1) * self.m).trace().re)
    }
}

impl DensityOperator for QubitDensity {
    fn spectrum(&self) -> Vec<f64> {
        // validated on construction
        hermitian_eigenvalues_2x2(&self.m).map(|e| e.to_vec()).unwrap_or_default()
    }

    fn dimension(&self) -> usize {
        2
    }
}

#[inline]
fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_unit(name: &'static str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) || v.is_nan() {
        return Err(Error::ParameterOutOfRange { name, value: v });
    }
    Ok(())
}

/// Fano-Bloch form: local Bloch vectors `a`, `b` and correlation tensor `t`
/// with `t[m][n] = Tr[ρ σ_m ⊗ σ_n]`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct FanoBloch {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl FanoBloch {
    pub fn to_density(&self) -> Result<DensityMatrix4> {
        density_from_bloch(self)
    }
}

/// Reconstructs `ρ = ¼(𝟙 + Σ aₙσₙ⊗𝟙 + Σ 𝟙⊗bₙσₙ + Σ T_mn σ_m⊗σ_n)`.
pub fn density_from_bloch(fb: &FanoBloch) -> Result<DensityMatrix4> {
    const A_NAMES: [&str; 3] = ["a1", "a2", "a3"];
    const B_NAMES: [&str; 3] = ["b1", "b2", "b3"];
    const T_NAMES: [[&str; 3]; 3] = [["T11", "T12", "T13"], ["T21", "T22", "T23"], ["T31", "T32", "T33"]];
    let mut checks: Vec<(&'static str, f64)> = Vec::with_capacity(15);
    for k in 0..3 {
        checks.push((A_NAMES[k], fb.a[k]));
        checks.push((B_NAMES[k], fb.b[k]));
        for l in 0..3 {
            checks.push((T_NAMES[k][l], fb.t[k][l]));
        }
    }
    for (name, v) in checks {
        if !v.is_finite() {
            return Err(Error::NonFinite(name));
        }
        if v.abs() > 1.0 + BLOCH_RANGE_TOL {
            return Err(Error::BlochOutOfRange { component: name, value: v });
        }
    }

    let id = pauli(0);
    let mut m = Matrix4::<Complex64>::identity();
    for n in 0..3 {
        let s = pauli(n + 1);
        m += kron(&s, &id) * c(fb.a[n]);
        m += kron(&id, &s) * c(fb.b[n]);
        for k in 0..3 {
            if fb.t[n][k] != 0.0 {
                m += kron(&s, &pauli(k + 1)) * c(fb.t[n][k]);
            }
        }
    }
    DensityMatrix4::new(m * c(0.25))
}

/// Trace formulas `aₙ = Tr[ρ σₙ⊗𝟙]`, `bₙ = Tr[ρ 𝟙⊗σₙ]`, `T_mn = Tr[ρ σ_m⊗σ_n]`.
pub fn bloch_from_density(rho: &DensityMatrix4) -> FanoBloch {
    let m = rho.matrix();
    let id = pauli(0);
    let expect = |op: Matrix4<Complex64>| (op * m).trace().re;
    let mut fb = FanoBloch::default();
    for n in 0..3 {
        let s = pauli(n + 1);
        fb.a[n] = expect(kron(&s, &id));
        fb.b[n] = expect(kron(&id, &s));
        for k in 0..3 {
            fb.t[n][k] = expect(kron(&s, &pauli(k + 1)));
        }
    }
    fb
}

/// Relation between the two local Bloch vectors of a canonical X state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryClass {
    /// `x3 = y3 ≠ 0`
    Symmetric,
    /// `x3 = -y3 ≠ 0`
    AntiSymmetric,
    /// `x3 = y3 = 0`
    BellDiagonal,
    Other,
}

impl SymmetryClass {
    /// Whether the closed-form quantifiers apply.
    pub fn has_closed_form(self) -> bool {
        !matches!(self, SymmetryClass::Other)
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::AntiSymmetric => "anti-symmetric",
            SymmetryClass::BellDiagonal => "Bell-diagonal",
            SymmetryClass::Other => "other",
        };
        f.write_str(s)
    }
}

/// Canonical X state: local Bloch vectors along z and a diagonal correlation
/// tensor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct XStateParams {
    pub x3: f64,
    pub y3: f64,
    #[serde(rename = "T1")]
    pub t1: f64,
    #[serde(rename = "T2")]
    pub t2: f64,
    #[serde(rename = "T3")]
    pub t3: f64,
}

impl XStateParams {
    /// Validates finiteness, unit range and positivity of the reconstructed
    /// matrix (through the closed-form X-state eigenvalues).
    pub fn new(x3: f64, y3: f64, t1: f64, t2: f64, t3: f64) -> Result<Self> {
        let x = Self { x3, y3, t1, t2, t3 };
        for (name, v) in [("x3", x3), ("y3", y3), ("T1", t1), ("T2", t2), ("T3", t3)] {
            if !v.is_finite() {
                return Err(Error::NonFinite(name));
            }
            if v.abs() > 1.0 + BLOCH_RANGE_TOL {
                return Err(Error::BlochOutOfRange { component: name, value: v });
            }
        }
        let min = x.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
        Ok(x)
    }

    /// Extracts the five parameters when every other Fano-Bloch component
    /// vanishes (within [`CLASS_TOL`]).
    pub fn from_bloch(fb: &FanoBloch) -> Option<Self> {
        let small = |v: f64| v.abs() <= CLASS_TOL;
        let off_local = [fb.a[0], fb.a[1], fb.b[0], fb.b[1]];
        let off_t = [fb.t[0][1], fb.t[0][2], fb.t[1][0], fb.t[1][2], fb.t[2][0], fb.t[2][1]];
        if !off_local.iter().chain(off_t.iter()).all(|&v| small(v)) {
            return None;
        }
        Self::new(fb.a[2], fb.b[2], fb.t[0][0], fb.t[1][1], fb.t[2][2]).ok()
    }

    pub fn to_bloch(&self) -> FanoBloch {
        let mut fb = FanoBloch::default();
        fb.a[2] = self.x3;
        fb.b[2] = self.y3;
        fb.t[0][0] = self.t1;
        fb.t[1][1] = self.t2;
        fb.t[2][2] = self.t3;
        fb
    }

    pub fn density(&self) -> Result<DensityMatrix4> {
        density_from_bloch(&self.to_bloch())
    }

    pub fn symmetry_class(&self) -> SymmetryClass {
        let zero_x = self.x3.abs() <= CLASS_TOL;
        let zero_y = self.y3.abs() <= CLASS_TOL;
        if zero_x && zero_y {
            SymmetryClass::BellDiagonal
        } else if (self.x3 - self.y3).abs() <= CLASS_TOL {
            SymmetryClass::Symmetric
        } else if (self.x3 + self.y3).abs() <= CLASS_TOL {
            SymmetryClass::AntiSymmetric
        } else {
            SymmetryClass::Other
        }
    }

    /// Diagonal entries `ρ11..ρ44` of the X matrix.
    pub fn diagonal(&self) -> [f64; 4] {
        let Self { x3, y3, t3, .. } = *self;
        [
            0.25 * (1.0 + x3 + y3 + t3),
            0.25 * (1.0 + x3 - y3 - t3),
            0.25 * (1.0 - x3 + y3 - t3),
            0.25 * (1.0 - x3 - y3 + t3),
        ]
    }

    /// Outer anti-diagonal coherence `ρ14`.
    pub fn rho14(&self) -> f64 {
        0.25 * (self.t1 - self.t2)
    }

    /// Inner anti-diagonal coherence `ρ23`.
    pub fn rho23(&self) -> f64 {
        0.25 * (self.t1 + self.t2)
    }

    /// Closed-form X-state eigenvalues `λ1..λ4` (unsorted, in the
    /// `1-T3 ± …`, `1+T3 ± …` order).
    pub fn eigenvalues(&self) -> [f64; 4] {
        let Self { x3, y3, t1, t2, t3 } = *self;
        let r12 = (x3 - y3).hypot(t1 + t2);
        let r34 = (x3 + y3).hypot(t1 - t2);
        [
            0.25 * (1.0 - t3 + r12),
            0.25 * (1.0 - t3 - r12),
            0.25 * (1.0 + t3 + r34),
            0.25 * (1.0 + t3 - r34),
        ]
    }
}

/// Named one-parameter families of X states.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "kebab-case")]
pub enum StateFamily {
    /// `z|Ψ⁻⟩⟨Ψ⁻| + (1-z)𝟙/4`
    Werner(f64),
    /// `F|Ψ⁻⟩⟨Ψ⁻| + (1-F)|00⟩⟨00|`
    PsiMinusMix(f64),
    /// `F|Ψ⁺⟩⟨Ψ⁺| + (1-F)|11⟩⟨11|`
    AraMix(f64),
    /// `F|Φ⁺⟩⟨Φ⁺| + (1-F)|01⟩⟨01|`
    VerstraeteMix(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Werner,
    PsiMinusMix,
    AraMix,
    VerstraeteMix,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] =
        [FamilyKind::Werner, FamilyKind::PsiMinusMix, FamilyKind::AraMix, FamilyKind::VerstraeteMix];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Werner => "werner",
            FamilyKind::PsiMinusMix => "psi-minus-mix",
            FamilyKind::AraMix => "ara-mix",
            FamilyKind::VerstraeteMix => "verstraete-mix",
        }
    }

    /// Column name of the family parameter in sweep output.
    pub fn parameter_name(self) -> &'static str {
        match self {
            FamilyKind::Werner => "z",
            _ => "F",
        }
    }

    pub fn with(self, param: f64) -> StateFamily {
        match self {
            FamilyKind::Werner => StateFamily::Werner(param),
            FamilyKind::PsiMinusMix => StateFamily::PsiMinusMix(param),
            FamilyKind::AraMix => StateFamily::AraMix(param),
            FamilyKind::VerstraeteMix => StateFamily::VerstraeteMix(param),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn bell(kind: usize) -> [Complex64; 4] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match kind {
        // Ψ⁻, Ψ⁺, Φ⁺
        0 => [ZERO, c(h), c(-h), ZERO],
        1 => [ZERO, c(h), c(h), ZERO],
        _ => [c(h), ZERO, ZERO, c(h)],
    }
}

fn basis(index: usize) -> [Complex64; 4] {
    let mut v = [ZERO; 4];
    v[index] = ONE;
    v
}

impl StateFamily {
    pub fn kind(&self) -> FamilyKind {
        match self {
            StateFamily::Werner(_) => FamilyKind::Werner,
            StateFamily::PsiMinusMix(_) => FamilyKind::PsiMinusMix,
            StateFamily::AraMix(_) => FamilyKind::AraMix,
            StateFamily::VerstraeteMix(_) => FamilyKind::VerstraeteMix,
        }
    }

    pub fn parameter(&self) -> f64 {
        match *self {
            StateFamily::Werner(p)
            | StateFamily::PsiMinusMix(p)
            | StateFamily::AraMix(p)
            | StateFamily::VerstraeteMix(p) => p,
        }
    }

    /// Bloch parameters of the family, written down directly.
    pub fn x_params(&self) -> Result<XStateParams> {
        let p = self.parameter();
        check_unit(self.kind().parameter_name(), p)?;
        match self {
            StateFamily::Werner(z) => XStateParams::new(0.0, 0.0, -z, -z, -z),
            StateFamily::PsiMinusMix(f) => XStateParams::new(1.0 - f, 1.0 - f, -f, -f, 1.0 - 2.0 * f),
            StateFamily::AraMix(f) => XStateParams::new(f - 1.0, f - 1.0, *f, *f, 1.0 - 2.0 * f),
            StateFamily::VerstraeteMix(f) => XStateParams::new(1.0 - f, f - 1.0, *f, -f, 2.0 * f - 1.0),
        }
    }
}

/// Builds the family's density matrix from its defining mixture.
pub fn make_family(family: StateFamily) -> Result<DensityMatrix4> {
    let p = family.parameter();
    check_unit(family.kind().parameter_name(), p)?;
    let (entangled, other) = match family {
        StateFamily::Werner(_) => (bell(0), None),
        StateFamily::PsiMinusMix(_) => (bell(0), Some(basis(0))),
        StateFamily::AraMix(_) => (bell(1), Some(basis(3))),
        StateFamily::VerstraeteMix(_) => (bell(2), Some(basis(1))),
    };
    let ent = DensityMatrix4::pure(entangled)?;
    let other = match other {
        Some(v) => DensityMatrix4::pure(v)?,
        None => DensityMatrix4::maximally_mixed(),
    };
    ent.mix(p, &other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn zero_bloch_is_maximally_mixed() {
        let rho = density_from_bloch(&FanoBloch::default()).unwrap();
        assert_eq!(rho, DensityMatrix4::maximally_mixed());
    }

    #[test]
    fn singlet_from_bloch() {
        let rho = XStateParams::new(0.0, 0.0, -1.0, -1.0, -1.0).unwrap().density().unwrap();
        let singlet = DensityMatrix4::pure(bell(0)).unwrap();
        assert!((rho.matrix() - singlet.matrix()).norm() < 1e-15);
    }

    #[test]
    fn x_shape_entries() {
        let x = XStateParams::new(0.2, 0.1, 0.3, -0.2, 0.1).unwrap();
        let rho = x.density().unwrap();
        assert!(close(rho.entry(0, 3).re, (0.3 + 0.2) / 4.0, 1e-15));
        assert!(close(rho.entry(1, 2).re, (0.3 - 0.2) / 4.0, 1e-15));
        assert!(rho.off_x_magnitude() < 1e-15);
        for (k, d) in x.diagonal().iter().enumerate() {
            assert!(close(rho.entry(k, k).re, *d, 1e-15));
        }
    }

    #[test]
    fn half_singlet_half_ground() {
        let f = 0.5;
        let x = XStateParams::new(1.0 - f, 1.0 - f, -f, -f, 1.0 - 2.0 * f).unwrap();
        let expected = make_family(StateFamily::PsiMinusMix(0.5)).unwrap();
        assert!((x.density().unwrap().matrix() - expected.matrix()).norm() < 1e-15);
    }

    #[test]
    fn werner_bloch_parameters() {
        let fb = make_family(StateFamily::Werner(0.37)).unwrap().to_bloch();
        assert!(close(fb.a[2], 0.0, 1e-15) && close(fb.b[2], 0.0, 1e-15));
        for k in 0..3 {
            assert!(close(fb.t[k][k], -0.37, 1e-15));
        }
    }

    #[test]
    fn family_bloch_parameters_match_listed_values() {
        for kind in FamilyKind::ALL {
            for p in [0.0, 0.3, 0.7, 1.0] {
                let fam = kind.with(p);
                let from_matrix = make_family(fam).unwrap().x_params().unwrap();
                let listed = fam.x_params().unwrap();
                for (a, b) in [
                    (from_matrix.x3, listed.x3),
                    (from_matrix.y3, listed.y3),
                    (from_matrix.t1, listed.t1),
                    (from_matrix.t2, listed.t2),
                    (from_matrix.t3, listed.t3),
                ] {
                    assert!(close(a, b, 1e-14), "{kind} {p}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn family_endpoints() {
        let w0 = make_family(StateFamily::Werner(0.0)).unwrap();
        assert!((w0.matrix() - DensityMatrix4::maximally_mixed().matrix()).norm() < 1e-15);
        let w1 = make_family(StateFamily::Werner(1.0)).unwrap();
        assert!((w1.matrix() - DensityMatrix4::pure(bell(0)).unwrap().matrix()).norm() < 1e-15);
    }

    #[test]
    fn family_parameter_out_of_range() {
        assert!(matches!(
            make_family(StateFamily::Werner(1.2)),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(StateFamily::VerstraeteMix(-0.1).x_params().is_err());
    }

    #[test]
    fn classification() {
        let s = XStateParams::new(0.3, 0.3, 0.1, 0.1, 0.2).unwrap();
        assert_eq!(s.symmetry_class(), SymmetryClass::Symmetric);
        let a = XStateParams::new(0.3, -0.3, 0.1, -0.1, 0.2).unwrap();
        assert_eq!(a.symmetry_class(), SymmetryClass::AntiSymmetric);
        let bd = XStateParams::new(0.0, 0.0, 0.1, -0.1, 0.2).unwrap();
        assert_eq!(bd.symmetry_class(), SymmetryClass::BellDiagonal);
        let o = XStateParams::new(0.3, 0.1, 0.1, -0.1, 0.2).unwrap();
        assert_eq!(o.symmetry_class(), SymmetryClass::Other);
    }

    #[test]
    fn invalid_bloch_parameters_rejected() {
        // T = (1, 1, 1) is not a state
        assert!(matches!(XStateParams::new(0.0, 0.0, 1.0, 1.0, 1.0), Err(Error::NotPositive { .. })));
        let mut fb = FanoBloch::default();
        fb.t = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(matches!(density_from_bloch(&fb), Err(Error::NotPositive { .. })));
        fb.t[0][0] = 1.5;
        assert!(matches!(density_from_bloch(&fb), Err(Error::BlochOutOfRange { .. })));
    }

    #[test]
    fn validation_names_first_violation() {
        let mut m = Matrix4::<Complex64>::identity() * c(0.225);
        assert!(matches!(DensityMatrix4::new(m), Err(Error::TraceNotUnit { .. })));
        m = Matrix4::identity() * c(0.25);
        m[(0, 1)] = c(0.1);
        assert!(matches!(DensityMatrix4::new(m), Err(Error::NotHermitian { .. })));
        let m = Matrix4::from_diagonal(&nalgebra::Vector4::new(c(1.2), c(-0.2), c(0.0), c(0.0)));
        assert!(matches!(DensityMatrix4::new(m), Err(Error::NotPositive { .. })));
    }

    #[test]
    fn partial_traces() {
        let singlet = make_family(StateFamily::Werner(1.0)).unwrap();
        for s in [Subsystem::A, Subsystem::B] {
            let r = singlet.partial_trace(s);
            assert!((r.matrix() - pauli(0) * c(0.5)).norm() < 1e-15);
        }
        let a = QubitDensity::from_bloch([0.3, -0.2, 0.5]).unwrap();
        let b = QubitDensity::from_bloch([-0.1, 0.6, 0.2]).unwrap();
        let prod = DensityMatrix4::product(&a, &b);
        assert!((prod.partial_trace(Subsystem::A).matrix() - a.matrix()).norm() < 1e-15);
        assert!((prod.partial_trace(Subsystem::B).matrix() - b.matrix()).norm() < 1e-15);

        let f = 0.4;
        let rs = make_family(StateFamily::PsiMinusMix(f)).unwrap().partial_trace(Subsystem::B);
        let expected = Matrix2::new(c((2.0 - f) / 2.0), ZERO, ZERO, c(f / 2.0));
        assert!((rs.matrix() - expected).norm() < 1e-15);
    }

    #[test]
    fn family_kind_parsing() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("bell".parse::<FamilyKind>().is_err());
    }
}
