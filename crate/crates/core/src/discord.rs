//! Quantum mutual information and the closed-form quantum discord of X
//! states with local Bloch vectors of equal length.
//!
//! The discord is assembled from its parts, `D_A = I - C_D`, where
//! `C_D = S(ρ_A) - min{S1, S2, S3}` and the `Sₖ` are the conditional
//! entropies left after the three candidate local measurements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{correlation_information, von_neumann_entropy, xlog2_ratio, xlog2x, PSD_TOL};
use crate::state::{DensityMatrix4, Subsystem, SymmetryClass, XStateParams};

/// `f(x) = -½(1+x)log2(1+x) - ½(1-x)log2(1-x)`, so that a qubit with Bloch
/// length `x` has entropy `1 + f(x)`. Monotonically decreasing on `[0, 1]`.
pub fn entropy_offset(x: f64) -> f64 {
    -correlation_information(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscordInternals {
    pub f_x3: f64,
    pub f_y3: f64,
    pub lambdas: [f64; 4],
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    /// Measurement-extractable classical correlation `C_D`.
    pub classical: f64,
    pub mutual_information: f64,
}

impl DiscordInternals {
    pub fn min_conditional_entropy(&self) -> f64 {
        self.s1.min(self.s2).min(self.s3)
    }
}

/// Quantum mutual information `S(ρ_A) + S(ρ_B) - S(ρ_AB)` in bits.
pub fn mutual_information(rho: &DensityMatrix4) -> Result<f64> {
    let sa = von_neumann_entropy(&rho.partial_trace(Subsystem::A))?;
    let sb = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let s = von_neumann_entropy(rho)?;
    Ok((sa + sb - s).max(0.0))
}

fn class_eigenvalues(x: &XStateParams, class: SymmetryClass) -> [f64; 4] {
    let XStateParams { x3, t1, t2, t3, .. } = *x;
    match class {
        SymmetryClass::AntiSymmetric => {
            let r = (2.0 * x3).hypot(t1 + t2);
            [0.25 * (1.0 - t3 + r), 0.25 * (1.0 - t3 - r), 0.25 * (1.0 + t3 + (t1 - t2)), 0.25 * (1.0 + t3 - (t1 - t2))]
        }
        _ => {
            let r = (2.0 * x3).hypot(t1 - t2);
            [0.25 * (1.0 - t3 + (t1 + t2)), 0.25 * (1.0 - t3 - (t1 + t2)), 0.25 * (1.0 + t3 + r), 0.25 * (1.0 + t3 - r)]
        }
    }
}

fn class_diagonal(x: &XStateParams, class: SymmetryClass) -> [f64; 4] {
    let XStateParams { x3, t3, .. } = *x;
    match class {
        SymmetryClass::AntiSymmetric => [
            0.25 * (1.0 + t3),
            0.25 * (1.0 + 2.0 * x3 - t3),
            0.25 * (1.0 - 2.0 * x3 - t3),
            0.25 * (1.0 + t3),
        ],
        _ => [
            0.25 * (1.0 + 2.0 * x3 + t3),
            0.25 * (1.0 - t3),
            0.25 * (1.0 - t3),
            0.25 * (1.0 - 2.0 * x3 + t3),
        ],
    }
}

/// Closed-form quantum discord `D_A` of a symmetric, anti-symmetric or
/// Bell-diagonal X state, together with its intermediate quantities.
pub fn quantum_discord_x(x: &XStateParams) -> Result<(f64, DiscordInternals)> {
    let class = x.symmetry_class();
    if !class.has_closed_form() {
        return Err(Error::UnsupportedClass(class));
    }
    let f_x3 = entropy_offset(x.x3);
    let f_y3 = entropy_offset(x.y3);

    let lambdas = class_eigenvalues(x, class);
    let mut sum_lambda_log = 0.0;
    for &l in &lambdas {
        if l < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: l });
        }
        sum_lambda_log += xlog2x(l.max(0.0));
    }
    let mutual = 2.0 + f_x3 + f_y3 + sum_lambda_log;

    // S1: conditional entropy after a σ3 measurement; the i-th diagonal entry
    // is weighted by the σ3 marginal (1 ∓ y3)/2 of its column index.
    let diag = class_diagonal(x, class);
    let mut s1 = 0.0;
    for (k, &d) in diag.iter().enumerate() {
        let marginal = if k % 2 == 0 { 1.0 + x.y3 } else { 1.0 - x.y3 };
        s1 -= xlog2_ratio(d, 0.5 * marginal, "conditional entropy S1")?;
    }
    let s2 = 1.0 + entropy_offset(x.x3.hypot(x.t1));
    let s3 = 1.0 + entropy_offset(x.x3.hypot(x.t2));

    let min_s = s1.min(s2).min(s3);
    let classical = 1.0 + f_x3 - min_s;
    let mut discord = mutual - classical;
    if discord < 0.0 && discord > -1e-12 {
        discord = 0.0;
    }
    let internals = DiscordInternals { f_x3, f_y3, lambdas, s1, s2, s3, classical, mutual_information: mutual };
    Ok((discord, internals))
}

/// Diagnostic only: the collapsed single-line discord expression
/// `3 + f(x3) + f(√(x3² + T2²)) + Σ λ log2 λ`, valid only when
/// `min{S1,S2,S3} = S3`. It does not agree with [`quantum_discord_x`] and is
/// not used by any quantifier.
pub fn collapsed_discord_formula(x: &XStateParams) -> Result<f64> {
    let (_, internals) = quantum_discord_x(x)?;
    let sum: f64 = internals.lambdas.iter().map(|&l| xlog2x(l.max(0.0))).sum();
    Ok(3.0 + internals.f_x3 + entropy_offset(x.x3.hypot(x.t2)) + sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{make_family, QubitDensity, StateFamily};

    #[test]
    fn singlet_discord_is_one() {
        let x = StateFamily::Werner(1.0).x_params().unwrap();
        let (d, int) = quantum_discord_x(&x).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
        assert!((int.mutual_information - 2.0).abs() < 1e-12);
        assert!((int.classical - 1.0).abs() < 1e-12);
        // the collapsed expression misses by one bit here
        assert!((collapsed_discord_formula(&x).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn werner_half() {
        let x = StateFamily::Werner(0.5).x_params().unwrap();
        let (d, _) = quantum_discord_x(&x).unwrap();
        let z: f64 = 0.5;
        let expected = (1.0 - z) / 4.0 * (1.0 - z).log2() + (1.0 + 3.0 * z) / 4.0 * (1.0 + 3.0 * z).log2()
            - (1.0 + z) / 2.0 * (1.0 + z).log2();
        assert!((d - expected).abs() < 1e-12);
        assert!((d - 0.262480).abs() < 1e-5);
    }

    #[test]
    fn product_family_member_has_no_discord() {
        let x = StateFamily::PsiMinusMix(0.0).x_params().unwrap();
        assert_eq!(quantum_discord_x(&x).unwrap().0, 0.0);
        let x = StateFamily::VerstraeteMix(0.0).x_params().unwrap();
        assert_eq!(quantum_discord_x(&x).unwrap().0, 0.0);
    }

    #[test]
    fn mutual_information_examples() {
        let a = QubitDensity::from_bloch([0.2, 0.1, 0.5]).unwrap();
        let b = QubitDensity::from_bloch([-0.4, 0.3, 0.0]).unwrap();
        assert!(mutual_information(&DensityMatrix4::product(&a, &b)).unwrap() < 1e-12);
        let singlet = make_family(StateFamily::Werner(1.0)).unwrap();
        assert!((mutual_information(&singlet).unwrap() - 2.0).abs() < 1e-12);
        let w = make_family(StateFamily::Werner(0.5)).unwrap();
        assert!((mutual_information(&w).unwrap() - 0.451205).abs() < 1e-6);
    }

    #[test]
    fn closed_form_mutual_information_matches_spectral() {
        for kind in crate::state::FamilyKind::ALL {
            for i in 0..=10 {
                let fam = kind.with(i as f64 / 10.0);
                let x = fam.x_params().unwrap();
                let (_, int) = quantum_discord_x(&x).unwrap();
                let direct = mutual_information(&make_family(fam).unwrap()).unwrap();
                assert!((int.mutual_information - direct).abs() < 1e-10, "{fam:?}");
            }
        }
    }

    #[test]
    fn class_eigenvalues_match_general_formula() {
        let s = XStateParams::new(0.3, 0.3, 0.2, -0.1, 0.15).unwrap();
        let a = XStateParams::new(0.3, -0.3, 0.2, -0.1, 0.15).unwrap();
        for x in [s, a] {
            let mut c = class_eigenvalues(&x, x.symmetry_class());
            let mut g = x.eigenvalues();
            c.sort_by(f64::total_cmp);
            g.sort_by(f64::total_cmp);
            for (u, v) in c.iter().zip(g) {
                assert!((u - v).abs() < 1e-15);
            }
            let d = class_diagonal(&x, x.symmetry_class());
            for (u, v) in d.iter().zip(x.diagonal()) {
                assert!((u - v).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn unsupported_class() {
        let x = XStateParams::new(0.3, 0.1, 0.1, -0.1, 0.2).unwrap();
        assert!(quantum_discord_x(&x).is_err());
    }
}
