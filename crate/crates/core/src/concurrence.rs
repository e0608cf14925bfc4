//! Wootters concurrence, in general and through the X-state shortcut.

use nalgebra::{Matrix4, SVD};
use num_complex::Complex64;

use crate::state::{kron, pauli, DensityMatrix4, XStateParams};

/// Populations this small are round-off from the Bloch parametrisation; the
/// square roots below would amplify them to ~1e-8.
const POPULATION_FLOOR: f64 = 1e-15;

/// X-state concurrence `max{0, 2(|ρ14| - √(ρ22ρ33)), 2(|ρ23| - √(ρ11ρ44))}`.
pub fn concurrence_x(x: &XStateParams) -> f64 {
    let [r11, r22, r33, r44] = x.diagonal().map(|d| if d <= POPULATION_FLOOR { 0.0 } else { d });
    let c1 = 2.0 * (x.rho14().abs() - (r22 * r33).sqrt());
    let c2 = 2.0 * (x.rho23().abs() - (r11 * r44).sqrt());
    c1.max(c2).clamp(0.0, 1.0)
}

fn psd_sqrt(m: &Matrix4<Complex64>) -> Matrix4<Complex64> {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let roots = eig.eigenvalues.map(|l| Complex64::new(l.max(0.0).sqrt(), 0.0));
    let v = &eig.eigenvectors;
    v * Matrix4::from_diagonal(&roots) * v.adjoint()
}

/// Wootters concurrence `max{0, λ1 - λ2 - λ3 - λ4}`.
///
/// The `λᵢ` are the eigenvalues of `√(√ρ ρ̃ √ρ)`, obtained here as the
/// singular values of `√ρ √ρ̃` so that vanishing `λᵢ` are not inflated by
/// taking square roots of round-off.
pub fn concurrence_wootters(rho: &DensityMatrix4) -> f64 {
    let yy = kron(&pauli(2), &pauli(2));
    let sqrt_rho = psd_sqrt(rho.matrix());
    // √ρ̃ = (σy⊗σy) (√ρ)* (σy⊗σy)
    let sqrt_tilde = yy * sqrt_rho.map(|z| z.conj()) * yy;
    let svd = SVD::new(sqrt_rho * sqrt_tilde, false, false);
    let mut lambdas: Vec<f64> = svd.singular_values.iter().copied().collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{make_family, QubitDensity, StateFamily};

    #[test]
    fn singlet_and_mixed() {
        let singlet = make_family(StateFamily::Werner(1.0)).unwrap();
        assert!((concurrence_wootters(&singlet) - 1.0).abs() < 1e-12);
        assert!(concurrence_wootters(&DensityMatrix4::maximally_mixed()).abs() < 1e-12);
        let x = StateFamily::Werner(1.0).x_params().unwrap();
        assert!((concurrence_x(&x) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn werner_threshold() {
        for i in 0..=20 {
            let z = i as f64 / 20.0;
            let x = StateFamily::Werner(z).x_params().unwrap();
            let expected = ((3.0 * z - 1.0) / 2.0).max(0.0);
            assert!((concurrence_x(&x) - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn product_state_has_none() {
        let a = QubitDensity::from_bloch([0.3, 0.4, -0.5]).unwrap();
        let b = QubitDensity::from_bloch([0.0, -0.7, 0.1]).unwrap();
        assert!(concurrence_wootters(&DensityMatrix4::product(&a, &b)) < 1e-12);
    }

    #[test]
    fn symmetric_family_concurrence_is_f() {
        for i in 0..=10 {
            let f = i as f64 / 10.0;
            let rho = make_family(StateFamily::PsiMinusMix(f)).unwrap();
            assert!((concurrence_wootters(&rho) - f).abs() < 1e-12);
            let x = StateFamily::PsiMinusMix(f).x_params().unwrap();
            assert!((concurrence_x(&x) - f).abs() < 1e-12);
        }
    }
}
