//! Spectral and entropy primitives shared by every quantifier.
//!
//! All entropies are in bits and follow the `0 log 0 = 0` convention.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity tolerance on individual entries.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are treated as round-off and clamped to zero.
pub const PSD_TOL: f64 = 1e-10;

/// `p log2 p`, zero for `p <= 0`.
#[inline]
pub fn xlog2x(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        p * p.log2()
    }
}

/// `a log2(a / b)` with the convention that the term vanishes when `a` does.
///
/// `a` within `tol` of zero (on either side) contributes nothing; a more
/// negative `a`, or a non-positive `b` paired with a positive `a`, is an error.
pub fn xlog2_ratio(a: f64, b: f64, context: &'static str) -> Result<f64> {
    const TOL: f64 = 1e-12;
    if a < -TOL {
        return Err(Error::InvalidLogArgument { context, value: a });
    }
    if a <= TOL {
        return Ok(0.0);
    }
    if b <= 0.0 {
        return Err(Error::InvalidLogArgument { context, value: b });
    }
    Ok(a * (a / b).log2())
}

/// Shannon entropy of a probability vector in bits.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    -probs.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// `½[(1+t)log2(1+t) + (1-t)log2(1-t)]`: the information carried by a pair
/// of unbiased ±1 variables with correlation `t`, i.e. `1 - h((1+t)/2)`.
///
/// Evaluated through `ln_1p` so that small correlations keep full relative
/// precision.
pub fn correlation_information(t: f64) -> f64 {
    let t = t.clamp(-1.0, 1.0);
    let term = |s: f64| {
        let w = 1.0 + s;
        if w <= 0.0 {
            0.0
        } else {
            w * s.ln_1p()
        }
    };
    0.5 * (term(t) + term(-t)) / std::f64::consts::LN_2
}

/// Entropy of a spectrum, clamping round-off negatives.
pub fn entropy_from_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: l });
        }
        s -= xlog2x(l.max(0.0));
    }
    Ok(s)
}

fn check_hermitian<const N: usize>(m: &[[Complex64; N]; N]) -> Result<()> {
    for i in 0..N {
        for j in 0..N {
            let d = (m[i][j] - m[j][i].conj()).norm();
            if !d.is_finite() {
                return Err(Error::NonFinite("matrix entry"));
            }
            if d > HERMITIAN_TOL {
                return Err(Error::NotHermitian { row: i, col: j, deviation: d });
            }
        }
    }
    Ok(())
}

/// Real eigenvalues of a 4x4 Hermitian matrix, in descending order.
pub fn hermitian_eigenvalues(m: &Matrix4<Complex64>) -> Result<[f64; 4]> {
    let rows: [[Complex64; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)]));
    check_hermitian(&rows)?;
    Ok(hermitian_eigenvalues_unchecked(m))
}

pub(crate) fn hermitian_eigenvalues_unchecked(m: &Matrix4<Complex64>) -> [f64; 4] {
    // symmetrize so the solver sees an exactly Hermitian input
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let ev = h.symmetric_eigen().eigenvalues;
    let mut out = [ev[0], ev[1], ev[2], ev[3]];
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Eigenvalues of a 2x2 Hermitian matrix, descending, in closed form.
pub fn hermitian_eigenvalues_2x2(m: &Matrix2<Complex64>) -> Result<[f64; 2]> {
    let rows = [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]];
    check_hermitian(&rows)?;
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let mean = 0.5 * (a + d);
    let r = (0.5 * (a - d)).hypot(m[(0, 1)].norm());
    Ok([mean + r, mean - r])
}

/// Anything with a density-operator spectrum.
pub trait DensityOperator {
    /// Eigenvalues, descending.
    fn spectrum(&self) -> Vec<f64>;

    fn dimension(&self) -> usize;
}

/// Von Neumann entropy `-Σ λ log2 λ` in bits.
pub fn von_neumann_entropy<R: DensityOperator + ?Sized>(rho: &R) -> Result<f64> {
    entropy_from_spectrum(&rho.spectrum())
}
