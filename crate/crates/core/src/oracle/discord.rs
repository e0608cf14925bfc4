//! Numerical discord: projective measurements on A over the Bloch sphere.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::search::{grid_refine, Axis, Goal};
use super::{bloch_axis, dot, SearchConfig};
use crate::discord::{entropy_offset, mutual_information};
use crate::error::Result;
use crate::spectral::von_neumann_entropy;
use crate::state::{DensityMatrix4, Subsystem};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericDiscord {
    pub discord: f64,
    /// `C_D = S(ρ_B) - min Σ p_k S(ρ_B|k)`.
    pub classical: f64,
    pub mutual_information: f64,
    pub theta: f64,
    pub phi: f64,
    pub evaluations: usize,
}

fn qubit_entropy(r: f64) -> f64 {
    1.0 + entropy_offset(r.min(1.0))
}

/// `D_A` by direct minimisation of the post-measurement conditional entropy.
pub fn discord_numeric(rho: &DensityMatrix4, cfg: &SearchConfig) -> Result<NumericDiscord> {
    cfg.validate()?;
    let fb = rho.to_bloch();
    let conditional = |p: &[f64; 2]| {
        let n = bloch_axis(p[0], p[1]);
        let an = dot(&fb.a, &n);
        let mut tn = [0.0; 3];
        for (k, t) in tn.iter_mut().enumerate() {
            *t = fb.t[0][k] * n[0] + fb.t[1][k] * n[1] + fb.t[2][k] * n[2];
        }
        let mut total = 0.0;
        for s in [1.0, -1.0] {
            let prob = 0.5 * (1.0 + s * an);
            if prob <= 1e-15 {
                continue;
            }
            let r: [f64; 3] = std::array::from_fn(|k| (fb.b[k] + s * tn[k]) / (2.0 * prob));
            total += prob * qubit_entropy(dot(&r, &r).sqrt());
        }
        total
    };
    let axes = [Axis::closed(0.0, PI, cfg.complementary_grid), Axis::periodic(0.0, TAU, cfg.complementary_grid)];
    let outcome = grid_refine(&axes, Goal::Minimize, &cfg.refine_settings(), conditional);
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let mi = mutual_information(rho)?;
    let classical = (s_b - outcome.best.value).max(0.0);
    Ok(NumericDiscord {
        discord: (mi - classical).max(0.0),
        classical,
        mutual_information: mi,
        theta: outcome.best.point[0],
        phi: outcome.best.point[1],
        evaluations: outcome.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discord::quantum_discord_x;
    use crate::state::{make_family, FamilyKind, StateFamily};

    #[test]
    fn werner_half() {
        let rho = make_family(StateFamily::Werner(0.5)).unwrap();
        let d = discord_numeric(&rho, &SearchConfig::default()).unwrap();
        assert!((d.discord - 0.262480).abs() < 1e-5);
    }

    #[test]
    fn closed_form_agrees_on_families() {
        let cfg = SearchConfig::default();
        for kind in FamilyKind::ALL {
            for f in [0.1, 0.4, 0.75, 1.0] {
                let fam = kind.with(f);
                let (closed, _) = quantum_discord_x(&fam.x_params().unwrap()).unwrap();
                let numeric = discord_numeric(&make_family(fam).unwrap(), &cfg).unwrap();
                assert!((closed - numeric.discord).abs() < 1e-8, "{fam:?}: {closed} vs {}", numeric.discord);
            }
        }
    }
}
