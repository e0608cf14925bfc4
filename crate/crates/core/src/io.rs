//! JSON state descriptions.
//!
//! Three forms are accepted:
//!
//! ```json
//! {"matrix": [[{"re": 0.25, "im": 0.0}, ...], ...]}
//! {"bloch": {"x3": 0.1, "y3": 0.1, "T1": -0.5, "T2": -0.5, "T3": 0.2}}
//! {"family": {"kind": "werner", "param": 0.5}}
//! ```

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{make_family, DensityMatrix4, StateFamily, XStateParams};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// Unvalidated canonical X-state parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochSpec {
    pub x3: f64,
    pub y3: f64,
    #[serde(rename = "T1")]
    pub t1: f64,
    #[serde(rename = "T2")]
    pub t2: f64,
    #[serde(rename = "T3")]
    pub t3: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum StateSpec {
    Matrix(Vec<Vec<Entry>>),
    Bloch(BlochSpec),
    Family(StateFamily),
}

impl StateSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds the state, reporting the first violated invariant.
    pub fn to_density(&self) -> Result<DensityMatrix4> {
        match self {
            StateSpec::Matrix(rows) => {
                let cols = rows.iter().map(Vec::len).find(|&n| n != 4).unwrap_or(4);
                if rows.len() != 4 || cols != 4 {
                    return Err(Error::Shape { rows: rows.len(), cols });
                }
                DensityMatrix4::new(Matrix4::from_fn(|r, c| Complex64::new(rows[r][c].re, rows[r][c].im)))
            }
            StateSpec::Bloch(b) => XStateParams::new(b.x3, b.y3, b.t1, b.t2, b.t3)?.density(),
            StateSpec::Family(f) => make_family(*f),
        }
    }

    pub fn from_density(rho: &DensityMatrix4) -> Self {
        let m = rho.matrix();
        StateSpec::Matrix((0..4).map(|r| (0..4).map(|c| Entry { re: m[(r, c)].re, im: m[(r, c)].im }).collect()).collect())
    }
}

pub fn parse_state(json: &str) -> Result<DensityMatrix4> {
    StateSpec::parse(json)?.to_density()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_and_bloch_forms() {
        let a = parse_state(r#"{"family": {"kind": "werner", "param": 0.5}}"#).unwrap();
        let b = parse_state(r#"{"bloch": {"x3": 0, "y3": 0, "T1": -0.5, "T2": -0.5, "T3": -0.5}}"#).unwrap();
        assert!((a.matrix() - b.matrix()).norm() < 1e-15);
    }

    #[test]
    fn matrix_round_trip() {
        let rho = make_family(StateFamily::AraMix(0.3)).unwrap();
        let json = serde_json::to_string(&StateSpec::from_density(&rho)).unwrap();
        assert_eq!(parse_state(&json).unwrap(), rho);
    }

    #[test]
    fn trace_violation_is_named() {
        let json = r#"{"matrix": [
            [{"re": 0.3}, {"re": 0}, {"re": 0}, {"re": 0}],
            [{"re": 0}, {"re": 0.2}, {"re": 0}, {"re": 0}],
            [{"re": 0}, {"re": 0}, {"re": 0.2}, {"re": 0}],
            [{"re": 0}, {"re": 0}, {"re": 0}, {"re": 0.2}]]}"#;
        let err = parse_state(json).unwrap_err();
        assert!(matches!(err, Error::TraceNotUnit { .. }));
        assert!(err.to_string().contains("unit-trace"));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_state("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_state(r#"{"matrix": [[{"re": 1}]]}"#), Err(Error::Shape { .. })));
        assert!(matches!(parse_state(r#"{"family": {"kind": "werner", "param": 1.5}}"#), Err(Error::ParameterOutOfRange { .. })));
        assert!(parse_state(r#"{"bloch": {"x3": 0, "y3": 0, "T1": 1, "T2": 1, "T3": 1}}"#).is_err());
    }
}
