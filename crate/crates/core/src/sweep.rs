//! Parameter sweeps over the state families and the amplitude-damped Werner
//! state, with CSV output.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channels::werner_ad_closed_form;
use crate::closed_form::{classical_correlations_x, g_functions, laqc_x};
use crate::concurrence::concurrence_x;
use crate::discord::quantum_discord_x;
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::state::{FamilyKind, XStateParams};

/// Slack allowed in the preset inequality checks.
pub const CHECK_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Classical,
    Laqc,
    Discord,
    Concurrence,
    /// `g1 - g±`
    S,
    /// discord minus LAQC
    Sprime,
    Gplus,
    G1,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::Classical,
        Quantity::Laqc,
        Quantity::Discord,
        Quantity::Concurrence,
        Quantity::S,
        Quantity::Sprime,
        Quantity::Gplus,
        Quantity::G1,
    ];

    /// CSV header name.
    pub fn column(self) -> &'static str {
        match self {
            Quantity::Classical => "classical",
            Quantity::Laqc => "laqc",
            Quantity::Discord => "qd",
            Quantity::Concurrence => "concurrence",
            Quantity::S => "S",
            Quantity::Sprime => "Sprime",
            Quantity::Gplus => "gplus",
            Quantity::G1 => "g1",
        }
    }

    fn evaluate(self, x: &XStateParams) -> Result<f64> {
        Ok(match self {
            Quantity::Classical => classical_correlations_x(x)?.0,
            Quantity::Laqc => laqc_x(x)?,
            Quantity::Discord => quantum_discord_x(x)?.0,
            Quantity::Concurrence => concurrence_x(x),
            Quantity::S => {
                let g = g_functions(x)?;
                g.g1 - g.third().ok_or(Error::UnsupportedClass(g.class))?
            }
            Quantity::Sprime => quantum_discord_x(x)?.0 - laqc_x(x)?,
            Quantity::Gplus => {
                let g = g_functions(x)?;
                g.third().ok_or(Error::UnsupportedClass(g.class))?
            }
            Quantity::G1 => g_functions(x)?.g1,
        })
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discord" => Ok(Quantity::Discord),
            _ => Quantity::ALL
                .into_iter()
                .find(|q| q.column().eq_ignore_ascii_case(s))
                .ok_or_else(|| Error::Parse(format!("unknown quantity '{s}'"))),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl SweepAxis {
    pub fn new(min: f64, max: f64, count: usize) -> Self {
        Self { min, max, count }
    }

    pub fn unit(count: usize) -> Self {
        Self::new(0.0, 1.0, count)
    }

    fn validate(&self, name: &'static str) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InvalidSearch(format!("axis {name} needs at least 2 points")));
        }
        for v in [self.min, self.max] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::ParameterOutOfRange { name, value: v });
            }
        }
        if self.min > self.max {
            return Err(Error::InvalidSearch(format!("axis {name} has min > max")));
        }
        Ok(())
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.max
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepDomain {
    /// Werner state under amplitude damping on both qubits; `z` is the outer
    /// axis and `p` the inner one.
    WernerAd { z: SweepAxis, p: SweepAxis },
    Family { family: FamilyKind, param: SweepAxis },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub domain: SweepDomain,
    pub quantities: Vec<Quantity>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl Preset {
    pub const ALL: [Preset; 5] = [Preset::Fig1, Preset::Fig2, Preset::Fig3, Preset::Fig4, Preset::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
        }
    }

    pub fn spec(self) -> SweepSpec {
        let werner_ad = SweepDomain::WernerAd { z: SweepAxis::unit(101), p: SweepAxis::unit(101) };
        let rho_s = SweepDomain::Family { family: FamilyKind::PsiMinusMix, param: SweepAxis::unit(101) };
        let (domain, quantities) = match self {
            Preset::Fig1 => (werner_ad, vec![Quantity::S]),
            Preset::Fig2 => (werner_ad, vec![Quantity::Laqc, Quantity::Discord, Quantity::Concurrence]),
            Preset::Fig3 => (werner_ad, vec![Quantity::Sprime]),
            Preset::Fig4 => (rho_s, vec![Quantity::Gplus, Quantity::G1]),
            Preset::Fig5 => (rho_s, vec![Quantity::Laqc, Quantity::Discord, Quantity::Concurrence]),
        };
        SweepSpec { domain, quantities }
    }

    /// Checks the inequalities each figure is meant to display.
    pub fn verify(self, table: &SweepTable) -> Result<()> {
        let col = |name: &str| table.column_index(name).expect("preset column present");
        let fail = |row: &[f64], what: &str| {
            Error::CheckFailed(format!("{}: {what} violated at {:?}", self.name(), &row[..table.axes]))
        };
        for row in &table.rows {
            match self {
                Preset::Fig1 => {
                    if row[col("S")] < -CHECK_TOL {
                        return Err(fail(row, "S >= 0"));
                    }
                }
                Preset::Fig4 => {
                    if row[col("g1")] - row[col("gplus")] < -CHECK_TOL {
                        return Err(fail(row, "g1 >= gplus"));
                    }
                }
                Preset::Fig5 => {
                    let (l, d, c) = (row[col("laqc")], row[col("qd")], row[col("concurrence")]);
                    if l > d + CHECK_TOL || d > c + CHECK_TOL {
                        return Err(fail(row, "laqc <= qd <= concurrence"));
                    }
                }
                Preset::Fig2 | Preset::Fig3 => {}
            }
        }
        Ok(())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::Parse(format!("unknown preset '{s}'")))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub columns: Vec<String>,
    /// Number of leading axis columns.
    pub axes: usize,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_sig9(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// `printf("%.9g")`.
pub fn format_sig9(v: f64) -> String {
    const DIGITS: i32 = 9;
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.quantities.is_empty() {
            return Err(Error::InvalidSearch("no quantities requested".into()));
        }
        match &self.domain {
            SweepDomain::WernerAd { z, p } => {
                z.validate("z")?;
                p.validate("p")
            }
            SweepDomain::Family { family, param } => param.validate(family.parameter_name()),
        }
    }

    /// Evaluates every grid point; rows are ordered by the outer axis, then
    /// the inner one.
    pub fn run(&self, execution: Execution) -> Result<SweepTable> {
        self.validate()?;
        let (mut columns, points): (Vec<String>, Vec<Vec<f64>>) = match &self.domain {
            SweepDomain::WernerAd { z, p } => (
                vec!["z".into(), "p".into()],
                (0..z.count).flat_map(|i| (0..p.count).map(move |j| vec![z.value(i), p.value(j)])).collect(),
            ),
            SweepDomain::Family { family, param } => {
                (vec![family.parameter_name().into()], (0..param.count).map(|i| vec![param.value(i)]).collect())
            }
        };
        let axes = columns.len();
        columns.extend(self.quantities.iter().map(|q| q.column().to_string()));
        let rows = map_indexed(points.len(), execution, |k| -> Result<Vec<f64>> {
            let point = &points[k];
            let x = match &self.domain {
                SweepDomain::WernerAd { .. } => werner_ad_closed_form(point[0], point[1])?,
                SweepDomain::Family { family, .. } => family.with(point[0]).x_params()?,
            };
            let mut row = point.clone();
            for q in &self.quantities {
                row.push(q.evaluate(&x)?);
            }
            Ok(row)
        });
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(SweepTable { columns, axes, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_formatting() {
        assert_eq!(format_sig9(0.0), "0");
        assert_eq!(format_sig9(1.0), "1");
        assert_eq!(format_sig9(0.5), "0.5");
        assert_eq!(format_sig9(0.1887218755408671), "0.188721876");
        assert_eq!(format_sig9(-2.5e-7), "-2.5e-07");
        assert_eq!(format_sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(format_sig9(123456789012.0), "1.23456789e+11");
        assert_eq!(format_sig9(0.0001), "0.0001");
        assert_eq!(format_sig9(0.99999999999), "1");
    }

    #[test]
    fn presets_pass_their_checks() {
        for preset in Preset::ALL {
            let table = preset.spec().run(Execution::default()).unwrap();
            preset.verify(&table).unwrap();
        }
    }

    #[test]
    fn fig1_shape_and_order() {
        let table = Preset::Fig1.spec().run(Execution::Sequential).unwrap();
        assert_eq!(table.columns, ["z", "p", "S"]);
        assert_eq!(table.rows.len(), 101 * 101);
        assert_eq!(&table.rows[1][..2], &[0.0, 0.01]);
        assert_eq!(&table.rows[101][..2], &[0.01, 0.0]);
        assert_eq!(&table.rows[101 * 101 - 1][..2], &[1.0, 1.0]);
    }

    #[test]
    fn csv_is_deterministic_across_modes() {
        let spec = Preset::Fig2.spec();
        let a = spec.run(Execution::Sequential).unwrap().to_csv();
        let b = spec.run(Execution::Parallel).unwrap().to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with("z,p,laqc,qd,concurrence\n"));
    }

    #[test]
    fn verification_catches_violations() {
        let mut table = Preset::Fig4.spec().run(Execution::Sequential).unwrap();
        table.rows[10][2] = -1.0;
        assert!(matches!(Preset::Fig4.verify(&table), Err(Error::CheckFailed(_))));
    }

    #[test]
    fn invalid_specs() {
        let spec = SweepSpec {
            domain: SweepDomain::Family { family: FamilyKind::Werner, param: SweepAxis::new(0.0, 1.0, 1) },
            quantities: vec![Quantity::Laqc],
        };
        assert!(spec.validate().is_err());
        let spec = SweepSpec {
            domain: SweepDomain::Family { family: FamilyKind::Werner, param: SweepAxis::new(0.0, 1.5, 5) },
            quantities: vec![Quantity::Laqc],
        };
        assert!(matches!(spec.validate(), Err(Error::ParameterOutOfRange { .. })));
        assert_eq!("discord".parse::<Quantity>().unwrap(), Quantity::Discord);
        assert_eq!("Sprime".parse::<Quantity>().unwrap(), Quantity::Sprime);
    }
}
