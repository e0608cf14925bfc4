//! Quantum correlation quantifiers for two-qubit states.
//!
//! Closed forms cover canonical X states whose local Bloch vectors have equal
//! length (symmetric, anti-symmetric and Bell-diagonal): classical
//! correlations, local available quantum correlations (LAQC), quantum discord
//! and concurrence. The [`oracle`] module evaluates the underlying variational
//! definitions by brute-force search for any state and is used to validate the
//! closed forms. [`channels`] provides local Kraus channels and [`sweep`] the
//! parameter sweeps behind the CLI.
//!
//! ```
//! use laqc_core::{laqc_x, make_family, full_report, StateFamily};
//!
//! let x = StateFamily::Werner(1.0).x_params().unwrap();
//! assert!((laqc_x(&x).unwrap() - 1.0).abs() < 1e-12);
//!
//! let report = full_report(&make_family(StateFamily::PsiMinusMix(0.5)).unwrap()).unwrap();
//! assert!(report.laqc < report.discord && report.discord < report.concurrence);
//! ```

pub mod channels;
pub mod closed_form;
pub mod concurrence;
pub mod discord;
pub mod error;
pub mod exec;
pub mod io;
pub mod oracle;
pub mod report;
pub mod spectral;
pub mod state;
pub mod sweep;

pub use channels::{
    amplitude_damping_kraus, apply_channel, depolarizing_kraus, phase_damping_kraus, werner_ad_closed_form,
    ChannelLabel, KrausSet,
};
pub use closed_form::{
    classical_correlations_x, g_functions, laqc_x, laqc_x_with_branch, Branch, GValues, OptimalBasisBranch,
};
pub use concurrence::{concurrence_wootters, concurrence_x};
pub use discord::{mutual_information, quantum_discord_x, DiscordInternals};
pub use error::{Error, Result};
pub use exec::Execution;
pub use oracle::{laqc_numeric, minimize_classical, maximize_complementary, OracleReport, SearchConfig};
pub use report::{full_report, full_report_with, CorrelationReport, Source};
pub use spectral::von_neumann_entropy;
pub use state::{
    bloch_from_density, density_from_bloch, make_family, DensityMatrix4, FamilyKind, FanoBloch, QubitDensity,
    StateFamily, Subsystem, SymmetryClass, XStateParams,
};
