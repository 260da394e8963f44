//! Exact Fourier analysis, projective blocking sets, Delsarte witness
//! bounds, and desk-scale spectral/tiling searches for subsets of Z_p^3.
//!
//! Everything that certifies a mathematical statement (zero sets, witness
//! bounds, LP certificates, exclusion thresholds) runs in exact rational
//! or integer arithmetic; floating point appears only on explicitly
//! tolerance-checked cross-validation paths.
//!
//! All public types are immutable values after construction and all
//! operations are pure functions, so everything can be shared and called
//! from multiple threads without coordination.

pub mod bits;
pub mod error;
pub mod fourier;
pub mod group;
pub mod lp;
pub mod prime;
pub mod projective;
pub mod rat;
pub mod sample;
pub mod search;
pub mod surd;
pub mod witness;

pub use error::{Error, Result};
pub use fourier::{check_spectral_pair, GroupFunction, LevelCounts, Value, FLOAT_TOL};
pub use group::{GroupPoint, GroupSet};
pub use lp::{optimize_witness, verify_certificate, LpSolution, LpStatus, WitnessLp};
pub use prime::Prime;
pub use projective::{
    dual_line, enumerate_points, is_blocking, line_through, min_blocking_size_bruteforce,
    minimalize, projectivize, verify_size_bounds, ProjLine, ProjPoint, ProjSet,
};
pub use rat::Rat;
pub use search::{
    analyze_structure, exhaustive_fuglede_check, find_spectrum, is_tile,
    max_difference_avoiding_set, spectrum_of_tile, verify_charspec, verify_tiling, CharspecReport,
    FugledeOptions, FugledeReport, FugledeRow, Outcome, SearchBudget, StructureVerdict, TriState,
};
pub use surd::Surd;
pub use witness::{
    delsarte_bound, is_witness, section5_witness, spectral_exclusion_threshold, tfold_witness,
    BalancedFunction, ExclusionInterval, WitnessReport,
};
