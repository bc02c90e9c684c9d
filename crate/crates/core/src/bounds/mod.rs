//! Bound formulas, per-instance theorem checks, equality classification and
//! sweeps over families of small sets.

pub mod classify;
pub mod formula;
pub mod report;
pub mod subsets;
pub mod sweep;
pub mod verify;

pub use classify::{classify_equality, classify_window, Classification, ClassSweep, EqualityClass};
pub use formula::{eval_bound, BoundFormula, BoundKind, BoundValue};
pub use report::{write_jsonl, write_text};
pub use sweep::{sweep, RecordPolicy, SweepConfig, SweepDomain, SweepOutcome, SweepSummary};
pub use verify::{
    verify_conjecture, verify_corollary, verify_corollary_coverage, verify_even_c_theorem, verify_l3_theorem,
    verify_odd_l_theorem, verify_torsionfree, Check, VerificationReport, Verdict,
};
