//! Main terms of the asymptotic formulas for `T_n(ζ)`, `pp(n)` and `A_n(ζ)`,
//! the cosine model for differences between trace classes, and comparison
//! against exact values.

mod main_term;
mod oscillation;
mod report;

pub use main_term::{
    over_main_term, theta12, trace_case, trace_main_term, wright_pp_main_term, MainTermEstimate,
    TraceCase, THETA12_GUARD,
};
pub use oscillation::{
    normalization_sup, oscillation_model, predicted_difference, OscillationModel,
};
pub use report::{ratio_report, RatioRow};
