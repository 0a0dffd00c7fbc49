//! Exact lower bounds on `P(H,L) - P(H,k)` and the thresholds they imply.

mod analytic;
mod certificates;
mod factor;
mod sandwich;
mod thresholds;

pub use analytic::{counting_lower_bound, edge_curve, edge_curve_slope, f_axw, q_of, slope_root};
pub use certificates::{
    certify_cor31, certify_len0, certify_prn1, certify_th41, check_le35, cor31_from_table,
    exact_chromatic, exact_difference, exact_list_count, prn1_from_table, verify_pp15, DEFAULT_SAMPLES,
};
pub use factor::{
    difference_expansion, f_eta, pp15_from_table, pp15_lower_bound, EdgeFactor, FactorTable,
};
pub use sandwich::{check_lem14, check_pro31, check_pro32, check_sandwich_all, Lem14Verdict};
pub use thresholds::{threshold_bounds, BoundValue, ThresholdBounds};
