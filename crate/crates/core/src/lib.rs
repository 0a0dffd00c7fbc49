//! Exact chromatic polynomials and list-colour functions of hypergraphs.
//!
//! Hypergraphs are antichains of edges on vertices `0..n`. The crate
//! computes `P(H,k)` by inclusion-exclusion and by the reduced expansion over
//! edge sets containing no broken delta-cycle, counts `L`-colourings, finds
//! the exact list-colour minimum at small sizes, and evaluates the per-edge
//! factors and certificates that bound `P(H,L) - P(H,k)` from below.

pub mod bounds;
pub mod budget;
pub mod chromatic;
pub mod deltacycles;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod listcolor;
pub mod random;
pub mod report;

pub use budget::Budget;
pub use chromatic::{chromatic_polynomial_ie, count_proper_colorings, ColoringCount, IntPolynomial};
pub use deltacycles::{
    broken_delta_cycles, chromatic_polynomial_nbc, enumerate_delta_cycles, BrokenDeltaCycle,
    DeltaCycle, Eta, NbFamily,
};
pub use error::{Error, Result};
pub use exact::{LaurentRational, Rational};
pub use hypergraph::{EdgeSet, Hypergraph, StructStats};
pub use listcolor::{
    beta, count_l_colorings, count_l_colorings_nbc, plmin_exact, Assignment, ListColorMin,
};
pub use report::{CertificateReport, Check, Subject};
