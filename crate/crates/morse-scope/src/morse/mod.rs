//! Empirical Morse-gauge estimation.
//!
//! A path is `N`-Morse when every `(λ,ε)`-quasi-geodesic with endpoints on it
//! stays within `N(λ,ε)` of it. True gauges are suprema over all parameters
//! and lengths, so a finite machine can only certify lower bounds: the
//! *defect* of a path at `(λ,ε)` is the worst excursion among exhaustively
//! enumerated quasi-geodesics with endpoints on the path, up to a length cap
//! and node budget. Reports carry an `exhaustive` flag; a non-exhaustive
//! defect is a lower bound, never a refutation.

mod defect;
mod enumerate;
mod fellow;
mod gauge;

pub use defect::{morse_defect, DefectError, DefectReport};
pub use enumerate::{collect_quasi_geodesics, enumerate_quasi_geodesics, SearchOutcome};
pub use fellow::{fellow_travel_length, fellow_travel_words, FellowError};
pub use gauge::{morse_gauge_estimate, GaugeEntry, MorseGaugeTable, QGrid};
