//! Desk-scale coarse geometry: finite graph metrics, free-group boundaries,
//! Morse gauge estimation, triangle centers, cross-ratios, quasi-isometry
//! synthesis from boundary data, and thresholded distance formulas.
//!
//! Everything here is exact. Graphs carry the unit-edge hop metric, so every
//! distance is an integer and every Gromov product a half-integer; free-group
//! models use word arithmetic that stays exact at any depth. Searches that are
//! inherently unbounded (quasi-geodesic enumeration) carry explicit budgets
//! and report whether they were exhaustive.
//!
//! The crate is organized around six areas:
//!
//! - [`metric`]: finite graphs, geodesics, Gromov products, slimness.
//! - [`free_group`]: Cayley balls, eventually periodic boundary points,
//!   products of trees.
//! - [`morse`]: quasi-geodesic enumeration and empirical Morse gauges.
//! - [`centers`]: ideal triangles, center sets, both cross-ratios, small
//!   flips.
//! - [`synthesis`]: building a map between spaces from a boundary map and
//!   measuring its distortion.
//! - [`hhs`]: projection structures, the thresholded distance formula, and
//!   the three-way Morse characterization.
//!
//! See the `examples/` directory for one runnable walkthrough per capability.

pub mod centers;
pub mod free_group;
pub mod half;
pub mod hhs;
pub mod metric;
pub mod morse;
pub mod synthesis;

pub use half::Half;
pub use metric::{DiscretePath, MetricGraph, QgParams};
