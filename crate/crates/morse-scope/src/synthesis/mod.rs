//! Building a space map out of a boundary map.
//!
//! Free-group automorphisms are the concrete source of boundary maps here:
//! they act on ends letterwise and are honest quasi-isometries, so every
//! synthesized map has a ground truth to compare against. The synthesis
//! itself only uses boundary data: each point `x` is the 0-center of its
//! translated standard tripod `T_x`, and `f_K(x)` is the least `K`-center of
//! the image triple `(h(a), h(b), h(c))`.

mod agreement;
mod boundary_map;
mod distortion;
mod map;

pub use agreement::{induced_boundary_agreement, AgreementReport, ClaimCount};
pub use boundary_map::{boundary_map_from_endomorphism, injective_on, BoundaryMap, Endomorphism};
pub use distortion::{
    fit_word_map, geodesic_pairs, qi_distortion, quasi_mobius_bound_check, DistortionFit,
    QmBoundCheck,
};
pub use map::{
    ball_domain, image_centers, synthesize_map, synthesized_value, triangle_for_point,
    Assignment, SynthesizedMap,
};

use crate::centers::CenterError;
use crate::free_group::GroupError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthesisError {
    #[error("substitution is not a two-sided automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("bad substitution syntax {0:?}: expected e.g. \"a=a,b=ab\"")]
    BadSubstitution(String),
    #[error("vertex {word:?} needs margin {margin} inside radius {radius}")]
    InsufficientMargin {
        word: String,
        margin: u32,
        radius: u32,
    },
    #[error("model rank {0} too small for a tripod (need ≥ 2)")]
    RankTooSmall(u8),
    #[error("empty center set at K={0} (diagnostic: cannot happen on tree models)")]
    EmptyCenterSet(u32),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("center error: {0}")]
    Center(#[from] CenterError),
}
