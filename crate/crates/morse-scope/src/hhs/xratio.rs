use super::{DomainTarget, HhsError, HhsStructure};
use crate::centers::{center_set, cross_ratio_depth, paulin_cross_ratio, required_depth};
use crate::free_group::{words::word_dist, BoundaryPoint, FreeGroupModel};
use crate::half::Half;

/// Image of an end under the maximal-domain projection.
///
/// Requires an unbounded maximal target. For the tree-trivial structure the
/// projection is the identity on ends.
pub fn boundary_projection(
    hhs: &HhsStructure,
    q: &BoundaryPoint,
) -> Result<BoundaryPoint, HhsError> {
    match hhs.maximal_domain().target {
        DomainTarget::Bounded { .. } => Err(HhsError::BoundedMaximalTarget),
        DomainTarget::Graph(_) => {
            // The only unbounded builtin maximal target is the tree itself
            // with the identity projection.
            if hhs.domains.len() != 1 {
                return Err(HhsError::NotTreeTrivial);
            }
            Ok(q.clone())
        }
    }
}

/// The three quantities of the cross-ratio comparison chain, with pairwise
/// gaps.
#[derive(Debug, Clone)]
pub struct XRatioReport {
    /// Center cross-ratio `[a,b,c,d]` in the base at tolerance `K`.
    pub base_value: u32,
    /// Distance between the chosen centers `x₁ ∈ m(a,b,c)`,
    /// `x₂ ∈ m(a,d,c)`.
    pub center_distance: u32,
    /// `|[π̄(a), π̄(b), π̄(c), π̄(d)]|` in the maximal target (sequence
    /// cross-ratio).
    pub maximal_value: Half,
    pub x1: String,
    pub x2: String,
}

impl XRatioReport {
    /// Pairwise absolute gaps: base vs distance, distance vs maximal,
    /// base vs maximal.
    pub fn gaps(&self) -> [Half; 3] {
        let b = Half::from(self.base_value);
        let d = Half::from(self.center_distance);
        let s = self.maximal_value.abs();
        [(b - d).abs(), (d - s).abs(), (b - s).abs()]
    }
}

/// Compares the center cross-ratio in the base with the sequence
/// cross-ratio downstairs in the maximal domain, through the chosen-center
/// distance in between.
pub fn hhs_cross_ratio(
    model: &FreeGroupModel,
    hhs: &HhsStructure,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    d: &BoundaryPoint,
    k: u32,
    n: u32,
) -> Result<XRatioReport, HhsError> {
    // Validates the structure side; the tree-trivial projection is the
    // identity, so the maximal-value computation happens on the same model.
    boundary_projection(hhs, a)?;

    let quad = [a, b, c, d];
    let depth = cross_ratio_depth(quad, k)?.max(n);
    let first = center_set(model, a, b, c, k, depth.max(required_depth([a, b, c], k)?))?;
    let second = center_set(model, a, d, c, k, depth.max(required_depth([a, d, c], k)?))?;
    let mut union = first.points.clone();
    union.extend(second.points.iter().cloned());
    let base_value = crate::centers::cross_ratio_centers(model, a, b, c, d, k, depth)?;

    let x1 = first.representative().to_string();
    let x2 = second.representative().to_string();
    let center_distance = word_dist(&x1, &x2);

    let pa = boundary_projection(hhs, a)?;
    let pb = boundary_projection(hhs, b)?;
    let pc = boundary_projection(hhs, c)?;
    let pd = boundary_projection(hhs, d)?;
    let maximal_value = paulin_cross_ratio(model, &pa, &pb, &pc, &pd)?;

    Ok(XRatioReport {
        base_value,
        center_distance,
        maximal_value,
        x1,
        x2,
    })
}
