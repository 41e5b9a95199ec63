//! Does the synthesized map induce the boundary map it came from?
//!
//! Convergence to an end is operationalized through fellow traveling: a
//! sequence of rays converges to `q` when its fellow-travel length with the
//! `q`-ray grows without bound. At each depth `k` along the ray to `q`, the
//! three tripod legs used to define `f(γ(k))` give three end sequences; at
//! least two of them must fellow-travel `q` past `k/2`.

use super::{synthesized_value, triangle_for_point, BoundaryMap, SynthesisError};
use crate::free_group::{tree_path, BoundaryPoint, FreeGroupModel};
use crate::morse::fellow_travel_words;

/// Leg-convergence count at one depth.
#[derive(Debug, Clone, Copy)]
pub struct ClaimCount {
    pub depth: u32,
    /// How many of the three tripod-leg sequences fellow-travel the target
    /// ray strictly past `depth/2`.
    pub converging_legs: usize,
}

#[derive(Debug, Clone)]
pub struct AgreementReport {
    /// `(γ(k), f(γ(k)))` for `k = 0..=n`.
    pub images: Vec<(String, String)>,
    /// Fellow-travel length between the ray toward `h(q)` and the
    /// geodesic-interpolated path through the image points.
    pub agreement_depth: u32,
    /// Per-depth leg counts; the prediction is ≥ 2 everywhere past the
    /// first steps.
    pub claim_counts: Vec<ClaimCount>,
    pub eta: u32,
}

/// Follows the ray to `q` out to depth `n`, synthesizes the image of every
/// ray point, and measures how the image path tracks the ray to `h(q)`.
pub fn induced_boundary_agreement(
    model: &FreeGroupModel,
    h: &BoundaryMap,
    k: u32,
    q: &BoundaryPoint,
    n: u32,
    eta: u32,
) -> Result<AgreementReport, SynthesisError> {
    model.check_point(q)?;
    if n + 2 > model.radius() {
        return Err(SynthesisError::InsufficientMargin {
            word: q.truncate(n),
            margin: 2,
            radius: model.radius(),
        });
    }

    let ray: Vec<String> = (0..=n).map(|t| q.truncate(t)).collect();

    // Image points under the synthesis rule.
    let mut images = Vec::with_capacity(ray.len());
    for x in &ray {
        let fx = synthesized_value(model, h, k, x, 1)?;
        images.push((x.clone(), fx));
    }

    // Interpolate consecutive images by tree geodesics and compare with the
    // ray toward h(q).
    let hq = h.apply_point(q)?;
    let mut image_path: Vec<String> = vec![images[0].1.clone()];
    for pair in images.windows(2) {
        let seg = tree_path(&pair[0].1, &pair[1].1);
        image_path.extend(seg.into_iter().skip(1));
    }
    let target_ray: Vec<String> = (0..=image_path.len() as u32)
        .map(|t| hq.truncate(t))
        .collect();
    let agreement_depth = fellow_travel_words(&target_ray, &image_path, eta)
        .map_err(|_| SynthesisError::EmptyCenterSet(k))?;

    // Claim counts: the three leg sequences of the tripods along the ray.
    let mut claim_counts = Vec::new();
    for depth in 1..=n {
        let x = &ray[depth as usize];
        let legs = triangle_for_point(model, x, k)?;
        let horizon = n.max(depth + 2);
        let q_ray: Vec<String> = (0..=horizon).map(|t| q.truncate(t)).collect();
        let mut converging = 0;
        for leg in &legs {
            if *leg == *q {
                converging += 1;
                continue;
            }
            let leg_ray: Vec<String> = (0..=horizon).map(|t| leg.truncate(t)).collect();
            let ft = fellow_travel_words(&q_ray, &leg_ray, eta)
                .map_err(|_| SynthesisError::EmptyCenterSet(k))?;
            if 2 * ft > depth {
                converging += 1;
            }
        }
        claim_counts.push(ClaimCount {
            depth,
            converging_legs: converging,
        });
    }

    Ok(AgreementReport {
        images,
        agreement_depth,
        claim_counts,
        eta,
    })
}
