use super::{BoundaryMap, SynthesisError};
use crate::centers::{center_set, required_depth, CenterSet};
use crate::free_group::{BoundaryPoint, FreeGroupModel};

/// The ideal triangle assigned to a vertex: the translated standard tripod
/// `(x·(a), x·(b), x·(B))`. The three rays leave `x` in three distinct
/// directions, so `x` is its median and a `K`-center for every `K ≥ 0`.
pub fn triangle_for_point(
    model: &FreeGroupModel,
    x: &str,
    _k: u32,
) -> Result<[BoundaryPoint; 3], SynthesisError> {
    if model.rank() < 2 {
        return Err(SynthesisError::RankTooSmall(model.rank()));
    }
    if x.len() as u32 + 2 > model.radius() {
        return Err(SynthesisError::InsufficientMargin {
            word: x.to_string(),
            margin: 2,
            radius: model.radius(),
        });
    }
    let legs = [
        model.generator_end(0)?,                 // (a)
        model.generator_end(1)?,                 // (b)
        BoundaryPoint::new("", "B").map_err(SynthesisError::Group)?, // (B)
    ];
    Ok([
        model.translate_point(x, &legs[0])?,
        model.translate_point(x, &legs[1])?,
        model.translate_point(x, &legs[2])?,
    ])
}

/// One synthesized value: the source vertex, its tripod, the image triple,
/// and the chosen center.
#[derive(Debug, Clone)]
pub struct Assignment {
    pub x: String,
    pub triple: [BoundaryPoint; 3],
    pub image_triple: [BoundaryPoint; 3],
    pub fx: String,
}

/// A map between spaces assembled from a boundary map by sending `K`-centers
/// to `K`-centers, pinned at the basepoints.
#[derive(Debug, Clone)]
pub struct SynthesizedMap {
    pub k: u32,
    pub basepoint: (String, String),
    pub assignments: Vec<Assignment>,
}

impl SynthesizedMap {
    pub fn value(&self, x: &str) -> Option<&str> {
        if x == self.basepoint.0 {
            return Some(&self.basepoint.1);
        }
        self.assignments
            .iter()
            .find(|a| a.x == x)
            .map(|a| a.fx.as_str())
    }
}

/// Image center set of one vertex's tripod under `h`, with an automatically
/// chosen stable depth.
pub fn image_centers(
    model: &FreeGroupModel,
    h: &BoundaryMap,
    x: &str,
    k: u32,
    min_depth: u32,
) -> Result<(CenterSet, [BoundaryPoint; 3], [BoundaryPoint; 3]), SynthesisError> {
    let triple = triangle_for_point(model, x, k)?;
    let image: [BoundaryPoint; 3] = [
        h.apply_point(&triple[0])?,
        h.apply_point(&triple[1])?,
        h.apply_point(&triple[2])?,
    ];
    let depth = required_depth([&image[0], &image[1], &image[2]], k)?.max(min_depth);
    let centers = center_set(model, &image[0], &image[1], &image[2], k, depth)?;
    if centers.points.is_empty() {
        return Err(SynthesisError::EmptyCenterSet(k));
    }
    Ok((centers, triple, image))
}

/// Synthesizes `f_K` over a vertex domain: the basepoint maps to the
/// basepoint, and every other `x` maps to the least `K`-center of the image
/// of its tripod.
pub fn synthesize_map(
    model: &FreeGroupModel,
    h: &BoundaryMap,
    k: u32,
    domain: &[String],
    depth: u32,
) -> Result<SynthesizedMap, SynthesisError> {
    let mut assignments = Vec::with_capacity(domain.len());
    for x in domain {
        if x.is_empty() {
            continue; // basepoint convention: e ↦ e
        }
        let (centers, triple, image) = image_centers(model, h, x, k, depth)?;
        assignments.push(Assignment {
            x: x.clone(),
            triple,
            image_triple: image,
            fx: centers.representative().to_string(),
        });
    }
    Ok(SynthesizedMap {
        k,
        basepoint: (String::new(), String::new()),
        assignments,
    })
}

/// Applies the synthesis rule to one vertex (basepoint pinned).
pub fn synthesized_value(
    model: &FreeGroupModel,
    h: &BoundaryMap,
    k: u32,
    x: &str,
    depth: u32,
) -> Result<String, SynthesisError> {
    if x.is_empty() {
        return Ok(String::new());
    }
    Ok(image_centers(model, h, x, k, depth)?
        .0
        .representative()
        .to_string())
}

/// All ball words of length ≤ `radius`, the usual synthesis domain.
pub fn ball_domain(model: &FreeGroupModel, radius: u32) -> Vec<String> {
    model
        .words()
        .iter()
        .filter(|w| w.len() as u32 <= radius)
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthesis::{boundary_map_from_endomorphism, Endomorphism};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bp(s: &str) -> BoundaryPoint {
        BoundaryPoint::parse(s).unwrap()
    }

    #[test]
    fn standard_tripod_at_the_identity() {
        let m = FreeGroupModel::new(2, 5).unwrap();
        let t = triangle_for_point(&m, "", 0).unwrap();
        assert_eq!(t, [bp("(a)"), bp("(b)"), bp("(B)")]);
        let t = triangle_for_point(&m, "ab", 0).unwrap();
        assert_eq!(t, [bp("ab(a)"), bp("a(b)"), bp("a(B)")]);
        assert!(triangle_for_point(&m, "aaaa", 0).is_err());
    }

    #[test]
    fn every_point_is_the_center_of_its_tripod() {
        let m = FreeGroupModel::new(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let ids: Vec<&String> = m
                .words()
                .iter()
                .filter(|w| w.len() <= 4)
                .collect();
            let x = ids[rng.random_range(0..ids.len())];
            let t = triangle_for_point(&m, x, 0).unwrap();
            let n = required_depth([&t[0], &t[1], &t[2]], 0).unwrap();
            let c = center_set(&m, &t[0], &t[1], &t[2], 0, n).unwrap();
            assert_eq!(c.points, vec![x.clone()], "center of tripod at {x:?}");
        }
    }

    #[test]
    fn identity_synthesis_is_the_identity() {
        let m = FreeGroupModel::new(2, 5).unwrap();
        let h = crate::synthesis::BoundaryMap::identity(2);
        let domain = ball_domain(&m, 3);
        let f = synthesize_map(&m, &h, 0, &domain, 4).unwrap();
        assert_eq!(f.value(""), Some(""));
        for a in &f.assignments {
            assert_eq!(a.fx, a.x);
        }
    }

    #[test]
    fn shift_synthesis_tracks_the_substitution() {
        let m = FreeGroupModel::new(2, 8).unwrap();
        let h = boundary_map_from_endomorphism(
            Endomorphism::parse("a=a,b=ab").unwrap(),
            Endomorphism::parse("a=a,b=Ab").unwrap(),
        )
        .unwrap();
        let domain = ball_domain(&m, 4);
        let f = synthesize_map(&m, &h, 0, &domain, 5).unwrap();
        for a in &f.assignments {
            let phi_x = h.apply_word(&a.x).unwrap();
            let d = m.dist_words(&a.fx, &phi_x);
            assert!(d <= 2, "f({}) = {} vs φ = {} (distance {d})", a.x, a.fx, phi_x);
        }
        // The a-axis is fixed by φ, so images stay within one step of it.
        assert!(m.dist_words(f.value("aaa").unwrap(), "aaa") <= 1);
    }
}
