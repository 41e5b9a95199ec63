use super::{BoundaryMap, SynthesisError};
use crate::centers::{center_set, required_depth};
use crate::free_group::{tree_path, words::word_dist, BoundaryPoint, FreeGroupModel};
use num_rational::Ratio;

/// A fitted distortion bound `d_out ≍^{λ̂,ε̂} d_in` over a sample of pairs.
#[derive(Debug, Clone)]
pub struct DistortionFit {
    /// Least quarter-step `λ̂ ≥ 1` at which the multiplicative upper bound
    /// alone holds: `d_out ≤ λ̂ · d_in` on every sample.
    pub lambda: Ratio<i64>,
    /// Least additive slack making both bounds hold at `λ̂`, exact.
    pub epsilon: Ratio<i64>,
    /// A pair violating the upper bound at `λ̂ − 1/4` (with `ε̂`), when
    /// `λ̂ > 1`.
    pub worst: Option<(String, String)>,
}

/// Fits `(λ̂, ε̂)` for a vertex map given as evaluated pairs
/// `((x, x'), (f(x), f(x')))` with word-metric distances on both sides.
pub fn qi_distortion(samples: &[((String, String), (String, String))]) -> DistortionFit {
    let dists: Vec<(u32, u32, &(String, String))> = samples
        .iter()
        .map(|(src, img)| (word_dist(&src.0, &src.1), word_dist(&img.0, &img.1), src))
        .collect();

    // λ̂: smallest quarter multiple with d_out ≤ λ d_in everywhere. Pairs
    // with d_in = 0 have d_out = 0 (maps are functions).
    let quarter = Ratio::new(1i64, 4);
    let mut lambda = Ratio::from_integer(1);
    for &(din, dout, _) in &dists {
        if din == 0 {
            continue;
        }
        // ceil of dout/din to quarter steps
        let needed = Ratio::new(i64::from(dout), i64::from(din));
        if needed > lambda {
            let steps = (needed / quarter).ceil();
            lambda = steps * quarter;
        }
    }

    // ε̂ at λ̂: max over both directions of the exact violation.
    let mut epsilon = Ratio::from_integer(0);
    for &(din, dout, _) in &dists {
        let din = Ratio::from_integer(i64::from(din));
        let dout = Ratio::from_integer(i64::from(dout));
        let upper = dout - lambda * din;
        let lower = din / lambda - dout;
        epsilon = epsilon.max(upper).max(lower);
    }

    // Witness against the next-smaller grid point.
    let worst = if lambda > Ratio::from_integer(1) {
        let smaller = lambda - quarter;
        dists
            .iter()
            .filter(|&&(din, dout, _)| {
                Ratio::from_integer(i64::from(dout))
                    > smaller * Ratio::from_integer(i64::from(din)) + epsilon
            })
            .max_by_key(|&&(din, dout, _)| {
                (Ratio::from_integer(i64::from(dout))
                    - smaller * Ratio::from_integer(i64::from(din)))
                    * Ratio::from_integer(4)
            })
            .map(|&(_, _, pair)| pair.clone())
    } else {
        None
    };

    DistortionFit {
        lambda,
        epsilon,
        worst,
    }
}

/// Convenience: fit a word map over explicit domain pairs.
pub fn fit_word_map<F: Fn(&str) -> String>(
    f: F,
    pairs: &[(String, String)],
) -> DistortionFit {
    let samples: Vec<((String, String), (String, String))> = pairs
        .iter()
        .map(|(x, y)| ((x.clone(), y.clone()), (f(x), f(y))))
        .collect();
    qi_distortion(&samples)
}

/// One quadruple's check of the cross-ratio transfer bound
/// `[h(a),h(b),h(c),h(d)] ≤ λ̂·[a,b,c,d] + ε̂ + 2M`.
#[derive(Debug, Clone)]
pub struct QmBoundCheck {
    pub source_value: u32,
    pub image_value: u32,
    /// Measured one-sided displacement of each φ-image of a source side from
    /// the corresponding image-triangle side.
    pub displacement: u32,
    /// Center diameter bound `M` at the enlarged tolerance
    /// `K_img = λ̂·K + ε̂ + D`.
    pub m_bound: u32,
    pub k_image: u32,
    pub ok: bool,
}

/// Verifies the transfer bound for one quadruple under a boundary map `h`
/// coming from an automorphism with distortion fit `(λ̂, ε̂)`.
///
/// The image of a source center is within `λ̂·K + ε̂ + D` of every side of
/// the image triangles, where `D` is the measured side displacement; `M`
/// bounds the image center sets at that enlarged tolerance.
pub fn quasi_mobius_bound_check(
    model: &FreeGroupModel,
    h: &BoundaryMap,
    quad: [&BoundaryPoint; 4],
    k: u32,
    lambda: Ratio<i64>,
    epsilon: Ratio<i64>,
) -> Result<QmBoundCheck, SynthesisError> {
    let [a, b, c, d] = quad;
    let n_src = crate::centers::cross_ratio_depth(quad, k)?;
    let source_value = crate::centers::cross_ratio_centers(model, a, b, c, d, k, n_src)?;

    let ha = h.apply_point(a)?;
    let hb = h.apply_point(b)?;
    let hc = h.apply_point(c)?;
    let hd = h.apply_point(d)?;
    let img = [&ha, &hb, &hc, &hd];
    let n_img = crate::centers::cross_ratio_depth(img, k)?;
    let image_value = crate::centers::cross_ratio_centers(model, &ha, &hb, &hc, &hd, k, n_img)?;

    // Displacement D: for each side of T(a,b,c) and T(a,d,c), map the side
    // pointwise through φ and measure how far it strays from the
    // corresponding image side.
    let side_pairs: [(&BoundaryPoint, &BoundaryPoint); 5] =
        [(a, b), (b, c), (a, c), (a, d), (d, c)];
    let mut displacement = 0u32;
    for (p, q) in side_pairs {
        let depth = p.lcp(q).unwrap_or(0) + 4;
        let src_side = model.boundary_geodesic_words(p, q, depth)?;
        let hp = h.apply_point(p)?;
        let hq = h.apply_point(q)?;
        let img_depth = hp.lcp(&hq).unwrap_or(0) + 2 * depth.max(4);
        let img_side = model.boundary_geodesic_words(&hp, &hq, img_depth)?;
        for w in &src_side {
            let moved = h.apply_word(w)?;
            let dist = img_side
                .iter()
                .map(|v| word_dist(&moved, v))
                .min()
                .unwrap_or(u32::MAX);
            displacement = displacement.max(dist);
        }
    }

    // K_img = ⌈λ̂ K + ε̂⌉ + D, M = max center diameter at K_img.
    let lk = lambda * Ratio::from_integer(i64::from(k)) + epsilon;
    let k_image = lk.ceil().to_integer() as u32 + displacement;
    let m1 = {
        let n = required_depth([&ha, &hb, &hc], k_image)?;
        center_set(model, &ha, &hb, &hc, k_image, n)?.diameter
    };
    let m2 = {
        let n = required_depth([&ha, &hd, &hc], k_image)?;
        center_set(model, &ha, &hd, &hc, k_image, n)?.diameter
    };
    let m_bound = m1.max(m2);

    let bound = lambda * Ratio::from_integer(i64::from(source_value))
        + epsilon
        + Ratio::from_integer(2 * i64::from(m_bound));
    let ok = Ratio::from_integer(i64::from(image_value)) <= bound;
    Ok(QmBoundCheck {
        source_value,
        image_value,
        displacement,
        m_bound,
        k_image,
        ok,
    })
}

/// Word pairs along a geodesic used by coarse-Lipschitz style checks.
pub fn geodesic_pairs(u: &str, v: &str) -> Vec<(String, String)> {
    let path = tree_path(u, v);
    path.windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthesis::{boundary_map_from_endomorphism, Endomorphism};

    fn all_pairs(model: &FreeGroupModel, radius: u32) -> Vec<(String, String)> {
        let words: Vec<&String> = model
            .words()
            .iter()
            .filter(|w| w.len() as u32 <= radius)
            .collect();
        let mut out = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                out.push(((*u).clone(), (*v).clone()));
            }
        }
        out
    }

    #[test]
    fn identity_fits_one_zero() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let fit = fit_word_map(|w| w.to_string(), &all_pairs(&m, 3));
        assert_eq!(fit.lambda, Ratio::from_integer(1));
        assert_eq!(fit.epsilon, Ratio::from_integer(0));
        assert!(fit.worst.is_none());
    }

    #[test]
    fn collapse_to_a_point_forces_epsilon_from_below() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let fit = fit_word_map(|_| String::new(), &all_pairs(&m, 3));
        assert_eq!(fit.lambda, Ratio::from_integer(1));
        // Radius-3 ball has pairs at distance 6; the lower bound forces
        // ε ≥ 6 at λ = 1.
        assert!(fit.epsilon >= Ratio::from_integer(6));
    }

    #[test]
    fn shift_automorphism_fits_lambda_two_exactly() {
        let m = FreeGroupModel::new(2, 6).unwrap();
        let phi = Endomorphism::parse("a=a,b=ab").unwrap();
        let fit = fit_word_map(|w| phi.apply(w).unwrap(), &all_pairs(&m, 4));
        assert_eq!(fit.lambda, Ratio::from_integer(2));
        assert_eq!(fit.epsilon, Ratio::from_integer(0));
        assert!(fit.worst.is_some());
    }

    #[test]
    fn transfer_bound_holds_on_the_axis_quadruple() {
        let m = FreeGroupModel::new(2, 6).unwrap();
        let h = boundary_map_from_endomorphism(
            Endomorphism::parse("a=a,b=ab").unwrap(),
            Endomorphism::parse("a=a,b=Ab").unwrap(),
        )
        .unwrap();
        let bp = |s: &str| BoundaryPoint::parse(s).unwrap();
        let (a, b, c, d) = (bp("(a)"), bp("(b)"), bp("(A)"), bp("(B)"));
        let check = quasi_mobius_bound_check(
            &m,
            &h,
            [&a, &b, &c, &d],
            0,
            Ratio::from_integer(2),
            Ratio::from_integer(0),
        )
        .unwrap();
        // Source value 0, image value 1: only the enlarged-K slack covers it.
        assert_eq!(check.source_value, 0);
        assert_eq!(check.image_value, 1);
        assert!(check.m_bound >= 1);
        assert!(check.ok);
    }
}
