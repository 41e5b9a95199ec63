use super::{HhsError, HhsStructure};
use crate::metric::Vertex;
use num_rational::Ratio;

/// Cutoff threshold `σ ≥ 1` for the distance formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold(u32);

impl Threshold {
    pub fn new(sigma: u32) -> Result<Threshold, HhsError> {
        if sigma < 1 {
            return Err(HhsError::BadThreshold(sigma));
        }
        Ok(Threshold(sigma))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `[m]_σ = m` if `m ≥ σ`, else 0.
    pub fn cut(self, m: u32) -> u32 {
        if m >= self.0 {
            m
        } else {
            0
        }
    }
}

/// `Σ_U [d_CU(π_U x, π_U y)]_σ` over all domains.
pub fn thresholded_sum(hhs: &HhsStructure, x: Vertex, y: Vertex, sigma: Threshold) -> u32 {
    hhs.domains.iter().map(|d| sigma.cut(d.dist(x, y))).sum()
}

/// A fitted comparison `d(x,y) ≍^{A,B} Σ` over sampled pairs.
#[derive(Debug, Clone)]
pub struct DistanceFormulaFit {
    /// Least quarter-step `A ≥ 1` with `Σ ≤ A·d` on every sample.
    pub a: Ratio<i64>,
    /// Least additive slack making both bounds hold at `A`, exact.
    pub b: Ratio<i64>,
    /// Pair realizing the additive slack.
    pub worst: Option<(Vertex, Vertex)>,
}

/// Fits `(A, B)` so that `(1/A)·d − B ≤ Σ ≤ A·d + B` on all samples.
pub fn fit_distance_formula(
    hhs: &HhsStructure,
    sigma: Threshold,
    samples: &[(Vertex, Vertex)],
) -> DistanceFormulaFit {
    let quarter = Ratio::new(1i64, 4);
    let evaluated: Vec<(u32, u32, (Vertex, Vertex))> = samples
        .iter()
        .map(|&(x, y)| {
            (
                hhs.base.dist(x, y),
                thresholded_sum(hhs, x, y, sigma),
                (x, y),
            )
        })
        .collect();

    let mut a = Ratio::from_integer(1);
    for &(d, s, _) in &evaluated {
        if d == 0 {
            continue;
        }
        let needed = Ratio::new(i64::from(s), i64::from(d));
        if needed > a {
            a = (needed / quarter).ceil() * quarter;
        }
    }

    let mut b = Ratio::from_integer(0);
    let mut worst = None;
    for &(d, s, pair) in &evaluated {
        let d = Ratio::from_integer(i64::from(d));
        let s = Ratio::from_integer(i64::from(s));
        let slack = (s - a * d).max(d / a - s);
        if slack > b {
            b = slack;
            worst = Some(pair);
        }
    }

    DistanceFormulaFit { a, b, worst }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::{FreeGroupModel, ProductModel};
    use crate::hhs::{product_structure, tree_trivial_structure};
    use std::sync::Arc;

    fn small_product() -> (ProductModel, HhsStructure) {
        let l = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let r = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let p = ProductModel::new(l, r, 1 << 14).unwrap();
        let s = product_structure(&p).unwrap();
        (p, s)
    }

    #[test]
    fn tree_trivial_sum_is_the_cut_distance() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let s = tree_trivial_structure(&m).unwrap();
        let sigma = Threshold::new(1).unwrap();
        let u = m.vertex("ab").unwrap();
        let v = m.vertex("b").unwrap();
        assert_eq!(thresholded_sum(&s, u, v, sigma), s.base.dist(u, v));
        assert_eq!(thresholded_sum(&s, u, u, sigma), 0);
    }

    #[test]
    fn product_sum_recovers_l1_distance_at_sigma_one() {
        let (p, s) = small_product();
        let sigma = Threshold::new(1).unwrap();
        let x = p.vertex_of_words("", "").unwrap();
        let y = p.vertex_of_words("aa", "bb").unwrap();
        assert_eq!(thresholded_sum(&s, x, y, sigma), 4);
        // All pairs: the S-domain contributes 0 and the factors partition
        // the distance exactly.
        for x in 0..s.base.vertex_count() as Vertex {
            for y in 0..s.base.vertex_count() as Vertex {
                assert_eq!(thresholded_sum(&s, x, y, sigma), s.base.dist(x, y));
            }
        }
    }

    #[test]
    fn high_threshold_cuts_small_coordinates() {
        let (p, s) = small_product();
        let sigma = Threshold::new(3).unwrap();
        let x = p.vertex_of_words("", "").unwrap();
        let y = p.vertex_of_words("a", "bb").unwrap();
        // Both factor distances (1 and 2) fall below σ = 3.
        assert_eq!(thresholded_sum(&s, x, y, sigma), 0);
        assert_eq!(s.base.dist(x, y), 3);
    }

    #[test]
    fn cutoff_is_monotone_in_sigma() {
        let (_, s) = small_product();
        for x in [0u32, 5, 17] {
            for y in [1u32, 9, 23] {
                let mut prev = u32::MAX;
                for sig in 1..=4 {
                    let v = thresholded_sum(&s, x, y, Threshold::new(sig).unwrap());
                    assert!(v <= prev);
                    prev = v;
                }
            }
        }
    }

    #[test]
    fn fit_is_exact_on_the_product_at_sigma_one() {
        let (_, s) = small_product();
        let samples: Vec<(Vertex, Vertex)> = (0..s.base.vertex_count() as Vertex)
            .flat_map(|x| [(x, (x + 7) % s.base.vertex_count() as Vertex), (x, x)])
            .collect();
        let fit = fit_distance_formula(&s, Threshold::new(1).unwrap(), &samples);
        assert_eq!(fit.a, Ratio::from_integer(1));
        assert_eq!(fit.b, Ratio::from_integer(0));
    }

    #[test]
    fn fit_shows_additive_error_at_high_threshold() {
        let (p, s) = small_product();
        let samples = vec![
            (
                p.vertex_of_words("", "").unwrap(),
                p.vertex_of_words("aa", "bb").unwrap(),
            ),
            (
                p.vertex_of_words("", "").unwrap(),
                p.vertex_of_words("a", "b").unwrap(),
            ),
        ];
        let fit = fit_distance_formula(&s, Threshold::new(3).unwrap(), &samples);
        assert_eq!(fit.a, Ratio::from_integer(1));
        // Two cut domains of deficit 2 each.
        assert!(fit.b >= Ratio::from_integer(4));
    }
}
