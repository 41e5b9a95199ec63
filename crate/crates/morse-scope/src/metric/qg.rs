use super::{DiscretePath, GraphError, MetricGraph};
use num_rational::Ratio;

/// Quasi-geodesic parameters `(λ, ε)` with `λ ≥ 1`, `ε ≥ 0`, kept as exact
/// rationals. A path `p` satisfies the bounds when for all `i ≤ j`
///
/// ```text
///   (1/λ)|i−j| − ε  ≤  d(p[i], p[j])  ≤  λ|i−j| + ε.
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QgParams {
    lambda: Ratio<i64>,
    epsilon: Ratio<i64>,
}

#[derive(Debug, thiserror::Error)]
pub enum QgParamError {
    #[error("lambda must be ≥ 1, got {0}")]
    LambdaTooSmall(Ratio<i64>),
    #[error("epsilon must be ≥ 0, got {0}")]
    EpsilonNegative(Ratio<i64>),
}

impl QgParams {
    pub fn new(lambda: Ratio<i64>, epsilon: Ratio<i64>) -> Result<QgParams, QgParamError> {
        if lambda < Ratio::from_integer(1) {
            return Err(QgParamError::LambdaTooSmall(lambda));
        }
        if epsilon < Ratio::from_integer(0) {
            return Err(QgParamError::EpsilonNegative(epsilon));
        }
        Ok(QgParams { lambda, epsilon })
    }

    /// Integer parameters; panics if they are out of range.
    pub fn ints(lambda: i64, epsilon: i64) -> QgParams {
        QgParams::new(Ratio::from_integer(lambda), Ratio::from_integer(epsilon))
            .expect("integer quasi-geodesic parameters out of range")
    }

    pub fn lambda(&self) -> Ratio<i64> {
        self.lambda
    }

    pub fn epsilon(&self) -> Ratio<i64> {
        self.epsilon
    }

    /// Upper bound check: `d ≤ λ·gap + ε`, exact.
    #[inline]
    pub fn upper_ok(&self, gap: u32, d: u32) -> bool {
        // d ≤ λn/λd · gap + εn/εd  ⇔  d·λd·εd ≤ λn·gap·εd + εn·λd
        let (ln, ld) = (*self.lambda.numer() as i128, *self.lambda.denom() as i128);
        let (en, ed) = (*self.epsilon.numer() as i128, *self.epsilon.denom() as i128);
        (d as i128) * ld * ed <= ln * (gap as i128) * ed + en * ld
    }

    /// Lower bound check: `(1/λ)·gap − ε ≤ d`, exact.
    #[inline]
    pub fn lower_ok(&self, gap: u32, d: u32) -> bool {
        // gap/λ − ε ≤ d  ⇔  gap·λd·ed ≤ λn·(d·ed + εn·? ) — cross-multiplied:
        // gap·λd·εd ≤ λn·(d·εd + εn)   with λ = λn/λd, ε = εn/εd
        let (ln, ld) = (*self.lambda.numer() as i128, *self.lambda.denom() as i128);
        let (en, ed) = (*self.epsilon.numer() as i128, *self.epsilon.denom() as i128);
        (gap as i128) * ld * ed <= ln * ((d as i128) * ed + en)
    }

    #[inline]
    pub fn pair_ok(&self, gap: u32, d: u32) -> bool {
        self.lower_ok(gap, d) && self.upper_ok(gap, d)
    }

    /// Largest admissible parameter gap between points at distance `d`:
    /// `⌊λ·(d + ε)⌋`, from the lower bound.
    pub fn max_gap(&self, d: u32) -> u32 {
        let (ln, ld) = (*self.lambda.numer() as i128, *self.lambda.denom() as i128);
        let (en, ed) = (*self.epsilon.numer() as i128, *self.epsilon.denom() as i128);
        // ⌊ λn(d·εd + εn) / (λd·εd) ⌋
        let num = ln * ((d as i128) * ed + en);
        let den = ld * ed;
        (num / den).min(u32::MAX as i128) as u32
    }
}

impl std::fmt::Debug for QgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lambda, self.epsilon)
    }
}

impl std::fmt::Display for QgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lambda, self.epsilon)
    }
}

/// Result of a quasi-geodesic check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QgCheck {
    pub ok: bool,
    /// First violating index pair in lexicographic order, if any.
    pub violation: Option<(usize, usize)>,
}

/// Checks whether a path satisfies the `(λ,ε)` bounds at every index pair.
pub fn is_quasi_geodesic(
    g: &MetricGraph,
    path: &DiscretePath,
    q: QgParams,
) -> Result<QgCheck, GraphError> {
    for &v in path.vertices() {
        g.check_vertex(v)?;
    }
    let vs = path.vertices();
    for i in 0..vs.len() {
        for j in i..vs.len() {
            let gap = (j - i) as u32;
            let d = g.dist(vs[i], vs[j]);
            if !q.pair_ok(gap, d) {
                return Ok(QgCheck {
                    ok: false,
                    violation: Some((i, j)),
                });
            }
        }
    }
    Ok(QgCheck { ok: true, violation: None })
}
