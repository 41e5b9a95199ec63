use crate::metric::{DiscretePath, MetricGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FellowError {
    #[error("rays must share their initial vertex")]
    MismatchedBasepoints,
}

/// Largest `n` such that `d(ray1(t), ray2(t)) ≤ eta` for all `t ≤ n`.
///
/// Comparison runs over the common parameter range; rays must start at the
/// same vertex.
pub fn fellow_travel_length(
    g: &MetricGraph,
    ray1: &DiscretePath,
    ray2: &DiscretePath,
    eta: u32,
) -> Result<u32, FellowError> {
    fellow_travel_by(ray1.vertices(), ray2.vertices(), |&u, &v| g.dist(u, v), eta)
}

/// Word-path version for free-group rays.
pub fn fellow_travel_words(
    ray1: &[String],
    ray2: &[String],
    eta: u32,
) -> Result<u32, FellowError> {
    fellow_travel_by(
        ray1,
        ray2,
        |u, v| crate::free_group::words::word_dist(u, v),
        eta,
    )
}

fn fellow_travel_by<T: PartialEq, D: Fn(&T, &T) -> u32>(
    ray1: &[T],
    ray2: &[T],
    dist: D,
    eta: u32,
) -> Result<u32, FellowError> {
    if ray1.is_empty() || ray2.is_empty() || ray1[0] != ray2[0] {
        return Err(FellowError::MismatchedBasepoints);
    }
    let common = ray1.len().min(ray2.len());
    let mut n = 0u32;
    for t in 1..common {
        if dist(&ray1[t], &ray2[t]) <= eta {
            n = t as u32;
        } else {
            break;
        }
    }
    Ok(n)
}
