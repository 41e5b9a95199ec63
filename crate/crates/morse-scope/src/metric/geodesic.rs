use super::{DiscretePath, GraphError, MetricGraph, Vertex};

/// How many geodesics to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicMode {
    /// Only the lexicographically least vertex sequence.
    One,
    /// All geodesics, up to the cap.
    All,
}

/// Geodesics between a vertex pair, in lexicographic order.
#[derive(Debug, Clone)]
pub struct GeodesicSet {
    pub paths: Vec<DiscretePath>,
    /// True when enumeration stopped at the cap before exhausting all
    /// geodesics.
    pub truncated: bool,
}

/// Enumerates shortest paths from `u` to `v`.
///
/// Paths are produced in lexicographic order of their vertex sequences; with
/// [`GeodesicMode::One`] only the least one is returned. Hitting the cap is
/// flagged, not fatal.
pub fn geodesics(
    g: &MetricGraph,
    u: Vertex,
    v: Vertex,
    mode: GeodesicMode,
    cap: usize,
) -> Result<GeodesicSet, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (limit, flag_cap) = match mode {
        GeodesicMode::One => (1, false),
        GeodesicMode::All => (cap.max(1), true),
    };
    let mut out = Vec::new();
    let mut stack = vec![u];
    let mut truncated = false;
    descend(g, v, &mut stack, &mut out, limit, flag_cap, &mut truncated);
    Ok(GeodesicSet { paths: out, truncated })
}

fn descend(
    g: &MetricGraph,
    target: Vertex,
    stack: &mut Vec<Vertex>,
    out: &mut Vec<DiscretePath>,
    limit: usize,
    flag_cap: bool,
    truncated: &mut bool,
) {
    if out.len() >= limit {
        return;
    }
    let cur = *stack.last().unwrap();
    if cur == target {
        out.push(DiscretePath::from_raw(stack.clone()));
        return;
    }
    let remaining = g.dist(cur, target);
    // Neighbor lists are sorted, so descent order is lexicographic.
    for &w in g.neighbors(cur) {
        if g.dist(w, target) + 1 == remaining {
            if out.len() >= limit {
                // Every geodesic-direction branch reaches the target, so a
                // skipped branch means at least one geodesic was dropped.
                if flag_cap {
                    *truncated = true;
                }
                return;
            }
            stack.push(w);
            descend(g, target, stack, out, limit, flag_cap, truncated);
            stack.pop();
        }
    }
}
