//! Ideal triangles, internal triples, and center sets.
//!
//! For three distinct ends `a, b, c` of a tree the `K`-centers — points
//! within `K` of all three sides of the ideal triangle — form exactly the
//! `K`-ball around the triangle's median, so center sets here are computed by
//! word arithmetic in the ambient tree: the materialized ball is a finite
//! window, not the space. The exhaustive in-ball scan that the definition
//! suggests lives in the test suite as the independent oracle.
//!
//! Center sets are depth-stable: once the truncation depth clears every
//! pairwise branch point by `K + 1`, deepening the sides does not change the
//! result.

mod cross_ratio;
mod flips;

pub use cross_ratio::{
    cross_ratio_centers, cross_ratio_depth, pairing_flip, paulin_cross_ratio,
    quadruple_pairings, small_cross_ratio_check, PairingReport,
};
pub use flips::{check_sequence, flip_path, FlipCase, FlipError, FlipSequence, FlipStep, StepKind};

use crate::free_group::{sort_words, words, BoundaryPoint, FreeGroupModel, GroupError};
use crate::metric::{DiscretePath, GraphError, MetricGraph, QgParams, Vertex};
use crate::morse::enumerate_quasi_geodesics;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CenterError {
    #[error("boundary points must be pairwise distinct (repeated: {0})")]
    RepeatedPoint(BoundaryPoint),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("sides do not form a triangle: corner {0} is not shared by exactly two sides")]
    MalformedTriangle(Vertex),
}

/// An ideal triangle on three distinct ends, with sides truncated at a fixed
/// depth. Sides are word paths `[a↔b, b↔c, a↔c]`.
#[derive(Debug, Clone)]
pub struct IdealTriangle {
    pub vertices: [BoundaryPoint; 3],
    pub depth: u32,
    pub sides: [Vec<String>; 3],
}

impl IdealTriangle {
    pub fn new(
        model: &FreeGroupModel,
        a: &BoundaryPoint,
        b: &BoundaryPoint,
        c: &BoundaryPoint,
        depth: u32,
    ) -> Result<IdealTriangle, CenterError> {
        check_distinct(&[a, b, c])?;
        let sides = [
            model.boundary_geodesic_words(a, b, depth)?,
            model.boundary_geodesic_words(b, c, depth)?,
            model.boundary_geodesic_words(a, c, depth)?,
        ];
        Ok(IdealTriangle {
            vertices: [a.clone(), b.clone(), c.clone()],
            depth,
            sides,
        })
    }

    /// The sides as in-ball vertex paths; requires `depth ≤` model radius.
    pub fn sides_in(&self, model: &FreeGroupModel) -> Result<[DiscretePath; 3], CenterError> {
        Ok([
            model.path_to_vertices(&self.sides[0])?,
            model.path_to_vertices(&self.sides[1])?,
            model.path_to_vertices(&self.sides[2])?,
        ])
    }
}

pub(crate) fn check_distinct(points: &[&BoundaryPoint]) -> Result<(), CenterError> {
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if p == q {
                return Err(CenterError::RepeatedPoint((*p).clone()));
            }
        }
    }
    Ok(())
}

/// The set of `K`-centers of an ideal triangle, with its exact diameter.
#[derive(Debug, Clone)]
pub struct CenterSet {
    pub k: u32,
    /// Center points as reduced words, in (length, bytewise) order.
    pub points: Vec<String>,
    pub diameter: u32,
    /// False only when a capped quasi-geodesic enumeration was cut short.
    pub exhaustive: bool,
}

impl CenterSet {
    /// The designated representative: the least point in word order.
    pub fn representative(&self) -> &str {
        &self.points[0]
    }

    fn from_points(k: u32, mut points: Vec<String>, exhaustive: bool) -> CenterSet {
        sort_words(&mut points);
        points.dedup();
        let diameter = diameter_of(&points);
        CenterSet {
            k,
            points,
            diameter,
            exhaustive,
        }
    }
}

pub(crate) fn diameter_of(points: &[String]) -> u32 {
    let mut d = 0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(words::word_dist(p, q));
        }
    }
    d
}

/// Depth needed for a depth-stable center computation at tolerance `k`.
pub fn required_depth(points: [&BoundaryPoint; 3], k: u32) -> Result<u32, CenterError> {
    check_distinct(&points)?;
    let [a, b, c] = points;
    let branch = a
        .lcp(b)
        .max(b.lcp(c))
        .max(a.lcp(c))
        .expect("distinct points have finite branch depths");
    Ok(branch + k + 1)
}

/// `K`-centers of the ideal triangle on `(a, b, c)`: every point of the
/// ambient tree within `K` of all three sides truncated at depth `n`.
///
/// Exact and depth-stable for `n ≥` [`required_depth`].
pub fn center_set(
    model: &FreeGroupModel,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    k: u32,
    n: u32,
) -> Result<CenterSet, CenterError> {
    model.check_point(a)?;
    model.check_point(b)?;
    model.check_point(c)?;
    let required = required_depth([a, b, c], k)?;
    if n < required {
        return Err(GroupError::InsufficientDepth { given: n, required }.into());
    }
    let tri = IdealTriangle::new(model, a, b, c, n)?;
    let candidates = neighborhood_of_path(&tri.sides[0], k, model.rank());
    let points: Vec<String> = candidates
        .into_iter()
        .filter(|x| tri.sides.iter().all(|side| dist_to_words(x, side) <= k))
        .collect();
    Ok(CenterSet::from_points(k, points, true))
}

/// `K`-centers where each side ranges over enumerated `(1, 20·δ̂)`
/// quasi-geodesics between the truncation endpoints, inside the model ball.
///
/// With `δ̂ = 0` the quasi-geodesics are exactly the tree geodesics and the
/// result agrees with [`center_set`]. Budget exhaustion is flagged, making
/// the result a possibly-partial subset of the true set.
pub fn center_set_modified(
    model: &FreeGroupModel,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    k: u32,
    n: u32,
    delta_hat: u32,
    budget: u64,
) -> Result<CenterSet, CenterError> {
    model.check_point(a)?;
    model.check_point(b)?;
    model.check_point(c)?;
    let required = required_depth([a, b, c], k)?;
    if n < required {
        return Err(GroupError::InsufficientDepth { given: n, required }.into());
    }
    if n > model.radius() {
        return Err(GroupError::DepthExceedsRadius {
            depth: n,
            radius: model.radius(),
        }
        .into());
    }
    let g = model.graph()?.clone();
    let eps = 20 * delta_hat;
    let q = QgParams::ints(1, i64::from(eps));

    let mut exhaustive = true;
    let mut reach: Vec<Vec<u32>> = Vec::with_capacity(3);
    for (p, r) in [(a, b), (b, c), (a, c)] {
        let u = model.vertex(&p.truncate(n))?;
        let v = model.vertex(&r.truncate(n))?;
        let maxlen = g.dist(u, v) + eps;
        let mut union = vec![false; g.vertex_count()];
        let outcome = enumerate_quasi_geodesics(&g, u, v, q, maxlen, budget, |path| {
            for &x in path {
                union[x as usize] = true;
            }
        });
        exhaustive &= outcome.exhaustive;
        reach.push(multi_source_distances(&g, &union));
    }

    let points: Vec<String> = (0..g.vertex_count() as Vertex)
        .filter(|&x| reach.iter().all(|d| d[x as usize] <= k))
        .map(|x| model.word(x).to_string())
        .collect();
    Ok(CenterSet::from_points(k, points, exhaustive))
}

fn multi_source_distances(g: &MetricGraph, sources: &[bool]) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    for (v, &is_src) in sources.iter().enumerate() {
        if is_src {
            dist[v] = 0;
            queue.push_back(v as Vertex);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[u as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All reduced words within `k` of some word on the path, in the ambient
/// rank-`rank` tree.
fn neighborhood_of_path(path: &[String], k: u32, rank: u8) -> Vec<String> {
    let mut seen: BTreeSet<String> = path.iter().cloned().collect();
    let mut frontier: Vec<String> = path.to_vec();
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &frontier {
            for v in word_neighbors(w, rank) {
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn word_neighbors(w: &str, rank: u8) -> Vec<String> {
    let mut out = Vec::with_capacity(2 * rank as usize);
    if !w.is_empty() {
        out.push(w[..w.len() - 1].to_string());
    }
    let forbidden = w.bytes().last().map(words::invert_letter);
    for i in 0..rank {
        for c in [b'a' + i, b'A' + i] {
            if Some(c) != forbidden {
                let mut ext = w.to_string();
                ext.push(c as char);
                out.push(ext);
            }
        }
    }
    out
}

/// Distance from a word to a finite word set.
pub(crate) fn dist_to_words(x: &str, set: &[String]) -> u32 {
    set.iter().map(|w| words::word_dist(x, w)).min().unwrap_or(u32::MAX)
}

/// Looks for one point per side with pairwise distances ≤ `k`.
///
/// Returns the lexicographically least such triple of vertex ids, or `None`
/// when no triple exists at this `k`. The sides must pairwise share their
/// corner vertices.
pub fn internal_triple(
    g: &MetricGraph,
    sides: &[DiscretePath; 3],
    k: u32,
) -> Result<Option<[Vertex; 3]>, CenterError> {
    // Corner check: the six endpoints must pair up into three shared corners.
    let mut corners: Vec<Vertex> = Vec::new();
    for s in sides {
        corners.push(s.first());
        corners.push(s.last());
    }
    corners.sort_unstable();
    for pair in corners.chunks(2) {
        if pair.len() != 2 || pair[0] != pair[1] {
            return Err(CenterError::MalformedTriangle(pair[0]));
        }
    }

    let pools: Vec<Vec<Vertex>> = sides
        .iter()
        .map(|s| {
            let mut v = s.vertices().to_vec();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();

    let mut best: Option<[Vertex; 3]> = None;
    for &p in &pools[0] {
        for &q in &pools[1] {
            if g.dist(p, q) > k {
                continue;
            }
            for &r in &pools[2] {
                if g.dist(p, r) <= k && g.dist(q, r) <= k {
                    let triple = [p, q, r];
                    if best.map_or(true, |b| triple < b) {
                        best = Some(triple);
                    }
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::tree_path;

    fn bp(s: &str) -> BoundaryPoint {
        BoundaryPoint::parse(s).unwrap()
    }

    fn f2(radius: u32) -> FreeGroupModel {
        FreeGroupModel::new(2, radius).unwrap()
    }

    /// Independent oracle: scan every ball vertex against the truncated
    /// sides using graph distances.
    fn center_set_by_ball_scan(
        model: &FreeGroupModel,
        a: &BoundaryPoint,
        b: &BoundaryPoint,
        c: &BoundaryPoint,
        k: u32,
        n: u32,
    ) -> Vec<String> {
        let g = model.graph().unwrap();
        let tri = IdealTriangle::new(model, a, b, c, n).unwrap();
        let sides: Vec<Vec<Vertex>> = tri
            .sides
            .iter()
            .map(|s| s.iter().map(|w| model.vertex(w).unwrap()).collect())
            .collect();
        let mut out = Vec::new();
        for v in 0..model.vertex_count() as Vertex {
            if sides.iter().all(|s| g.dist_to_set(v, s) <= k) {
                out.push(model.word(v).to_string());
            }
        }
        sort_words(&mut out);
        out
    }

    #[test]
    fn tripod_center_is_the_identity() {
        let m = f2(4);
        let s = center_set(&m, &bp("(a)"), &bp("(b)"), &bp("(B)"), 0, 3).unwrap();
        assert_eq!(s.points, vec![""]);
        assert_eq!(s.diameter, 0);
    }

    #[test]
    fn tripod_one_centers_form_the_unit_ball() {
        let m = f2(4);
        let s = center_set(&m, &bp("(a)"), &bp("(b)"), &bp("(B)"), 1, 3).unwrap();
        for w in ["", "a", "b", "B"] {
            assert!(s.points.iter().any(|p| p == w), "missing {w:?}");
        }
        assert_eq!(s.diameter, 2);
        // Matches the exhaustive scan oracle on the radius-4 ball.
        assert_eq!(
            s.points,
            center_set_by_ball_scan(&m, &bp("(a)"), &bp("(b)"), &bp("(B)"), 1, 3)
        );
    }

    #[test]
    fn word_route_matches_ball_scan_oracle() {
        let m = f2(5);
        let cases = [
            ("(a)", "(b)", "(A)"),
            ("(a)", "aab(B)", "(B)"),
            ("ab(a)", "a(b)", "(B)"),
        ];
        for (a, b, c) in cases {
            for k in 0..=2 {
                let n = required_depth([&bp(a), &bp(b), &bp(c)], k).unwrap().max(4);
                let s = center_set(&m, &bp(a), &bp(b), &bp(c), k, n).unwrap();
                let oracle = center_set_by_ball_scan(&m, &bp(a), &bp(b), &bp(c), k, n);
                assert_eq!(s.points, oracle, "a={a} b={b} c={c} k={k}");
            }
        }
    }

    #[test]
    fn depth_stability() {
        let m = f2(6);
        let (a, b, c) = (bp("ab(a)"), bp("(b)"), bp("aB(A)"));
        let n0 = required_depth([&a, &b, &c], 2).unwrap();
        let s1 = center_set(&m, &a, &b, &c, 2, n0).unwrap();
        let s2 = center_set(&m, &a, &b, &c, 2, n0 + 2).unwrap();
        assert_eq!(s1.points, s2.points);
        assert!(center_set(&m, &a, &b, &c, 2, n0 - 1).is_err());
    }

    #[test]
    fn modified_with_zero_delta_matches_plain() {
        let m = f2(5);
        let (a, b, c) = (bp("(a)"), bp("(b)"), bp("(B)"));
        let plain = center_set(&m, &a, &b, &c, 1, 4).unwrap();
        let modified = center_set_modified(&m, &a, &b, &c, 1, 4, 0, 1 << 22).unwrap();
        assert!(modified.exhaustive);
        assert_eq!(plain.points, modified.points);
    }

    #[test]
    fn repeated_points_are_rejected() {
        let m = f2(4);
        assert!(matches!(
            center_set(&m, &bp("(a)"), &bp("(a)"), &bp("(b)"), 0, 3),
            Err(CenterError::RepeatedPoint(_))
        ));
    }

    #[test]
    fn tripod_internal_triple_at_zero() {
        let m = f2(4);
        let tri = IdealTriangle::new(&m, &bp("(a)"), &bp("(b)"), &bp("(B)"), 3).unwrap();
        let sides = tri.sides_in(&m).unwrap();
        let g = m.graph().unwrap();
        let t = internal_triple(g, &sides, 0).unwrap().unwrap();
        let e = m.vertex("").unwrap();
        assert_eq!(t, [e, e, e]);
        // A large K still returns the least triple.
        let t_loose = internal_triple(g, &sides, 10).unwrap().unwrap();
        assert!(t_loose <= t);
    }

    #[test]
    fn cycle_triangle_internal_triple() {
        use crate::metric::{geodesics, GeodesicMode};
        let edges: Vec<(Vertex, Vertex)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = MetricGraph::from_edges(&edges).unwrap();
        let side = |u, v| {
            geodesics(&g, u, v, GeodesicMode::One, 10)
                .unwrap()
                .paths
                .remove(0)
        };
        let sides = [side(0, 2), side(2, 4), side(0, 4)];

        // Oracle: brute force over all side-point triples, reporting the
        // least K admitting one.
        let mut least_k = u32::MAX;
        for &p in sides[0].vertices() {
            for &q in sides[1].vertices() {
                for &r in sides[2].vertices() {
                    let spread = g.dist(p, q).max(g.dist(p, r)).max(g.dist(q, r));
                    least_k = least_k.min(spread);
                }
            }
        }
        assert_eq!(least_k, 2, "C6 triangle (0,2,4) first admits a triple at K=2");

        assert!(internal_triple(&g, &sides, 0).unwrap().is_none());
        assert!(internal_triple(&g, &sides, 1).unwrap().is_none());
        let t = internal_triple(&g, &sides, 2).unwrap().unwrap();
        for (i, &p) in t.iter().enumerate() {
            for &q in &t[i + 1..] {
                assert!(g.dist(p, q) <= 2);
            }
        }
        // Lexicographic tie-break: (0, 2, 0) is the least qualifying triple.
        assert_eq!(t, [0, 2, 0]);
    }

    #[test]
    fn malformed_triangle_is_rejected() {
        let m = f2(3);
        let g = m.graph().unwrap();
        let p = |u: &str, v: &str| m.path_to_vertices(&tree_path(u, v)).unwrap();
        let sides = [p("a", "b"), p("b", "B"), p("a", "bb")];
        assert!(matches!(
            internal_triple(g, &sides, 1),
            Err(CenterError::MalformedTriangle(_))
        ));
    }

    #[test]
    fn bounded_centers_diameter_at_most_two_k() {
        // Exhaustive over a small family of triples and K ≤ 2.
        let m = f2(6);
        let pts = ["(a)", "(b)", "(A)", "(B)", "ab(a)", "a(B)", "b(a)"];
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for l in j + 1..pts.len() {
                    let (a, b, c) = (bp(pts[i]), bp(pts[j]), bp(pts[l]));
                    for k in 0..=2u32 {
                        let n = required_depth([&a, &b, &c], k).unwrap();
                        let s = center_set(&m, &a, &b, &c, k, n).unwrap();
                        assert!(!s.points.is_empty());
                        assert!(
                            s.diameter <= 2 * k,
                            "diam {} > 2K for ({},{},{}) at K={k}",
                            s.diameter,
                            pts[i],
                            pts[j],
                            pts[l]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn equivariance_under_translation() {
        let m = f2(6);
        let (a, b, c) = (bp("(a)"), bp("(b)"), bp("aB(A)"));
        let g = "ba";
        let (ta, tb, tc) = (
            m.translate_point(g, &a).unwrap(),
            m.translate_point(g, &b).unwrap(),
            m.translate_point(g, &c).unwrap(),
        );
        for k in 0..=1u32 {
            let n = required_depth([&a, &b, &c], k).unwrap();
            let tn = required_depth([&ta, &tb, &tc], k).unwrap();
            let s = center_set(&m, &a, &b, &c, k, n).unwrap();
            let ts = center_set(&m, &ta, &tb, &tc, k, tn).unwrap();
            let mut moved: Vec<String> = s
                .points
                .iter()
                .map(|w| crate::free_group::reduce_word(&format!("{g}{w}")).unwrap())
                .collect();
            sort_words(&mut moved);
            assert_eq!(moved, ts.points);
        }
    }
}
