use super::{geodesics, GeodesicMode, GraphError, MetricGraph, Vertex};
use crate::half::Half;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gromov product `(x, y)_p = ½(d(x,p) + d(y,p) − d(x,y))`.
pub fn gromov_product(
    g: &MetricGraph,
    x: Vertex,
    y: Vertex,
    p: Vertex,
) -> Result<Half, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    g.check_vertex(p)?;
    let twice =
        i64::from(g.dist(x, p)) + i64::from(g.dist(y, p)) - i64::from(g.dist(x, y));
    Ok(Half::from_twice(twice))
}

/// Hausdorff distance between two nonempty vertex sets:
/// `max(sup_a d(a,B), sup_b d(b,A))`.
pub fn hausdorff_distance(
    g: &MetricGraph,
    a: &[Vertex],
    b: &[Vertex],
) -> Result<u32, GraphError> {
    if a.is_empty() || b.is_empty() {
        return Err(GraphError::EmptyVertexSet);
    }
    for &v in a.iter().chain(b) {
        g.check_vertex(v)?;
    }
    let one = a.iter().map(|&x| g.dist_to_set(x, b)).max().unwrap();
    let two = b.iter().map(|&x| g.dist_to_set(x, a)).max().unwrap();
    Ok(one.max(two))
}

/// Slimness of one geodesic triangle on `(x, y, z)`, maximized over all
/// geodesic choices per side up to `cap` geodesics per pair.
#[derive(Debug, Clone, Copy)]
pub struct TriangleSlimness {
    pub delta: u32,
    /// True if some side's geodesic enumeration hit the cap.
    pub truncated: bool,
}

pub fn triangle_slimness(
    g: &MetricGraph,
    corners: [Vertex; 3],
    cap: usize,
) -> Result<TriangleSlimness, GraphError> {
    let [x, y, z] = corners;
    let gs_xy = geodesics(g, x, y, GeodesicMode::All, cap)?;
    let gs_yz = geodesics(g, y, z, GeodesicMode::All, cap)?;
    let gs_xz = geodesics(g, x, z, GeodesicMode::All, cap)?;
    let truncated = gs_xy.truncated || gs_yz.truncated || gs_xz.truncated;

    let mut delta = 0u32;
    for a in &gs_xy.paths {
        for b in &gs_yz.paths {
            for c in &gs_xz.paths {
                let sides = [a.vertices(), b.vertices(), c.vertices()];
                for i in 0..3 {
                    let mut others: Vec<Vertex> = sides[(i + 1) % 3].to_vec();
                    others.extend_from_slice(sides[(i + 2) % 3]);
                    for &p in sides[i] {
                        delta = delta.max(g.dist_to_set(p, &others));
                    }
                }
            }
        }
    }
    Ok(TriangleSlimness { delta, truncated })
}

/// Which triangles to examine in [`slim_delta`].
#[derive(Debug, Clone, Copy)]
pub enum SlimSample {
    /// All vertex triples (with repetition); exact slim constant.
    All,
    /// `count` seeded random triples.
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct SlimReport {
    pub delta: u32,
    /// Triple realizing the reported constant.
    pub witness: [Vertex; 3],
    /// True if any geodesic enumeration hit the cap.
    pub truncated: bool,
}

/// Least `δ` such that every examined triangle is `δ`-slim. With
/// [`SlimSample::All`] this is the exact slim constant of the graph.
pub fn slim_delta(
    g: &MetricGraph,
    sample: SlimSample,
    cap: usize,
) -> Result<SlimReport, GraphError> {
    let mut report = SlimReport {
        delta: 0,
        witness: [0, 0, 0],
        truncated: false,
    };
    let consider = |g: &MetricGraph, t: [Vertex; 3], report: &mut SlimReport| {
        let s = triangle_slimness(g, t, cap).expect("in-range corners");
        report.truncated |= s.truncated;
        if s.delta > report.delta {
            report.delta = s.delta;
            report.witness = t;
        }
    };
    match sample {
        SlimSample::All => {
            let n = g.vertex_count() as Vertex;
            for x in 0..n {
                for y in x..n {
                    for z in y..n {
                        consider(g, [x, y, z], &mut report);
                    }
                }
            }
        }
        SlimSample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = g.vertex_count() as Vertex;
            for _ in 0..count {
                let t = [
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                ];
                consider(g, t, &mut report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: u32) -> MetricGraph {
        let edges: Vec<(Vertex, Vertex)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        MetricGraph::from_edges(&edges).unwrap()
    }

    fn cycle_graph(n: u32) -> MetricGraph {
        let edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MetricGraph::from_edges(&edges).unwrap()
    }

    #[test]
    fn gromov_product_degenerate_cases() {
        let g = path_graph(6);
        assert_eq!(gromov_product(&g, 2, 4, 2).unwrap(), Half::ZERO);
        assert_eq!(gromov_product(&g, 3, 3, 0).unwrap(), Half::from_int(3));
    }

    #[test]
    fn gromov_product_symmetry() {
        let g = cycle_graph(7);
        for x in 0..7 {
            for y in 0..7 {
                for p in 0..7 {
                    assert_eq!(
                        gromov_product(&g, x, y, p).unwrap(),
                        gromov_product(&g, y, x, p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hausdorff_basics() {
        let g = path_graph(4);
        assert_eq!(hausdorff_distance(&g, &[0, 1], &[0, 1]).unwrap(), 0);
        assert_eq!(hausdorff_distance(&g, &[0], &[3]).unwrap(), 3);
        assert!(hausdorff_distance(&g, &[], &[0]).is_err());
    }

    #[test]
    fn hausdorff_against_brute_force_on_cycle_triangle() {
        let g = cycle_graph(6);
        let side1 = [0u32, 1, 2];
        let side2 = [2u32, 3, 4];
        // Oracle: scan all pairs.
        let sup1 = side1
            .iter()
            .map(|&a| side2.iter().map(|&b| g.dist(a, b)).min().unwrap())
            .max()
            .unwrap();
        let sup2 = side2
            .iter()
            .map(|&b| side1.iter().map(|&a| g.dist(a, b)).min().unwrap())
            .max()
            .unwrap();
        assert_eq!(
            hausdorff_distance(&g, &side1, &side2).unwrap(),
            sup1.max(sup2)
        );
    }

    #[test]
    fn trees_are_zero_slim() {
        let g = path_graph(8);
        let r = slim_delta(&g, SlimSample::All, 1000).unwrap();
        assert_eq!(r.delta, 0);
        assert!(!r.truncated);
    }

    #[test]
    fn single_edge_is_zero_slim() {
        let g = MetricGraph::from_edges(&[(0, 1)]).unwrap();
        assert_eq!(slim_delta(&g, SlimSample::All, 100).unwrap().delta, 0);
    }

    #[test]
    fn cycle_triangle_slimness_is_one() {
        let g = cycle_graph(6);
        let s = triangle_slimness(&g, [0, 2, 4], 1000).unwrap();
        assert_eq!(s.delta, 1);
        assert!(!s.truncated);
    }

    #[test]
    fn chord_makes_tree_strictly_slimmer_than_zero() {
        // Path 0-..-5 plus a chord forming a cycle.
        let mut edges: Vec<(Vertex, Vertex)> = (0..5).map(|i| (i, i + 1)).collect();
        edges.push((0, 5));
        let g = MetricGraph::from_edges(&edges).unwrap();
        assert!(slim_delta(&g, SlimSample::All, 1000).unwrap().delta > 0);
    }
}
