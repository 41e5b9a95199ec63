use super::enumerate::{enumerate_quasi_geodesics, SearchOutcome};
use crate::metric::{is_quasi_geodesic, DiscretePath, GraphError, MetricGraph, QgParams, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DefectError {
    #[error("input path is not a ({0}) quasi-geodesic (violation at {1:?})")]
    NotQuasiGeodesic(QgParams, (usize, usize)),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
}

/// Worst excursion found among enumerated quasi-geodesics with endpoints on
/// a path.
#[derive(Debug, Clone)]
pub struct DefectReport {
    pub params: QgParams,
    /// Max over enumerated `(λ,ε)`-quasi-geodesics `β` with endpoints on the
    /// path of `max_t d(β(t), path)`.
    pub defect: u32,
    /// A quasi-geodesic realizing the defect.
    pub witness: DiscretePath,
    /// Search nodes spent.
    pub nodes: u64,
    /// True when the defect is the exact maximum over all stall-paths of
    /// length ≤ `maxlen`.
    pub exhaustive: bool,
}

/// Computes the empirical Morse defect of `path` at `q`.
///
/// Endpoint pairs range over all vertex pairs on the path (including equal
/// endpoints: loops and stalls count). The input must itself satisfy the
/// `(λ,ε)` bounds — geodesics always do.
pub fn morse_defect(
    g: &MetricGraph,
    path: &DiscretePath,
    q: QgParams,
    maxlen: u32,
    budget: u64,
) -> Result<DefectReport, DefectError> {
    let check = is_quasi_geodesic(g, path, q)?;
    if let Some(pair) = check.violation {
        return Err(DefectError::NotQuasiGeodesic(q, pair));
    }

    // Distinct vertices on the path, as an unordered endpoint-pair pool.
    let mut support: Vec<Vertex> = path.vertices().to_vec();
    support.sort_unstable();
    support.dedup();

    let mut report = DefectReport {
        params: q,
        defect: 0,
        witness: DiscretePath::from_raw(vec![path.first()]),
        nodes: 0,
        exhaustive: true,
    };

    let mut remaining = budget;
    for (ai, &u) in support.iter().enumerate() {
        for &v in &support[ai..] {
            let outcome = defect_for_pair(g, path, q, u, v, maxlen, remaining, &mut report);
            remaining = remaining.saturating_sub(outcome.nodes);
            report.nodes += outcome.nodes;
            report.exhaustive &= outcome.exhaustive;
            if remaining == 0 {
                report.exhaustive = false;
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn defect_for_pair(
    g: &MetricGraph,
    path: &DiscretePath,
    q: QgParams,
    u: Vertex,
    v: Vertex,
    maxlen: u32,
    budget: u64,
    report: &mut DefectReport,
) -> SearchOutcome {
    let support = path.vertices();
    enumerate_quasi_geodesics(g, u, v, q, maxlen, budget, |qg| {
        let excursion = qg
            .iter()
            .map(|&x| g.dist_to_set(x, support))
            .max()
            .unwrap_or(0);
        if excursion > report.defect {
            report.defect = excursion;
            report.witness = DiscretePath::from_raw(qg.to_vec());
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::{BoundaryPoint, FreeGroupModel, ProductModel};
    use std::sync::Arc;

    #[test]
    fn tree_geodesic_has_zero_defect_at_one_zero() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let g = m.graph().unwrap();
        let path = m
            .path_to_vertices(&crate::free_group::tree_path("aba", "b"))
            .unwrap();
        let r = morse_defect(g, &path, QgParams::ints(1, 0), 8, 1 << 20).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.defect, 0);
    }

    #[test]
    fn axis_defect_at_one_two_is_one() {
        // Geodesic [A²..a²] on the a-axis; (1,2) allows single-step detours.
        let m = FreeGroupModel::new(2, 4).unwrap();
        let g = m.graph().unwrap();
        let a = BoundaryPoint::parse("(a)").unwrap();
        let ainv = BoundaryPoint::parse("(A)").unwrap();
        let words = m.boundary_geodesic_words(&ainv, &a, 2).unwrap();
        let path = m.path_to_vertices(&words).unwrap();
        let r = morse_defect(g, &path, QgParams::ints(1, 2), 8, 1 << 22).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.defect, 1);
    }

    #[test]
    fn flat_diagonal_defect_grows_with_radius() {
        let diag_defect = |radius: u32| -> u32 {
            let l = Arc::new(FreeGroupModel::new(1, radius).unwrap());
            let r = Arc::new(FreeGroupModel::new(1, radius).unwrap());
            let p = ProductModel::new(l, r, 1 << 16).unwrap();
            let path = p.diagonal().unwrap();
            let rep = morse_defect(p.graph(), &path, QgParams::ints(3, 0), 16, 1 << 26).unwrap();
            assert!(rep.exhaustive);
            rep.defect
        };
        let d2 = diag_defect(2);
        let d3 = diag_defect(3);
        assert!(d2 >= 2, "flat staircases reach distance ≥ 2, got {d2}");
        assert!(d3 > d2, "defect must grow with radius: {d2} vs {d3}");
    }

    #[test]
    fn non_quasi_geodesic_input_is_rejected() {
        let m = FreeGroupModel::new(2, 2).unwrap();
        let g = m.graph().unwrap();
        let e = m.vertex("").unwrap();
        let stall = DiscretePath::new(g, vec![e, e, e]).unwrap();
        assert!(matches!(
            morse_defect(g, &stall, QgParams::ints(1, 0), 4, 1000),
            Err(DefectError::NotQuasiGeodesic(..))
        ));
    }
}
