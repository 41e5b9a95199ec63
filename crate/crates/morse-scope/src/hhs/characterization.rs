use super::{HhsError, HhsStructure};
use crate::metric::{is_quasi_geodesic, DiscretePath, QgParams, Vertex};
use crate::morse::{morse_gauge_estimate, MorseGaugeTable, QGrid};

/// Three-way Morse check of one path against a projection structure.
///
/// The three conditions are: (1) the path's stall-free defect column is
/// bounded; (2) every non-maximal domain sees a bounded projection; (3) the
/// projection to the maximal domain is an `(L,L)`-quasi-geodesic. The
/// booleans must agree on honest inputs; a disagreement under a
/// non-exhaustive search is reported as inconclusive, never as refutation.
#[derive(Debug, Clone)]
pub struct CharacterizationReport {
    /// (1): every `ε = 0` grid cell defect is ≤ the cut.
    pub morse_by_defect: bool,
    /// (2): all proper-domain projection diameters ≤ the cut (vacuously true
    /// with no proper domains).
    pub bounded_projections: bool,
    /// (3): the maximal projection passes the `(L,L)` check.
    pub maximal_quasi_geodesic: bool,
    pub agree: bool,
    /// True when the searches were exhausted; disagreement without
    /// exhaustiveness is inconclusive.
    pub inconclusive: bool,
    pub defect_table: MorseGaugeTable,
    /// Per proper domain: (name, projection diameter).
    pub projection_diameters: Vec<(String, u32)>,
}

impl CharacterizationReport {
    pub fn verdicts(&self) -> [bool; 3] {
        [
            self.morse_by_defect,
            self.bounded_projections,
            self.maximal_quasi_geodesic,
        ]
    }
}

/// Runs the three checks on a base path.
///
/// `b_cut` bounds both the stall-free defect column and the proper-domain
/// projection diameters; `l` sets the `(L,L)` parameters for the maximal
/// projection. The full defect table over `grid` is returned as data.
pub fn morse_characterization_check(
    hhs: &HhsStructure,
    path: &DiscretePath,
    grid: &QGrid,
    b_cut: u32,
    l: i64,
    maxlen: u32,
    budget: u64,
) -> Result<CharacterizationReport, HhsError> {
    for &v in path.vertices() {
        hhs.base.check_vertex(v)?;
    }

    // (1) Defect table on the base.
    let defect_table = morse_gauge_estimate(&hhs.base, path, grid, maxlen, budget)
        .map_err(|e| match e {
            crate::morse::DefectError::Graph(g) => HhsError::Graph(g),
            other => HhsError::Graph(crate::metric::GraphError::Malformed(other.to_string())),
        })?;
    let morse_by_defect = defect_table.epsilon_zero_max() <= b_cut;

    // (2) Projection diameters over proper domains.
    let mut projection_diameters = Vec::new();
    let mut bounded_projections = true;
    for (_, d) in hhs.proper_domains() {
        let verts = path.vertices();
        let mut diam = 0u32;
        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i + 1..] {
                diam = diam.max(d.dist(x, y));
            }
        }
        bounded_projections &= diam <= b_cut;
        projection_diameters.push((d.name.clone(), diam));
    }

    // (3) The projected path in the maximal target.
    let maximal = hhs.maximal_domain();
    let maximal_quasi_geodesic = match &maximal.target {
        super::DomainTarget::Graph(target) => {
            let projected: Vec<Vertex> = path
                .vertices()
                .iter()
                .map(|&v| maximal.projection[v as usize])
                .collect();
            let ppath = DiscretePath::new(target, projected).map_err(HhsError::Graph)?;
            is_quasi_geodesic(target, &ppath, QgParams::ints(l, l))
                .map_err(HhsError::Graph)?
                .ok
        }
        super::DomainTarget::Bounded { .. } => {
            // Constant path in a point target: only the lower bound can
            // fail, exactly when the parameter length exceeds L(0 + L).
            let q = QgParams::ints(l, l);
            (path.len() as u32) <= q.max_gap(0)
        }
    };

    let verdicts = [morse_by_defect, bounded_projections, maximal_quasi_geodesic];
    let agree = verdicts.iter().all(|&v| v) || verdicts.iter().all(|&v| !v);
    let inconclusive = !agree && !defect_table.exhaustive();

    Ok(CharacterizationReport {
        morse_by_defect,
        bounded_projections,
        maximal_quasi_geodesic,
        agree,
        inconclusive,
        defect_table,
        projection_diameters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::{FreeGroupModel, ProductModel};
    use crate::hhs::{product_structure, tree_trivial_structure};
    use std::sync::Arc;

    fn line_product(r: u32) -> (ProductModel, HhsStructure) {
        let l = Arc::new(FreeGroupModel::new(1, r).unwrap());
        let rt = Arc::new(FreeGroupModel::new(1, r).unwrap());
        let p = ProductModel::new(l, rt, 1 << 14).unwrap();
        let s = product_structure(&p).unwrap();
        (p, s)
    }

    #[test]
    fn tree_geodesics_pass_all_three() {
        let m = FreeGroupModel::new(2, 4).unwrap();
        let s = tree_trivial_structure(&m).unwrap();
        let path = m
            .path_to_vertices(&crate::free_group::tree_path("aab", "bb"))
            .unwrap();
        let r = morse_characterization_check(
            &s,
            &path,
            &QGrid::epsilon_zero_column(),
            2,
            2,
            10,
            1 << 22,
        )
        .unwrap();
        assert_eq!(r.verdicts(), [true, true, true]);
        assert!(r.agree);
        assert!(!r.inconclusive);
        assert!(r.projection_diameters.is_empty());
    }

    #[test]
    fn flat_horizontal_fails_all_three() {
        let (p, s) = line_product(3);
        let path = p.horizontal_axis().unwrap();
        let r = morse_characterization_check(
            &s,
            &path,
            &QGrid::epsilon_zero_column(),
            2,
            2,
            12,
            1 << 26,
        )
        .unwrap();
        assert_eq!(r.verdicts(), [false, false, false], "{r:?}");
        assert!(r.agree);
        // The factor projection sweeps the whole axis.
        assert!(r.projection_diameters.iter().any(|(_, d)| *d == 6));
    }

    #[test]
    fn constant_path_is_degenerate_everywhere() {
        let (p, s) = line_product(2);
        let v = p.vertex_of_words("", "").unwrap();
        let path = DiscretePath::new(p.graph(), vec![v]).unwrap();
        let r = morse_characterization_check(
            &s,
            &path,
            &QGrid::epsilon_zero_column(),
            2,
            2,
            6,
            1 << 20,
        )
        .unwrap();
        assert_eq!(r.verdicts(), [true, true, true]);
    }
}
