//! Projection structures and the thresholded distance formula.
//!
//! An [`HhsStructure`] is a projection-oracle shell: a finite partially
//! ordered index set with a unique maximal domain, a target space per domain
//! (a graph, or a declared-bounded space that only contributes its recorded
//! diameter), and a coarsely Lipschitz projection of the base into each
//! target. This is deliberately far short of the full axiom list — it is
//! exactly what the thresholded sum, the three-way Morse characterization,
//! and the boundary cross-ratio comparison consume.

mod characterization;
mod formula;
mod xratio;

pub use characterization::{morse_characterization_check, CharacterizationReport};
pub use formula::{fit_distance_formula, thresholded_sum, DistanceFormulaFit, Threshold};
pub use xratio::{boundary_projection, hhs_cross_ratio, XRatioReport};

use crate::free_group::{FreeGroupModel, GroupError, ProductModel};
use crate::metric::{GraphError, MetricGraph, Vertex};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HhsError {
    #[error("threshold must be ≥ 1, got {0}")]
    BadThreshold(u32),
    #[error("projection of edge ({0}, {1}) moves {2} > Lipschitz constant {3}")]
    NotCoarselyLipschitz(Vertex, Vertex, u32, u32),
    #[error("the maximal domain's target is bounded; no boundary there")]
    BoundedMaximalTarget,
    #[error("operation needs the tree-trivial structure over a free-group model")]
    NotTreeTrivial,
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("center error: {0}")]
    Center(#[from] crate::centers::CenterError),
}

/// Target space of one domain.
#[derive(Clone)]
pub enum DomainTarget {
    /// A genuine graph target with its own metric.
    Graph(Arc<MetricGraph>),
    /// A space recorded only by its diameter; all projections land on a
    /// single point.
    Bounded { diameter: u32 },
}

impl std::fmt::Debug for DomainTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainTarget::Graph(g) => write!(f, "Graph({} vertices)", g.vertex_count()),
            DomainTarget::Bounded { diameter } => write!(f, "Bounded(diam {diameter})"),
        }
    }
}

/// One index-set element: a name, a target, and the projection table
/// (base vertex → target vertex; all zeros for bounded targets).
#[derive(Debug, Clone)]
pub struct Domain {
    pub name: String,
    pub target: DomainTarget,
    pub projection: Vec<Vertex>,
}

impl Domain {
    /// Distance between two projections inside this domain's target.
    pub fn dist(&self, x: Vertex, y: Vertex) -> u32 {
        match &self.target {
            DomainTarget::Graph(g) => {
                g.dist(self.projection[x as usize], self.projection[y as usize])
            }
            DomainTarget::Bounded { .. } => 0,
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self.target, DomainTarget::Bounded { .. })
    }
}

/// Partial order entry: `lesser < greater`.
pub type OrderRelation = (usize, usize);

/// A finite projection structure over a base graph.
pub struct HhsStructure {
    pub base: Arc<MetricGraph>,
    pub domains: Vec<Domain>,
    /// Strict order pairs `(lesser, greater)`; the maximal element dominates
    /// everything else.
    pub order: Vec<OrderRelation>,
    pub maximal: usize,
    pub lipschitz: u32,
}

impl HhsStructure {
    /// Verifies the coarse-Lipschitz invariant on every base edge.
    pub fn verify(&self) -> Result<(), HhsError> {
        for (u, v) in self.base.edges() {
            for d in &self.domains {
                let moved = d.dist(u, v);
                if moved > self.lipschitz {
                    return Err(HhsError::NotCoarselyLipschitz(u, v, moved, self.lipschitz));
                }
            }
        }
        Ok(())
    }

    pub fn maximal_domain(&self) -> &Domain {
        &self.domains[self.maximal]
    }

    /// Domains other than the maximal one.
    pub fn proper_domains(&self) -> impl Iterator<Item = (usize, &Domain)> {
        self.domains
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.maximal)
    }
}

impl std::fmt::Debug for HhsStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "HhsStructure({} domains, maximal {:?})",
            self.domains.len(),
            self.domains[self.maximal].name
        )
    }
}

/// The one-domain structure on a tree: the maximal target is the tree
/// itself and the projection is the identity.
pub fn tree_trivial_structure(model: &FreeGroupModel) -> Result<HhsStructure, HhsError> {
    let g = model.graph()?.clone();
    let n = g.vertex_count();
    let s = HhsStructure {
        base: g.clone(),
        domains: vec![Domain {
            name: "S".to_string(),
            target: DomainTarget::Graph(g),
            projection: (0..n as Vertex).collect(),
        }],
        order: vec![],
        maximal: 0,
        lipschitz: 1,
    };
    s.verify()?;
    Ok(s)
}

/// The product structure: two factor domains below a maximal domain whose
/// target is a point.
pub fn product_structure(p: &ProductModel) -> Result<HhsStructure, HhsError> {
    let base = p.graph().clone();
    let n = base.vertex_count();
    let left = Domain {
        name: "T1".to_string(),
        target: DomainTarget::Graph(p.left().graph()?.clone()),
        projection: (0..n as Vertex).map(|v| p.project_left(v)).collect(),
    };
    let right = Domain {
        name: "T2".to_string(),
        target: DomainTarget::Graph(p.right().graph()?.clone()),
        projection: (0..n as Vertex).map(|v| p.project_right(v)).collect(),
    };
    let top = Domain {
        name: "S".to_string(),
        target: DomainTarget::Bounded { diameter: 0 },
        projection: vec![0; n],
    };
    let s = HhsStructure {
        base,
        domains: vec![left, right, top],
        order: vec![(0, 2), (1, 2)],
        maximal: 2,
        lipschitz: 1,
    };
    s.verify()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_trivial_is_the_identity_projection() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let s = tree_trivial_structure(&m).unwrap();
        assert_eq!(s.domains.len(), 1);
        assert_eq!(s.maximal, 0);
        let d = s.maximal_domain();
        for v in 0..10 {
            assert_eq!(d.projection[v as usize], v);
        }
    }

    #[test]
    fn product_structure_projects_to_factors() {
        let l = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let r = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let p = ProductModel::new(l, r, 1 << 14).unwrap();
        let s = product_structure(&p).unwrap();
        assert_eq!(s.domains.len(), 3);
        assert_eq!(s.maximal, 2);
        // Declared order: T1 < S and T2 < S; T1, T2 incomparable.
        assert_eq!(s.order, vec![(0, 2), (1, 2)]);
        let v = p.vertex_of_words("ab", "b").unwrap();
        let t1 = &s.domains[0];
        assert_eq!(p.left().word(t1.projection[v as usize]), "ab");
        // The maximal target is a point: everything projects together.
        assert!(s.maximal_domain().is_bounded());
    }
}
