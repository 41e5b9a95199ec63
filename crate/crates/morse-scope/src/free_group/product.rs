//! ℓ¹ products of two free-group balls.
//!
//! The product of two trees is flat: it has empty Morse boundary and serves
//! as the negative test space for every Morse-flavored check.

use super::{FreeGroupModel, GroupError};
use crate::metric::{DiscretePath, MetricGraph, Vertex};
use std::collections::HashMap;
use std::sync::Arc;

/// Cartesian product of two balls with the sum metric
/// `d((u₁,u₂),(v₁,v₂)) = d(u₁,v₁) + d(u₂,v₂)`.
pub struct ProductModel {
    left: Arc<FreeGroupModel>,
    right: Arc<FreeGroupModel>,
    graph: Arc<MetricGraph>,
    pairs: Vec<(Vertex, Vertex)>,
    index: HashMap<(Vertex, Vertex), Vertex>,
}

impl ProductModel {
    pub fn new(
        left: Arc<FreeGroupModel>,
        right: Arc<FreeGroupModel>,
        cap: usize,
    ) -> Result<ProductModel, GroupError> {
        let n1 = left.vertex_count();
        let n2 = right.vertex_count();
        let total = n1.checked_mul(n2).unwrap_or(usize::MAX);
        if total > cap {
            return Err(GroupError::BallTooLarge { vertices: total, cap });
        }

        // Pair ids in row-major order: (u, x) ↦ u·n2 + x.
        let mut pairs = Vec::with_capacity(total);
        for u in 0..n1 as Vertex {
            for x in 0..n2 as Vertex {
                pairs.push((u, x));
            }
        }
        let index: HashMap<(Vertex, Vertex), Vertex> = pairs
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as Vertex))
            .collect();

        let g1 = left.graph()?;
        let g2 = right.graph()?;
        let mut edges = Vec::new();
        for (i, &(u, x)) in pairs.iter().enumerate() {
            let i = i as Vertex;
            for &v in g1.neighbors(u) {
                let j = index[&(v, x)];
                if i < j {
                    edges.push((i, j));
                }
            }
            for &y in g2.neighbors(x) {
                let j = index[&(u, y)];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        let graph = MetricGraph::from_edges(&edges)?;
        Ok(ProductModel {
            left,
            right,
            graph: Arc::new(graph),
            pairs,
            index,
        })
    }

    pub fn left(&self) -> &Arc<FreeGroupModel> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FreeGroupModel> {
        &self.right
    }

    pub fn graph(&self) -> &Arc<MetricGraph> {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn vertex(&self, u: Vertex, x: Vertex) -> Vertex {
        self.index[&(u, x)]
    }

    pub fn vertex_of_words(&self, u: &str, x: &str) -> Result<Vertex, GroupError> {
        Ok(self.vertex(self.left.vertex(u)?, self.right.vertex(x)?))
    }

    /// Projection to the first factor.
    pub fn project_left(&self, v: Vertex) -> Vertex {
        self.pairs[v as usize].0
    }

    /// Projection to the second factor.
    pub fn project_right(&self, v: Vertex) -> Vertex {
        self.pairs[v as usize].1
    }

    /// The horizontal segment from `(A^R, e)` to `(a^R, e)` — a geodesic in a
    /// flat direction, maximally non-Morse.
    pub fn horizontal_axis(&self) -> Result<DiscretePath, GroupError> {
        let r = self.left.radius() as usize;
        let e2 = self.right.vertex("")?;
        let mut ids = Vec::with_capacity(2 * r + 1);
        for k in (1..=r).rev() {
            let w: String = std::iter::repeat('A').take(k).collect();
            ids.push(self.vertex(self.left.vertex(&w)?, e2));
        }
        ids.push(self.vertex(self.left.vertex("")?, e2));
        for k in 1..=r {
            let w: String = std::iter::repeat('a').take(k).collect();
            ids.push(self.vertex(self.left.vertex(&w)?, e2));
        }
        Ok(DiscretePath::new(&self.graph, ids)?)
    }

    /// The diagonal segment from `(A^R, A'^R)` to `(a^R, a'^R)`.
    pub fn diagonal(&self) -> Result<DiscretePath, GroupError> {
        let r = self.left.radius().min(self.right.radius()) as i64;
        let word = |k: i64| -> String {
            if k >= 0 {
                std::iter::repeat('a').take(k as usize).collect()
            } else {
                std::iter::repeat('A').take((-k) as usize).collect()
            }
        };
        let mut ids = Vec::new();
        // Staircase parameterization: alternate factor steps.
        let mut u = -r;
        let mut x = -r;
        ids.push(self.vertex_of_words(&word(u), &word(x))?);
        while u < r || x < r {
            if u <= x && u < r {
                u += 1;
            } else {
                x += 1;
            }
            ids.push(self.vertex_of_words(&word(u), &word(x))?);
        }
        Ok(DiscretePath::new(&self.graph, ids)?)
    }
}

impl std::fmt::Debug for ProductModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ProductModel({:?} × {:?}, {} vertices)",
            self.left, self.right, self.pairs.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_product(r: u32) -> ProductModel {
        let l = Arc::new(FreeGroupModel::new(1, r).unwrap());
        let rt = Arc::new(FreeGroupModel::new(1, r).unwrap());
        ProductModel::new(l, rt, 1 << 16).unwrap()
    }

    #[test]
    fn metric_is_sum_of_factor_distances() {
        let p = line_product(3);
        let g1 = p.left().graph().unwrap().clone();
        let g2 = p.right().graph().unwrap().clone();
        for v in 0..p.vertex_count() as Vertex {
            for w in 0..p.vertex_count() as Vertex {
                let expected = g1.dist(p.project_left(v), p.project_left(w))
                    + g2.dist(p.project_right(v), p.project_right(w));
                assert_eq!(p.graph().dist(v, w), expected);
            }
        }
    }

    #[test]
    fn rank_two_product_examples() {
        let l = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let r = Arc::new(FreeGroupModel::new(2, 2).unwrap());
        let p = ProductModel::new(l, r, 1 << 16).unwrap();
        let ee = p.vertex_of_words("", "").unwrap();
        let ab = p.vertex_of_words("a", "b").unwrap();
        assert_eq!(p.graph().dist(ee, ab), 2);
        let v = p.vertex_of_words("ab", "b").unwrap();
        assert_eq!(p.left().word(p.project_left(v)), "ab");
        let far = p.vertex_of_words("aa", "bb").unwrap();
        assert_eq!(p.graph().dist(ee, far), 4);
    }

    #[test]
    fn axis_and_diagonal_are_geodesics() {
        use crate::metric::{is_quasi_geodesic, QgParams};
        let p = line_product(3);
        for path in [p.horizontal_axis().unwrap(), p.diagonal().unwrap()] {
            let check = is_quasi_geodesic(p.graph(), &path, QgParams::ints(1, 0)).unwrap();
            assert!(check.ok, "{path:?} should be a geodesic");
        }
        assert_eq!(p.horizontal_axis().unwrap().len(), 6);
        assert_eq!(p.diagonal().unwrap().len(), 12);
    }
}
