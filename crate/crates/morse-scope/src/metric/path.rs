use super::{GraphError, MetricGraph, Vertex};

/// A discrete path: a vertex sequence where consecutive entries are equal or
/// adjacent. The parameter of `vertices[i]` is `i`, so paths move at unit
/// speed up to stalls. Stalls are allowed so that `(λ,ε)`-quasi-geodesics
/// with `ε ≥ 2` are representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiscretePath {
    vertices: Vec<Vertex>,
}

impl DiscretePath {
    /// Validates the step condition against a graph.
    pub fn new(g: &MetricGraph, vertices: Vec<Vertex>) -> Result<DiscretePath, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        for i in 1..vertices.len() {
            let (u, v) = (vertices[i - 1], vertices[i]);
            if u != v && !g.adjacent(u, v) {
                return Err(GraphError::BrokenPath(i));
            }
        }
        Ok(DiscretePath { vertices })
    }

    /// Wraps a sequence that is already known to satisfy the step condition.
    pub(crate) fn from_raw(vertices: Vec<Vertex>) -> DiscretePath {
        debug_assert!(!vertices.is_empty());
        DiscretePath { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of steps, i.e. the final parameter value.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn get(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    /// Subpath between parameters `i ≤ j`, inclusive.
    pub fn segment(&self, i: usize, j: usize) -> DiscretePath {
        DiscretePath::from_raw(self.vertices[i..=j].to_vec())
    }

    pub fn reversed(&self) -> DiscretePath {
        let mut v = self.vertices.clone();
        v.reverse();
        DiscretePath::from_raw(v)
    }
}

impl std::fmt::Debug for DiscretePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl std::fmt::Display for DiscretePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
