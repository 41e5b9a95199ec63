//! Exact word-metric models: free-group Cayley balls with boundary points,
//! and products of trees.
//!
//! A [`FreeGroupModel`] materializes the radius-`R` ball of a free group as a
//! word list; the underlying graph (with its all-pairs table) is built lazily
//! because word arithmetic already gives exact distances at any depth — the
//! ball is a finite window onto the infinite tree, not the tree itself.

mod boundary;
mod product;
pub mod words;

pub use boundary::BoundaryPoint;
pub use product::ProductModel;

use crate::metric::{DiscretePath, MetricGraph, Vertex};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};
use thiserror::Error;
use words::{check_word, generator_index, invert, lcp_len, reduce, word_cmp, word_dist};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("unknown letter {0:?}: generators are a..z with uppercase inverses")]
    UnknownLetter(char),
    #[error("letter {letter:?} outside rank {rank}")]
    LetterOutOfRank { letter: char, rank: u8 },
    #[error("rank must be between 1 and 26, got {0}")]
    BadRank(u8),
    #[error("radius must be ≥ 1, got {0}")]
    BadRadius(u32),
    #[error("ball of {vertices} vertices exceeds cap {cap}")]
    BallTooLarge { vertices: usize, cap: usize },
    #[error("word {0:?} is not a vertex of the ball")]
    OutOfBall(String),
    #[error("word {0:?} is not freely reduced")]
    NotReduced(String),
    #[error("boundary period must be nonempty after reduction")]
    EmptyPeriod,
    #[error("bad boundary point syntax {0:?}: expected prefix(period)")]
    BadBoundarySyntax(String),
    #[error("boundary points must be distinct: {0}")]
    EqualBoundaryPoints(BoundaryPoint),
    #[error("truncation depth {depth} exceeds ball radius {radius}")]
    DepthExceedsRadius { depth: u32, radius: u32 },
    #[error("depth {given} too shallow: need at least {required}")]
    InsufficientDepth { given: u32, required: u32 },
    #[error("graph error: {0}")]
    Graph(#[from] crate::metric::GraphError),
}

/// Default cap on materialized ball sizes (vertex count).
pub const DEFAULT_BALL_CAP: usize = 1 << 21;

/// The radius-`R` ball of the rank-`r` free group, with a vertex ↔ reduced
/// word dictionary. Vertex ids are assigned by word length then bytewise
/// order, so id order is the lexicographic tie-break order used everywhere.
pub struct FreeGroupModel {
    rank: u8,
    radius: u32,
    word_list: Vec<String>,
    index: HashMap<String, Vertex>,
    graph: OnceLock<Arc<MetricGraph>>,
}

impl FreeGroupModel {
    /// Builds the ball of all freely reduced words of length ≤ `radius`.
    pub fn new(rank: u8, radius: u32) -> Result<FreeGroupModel, GroupError> {
        Self::with_cap(rank, radius, DEFAULT_BALL_CAP)
    }

    pub fn with_cap(rank: u8, radius: u32, cap: usize) -> Result<FreeGroupModel, GroupError> {
        if rank == 0 || rank > 26 {
            return Err(GroupError::BadRank(rank));
        }
        if radius == 0 {
            return Err(GroupError::BadRadius(radius));
        }
        let expected = ball_size(rank, radius);
        if expected > cap as u128 {
            return Err(GroupError::BallTooLarge {
                vertices: expected.min(usize::MAX as u128) as usize,
                cap,
            });
        }

        let letters = alphabet(rank);
        let mut word_list: Vec<String> = vec![String::new()];
        let mut layer: Vec<String> = vec![String::new()];
        for _ in 0..radius {
            let mut next = Vec::with_capacity(layer.len() * (2 * rank as usize));
            for w in &layer {
                let forbidden = w.bytes().last().map(words::invert_letter);
                for &c in &letters {
                    if Some(c) != forbidden {
                        let mut ext = w.clone();
                        ext.push(c as char);
                        next.push(ext);
                    }
                }
            }
            word_list.extend(next.iter().cloned());
            layer = next;
        }
        debug_assert_eq!(word_list.len() as u128, expected);

        let index = word_list
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as Vertex))
            .collect();
        Ok(FreeGroupModel {
            rank,
            radius,
            word_list,
            index,
            graph: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.word_list.len()
    }

    /// The Cayley-ball graph with its distance table, built on first use.
    pub fn graph(&self) -> Result<&Arc<MetricGraph>, GroupError> {
        if let Some(g) = self.graph.get() {
            return Ok(g);
        }
        let mut edges = Vec::new();
        for (i, w) in self.word_list.iter().enumerate() {
            if !w.is_empty() {
                let parent = &w[..w.len() - 1];
                let p = self.index[parent];
                edges.push((p.min(i as Vertex), p.max(i as Vertex)));
            }
        }
        let graph = MetricGraph::from_edges(&edges)?;
        let _ = self.graph.set(Arc::new(graph));
        Ok(self.graph.get().expect("just set"))
    }

    pub fn word(&self, v: Vertex) -> &str {
        &self.word_list[v as usize]
    }

    pub fn words(&self) -> &[String] {
        &self.word_list
    }

    pub fn vertex(&self, word: &str) -> Result<Vertex, GroupError> {
        self.index
            .get(word)
            .copied()
            .ok_or_else(|| GroupError::OutOfBall(word.to_string()))
    }

    pub fn contains_word(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    /// Exact word-metric distance; valid for any reduced words, in or out of
    /// the ball.
    pub fn dist_words(&self, u: &str, v: &str) -> u32 {
        word_dist(u, v)
    }

    /// Validates a boundary point against this model's alphabet.
    pub fn check_point(&self, p: &BoundaryPoint) -> Result<(), GroupError> {
        check_word(p.prefix(), self.rank)?;
        check_word(p.period(), self.rank)
    }

    /// Left multiplication of an in-ball vertex word; the result must stay in
    /// the ball.
    pub fn translate_word(&self, g: &str, x: &str) -> Result<String, GroupError> {
        check_word(g, self.rank)?;
        let moved = reduce(&format!("{g}{x}"))?;
        if moved.len() as u32 > self.radius {
            return Err(GroupError::OutOfBall(moved));
        }
        Ok(moved)
    }

    /// Left multiplication of a boundary point.
    pub fn translate_point(
        &self,
        g: &str,
        p: &BoundaryPoint,
    ) -> Result<BoundaryPoint, GroupError> {
        check_word(g, self.rank)?;
        self.check_point(p)?;
        p.translate(g)
    }

    /// The tree geodesic between depth-`n` truncations of two distinct ends,
    /// as a word path from `a`'s side to `b`'s side.
    pub fn boundary_geodesic_words(
        &self,
        a: &BoundaryPoint,
        b: &BoundaryPoint,
        n: u32,
    ) -> Result<Vec<String>, GroupError> {
        self.check_point(a)?;
        self.check_point(b)?;
        let branch = a
            .lcp(b)
            .ok_or_else(|| GroupError::EqualBoundaryPoints(a.clone()))?;
        if n < branch + 1 {
            return Err(GroupError::InsufficientDepth {
                given: n,
                required: branch + 1,
            });
        }
        let ta = a.truncate(n);
        let tb = b.truncate(n);
        Ok(tree_path(&ta, &tb))
    }

    /// A geodesic ray truncation from an in-ball vertex toward an end.
    pub fn ray_words(
        &self,
        from: &str,
        a: &BoundaryPoint,
        n: u32,
    ) -> Result<Vec<String>, GroupError> {
        check_word(from, self.rank)?;
        self.check_point(a)?;
        if !words::is_reduced(from) {
            return Err(GroupError::NotReduced(from.to_string()));
        }
        Ok(tree_path(from, &a.truncate(n)))
    }

    /// Maps a word path into ball vertices; every word must be in the ball.
    pub fn path_to_vertices(&self, path: &[String]) -> Result<DiscretePath, GroupError> {
        let mut ids = Vec::with_capacity(path.len());
        for w in path {
            ids.push(self.vertex(w)?);
        }
        Ok(DiscretePath::new(self.graph()?, ids)?)
    }

    /// The standard basis ray `(a)` and its relatives, as parsed points.
    pub fn generator_end(&self, index: u8) -> Result<BoundaryPoint, GroupError> {
        if index >= self.rank {
            return Err(GroupError::BadRank(index));
        }
        let c = (b'a' + index) as char;
        BoundaryPoint::new("", &c.to_string())
    }
}

impl std::fmt::Debug for FreeGroupModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FreeGroupModel(rank {}, radius {}, {} vertices)",
            self.rank,
            self.radius,
            self.word_list.len()
        )
    }
}

/// Geodesic between two reduced words in the ambient tree: down from `u` to
/// the common prefix, then up to `v`.
pub fn tree_path(u: &str, v: &str) -> Vec<String> {
    let l = lcp_len(u, v);
    let mut path = Vec::with_capacity(u.len() + v.len() - 2 * l + 1);
    for k in (l..=u.len()).rev() {
        path.push(u[..k].to_string());
    }
    for k in l + 1..=v.len() {
        path.push(v[..k].to_string());
    }
    path
}

fn alphabet(rank: u8) -> Vec<u8> {
    // Bytewise order: uppercase (inverses) sort before lowercase.
    let mut letters: Vec<u8> = (0..rank)
        .flat_map(|i| [b'A' + i, b'a' + i])
        .collect();
    letters.sort_unstable();
    letters
}

fn ball_size(rank: u8, radius: u32) -> u128 {
    // 1 + 2r·((2r−1)^R − 1)/(2r−2), with the rank-1 line as a special case.
    let r = rank as u128;
    if r == 1 {
        return 2 * radius as u128 + 1;
    }
    let mut total: u128 = 1;
    let mut sphere: u128 = 2 * r;
    for _ in 0..radius {
        total = total.saturating_add(sphere);
        sphere = sphere.saturating_mul(2 * r - 1);
        if total > u128::MAX / 2 {
            return u128::MAX;
        }
    }
    total
}

pub use words::{reduce as reduce_word, word_cmp as word_order};

/// Sorts a word set into the canonical (length, bytewise) order.
pub fn sort_words(words: &mut [String]) {
    words.sort_by(|u, v| word_cmp(u, v));
}

/// Inverse of a reduced word.
pub fn invert_word(w: &str) -> String {
    invert(w)
}

/// Generator letter for a 0-based index.
pub fn generator_letter(index: u8) -> char {
    (b'a' + index) as char
}

/// 0-based generator index of a letter.
pub fn letter_index(c: char) -> u8 {
    generator_index(c as u8)
}
