//! Branch-and-bound enumeration of `(λ,ε)`-quasi-geodesics.
//!
//! Paths may stall. A prefix is extended only while every index pair in it
//! satisfies both quasi-geodesic bounds, the target is still reachable in the
//! remaining length, and some admissible completion length exists for every
//! prefix point. The search is depth-first with successors in a fixed order
//! (stall first, then neighbors ascending), so the stream order is
//! deterministic.

use crate::metric::{DiscretePath, MetricGraph, QgParams, Vertex};

/// Whether a search saw its whole space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Nodes (prefix extensions) examined.
    pub nodes: u64,
    /// False when the node budget ran out before the space was exhausted.
    pub exhaustive: bool,
}

impl SearchOutcome {
    pub fn merge(self, other: SearchOutcome) -> SearchOutcome {
        SearchOutcome {
            nodes: self.nodes + other.nodes,
            exhaustive: self.exhaustive && other.exhaustive,
        }
    }
}

struct Search<'a, F: FnMut(&[Vertex])> {
    g: &'a MetricGraph,
    target: Vertex,
    q: QgParams,
    maxlen: usize,
    budget: u64,
    nodes: u64,
    exhausted_budget: bool,
    /// Running minimum over prefix indices `i` of `i + λ(d(p[i], v) + ε)`:
    /// no completion may end later than this.
    latest_end: usize,
    path: Vec<Vertex>,
    emit: F,
}

impl<'a, F: FnMut(&[Vertex])> Search<'a, F> {
    fn run(&mut self) {
        let start = self.path[0];
        self.latest_end = self.q.max_gap(self.g.dist(start, self.target)) as usize;
        self.descend();
    }

    fn descend(&mut self) {
        let cur = *self.path.last().unwrap();
        let k = self.path.len() - 1;
        if cur == self.target {
            (self.emit)(&self.path);
        }
        if k == self.maxlen {
            return;
        }
        let saved_latest = self.latest_end;
        // Stall first, then neighbors in id order.
        let stall = [cur];
        let succ = stall.iter().chain(self.g.neighbors(cur).iter());
        for &w in succ {
            if self.exhausted_budget {
                return;
            }
            self.try_extend(w, saved_latest);
        }
        self.latest_end = saved_latest;
    }

    fn try_extend(&mut self, w: Vertex, saved_latest: usize) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted_budget = true;
            return;
        }
        let k = self.path.len(); // index w would get
        // Pairwise quasi-geodesic bounds against every earlier point.
        for (i, &p) in self.path.iter().enumerate() {
            if !self.q.pair_ok((k - i) as u32, self.g.dist(p, w)) {
                return;
            }
        }
        let d_target = self.g.dist(w, self.target);
        // Reachability within the length cap.
        if k + d_target as usize > self.maxlen {
            return;
        }
        // Some admissible completion must exist: the earliest possible end
        // k + d(w, target) may not overshoot any prefix point's window.
        let window = k + self.q.max_gap(d_target) as usize;
        let latest = saved_latest.min(window);
        if k + d_target as usize > latest {
            return;
        }
        self.latest_end = latest;
        self.path.push(w);
        self.descend();
        self.path.pop();
    }
}

/// Streams every `(λ,ε)`-quasi-geodesic from `u` to `v` of length ≤ `maxlen`
/// into `emit`, in deterministic order. Lengths beyond `⌊λ(d(u,v)+ε)⌋` are
/// impossible and the cap is clamped accordingly.
pub fn enumerate_quasi_geodesics<F: FnMut(&[Vertex])>(
    g: &MetricGraph,
    u: Vertex,
    v: Vertex,
    q: QgParams,
    maxlen: u32,
    budget: u64,
    emit: F,
) -> SearchOutcome {
    let clamped = maxlen.min(q.max_gap(g.dist(u, v)));
    let mut search = Search {
        g,
        target: v,
        q,
        maxlen: clamped as usize,
        budget,
        nodes: 0,
        exhausted_budget: false,
        latest_end: 0,
        path: vec![u],
        emit,
    };
    if q.pair_ok(0, 0) && g.dist(u, v) as usize <= search.maxlen {
        search.run();
    }
    SearchOutcome {
        nodes: search.nodes,
        exhaustive: !search.exhausted_budget,
    }
}

/// Materializing wrapper around [`enumerate_quasi_geodesics`].
pub fn collect_quasi_geodesics(
    g: &MetricGraph,
    u: Vertex,
    v: Vertex,
    q: QgParams,
    maxlen: u32,
    budget: u64,
) -> (Vec<DiscretePath>, SearchOutcome) {
    let mut out = Vec::new();
    let outcome = enumerate_quasi_geodesics(g, u, v, q, maxlen, budget, |p| {
        out.push(DiscretePath::from_raw(p.to_vec()));
    });
    (out, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::FreeGroupModel;
    use crate::metric::is_quasi_geodesic;

    #[test]
    fn one_zero_in_a_tree_yields_exactly_the_geodesic() {
        let m = FreeGroupModel::new(2, 3).unwrap();
        let g = m.graph().unwrap();
        let u = m.vertex("ab").unwrap();
        let v = m.vertex("b").unwrap();
        let (paths, outcome) = collect_quasi_geodesics(g, u, v, QgParams::ints(1, 0), 10, 1 << 20);
        assert!(outcome.exhaustive);
        assert_eq!(paths.len(), 1);
        let words: Vec<&str> = paths[0].vertices().iter().map(|&i| m.word(i)).collect();
        assert_eq!(words, vec!["ab", "a", "", "b"]);
    }

    #[test]
    fn loops_at_identity_with_epsilon_two() {
        let m = FreeGroupModel::new(2, 2).unwrap();
        let g = m.graph().unwrap();
        let e = m.vertex("").unwrap();
        let (paths, outcome) = collect_quasi_geodesics(g, e, e, QgParams::ints(1, 2), 4, 1 << 20);
        assert!(outcome.exhaustive);
        let as_words: Vec<Vec<&str>> = paths
            .iter()
            .map(|p| p.vertices().iter().map(|&i| m.word(i)).collect())
            .collect();
        // The trivial path and every one-step detour must be present.
        assert!(as_words.contains(&vec![""]));
        for x in ["a", "A", "b", "B"] {
            assert!(as_words.contains(&vec!["", x, ""]), "missing detour via {x}");
        }
        // Everything emitted really is a (1,2)-quasi-geodesic from e to e.
        for p in &paths {
            assert_eq!(p.first(), e);
            assert_eq!(p.last(), e);
            assert!(is_quasi_geodesic(g, p, QgParams::ints(1, 2)).unwrap().ok);
        }
    }

    #[test]
    fn emitted_paths_match_unpruned_reference_search() {
        // Reference: enumerate all stall-walks of length ≤ maxlen by brute
        // force and filter with the public checker.
        let m = FreeGroupModel::new(2, 2).unwrap();
        let g = m.graph().unwrap();
        let u = m.vertex("a").unwrap();
        let v = m.vertex("b").unwrap();
        let q = QgParams::ints(2, 1);
        let maxlen = 5;

        let mut reference = Vec::new();
        let mut stack = vec![vec![u]];
        while let Some(path) = stack.pop() {
            if *path.last().unwrap() == v
                && is_quasi_geodesic(g, &DiscretePath::from_raw(path.clone()), q)
                    .unwrap()
                    .ok
            {
                reference.push(path.clone());
            }
            if path.len() <= maxlen {
                let cur = *path.last().unwrap();
                for w in std::iter::once(cur).chain(g.neighbors(cur).iter().copied()) {
                    let mut ext = path.clone();
                    ext.push(w);
                    stack.push(ext);
                }
            }
        }
        reference.sort();

        let (paths, outcome) =
            collect_quasi_geodesics(g, u, v, q, maxlen as u32, 1 << 24);
        assert!(outcome.exhaustive);
        let mut got: Vec<Vec<Vertex>> =
            paths.iter().map(|p| p.vertices().to_vec()).collect();
        got.sort();
        assert_eq!(got, reference);
    }

    #[test]
    fn tiny_budget_is_flagged() {
        let m = FreeGroupModel::new(2, 2).unwrap();
        let g = m.graph().unwrap();
        let u = m.vertex("a").unwrap();
        let v = m.vertex("b").unwrap();
        let (_, outcome) = collect_quasi_geodesics(g, u, v, QgParams::ints(2, 2), 6, 1);
        assert!(!outcome.exhaustive);
    }
}
