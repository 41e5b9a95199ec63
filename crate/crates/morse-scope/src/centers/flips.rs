//! Chaining two triples of ends through small flips.
//!
//! A *small flip* replaces one entry of a triple by a fourth point when the
//! connecting cross-ratio is below the constant `C`. Given triples
//! `V_start` and `V_end`, the chain has at most 5 triples: the first flip
//! brings in `V_end`'s first new point (relabeling `V_start` if a different
//! pairing is the small one), then a two-case analysis finishes. Every flip
//! produced by a pairing check is certified `< C`; the single junction step
//! between the constructed triple and `V_end`'s side is bounded by the
//! separation of the input triples plus `3C`, not by `C`, and is recorded as
//! a carry step.

use super::cross_ratio::cross_ratio_depth;
use super::{center_set, check_distinct, cross_ratio_centers, diameter_of, required_depth, CenterError};
use crate::free_group::{BoundaryPoint, FreeGroupModel};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FlipError {
    #[error("center computation failed: {0}")]
    Center(#[from] CenterError),
    #[error(
        "stuck at {stage}: no pairing below {threshold} (values {values:?}) — the constant is below this configuration's true separation"
    )]
    Stuck {
        stage: &'static str,
        threshold: u32,
        values: Vec<u32>,
        quad: Vec<BoundaryPoint>,
    },
}

/// Which branch of the construction produced the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipCase {
    /// No case analysis needed: equal triples, or an overlap short-circuit.
    Direct,
    /// Some pairing against `V_end`'s far entries was ≥ C.
    Case1,
    /// Both of those pairings were < C.
    Case2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// Certified by a pairing check; value is `< C`.
    SmallFlip,
    /// The junction step; value recorded but bounded by the input
    /// separation, not by `C`.
    Carry,
}

#[derive(Debug, Clone)]
pub struct FlipStep {
    pub value: u32,
    pub kind: StepKind,
}

/// A chain of triples from `V_start` to `V_end` with per-step cross-ratio
/// values. Consecutive triples always share two entries.
#[derive(Debug, Clone)]
pub struct FlipSequence {
    pub triples: Vec<[BoundaryPoint; 3]>,
    pub steps: Vec<FlipStep>,
    pub case: FlipCase,
    /// How `V_start` was relabeled before the first flip, when the small
    /// pairing was not the first one.
    pub start_permutation: Option<[usize; 3]>,
}

impl FlipSequence {
    pub fn small_flip_values(&self) -> impl Iterator<Item = u32> + '_ {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::SmallFlip)
            .map(|s| s.value)
    }
}

fn as_set(t: &[BoundaryPoint; 3]) -> BTreeSet<&BoundaryPoint> {
    t.iter().collect()
}

fn centers_auto(
    model: &FreeGroupModel,
    t: &[BoundaryPoint; 3],
    k: u32,
) -> Result<Vec<String>, CenterError> {
    let n = required_depth([&t[0], &t[1], &t[2]], k)?;
    Ok(center_set(model, &t[0], &t[1], &t[2], k, n)?.points)
}

fn union_diam(
    model: &FreeGroupModel,
    t1: &[BoundaryPoint; 3],
    t2: &[BoundaryPoint; 3],
    k: u32,
) -> Result<u32, CenterError> {
    let mut pts = centers_auto(model, t1, k)?;
    pts.extend(centers_auto(model, t2, k)?);
    Ok(diameter_of(&pts))
}

/// `[x, y, z, t]` with the truncation depth chosen automatically.
fn xr4(
    model: &FreeGroupModel,
    x: &BoundaryPoint,
    y: &BoundaryPoint,
    z: &BoundaryPoint,
    t: &BoundaryPoint,
    k: u32,
) -> Result<u32, CenterError> {
    let n = cross_ratio_depth([x, y, z, t], k)?;
    cross_ratio_centers(model, x, y, z, t, k, n)
}

/// Builds a flip chain from `v_start` to `v_end` with constant `c`.
///
/// Entries are drawn from at most six boundary points. Triples equal as sets
/// give a length-1 chain; triples sharing two entries are joined by one
/// flip. Otherwise the construction relabels `v_start` so its first pairing
/// against `v_end`'s first new point is small, flips that point in, and
/// finishes by the two-case analysis.
pub fn flip_path(
    model: &FreeGroupModel,
    v_start: &[BoundaryPoint; 3],
    v_end: &[BoundaryPoint; 3],
    k: u32,
    c: u32,
) -> Result<FlipSequence, FlipError> {
    check_distinct(&[&v_start[0], &v_start[1], &v_start[2]])?;
    check_distinct(&[&v_end[0], &v_end[1], &v_end[2]])?;
    let start_set = as_set(v_start);
    let end_set = as_set(v_end);
    let shared = start_set.intersection(&end_set).count();

    if shared == 3 {
        return Ok(FlipSequence {
            triples: vec![v_start.clone()],
            steps: vec![],
            case: FlipCase::Direct,
            start_permutation: None,
        });
    }

    if shared == 2 {
        let value = union_diam(model, v_start, v_end, k)?;
        if value >= c {
            return Err(FlipError::Stuck {
                stage: "single flip between overlapping triples",
                threshold: c,
                values: vec![value],
                quad: v_start.iter().chain(v_end.iter()).cloned().collect(),
            });
        }
        return Ok(FlipSequence {
            triples: vec![v_start.clone(), v_end.clone()],
            steps: vec![FlipStep { value, kind: StepKind::SmallFlip }],
            case: FlipCase::Direct,
            start_permutation: None,
        });
    }

    // First new point of v_end, in tuple order.
    let u = v_end
        .iter()
        .find(|p| !start_set.contains(p))
        .expect("shared ≤ 1 leaves a new point")
        .clone();
    let rest: Vec<&BoundaryPoint> = v_end.iter().filter(|p| **p != u).collect();
    let (v, w) = (rest[0].clone(), rest[1].clone());

    // First flip: find the small pairing of (s0, s1, s2, u) and relabel so
    // it is the first one.
    let (s0, s1, s2) = (&v_start[0], &v_start[1], &v_start[2]);
    let first_values = [
        xr4(model, s0, s1, s2, &u, k)?,
        xr4(model, s0, s2, s1, &u, k)?,
        xr4(model, s1, s0, s2, &u, k)?,
    ];
    let pairing = first_values.iter().position(|&val| val < c).ok_or_else(|| {
        FlipError::Stuck {
            stage: "first flip",
            threshold: c,
            values: first_values.to_vec(),
            quad: vec![s0.clone(), s1.clone(), s2.clone(), u.clone()],
        }
    })?;
    let (perm, recorded): ([usize; 3], Option<[usize; 3]>) = match pairing {
        0 => ([0, 1, 2], None),
        1 => ([0, 2, 1], Some([0, 2, 1])),
        _ => ([1, 0, 2], Some([1, 0, 2])),
    };
    let a = v_start[perm[0]].clone();
    let b = v_start[perm[1]].clone();
    let cc = v_start[perm[2]].clone();
    let relabeled = [a.clone(), b.clone(), cc.clone()];
    let v2 = [a.clone(), u.clone(), cc.clone()];
    let mut triples = vec![relabeled, v2.clone()];
    let mut steps = vec![FlipStep {
        value: first_values[pairing],
        kind: StepKind::SmallFlip,
    }];

    // Overlap short-circuit: if the flip landed next to v_end, one more
    // certified flip finishes.
    let v2_set = as_set(&v2);
    if v2_set.intersection(&end_set).count() == 2 {
        let value = union_diam(model, &v2, v_end, k)?;
        if value >= c {
            return Err(FlipError::Stuck {
                stage: "closing flip after overlap",
                threshold: c,
                values: vec![value],
                quad: v2.iter().chain(v_end.iter()).cloned().collect(),
            });
        }
        steps.push(FlipStep { value, kind: StepKind::SmallFlip });
        triples.push(v_end.clone());
        return Ok(FlipSequence {
            triples,
            steps,
            case: FlipCase::Direct,
            start_permutation: recorded,
        });
    }

    let cw = xr4(model, &a, &u, &cc, &w, k)?;
    let cv = xr4(model, &a, &u, &cc, &v, k)?;

    if cw >= c || cv >= c {
        // Case 1: flip (a,u,c) next to the far entry, then carry to v_end.
        // Candidates in the fixed order (a,u,w), (w,u,c), (a,u,v), (v,u,c).
        let candidates: [([BoundaryPoint; 3], u32); 4] = [
            ([a.clone(), u.clone(), w.clone()], xr4(model, &a, &cc, &u, &w, k)?),
            ([w.clone(), u.clone(), cc.clone()], xr4(model, &u, &a, &cc, &w, k)?),
            ([a.clone(), u.clone(), v.clone()], xr4(model, &a, &cc, &u, &v, k)?),
            ([v.clone(), u.clone(), cc.clone()], xr4(model, &u, &a, &cc, &v, k)?),
        ];
        let hit = candidates.iter().find(|(_, val)| *val < c).ok_or_else(|| {
            FlipError::Stuck {
                stage: "case-1 flip",
                threshold: c,
                values: candidates.iter().map(|(_, v)| *v).collect(),
                quad: vec![a.clone(), u.clone(), cc.clone(), w.clone(), v.clone()],
            }
        })?;
        let (v3, value) = (hit.0.clone(), hit.1);
        steps.push(FlipStep { value, kind: StepKind::SmallFlip });
        triples.push(v3.clone());
        let carry = union_diam(model, &v3, v_end, k)?;
        steps.push(FlipStep { value: carry, kind: StepKind::Carry });
        triples.push(v_end.clone());
        Ok(FlipSequence {
            triples,
            steps,
            case: FlipCase::Case1,
            start_permutation: recorded,
        })
    } else {
        // Case 2: both flips near (a,u,c) are small; work backward from
        // v_end via (u,v,w,a) and meet in the middle.
        let back_values = [
            xr4(model, &u, &v, &w, &a, k)?,
            xr4(model, &u, &w, &v, &a, k)?,
            xr4(model, &v, &u, &w, &a, k)?,
        ];
        let back = back_values.iter().position(|&val| val < c).ok_or_else(|| {
            FlipError::Stuck {
                stage: "case-2 flip at the far triple",
                threshold: c,
                values: back_values.to_vec(),
                quad: vec![u.clone(), v.clone(), w.clone(), a.clone()],
            }
        })?;
        let v4: [BoundaryPoint; 3] = match back {
            0 => [u.clone(), a.clone(), w.clone()],
            1 => [u.clone(), v.clone(), a.clone()],
            _ => [a.clone(), v.clone(), w.clone()],
        };
        // V3 is whichever of (a,w,c), (a,v,c) shares two entries with V4;
        // (a,w,c) wins ties.
        let awc = [a.clone(), w.clone(), cc.clone()];
        let avc = [a.clone(), v.clone(), cc.clone()];
        let v4_set = as_set(&v4);
        let (v3, v3_value) = if as_set(&awc).intersection(&v4_set).count() == 2 {
            (awc, cw)
        } else {
            (avc, cv)
        };
        steps.push(FlipStep { value: v3_value, kind: StepKind::SmallFlip });
        triples.push(v3.clone());
        let carry = union_diam(model, &v3, &v4, k)?;
        steps.push(FlipStep { value: carry, kind: StepKind::Carry });
        triples.push(v4);
        steps.push(FlipStep {
            value: back_values[back],
            kind: StepKind::SmallFlip,
        });
        triples.push(v_end.clone());
        Ok(FlipSequence {
            triples,
            steps,
            case: FlipCase::Case2,
            start_permutation: recorded,
        })
    }
}

/// Checks the chain invariants: consecutive triples share two entries and
/// every certified step is below the constant.
pub fn check_sequence(seq: &FlipSequence, c: u32) -> bool {
    if seq.triples.len() > 5 || seq.triples.len() != seq.steps.len() + 1 {
        return false;
    }
    for pair in seq.triples.windows(2) {
        let shared = as_set(&pair[0]).intersection(&as_set(&pair[1])).count();
        if shared != 2 {
            return false;
        }
    }
    seq.small_flip_values().all(|v| v < c)
}
