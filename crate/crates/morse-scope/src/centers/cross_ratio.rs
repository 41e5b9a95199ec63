//! Two cross-ratios on quadruples of ends, and the small-pairing check.
//!
//! The center cross-ratio of `(a,b,c,d)` is the diameter of
//! `m^K(a,b,c) ∪ m^K(a,d,c)`. The sequence cross-ratio is half the
//! stabilized value of `d(a_n,d_n) + d(b_n,c_n) − d(a_n,b_n) − d(c_n,d_n)`
//! on deep truncations; for eventually periodic ends the summand is
//! eventually constant, so the value is exact.

use super::{center_set, check_distinct, diameter_of, CenterError};
use crate::free_group::{BoundaryPoint, FreeGroupModel, GroupError};
use crate::half::Half;

/// How many consecutive equal summands certify stabilization.
const STABLE_WINDOW: usize = 3;

/// `diam(m^K(a,b,c) ∪ m^K(a,d,c))` at truncation depth `n`.
pub fn cross_ratio_centers(
    model: &FreeGroupModel,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    d: &BoundaryPoint,
    k: u32,
    n: u32,
) -> Result<u32, CenterError> {
    check_distinct(&[a, b, c, d])?;
    let first = center_set(model, a, b, c, k, n)?;
    let second = center_set(model, a, d, c, k, n)?;
    let mut union = first.points;
    union.extend(second.points);
    Ok(diameter_of(&union))
}

/// Depth sufficient for both center sets of a quadruple's cross-ratio.
pub fn cross_ratio_depth(
    points: [&BoundaryPoint; 4],
    k: u32,
) -> Result<u32, CenterError> {
    check_distinct(&points)?;
    let [a, b, c, d] = points;
    Ok(super::required_depth([a, b, c], k)?
        .max(super::required_depth([a, d, c], k)?))
}

/// Half the stabilized truncation summand
/// `d(a_n,d_n) + d(b_n,c_n) − d(a_n,b_n) − d(c_n,d_n)`.
///
/// Truncations are the first `n` letters of each end. Stabilization is
/// declared after three consecutive equal summands past the analytic depth
/// bound; failure to stabilize within the cap cannot happen for eventually
/// periodic ends and is a fatal diagnostic.
pub fn paulin_cross_ratio(
    model: &FreeGroupModel,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    d: &BoundaryPoint,
) -> Result<Half, CenterError> {
    check_distinct(&[a, b, c, d])?;
    for p in [a, b, c, d] {
        model.check_point(p)?;
    }
    let size = |p: &BoundaryPoint| p.prefix().len() + 2 * p.period().len();
    let bound = [a, b, c, d].iter().map(|p| size(p)).max().unwrap() as u32;
    let cap = [a, b, c, d].iter().map(|p| size(p)).sum::<usize>() as u32 + 12;

    let summand = |n: u32| -> i64 {
        let an = a.truncate(n);
        let bn = b.truncate(n);
        let cn = c.truncate(n);
        let dn = d.truncate(n);
        let dd = |u: &str, v: &str| i64::from(crate::free_group::words::word_dist(u, v));
        dd(&an, &dn) + dd(&bn, &cn) - dd(&an, &bn) - dd(&cn, &dn)
    };

    let mut run: Vec<i64> = Vec::new();
    for n in 1..=cap {
        let s = summand(n);
        run.push(s);
        if n > bound && run.len() >= STABLE_WINDOW {
            let tail = &run[run.len() - STABLE_WINDOW..];
            if tail.iter().all(|&v| v == tail[0]) {
                return Ok(Half::from_twice(tail[0]));
            }
        }
    }
    Err(CenterError::Group(GroupError::BadBoundarySyntax(format!(
        "sequence cross-ratio failed to stabilize within depth {cap} (diagnostic)"
    ))))
}

/// The three pairings checked by the small-cross-ratio property. For a
/// quadruple `(a,b,c,d)` they are `[a,b,c,d]`, `[a,c,b,d]`, `[b,a,c,d]`,
/// numbered 1–3.
pub fn quadruple_pairings(
    quad: [&BoundaryPoint; 4],
) -> [([BoundaryPoint; 3], [BoundaryPoint; 3]); 3] {
    let [a, b, c, d] = quad;
    let t = |x: &BoundaryPoint, y: &BoundaryPoint, z: &BoundaryPoint| {
        [x.clone(), y.clone(), z.clone()]
    };
    [
        (t(a, b, c), t(a, d, c)),
        (t(a, c, b), t(a, d, b)),
        (t(b, a, c), t(b, d, c)),
    ]
}

/// The triple obtained by the pairing's flip: `d` replaces one entry of
/// `(a,b,c)` — `b` for pairing 1, `c` for pairing 2, `a` for pairing 3.
pub fn pairing_flip(quad: [&BoundaryPoint; 4], pairing: u8) -> [BoundaryPoint; 3] {
    let [a, b, c, d] = quad;
    match pairing {
        1 => [a.clone(), d.clone(), c.clone()],
        2 => [a.clone(), d.clone(), b.clone()],
        3 => [b.clone(), d.clone(), c.clone()],
        _ => panic!("pairing index must be 1–3"),
    }
}

/// Outcome of the small-cross-ratio check on one quadruple.
#[derive(Debug, Clone)]
pub struct PairingReport {
    /// `[a,b,c,d]`, `[a,c,b,d]`, `[b,a,c,d]` at the given `K`.
    pub values: [u32; 3],
    /// First pairing (1-based) with value strictly below the constant, if
    /// any.
    pub small: Option<u8>,
    pub threshold: u32,
}

/// Evaluates the three pairings of `(a,b,c,d)` at `K` and reports the
/// lexicographically first one with value `< c_threshold`.
pub fn small_cross_ratio_check(
    model: &FreeGroupModel,
    a: &BoundaryPoint,
    b: &BoundaryPoint,
    c: &BoundaryPoint,
    d: &BoundaryPoint,
    k: u32,
    n: u32,
    c_threshold: u32,
) -> Result<PairingReport, CenterError> {
    check_distinct(&[a, b, c, d])?;
    let values = [
        cross_ratio_centers(model, a, b, c, d, k, n)?,
        cross_ratio_centers(model, a, c, b, d, k, n)?,
        cross_ratio_centers(model, b, a, c, d, k, n)?,
    ];
    let small = values
        .iter()
        .position(|&v| v < c_threshold)
        .map(|i| i as u8 + 1);
    Ok(PairingReport {
        values,
        small,
        threshold: c_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bp(s: &str) -> BoundaryPoint {
        BoundaryPoint::parse(s).unwrap()
    }

    fn f2(radius: u32) -> FreeGroupModel {
        FreeGroupModel::new(2, radius).unwrap()
    }

    /// Random canonical boundary point with bounded prefix/period lengths.
    pub(crate) fn random_point(rng: &mut ChaCha8Rng, max_prefix: usize, max_period: usize) -> BoundaryPoint {
        let letters = [b'a', b'A', b'b', b'B'];
        loop {
            let plen = rng.random_range(0..=max_prefix);
            let qlen = rng.random_range(1..=max_period);
            let mut prefix = String::new();
            for _ in 0..plen {
                prefix.push(letters[rng.random_range(0..4)] as char);
            }
            let mut period = String::new();
            for _ in 0..qlen {
                period.push(letters[rng.random_range(0..4)] as char);
            }
            if let Ok(p) = BoundaryPoint::new(&prefix, &period) {
                return p;
            }
        }
    }

    #[test]
    fn tripod_cross_ratio_examples() {
        let m = f2(5);
        // Both centers are {e}: value 0.
        assert_eq!(
            cross_ratio_centers(&m, &bp("(a)"), &bp("(b)"), &bp("(A)"), &bp("(B)"), 0, 3)
                .unwrap(),
            0
        );
        // Centers {e} and {aaa}: value 3.
        assert_eq!(
            cross_ratio_centers(&m, &bp("(a)"), &bp("(b)"), &bp("(A)"), &bp("aaa(b)"), 0, 5)
                .unwrap(),
            3
        );
        // Repeated entries are rejected.
        assert!(cross_ratio_centers(&m, &bp("(a)"), &bp("(b)"), &bp("(A)"), &bp("(b)"), 0, 4)
            .is_err());
    }

    #[test]
    fn paulin_examples() {
        let m = f2(4);
        assert_eq!(
            paulin_cross_ratio(&m, &bp("(a)"), &bp("(b)"), &bp("(A)"), &bp("(B)")).unwrap(),
            Half::ZERO
        );
        // Summand stabilizes at −6, so the value is −3.
        assert_eq!(
            paulin_cross_ratio(&m, &bp("(a)"), &bp("(b)"), &bp("(A)"), &bp("aaa(b)")).unwrap(),
            Half::from_int(-3)
        );
    }

    #[test]
    fn paulin_antisymmetry_in_b_d() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = f2(4);
        let mut done = 0;
        while done < 100 {
            let pts: Vec<BoundaryPoint> =
                (0..4).map(|_| random_point(&mut rng, 3, 2)).collect();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
            if !distinct {
                continue;
            }
            let v1 = paulin_cross_ratio(&m, &pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
            let v2 = paulin_cross_ratio(&m, &pts[0], &pts[3], &pts[2], &pts[1]).unwrap();
            assert_eq!(v1, -v2, "{pts:?}");
            done += 1;
        }
    }

    #[test]
    fn paulin_matches_center_cross_ratio_at_k_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let m = f2(6);
        let mut done = 0;
        while done < 60 {
            let pts: Vec<BoundaryPoint> =
                (0..4).map(|_| random_point(&mut rng, 2, 2)).collect();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
            if !distinct {
                continue;
            }
            let quad = [&pts[0], &pts[1], &pts[2], &pts[3]];
            let n = cross_ratio_depth(quad, 0).unwrap();
            let centers =
                cross_ratio_centers(&m, &pts[0], &pts[1], &pts[2], &pts[3], 0, n).unwrap();
            let paulin =
                paulin_cross_ratio(&m, &pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
            assert_eq!(Half::from(centers), paulin.abs(), "{pts:?}");
            done += 1;
        }
    }

    #[test]
    fn small_pairing_reports() {
        let m = f2(5);
        let r = small_cross_ratio_check(
            &m,
            &bp("(a)"),
            &bp("(b)"),
            &bp("(A)"),
            &bp("(B)"),
            0,
            3,
            1,
        )
        .unwrap();
        assert_eq!(r.small, Some(1));
        assert_eq!(r.values[0], 0);

        // A crossing pairing with value 0 exists even when pairing 1 is far.
        let r = small_cross_ratio_check(
            &m,
            &bp("(a)"),
            &bp("(b)"),
            &bp("(A)"),
            &bp("aaa(b)"),
            0,
            5,
            1,
        )
        .unwrap();
        assert!(r.small.is_some());
        assert_eq!(r.values[r.small.unwrap() as usize - 1], 0);

        // Strict inequality: C = 0 can never be met.
        let r = small_cross_ratio_check(
            &m,
            &bp("(a)"),
            &bp("(b)"),
            &bp("(A)"),
            &bp("(B)"),
            0,
            3,
            0,
        )
        .unwrap();
        assert_eq!(r.small, None);
    }
}
