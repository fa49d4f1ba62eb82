//! Dynamic time warping over planar trajectories.
//!
//! Warping paths start at `(0, 0)`, end at `(M-1, N-1)`, never move backwards
//! and advance by one of `(1, 1)`, `(1, 0)` or `(0, 1)`. The distance is the
//! cheapest such path's summed Euclidean cost, found with the usual
//! `O(M·N)` dynamic program. No warping window is applied.

use crate::trajectory::{euclidean, Point, Trajectory};

/// Unconstrained DTW distance between two trajectories.
pub fn dtw(candidate: &Trajectory, reference: &Trajectory) -> f64 {
    dtw_points(candidate.points(), reference.points())
}

/// DTW divided by `max(M, N)`.
pub fn dtw_normalized(candidate: &Trajectory, reference: &Trajectory) -> f64 {
    let longest = candidate.len().max(reference.len());
    dtw(candidate, reference) / longest as f64
}

/// Rolling-row DP; memory is linear in the shorter input.
fn dtw_points(a: &[Point], b: &[Point]) -> f64 {
    // The step set is symmetric, so the roles can be swapped freely.
    let (outer, inner) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    debug_assert!(!inner.is_empty());

    let mut prev = vec![0.0f64; inner.len()];
    let mut curr = vec![0.0f64; inner.len()];

    // first row: only horizontal moves
    let mut acc = 0.0;
    for (j, &q) in inner.iter().enumerate() {
        acc += euclidean(outer[0], q);
        prev[j] = acc;
    }

    for &p in &outer[1..] {
        curr[0] = prev[0] + euclidean(p, inner[0]);
        for j in 1..inner.len() {
            let best = prev[j - 1].min(prev[j]).min(curr[j - 1]);
            curr[j] = best + euclidean(p, inner[j]);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[inner.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[(f64, f64)]) -> Trajectory {
        Trajectory::from_xy(c).unwrap()
    }

    #[test]
    fn identical_is_zero() {
        let x = t(&[(0., 0.), (1., 2.), (3., -1.), (3., -1.)]);
        assert_eq!(dtw(&x, &x), 0.0);
        assert_eq!(dtw_normalized(&x, &x), 0.0);
    }

    #[test]
    fn single_points() {
        let x = t(&[(0., 0.)]);
        let y = t(&[(3., 4.)]);
        assert_eq!(dtw(&x, &y), 5.0);
        assert_eq!(dtw_normalized(&x, &y), 5.0);
    }

    #[test]
    fn unequal_lengths() {
        // Value frozen from exhaustive path enumeration in tests/dtw_oracle.rs.
        let x = t(&[(0., 0.), (1., 0.)]);
        let y = t(&[(0., 0.), (1., 0.), (2., 0.)]);
        assert_eq!(dtw(&x, &y), 1.0);
        assert_eq!(dtw(&y, &x), 1.0);
        assert!((dtw_normalized(&x, &y) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn single_vs_many_sums_every_distance() {
        let x = t(&[(0., 0.)]);
        let y = t(&[(3., 4.), (0., 1.), (0., 0.)]);
        assert_eq!(dtw(&x, &y), 6.0);
        assert_eq!(dtw(&y, &x), 6.0);
    }
}
