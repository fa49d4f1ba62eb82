//! Points, trajectories and geospatial n-grams.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A location in the plane.
///
/// Coordinates are unitless. Grid-cell inputs are expected as cell indices so
/// that adjacent cells are distance 1 apart; kilometre inputs work the same
/// way with the decay coefficient scaled accordingly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::InvalidPoint { x, y })
        }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }
}

impl TryFrom<[f64; 2]> for Point {
    type Error = Error;

    fn try_from([x, y]: [f64; 2]) -> Result<Self> {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Planar Euclidean distance.
#[inline]
pub fn euclidean(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    (dx * dx + dy * dy).sqrt()
}

/// A non-empty, ordered sequence of points, one per time step.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    points: Vec<Point>,
}

impl Trajectory {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPoints);
        }
        Ok(Self { points })
    }

    /// Builds a trajectory from raw coordinate pairs.
    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        let points = coords
            .iter()
            .map(|&(x, y)| Point::new(x, y))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Applies `f` to every point, revalidating the result.
    pub fn map_points<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(Point) -> (f64, f64),
    {
        let points = self
            .points
            .iter()
            .map(|&p| {
                let (x, y) = f(p);
                Point::new(x, y)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    /// Sliding windows of width `n`; see [`extract_ngrams`].
    pub fn ngrams(&self, side: Side, n: usize) -> Vec<NGram<'_>> {
        extract_ngrams(self, side, n)
    }
}

/// Which trajectory of a pair an n-gram was cut from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Candidate,
    Reference,
}

/// A window of `n` consecutive points.
///
/// Identity is positional: two n-grams are the same match-pool entry only when
/// `(source, start, width)` agree, regardless of their point contents.
#[derive(Debug, Clone, Copy)]
pub struct NGram<'a> {
    source: Side,
    start: usize,
    points: &'a [Point],
}

impl<'a> NGram<'a> {
    #[inline]
    pub fn source(&self) -> Side {
        self.source
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.start
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn points(&self) -> &'a [Point] {
        self.points
    }

    /// Positional identifier `(source, start, width)`.
    #[inline]
    pub fn id(&self) -> (Side, usize, usize) {
        (self.source, self.start, self.points.len())
    }
}

impl PartialEq for NGram<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl Eq for NGram<'_> {}

/// Returns the `max(0, len - n + 1)` windows of width `n`, in start order.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn extract_ngrams(t: &Trajectory, side: Side, n: usize) -> Vec<NGram<'_>> {
    assert!(n >= 1, "n-gram width must be positive");
    t.points
        .windows(n)
        .enumerate()
        .map(|(start, points)| NGram {
            source: side,
            start,
            points,
        })
        .collect()
}

/// Decay coefficient, maximum n-gram order and per-order weights for GEO-BLEU.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoBleuParams {
    beta: f64,
    weights: NgramWeights,
}

impl GeoBleuParams {
    pub const DEFAULT_BETA: f64 = 1.0;
    pub const DEFAULT_MAX_N: usize = 3;

    pub fn new(beta: f64, max_n: usize, weights: Option<Vec<f64>>) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        Ok(Self {
            beta,
            weights: NgramWeights::new(max_n, weights)?,
        })
    }

    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    #[inline]
    pub fn max_n(&self) -> usize {
        self.weights.max_n()
    }

    #[inline]
    pub fn weights(&self) -> &NgramWeights {
        &self.weights
    }

    /// Same order and weights with a different decay coefficient.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(beta, self.max_n(), Some(self.weights.as_slice().to_vec()))
    }
}

impl Default for GeoBleuParams {
    fn default() -> Self {
        Self {
            beta: Self::DEFAULT_BETA,
            weights: NgramWeights::uniform(Self::DEFAULT_MAX_N),
        }
    }
}

/// Positive weights over n-gram orders `1..=max_n`, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct NgramWeights(Vec<f64>);

impl NgramWeights {
    const SUM_TOLERANCE: f64 = 1e-9;

    /// Validates explicit weights, or builds uniform ones when `weights` is `None`.
    pub fn new(max_n: usize, weights: Option<Vec<f64>>) -> Result<Self> {
        if max_n == 0 {
            return Err(Error::InvalidParams("max n must be at least 1".into()));
        }
        let Some(w) = weights else {
            return Ok(Self::uniform(max_n));
        };
        if w.len() != max_n {
            return Err(Error::InvalidParams(format!(
                "expected {max_n} weights, got {}",
                w.len()
            )));
        }
        if let Some(bad) = w.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::InvalidParams(format!(
                "weights must be positive, got {bad}"
            )));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(Error::InvalidParams(format!(
                "weights must sum to 1, got {sum}"
            )));
        }
        Ok(Self(w))
    }

    pub fn uniform(max_n: usize) -> Self {
        assert!(max_n >= 1);
        Self(vec![1.0 / max_n as f64; max_n])
    }

    #[inline]
    pub fn max_n(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Weights to use when only orders `1..=n_eff` are scorable.
    ///
    /// The configured weights are kept when nothing is clamped; otherwise the
    /// remaining orders are weighted uniformly.
    pub fn clamped(&self, n_eff: usize) -> Vec<f64> {
        if n_eff >= self.0.len() {
            self.0.clone()
        } else {
            vec![1.0 / n_eff as f64; n_eff]
        }
    }
}
