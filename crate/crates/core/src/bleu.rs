//! BLEU over place sequences with exact n-gram matching.
//!
//! Places are compared by exact coordinate equality, which is meaningful for
//! grid-cell inputs. Both corpus mode and the per-pair mode (a pair treated as
//! a one-sentence corpus) are provided.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::trajectory::{NgramWeights, Point, Trajectory};

/// Maximum n-gram order and weights for BLEU.
#[derive(Debug, Clone, PartialEq)]
pub struct BleuParams {
    weights: NgramWeights,
}

impl BleuParams {
    pub const DEFAULT_MAX_N: usize = 4;

    pub fn new(max_n: usize, weights: Option<Vec<f64>>) -> Result<Self> {
        Ok(Self {
            weights: NgramWeights::new(max_n, weights)?,
        })
    }

    #[inline]
    pub fn max_n(&self) -> usize {
        self.weights.max_n()
    }

    #[inline]
    pub fn weights(&self) -> &NgramWeights {
        &self.weights
    }
}

impl Default for BleuParams {
    fn default() -> Self {
        Self {
            weights: NgramWeights::uniform(Self::DEFAULT_MAX_N),
        }
    }
}

/// Hashable exact-equality key for a place. `-0.0` and `0.0` map together.
#[inline]
fn place_key(p: &Point) -> (u64, u64) {
    ((p.x() + 0.0).to_bits(), (p.y() + 0.0).to_bits())
}

fn check_corpus(candidates: &[Trajectory], references: &[Trajectory]) -> Result<()> {
    if candidates.len() != references.len() {
        return Err(Error::CorpusMismatch {
            candidates: candidates.len(),
            references: references.len(),
        });
    }
    if candidates.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    Ok(())
}

/// Clipped match count and candidate n-gram count for one pair.
fn clipped_counts(candidate: &Trajectory, reference: &Trajectory, n: usize) -> (usize, usize) {
    let mut pool: HashMap<Vec<(u64, u64)>, usize> = HashMap::new();
    for window in reference.points().windows(n) {
        *pool
            .entry(window.iter().map(place_key).collect())
            .or_default() += 1;
    }

    let mut matched = 0;
    let mut total = 0;
    for window in candidate.points().windows(n) {
        total += 1;
        let key: Vec<_> = window.iter().map(place_key).collect();
        if let Some(remaining) = pool.get_mut(&key) {
            if *remaining > 0 {
                *remaining -= 1;
                matched += 1;
            }
        }
    }
    (matched, total)
}

/// Modified precision `p_n` over a paired corpus; 0 when no candidate has an n-gram.
pub fn modified_precision(
    candidates: &[Trajectory],
    references: &[Trajectory],
    n: usize,
) -> Result<f64> {
    check_corpus(candidates, references)?;
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let (matched, total) = candidates
        .iter()
        .zip(references)
        .map(|(c, r)| clipped_counts(c, r, n))
        .fold((0, 0), |(m, t), (dm, dt)| (m + dm, t + dt));
    Ok(if total == 0 {
        0.0
    } else {
        matched as f64 / total as f64
    })
}

/// `1` when the candidates are longer in total, `e^(1 - r/c)` otherwise.
pub fn brevity_penalty(candidates: &[Trajectory], references: &[Trajectory]) -> Result<f64> {
    check_corpus(candidates, references)?;
    let c: usize = candidates.iter().map(Trajectory::len).sum();
    let r: usize = references.iter().map(Trajectory::len).sum();
    Ok(length_penalty(c, r))
}

#[inline]
pub(crate) fn length_penalty(c: usize, r: usize) -> f64 {
    if c > r {
        1.0
    } else {
        (1.0 - r as f64 / c as f64).exp()
    }
}

/// Largest order any pair can still match at, capped by `max_n`.
///
/// For a single pair this is `min(max_n, len_c, len_r)`.
fn effective_order(candidates: &[Trajectory], references: &[Trajectory], max_n: usize) -> usize {
    let longest_common = candidates
        .iter()
        .zip(references)
        .map(|(c, r)| c.len().min(r.len()))
        .max()
        .unwrap_or(0);
    max_n.min(longest_common)
}

/// Corpus BLEU. Any zero modified precision yields a score of exactly 0.
pub fn bleu(
    candidates: &[Trajectory],
    references: &[Trajectory],
    params: &BleuParams,
) -> Result<f64> {
    check_corpus(candidates, references)?;
    let n_eff = effective_order(candidates, references, params.max_n());
    let weights = params.weights().clamped(n_eff);

    let mut log_sum = 0.0;
    for (i, w) in weights.iter().enumerate() {
        let p = modified_precision(candidates, references, i + 1)?;
        if p == 0.0 {
            return Ok(0.0);
        }
        log_sum += w * p.ln();
    }
    Ok(brevity_penalty(candidates, references)? * log_sum.exp())
}

/// BLEU of a single pair treated as a one-sentence corpus.
pub fn bleu_pair(
    candidate: &Trajectory,
    reference: &Trajectory,
    params: &BleuParams,
) -> Result<f64> {
    bleu(
        std::slice::from_ref(candidate),
        std::slice::from_ref(reference),
        params,
    )
}
