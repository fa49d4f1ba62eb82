//! GEO-BLEU: BLEU with proximity-weighted n-gram matching.
//!
//! Two n-grams of equal width score `exp(-beta * sum_k d(v_k, w_k))`, so an
//! exact match scores 1 and the score decays towards 0 with distance. For each
//! order `n`, candidate and reference n-grams are paired greedily by
//! decreasing similarity, each positional n-gram used at most once, and the
//! summed similarity over the candidate n-gram count gives `q_n`. The final
//! score is the brevity penalty times the weighted geometric mean of the `q_n`.

use crate::bleu::length_penalty;
use crate::error::{Error, Result};
use crate::trajectory::{euclidean, extract_ngrams, GeoBleuParams, NGram, Side, Trajectory};

/// One edge of a greedy matching.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchPair<'a> {
    pub candidate: NGram<'a>,
    pub reference: NGram<'a>,
    pub similarity: f64,
}

/// Proximity similarity of two equal-width n-grams, in `(0, 1]`.
pub fn ngram_similarity(a: &NGram<'_>, b: &NGram<'_>, beta: f64) -> Result<f64> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    Ok(similarity_unchecked(a, b, beta))
}

#[inline]
fn similarity_unchecked(a: &NGram<'_>, b: &NGram<'_>, beta: f64) -> f64 {
    let dist: f64 = a
        .points()
        .iter()
        .zip(b.points())
        .map(|(&v, &w)| euclidean(v, w))
        .sum();
    (-beta * dist).exp()
}

fn common_width(candidates: &[NGram<'_>], references: &[NGram<'_>]) -> Result<()> {
    let mut widths = candidates.iter().chain(references).map(NGram::width);
    if let Some(first) = widths.next() {
        if let Some(other) = widths.find(|&w| w != first) {
            return Err(Error::WidthMismatch {
                left: first,
                right: other,
            });
        }
    }
    Ok(())
}

/// Candidate/reference pairing with sort keys `(start, slice index)`.
struct Tuple {
    similarity: f64,
    cand: (usize, usize),
    refr: (usize, usize),
}

/// Greedy one-to-one matching by decreasing similarity.
///
/// Ties are broken by candidate start, then reference start, both ascending.
/// Identity is positional, so repeated chunks at different offsets are
/// separate entries. Returns `min(|C|, |R|)` pairs in selection order, which
/// is also non-increasing similarity order.
pub fn greedy_match<'a>(
    candidates: &[NGram<'a>],
    references: &[NGram<'a>],
    beta: f64,
) -> Result<Vec<MatchPair<'a>>> {
    common_width(candidates, references)?;
    let wanted = candidates.len().min(references.len());
    if wanted == 0 {
        return Ok(Vec::new());
    }

    let mut tuples: Vec<Tuple> = Vec::with_capacity(candidates.len() * references.len());
    for (ci, c) in candidates.iter().enumerate() {
        for (ri, r) in references.iter().enumerate() {
            tuples.push(Tuple {
                similarity: similarity_unchecked(c, r, beta),
                cand: (c.start(), ci),
                refr: (r.start(), ri),
            });
        }
    }
    tuples.sort_unstable_by(|a, b| {
        b.similarity
            .total_cmp(&a.similarity)
            .then(a.cand.cmp(&b.cand))
            .then(a.refr.cmp(&b.refr))
    });

    // Skipping tuples whose endpoints are already used is equivalent to
    // deleting them from the list after each selection.
    let mut cand_used = vec![false; candidates.len()];
    let mut ref_used = vec![false; references.len()];
    let mut pairs = Vec::with_capacity(wanted);
    for Tuple {
        similarity,
        cand: (_, ci),
        refr: (_, ri),
    } in tuples
    {
        if cand_used[ci] || ref_used[ri] {
            continue;
        }
        cand_used[ci] = true;
        ref_used[ri] = true;
        pairs.push(MatchPair {
            candidate: candidates[ci],
            reference: references[ri],
            similarity,
        });
        if pairs.len() == wanted {
            break;
        }
    }
    Ok(pairs)
}

/// Per-order similarity: greedy-matched similarity mass over the candidate n-gram count.
pub fn q_n(candidate: &Trajectory, reference: &Trajectory, n: usize, beta: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    for len in [candidate.len(), reference.len()] {
        if len < n {
            return Err(Error::TooShort { len, n });
        }
    }
    let c = extract_ngrams(candidate, Side::Candidate, n);
    let r = extract_ngrams(reference, Side::Reference, n);
    let sum: f64 = greedy_match(&c, &r, beta)?
        .iter()
        .map(|m| m.similarity)
        .sum();
    Ok(sum / c.len() as f64)
}

/// Intermediate quantities of a GEO-BLEU evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoBleuDetail {
    /// `q_n` for `n = 1..=orders.len()`.
    pub orders: Vec<f64>,
    /// Weights actually applied, after clamping to the scorable orders.
    pub weights: Vec<f64>,
    pub brevity_penalty: f64,
    pub score: f64,
}

/// GEO-BLEU of one candidate against one reference.
///
/// Orders above `min(len_c, len_r)` are dropped and the remaining ones
/// weighted uniformly; configured weights are used only when no order is
/// dropped.
pub fn geobleu(candidate: &Trajectory, reference: &Trajectory, params: &GeoBleuParams) -> f64 {
    geobleu_detail(candidate, reference, params).score
}

pub fn geobleu_detail(
    candidate: &Trajectory,
    reference: &Trajectory,
    params: &GeoBleuParams,
) -> GeoBleuDetail {
    let n_eff = params.max_n().min(candidate.len()).min(reference.len());
    let weights = params.weights().clamped(n_eff);
    let orders: Vec<f64> = (1..=n_eff)
        .map(|n| {
            q_n(candidate, reference, n, params.beta()).expect("orders are clamped to both lengths")
        })
        .collect();
    let log_mean: f64 = weights.iter().zip(&orders).map(|(w, q)| w * q.ln()).sum();
    let brevity_penalty = length_penalty(candidate.len(), reference.len());
    GeoBleuDetail {
        score: brevity_penalty * log_mean.exp(),
        orders,
        weights,
        brevity_penalty,
    }
}
