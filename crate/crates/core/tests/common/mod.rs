//! Test-only oracles and generators. Nothing here calls the production DP,
//! matcher or BLEU counting.

#![allow(dead_code)]

use std::collections::HashMap;

use geobleu::{euclidean, ngram_similarity, NGram, Point, Trajectory};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn traj(coords: &[(f64, f64)]) -> Trajectory {
    Trajectory::from_xy(coords).unwrap()
}

/// Continuous coordinates in `[-scale, scale]`.
pub fn random_trajectory(
    rng: &mut TestRng,
    min_len: usize,
    max_len: usize,
    scale: f64,
) -> Trajectory {
    let len = rng.gen_range(min_len..=max_len);
    let coords: Vec<(f64, f64)> = (0..len)
        .map(|_| (rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale)))
        .collect();
    traj(&coords)
}

/// Integer coordinates drawn from a `side × side` grid.
pub fn random_grid_trajectory(
    rng: &mut TestRng,
    min_len: usize,
    max_len: usize,
    side: i32,
) -> Trajectory {
    let len = rng.gen_range(min_len..=max_len);
    let coords: Vec<(f64, f64)> = (0..len)
        .map(|_| (rng.gen_range(0..side) as f64, rng.gen_range(0..side) as f64))
        .collect();
    traj(&coords)
}

/// Lazy random walk on the integer grid.
pub fn random_walk(rng: &mut TestRng, len: usize) -> Trajectory {
    let (mut x, mut y) = (0i32, 0i32);
    let coords: Vec<(f64, f64)> = (0..len)
        .map(|_| {
            x += rng.gen_range(-1..=1);
            y += rng.gen_range(-1..=1);
            (x as f64, y as f64)
        })
        .collect();
    traj(&coords)
}

// ---------------------------------------------------------------------------
// DTW: enumerate every warping path

/// Minimum path cost over all boundary-respecting, monotone, unit-step paths.
pub fn dtw_brute_force(a: &Trajectory, b: &Trajectory) -> f64 {
    let mut best = f64::INFINITY;
    let mut path = vec![(0usize, 0usize)];
    enumerate_paths(a.len(), b.len(), &mut path, &mut |p| {
        let cost: f64 = p
            .iter()
            .map(|&(i, j)| euclidean(a.points()[i], b.points()[j]))
            .sum();
        best = best.min(cost);
    });
    best
}

/// Calls `visit` once for every valid warping path between lengths `m` and `n`.
pub type PathVisitor<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

pub fn enumerate_paths(
    m: usize,
    n: usize,
    path: &mut Vec<(usize, usize)>,
    visit: &mut PathVisitor<'_>,
) {
    let &(i, j) = path.last().unwrap();
    if (i, j) == (m - 1, n - 1) {
        visit(path);
        return;
    }
    for (di, dj) in [(1, 1), (1, 0), (0, 1)] {
        let (ni, nj) = (i + di, j + dj);
        if ni < m && nj < n {
            path.push((ni, nj));
            enumerate_paths(m, n, path, visit);
            path.pop();
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy matching: literal transcription with physical removal

/// Returns `(candidate_start, reference_start, similarity)` in selection order.
pub fn greedy_physical_removal(
    candidates: &[NGram<'_>],
    references: &[NGram<'_>],
    beta: f64,
) -> Vec<(usize, usize, f64)> {
    let mut a: Vec<(usize, usize, f64)> = Vec::new();
    for c in candidates {
        for r in references {
            a.push((c.start(), r.start(), ngram_similarity(c, r, beta).unwrap()));
        }
    }
    // decreasing similarity; equal similarities by candidate then reference position
    a.sort_by(|x, y| {
        y.2.partial_cmp(&x.2)
            .unwrap()
            .then(x.0.cmp(&y.0))
            .then(x.1.cmp(&y.1))
    });
    let mut out = Vec::new();
    while !a.is_empty() {
        let head = a[0];
        out.push(head);
        a.retain(|t| t.0 != head.0 && t.1 != head.1);
    }
    out
}

/// All perfect matchings' similarity sums of the smaller side into the larger.
pub fn all_matching_sums(sim: &[Vec<f64>]) -> Vec<f64> {
    fn rec(sim: &[Vec<f64>], row: usize, used: &mut Vec<bool>, acc: f64, out: &mut Vec<f64>) {
        if row == sim.len() {
            out.push(acc);
            return;
        }
        for col in 0..used.len() {
            if !used[col] {
                used[col] = true;
                rec(sim, row + 1, used, acc + sim[row][col], out);
                used[col] = false;
            }
        }
    }
    let mut out = Vec::new();
    let cols = sim.first().map_or(0, Vec::len);
    rec(sim, 0, &mut vec![false; cols], 0.0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Textbook BLEU on token sequences (count-and-clip)

fn ngram_counts(tokens: &[u32], n: usize) -> HashMap<&[u32], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

/// Corpus BLEU with uniform weights; zero precision gives zero, orders
/// above the longest candidate/reference overlap are dropped.
pub fn textbook_bleu(pairs: &[(Vec<u32>, Vec<u32>)], max_n: usize) -> f64 {
    let overlap = pairs
        .iter()
        .map(|(c, r)| c.len().min(r.len()))
        .max()
        .unwrap();
    let order = max_n.min(overlap);
    let mut log_p = 0.0;
    for n in 1..=order {
        let mut clipped = 0usize;
        let mut total = 0usize;
        for (c, r) in pairs {
            let cc = ngram_counts(c, n);
            let rc = ngram_counts(r, n);
            total += cc.values().sum::<usize>();
            clipped += cc
                .iter()
                .map(|(g, &k)| k.min(rc.get(g).copied().unwrap_or(0)))
                .sum::<usize>();
        }
        if clipped == 0 {
            return 0.0;
        }
        log_p += (clipped as f64 / total as f64).ln() / order as f64;
    }
    let c: usize = pairs.iter().map(|p| p.0.len()).sum();
    let r: usize = pairs.iter().map(|p| p.1.len()).sum();
    let bp = if c > r {
        1.0
    } else {
        (1.0 - r as f64 / c as f64).exp()
    };
    bp * log_p.exp()
}

/// Token `t` becomes the point `(t mod 5, t div 5)`.
pub fn tokens_to_trajectory(tokens: &[u32]) -> Trajectory {
    let coords: Vec<(f64, f64)> = tokens
        .iter()
        .map(|&t| ((t % 5) as f64, (t / 5) as f64))
        .collect();
    traj(&coords)
}

pub fn random_tokens(rng: &mut TestRng, min_len: usize, max_len: usize, alphabet: u32) -> Vec<u32> {
    let len = rng.gen_range(min_len..=max_len);
    (0..len).map(|_| rng.gen_range(0..alphabet)).collect()
}

// ---------------------------------------------------------------------------
// Statistics

/// Ranks starting at 1, ties sharing their average rank.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let cov: f64 = a.iter().zip(b).map(|(x, y)| (x - ma) * (y - mb)).sum();
    let va: f64 = a.iter().map(|x| (x - ma).powi(2)).sum();
    let vb: f64 = b.iter().map(|y| (y - mb).powi(2)).sum();
    cov / (va * vb).sqrt()
}

pub fn spearman(a: &[f64], b: &[f64]) -> f64 {
    pearson(&average_ranks(a), &average_ranks(b))
}

/// Rotation by `angle` followed by translation by `(tx, ty)`.
pub fn rigid(t: &Trajectory, angle: f64, tx: f64, ty: f64) -> Trajectory {
    let (s, c) = angle.sin_cos();
    t.map_points(|p: Point| (c * p.x() - s * p.y() + tx, s * p.x() + c * p.y() + ty))
        .unwrap()
}

pub fn relative_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
