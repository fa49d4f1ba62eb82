//! Similarity and distance measures for geospatial sequences.
//!
//! * [`geobleu`](geo_bleu::geobleu): BLEU-style n-gram similarity where
//!   n-grams match by spatial proximity instead of exact equality.
//! * [`bleu`](bleu::bleu): classic BLEU over place sequences.
//! * [`dtw`](dtw::dtw): dynamic time warping with Euclidean ground cost.
//!
//! Batch scoring of JSON Lines pair files lives in [`scoring`]; the circular
//! phase-shift benchmark lives in [`toy`]. With the default `parallel`
//! feature, batch work runs on rayon; without it everything is sequential
//! and produces identical output.

pub mod bleu;
pub mod dtw;
pub mod error;
pub mod format;
pub mod geo_bleu;
pub mod io;
pub mod par;
pub mod scoring;
pub mod toy;
pub mod trajectory;

pub use bleu::{bleu, bleu_pair, brevity_penalty, modified_precision, BleuParams};
pub use dtw::{dtw, dtw_normalized};
pub use error::{Error, Result};
pub use geo_bleu::{
    geobleu, geobleu_detail, greedy_match, ngram_similarity, q_n, GeoBleuDetail, MatchPair,
};
pub use io::{parse_pairs, parse_pairs_str, write_pairs, PairRecord};
pub use par::Workers;
pub use scoring::{
    rank_extremes, score_pair, score_pairs, score_pairs_sequential, write_reports_csv, Metric,
    MetricSet, RankMetric, ScoreOptions, ScoreReport,
};
pub use toy::{generate_circle, run_sweep, shift_phase, CircleConfig, SweepRow};
pub use trajectory::{
    euclidean, extract_ngrams, GeoBleuParams, NGram, NgramWeights, Point, Side, Trajectory,
};
