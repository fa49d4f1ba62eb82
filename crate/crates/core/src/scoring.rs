//! Batch scoring of pair files and ranking of the resulting reports.

use std::cmp::Ordering;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::bleu::{bleu_pair, BleuParams};
use crate::dtw::{dtw, dtw_normalized};
use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::geo_bleu::geobleu;
use crate::io::PairRecord;
use crate::par::{map_ordered, map_sequential, Workers};
use crate::trajectory::GeoBleuParams;

/// Metric families selectable for batch scoring. `Dtw` covers both the raw
/// and the length-normalized distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    GeoBleu,
    Bleu,
    Dtw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricSet {
    pub geobleu: bool,
    pub bleu: bool,
    pub dtw: bool,
}

impl MetricSet {
    pub const ALL: Self = Self {
        geobleu: true,
        bleu: true,
        dtw: true,
    };

    pub const NONE: Self = Self {
        geobleu: false,
        bleu: false,
        dtw: false,
    };

    pub fn with(mut self, metric: Metric) -> Self {
        match metric {
            Metric::GeoBleu => self.geobleu = true,
            Metric::Bleu => self.bleu = true,
            Metric::Dtw => self.dtw = true,
        }
        self
    }

    pub fn is_empty(&self) -> bool {
        !(self.geobleu || self.bleu || self.dtw)
    }
}

impl Default for MetricSet {
    fn default() -> Self {
        Self::ALL
    }
}

impl FromIterator<Metric> for MetricSet {
    fn from_iter<I: IntoIterator<Item = Metric>>(iter: I) -> Self {
        iter.into_iter().fold(Self::NONE, Self::with)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScoreOptions {
    pub geobleu: GeoBleuParams,
    pub bleu: BleuParams,
    pub metrics: MetricSet,
}

/// Scores for one pair. Unselected metrics are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreReport {
    pub id: String,
    pub geobleu: Option<f64>,
    pub bleu: Option<f64>,
    pub dtw: Option<f64>,
    pub dtw_normalized: Option<f64>,
    pub candidate_len: usize,
    pub reference_len: usize,
}

pub fn score_pair(record: &PairRecord, opts: &ScoreOptions) -> Result<ScoreReport> {
    let (c, r) = (&record.candidate, &record.reference);
    let m = opts.metrics;
    Ok(ScoreReport {
        id: record.id.clone(),
        geobleu: m.geobleu.then(|| geobleu(c, r, &opts.geobleu)),
        bleu: m.bleu.then(|| bleu_pair(c, r, &opts.bleu)).transpose()?,
        dtw: m.dtw.then(|| dtw(c, r)),
        dtw_normalized: m.dtw.then(|| dtw_normalized(c, r)),
        candidate_len: c.len(),
        reference_len: r.len(),
    })
}

/// Scores every record, in input order. The first failing pair aborts the batch.
pub fn score_pairs(
    records: &[PairRecord],
    opts: &ScoreOptions,
    workers: Workers,
) -> Result<Vec<ScoreReport>> {
    check_selection(opts)?;
    map_ordered(records, workers, |r| score_pair(r, opts))
        .into_iter()
        .collect()
}

/// Single-threaded [`score_pairs`], available regardless of features.
pub fn score_pairs_sequential(
    records: &[PairRecord],
    opts: &ScoreOptions,
) -> Result<Vec<ScoreReport>> {
    check_selection(opts)?;
    map_sequential(records, |r| score_pair(r, opts))
        .into_iter()
        .collect()
}

fn check_selection(opts: &ScoreOptions) -> Result<()> {
    if opts.metrics.is_empty() {
        return Err(Error::InvalidParams("no metric selected".into()));
    }
    Ok(())
}

pub const REPORT_HEADER: [&str; 7] = [
    "id",
    "geobleu",
    "bleu",
    "dtw",
    "dtw_normalized",
    "candidate_len",
    "reference_len",
];

pub fn write_reports_csv<W: Write>(out: W, reports: &[ScoreReport]) -> Result<()> {
    let opt = |v: Option<f64>| v.map(fmt_sig).unwrap_or_default();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_HEADER)?;
    for r in reports {
        w.write_record([
            r.id.clone(),
            opt(r.geobleu),
            opt(r.bleu),
            opt(r.dtw),
            opt(r.dtw_normalized),
            r.candidate_len.to_string(),
            r.reference_len.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads reports written by [`write_reports_csv`].
pub fn read_reports_csv<R: Read>(input: R) -> Result<Vec<ScoreReport>> {
    let mut rdr = csv::Reader::from_reader(input);
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(REPORT_HEADER) {
        return Err(Error::Parse {
            line: 1,
            field: "<header>".into(),
            message: format!("expected `{}`", REPORT_HEADER.join(",")),
        });
    }

    let mut reports = Vec::new();
    for (idx, row) in rdr.records().enumerate() {
        let row = row?;
        let line = idx + 2;
        let field_err = |name: &str, message: String| Error::Parse {
            line,
            field: name.to_string(),
            message,
        };
        let float = |i: usize| -> Result<Option<f64>> {
            let s = &row[i];
            if s.is_empty() {
                return Ok(None);
            }
            s.parse()
                .map(Some)
                .map_err(|e| field_err(REPORT_HEADER[i], format!("{e}")))
        };
        let int = |i: usize| -> Result<usize> {
            row[i]
                .parse()
                .map_err(|e| field_err(REPORT_HEADER[i], format!("{e}")))
        };
        reports.push(ScoreReport {
            id: row[0].to_string(),
            geobleu: float(1)?,
            bleu: float(2)?,
            dtw: float(3)?,
            dtw_normalized: float(4)?,
            candidate_len: int(5)?,
            reference_len: int(6)?,
        });
    }
    Ok(reports)
}

/// A report column usable for ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMetric {
    GeoBleu,
    Bleu,
    Dtw,
    DtwNormalized,
}

impl RankMetric {
    fn value(self, r: &ScoreReport) -> Option<f64> {
        match self {
            Self::GeoBleu => r.geobleu,
            Self::Bleu => r.bleu,
            Self::Dtw => r.dtw,
            Self::DtwNormalized => r.dtw_normalized,
        }
    }

    /// Similarities rank high-first, distances low-first.
    fn higher_is_more_similar(self) -> bool {
        matches!(self, Self::GeoBleu | Self::Bleu)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::GeoBleu => "geobleu",
            Self::Bleu => "bleu",
            Self::Dtw => "dtw",
            Self::DtwNormalized => "dtw_normalized",
        }
    }
}

impl FromStr for RankMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geobleu" => Ok(Self::GeoBleu),
            "bleu" => Ok(Self::Bleu),
            "dtw" => Ok(Self::Dtw),
            "dtw_normalized" | "dtw-normalized" => Ok(Self::DtwNormalized),
            other => Err(Error::UnknownMetric(other.to_string())),
        }
    }
}

/// Most similar and least similar `k` ids under `metric`.
///
/// `top` runs from most similar down, `bottom` from least similar up. Equal
/// scores are ordered by id ascending in both lists.
pub fn rank_extremes(
    reports: &[ScoreReport],
    metric: RankMetric,
    k: usize,
) -> Result<(Vec<String>, Vec<String>)> {
    if k == 0 || k > reports.len() {
        return Err(Error::RankOutOfRange {
            k,
            count: reports.len(),
        });
    }
    let mut scored = Vec::with_capacity(reports.len());
    for r in reports {
        let v = metric.value(r).ok_or_else(|| {
            Error::InvalidParams(format!("report `{}` has no {} score", r.id, metric.name()))
        })?;
        scored.push((v, r.id.as_str()));
    }

    let similar_first = |a: &(f64, &str), b: &(f64, &str)| -> Ordering {
        if metric.higher_is_more_similar() {
            b.0.total_cmp(&a.0)
        } else {
            a.0.total_cmp(&b.0)
        }
    };

    scored.sort_by(|a, b| similar_first(a, b).then_with(|| a.1.cmp(b.1)));
    let top = scored.iter().take(k).map(|s| s.1.to_string()).collect();

    scored.sort_by(|a, b| similar_first(b, a).then_with(|| a.1.cmp(b.1)));
    let bottom = scored.iter().take(k).map(|s| s.1.to_string()).collect();

    Ok((top, bottom))
}
