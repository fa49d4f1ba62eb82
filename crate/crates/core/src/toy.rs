//! Circular phase-shift benchmark.
//!
//! Cells are laid on a circle, snapped to a square grid, and traversed
//! clockwise from the top. Each phase shift of that sequence is compared
//! with the original under DTW and GEO-BLEU. DTW grows towards the opposite
//! phase while GEO-BLEU stays close to 1, since the shifted sequence still
//! shares almost all of its local chunks with the original.

use std::f64::consts::PI;
use std::io::Write;

use crate::dtw::{dtw, dtw_normalized};
use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::geo_bleu::geobleu;
use crate::par::{map_ordered, Workers};
use crate::trajectory::{GeoBleuParams, Point, Trajectory};

#[derive(Debug, Clone, PartialEq)]
pub struct CircleConfig {
    pub cell_count: usize,
    pub radius_km: f64,
    pub cell_size_km: f64,
}

impl CircleConfig {
    pub fn new(cell_count: usize, radius_km: f64, cell_size_km: f64) -> Result<Self> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if cell_count == 0 || !positive(radius_km) || !positive(cell_size_km) {
            return Err(Error::InvalidParams(format!(
                "circle needs positive cell count, radius and cell size \
                 (got {cell_count}, {radius_km}, {cell_size_km})"
            )));
        }
        Ok(Self {
            cell_count,
            radius_km,
            cell_size_km,
        })
    }
}

impl Default for CircleConfig {
    fn default() -> Self {
        Self {
            cell_count: 36,
            radius_km: 10.0,
            cell_size_km: 0.5,
        }
    }
}

fn snap(v: f64, cell: f64) -> f64 {
    // `+ 0.0` folds -0.0 into 0.0
    (v / cell).round() * cell + 0.0
}

/// The circle sequence in km, traversed clockwise.
///
/// Cell `k` sits at bearing `(k + 1/2) * 360° / cell_count` from north, so the
/// first and last cells straddle the top and the layout is mirror-symmetric
/// about the vertical axis: cell `k` and cell `cell_count - 1 - k` differ only
/// in the sign of `x`. Grid snapping preserves that symmetry, which makes
/// forward and backward phase shifts of equal size equally distant under DTW.
pub fn generate_circle(config: &CircleConfig) -> Trajectory {
    let n = config.cell_count as i64;
    let points = (0..n)
        .map(|k| {
            // bearing in half-steps, wrapped to (-n, n] so mirrored cells get
            // exactly negated angles
            let mut half_steps = 2 * k + 1;
            if half_steps > n {
                half_steps -= 2 * n;
            }
            let theta = PI * half_steps as f64 / n as f64;
            let x = snap(config.radius_km * theta.sin(), config.cell_size_km);
            let y = snap(config.radius_km * theta.cos(), config.cell_size_km);
            Point::new(x, y).expect("finite by construction")
        })
        .collect();
    Trajectory::new(points).expect("cell_count >= 1")
}

/// Rotates the sequence so it starts `shift` steps later.
pub fn shift_phase(t: &Trajectory, shift: usize) -> Result<Trajectory> {
    let len = t.len();
    if shift >= len {
        return Err(Error::ShiftOutOfRange { shift, len });
    }
    let mut points = t.points().to_vec();
    points.rotate_left(shift);
    Trajectory::new(points)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub shift: usize,
    pub dtw: f64,
    pub dtw_normalized: f64,
    pub geobleu: f64,
}

/// Scores every phase shift against the original; rows are in shift order.
pub fn run_sweep(config: &CircleConfig, params: &GeoBleuParams, workers: Workers) -> Vec<SweepRow> {
    let original = generate_circle(config);
    let shifts: Vec<usize> = (0..config.cell_count).collect();
    map_ordered(&shifts, workers, |&shift| {
        let shifted = shift_phase(&original, shift).expect("shift < cell_count");
        SweepRow {
            shift,
            dtw: dtw(&original, &shifted),
            dtw_normalized: dtw_normalized(&original, &shifted),
            geobleu: geobleu(&shifted, &original, params),
        }
    })
}

pub const SWEEP_HEADER: &str = "shift,dtw,dtw_normalized,geobleu";

/// Writes the sweep as CSV, preceded by `#` comment lines recording the setup.
pub fn write_sweep_csv<W: Write>(
    mut out: W,
    config: &CircleConfig,
    params: &GeoBleuParams,
    rows: &[SweepRow],
) -> Result<()> {
    writeln!(
        out,
        "# cells={} radius_km={} cell_size_km={} beta={} max_n={} units=km",
        config.cell_count,
        config.radius_km,
        config.cell_size_km,
        params.beta(),
        params.max_n()
    )?;
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.shift,
            fmt_sig(r.dtw),
            fmt_sig(r.dtw_normalized),
            fmt_sig(r.geobleu)
        )?;
    }
    out.flush()?;
    Ok(())
}
