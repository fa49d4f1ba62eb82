//! Prints the default circular phase-shift sweep as CSV.
//!
//! Run with: cargo run --example sweep

use geobleu::{run_sweep, toy::write_sweep_csv, CircleConfig, GeoBleuParams, Workers};

fn main() {
    let config = CircleConfig::default();
    let params = GeoBleuParams::default();
    let rows = run_sweep(&config, &params, Workers::Auto);
    write_sweep_csv(std::io::stdout().lock(), &config, &params, &rows).unwrap();
}
