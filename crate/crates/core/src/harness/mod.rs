//! Experiment engine: end-to-end pipeline runs, seeded sweeps written as
//! CSV, and the fits run over their output.

mod config;
mod fit;
mod parabola;
mod pipeline;
mod record;
mod sweep;

pub use config::SweepSpec;
pub use fit::{fit_by_prime, fit_estimate_constant, fit_exponent, EstimateFit, ExponentFit};
pub use parabola::{parabola_sanity, ParabolaReport, ParabolaRow};
pub use pipeline::{run_pipeline, PipelineReport, ZRow};
pub use record::{read_csv, write_csv, ExperimentRecord, SCHEMA_LINE};
pub use sweep::{sample_counts, sweep, Sample};
