//! End-to-end experiments: fooling, the classical special case and benchmarks.

pub mod bench;
pub mod classical;
pub mod fool;
pub mod programs;
pub mod sampling;

pub use bench::{bench, BenchEntry, BenchReport, BenchSuite};
pub use classical::{classical_fool_experiment, ClassicalGate, ClassicalProgram};
pub use fool::{fool_experiment, fool_experiment_with_levels, level_experiment, program_hash, FoolMode, FoolReport, LevelReport};
pub use programs::random_branching_program;
pub use sampling::{sample_seeds, SAMPLER_ID};
