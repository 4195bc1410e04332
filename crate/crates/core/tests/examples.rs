//! Every example runs to completion.

#[allow(dead_code)]
mod gf_arithmetic {
    include!("../examples/gf_arithmetic.rs");
}

#[allow(dead_code)]
mod bias_audit {
    include!("../examples/bias_audit.rs");
}

#[allow(dead_code)]
mod extractor {
    include!("../examples/extractor.rs");
}

#[allow(dead_code)]
mod inw_generator {
    include!("../examples/inw_generator.rs");
}

#[allow(dead_code)]
mod streaming_dfs {
    include!("../examples/streaming_dfs.rs");
}

#[allow(dead_code)]
mod density_matrix {
    include!("../examples/density_matrix.rs");
}

#[allow(dead_code)]
mod measurement_elimination {
    include!("../examples/measurement_elimination.rs");
}

#[allow(dead_code)]
mod fooling {
    include!("../examples/fooling.rs");
}

#[allow(dead_code)]
mod classical_fooling {
    include!("../examples/classical_fooling.rs");
}

#[allow(dead_code)]
mod cost_model {
    include!("../examples/cost_model.rs");
}

#[allow(dead_code)]
mod bench {
    include!("../examples/bench.rs");
}

#[test]
fn gf_arithmetic_example() {
    gf_arithmetic::run_example().unwrap();
}

#[test]
fn bias_audit_example() {
    bias_audit::run_example().unwrap();
}

#[test]
fn extractor_example() {
    extractor::run_example().unwrap();
}

#[test]
fn inw_generator_example() {
    inw_generator::run_example().unwrap();
}

#[test]
fn streaming_dfs_example() {
    streaming_dfs::run_example().unwrap();
}

#[test]
fn density_matrix_example() {
    density_matrix::run_example().unwrap();
}

#[test]
fn measurement_elimination_example() {
    measurement_elimination::run_example().unwrap();
}

#[test]
fn fooling_example() {
    fooling::run_example().unwrap();
}

#[test]
fn classical_fooling_example() {
    classical_fooling::run_example().unwrap();
}

#[test]
fn cost_model_example() {
    cost_model::run_example().unwrap();
}

#[test]
fn bench_example() {
    bench::run_example().unwrap();
}
