// Replacing intermediate measurements by coin-controlled reflections.

use qinw::qsim::{
    bp_run_avg, compile_measurements, qp_run, trace_norm, CoinSource, CompileMode, DensityMatrix, GateOp,
    QuantumProgram,
};

pub fn run_example() -> qinw::Result<()> {
    let qp = QuantumProgram::new(
        2,
        vec![GateOp::Hadamard(1), GateOp::Measure(1), GateOp::Hadamard(1), GateOp::Hadamard(2), GateOp::Measure(2)],
    )?;
    let rho0 = DensityMatrix::new(2)?;
    let direct = qp_run(&qp, &rho0)?;

    let semantic = compile_measurements(&qp, CompileMode::Semantic)?;
    println!("semantic program: {} coins, {} qubits", semantic.coins(), semantic.qubits);
    let averaged = bp_run_avg(&semantic, &rho0, &CoinSource::Uniform)?;
    println!("semantic vs measured: trace norm {:.1e}", trace_norm(&averaged.sub(&direct)?));

    let gate_level = compile_measurements(&qp, CompileMode::GateLevel)?;
    let wide = bp_run_avg(&gate_level, &rho0.with_ancillas(2)?, &CoinSource::Uniform)?;
    let narrowed = wide.trace_out_last(2)?;
    println!(
        "gate-level program: {} qubits, vs measured: trace norm {:.1e}",
        gate_level.qubits,
        trace_norm(&narrowed.sub(&direct)?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
