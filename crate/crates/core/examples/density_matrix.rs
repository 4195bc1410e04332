// Density-matrix simulation of gates and trace distance.

use qinw::qsim::{apply_gate, dm_new, output_distribution, trace_distance, DensityMatrix, GateOp};

pub fn run_example() -> qinw::Result<()> {
    let rho = dm_new(2)?;
    let plus = apply_gate(&rho, &GateOp::Hadamard(1))?;
    println!("H on qubit 1 of |00>:\n{}", plus.to_csv());

    let measured = apply_gate(&plus, &GateOp::Measure(1))?;
    println!("after measuring qubit 1, diagonal {:?}", measured.diagonal());
    println!("trace distance from the unmeasured state: {}", trace_distance(&plus, &measured)?);

    let reflected = apply_gate(&plus, &GateOp::Reflect1(1))?;
    println!("H·RFL·H maps |0> to |1> up to phase: {:?}", output_distribution(&apply_gate(&reflected, &GateOp::Hadamard(1))?));

    let reset = apply_gate(&measured, &GateOp::Reset(1))?;
    println!("reset returns to |00>: {}", trace_distance(&reset, &DensityMatrix::new(2)?)? < 1e-15);

    let mut wide = DensityMatrix::basis(3, 0b110)?;
    wide.apply_in_place(&GateOp::Toffoli(1, 2, 3))?;
    println!("TOF on |110>: diagonal {:?}", wide.diagonal());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
