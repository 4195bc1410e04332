// Reversible classical programs embedded as quantum branching programs.

use qinw::harness::{classical_fool_experiment, ClassicalProgram, FoolMode};
use qinw::inw::inw_params_raw;

pub fn run_example() -> qinw::Result<()> {
    let p = inw_params_raw(4, 3, 2)?;
    for width in [1, 2, 4, 8] {
        let program = ClassicalProgram::random(width, 8, 3)?;
        let r = classical_fool_experiment(&program, &p, FoolMode::Exhaustive)?;
        println!("width {width}: {} qubits embedded, d1 = {}", program.embed()?.qubits, r.d1);
    }
    let parity = classical_fool_experiment(&ClassicalProgram::parity(8), &p, FoolMode::Exhaustive)?;
    println!("parity of 8 coins: d1 = {}", parity.d1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
