// Exhaustive bias audit of the powering construction.

use qinw::epsbias::{audit_bias, biased_vector, BiasedSpaceParams, ExtSeed};
use qinw::gf2m::FieldParams;

pub fn run_example() -> qinw::Result<()> {
    let space = BiasedSpaceParams::new(16, FieldParams::new(1)?)?;
    let seed = ExtSeed::from_raw(&space.field, 0b000011, 0b101101)?;
    println!("sample string: {}", biased_vector(&space, &seed)?.to_bit_text());

    let report = audit_bias(&space, 0.25)?;
    println!(
        "n = 16, m = 6: max bias {} on subset {:#06x}, guaranteed δ = {}, pass = {}",
        report.max_bias,
        report.worst_subset,
        space.guaranteed_delta(),
        report.pass
    );

    for n in [4, 8, 12] {
        let small = BiasedSpaceParams::new(n, FieldParams::new(0)?)?;
        let r = audit_bias(&small, 1.0)?;
        println!("n = {n:2}, m = 2: max bias {}", r.max_bias);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
