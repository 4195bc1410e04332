// The XOR extractor Ext(x, (α, β)) = x ⊕ A(α, β).

use qinw::extractor::{ext_apply, ext_params_for, ext_seed_pack, ext_seed_unpack};
use qinw::BitString;

pub fn run_example() -> qinw::Result<()> {
    let params = ext_params_for(16, 12, 0.25)?;
    println!("n = 16, t = 12, eps = 0.25: field m = {}, seed length {}", params.field.m(), params.d);

    let small = ext_params_for(4, 4, 1.0)?;
    let seed = ext_seed_unpack(&small.field, &BitString::parse_bits("0110")?)?;
    println!("seed 0110: α = {:#04b}, β = {:#04b}", seed.alpha.bits(), seed.beta.bits());
    let x = BitString::parse_bits("1100")?;
    let y = ext_apply(&small, &x, &seed)?;
    let back = ext_apply(&small, &y, &seed)?;
    println!("Ext(1100) = {}, applied twice = {}", y.to_bit_text(), back.to_bit_text());
    println!("packed seed: {}", ext_seed_pack(&seed).to_bit_text());

    match ext_params_for(64, 8, 2f64.powi(-60)) {
        Ok(p) => println!("unexpected field m = {}", p.field.m()),
        Err(e) => println!("eps = 2^-60: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
