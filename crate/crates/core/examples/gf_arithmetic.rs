// Arithmetic in the tower fields F_{2^m}, m = 2·3^i.

use qinw::gf2m::{gf_mul, gf_pow, FieldParams};

pub fn run_example() -> qinw::Result<()> {
    for field in FieldParams::all() {
        println!("m = {:2}: modulus {:#x}", field.m(), field.modulus());
    }

    let f4 = FieldParams::new(0)?;
    let x = f4.element(0b10)?;
    println!("in F_4: x·x = {:#04b}, x^3 = {:#04b}", gf_mul(&x, &x)?.bits(), gf_pow(&x, 3).bits());

    let f64_ = FieldParams::new(1)?;
    let a = f64_.parse_hex("2b")?;
    let inv = gf_pow(&a, 62);
    println!("in F_64: {:#x}^-1 = {:#x}, product {:#x}", a.bits(), inv.bits(), gf_mul(&a, &inv)?.bits());
    let order = (1..=63).find(|&k| f64_.pow_raw(0b10, k) == 1).unwrap_or(0);
    println!("in F_64: x has multiplicative order {order}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
