// Parameter selection and recursive expansion of the generator.

use qinw::inw::{inw_eval_recursive, inw_expand, inw_params, inw_params_raw, InwSeed};

pub fn run_example() -> qinw::Result<()> {
    for (s, t, eps) in [(2, 4, 0.5), (4, 16, 0.5), (8, 1024, 0.1)] {
        let p = inw_params(s, t, eps)?;
        println!(
            "S = {s}, T = {t}, eps = {eps}: N = {}, M = {}, m = {}, seed {} bits, regime {:?}",
            p.block_len,
            p.depth,
            p.field.m(),
            p.seed_bits(),
            p.regime
        );
        for (i, level) in p.levels.iter().enumerate() {
            println!("  level {}: t = {}, eps = {:.3e}", i + 1, level.t, level.eps);
        }
    }

    let raw = inw_params_raw(4, 3, 2)?;
    let seed = InwSeed::from_hex(&raw, "beef")?;
    println!("raw N = 4, M = 3, seed beef:");
    for i in 0..=raw.depth {
        println!("  G_{i} = {}", inw_eval_recursive(&raw, &seed, i)?.to_bit_text());
    }
    println!("  expand = {}", inw_expand(&raw, &seed)?.to_bit_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
