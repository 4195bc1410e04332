// Symbolic space and time estimates for streaming.

use qinw::inw::{cost_model, inw_params};

pub fn run_example() -> qinw::Result<()> {
    for t in [16, 256, 4096] {
        let p = inw_params(8, t, 0.1)?;
        let c = cost_model(&p);
        println!(
            "T = {t}: seed {} bits, space {} bits, total {} ops, one coordinate {} ops",
            c.seed_bits, c.space_bits, c.total_ops, c.coordinate_ops
        );
        for h in &c.step_costs {
            println!("  height {:2}: {:5} vertices × {}", h.height, h.vertices, h.cost_per_vertex);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
