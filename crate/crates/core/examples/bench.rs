// Wall-clock ladders for every benchmark suite.

use qinw::harness::{bench, BenchSuite};

pub fn run_example() -> qinw::Result<()> {
    for suite in BenchSuite::ALL {
        let report = bench(suite, 1)?;
        println!("{suite}:");
        for e in &report.entries {
            println!("  {:<24} size {:>6}: {:.3e} s, {:.1} ns/item", e.label, e.size, e.seconds, e.per_item_ns);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
