// Streaming the output by a reversible walk over the recursion tree.

use qinw::inw::{inw_coord, inw_params_raw, label_step, InwSeed, InwStream, Label, Move};

pub fn run_example() -> qinw::Result<()> {
    let p = inw_params_raw(12, 6, 4)?;
    let seed = InwSeed::from_hex(&p, "0123456789abcdef012305")?;

    let mut stream = InwStream::new(&p, &seed);
    let head: String = stream.by_ref().take(16).map(|b| if b { '1' } else { '0' }).collect();
    println!("first 16 bits: {head}, now at leaf {}", stream.leaf());
    let rest = stream.by_ref().count();
    println!("{rest} more bits, {} extractor applications", stream.ext_applications());
    println!("rewind restores the seed: {}", stream.rewind() == Label::root(&p, &seed));

    let j = 45;
    println!("coordinate {j} alone: {}", inw_coord(&p, &seed, j)? as u8);

    let root = Label::root(&p, &seed);
    let right = label_step(&p, &root, Move::RightChild)?;
    let up = label_step(&p, &right, Move::ParentFromRight)?;
    println!("right child at height {}, back at the root: {}", right.height, up == root);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
