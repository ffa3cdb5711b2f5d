//! Lists the cuts of maximum density for a range of row sizes, in decimal
//! and binary, showing the alternating bit-pair pattern.
//!
//! cargo run --example maximizers

use hypercube_layout::density::{enumerate_maximizers, leftmost_max, max_density};
use hypercube_layout::{BitView, HypercubeRow};

fn main() -> hypercube_layout::Result<()> {
    for dims in 1..=6 {
        let row = HypercubeRow::from_dims(dims)?;
        let cuts = enumerate_maximizers(&row)?;
        println!(
            "{row}: m = {}, leftmost = {}, {} maximizers",
            max_density(&row),
            leftmost_max(&row)?,
            cuts.len()
        );
        for i in cuts {
            println!("    {i:>3}  {}", BitView::new(i as u64, dims).to_binary_string());
        }
    }
    Ok(())
}
