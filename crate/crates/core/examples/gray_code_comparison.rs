//! Compares the normal and gray-code placements on density, tracks and
//! wirelength for several row sizes.
//!
//! cargo run --example gray_code_comparison

use hypercube_layout::report::{compare, OutputFormat};
use hypercube_layout::HypercubeRow;

fn main() -> hypercube_layout::Result<()> {
    for dims in [2, 3, 4, 6, 8] {
        let report = compare(HypercubeRow::from_dims(dims)?)?;
        println!("N = {}", report.n);
        print!("{}", report.render(OutputFormat::Text)?);
        println!();
    }
    Ok(())
}
