//! Prints the wire density at every cut of a normal row and checks the
//! sawtooth sum against the bit-level closed form.
//!
//! cargo run --example density_profile -- 32

use hypercube_layout::density::{density, density_closed_form, link_count, max_density};
use hypercube_layout::HypercubeRow;

fn main() -> hypercube_layout::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(16), |s| s.parse()).expect("N must be an integer");
    let row = HypercubeRow::new(n)?;
    let m = max_density(&row);

    println!("{row}, m = {m}");
    println!("{:>5} {:>5}  per-dimension counts", "cut", "S");
    for i in 1..row.n() {
        let s = density(&row, i)?;
        assert_eq!(s, density_closed_form(&row, i)?);
        let per_dim: Vec<String> = (1..=row.dims())
            .map(|k| link_count(&row, i, k).map(|c| c.to_string()))
            .collect::<Result<_, _>>()?;
        let marker = if s == m { " <- max" } else { "" };
        println!("{i:>5} {s:>5}  [{}]{marker}", per_dim.join(" "));
    }
    Ok(())
}
