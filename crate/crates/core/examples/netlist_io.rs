//! Writes a netlist in its text form, reads it back, and routes the
//! parsed copy. A hand-edited netlist with comments parses too.
//!
//! cargo run --example netlist_io

use hypercube_layout::{build_netlist, HypercubeRow, Netlist, PlacementScheme, RoutedRow, TerminalMode};

const HAND_WRITTEN: &str = "\
# a two-node row
2 normal dim-ordered
1 0 1 1 1
";

fn main() -> hypercube_layout::Result<()> {
    let net = build_netlist(HypercubeRow::new(8)?, PlacementScheme::GrayCode, TerminalMode::DimensionOrdered);
    let text = net.to_text();
    print!("{text}");

    let parsed = Netlist::from_text(&text)?;
    assert_eq!(parsed, net);
    println!("round trip ok, {} tracks", RoutedRow::route(parsed)?.track_count());

    let small = Netlist::from_text(HAND_WRITTEN)?;
    println!("hand-written netlist: {} wire(s)", small.wires.len());

    match Netlist::from_text("8 normal free\n4 0 1 1 1\n") {
        Ok(_) => println!("unexpectedly accepted a bad dimension"),
        Err(e) => println!("rejected bad input: {e}"),
    }
    Ok(())
}
