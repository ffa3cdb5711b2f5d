//! Draws routed rows as text and writes SVG files for each placement and
//! terminal mode.
//!
//! cargo run --example render_figures -- 8 /tmp/figures

use std::path::PathBuf;

use hypercube_layout::render::{render_svg, render_text, RenderSpec};
use hypercube_layout::{build_netlist, HypercubeRow, PlacementScheme, RoutedRow, TerminalMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(8), |s| s.parse())?;
    let dir = args.next().map(PathBuf::from);
    let row = HypercubeRow::new(n)?;
    let spec = RenderSpec {
        show_tracks: true,
        ..RenderSpec::default()
    };

    for placement in PlacementScheme::ALL {
        for mode in TerminalMode::ALL {
            let routed = RoutedRow::route(build_netlist(row, placement, mode))?;
            println!("{}", render_text(&routed, &spec)?);
            if let Some(dir) = &dir {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("row{n}-{placement}-{mode}.svg"));
                std::fs::write(&path, render_svg(&routed, &spec)?)?;
                println!("wrote {}\n", path.display());
            }
        }
    }
    Ok(())
}
