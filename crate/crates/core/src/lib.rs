//! Exact wire density and track counts for row layouts of the binary
//! hypercube.
//!
//! A hypercube of `N = 2^d` nodes is laid out in a single row. Each link
//! becomes a horizontal wire, and the number of horizontal tracks a row
//! needs equals the largest number of wires crossing any vertical cut.
//!
//! - [`density`]: closed-form intercolumn densities, their maximum and
//!   every cut attaining it.
//! - [`layout`]: wire lists under normal or gray-code placement, with
//!   free or dimension-ordered terminals.
//! - [`router`]: left-edge track assignment and its certificate.
//! - [`oracle`]: brute-force recomputation of all of the above.
//! - [`render`] and [`report`]: text/SVG pictures and the tables behind
//!   the `hyperlayout` binary.

pub mod bits;
pub mod density;
pub mod error;
pub mod layout;
pub mod oracle;
pub mod render;
pub mod report;
pub mod router;
pub mod row;

pub use bits::BitView;
pub use error::{Error, Result};
pub use layout::{build_netlist, Netlist, PlacementScheme, TerminalMode, Wire};
pub use router::{left_edge_route, Certificate, IntervalWire, RoutedRow, TrackAssignment};
pub use row::HypercubeRow;
