//! Tables behind the `hyperlayout` subcommands.
//!
//! Normal placement uses the closed forms; gray-code placement has no
//! closed form here, so its densities come from the brute-force oracle.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::bits::BitView;
use crate::density;
use crate::error::{Error, Result};
use crate::layout::{
    self, build_netlist, build_netlist_with_order, max_terminal_density, terminal_density, PlacementScheme,
    TerminalMode,
};
use crate::oracle;
use crate::render::{self, RenderSpec};
use crate::router::{channel_density, extract_intervals, left_edge_route, verify_assignment, RoutedRow};
use crate::row::HypercubeRow;

/// Largest `lg N` for closed-form density tables.
pub const CLOSED_FORM_MAX_DIMS: u32 = 20;
/// Largest `lg N` for anything that runs the oracle or the router.
pub const ORACLE_MAX_DIMS: u32 = 12;
/// Largest `lg N` for placement comparisons.
pub const COMPARE_MAX_DIMS: u32 = 10;
/// Fine-cut and gray-code checks stop at this `lg N`.
pub const FINE_CHECK_MAX_DIMS: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Svg,
    Json,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Svg => "svg",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "svg" => Ok(OutputFormat::Svg),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Usage(format!(
                "unknown format `{other}` (expected text|svg|json|csv)"
            ))),
        }
    }
}

fn require_dims(row: &HypercubeRow, max_dims: u32, what: &str) -> Result<()> {
    if row.n() < 2 {
        return Err(Error::Usage(format!("{what} needs N >= 2, got N={}", row.n())));
    }
    if row.dims() > max_dims {
        return Err(Error::Usage(format!(
            "{what} supports N <= 2^{max_dims}, got N={}",
            row.n()
        )));
    }
    Ok(())
}

fn unsupported(format: OutputFormat, what: &str) -> Error {
    Error::Usage(format!("{what} does not support --format {format}"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn list(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Per-cut densities of one row together with their maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub n: usize,
    pub placement: PlacementScheme,
    pub mode: TerminalMode,
    /// Densities at cuts `1..N`.
    pub profile: Vec<usize>,
    pub m: usize,
    pub p: usize,
    pub maximizers: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminal: Option<TerminalTable>,
}

/// Through-node densities of a dimension-ordered row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalTable {
    /// `rows[i - 1][p - 1]` is the count right of slot `p` on column `i - 1`.
    pub rows: Vec<Vec<usize>>,
    pub max: usize,
    pub at: Vec<(usize, u32)>,
}

fn gap_summary(row: HypercubeRow, placement: PlacementScheme) -> (Vec<usize>, usize, usize, Vec<usize>) {
    match placement {
        PlacementScheme::Normal => (
            density::profile(&row),
            density::max_density(&row),
            density::leftmost_max(&row).expect("N >= 2"),
            density::enumerate_maximizers(&row).expect("N >= 2"),
        ),
        PlacementScheme::GrayCode => {
            let net = build_netlist(row, placement, TerminalMode::FreePermutation);
            let table = oracle::brute_density_profile(&net);
            let profile = table.gaps();
            let m = table.max_gap();
            let maximizers: Vec<usize> = (1..row.n()).filter(|&i| table.gap(i) == m).collect();
            (profile, m, maximizers[0], maximizers)
        }
    }
}

/// Builds the `density` table.
pub fn density_report(row: HypercubeRow, placement: PlacementScheme, mode: TerminalMode) -> Result<DensityReport> {
    let cap = match placement {
        PlacementScheme::Normal => CLOSED_FORM_MAX_DIMS,
        PlacementScheme::GrayCode => ORACLE_MAX_DIMS,
    };
    require_dims(&row, cap, "density")?;
    let (profile, m, p, maximizers) = gap_summary(row, placement);
    let terminal = match mode {
        TerminalMode::FreePermutation => None,
        TerminalMode::DimensionOrdered => Some(terminal_table(row, placement)?),
    };
    Ok(DensityReport {
        n: row.n(),
        placement,
        mode,
        profile,
        m,
        p,
        maximizers,
        terminal,
    })
}

fn terminal_table(row: HypercubeRow, placement: PlacementScheme) -> Result<TerminalTable> {
    let dims = row.dims();
    let rows: Vec<Vec<usize>> = match placement {
        PlacementScheme::Normal => (1..=row.n())
            .map(|i| (1..=dims).map(|p| terminal_density(&row, i, p)).collect::<Result<_>>())
            .collect::<Result<_>>()?,
        PlacementScheme::GrayCode => {
            let net = build_netlist(row, placement, TerminalMode::DimensionOrdered);
            let table = oracle::brute_density_profile(&net);
            (1..=row.n())
                .map(|i| (1..=dims).map(|p| table.slot(i - 1, p)).collect())
                .collect()
        }
    };
    let (max, at) = match placement {
        PlacementScheme::Normal => {
            let t = max_terminal_density(&row)?;
            (t.value, t.at)
        }
        PlacementScheme::GrayCode => {
            let max = rows.iter().flatten().copied().max().unwrap_or(0);
            let at = rows
                .iter()
                .enumerate()
                .flat_map(|(r, vals)| {
                    vals.iter()
                        .enumerate()
                        .filter(move |(_, &v)| v == max)
                        .map(move |(p, _)| (r + 1, p as u32 + 1))
                })
                .collect();
            (max, at)
        }
    };
    Ok(TerminalTable { rows, max, at })
}

impl DensityReport {
    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Text => Ok(self.to_text()),
            OutputFormat::Csv => Ok(self.to_csv()),
            OutputFormat::Json => Ok(to_json(self)),
            OutputFormat::Svg => Err(unsupported(format, "density")),
        }
    }

    fn value_at(&self, i: usize) -> usize {
        if i < self.n {
            self.profile[i - 1]
        } else {
            0
        }
    }

    fn row_count(&self) -> usize {
        match self.terminal {
            Some(_) => self.n,
            None => self.n - 1,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# N={} placement={} mode={}\n", self.n, self.placement, self.mode);
        out.push_str(&format!("{:>8} {:>8}", "i", "S"));
        if let Some(t) = &self.terminal {
            for p in 1..=t.rows.first().map_or(0, Vec::len) {
                out.push_str(&format!(" {:>7}", format!("T{p}")));
            }
        }
        out.push('\n');
        for i in 1..=self.row_count() {
            out.push_str(&format!("{:>8} {:>8}", i, self.value_at(i)));
            if let Some(t) = &self.terminal {
                for v in &t.rows[i - 1] {
                    out.push_str(&format!(" {v:>7}"));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "m={} p={} maximizers={}\n",
            self.m,
            self.p,
            list(&self.maximizers)
        ));
        if let Some(t) = &self.terminal {
            let cuts: Vec<usize> = {
                let mut c: Vec<usize> = t.at.iter().map(|&(i, _)| i).collect();
                c.dedup();
                c
            };
            out.push_str(&format!("max T={} at i={}\n", t.max, list(&cuts)));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,S");
        if let Some(t) = &self.terminal {
            for p in 1..=t.rows.first().map_or(0, Vec::len) {
                out.push_str(&format!(",T{p}"));
            }
        }
        out.push('\n');
        for i in 1..=self.row_count() {
            out.push_str(&format!("{},{}", i, self.value_at(i)));
            if let Some(t) = &self.terminal {
                for v in &t.rows[i - 1] {
                    out.push_str(&format!(",{v}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// One line of the track table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AssignmentRow {
    pub dim: u32,
    pub left_col: usize,
    pub right_col: usize,
    pub track: usize,
}

/// Machine-readable result of `route`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteReport {
    pub n: usize,
    pub placement: PlacementScheme,
    pub mode: TerminalMode,
    pub profile: Vec<usize>,
    pub m: usize,
    pub p: usize,
    pub maximizers: Vec<usize>,
    pub tracks: usize,
    pub assignment: Vec<AssignmentRow>,
}

/// Routes a row and formats it.
pub fn route(
    row: HypercubeRow,
    placement: PlacementScheme,
    mode: TerminalMode,
    format: OutputFormat,
    spec: &RenderSpec,
) -> Result<String> {
    require_dims(&row, ORACLE_MAX_DIMS, "route")?;
    let routed = RoutedRow::route(build_netlist(row, placement, mode))?;
    match format {
        OutputFormat::Text => {
            let mut out = render::render_text(&routed, spec)?;
            out.push('\n');
            out.push_str("# dim left_col right_col track\n");
            out.push_str(&crate::router::assignment_to_text(&routed.intervals, &routed.assignment));
            Ok(out)
        }
        OutputFormat::Svg => render::render_svg(&routed, spec),
        OutputFormat::Csv => {
            let mut out = String::from("dim,left_col,right_col,track\n");
            for (d, l, r, t) in routed.rows() {
                let _ = writeln!(out, "{d},{l},{r},{t}");
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(to_json(&route_report(&routed))),
    }
}

pub fn route_report(routed: &RoutedRow) -> RouteReport {
    let row = routed.net.row;
    let (profile, m, p, maximizers) = gap_summary(row, routed.net.placement);
    RouteReport {
        n: row.n(),
        placement: routed.net.placement,
        mode: routed.net.mode,
        profile,
        m,
        p,
        maximizers,
        tracks: routed.track_count(),
        assignment: routed
            .rows()
            .map(|(dim, left_col, right_col, track)| AssignmentRow {
                dim,
                left_col,
                right_col,
                track,
            })
            .collect(),
    }
}

/// Measurements of one placement in `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacementMetrics {
    pub placement: PlacementScheme,
    pub max_density: usize,
    pub tracks_free: usize,
    pub tracks_dim_ordered: usize,
    pub total_wirelength: usize,
    pub max_wirelength: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub n: usize,
    pub placements: Vec<PlacementMetrics>,
}

/// Normal vs gray-code comparison, every number measured directly.
pub fn compare(row: HypercubeRow) -> Result<CompareReport> {
    require_dims(&row, COMPARE_MAX_DIMS, "compare")?;
    let placements = PlacementScheme::ALL
        .into_iter()
        .map(|placement| {
            let free = build_netlist(row, placement, TerminalMode::FreePermutation);
            let max_density = oracle::brute_density_profile(&free).max_gap();
            let total = layout::total_wirelength(&free);
            let longest = layout::max_wirelength(&free);
            let tracks_free = RoutedRow::route(free)?.track_count();
            let tracks_dim_ordered =
                RoutedRow::route(build_netlist(row, placement, TerminalMode::DimensionOrdered))?.track_count();
            Ok(PlacementMetrics {
                placement,
                max_density,
                tracks_free,
                tracks_dim_ordered,
                total_wirelength: total,
                max_wirelength: longest,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CompareReport { n: row.n(), placements })
}

impl CompareReport {
    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(to_json(self)),
            OutputFormat::Csv => {
                let mut out =
                    String::from("placement,max_density,tracks_free,tracks_dim_ordered,total_wirelength,max_wirelength\n");
                for p in &self.placements {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        p.placement, p.max_density, p.tracks_free, p.tracks_dim_ordered, p.total_wirelength, p.max_wirelength
                    );
                }
                Ok(out)
            }
            OutputFormat::Text => {
                let mut out = format!("# N={}\n", self.n);
                let _ = writeln!(
                    out,
                    "{:<10} {:>8} {:>12} {:>18} {:>10} {:>8}",
                    "placement", "density", "tracks(free)", "tracks(dim-ordered)", "total_len", "max_len"
                );
                for p in &self.placements {
                    let _ = writeln!(
                        out,
                        "{:<10} {:>8} {:>12} {:>18} {:>10} {:>8}",
                        p.placement.to_string(),
                        p.max_density,
                        p.tracks_free,
                        p.tracks_dim_ordered,
                        p.total_wirelength,
                        p.max_wirelength
                    );
                }
                Ok(out)
            }
            OutputFormat::Svg => Err(unsupported(format, "compare")),
        }
    }
}

/// Outcome of one invariant family in `check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub assertions: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub max_n: usize,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn assertions(&self) -> u64 {
        self.lines.iter().map(|l| l.assertions).sum()
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(to_json(self)),
            OutputFormat::Text => {
                let mut out = format!("# formula-vs-oracle check, N = 2 ..= {}\n", self.max_n);
                for l in &self.lines {
                    let _ = write!(
                        out,
                        "{} {:<28} {:>10} assertions",
                        if l.passed { "PASS" } else { "FAIL" },
                        l.name,
                        l.assertions
                    );
                    if let Some(f) = &l.first_failure {
                        let _ = write!(out, "  first failure: {f}");
                    }
                    out.push('\n');
                }
                let _ = writeln!(
                    out,
                    "{}: {} assertions",
                    if self.passed() { "all invariants pass" } else { "FAILED" },
                    self.assertions()
                );
                Ok(out)
            }
            other => Err(unsupported(other, "check")),
        }
    }
}

struct Tally {
    name: &'static str,
    assertions: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            assertions: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(detail());
        }
    }

    fn finish(self) -> CheckLine {
        CheckLine {
            name: self.name,
            passed: self.first_failure.is_none(),
            assertions: self.assertions,
            first_failure: self.first_failure,
        }
    }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(idx);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Runs every formula-vs-oracle invariant for `N = 2, 4, ..., max_n`.
///
/// Intercolumn checks run to `2^12`; fine-cut, routing and gray-code
/// checks stop at `2^10`; uniform terminal orderings are enumerated for
/// `N <= 16`.
pub fn check(max_n: HypercubeRow) -> Result<CheckReport> {
    if max_n.dims() > ORACLE_MAX_DIMS {
        return Err(Error::Usage(format!(
            "check supports --max-n <= 2^{ORACLE_MAX_DIMS}, got {}",
            max_n.n()
        )));
    }
    let mut agree = Tally::new("closed-form agreement");
    let mut symmetry = Tally::new("symmetry");
    let mut bound = Tally::new("upper bound");
    let mut peak = Tally::new("peak position");
    let mut maxim = Tally::new("maximizer set");
    let mut sum = Tally::new("profile sum");
    let mut bisect = Tally::new("bisection below maximum");
    let mut excess = Tally::new("excess reexpression");
    let mut tident = Tally::new("terminal identity");
    let mut tmax = Tally::new("terminal maximum");
    let mut routing = Tally::new("router optimality");
    let mut exact = Tally::new("exact track search");
    let mut gray = Tally::new("gray-code equalities");
    let mut orders = Tally::new("uniform ordering penalty");

    for row in HypercubeRow::range(1, max_n.dims()) {
        let (n, dims) = (row.n(), row.dims());
        let m = density::max_density(&row);
        let p = density::leftmost_max(&row)?;
        let free = build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
        let table = oracle::brute_density_profile(&free);

        for i in 1..n {
            let s = density::density(&row, i)?;
            let closed = density::density_closed_form(&row, i)?;
            agree.check(s == closed && s == table.gap(i), || {
                format!("N={n} i={i}: sum={s} closed={closed} oracle={}", table.gap(i))
            });
            let mirrored = density::density(&row, n - i)?;
            symmetry.check(s == mirrored, || format!("N={n} i={i}: {s} vs {mirrored}"));
            for k in 1..=dims {
                let (a, b) = (density::link_count(&row, i, k)?, density::link_count(&row, n - i, k)?);
                symmetry.check(a == b, || format!("N={n} i={i} k={k}: f {a} vs {b}"));
            }
            let limit = (m as i64).min(m as i64 - (p as i64 - i as i64));
            bound.check(s as i64 <= limit, || format!("N={n} i={i}: S={s} > {limit}"));
            if i < p {
                peak.check(s < m, || format!("N={n}: cut {i} left of p={p} reaches m"));
            }
        }
        peak.check(density::density(&row, p)? == m, || format!("N={n}: S(p={p}) != m={m}"));

        let claimed = density::enumerate_maximizers(&row)?;
        let scanned = oracle::brute_maximizers(&free);
        maxim.check(claimed == scanned, || format!("N={n}: {claimed:?} vs {scanned:?}"));
        maxim.check(claimed.first() == Some(&p), || format!("N={n}: leftmost {:?} vs p={p}", claimed.first()));

        let total: usize = density::profile(&row).iter().sum();
        let wl = layout::total_wirelength(&free);
        sum.check(total == n / 2 * (n - 1) && total == wl, || format!("N={n}: sum {total}, length {wl}"));

        if n >= 8 {
            let half = density::density(&row, n / 2)?;
            bisect.check(half < m, || format!("N={n}: S(N/2)={half} >= m={m}"));
        }

        if dims > FINE_CHECK_MAX_DIMS {
            continue;
        }

        for i in 1..n {
            let r = BitView::new(i as u64, dims).trailing_zeros() as i64;
            for q in 1..=dims {
                let before = BitView::new(i as u64 - 1, dims).excess(q);
                let after = BitView::new(i as u64, dims).excess(q);
                let predicted = if (q as i64) > r { after } else { after + 2 * (r - q as i64 - 1) };
                excess.check(before == predicted, || format!("i={i} p={q}: {before} vs {predicted}"));
            }
        }

        let fixed = build_netlist(row, PlacementScheme::Normal, TerminalMode::DimensionOrdered);
        let fine = oracle::brute_density_profile(&fixed);
        for i in 1..=n {
            for q in 1..=dims {
                let t = terminal_density(&row, i, q)?;
                tident.check(t == fine.slot(i - 1, q), || {
                    format!("N={n} i={i} p={q}: formula {t} oracle {}", fine.slot(i - 1, q))
                });
            }
        }
        let tm = max_terminal_density(&row)?;
        let want = if n > 2 { m + 1 } else { 1 };
        tmax.check(tm.value == want && fine.max_fine() == want, || {
            format!("N={n}: max T {} oracle {} expected {want}", tm.value, fine.max_fine())
        });
        tmax.check(tm.cuts().iter().all(|i| claimed.contains(i)), || {
            format!("N={n}: maximum attained off the maximizer set {:?}", tm.cuts())
        });

        for placement in PlacementScheme::ALL {
            for mode in TerminalMode::ALL {
                let net = build_netlist(row, placement, mode);
                let oracle_max = match mode {
                    TerminalMode::FreePermutation => oracle::brute_density_profile(&net).max_gap(),
                    TerminalMode::DimensionOrdered => oracle::brute_density_profile(&net).max_fine(),
                };
                let intervals = extract_intervals(&net);
                let a = left_edge_route(&intervals);
                let density = channel_density(&intervals);
                let cert = verify_assignment(&intervals, &a)?;
                routing.check(cert.is_ok() && a.track_count == density && density == oracle_max, || {
                    format!(
                        "N={n} {placement}/{mode}: tracks {} density {density} oracle {oracle_max} {cert:?}",
                        a.track_count
                    )
                });
                if placement == PlacementScheme::Normal {
                    let expected = match mode {
                        TerminalMode::FreePermutation => m,
                        TerminalMode::DimensionOrdered => want,
                    };
                    routing.check(a.track_count == expected, || {
                        format!("N={n} {mode}: {} tracks, expected {expected}", a.track_count)
                    });
                }
                if intervals.len() <= oracle::EXACT_TRACK_CAP {
                    let best = oracle::brute_track_count(&intervals)?;
                    exact.check(best == a.track_count, || {
                        format!("N={n} {placement}/{mode}: exact {best} vs left-edge {}", a.track_count)
                    });
                }
            }
        }

        let gfree = build_netlist(row, PlacementScheme::GrayCode, TerminalMode::FreePermutation);
        let gmax = oracle::brute_density_profile(&gfree).max_gap();
        gray.check(gmax == m, || format!("N={n}: gray density {gmax} vs m={m}"));
        let (gt, gl) = (layout::total_wirelength(&gfree), layout::max_wirelength(&gfree));
        gray.check(gt == wl, || format!("N={n}: gray total {gt} vs normal {wl}"));
        gray.check(layout::max_wirelength(&free) == n / 2 && gl == n - 1, || {
            format!("N={n}: max lengths {} / {gl}", layout::max_wirelength(&free))
        });

        if (3..=4).contains(&dims) {
            let identity: Vec<u32> = (1..=dims).collect();
            let maxima: Vec<usize> = permutations(&identity)
                .iter()
                .map(|order| {
                    let net = build_netlist_with_order(row, PlacementScheme::Normal, order)?;
                    Ok(oracle::brute_density_profile(&net).max_fine())
                })
                .collect::<Result<_>>()?;
            let lowest = *maxima.iter().min().unwrap();
            orders.check(lowest == m + 1, || format!("N={n}: best uniform ordering needs {lowest}"));
            if dims == 3 {
                orders.check(maxima.iter().all(|&v| v == m + 1), || format!("N={n}: orderings give {maxima:?}"));
            }
        }
    }

    Ok(CheckReport {
        max_n: max_n.n(),
        lines: [
            agree, symmetry, bound, peak, maxim, sum, bisect, excess, tident, tmax, routing, exact, gray, orders,
        ]
        .into_iter()
        .map(Tally::finish)
        .collect(),
    })
}
