//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

use std::process::Command;
use std::time::Instant;

use hypercube_layout::density::{
    density, density_closed_form, enumerate_maximizers, leftmost_max, link_count, max_density,
};
use hypercube_layout::layout::{
    build_netlist, build_netlist_with_order, max_terminal_density, max_wirelength, terminal_density,
    total_wirelength,
};
use hypercube_layout::oracle::{brute_density_profile, brute_maximizers, brute_track_count, EXACT_TRACK_CAP};
use hypercube_layout::router::{channel_density, extract_intervals, left_edge_route, verify_assignment};
use hypercube_layout::{HypercubeRow, PlacementScheme, TerminalMode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rows(lo: u32, hi: u32) -> impl Iterator<Item = HypercubeRow> {
    HypercubeRow::range(lo, hi)
}

fn tracks(row: HypercubeRow, placement: PlacementScheme, mode: TerminalMode) -> usize {
    let ivs = extract_intervals(&build_netlist(row, placement, mode));
    left_edge_route(&ivs).track_count
}

fn criterion_1() -> Outcome {
    let row = HypercubeRow::new(8).unwrap();
    let m = max_density(&row);
    let free = tracks(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
    let fixed = tracks(row, PlacementScheme::Normal, TerminalMode::DimensionOrdered);
    ensure(m == 5, || format!("m(8) = {m}"))?;
    ensure(free == 5, || format!("free tracks = {free}"))?;
    ensure(fixed == 6, || format!("dim-ordered tracks = {fixed}"))?;
    Ok(format!("m(8)={m}, free tracks={free}, dim-ordered tracks={fixed}"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0u64;
    for row in rows(1, 12) {
        let net = build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
        let table = brute_density_profile(&net);
        for i in 1..row.n() {
            let summed: usize = (1..=row.dims()).map(|k| link_count(&row, i, k).unwrap()).sum();
            let closed = density_closed_form(&row, i).unwrap();
            let brute = table.gap(i);
            ensure(summed == closed && closed == brute, || {
                format!("N={} i={i}: sum {summed}, closed {closed}, oracle {brute}", row.n())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} cuts agree across three evaluations, N=2..4096"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0u64;
    for row in rows(1, 12) {
        let n = row.n();
        let (m, p) = (max_density(&row) as i64, leftmost_max(&row).unwrap() as i64);
        for i in 1..n {
            let s = density(&row, i).unwrap();
            let mirror = density(&row, n - i).unwrap();
            ensure(s == mirror, || format!("N={n} i={i}: S={s} but S(N-i)={mirror}"))?;
            let limit = m.min(m - (p - i as i64));
            ensure(s as i64 <= limit, || format!("N={n} i={i}: S={s} exceeds {limit}"))?;
            checked += 1;
        }
    }
    Ok(format!("symmetry and bound hold at {checked} cuts"))
}

fn criterion_4() -> Outcome {
    for row in rows(1, 12) {
        let claimed = enumerate_maximizers(&row).unwrap();
        let scanned = brute_maximizers(&build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation));
        ensure(claimed == scanned, || format!("N={}: pattern {claimed:?} vs scan {scanned:?}", row.n()))?;
        let p = leftmost_max(&row).unwrap();
        ensure(claimed[0] == p, || format!("N={}: leftmost {} vs p {p}", row.n(), claimed[0]))?;
    }
    Ok("bit-pattern maximizers equal oracle argmax sets for N=2..4096".into())
}

fn criterion_5() -> Outcome {
    for row in rows(2, 10) {
        let n = row.n();
        let m = max_density(&row);
        let formula = max_terminal_density(&row).unwrap();
        ensure(formula.value == m + 1, || format!("N={n}: formula max T {}", formula.value))?;
        for &(i, p) in &formula.at {
            let s = density(&row, i).unwrap();
            ensure(s == m, || format!("N={n}: max at i={i} p={p} where S={s}"))?;
        }
        let table = brute_density_profile(&build_netlist(row, PlacementScheme::Normal, TerminalMode::DimensionOrdered));
        let mut oracle_max = 0;
        for i in 1..=n {
            for p in 1..=row.dims() {
                let t = terminal_density(&row, i, p).unwrap();
                let brute = table.slot(i - 1, p);
                ensure(t == brute, || format!("N={n} i={i} p={p}: formula {t} oracle {brute}"))?;
                oracle_max = oracle_max.max(brute);
            }
        }
        ensure(oracle_max == m + 1, || format!("N={n}: oracle max T {oracle_max}"))?;
        for i in 1..=n {
            for p in 1..=row.dims() {
                if table.slot(i - 1, p) == oracle_max {
                    let s = density(&row, i).unwrap();
                    ensure(s == m, || format!("N={n}: oracle max at i={i} where S={s}"))?;
                }
            }
        }
    }
    let row = HypercubeRow::new(8).unwrap();
    let orders = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    for order in orders {
        let net = build_netlist_with_order(row, PlacementScheme::Normal, &order).unwrap();
        let worst = brute_density_profile(&net).max_fine();
        ensure(worst == 6, || format!("N=8 order {order:?}: max {worst}"))?;
    }
    Ok("max T = m+1 for N=4..1024, attained only where S=m; all 6 orderings at N=8 need 6".into())
}

fn criterion_6() -> Outcome {
    let mut instances = 0;
    let mut exact = 0;
    for row in rows(1, 10) {
        for placement in PlacementScheme::ALL {
            for mode in TerminalMode::ALL {
                let ivs = extract_intervals(&build_netlist(row, placement, mode));
                let a = left_edge_route(&ivs);
                let d = channel_density(&ivs);
                let cert = verify_assignment(&ivs, &a).unwrap();
                ensure(a.track_count == d && cert.is_ok(), || {
                    format!("N={} {placement}/{mode}: {} tracks vs density {d} ({cert:?})", row.n(), a.track_count)
                })?;
                instances += 1;
                if ivs.len() <= EXACT_TRACK_CAP {
                    let best = brute_track_count(&ivs).unwrap();
                    ensure(best == a.track_count, || {
                        format!("N={} {placement}/{mode}: exact {best} vs {}", row.n(), a.track_count)
                    })?;
                    exact += 1;
                }
            }
        }
    }
    Ok(format!("{instances} instances at density, {exact} match exact search"))
}

fn criterion_7() -> Outcome {
    for row in rows(1, 10) {
        let n = row.n();
        let normal = build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
        let gray = build_netlist(row, PlacementScheme::GrayCode, TerminalMode::FreePermutation);
        let gmax = brute_density_profile(&gray).max_gap();
        ensure(gmax == max_density(&row), || format!("N={n}: gray density {gmax}"))?;
        let (tn, tg) = (total_wirelength(&normal), total_wirelength(&gray));
        ensure(tn == tg, || format!("N={n}: total {tn} vs {tg}"))?;
        let (mn, mg) = (max_wirelength(&normal), max_wirelength(&gray));
        ensure(mn == n / 2 && mg == n - 1, || format!("N={n}: max length {mn} vs {mg}"))?;
    }
    Ok("gray density = m, equal total length, max length N/2 vs N-1 for N=2..1024".into())
}

fn criterion_8() -> Outcome {
    for row in rows(3, 12) {
        let table = brute_density_profile(&build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation));
        let half = table.gap(row.n() / 2);
        ensure(half < table.max_gap(), || format!("N={}: bisection {half}", row.n()))?;
    }
    for row in rows(3, 30) {
        let half = density(&row, row.n() / 2).unwrap();
        ensure(half < max_density(&row), || format!("N={}: bisection {half}", row.n()))?;
    }
    Ok("S(N/2) < m(N) for N=8..2^30 (oracle to 4096)".into())
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hyperlayout");
    for n in [2, 4, 8, 16] {
        for mode in ["free", "dim-ordered"] {
            let run = || {
                let out = Command::new(bin)
                    .args(["route", "--n", &n.to_string(), "--mode", mode, "--format", "json"])
                    .output()
                    .map_err(|e| e.to_string())?;
                ensure(out.status.success(), || format!("N={n}: exit {:?}", out.status))?;
                Ok::<_, String>(out.stdout)
            };
            let first = run()?;
            for _ in 0..2 {
                ensure(run()? == first, || format!("N={n} {mode}: output differs between runs"))?;
            }
        }
    }
    Ok("route --format json byte-identical over 3 runs for N=2,4,8,16".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 exact figures for N=8", criterion_1),
        ("2 closed-form equivalence", criterion_2),
        ("3 symmetry and bounds", criterion_3),
        ("4 maximizer characterization", criterion_4),
        ("5 terminal-ordered maximum", criterion_5),
        ("6 router optimality", criterion_6),
        ("7 gray-code equalities", criterion_7),
        ("8 bisection non-maximality", criterion_8),
        ("9 deterministic json", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
