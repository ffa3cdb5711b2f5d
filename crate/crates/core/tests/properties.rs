use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use hypercube_layout::density::{density, density_closed_form, link_count, max_density, profile};
use hypercube_layout::layout::{build_netlist, build_netlist_with_order, total_wirelength};
use hypercube_layout::oracle::brute_density_profile;
use hypercube_layout::router::{extract_intervals, left_edge_route, verify_assignment, Certificate};
use hypercube_layout::{BitView, HypercubeRow, Netlist, PlacementScheme, TerminalMode};

fn placement() -> impl Strategy<Value = PlacementScheme> {
    prop::sample::select(PlacementScheme::ALL.to_vec())
}

fn mode() -> impl Strategy<Value = TerminalMode> {
    prop::sample::select(TerminalMode::ALL.to_vec())
}

/// A row of 2..=2^30 nodes and an interior cut.
fn row_and_cut() -> impl Strategy<Value = (HypercubeRow, usize)> {
    (1u32..=30).prop_flat_map(|d| {
        let row = HypercubeRow::from_dims(d).unwrap();
        (Just(row), 1..row.n())
    })
}

proptest! {
    #[test]
    fn closed_form_matches_summed_links((row, i) in row_and_cut()) {
        prop_assert_eq!(density_closed_form(&row, i).unwrap(), density(&row, i).unwrap());
    }

    #[test]
    fn density_symmetric_per_dimension((row, i) in row_and_cut()) {
        for k in 1..=row.dims() {
            prop_assert_eq!(link_count(&row, i, k).unwrap(), link_count(&row, row.n() - i, k).unwrap());
            prop_assert!(link_count(&row, i, k).unwrap() <= 1 << (k - 1));
        }
        prop_assert!(density(&row, i).unwrap() <= max_density(&row));
    }

    #[test]
    fn netlist_text_round_trips(d in 0u32..=7, placement in placement(), mode in mode()) {
        let net = build_netlist(HypercubeRow::from_dims(d).unwrap(), placement, mode);
        prop_assert_eq!(Netlist::from_text(&net.to_text()).unwrap(), net);
    }

    #[test]
    fn routing_certified(d in 1u32..=8, placement in placement(), mode in mode()) {
        let net = build_netlist(HypercubeRow::from_dims(d).unwrap(), placement, mode);
        let ivs = extract_intervals(&net);
        let a = left_edge_route(&ivs);
        prop_assert_eq!(verify_assignment(&ivs, &a).unwrap(), Certificate::Ok);
        prop_assert_eq!(a.track_count, brute_density_profile(&net).max_fine());
    }
}

#[test]
fn excess_reexpression_below_2_pow_16() {
    let width = 16;
    for i in 1u64..(1 << width) {
        let now = BitView::new(i, width);
        let prev = BitView::new(i - 1, width);
        let r = now.trailing_zeros();
        for p in 1..=width {
            let expected = if p > r {
                now.excess(p)
            } else {
                now.excess(p) + 2 * (r as i64 - p as i64 - 1)
            };
            assert_eq!(prev.excess(p), expected, "i={i} p={p} r={r}");
        }
    }
}

#[test]
fn profile_sum_is_total_wirelength() {
    for row in HypercubeRow::range(0, 12) {
        let n = row.n();
        let sum: usize = profile(&row).iter().sum();
        assert_eq!(sum, n / 2 * n.saturating_sub(1));
        let net = build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
        assert_eq!(sum, total_wirelength(&net));
    }
    for row in HypercubeRow::range(0, 10) {
        for placement in PlacementScheme::ALL {
            let net = build_netlist(row, placement, TerminalMode::FreePermutation);
            let table = brute_density_profile(&net);
            assert_eq!(table.gaps().iter().sum::<usize>(), total_wirelength(&net));
        }
    }
}

#[test]
fn free_arrangement_realizes_gap_density_through_nodes() {
    // evaluate the free-mode slot arrangement as fixed terminals
    for row in HypercubeRow::range(1, 10) {
        for placement in PlacementScheme::ALL {
            let mut net = build_netlist(row, placement, TerminalMode::FreePermutation);
            net.mode = TerminalMode::DimensionOrdered;
            assert_eq!(brute_density_profile(&net).max_fine(), max_density(&row), "{row} {placement}");
        }
    }
}

fn orderings(dims: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, dims: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == dims as usize {
            out.push(prefix.clone());
            return;
        }
        for s in 1..=dims {
            if !prefix.contains(&s) {
                prefix.push(s);
                extend(prefix, dims, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), dims, &mut out);
    out
}

#[test]
fn uniform_orderings_never_beat_the_penalty() {
    for dims in 3..=5u32 {
        let row = HypercubeRow::from_dims(dims).unwrap();
        let m = max_density(&row);
        let maxima: Vec<usize> = orderings(dims)
            .iter()
            .map(|order| {
                let net = build_netlist_with_order(row, PlacementScheme::Normal, order).unwrap();
                brute_density_profile(&net).max_fine()
            })
            .collect();
        assert!(maxima.iter().all(|&v| v > m), "{row}: {maxima:?}");
        assert_eq!(*maxima.iter().min().unwrap(), m + 1, "{row}");
        if dims == 3 {
            assert!(maxima.iter().all(|&v| v == m + 1));
        }
    }
}

#[test]
fn some_uniform_orderings_cost_two_tracks_at_n16() {
    let row = HypercubeRow::new(16).unwrap();
    let net = build_netlist_with_order(row, PlacementScheme::Normal, &[1, 3, 2, 4]).unwrap();
    let table = brute_density_profile(&net);
    // right of slot 2 on column 10 = 0b1010: S(11) = 10 plus leftward dims 2 and 4
    assert_eq!(table.slot(10, 2), 12);
    assert_eq!(table.max_fine(), max_density(&row) + 2);
    let ivs = extract_intervals(&net);
    assert_eq!(left_edge_route(&ivs).track_count, 12);
}

#[test]
fn corrupted_assignments_are_detected() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let d = rng.gen_range(2..=7);
        let placement = *PlacementScheme::ALL.choose(&mut rng).unwrap();
        let mode = *TerminalMode::ALL.choose(&mut rng).unwrap();
        let net = build_netlist(HypercubeRow::from_dims(d).unwrap(), placement, mode);
        let ivs = extract_intervals(&net);
        let good = left_edge_route(&ivs);
        let mut bad = good.clone();
        let w = rng.gen_range(0..ivs.len());
        // tracks holding a wire that overlaps w
        let clashing: Vec<usize> = (0..ivs.len())
            .filter(|&o| o != w && ivs[o].conflicts(&ivs[w]) && good.tracks[o] != good.tracks[w])
            .map(|o| good.tracks[o])
            .collect();
        if !clashing.is_empty() && rng.gen_bool(0.7) {
            bad.tracks[w] = *clashing.choose(&mut rng).unwrap();
            assert!(
                matches!(verify_assignment(&ivs, &bad).unwrap(), Certificate::Overlap { .. }),
                "moving wire {w} onto a clashing track went unnoticed"
            );
        } else {
            bad.tracks[w] = bad.track_count;
            bad.track_count += 1;
            assert!(matches!(
                verify_assignment(&ivs, &bad).unwrap(),
                Certificate::Suboptimal { .. }
            ));
        }
    }
}
