//! Intercolumn wire density of the normal row layout.
//!
//! Node `u` sits in column `u`. Cut `i` is the vertical line with `i`
//! columns to its left, so cuts `0` and `N` carry no wires. A dimension
//! `k` link joins columns `u` and `u + 2^(k-1)` and crosses every cut
//! strictly between them.

use crate::bits::BitView;
use crate::error::{Error, Result};
use crate::row::HypercubeRow;

/// Number of dimension-`k` links crossing cut `i`.
///
/// Evaluated from the closed sawtooth form
/// `i * (1 - 2 * (floor((i-1) / 2^(k-1)) mod 2)) mod 2^k` with floor
/// division and a nonnegative modulus, so `i = 0` is handled without a
/// special case.
pub fn link_count(row: &HypercubeRow, i: usize, k: u32) -> Result<usize> {
    row.check_cut(i)?;
    row.check_dim(k)?;
    Ok(sawtooth(i as i64, k) as usize)
}

fn sawtooth(i: i64, k: u32) -> i64 {
    let half = 1i64 << (k - 1);
    let parity = (i - 1).div_euclid(half).rem_euclid(2);
    (i * (1 - 2 * parity)).rem_euclid(half << 1)
}

/// Total number of links crossing cut `i`, summed over all dimensions.
pub fn density(row: &HypercubeRow, i: usize) -> Result<usize> {
    row.check_cut(i)?;
    Ok(density_unchecked(row, i))
}

pub(crate) fn density_unchecked(row: &HypercubeRow, i: usize) -> usize {
    (1..=row.dims())
        .map(|k| sawtooth(i as i64, k) as usize)
        .sum()
}

fn minus_one_pow(dims: u32) -> i64 {
    if dims.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Maximum intercolumn density, `(4N - (-1)^lg N - 3) / 6`.
///
/// Equals `floor(2N/3)` for `N >= 2` and 0 for the single-node row.
pub fn max_density(row: &HypercubeRow) -> usize {
    let n = row.n() as i64;
    let num = 4 * n - minus_one_pow(row.dims()) - 3;
    debug_assert_eq!(num % 6, 0);
    (num / 6) as usize
}

/// Leftmost cut attaining [`max_density`], `(N - (-1)^lg N) / 3`.
pub fn leftmost_max(row: &HypercubeRow) -> Result<usize> {
    row.require_nontrivial()?;
    let num = row.n() as i64 - minus_one_pow(row.dims());
    debug_assert_eq!(num % 3, 0);
    Ok((num / 3) as usize)
}

/// Density at an interior cut from the bit decomposition of `i`:
///
/// `S = (e(i,0) + N - 1)/2 + sum_{j=1}^{lg N - 1} 2^(j-2) * (+-e(i,j))`
///
/// where the sign is `+` when bit `j` of `i` is 0. The sum is evaluated
/// doubled so that the `j = 1` term stays integral.
pub fn density_closed_form(row: &HypercubeRow, i: usize) -> Result<usize> {
    if i == 0 || i >= row.n() {
        return Err(Error::InvalidCut {
            index: i,
            lo: 1,
            hi: row.n().saturating_sub(1),
        });
    }
    let bits = BitView::new(i as u64, row.dims());
    let mut twice = bits.excess(0) + row.n() as i64 - 1;
    for j in 1..row.dims() {
        let e = bits.excess(j);
        let signed = if bits.bit(j) == 0 { e } else { -e };
        twice += (1i64 << (j - 1)) * signed;
    }
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok((twice / 2) as usize)
}

/// All cuts attaining the maximum density, in increasing order.
///
/// Built directly from the binary pattern: reading `lg N` bits from the
/// left in pairs, each pair is `01` or `10`; when `lg N` is even the
/// final pair may also be `11`; when `lg N` is odd the one leftover bit
/// is `1`.
pub fn enumerate_maximizers(row: &HypercubeRow) -> Result<Vec<usize>> {
    row.require_nontrivial()?;
    let dims = row.dims();
    let pairs = dims / 2;
    let mut values: Vec<u64> = vec![0];
    for q in 0..pairs {
        let last_even_pair = dims.is_multiple_of(2) && q + 1 == pairs;
        let choices: &[u64] = if last_even_pair {
            &[0b01, 0b10, 0b11]
        } else {
            &[0b01, 0b10]
        };
        values = values
            .iter()
            .flat_map(|&v| choices.iter().map(move |&c| (v << 2) | c))
            .collect();
    }
    if dims % 2 == 1 {
        for v in values.iter_mut() {
            *v = (*v << 1) | 1;
        }
    }
    values.sort_unstable();
    Ok(values.into_iter().map(|v| v as usize).collect())
}

/// Densities at cuts `1..N`, i.e. every cut between two columns.
pub fn profile(row: &HypercubeRow) -> Vec<usize> {
    (1..row.n()).map(|i| density_unchecked(row, i)).collect()
}
