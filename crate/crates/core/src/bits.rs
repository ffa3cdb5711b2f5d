//! Fixed-width bit view of a cut index.
//!
//! Bit positions are numbered from the right starting at 1, so
//! `bit(1)` is the least significant bit and `bit(width)` the most
//! significant one inside the view.

/// A nonnegative integer read as exactly `width` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitView {
    value: u64,
    width: u32,
}

impl BitView {
    /// Panics if `value` does not fit in `width` bits.
    pub fn new(value: u64, width: u32) -> Self {
        assert!(width <= 63, "bit width {width} too large");
        assert!(
            value >> width == 0,
            "value {value} does not fit in {width} bits"
        );
        BitView { value, width }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// The `j`-th bit from the right, `1 <= j <= width`.
    pub fn bit(&self, j: u32) -> u8 {
        debug_assert!((1..=self.width).contains(&j));
        ((self.value >> (j - 1)) & 1) as u8
    }

    /// Ones minus zeros among bit positions `j+1..=width`.
    ///
    /// `excess(width)` is 0 and `excess(0)` covers the whole view.
    pub fn excess(&self, j: u32) -> i64 {
        debug_assert!(j <= self.width);
        let span = self.width - j;
        let ones = (self.value >> j).count_ones() as i64;
        2 * ones - span as i64
    }

    /// Number of trailing zero bits; a zero value reports `width`.
    pub fn trailing_zeros(&self) -> u32 {
        if self.value == 0 {
            self.width
        } else {
            self.value.trailing_zeros()
        }
    }

    /// Bits from most to least significant, as a `0`/`1` string.
    pub fn to_binary_string(&self) -> String {
        (1..=self.width)
            .rev()
            .map(|j| if self.bit(j) == 1 { '1' } else { '0' })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_and_excess() {
        // 0b011 in three bits
        let v = BitView::new(3, 3);
        assert_eq!((v.bit(1), v.bit(2), v.bit(3)), (1, 1, 0));
        assert_eq!(v.excess(0), 1);
        assert_eq!(v.excess(1), 0);
        assert_eq!(v.excess(2), -1);
        assert_eq!(v.excess(3), 0);
        assert_eq!(v.trailing_zeros(), 0);
        assert_eq!(v.to_binary_string(), "011");
    }

    #[test]
    fn zero_has_full_trailing_run() {
        assert_eq!(BitView::new(0, 5).trailing_zeros(), 5);
        assert_eq!(BitView::new(0, 0).trailing_zeros(), 0);
        assert_eq!(BitView::new(8, 5).trailing_zeros(), 3);
    }

    #[test]
    fn excess_matches_bitwise_count() {
        for width in 0..8u32 {
            for value in 0..(1u64 << width) {
                let v = BitView::new(value, width);
                for j in 0..=width {
                    let mut e = 0i64;
                    for pos in (j + 1)..=width {
                        e += if v.bit(pos) == 1 { 1 } else { -1 };
                    }
                    assert_eq!(v.excess(j), e, "value {value} width {width} j {j}");
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn rejects_overflowing_value() {
        BitView::new(8, 3);
    }
}
