//! Fixed-width 128-bit vertex sets.
//!
//! Every exact search in this crate runs over at most [`MAX_BITS`] ground
//! elements, so a plain `u128` is the set type of choice.

pub type Bits = u128;

pub const MAX_BITS: usize = 128;

#[inline]
pub fn bit(i: usize) -> Bits {
    1u128 << i
}

#[inline]
pub fn contains(set: Bits, i: usize) -> bool {
    set >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: Bits, b: Bits) -> bool {
    a & !b == 0
}

#[inline]
pub fn count(set: Bits) -> usize {
    set.count_ones() as usize
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> Bits {
    if n >= MAX_BITS {
        Bits::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Bits {
    it.into_iter().fold(0, |acc, i| acc | bit(i))
}

/// Iterator over set bits, lowest first.
pub fn iter(mut set: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

pub fn to_vec(set: Bits) -> Vec<usize> {
    iter(set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_edges() {
        let s = from_indices([0, 5, 127]);
        assert_eq!(to_vec(s), vec![0, 5, 127]);
        assert_eq!(count(s), 3);
        assert!(contains(s, 127));
        assert!(is_subset(bit(5), s));
        assert_eq!(full(128), u128::MAX);
        assert_eq!(full(3), 0b111);
    }
}
