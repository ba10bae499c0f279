//! Small helpers for subsets encoded as `u64` masks.

/// Iterates every submask of `mask`, starting from 0 and ending with `mask`
/// itself, in increasing numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask {
            None
        } else {
            Some(current.wrapping_sub(mask) & mask)
        };
        Some(current)
    })
}

/// Iterates every superset of `mask` inside `full`, in increasing order.
pub fn supersets(mask: u64, full: u64) -> impl Iterator<Item = u64> {
    debug_assert_eq!(mask & !full, 0);
    submasks(full & !mask).map(move |extra| extra | mask)
}

/// Indices of the set bits of `mask`, lowest first.
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Mask with the low `n` bits set. `n` may be 64.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}
