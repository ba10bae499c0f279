/// Limits on exhaustive enumeration. Every checker in the crate is exact
/// within these bounds and refuses larger inputs with [`crate::Error::CapExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest regular closed carrier / Boolean algebra that is tabulated.
    pub elements: usize,
    /// Largest algebra on which the four- and five-variable axiom sweeps run.
    pub tuple_elements: usize,
    /// Largest world set whose powerset is turned into an algebra.
    pub powerset_worlds: usize,
    /// Largest world set for superset enumeration and split searches.
    pub naive_worlds: usize,
}

/// Hard ceiling: algebra elements are stored as bit positions of a `u64`.
pub const MAX_ELEMENTS: usize = 64;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 64,
            tuple_elements: 32,
            powerset_worlds: 5,
            naive_worlds: 16,
        }
    }
}

impl Caps {
    pub(crate) fn check(size: usize, cap: usize, what: &'static str) -> crate::Result<()> {
        if size > cap {
            Err(crate::Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}
