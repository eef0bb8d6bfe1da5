/// Size caps that guard matrix construction and exhaustive enumeration.
///
/// The defaults keep every operation comfortably at desk scale; callers (the
/// CLI in particular) may raise them explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest variable count `m` for which length-`2^m` evaluation vectors
    /// (and hence Reed-Muller matrices) are materialized.
    pub max_m: u32,
    /// Brute-force codeword enumeration is refused when the generator has
    /// more than this many rows (i.e. more than `2^bruteforce_log2` words).
    pub bruteforce_log2: u32,
    /// Row-space containment checks between Reed-Muller product codes are
    /// refused when `m1 + m2` exceeds this.
    pub containment_m_sum: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_m: 24,
            bruteforce_log2: 20,
            containment_m_sum: 12,
        }
    }
}
