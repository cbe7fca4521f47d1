/// Desk-scale bounds for the exponential operations.
///
/// The defaults keep every single call well under ten seconds on a laptop.
/// [`Limits::unlimited`] lifts all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximal chains listed by `enumerate_max_chains`.
    pub max_chain_enumeration: u64,
    /// Candidate copies produced by `enumerate_copies`.
    pub max_copy_candidates: u64,
    /// Chain-universe size accepted by `find_tiling`.
    pub max_tiling_universe: u64,
    /// Chain-universe size accepted when counting every tiling.
    pub max_count_universe: u64,
    /// Search nodes visited while counting tilings.
    pub max_search_nodes: u64,
    /// Largest `n` for the subset sum over binomial determinants.
    pub max_path_n: usize,
    /// Largest weight-vector length and `k` for the brute-force weighted oracles.
    pub max_weight_oracle: usize,
    /// Largest fence size for the brute-force ideal count.
    pub max_fence_oracle: usize,
    /// Largest level count for dense incidence matrices.
    pub max_matrix_levels: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_chain_enumeration: 1_000_000,
            max_copy_candidates: 100_000,
            max_tiling_universe: 10_000,
            max_count_universe: 30,
            max_search_nodes: 50_000_000,
            max_path_n: 14,
            max_weight_oracle: 12,
            max_fence_oracle: 20,
            max_matrix_levels: 12,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_chain_enumeration: u64::MAX,
            max_copy_candidates: u64::MAX,
            max_tiling_universe: u64::MAX,
            max_count_universe: u64::MAX,
            max_search_nodes: u64::MAX,
            max_path_n: usize::MAX,
            max_weight_oracle: usize::MAX,
            max_fence_oracle: 63,
            max_matrix_levels: usize::MAX,
        }
    }
}
