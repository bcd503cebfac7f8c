//! Data-parallel map helpers with a sequential fallback.
//!
//! Hot loops in this crate (sweeps over q, subset sums, per-character
//! scans) are embarrassingly parallel. With the `parallel` feature (on by
//! default) they run on rayon; without it the same entry points run
//! sequentially. The `*_seq` variants are always available so benchmarks
//! can compare both paths in one build.

/// Map `f` over `items`, in parallel when the `parallel` feature is enabled.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Sequential map, kept available in all builds for benchmarking.
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Map over an index range, in parallel when enabled.
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}

/// Sequential range map for benchmark comparison.
pub fn map_range_seq<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    range.map(f).collect()
}
