//! Data-parallel map helper. With the `parallel` feature (default) work
//! fans out over rayon; without it the same call runs sequentially.
//! Results preserve input order either way, so outputs never depend on
//! the feature or thread count.

/// Applies `f` to every element, in parallel when enabled.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

/// Applies `f` to every element sequentially.
#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}
