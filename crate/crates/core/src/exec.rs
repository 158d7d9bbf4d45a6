//! Order-preserving map over a batch of independent instances.
//!
//! With the `parallel` feature the batch fans out over the ambient rayon
//! pool (callers can pin a pool size with `rayon::ThreadPool::install`);
//! without it the same code runs sequentially. Output order equals input
//! order either way, so report bytes do not depend on scheduling.

#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}
