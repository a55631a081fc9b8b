//! Data-parallel helpers. With the `parallel` feature these fan out over rayon;
//! without it they run the same closures in order on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps every item and folds the results with an associative, commutative merge.
#[cfg(feature = "parallel")]
pub(crate) fn map_reduce<T, A, M, I, R>(items: &[T], map: M, identity: I, reduce: R) -> A
where
    T: Sync,
    A: Send,
    M: Fn(&T) -> A + Sync + Send,
    I: Fn() -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    items.par_iter().map(map).reduce(identity, reduce)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce<T, A, M, I, R>(items: &[T], map: M, identity: I, reduce: R) -> A
where
    M: Fn(&T) -> A,
    I: Fn() -> A,
    R: Fn(A, A) -> A,
{
    items.iter().map(map).fold(identity(), reduce)
}

/// Order-preserving map.
#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sizes the global pool. Only the first call takes effect; later calls and
/// sequential builds are no-ops.
#[cfg(feature = "parallel")]
pub fn set_threads(n: usize) {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn set_threads(_n: usize) {}
