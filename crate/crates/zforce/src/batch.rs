//! Order-preserving parallel map over a bounded worker pool.

use rayon::prelude::*;
use rayon::ThreadPool;

/// A pool of `jobs` workers; `0` lets rayon pick one per core.
pub fn worker_pool(jobs: usize) -> Result<ThreadPool, rayon::ThreadPoolBuildError> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build()
}

/// Applies `f` to every item on `pool`. Results come back in input order.
pub fn ordered_map<T, U, F>(pool: &ThreadPool, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    pool.install(|| items.par_iter().map(&f).collect())
}
