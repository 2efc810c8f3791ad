//! Data-parallel map over independent jobs.
//!
//! With the `parallel` feature, work runs on a rayon pool sized by `jobs`
//! (`0` = all cores). `jobs == 1`, or a build without the feature, runs
//! sequentially. Output order always matches input order.

/// Maps `f` over `items`, returning results in input order.
pub fn par_map<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs != 1 && items.len() > 1 {
        use rayon::prelude::*;
        let run = || items.into_par_iter().map(&f).collect();
        if jobs == 0 {
            return run();
        }
        return match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        };
    }
    let _ = jobs;
    items.into_iter().map(f).collect()
}

/// Worker threads a call with this `jobs` value would use.
pub fn effective_jobs(jobs: usize) -> usize {
    if cfg!(feature = "parallel") {
        match jobs {
            0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
            j => j,
        }
    } else {
        1
    }
}
