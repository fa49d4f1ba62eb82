//! Order-preserving map that runs on rayon when the `parallel` feature is on.

/// Worker count selection for batch evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Workers {
    /// Rayon's global pool (all available cores).
    #[default]
    Auto,
    /// A dedicated pool of exactly this many threads; `1` runs inline.
    Fixed(usize),
}

/// Maps `f` over `items`, returning results in input order.
///
/// Without the `parallel` feature this is always a sequential map.
pub fn map_ordered<T, R, F>(items: &[T], workers: Workers, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match workers {
            Workers::Fixed(n) if n <= 1 => items.iter().map(f).collect(),
            Workers::Auto => items.par_iter().map(f).collect(),
            Workers::Fixed(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                // fall back to the global pool if a dedicated one can't be spawned
                Err(_) => items.par_iter().map(f).collect(),
            },
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        items.iter().map(f).collect()
    }
}

/// Sequential reference path, always available.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
