use engel_core::lab::Executor;
use rayon::prelude::*;

/// Runs executor maps on a dedicated rayon pool. Results keep input order.
pub struct Pool {
    pool: rayon::ThreadPool,
}

impl Pool {
    /// `None` picks rayon's default thread count.
    pub fn new(workers: Option<usize>) -> Result<Self, rayon::ThreadPoolBuildError> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = workers {
            builder = builder.num_threads(n.max(1));
        }
        Ok(Self { pool: builder.build()? })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Pool {
    fn map<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(&self, items: &[T], f: F) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}
