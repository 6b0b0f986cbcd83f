//! Data-parallel helpers. With the `parallel` feature the work is spread over
//! the rayon pool; without it every call runs sequentially. Output order
//! always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether `Parallel` actually fans out in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}
