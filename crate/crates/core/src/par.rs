//! Data-parallel map used by the verification sweeps. With the `parallel`
//! feature off everything runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep distributes its independent work items.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Rayon's current thread pool.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Exec::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u64> = (0..500).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        assert_eq!(seq, Exec::default().map(&items, |x| x * x));
        assert_eq!(seq[17], 289);
    }
}
