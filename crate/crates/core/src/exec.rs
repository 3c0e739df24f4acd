//! Element sweeps, run on the rayon pool when the `parallel` feature is on
//! and sequentially otherwise.
//!
//! Every sweep has a deterministic result: searches return the least matching
//! index and maps preserve index order, so the two strategies are
//! interchangeable.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How an element sweep is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Strategy {
    /// Least `i < n` with `pred(i)`.
    pub fn first<F>(self, n: usize, pred: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            Strategy::Sequential => (0..n).find(|&i| pred(i)),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().find_first(|&i| pred(i)),
        }
    }

    /// `f(0), .., f(n - 1)` in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Strategy::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    /// Maps a slice of inputs, preserving order.
    pub fn map_slice<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_is_least_index() {
        let s = Strategy::default();
        assert_eq!(s.first(1000, |i| i % 7 == 3 && i > 100), Some(101));
        assert_eq!(s.first(10, |_| false), None);
        assert_eq!(Strategy::Sequential.first(0, |_| true), None);
    }

    #[test]
    fn map_keeps_order() {
        let v = Strategy::default().map(100, |i| i * i);
        assert_eq!(v, Strategy::Sequential.map(100, |i| i * i));
    }
}
