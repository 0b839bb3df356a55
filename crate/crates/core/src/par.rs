//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it every helper runs sequentially. Results are
//! always returned in input order so callers stay deterministic.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Enumeration caps shared by the exponential procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Node cap for cycle, extension, labelling, isomorphism and removal searches.
    pub max_nodes: usize,
    /// Atom cap for satisfiability and model enumeration.
    pub max_atoms: usize,
    /// Formula cap for subset searches over a knowledgebase.
    pub max_formulas: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 20,
            max_atoms: 24,
            max_formulas: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Config {
    pub limits: Limits,
    pub exec: Execution,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Execution::Sequential,
            ..Config::default()
        }
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_max_nodes(mut self, n: usize) -> Self {
        self.limits.max_nodes = n;
        self
    }
}

pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn filter_map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().filter_map(f).collect();
    }
    let _ = exec;
    items.iter().filter_map(f).collect()
}

/// Keeps every `i` in `range` for which `keep(i)` holds, in ascending order.
pub fn filter_range<F>(exec: Execution, range: Range<u64>, keep: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().filter(|&i| keep(i)).collect();
    }
    let _ = exec;
    range.filter(|&i| keep(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let items: Vec<u32> = (0..1000).collect();
        let a = map(Execution::Sequential, &items, |x| x * 3);
        let b = map(Execution::Parallel, &items, |x| x * 3);
        assert_eq!(a, b);
        let a = filter_range(Execution::Sequential, 0..5000, |i| i % 7 == 3);
        let b = filter_range(Execution::Parallel, 0..5000, |i| i % 7 == 3);
        assert_eq!(a, b);
        let a = filter_map(Execution::Sequential, &items, |x| (x % 2 == 0).then_some(*x));
        let b = filter_map(Execution::Parallel, &items, |x| (x % 2 == 0).then_some(*x));
        assert_eq!(a, b);
    }
}
