//! Execution strategy for data-parallel loops.
//!
//! Probe trials, norm sweeps and membership grids are embarrassingly
//! parallel. With the default `parallel` feature they run on rayon;
//! without it every strategy degrades to a sequential loop, which keeps
//! single-threaded builds dependency-free and makes the two paths easy to
//! benchmark against each other.

/// How to run a batch of independent work items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Use the rayon thread pool (sequential if the `parallel` feature is off).
    #[default]
    Parallel,
    /// Run on the calling thread.
    Serial,
}

/// Maps `f` over `0..len`, preserving index order in the output.
pub fn map_indexed<U, F>(exec: Exec, len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match exec {
        Exec::Parallel => par_map(len, f),
        Exec::Serial => (0..len).map(f).collect(),
    }
}

#[cfg(feature = "parallel")]
fn par_map<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_preserve_order() {
        let par = map_indexed(Exec::Parallel, 100, |i| i * i);
        let ser = map_indexed(Exec::Serial, 100, |i| i * i);
        assert_eq!(par, ser);
        assert_eq!(par[7], 49);
    }
}
