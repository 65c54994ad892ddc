//! Data-parallel helpers. With the `parallel` feature these fan out over the
//! rayon pool; without it (or with [`Execution::Sequential`]) they run in order.
//! Results are always returned in index order, so callers see identical output
//! either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map_range<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

pub fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn for_each_mut<T, F>(exec: Execution, items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        items.par_iter_mut().for_each(f);
        return;
    }
    let _ = exec;
    items.iter_mut().for_each(f);
}

/// Number of attempts evaluated together by [`first_accepted`].
pub fn batch_width(exec: Execution) -> usize {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return rayon::current_num_threads().max(1);
    }
    let _ = exec;
    1
}

/// Runs `f(0), f(1), ...` in batches and returns the lowest index whose result
/// is accepted, or the last result computed when none is.
pub fn first_accepted<R, F, A>(exec: Execution, n: usize, f: F, accept: A) -> Option<(usize, R, bool)>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
    A: Fn(&R) -> bool,
{
    let width = batch_width(exec);
    let mut last = None;
    let mut start = 0;
    while start < n {
        let end = (start + width).min(n);
        let results = map_range(exec, end - start, |k| f(start + k));
        for (k, r) in results.into_iter().enumerate() {
            if accept(&r) {
                return Some((start + k, r, true));
            }
            last = Some((start + k, r, false));
        }
        start = end;
    }
    last
}
