//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the
//! rayon global pool; without it every mode runs sequentially.

/// Execution mode for the batch operations that accept one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

/// `(0..n).flat_map(f)` collected in index order.
pub(crate) fn flat_map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Vec<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().flat_map_iter(f).collect()
        }
        _ => (0..n).flat_map(f).collect(),
    }
}

/// `items.iter().map(f)` collected in order.
pub(crate) fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |i: usize| vec![i; i % 3];
        assert_eq!(flat_map_range(Exec::Sequential, 50, f), flat_map_range(Exec::Parallel, 50, f));
        let xs: Vec<u32> = (0..100).collect();
        assert_eq!(
            map_slice(Exec::Sequential, &xs, |x| x * 2),
            map_slice(Exec::Parallel, &xs, |x| x * 2)
        );
    }
}
