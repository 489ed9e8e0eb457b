use crate::error::Result;
use crate::poly::MPoly;

/// Maps every item to a polynomial and adds the results. Exact addition makes
/// the sum independent of scheduling.
pub(crate) fn sum_polys<T, F>(items: &[T], nvars: usize, f: F) -> Result<MPoly>
where
    T: Sync,
    F: Fn(&T) -> Result<MPoly> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(&f)
            .try_reduce(|| MPoly::zero(nvars), |a, b| Ok(&a + &b))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items
            .iter()
            .try_fold(MPoly::zero(nvars), |acc, t| Ok(&acc + &f(t)?))
    }
}

/// Maps items in order, possibly in parallel.
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(&f).collect()
    }
}
