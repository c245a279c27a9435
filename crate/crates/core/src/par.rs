//! Data-parallel helpers.
//!
//! With the `parallel` feature every helper fans out over rayon's pool; without
//! it (or inside [`sequential`]) the same work runs on the calling thread. Work
//! is always split into index ranges that depend only on the input size, and
//! results come back in index order, so outputs are identical in both modes.

use std::cell::Cell;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` with every helper in this module forced onto the calling thread.
pub fn sequential<R>(f: impl FnOnce() -> R) -> R {
    struct Reset(bool);
    impl Drop for Reset {
        fn drop(&mut self) {
            FORCE_SEQUENTIAL.with(|c| c.set(self.0));
        }
    }
    let prev = FORCE_SEQUENTIAL.with(|c| c.replace(true));
    let _reset = Reset(prev);
    f()
}

/// True when helpers will dispatch to the rayon pool.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.with(|c| c.get())
}

/// Caps the global worker pool. Only the first call has any effect.
pub fn set_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// `(0..n).map(f).collect()`, in index order.
pub fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Splits `0..len` into fixed-size blocks and maps each block, in order.
///
/// Block boundaries depend only on `len` and `block`, never on the number of
/// workers.
pub fn map_blocks<T, F>(len: usize, block: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<usize>) -> T + Sync + Send,
{
    let block = block.max(1);
    let count = len.div_ceil(block);
    map_indices(count, |b| {
        let start = b * block;
        f(start..(start + block).min(len))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_cover_range_in_order() {
        let ranges = map_blocks(10, 3, |r| r);
        assert_eq!(ranges, vec![0..3, 3..6, 6..9, 9..10]);
        assert!(map_blocks(0, 3, |r| r).is_empty());
    }

    #[test]
    fn sequential_scope_restores_flag() {
        let inside = sequential(is_parallel);
        assert!(!inside);
        assert_eq!(is_parallel(), cfg!(feature = "parallel"));
    }

    #[test]
    fn both_modes_agree() {
        let par = map_indices(1000, |i| i * i);
        let seq = sequential(|| map_indices(1000, |i| i * i));
        assert_eq!(par, seq);
    }
}
