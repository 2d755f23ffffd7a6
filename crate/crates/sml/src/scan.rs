//! Chunked parallel scans. Each chunk folds into its own accumulator and
//! the accumulators are merged; the merge is order-independent, so the
//! report does not depend on the thread count or the chunk size.

use rayon::prelude::*;
use sml_core::search::{enumerate_graphs, FamilySpec, SearchAccumulator, SearchError, SearchReport};
use sml_core::Graph;

/// Graphs per work unit.
pub const CHUNK: usize = 64;

/// Thread count: an explicit request, else `SML_THREADS`, else the number
/// of available cores.
pub fn resolve_threads(requested: Option<usize>, env: Option<&str>) -> usize {
    requested
        .or_else(|| env.and_then(|v| v.trim().parse().ok()))
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
}

pub fn parallel_search(
    family: FamilySpec,
    n: usize,
    graphs: &[Graph],
    threads: usize,
) -> Result<SearchReport, SearchError> {
    let seed = SearchAccumulator::new(family, n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    let merged = pool.install(|| {
        graphs
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut acc = seed.clone();
                for g in chunk {
                    acc.observe(g)?;
                }
                Ok::<_, SearchError>(acc)
            })
            .try_reduce(|| seed.clone(), |a, b| Ok(a.merge(b)))
    })?;
    merged.finish()
}

/// Parallel scan over the internally enumerated classes on `n` vertices.
pub fn parallel_search_enumerated(family: FamilySpec, n: usize, threads: usize) -> Result<SearchReport, SearchError> {
    parallel_search(family, n, &enumerate_graphs(n, false)?, threads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_resolution() {
        assert_eq!(resolve_threads(Some(3), Some("8")), 3);
        assert_eq!(resolve_threads(None, Some("8")), 8);
        assert!(resolve_threads(None, Some("zero")) >= 1);
        assert!(resolve_threads(Some(0), None) >= 1);
    }

    #[test]
    fn matches_the_sequential_scan() {
        let family = FamilySpec::KstMinorFree { s: 2, t: 3 };
        let graphs = enumerate_graphs(6, false).unwrap();
        let serial = sml_core::search::search_max_lambda(family, 6, graphs.clone()).unwrap();
        for threads in [1, 2, 5] {
            assert_eq!(parallel_search(family, 6, &graphs, threads).unwrap(), serial);
        }
    }
}
