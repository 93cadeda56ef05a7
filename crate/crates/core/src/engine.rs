//! Shared driver that runs a per-matching visitor over every perfect
//! matching, split into disjoint prefix shards and spread over a rayon pool.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::{shard_depth, shard_prefixes, MatchingStream};

/// Work units between progress callbacks.
pub const PROGRESS_INTERVAL: u64 = 1 << 24;

const FLUSH_EVERY: u64 = 1 << 14;
const MAX_SHARD: u64 = 1 << 22;

pub type ProgressFn = Arc<dyn Fn(u64) + Send + Sync>;

/// Knobs shared by the enumerators.
#[derive(Clone)]
pub struct EnumOptions {
    pub threads: usize,
    /// Called with the running number of processed work units (matchings,
    /// or signed matchings for unoriented runs) every [`PROGRESS_INTERVAL`].
    pub progress: Option<ProgressFn>,
}

impl EnumOptions {
    pub fn threads(threads: usize) -> Self {
        EnumOptions {
            threads,
            progress: None,
        }
    }

    pub fn with_progress(mut self, progress: ProgressFn) -> Self {
        self.progress = Some(progress);
        self
    }
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self::threads(1)
    }
}

impl fmt::Debug for EnumOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EnumOptions")
            .field("threads", &self.threads)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

struct Progress<'a> {
    done: AtomicU64,
    callback: Option<&'a ProgressFn>,
}

impl Progress<'_> {
    fn report(&self, units: u64) {
        let before = self.done.fetch_add(units, Ordering::Relaxed);
        let after = before + units;
        if let Some(cb) = self.callback {
            if before / PROGRESS_INTERVAL != after / PROGRESS_INTERVAL {
                cb(after);
            }
        }
    }
}

/// Runs `visit` on every perfect matching of `n` letters. Each shard gets
/// a fresh state from `init`; the states are returned in shard order, so
/// any associative merge of them is independent of scheduling.
/// `units_per_matching` only scales progress reporting.
pub(crate) fn run_sharded<S, I, V>(
    n: usize,
    opts: &EnumOptions,
    units_per_matching: u64,
    init: I,
    visit: V,
) -> Result<Vec<S>>
where
    S: Send,
    I: Fn() -> S + Sync,
    V: Fn(&mut S, &[u32]) + Sync,
{
    if opts.threads == 0 {
        return Err(Error::InvalidArgument(
            "thread count must be at least 1".into(),
        ));
    }
    let min_shards = (opts.threads as u64).saturating_mul(8);
    let depth = shard_depth(n, min_shards, MAX_SHARD);
    let prefixes = shard_prefixes(n, depth)?;
    let progress = Progress {
        done: AtomicU64::new(0),
        callback: opts.progress.as_ref(),
    };

    let run_shard = |prefix: &Vec<(u32, u32)>| -> Result<S> {
        let mut stream = MatchingStream::with_prefix(n, prefix)?;
        let mut state = init();
        let mut pending = 0u64;
        while let Some(tau) = stream.advance() {
            visit(&mut state, tau);
            pending += 1;
            if pending == FLUSH_EVERY {
                progress.report(pending * units_per_matching);
                pending = 0;
            }
        }
        progress.report(pending * units_per_matching);
        Ok(state)
    };

    if opts.threads == 1 {
        return prefixes.iter().map(run_shard).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::LimitExceeded(format!("thread pool: {e}")))?;
    pool.install(|| prefixes.par_iter().map(run_shard).collect())
}

/// Scratch for counting cycles of `outer ∘ inner` without clearing a
/// visited array between calls.
#[derive(Debug, Clone)]
pub(crate) struct CycleCounter {
    seen: Vec<u32>,
    stamp: u32,
}

impl CycleCounter {
    pub(crate) fn new(n: usize) -> Self {
        CycleCounter {
            seen: vec![0; n],
            stamp: 0,
        }
    }

    #[inline]
    pub(crate) fn count_composed(&mut self, outer: &[u32], inner: &[u32]) -> u32 {
        let n = self.seen.len();
        if n <= 64 {
            return count_composed_small(outer, inner, n);
        }
        if self.stamp == u32::MAX {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 0;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        let mut cycles = 0;
        for start in 0..self.seen.len() {
            if self.seen[start] == stamp {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while self.seen[x] != stamp {
                self.seen[x] = stamp;
                x = outer[inner[x] as usize] as usize;
            }
        }
        cycles
    }
}

/// Bitmask variant for at most 64 letters.
#[inline]
fn count_composed_small(outer: &[u32], inner: &[u32], n: usize) -> u32 {
    let outer = &outer[..n];
    let inner = &inner[..n];
    let mut unseen = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut cycles = 0;
    while unseen != 0 {
        let start = unseen.trailing_zeros();
        cycles += 1;
        let mut x = start;
        loop {
            unseen &= !(1u64 << x);
            x = outer[inner[x as usize] as usize];
            if x == start {
                break;
            }
        }
    }
    cycles
}

/// Connectivity of the vertex graph whose edges are the pairs of a
/// matching; vertices are given per letter.
#[derive(Debug, Clone)]
pub(crate) struct VertexConnectivity {
    vertex_of: Vec<u8>,
    adjacency: Vec<u64>,
    full: u64,
}

impl VertexConnectivity {
    /// `vertex_of[x]` is the vertex of letter `x`; at most 64 vertices.
    pub(crate) fn new(vertex_of: Vec<u8>, vertices: usize) -> Self {
        debug_assert!((1..=64).contains(&vertices));
        VertexConnectivity {
            vertex_of,
            adjacency: vec![0; vertices],
            full: if vertices == 64 {
                !0
            } else {
                (1u64 << vertices) - 1
            },
        }
    }

    #[inline]
    pub(crate) fn is_connected(&mut self, tau: &[u32]) -> bool {
        if self.full == 1 {
            return true;
        }
        self.adjacency.iter_mut().for_each(|a| *a = 0);
        for (x, &y) in tau.iter().enumerate() {
            let v = self.vertex_of[x];
            let w = self.vertex_of[y as usize];
            self.adjacency[v as usize] |= 1u64 << w;
        }
        let mut reach = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros();
            frontier &= frontier - 1;
            let fresh = self.adjacency[v as usize] & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        reach == self.full
    }
}

/// Vertex index of every letter, from the cycles of a vertex permutation.
pub(crate) fn vertex_labels(cycles: &[Vec<u32>], n: usize) -> Vec<u8> {
    let mut vertex_of = vec![0u8; n];
    for (v, cycle) in cycles.iter().enumerate() {
        for &x in cycle {
            vertex_of[x as usize] = v as u8;
        }
    }
    vertex_of
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    #[test]
    fn every_matching_is_visited_once_for_any_thread_count() {
        for threads in [1, 3] {
            let states = run_sharded(
                12,
                &EnumOptions::threads(threads),
                1,
                || 0u64,
                |s, _| *s += 1,
            )
            .unwrap();
            assert_eq!(states.iter().sum::<u64>(), 10395);
        }
    }

    #[test]
    fn zero_threads_is_rejected() {
        assert!(run_sharded(4, &EnumOptions::threads(0), 1, || (), |_, _| ()).is_err());
    }

    #[test]
    fn progress_fires_on_interval_boundaries() {
        let calls = Arc::new(Mutex::new(Vec::new()));
        let sink = calls.clone();
        let opts = EnumOptions::threads(1).with_progress(Arc::new(move |done| {
            sink.lock().unwrap().push(done);
        }));
        // 10395 matchings at 2^12 units each crosses 2^24 twice
        run_sharded(12, &opts, 1 << 12, || (), |_, _| ()).unwrap();
        let calls = calls.lock().unwrap();
        assert_eq!(calls.len(), 2);
    }

    #[test]
    fn cycle_counter_reuses_scratch() {
        let sigma = [1u32, 2, 0, 4, 5, 3, 7, 8, 9, 6];
        let tau = [1u32, 0, 3, 2, 7, 6, 5, 4, 9, 8];
        let mut c = CycleCounter::new(10);
        assert_eq!(c.count_composed(&sigma, &tau), 4);
        assert_eq!(c.count_composed(&sigma, &tau), 4);
    }

    #[test]
    fn wide_cycle_counter_matches_direct_count() {
        // 70 letters takes the stamped path
        let n = 70u32;
        let outer: Vec<u32> = (0..n).map(|x| (x * 3 + 1) % n).collect();
        let inner: Vec<u32> = (0..n).map(|x| x ^ 1).collect();
        let composed: Vec<u32> = inner.iter().map(|&x| outer[x as usize]).collect();
        let expected = crate::perm::count_cycles(&composed) as u32;
        let mut c = CycleCounter::new(n as usize);
        assert_eq!(c.count_composed(&outer, &inner), expected);
        c.stamp = u32::MAX;
        assert_eq!(c.count_composed(&outer, &inner), expected);
        assert_eq!(c.count_composed(&outer, &inner), expected);
    }
}
