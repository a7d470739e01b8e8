//! Deterministic reductions.
//!
//! Work is split into fixed-size chunks; each chunk is accumulated with a
//! Neumaier compensated sum and the per-chunk partials are combined pairwise
//! in index order. The result is bit-identical whether chunks are evaluated
//! on one thread or many, so seeded runs reproduce regardless of
//! `RAYON_NUM_THREADS`.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const DEFAULT_CHUNK: usize = 8192;

/// Compensated (Neumaier) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Combine a list of partials pairwise, reducing adjacent pairs until one
/// value remains. The tree depends only on the list length.
pub fn pairwise_total(mut parts: Vec<f64>) -> f64 {
    if parts.is_empty() {
        return 0.0;
    }
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len() / 2 + 1);
        let mut it = parts.chunks_exact(2);
        for pair in &mut it {
            next.push(pair[0] + pair[1]);
        }
        if let [last] = it.remainder() {
            next.push(*last);
        }
        parts = next;
    }
    parts[0]
}

/// Map chunk indices to partial results, in parallel when the `parallel`
/// feature is enabled. Output order is always by chunk index.
#[cfg(feature = "parallel")]
pub fn map_chunks<T: Send, F: Fn(usize) -> T + Sync + Send>(nchunks: usize, f: F) -> Vec<T> {
    (0..nchunks).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_chunks<T: Send, F: Fn(usize) -> T + Sync + Send>(nchunks: usize, f: F) -> Vec<T> {
    (0..nchunks).map(f).collect()
}

/// Sequential twin of [`map_chunks`], kept unconditionally for benchmarks and
/// for verifying that the parallel path returns identical bits.
pub fn map_chunks_seq<T: Send, F: Fn(usize) -> T + Sync>(nchunks: usize, f: F) -> Vec<T> {
    (0..nchunks).map(f).collect()
}

fn chunk_ranges(n: usize, chunk: usize) -> usize {
    n.div_ceil(chunk)
}

/// Σ f(i) for i in 0..n with the fixed reduction tree.
pub fn sum_indexed<F: Fn(usize) -> f64 + Sync>(n: usize, chunk: usize, f: F) -> f64 {
    let chunk = chunk.max(1);
    let parts = map_chunks(chunk_ranges(n, chunk), |c| {
        let lo = c * chunk;
        let hi = ((c + 1) * chunk).min(n);
        let mut acc = Neumaier::default();
        for i in lo..hi {
            acc.add(f(i));
        }
        acc.total()
    });
    pairwise_total(parts)
}

/// Σ of an f64 pair per index (e.g. value and its square), fixed tree.
pub fn sum_pairs_indexed<F: Fn(usize) -> (f64, f64) + Sync>(
    n: usize,
    chunk: usize,
    f: F,
) -> (f64, f64) {
    let chunk = chunk.max(1);
    let parts = map_chunks(chunk_ranges(n, chunk), |c| {
        let lo = c * chunk;
        let hi = ((c + 1) * chunk).min(n);
        let (mut a, mut b) = (Neumaier::default(), Neumaier::default());
        for i in lo..hi {
            let (x, y) = f(i);
            a.add(x);
            b.add(y);
        }
        (a.total(), b.total())
    });
    let (xs, ys): (Vec<f64>, Vec<f64>) = parts.into_iter().unzip();
    (pairwise_total(xs), pairwise_total(ys))
}
