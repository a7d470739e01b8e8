//! Parallel vs. sequential engine benchmarks.
//!
//! The reduction tree is fixed, so both paths produce identical bits; these
//! benches measure the speedup of the rayon-backed chunk map on the two hot
//! workloads (Monte Carlo sampling and tensor-grid summation).
//!
//! Run with `cargo bench -p holobound`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use holobound::integrate::sampler::{FactorLaw, SpaceLaw};
use holobound::rng::chunk_rng;
use holobound::sum::{map_chunks, map_chunks_seq, pairwise_total, Neumaier};
use holobound::{CPoint, HoloFunction, PolyExpTerm};

const CHUNK: u64 = 16_384;

fn test_function() -> HoloFunction {
    HoloFunction::from_terms(
        vec![
            PolyExpTerm::new(Complex64::new(1.0, 0.0), vec![0], vec![Complex64::new(0.3, 0.1)])
                .unwrap(),
            PolyExpTerm::new(Complex64::new(0.5, -0.2), vec![2], vec![Complex64::new(0.0, 0.0)])
                .unwrap(),
        ],
        "bench",
    )
    .unwrap()
}

fn mc_chunk_sum(samples: u64, parallel: bool) -> f64 {
    let law = SpaceLaw::Product(vec![FactorLaw::Gaussian { beta: 1.0 }]);
    let f = test_function();
    let nchunks = samples.div_ceil(CHUNK) as usize;
    let work = |c: usize| {
        let mut rng = chunk_rng(42, 7, c as u64);
        let lo = c as u64 * CHUNK;
        let hi = ((c as u64 + 1) * CHUNK).min(samples);
        let mut acc = Neumaier::default();
        for _ in lo..hi {
            let z = law.draw(&mut rng);
            let lg = 2.0 * f.log_abs(&z).unwrap();
            acc.add(lg.exp());
        }
        acc.total()
    };
    let parts = if parallel {
        map_chunks(nchunks, work)
    } else {
        map_chunks_seq(nchunks, work)
    };
    pairwise_total(parts)
}

fn tensor_sum(nodes: usize, parallel: bool) -> f64 {
    // polar-grid style workload: exp of a per-node log weight plus integrand
    let f = test_function();
    let nchunks = nodes.div_ceil(CHUNK as usize);
    let work = |c: usize| {
        let lo = c * CHUNK as usize;
        let hi = ((c + 1) * CHUNK as usize).min(nodes);
        let mut acc = Neumaier::default();
        for i in lo..hi {
            let r = 4.0 * (i as f64 + 0.5) / nodes as f64;
            let th = std::f64::consts::TAU * (i as f64) / 64.0;
            let z = CPoint::scalar(Complex64::from_polar(r, th));
            let lw = -r * r - (nodes as f64).ln();
            acc.add((lw + 2.0 * f.log_abs(&z).unwrap()).exp());
        }
        acc.total()
    };
    let parts = if parallel {
        map_chunks(nchunks, work)
    } else {
        map_chunks_seq(nchunks, work)
    };
    pairwise_total(parts)
}

fn bench_monte_carlo(c: &mut Criterion) {
    // the switch must not change the value
    assert_eq!(
        mc_chunk_sum(100_000, true).to_bits(),
        mc_chunk_sum(100_000, false).to_bits()
    );
    let mut group = c.benchmark_group("mc_weighted_sum");
    for &samples in &[100_000u64, 1_000_000] {
        group.bench_with_input(BenchmarkId::new("parallel", samples), &samples, |b, &n| {
            b.iter(|| mc_chunk_sum(n, true))
        });
        group.bench_with_input(
            BenchmarkId::new("sequential", samples),
            &samples,
            |b, &n| b.iter(|| mc_chunk_sum(n, false)),
        );
    }
    group.finish();
}

fn bench_tensor(c: &mut Criterion) {
    assert_eq!(
        tensor_sum(262_144, true).to_bits(),
        tensor_sum(262_144, false).to_bits()
    );
    let mut group = c.benchmark_group("tensor_grid_sum");
    for &nodes in &[65_536usize, 1_048_576] {
        group.bench_with_input(BenchmarkId::new("parallel", nodes), &nodes, |b, &n| {
            b.iter(|| tensor_sum(n, true))
        });
        group.bench_with_input(BenchmarkId::new("sequential", nodes), &nodes, |b, &n| {
            b.iter(|| tensor_sum(n, false))
        });
    }
    group.finish();
}

criterion_group! {
    name = engine;
    config = Criterion::default().sample_size(10);
    targets = bench_monte_carlo, bench_tensor
}
criterion_main!(engine);
