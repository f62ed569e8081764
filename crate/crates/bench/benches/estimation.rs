use std::num::NonZeroUsize;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use harmonica::{
    count_records_stream, estimate_harmonic, run_experiment, ExperimentConfig, RandomStream,
};

fn bench_record_scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_records_stream");
    for x in [256u64, 4096, 65536] {
        group.throughput(Throughput::Elements(x));
        group.bench_with_input(BenchmarkId::from_parameter(x), &x, |b, &x| {
            let mut stream_id = 0u64;
            b.iter(|| {
                stream_id = stream_id.wrapping_add(1);
                let mut stream = RandomStream::new(0, stream_id);
                count_records_stream(&mut stream, x).unwrap().count
            });
        });
    }
    group.finish();
}

fn bench_estimator_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("estimate_harmonic_x4096_t256");
    group.sample_size(20);
    group.throughput(Throughput::Elements(4096 * 256));
    for workers in [1usize, 2, 4, 8] {
        group.bench_with_input(
            BenchmarkId::from_parameter(workers),
            &workers,
            |b, &workers| {
                let parallelism = NonZeroUsize::new(workers).unwrap();
                b.iter(|| estimate_harmonic(4096, 256, 0, parallelism).unwrap().mean);
            },
        );
    }
    group.finish();
}

fn bench_experiment_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_experiment");
    group.sample_size(10);
    group.bench_function("base4_powers6_t100", |b| {
        let config = ExperimentConfig {
            base: 4,
            max_power: 6,
            trials: 100,
            master_seed: 0,
            parallelism: NonZeroUsize::new(4).unwrap(),
        };
        b.iter(|| run_experiment(&config).unwrap().len());
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_record_scans,
    bench_estimator_scaling,
    bench_experiment_table
);
criterion_main!(benches);
