//! Criterion benchmarks over the toolkit's hot kernels: exact counting,
//! enumerator evaluation, distinguishing-partition condition checks, and
//! spine-guided detection next to its brute-force baseline.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use tourlab_core::canon::automorphism_count;
use tourlab_core::counting::{count_cf_indsub_to, count_indsub_to, decide_indsub_to};
use tourlab_core::detect::{detect_pattern, tt_number};
use tourlab_core::enumerator::{
    alternating_enumerator_antimatching, alternating_enumerator_naive, treewidth_exact,
};
use tourlab_core::structures::{
    anti_matching, random_coloring, random_tournament, transitive_tournament,
};
use tourlab_core::ttunique::is_tt_unique;
use tourlab_core::ColoredTournament;

fn bench_counting(c: &mut Criterion) {
    let pattern = transitive_tournament(5);
    let host = random_tournament(12, 7);
    c.bench_function("count_indsub_to/tt5_in_order12", |b| {
        b.iter(|| count_indsub_to(black_box(&pattern), black_box(&host)))
    });

    let colored = ColoredTournament::new(random_tournament(12, 8), random_coloring(12, 4, 9))
        .expect("valid host");
    let small = random_tournament(4, 3);
    c.bench_function("count_cf_indsub_to/order4_in_order12", |b| {
        b.iter(|| count_cf_indsub_to(black_box(&small), black_box(&colored)).unwrap())
    });
}

fn bench_enumerator(c: &mut Criterion) {
    let t = random_tournament(5, 11);
    let antim = anti_matching(5);
    c.bench_function("alternating_enumerator/subset_sum_order5", |b| {
        b.iter(|| alternating_enumerator_naive(black_box(&t), black_box(&antim)).unwrap())
    });
    c.bench_function("alternating_enumerator/closed_form_order5", |b| {
        b.iter(|| alternating_enumerator_antimatching(black_box(&t)).unwrap())
    });
    let wide = anti_matching(8);
    c.bench_function("treewidth_exact/antimatching_order8", |b| {
        b.iter(|| treewidth_exact(black_box(&wide)).unwrap())
    });
}

fn bench_detection(c: &mut Criterion) {
    let pattern = random_tournament(6, 2);
    let host = random_tournament(12, 13);
    c.bench_function("detect_pattern/order6_in_order12", |b| {
        b.iter(|| detect_pattern(black_box(&pattern), black_box(&host)))
    });
    c.bench_function("decide_indsub_to/order6_in_order12", |b| {
        b.iter(|| decide_indsub_to(black_box(&pattern), black_box(&host)))
    });
}

fn bench_canon(c: &mut Criterion) {
    let t = random_tournament(32, 21);
    c.bench_function("automorphism_count/order32", |b| {
        b.iter(|| automorphism_count(black_box(&t)))
    });
}

fn bench_partition_conditions(c: &mut Criterion) {
    let t = random_tournament(64, 5);
    let z = vec![1usize];
    let d: Vec<usize> = (2..=64).collect();
    c.bench_function("tt_number/order64", |b| {
        b.iter(|| tt_number(black_box(&t)))
    });
    c.bench_function("is_tt_unique/order64_z1", |b| {
        b.iter(|| is_tt_unique(black_box(&t), black_box(&d), black_box(&z)).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_counting,
    bench_enumerator,
    bench_detection,
    bench_canon
);
criterion_group! {
    name = heavy;
    config = Criterion::default().sample_size(10);
    targets = bench_partition_conditions
}
criterion_main!(kernels, heavy);
