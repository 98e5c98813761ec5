use criterion::{black_box, criterion_group, criterion_main, Criterion};
use polywedge::census::{closed_form, count_small_covers};
use polywedge::oracle::count_classes_bruteforce;
use polywedge::polygon::enumerate_classes;
use polywedge::JTuple;

fn j(s: &str) -> JTuple {
    s.parse().unwrap()
}

fn classes(c: &mut Criterion) {
    c.bench_function("enumerate_classes(14)", |b| {
        b.iter(|| enumerate_classes(black_box(14)))
    });
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_small_covers");
    for text in ["3,3,3,3", "3,3,3,3,3", "3,3,3,3,3,3"] {
        let jt = j(text);
        group.bench_function(text, |b| {
            b.iter(|| count_small_covers(jt.m(), black_box(&jt)))
        });
    }
    group.finish();
    let jt = j("3,3,3,3,3,3");
    c.bench_function("closed_form(6)", |b| {
        b.iter(|| closed_form(6, black_box(&jt)))
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("bruteforce");
    group.sample_size(10);
    for text in ["2,2,2,1", "2,1,2,1,1", "1,1,1,1,1,1,1,1"] {
        let jt = j(text);
        group.bench_function(text, |b| {
            b.iter(|| count_classes_bruteforce(jt.m(), black_box(&jt)))
        });
    }
    group.finish();
}

criterion_group!(benches, classes, census, oracle);
criterion_main!(benches);
