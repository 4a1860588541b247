use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lenslk::audit;
use lenslk::exact::gcd;
use lenslk::par::map_ordered;
use lenslk::report::{run_batch, OutputFormat};
use lenslk::LensSpace;

fn corpus(lines: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut out = String::new();
    let mut n = 0;
    while n < lines {
        let p = rng.gen_range(2..=400i64);
        let q = rng.gen_range(1..p);
        let (a, b) = (rng.gen_range(-500..=0i64), rng.gen_range(1..=500i64));
        if gcd(p, q) == 1 && gcd(a, b) == 1 {
            out.push_str(&format!("{p} {q} {a} {b}\n"));
            n += 1;
        }
    }
    out
}

fn jobs() -> [(&'static str, usize); 2] {
    let n = std::thread::available_parallelism().map_or(4, |n| n.get()).max(4);
    [("sequential", 1), ("parallel", n)]
}

fn batch(c: &mut Criterion) {
    let text = corpus(2000);
    let mut g = c.benchmark_group("batch_classify_2000");
    for (name, jobs) in jobs() {
        g.bench_with_input(BenchmarkId::new(name, jobs), &jobs, |bch, &jobs| {
            bch.iter(|| black_box(run_batch(&text, jobs, OutputFormat::Json)))
        });
    }
    g.finish();
}

fn oracle_sweep(c: &mut Criterion) {
    let spaces: Vec<LensSpace> = (2..=40i64)
        .flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| LensSpace::new(p, q).unwrap()))
        .collect();
    let mut g = c.benchmark_group("hop_oracle_sweep_p40");
    g.sample_size(10);
    for (name, jobs) in jobs() {
        g.bench_with_input(BenchmarkId::new(name, jobs), &jobs, |bch, &jobs| {
            bch.iter(|| black_box(map_ordered(&spaces, jobs, |l| audit::hops(l).unwrap())))
        });
    }
    g.finish();
}

criterion_group!(benches, batch, oracle_sweep);
criterion_main!(benches);
