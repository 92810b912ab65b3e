//! Throughput of the two fan-out workloads, for comparing the rayon
//! path against the sequential fallback:
//!
//!   cargo bench
//!   cargo bench --no-default-features
//!
//! Both builds run the same code through `par_map`, so the delta is the
//! parallel dispatch alone.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;
use sapgrid_core::bipoly::parse_bipoly;
use sapgrid_core::graph::translate_pair_crossings;
use sapgrid_core::grid::{grid_points_on_curve, Grid};
use sapgrid_core::par::par_map;
use sapgrid_core::weierstrass::{TranslationVector, WeierstrassCurve};

fn rat_i(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Column enumeration over growing square grids; the per-column work
/// fans out through `par_map` inside `grid_points_on_curve`.
fn grid_enumeration_sweep(c: &mut Criterion) {
    let f = parse_bipoly("x^4 + y^4 - 50*x^2 - 50*y^2 + 600").unwrap();
    let mut group = c.benchmark_group("grid_enumeration");
    for k in [64usize, 256, 1024] {
        let half = (k / 2) as i64;
        let grid = Grid::new(rat_i(-half), rat_i(1), rat_i(-half), rat_i(1), k).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &grid, |b, grid| {
            b.iter(|| grid_points_on_curve(&f, grid).unwrap().len())
        });
    }
    group.finish();
}

/// The crossing-count kernel: one exact box-filtered intersection count
/// per difference vector of the length-6 planted configuration.
fn pairwise_delta_kernel(c: &mut Criterion) {
    let curve = WeierstrassCurve::from_i64(-45, -3861, 1078, -251559, 0);
    let (dx, dy) = (33i64, 726i64);
    let mut deltas = Vec::new();
    for p in -5i64..=5 {
        for q in -5i64..=5 {
            if p != 0 || q != 0 {
                deltas.push(TranslationVector::new(rat_i(p * dx), rat_i(q * dy)));
            }
        }
    }
    let x1 = rat_i(-5 * dx);
    let x2 = rat_i(6 * dx);
    let y1 = rat_i(-5 * dy);
    let y2 = rat_i(6 * dy);
    c.bench_function("pairwise_delta_kernel", |b| {
        b.iter(|| {
            let counts = par_map(deltas.clone(), |t| {
                translate_pair_crossings(&curve, &t, &x1, &x2, &y1, &y2).unwrap()
            });
            counts.iter().sum::<u64>()
        })
    });
}

criterion_group!(benches, grid_enumeration_sweep, pairwise_delta_kernel);
criterion_main!(benches);
