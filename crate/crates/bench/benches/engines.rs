use criterion::{black_box, criterion_group, criterion_main, Criterion};
use grouptop::free_group::enumerate_reduced_words;
use grouptop::group::Group;
use grouptop::heisenberg::{HPoint, HeisenbergSpec};
use grouptop::snf::smith_normal_form;
use grouptop::structure;
use grouptop::topology::{
    centralizer_subbasis, monomial_subbasis, ClosedSetFamily, TopologyLabel, DEFAULT_CARRIER_CAP,
    DEFAULT_FAMILY_CAP,
};
use grouptop::word::Word;

fn bench_elementary_sets(c: &mut Criterion) {
    let s4 = Group::symmetric(4);
    c.bench_function("commutator zero sets over S4", |b| {
        b.iter(|| {
            let mut total = 0usize;
            for g in s4.elements() {
                let word = Word::commutator(&s4, g).unwrap();
                total += word.elementary_set().count();
            }
            black_box(total)
        })
    });
}

fn bench_family_generation(c: &mut Criterion) {
    let s3 = Group::symmetric(3);
    let subbasis = centralizer_subbasis(&s3);
    c.bench_function("explicit centralizer family on S3", |b| {
        b.iter(|| {
            let family = ClosedSetFamily::generate(
                TopologyLabel::Centralizer,
                6,
                subbasis.clone(),
                DEFAULT_CARRIER_CAP,
                DEFAULT_FAMILY_CAP,
            )
            .unwrap();
            black_box(family.len().unwrap())
        })
    });

    let s4 = Group::symmetric(4);
    c.bench_function("lazy monomial family on S4", |b| {
        b.iter(|| {
            let family =
                ClosedSetFamily::lazy(TopologyLabel::Monomial, s4.order(), monomial_subbasis(&s4));
            black_box(family.is_discrete())
        })
    });
}

fn bench_subgroup_enumeration(c: &mut Criterion) {
    let s4 = Group::symmetric(4);
    c.bench_function("subgroup lattice of S4", |b| {
        b.iter(|| {
            let subgroups = structure::enumerate_subgroups(&s4, 48).unwrap();
            black_box(subgroups.len())
        })
    });
}

fn bench_smith_normal_form(c: &mut Criterion) {
    let mut state = 0x853c49e6748fea9bu64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 41) as i64 - 20
    };
    let matrices: Vec<Vec<Vec<i64>>> = (0..32)
        .map(|_| (0..6).map(|_| (0..6).map(|_| next()).collect()).collect())
        .collect();
    c.bench_function("smith normal form, 32 random 6x6 matrices", |b| {
        b.iter(|| {
            let mut factors = 0usize;
            for m in &matrices {
                factors += smith_normal_form(m).len();
            }
            black_box(factors)
        })
    });
}

fn bench_free_group_roots(c: &mut Criterion) {
    let words = enumerate_reduced_words(2, 8);
    c.bench_function("primitive roots of all rank-2 words up to length 8", |b| {
        b.iter(|| {
            let mut proper_powers = 0usize;
            for word in &words {
                if word.is_empty() {
                    continue;
                }
                if word.primitive_root().unwrap().1 > 1 {
                    proper_powers += 1;
                }
            }
            black_box(proper_powers)
        })
    });
}

fn bench_heisenberg_power(c: &mut Criterion) {
    let h = HeisenbergSpec::over_integers();
    c.bench_function("closed-form powers on a 5-box, n <= 12", |b| {
        b.iter(|| {
            let mut checksum = 0i128;
            for a in -5i128..=5 {
                for bb in -5i128..=5 {
                    let u = HPoint::from_integers(a, bb, 1);
                    for n in 1..=12i64 {
                        let p = h.power(&u, n).unwrap();
                        checksum += p.z[0].to_integer();
                    }
                }
            }
            black_box(checksum)
        })
    });
}

criterion_group!(
    benches,
    bench_elementary_sets,
    bench_family_generation,
    bench_subgroup_enumeration,
    bench_smith_normal_form,
    bench_free_group_roots,
    bench_heisenberg_power
);
criterion_main!(benches);
