//! Acceptance suite: one test per pinned criterion, each printing a
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use grouptop::abelian::{AbelianDescriptor, InvariantFactorGroup, SolutionSet};
use grouptop::classify::{
    check_consistency, classify, decide_cen_cofinite, decide_mon_cofinite, decide_prime_exponent,
    decide_wcl, decide_zar_cofinite, oracle_check_finite, symbolic_test_set, GroupDescriptor,
    KernelSpec, Property, Verdict,
};
use grouptop::free_group::enumerate_reduced_words;
use grouptop::group::{corpus, Group};
use grouptop::heisenberg::{wcl_by_central_extension, HPoint, HeisenbergSpec};
use grouptop::nat::ExtendedNat;
use grouptop::structure;
use grouptop::topology::{
    centralizer_subbasis, cprime_subbasis, monomial_subbasis, zariski_subbasis, ClosedSetFamily,
    TopologyLabel, DEFAULT_CARRIER_CAP, DEFAULT_FAMILY_CAP,
};
use grouptop::word::Word;
use grouptop::SubSet;
use std::collections::HashMap;
use std::time::Instant;

fn report(criterion: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPT {criterion}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_commutator_words_cut_out_centralizers() {
    let start = Instant::now();
    let mut pairs = 0usize;
    for (name, group) in corpus() {
        assert!(group.order() <= 64, "{name} exceeds the corpus bound");
        for g in group.elements() {
            pairs += 1;
            let by_word = Word::commutator(&group, g).unwrap().elementary_set();
            let by_enumeration = structure::centralizer(&group, g.index()).elements;
            assert_eq!(by_word, by_enumeration, "mismatch in {name} at {:?}", g);
        }
    }
    let elapsed = start.elapsed();
    report(
        "01 commutator zero sets equal centralizers",
        elapsed.as_secs_f64() < 5.0,
        &format!("{pairs} pairs, {:.2}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_02_centralizer_family_closure_separation() {
    let mut groups = 0usize;
    for (name, group) in corpus() {
        groups += 1;
        let family = ClosedSetFamily::lazy(
            TopologyLabel::Centralizer,
            group.order(),
            centralizer_subbasis(&group),
        );
        let e = SubSet::singleton(group.order(), group.identity_index());
        assert_eq!(family.closure(&e), group.center(), "closure of e in {name}");
        assert!(
            family.is_quasitopological(&group),
            "{name} not quasi-topological"
        );
        let center_free = group.center().count() == 1;
        assert_eq!(family.is_t1(), center_free, "T1/center mismatch in {name}");
    }
    // Pinned separations.
    for (group, expect_t1) in [
        (Group::symmetric(3), true),
        (Group::symmetric(4), true),
        (Group::quaternion8(), false),
        (Group::dihedral(4), false),
        (Group::heisenberg_finite(3), false),
    ] {
        let family = ClosedSetFamily::lazy(
            TopologyLabel::Centralizer,
            group.order(),
            centralizer_subbasis(&group),
        );
        assert_eq!(family.is_t1(), expect_t1, "pinned separation for {group:?}");
    }
    report(
        "02 closure of {e} is the center; quasi-topological; T1 iff center-free",
        true,
        &format!("{groups} corpus groups, 5 pinned separations"),
    );
}

#[test]
fn criterion_03_finite_families_are_discrete_and_oracle_agrees() {
    let mut oracle_ok = 0usize;
    for (name, group) in corpus() {
        let carrier = group.order();
        let mon =
            ClosedSetFamily::lazy(TopologyLabel::Monomial, carrier, monomial_subbasis(&group));
        let zar = ClosedSetFamily::lazy(TopologyLabel::Zariski, carrier, zariski_subbasis(&group));
        let cprime = ClosedSetFamily::lazy(
            TopologyLabel::CentralizerCofinite,
            carrier,
            cprime_subbasis(&group),
        );
        assert!(mon.is_discrete(), "monomial family not discrete on {name}");
        assert!(
            zar.is_discrete(),
            "degree-one family not discrete on {name}"
        );
        assert!(cprime.is_t1(), "joined family not T1 on {name}");
        // Small carriers: materialize and check the family is the power set.
        if carrier <= 12 {
            let explicit = ClosedSetFamily::generate(
                TopologyLabel::Zariski,
                carrier,
                zariski_subbasis(&group),
                DEFAULT_CARRIER_CAP,
                DEFAULT_FAMILY_CAP,
            )
            .unwrap();
            assert_eq!(
                explicit.len().unwrap(),
                1usize << carrier,
                "power set on {name}"
            );
        }
        oracle_check_finite(&group).unwrap_or_else(|e| panic!("oracle mismatch on {name}: {e}"));
        oracle_ok += 1;
    }
    report(
        "03 monomial and equation families discrete; joined family T1; oracle agrees",
        true,
        &format!("{oracle_ok} corpus groups, 0 mismatches"),
    );
}

#[test]
fn criterion_04_heisenberg_power_oracle() {
    let start = Instant::now();
    let h = HeisenbergSpec::over_integers();
    let mut points = 0usize;
    for a in -5i128..=5 {
        for b in -5i128..=5 {
            for c in -5i128..=5 {
                let u = HPoint::from_integers(a, b, c);
                points += 1;
                for n in 1..=12i64 {
                    assert_eq!(
                        h.power(&u, n).unwrap(),
                        h.power_naive(&u, n).unwrap(),
                        "closed form disagrees at ({a},{b},{c})^{n}"
                    );
                }
            }
        }
    }
    let h3 = HeisenbergSpec::over_mod(3);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let u = HPoint::from_integers(a, b, c);
                for n in 0..=9i64 {
                    assert_eq!(h3.power(&u, n).unwrap(), h3.power_naive(&u, n).unwrap());
                }
            }
        }
    }
    // The resolved quadratic coefficient is binomial(n, 2); the alternative
    // reading n(n+1)/2 must FAIL against the oracle at n = 2.
    let witness = HPoint::from_integers(1, 1, 0);
    let square = h.power_naive(&witness, 2).unwrap();
    assert_eq!(square, HPoint::from_integers(2, 2, 1));
    let alternative_coefficient = 2i128 * 3 / 2; // n(n+1)/2 at n = 2
    let alternative = HPoint::from_integers(2, 2, alternative_coefficient);
    assert_ne!(
        alternative, square,
        "the rejected coefficient must not reproduce the oracle"
    );
    let elapsed = start.elapsed();
    report(
        "04 heisenberg closed-form power matches iterated multiplication",
        elapsed.as_secs_f64() < 10.0,
        &format!(
            "{points} integer points x 12 exponents, 27 mod-3 elements x 10; rejected coefficient separates at n=2; {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_05_abelian_socle_and_solver_oracle() {
    let mut socle_cases = 0usize;
    for factors in grouptop::verify::abelian_oracle_shapes() {
        let order: u64 = factors.iter().product();
        assert!(order <= 10_000, "oracle shape exceeds the order bound");
        let descriptor = AbelianDescriptor::from_invariant_factors(&factors);
        for n in 1..=24u64 {
            socle_cases += 1;
            let fast = descriptor.socle_cardinality(n);
            let brute = ExtendedNat::finite(grouptop::verify::brute_force_socle_count(&factors, n));
            assert_eq!(fast, brute, "socle mismatch for {factors:?} at n={n}");
        }
    }

    let mut solver_cases = 0usize;
    for factors in [
        vec![6u64],
        vec![4, 6],
        vec![2, 2, 4],
        vec![3, 9],
        vec![12, 12],
    ] {
        let group = InvariantFactorGroup::new(factors.clone(), 0).unwrap();
        let total: u64 = factors.iter().product();
        for n in -8i64..=8 {
            for target_index in (0..total).step_by(usize::max(1, total as usize / 17)) {
                solver_cases += 1;
                let mut index = target_index;
                let a: Vec<i64> = factors
                    .iter()
                    .map(|&d| {
                        let coordinate = (index % d) as i64;
                        index /= d;
                        coordinate
                    })
                    .collect();
                let fast = group.solve_linear(n, &a).unwrap();
                let mut brute = Vec::new();
                for mut candidate in 0..total {
                    let mut solves = true;
                    let mut coords = Vec::new();
                    for (slot, &d) in factors.iter().enumerate() {
                        let x = (candidate % d) as i64;
                        candidate /= d;
                        coords.push(x);
                        if (n * x - a[slot]).rem_euclid(d as i64) != 0 {
                            solves = false;
                        }
                    }
                    if solves {
                        brute.push(coords);
                    }
                }
                assert_eq!(
                    fast.count(),
                    ExtendedNat::from(brute.len()),
                    "solver count mismatch for {factors:?}, n={n}, a={a:?}"
                );
                if let SolutionSet::Finite(mut witnesses) = fast {
                    witnesses.sort();
                    brute.sort();
                    assert_eq!(witnesses, brute);
                }
            }
        }
    }
    report(
        "05 socle closed forms and linear solver match brute force",
        true,
        &format!("{socle_cases} socle cases, {solver_cases} solver cases"),
    );
}

#[test]
fn criterion_06_monomial_criterion_and_recorded_verdicts() {
    let set = symbolic_test_set();
    assert!(set.len() >= 20, "symbolic set must stay at full strength");
    for (name, descriptor) in &set {
        let mon = decide_mon_cofinite(descriptor).verdict;
        let prime = decide_prime_exponent(descriptor).verdict;
        let wcl = decide_wcl(descriptor).verdict;
        let expected = match (prime, wcl) {
            (Verdict::Yes, _) | (_, Verdict::Yes) => Verdict::Yes,
            (Verdict::No, Verdict::No) => Verdict::No,
            _ => Verdict::Undecided,
        };
        assert_eq!(mon, expected, "monomial criterion mismatch for {name}");
    }

    let by_name = |name: &str| -> &GroupDescriptor {
        &set.iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("missing {name}"))
            .1
    };
    let expectations: [(&str, Property, Verdict); 16] = [
        ("Z", Property::ZarCofinite, Verdict::Yes),
        ("Q/Z", Property::Atf, Verdict::Yes),
        ("Q/Z", Property::MonCofinite, Verdict::Yes),
        ("(Q/Z)^inf", Property::MonCofinite, Verdict::No),
        ("(Q/Z)^inf", Property::ZarCofinite, Verdict::No),
        ("prufer-sum", Property::Atf, Verdict::Yes),
        ("(Z/5)^inf", Property::Atf, Verdict::No),
        ("(Z/5)^inf", Property::PrimeExponent, Verdict::Yes),
        ("(Z/5)^inf", Property::MonCofinite, Verdict::Yes),
        ("(Z/6)^inf", Property::MonCofinite, Verdict::No),
        ("H(Z)", Property::Wcl, Verdict::Yes),
        ("H(Z)", Property::CenCofinite, Verdict::No),
        ("H(Z)", Property::ZarCofinite, Verdict::No),
        ("F2", Property::MonCofinite, Verdict::Yes),
        ("F2", Property::ZarCofinite, Verdict::No),
        ("tarski_monster", Property::ZarCofinite, Verdict::No),
    ];
    for (name, property, expected) in expectations {
        let got = classify(by_name(name)).verdict(property);
        assert_eq!(got, expected, "recorded verdict for {name}/{property:?}");
    }

    // Central-extension rule, including the concrete instance: the center
    // of the integer Heisenberg group is the integers, the central quotient
    // is free abelian of rank two, both weak-cancellation.
    assert_eq!(
        wcl_by_central_extension(Verdict::Yes, Verdict::Yes),
        Verdict::Yes
    );
    assert_eq!(
        wcl_by_central_extension(Verdict::No, Verdict::Yes),
        Verdict::Undecided
    );
    let center = decide_wcl(&GroupDescriptor::Abelian(AbelianDescriptor::integers())).verdict;
    let quotient_rank_two = AbelianDescriptor::integers().sum(&AbelianDescriptor::integers());
    let quotient = decide_wcl(&GroupDescriptor::Abelian(quotient_rank_two)).verdict;
    assert_eq!(wcl_by_central_extension(center, quotient), Verdict::Yes);

    report(
        "06 monomial cofiniteness equals prime-exponent-or-cancellation; recorded verdicts hold",
        true,
        &format!("{} symbolic descriptors, 16 pinned verdicts", set.len()),
    );
}

#[test]
fn criterion_07_product_theorems() {
    let set = symbolic_test_set();
    // Monomial product rule against componentwise verdicts, on all pairs.
    let mut pairs = 0usize;
    for (name_a, a) in &set {
        for (name_b, b) in &set {
            pairs += 1;
            let product = GroupDescriptor::Product(vec![a.clone(), b.clone()]);
            let mon = decide_mon_cofinite(&product).verdict;
            let wcl_both = match (decide_wcl(a).verdict, decide_wcl(b).verdict) {
                (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
                (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
                _ => Verdict::Undecided,
            };
            let prime_product = decide_prime_exponent(&product).verdict;
            let expected = match (wcl_both, prime_product) {
                (Verdict::Yes, _) | (_, Verdict::Yes) => Verdict::Yes,
                (Verdict::No, Verdict::No) => Verdict::No,
                _ => Verdict::Undecided,
            };
            assert_eq!(
                mon, expected,
                "product monomial rule on {name_a} x {name_b}"
            );
        }
    }

    // Centralizer product shape on the pinned instances.
    let s3z = GroupDescriptor::Product(vec![
        GroupDescriptor::Finite(Group::symmetric(3)),
        GroupDescriptor::Abelian(AbelianDescriptor::integers()),
    ]);
    assert_eq!(decide_cen_cofinite(&s3z).verdict, Verdict::No);
    assert_eq!(decide_zar_cofinite(&s3z).verdict, Verdict::No);
    let tarski_c2 = GroupDescriptor::Product(vec![
        GroupDescriptor::Known("tarski_monster".into()),
        GroupDescriptor::Finite(Group::cyclic(2)),
    ]);
    assert_eq!(decide_cen_cofinite(&tarski_c2).verdict, Verdict::Yes);

    // Finite x finite products up to order 48 against the topology oracle.
    let corpus_groups = corpus();
    let mut finite_products = 0usize;
    for (_, a) in &corpus_groups {
        for (_, b) in &corpus_groups {
            if a.order() * b.order() > 48 {
                continue;
            }
            finite_products += 1;
            let product = Group::direct_product(&[a.clone(), b.clone()]).unwrap();
            oracle_check_finite(&product).expect("finite product oracle");
            let report = classify(&GroupDescriptor::Product(vec![
                GroupDescriptor::Finite(a.clone()),
                GroupDescriptor::Finite(b.clone()),
            ]));
            for property in [
                Property::MonCofinite,
                Property::CenCofinite,
                Property::ZarCofinite,
            ] {
                assert_eq!(report.verdict(property), Verdict::Yes);
            }
        }
    }
    report(
        "07 product rules: monomial on all pairs, centralizer shapes, finite products vs oracle",
        true,
        &format!("{pairs} symbolic pairs, {finite_products} finite products"),
    );
}

#[test]
fn criterion_08_free_group_roots_at_desk_scale() {
    let start = Instant::now();
    let words = enumerate_reduced_words(2, 8);

    // Power-map injectivity: no two distinct reduced words of length <= 8
    // share an n-th power. Since |x^n| >= |x|, every root of a word of
    // length <= 8 appears in this list, so this is exhaustive.
    for n in 2..=4i64 {
        let mut powers: HashMap<Vec<(u32, i8)>, usize> = HashMap::new();
        for (index, word) in words.iter().enumerate() {
            if let Some(previous) = powers.insert(word.power(n).letters().to_vec(), index) {
                panic!("{} and {} share an {n}-th power", words[previous], word);
            }
        }
        // Root finding agrees with the exhaustive inverse map.
        for word in &words {
            let expected = powers.get(word.letters());
            match word.nth_root(n as u64).unwrap() {
                SolutionSet::Finite(roots) => {
                    assert_eq!(roots.len(), 1);
                    let root_index = expected.unwrap_or_else(|| {
                        panic!("{word} has a root {} the exhaustive map missed", roots[0])
                    });
                    assert_eq!(&roots[0], &words[*root_index]);
                }
                SolutionSet::Empty => {
                    assert!(
                        expected.is_none(),
                        "{word} has an {n}-th root the solver missed"
                    );
                }
                other => panic!("unexpected solution shape {other:?}"),
            }
        }
    }

    // Commuting pairs of length <= 6 share a primitive root.
    let shorter: Vec<_> = words
        .iter()
        .filter(|w| w.len() <= 6 && !w.is_empty())
        .collect();
    let mut commuting = 0usize;
    for u in &shorter {
        for v in &shorter {
            if u.multiply(v).unwrap() == v.multiply(u).unwrap() {
                commuting += 1;
                let root_u = u.primitive_root().unwrap().0;
                let root_v = v.primitive_root().unwrap().0;
                assert!(
                    root_u == root_v || root_u == root_v.inverse(),
                    "{u} and {v} commute without a shared primitive root"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "08 free-group roots are unique; commuting words share a primitive root",
        elapsed.as_secs_f64() < 30.0,
        &format!(
            "{} words, {commuting} commuting pairs, {:.2}s",
            words.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_09_engel_fitting_and_exponent_three() {
    let mut targets: Vec<(String, Group)> = vec![
        ("S3".into(), Group::symmetric(3)),
        ("S4".into(), Group::symmetric(4)),
        ("A4".into(), Group::alternating(4)),
        ("D4".into(), Group::dihedral(4)),
        ("Q8".into(), Group::quaternion8()),
        ("H(Z/3)".into(), Group::heisenberg_finite(3)),
    ];
    for n in 2..=12 {
        targets.push((format!("C{n}"), Group::cyclic(n)));
    }
    for (name, group) in &targets {
        let engel = structure::engel_set(group);
        let fitting =
            structure::fitting_subgroup(group, structure::DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(
            engel, fitting.elements,
            "Engel set differs from Fitting subgroup on {name}"
        );
    }

    assert!(structure::commutes_with_conjugates_check(&Group::heisenberg_finite(3)).unwrap());

    // Derived series of S4: the full group, the even permutations, the
    // normal four-subgroup, the trivial subgroup.
    let s4 = Group::symmetric(4);
    let series = structure::derived_series(&s4);
    let orders: Vec<usize> = series.iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![24, 12, 4, 1]);
    let three_cycles: Vec<usize> = (0..24).filter(|&i| s4.order_of_index(i) == 3).collect();
    let a4 = s4.generated_subgroup(&three_cycles);
    assert_eq!(
        series[1].elements, a4,
        "first derived subgroup must be the even permutations"
    );
    let v4 = SubSet::from_indices(
        24,
        (0..24).filter(|&i| {
            s4.order_of_index(i) <= 2 && {
                let name = s4.name_of(s4.element(i).unwrap());
                name == "e" || name.matches('(').count() == 2
            }
        }),
    );
    assert_eq!(
        series[2].elements, v4,
        "second derived subgroup must be the four-subgroup"
    );
    assert_eq!(
        series[3].elements,
        SubSet::singleton(24, s4.identity_index())
    );

    report(
        "09 Engel set equals Fitting subgroup; exponent-3 conjugate commutation; derived series of S4",
        true,
        &format!("{} groups checked", targets.len()),
    );
}

#[test]
fn criterion_10_consistency_guard_across_all_reports() {
    let mut reports = Vec::new();
    for (_, descriptor) in symbolic_test_set() {
        reports.push(classify(&descriptor));
    }
    for (_, group) in corpus() {
        reports.push(classify(&GroupDescriptor::Finite(group)));
    }
    let set = symbolic_test_set();
    for (_, a) in &set {
        for (_, b) in &set {
            reports.push(classify(&GroupDescriptor::Product(vec![
                a.clone(),
                b.clone(),
            ])));
        }
    }
    for (_, base) in &set {
        for kernel in [
            KernelSpec {
                finite: true,
                central: false,
            },
            KernelSpec {
                finite: true,
                central: true,
            },
            KernelSpec {
                finite: false,
                central: true,
            },
        ] {
            reports.push(classify(&GroupDescriptor::Quotient {
                base: Box::new(base.clone()),
                kernel,
            }));
        }
    }
    let mut violations = Vec::new();
    for report in &reports {
        if let Err(mut found) = check_consistency(report) {
            violations.append(&mut found);
        }
    }
    report(
        "10 consistency constraints hold across every emitted report",
        violations.is_empty(),
        &format!("{} reports, {} violations", reports.len(), violations.len()),
    );
}
