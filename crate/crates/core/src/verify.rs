//! Named verification suites: each runs a battery of oracle cross-checks
//! and returns one pass/fail line per check. The command-line `verify`
//! subcommand is a thin wrapper around these.

use crate::abelian::{AbelianDescriptor, InvariantFactorGroup, SolutionSet};
use crate::classify::{
    check_consistency, classify, decide_cen_cofinite, decide_mon_cofinite, decide_prime_exponent,
    decide_wcl, oracle_check_finite, symbolic_test_set, GroupDescriptor, Property, Verdict,
};
use crate::free_group::{enumerate_reduced_words, FreeWord};
use crate::group::{corpus, Group};
use crate::heisenberg::{HPoint, HeisenbergSpec};
use crate::nat::ExtendedNat;
use crate::structure;
use crate::topology::{
    centralizer_subbasis, cprime_subbasis, monomial_subbasis, zariski_subbasis, ClosedSetFamily,
    TopologyLabel,
};
use crate::word::Word;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub const SUITES: [&str; 8] = [
    "core",
    "word",
    "abelian",
    "heisenberg",
    "free",
    "topology",
    "structure",
    "classify",
];

pub fn run_suite(name: &str) -> Result<SuiteReport, UnknownSuite> {
    let checks = match name {
        "core" => core_suite(),
        "word" => word_suite(),
        "abelian" => abelian_suite(),
        "heisenberg" => heisenberg_suite(),
        "free" => free_suite(),
        "topology" => topology_suite(),
        "structure" => structure_suite(),
        "classify" => classify_suite(),
        _ => return Err(UnknownSuite(name.to_string())),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        checks,
    })
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s).expect("pinned suite"))
        .collect()
}

fn core_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut axiom_failures = 0usize;
    let mut groups_checked = 0usize;
    for (_, group) in corpus() {
        groups_checked += 1;
        let n = group.order();
        let e = group.identity_index();
        for a in 0..n {
            if group.mul_index(a, e) != a
                || group.mul_index(e, a) != a
                || group.mul_index(a, group.inv_index(a)) != e
            {
                axiom_failures += 1;
            }
        }
        // Associativity exhaustively for small orders, sampled above.
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if group.mul_index(group.mul_index(a, b), c)
                            != group.mul_index(a, group.mul_index(b, c))
                        {
                            axiom_failures += 1;
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..20_000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let a = (state >> 40) as usize % n;
                let b = (state >> 20) as usize % n;
                let c = state as usize % n;
                if group.mul_index(group.mul_index(a, b), c)
                    != group.mul_index(a, group.mul_index(b, c))
                {
                    axiom_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "group axioms on the corpus",
        axiom_failures == 0,
        format!("{groups_checked} groups, {axiom_failures} violations"),
    ));

    let mut power_failures = 0usize;
    for group in [Group::cyclic(12), Group::quaternion8(), Group::symmetric(4)] {
        let a = group.element(group.order() - 1).unwrap();
        for m in -16i64..=16 {
            for n in -16i64..=16 {
                let lhs = group.power(a, m + n).unwrap();
                let rhs = group
                    .multiply(group.power(a, m).unwrap(), group.power(a, n).unwrap())
                    .unwrap();
                if lhs != rhs {
                    power_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "power additivity a^(m+n) = a^m a^n",
        power_failures == 0,
        format!("{power_failures} violations on exponent box [-16,16]^2"),
    ));

    let mut socle_failures = 0usize;
    for (_, group) in corpus() {
        for n in 1..=12u64 {
            let socle = group.socle(n);
            if !socle.contains(group.identity_index()) {
                socle_failures += 1;
            }
            for a in socle.iter() {
                if !socle.contains(group.inv_index(a)) {
                    socle_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "socles contain e and are inversion-closed",
        socle_failures == 0,
        format!("{socle_failures} violations"),
    ));

    let s4 = Group::symmetric(4);
    let v4: Vec<usize> = (0..24)
        .filter(|&i| s4.order_of_index(i) <= 2)
        .filter(|&i| {
            let name = s4.name_of(s4.element(i).unwrap());
            name == "e" || name.matches('(').count() == 2
        })
        .collect();
    let v4_set = crate::bitset::SubSet::from_indices(24, v4);
    let lagrange_ok = match s4.quotient(&v4_set) {
        Ok((q, projection)) => {
            q.order() * v4_set.count() == 24
                && (0..q.order())
                    .all(|c| projection.iter().filter(|&&p| p == c).count() == v4_set.count())
        }
        Err(_) => false,
    };
    checks.push(Check::new(
        "quotient cosets partition evenly",
        lagrange_ok,
        "S4 by its normal four-subgroup",
    ));
    checks
}

fn word_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut mismatches = 0usize;
    let mut pairs = 0usize;
    for (_, group) in corpus() {
        for g in group.elements() {
            pairs += 1;
            let by_word = Word::commutator(&group, g).unwrap().elementary_set();
            let by_enumeration = structure::centralizer(&group, g.index()).elements;
            if by_word != by_enumeration {
                mismatches += 1;
            }
        }
    }
    checks.push(Check::new(
        "commutator-word zero sets equal centralizers",
        mismatches == 0,
        format!("{pairs} (group, element) pairs, {mismatches} mismatches"),
    ));

    let mut eval_failures = 0usize;
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state
    };
    for group in [
        Group::symmetric(3),
        Group::quaternion8(),
        Group::heisenberg_finite(3),
    ] {
        for _ in 0..100 {
            let len = (next() % 8 + 1) as usize;
            let terms: Vec<(crate::group::Element, i64)> = (0..len)
                .map(|_| {
                    (
                        group
                            .element((next() % group.order() as u64) as usize)
                            .unwrap(),
                        (next() % 5) as i64 - 2,
                    )
                })
                .collect();
            let word = Word::from_terms(&group, &terms).unwrap();
            for a in group.elements() {
                let mut direct = group.identity();
                for &(coeff, exp) in &terms {
                    direct = group.multiply(direct, coeff).unwrap();
                    direct = group
                        .multiply(direct, group.power(a, exp).unwrap())
                        .unwrap();
                }
                if word.evaluate(a).unwrap() != direct {
                    eval_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "evaluation is invariant under normalization",
        eval_failures == 0,
        format!("{eval_failures} mismatches on randomized words"),
    ));

    let mut inverse_set_failures = 0usize;
    for (_, group) in corpus() {
        if group.order() > 16 {
            continue;
        }
        for a in group.elements() {
            for n in 0..=6i64 {
                let lhs = Word::monomial(&group, a, n).unwrap().elementary_set();
                let rhs = Word::monomial(&group, group.inverse(a).unwrap(), n)
                    .unwrap()
                    .elementary_set();
                if lhs.map(|i| group.inv_index(i)) != rhs {
                    inverse_set_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "inverting a monomial solution set inverts the coefficient",
        inverse_set_failures == 0,
        format!("{inverse_set_failures} mismatches"),
    ));
    checks
}

/// The pinned invariant-factor shapes used by the socle oracle.
pub fn abelian_oracle_shapes() -> Vec<Vec<u64>> {
    vec![
        vec![2],
        vec![4],
        vec![6],
        vec![2, 2],
        vec![2, 4],
        vec![12],
        vec![2, 2, 2],
        vec![3, 9],
        vec![6, 6],
        vec![2, 6, 12],
        vec![10, 10],
        vec![2, 4, 8],
        vec![9, 27],
        vec![30, 30],
        vec![16, 16, 16],
        vec![7, 7, 7, 7],
        vec![10, 10, 10, 10],
    ]
}

/// Brute-force socle count over the tuple representation.
pub fn brute_force_socle_count(factors: &[u64], n: u64) -> u64 {
    let mut count = 0u64;
    let total: u64 = factors.iter().product();
    for mut index in 0..total {
        let mut in_socle = true;
        for &d in factors {
            let coordinate = index % d;
            if !(n * coordinate).is_multiple_of(d) {
                in_socle = false;
                break;
            }
            index /= d;
        }
        if in_socle {
            count += 1;
        }
    }
    count
}

fn abelian_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut socle_failures = 0usize;
    let mut cases = 0usize;
    for factors in abelian_oracle_shapes() {
        let descriptor = AbelianDescriptor::from_invariant_factors(&factors);
        for n in 1..=12u64 {
            cases += 1;
            let fast = descriptor.socle_cardinality(n);
            let brute = ExtendedNat::finite(brute_force_socle_count(&factors, n));
            if fast != brute {
                socle_failures += 1;
            }
        }
    }
    checks.push(Check::new(
        "socle closed forms match exhaustive counts",
        socle_failures == 0,
        format!("{cases} cases, {socle_failures} mismatches"),
    ));

    let mut solve_failures = 0usize;
    for factors in [vec![6], vec![4, 6], vec![2, 2, 4]] {
        let group = InvariantFactorGroup::new(factors.clone(), 0).unwrap();
        let total: u64 = factors.iter().product();
        for n in -6i64..=6 {
            for target_index in 0..total {
                let mut index = target_index;
                let a: Vec<i64> = factors
                    .iter()
                    .map(|&d| {
                        let c = (index % d) as i64;
                        index /= d;
                        c
                    })
                    .collect();
                let fast = group.solve_linear(n, &a).unwrap();
                let mut brute = 0u64;
                for mut candidate in 0..total {
                    let mut solves = true;
                    for (slot, &d) in factors.iter().enumerate() {
                        let x = (candidate % d) as i64;
                        candidate /= d;
                        if (n * x - a[slot]).rem_euclid(d as i64) != 0 {
                            solves = false;
                            break;
                        }
                    }
                    if solves {
                        brute += 1;
                    }
                }
                if fast.count() != ExtendedNat::finite(brute) {
                    solve_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "linear solver counts match brute force",
        solve_failures == 0,
        format!("{solve_failures} mismatches"),
    ));

    let mut classification_failures = 0usize;
    for (descriptor, expected_zar) in [
        (AbelianDescriptor::integers(), Verdict::Yes),
        (AbelianDescriptor::qmodz(), Verdict::Yes),
        (
            AbelianDescriptor::qmodz().power(ExtendedNat::Infinite),
            Verdict::No,
        ),
        (
            AbelianDescriptor::cyclic(5).power(ExtendedNat::Infinite),
            Verdict::Yes,
        ),
        (
            AbelianDescriptor::cyclic(6).power(ExtendedNat::Infinite),
            Verdict::No,
        ),
    ] {
        let report = classify(&GroupDescriptor::Abelian(descriptor));
        if report.verdict(Property::ZarCofinite) != expected_zar {
            classification_failures += 1;
        }
    }
    checks.push(Check::new(
        "abelian cofiniteness criterion on the recorded examples",
        classification_failures == 0,
        format!("{classification_failures} wrong verdicts"),
    ));
    checks
}

fn heisenberg_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let h = HeisenbergSpec::over_integers();
    let mut closed_form_failures = 0usize;
    let mut points = 0usize;
    for a in -5i128..=5 {
        for b in -5i128..=5 {
            for c in -5i128..=5 {
                let u = HPoint::from_integers(a, b, c);
                points += 1;
                for n in 1..=12i64 {
                    if h.power(&u, n).unwrap() != h.power_naive(&u, n).unwrap() {
                        closed_form_failures += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::new(
        "closed-form powers match iterated multiplication over the integers",
        closed_form_failures == 0,
        format!("{points} points x 12 exponents, {closed_form_failures} mismatches"),
    ));

    let h3 = HeisenbergSpec::over_mod(3);
    let mut mod3_failures = 0usize;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let u = HPoint::from_integers(a, b, c);
                for n in 0..=9i64 {
                    if h3.power(&u, n).unwrap() != h3.power_naive(&u, n).unwrap() {
                        mod3_failures += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::new(
        "closed-form powers match exhaustively mod 3",
        mod3_failures == 0,
        format!("27 elements x exponents 0..=9, {mod3_failures} mismatches"),
    ));

    // The alternative quadratic coefficient n(n+1)/2 must disagree with the
    // oracle at n = 2 on any witness with a nonzero twist.
    let witness = HPoint::from_integers(1, 1, 0);
    let alternative = HPoint::from_integers(2, 2, 3);
    let oracle_square = h.power_naive(&witness, 2).unwrap();
    checks.push(Check::new(
        "rejected power coefficient disagrees with the oracle at n = 2",
        alternative != oracle_square && oracle_square == HPoint::from_integers(2, 2, 1),
        "the square is (2,2,1), not (2,2,3)",
    ));

    let mut root_failures = 0usize;
    for n in 1..=4i64 {
        for a in -2i128..=2 {
            for b in -2i128..=2 {
                for c in -2i128..=2 {
                    let u = HPoint::from_integers(a, b, c);
                    let target = h.power_naive(&u, n).unwrap();
                    match h.solve_power(n, &target).unwrap() {
                        SolutionSet::Finite(witnesses) if witnesses == vec![u.clone()] => {}
                        _ => root_failures += 1,
                    }
                }
            }
        }
    }
    checks.push(Check::new(
        "integer root solving inverts the power map uniquely",
        root_failures == 0,
        format!("{root_failures} failures"),
    ));
    checks
}

fn free_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let words = enumerate_reduced_words(2, 6);

    let mut root_failures = 0usize;
    for word in &words {
        if word.is_empty() {
            continue;
        }
        let (root, k) = word.primitive_root().unwrap();
        if root.power(k as i64) != *word || root.primitive_root().unwrap().1 != 1 {
            root_failures += 1;
        }
    }
    checks.push(Check::new(
        "primitive roots reconstruct their words and are primitive",
        root_failures == 0,
        format!("{} words, {root_failures} failures", words.len()),
    ));

    // Power maps are injective at desk scale: no two distinct reduced words
    // share an n-th power.
    let mut collision = None;
    for n in 2..=3i64 {
        let mut seen: HashMap<Vec<(u32, i8)>, FreeWord> = HashMap::new();
        for word in &words {
            let power = word.power(n);
            if let Some(previous) = seen.insert(power.letters().to_vec(), word.clone()) {
                if previous != *word {
                    collision = Some((previous, word.clone(), n));
                }
            }
        }
    }
    checks.push(Check::new(
        "no two reduced words share a power (cancellation law)",
        collision.is_none(),
        match &collision {
            Some((a, b, n)) => format!("{a} and {b} share an {n}-th power"),
            None => "squares and cubes of all words of length <= 6 are distinct".into(),
        },
    ));

    let mut commuting_failures = 0usize;
    let mut commuting_pairs = 0usize;
    let shorter: Vec<&FreeWord> = words
        .iter()
        .filter(|w| w.len() <= 4 && !w.is_empty())
        .collect();
    for u in &shorter {
        for v in &shorter {
            if u.commutes_with(v).unwrap() {
                commuting_pairs += 1;
                let root_u = u.primitive_root().unwrap().0;
                let root_v = v.primitive_root().unwrap().0;
                if root_u != root_v && root_u != root_v.inverse() {
                    commuting_failures += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "commuting words share a primitive root",
        commuting_failures == 0,
        format!("{commuting_pairs} commuting pairs, {commuting_failures} failures"),
    ));
    checks
}

fn topology_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut closure_failures = 0usize;
    let mut quasi_failures = 0usize;
    let mut t1_failures = 0usize;
    for (_, group) in corpus() {
        let family = ClosedSetFamily::lazy(
            TopologyLabel::Centralizer,
            group.order(),
            centralizer_subbasis(&group),
        );
        let e = crate::bitset::SubSet::singleton(group.order(), group.identity_index());
        if family.closure(&e) != group.center() {
            closure_failures += 1;
        }
        if !family.is_quasitopological(&group) {
            quasi_failures += 1;
        }
        let center_free = group.center().count() == 1;
        if family.is_t1() != center_free {
            t1_failures += 1;
        }
    }
    checks.push(Check::new(
        "closure of {e} in the centralizer family is the center",
        closure_failures == 0,
        format!("{closure_failures} failures"),
    ));
    checks.push(Check::new(
        "centralizer families are quasi-topological",
        quasi_failures == 0,
        format!("{quasi_failures} failures"),
    ));
    checks.push(Check::new(
        "centralizer family T1 exactly on center-free groups",
        t1_failures == 0,
        format!("{t1_failures} failures"),
    ));

    let mut discreteness_failures = 0usize;
    for (_, group) in corpus() {
        let mon = ClosedSetFamily::lazy(
            TopologyLabel::Monomial,
            group.order(),
            monomial_subbasis(&group),
        );
        let zar = ClosedSetFamily::lazy(
            TopologyLabel::Zariski,
            group.order(),
            zariski_subbasis(&group),
        );
        let cprime = ClosedSetFamily::lazy(
            TopologyLabel::CentralizerCofinite,
            group.order(),
            cprime_subbasis(&group),
        );
        if !mon.is_discrete() || !zar.is_discrete() || !cprime.is_t1() {
            discreteness_failures += 1;
        }
    }
    checks.push(Check::new(
        "monomial and degree-one families are discrete on finite groups",
        discreteness_failures == 0,
        format!("{discreteness_failures} failures"),
    ));
    checks
}

fn structure_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    let s4 = Group::symmetric(4);
    let derived: Vec<usize> = structure::derived_series(&s4)
        .iter()
        .map(|s| s.order())
        .collect();
    checks.push(Check::new(
        "derived series of S4 descends 24, 12, 4, 1",
        derived == vec![24, 12, 4, 1],
        format!("{derived:?}"),
    ));

    let mut engel_fitting_failures = 0usize;
    let mut groups = 0usize;
    for (_, group) in corpus() {
        if group.order() > structure::DEFAULT_ENUMERATION_CAP {
            continue;
        }
        groups += 1;
        let engel = structure::engel_set(&group);
        let fitting =
            structure::fitting_subgroup(&group, structure::DEFAULT_ENUMERATION_CAP).unwrap();
        if engel != fitting.elements {
            engel_fitting_failures += 1;
        }
    }
    checks.push(Check::new(
        "Engel set equals the Fitting subgroup",
        engel_fitting_failures == 0,
        format!("{groups} groups within the enumeration cap, {engel_fitting_failures} failures"),
    ));

    let conjugate_commutation =
        structure::commutes_with_conjugates_check(&Group::heisenberg_finite(3));
    checks.push(Check::new(
        "exponent-3 groups: elements commute with their conjugates",
        conjugate_commutation.unwrap_or(false),
        "checked exhaustively on the 27-element twisted triple group",
    ));

    let bilinearity = structure::check_commutator_bilinearity(&Group::heisenberg_finite(3));
    checks.push(Check::new(
        "commutator bilinearity in class two",
        matches!(bilinearity, Ok(true)),
        "x -> [x, g] is a homomorphism with kernel the centralizer",
    ));

    let subgroup_count = structure::enumerate_subgroups(&s4, structure::DEFAULT_ENUMERATION_CAP)
        .map(|s| s.len())
        .unwrap_or(0);
    checks.push(Check::new(
        "S4 has exactly 30 subgroups",
        subgroup_count == 30,
        format!("found {subgroup_count}"),
    ));
    checks
}

fn classify_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    let mut inconsistent = 0usize;
    let mut criterion_failures = 0usize;
    for (name, descriptor) in symbolic_test_set() {
        let report = classify(&descriptor);
        if check_consistency(&report).is_err() {
            inconsistent += 1;
        }
        let mon = decide_mon_cofinite(&descriptor).verdict;
        let prime = decide_prime_exponent(&descriptor).verdict;
        let wcl = decide_wcl(&descriptor).verdict;
        let expected = match (prime, wcl) {
            (Verdict::Yes, _) | (_, Verdict::Yes) => Verdict::Yes,
            (Verdict::No, Verdict::No) => Verdict::No,
            _ => Verdict::Undecided,
        };
        if mon != expected {
            criterion_failures += 1;
        }
        let _ = name;
    }
    checks.push(Check::new(
        "symbolic reports satisfy the consistency constraints",
        inconsistent == 0,
        format!("{inconsistent} inconsistent reports"),
    ));
    checks.push(Check::new(
        "monomial verdicts follow prime-exponent-or-cancellation",
        criterion_failures == 0,
        format!("{criterion_failures} mismatches"),
    ));

    let mut oracle_failures = 0usize;
    for (_, group) in corpus() {
        if oracle_check_finite(&group).is_err() {
            oracle_failures += 1;
        }
    }
    checks.push(Check::new(
        "finite oracle agrees with rule verdicts on the corpus",
        oracle_failures == 0,
        format!("{oracle_failures} mismatches"),
    ));

    let pinned = [
        ("F2", Property::MonCofinite, Verdict::Yes),
        ("F2", Property::CenCofinite, Verdict::No),
        ("F2", Property::ZarCofinite, Verdict::No),
        ("H(Z)", Property::Wcl, Verdict::Yes),
        ("H(Z)", Property::CenCofinite, Verdict::No),
        ("tarski_monster", Property::MonCofinite, Verdict::Yes),
        ("tarski_monster", Property::CenCofinite, Verdict::Yes),
        ("tarski_monster", Property::ZarCofinite, Verdict::No),
        ("(Q/Z)^inf", Property::MonCofinite, Verdict::No),
        ("S3 x Z", Property::CenCofinite, Verdict::No),
        ("tarski x C2", Property::CenCofinite, Verdict::Yes),
    ];
    let mut pinned_failures = Vec::new();
    let set = symbolic_test_set();
    for (name, property, expected) in pinned {
        let descriptor = set
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
            .expect("pinned name in symbolic set");
        let got = classify(descriptor).verdict(property);
        if got != expected {
            pinned_failures.push(format!("{name}/{property:?}: {got}"));
        }
    }
    checks.push(Check::new(
        "recorded verdicts of the named examples",
        pinned_failures.is_empty(),
        if pinned_failures.is_empty() {
            format!("{} pinned verdicts reproduced", 11)
        } else {
            pinned_failures.join(", ")
        },
    ));

    let cen = |d: &GroupDescriptor| decide_cen_cofinite(d).verdict;
    let s3z = GroupDescriptor::Product(vec![
        GroupDescriptor::Finite(Group::symmetric(3)),
        GroupDescriptor::Abelian(AbelianDescriptor::integers()),
    ]);
    let tarski_c2 = GroupDescriptor::Product(vec![
        GroupDescriptor::Known("tarski_monster".into()),
        GroupDescriptor::Finite(Group::cyclic(2)),
    ]);
    checks.push(Check::new(
        "product shapes: S3 x Z fails, tarski x C2 passes",
        cen(&s3z) == Verdict::No && cen(&tarski_c2) == Verdict::Yes,
        "the centralizer product rule",
    ));
    checks
}
