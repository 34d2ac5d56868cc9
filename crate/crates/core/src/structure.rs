//! Structural subroutines for finite groups: centralizers, normalizers,
//! central and derived series, commutator bilinearity in class two, Engel
//! sets, and the Fitting subgroup via exhaustive subgroup enumeration.
//!
//! The commutator convention is `[a, b] = a b a^-1 b^-1`.

use crate::bitset::SubSet;
use crate::group::Group;
use serde::Serialize;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use thiserror::Error;

/// Default cap on group order for subgroup-enumeration based operations.
pub const DEFAULT_ENUMERATION_CAP: usize = 48;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("group has nilpotency class {found:?}, need class <= 2")]
    NotClassAtMostTwo { found: Option<usize> },
    #[error("group has exponent {found}, need exponent {need}")]
    WrongExponent { found: u64, need: u64 },
    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("enumeration cancelled")]
    Cancelled,
}

/// Cooperative cancellation handle for long enumerations; clone it into
/// another thread and call [`CancelToken::cancel`] to stop the work at the
/// next checkpoint.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> CancelToken {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// A verified subgroup of a finite group, with cheap structural flags.
#[derive(Debug, Clone)]
pub struct SubgroupSet {
    pub elements: SubSet,
    pub is_normal: bool,
    pub is_abelian: bool,
}

impl SubgroupSet {
    fn new(group: &Group, elements: SubSet) -> SubgroupSet {
        debug_assert!(group.verify_subgroup(&elements).is_ok());
        let is_normal = group.is_normal(&elements);
        let is_abelian = elements.iter().all(|a| {
            elements
                .iter()
                .all(|b| group.mul_index(a, b) == group.mul_index(b, a))
        });
        SubgroupSet {
            elements,
            is_normal,
            is_abelian,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.count()
    }
}

pub fn commutator_index(group: &Group, a: usize, b: usize) -> usize {
    let ab = group.mul_index(a, b);
    let back = group.mul_index(group.inv_index(a), group.inv_index(b));
    group.mul_index(ab, back)
}

pub fn center(group: &Group) -> SubgroupSet {
    SubgroupSet::new(group, group.center())
}

pub fn centralizer(group: &Group, g: usize) -> SubgroupSet {
    let elements = SubSet::from_indices(
        group.order(),
        (0..group.order()).filter(|&x| group.mul_index(x, g) == group.mul_index(g, x)),
    );
    SubgroupSet::new(group, elements)
}

/// `N_G(H) = {x : x H x^-1 = H}`, the intersection of the conjugation
/// fibers over H.
pub fn normalizer(group: &Group, subgroup: &SubSet) -> Result<SubgroupSet, StructureError> {
    group
        .verify_subgroup(subgroup)
        .map_err(|e| StructureError::NotASubgroup(e.to_string()))?;
    let elements = SubSet::from_indices(
        group.order(),
        (0..group.order()).filter(|&x| {
            let xinv = group.inv_index(x);
            subgroup
                .iter()
                .all(|h| subgroup.contains(group.mul_index(group.mul_index(x, h), xinv)))
        }),
    );
    Ok(SubgroupSet::new(group, elements))
}

/// The subgroup generated by all commutators `[a, b]` with `a` in `left`
/// and `b` in `right`.
pub fn mutual_commutator(group: &Group, left: &SubSet, right: &SubSet) -> SubSet {
    let generators: Vec<usize> = left
        .iter()
        .flat_map(|a| right.iter().map(move |b| (a, b)))
        .map(|(a, b)| commutator_index(group, a, b))
        .collect();
    group.generated_subgroup(&generators)
}

/// Ascending central series `Z_1 <= Z_2 <= ...` until stabilization.
/// `Z_{n+1} = {x : [x, g] in Z_n for all g}`.
pub fn upper_central_series(group: &Group) -> Vec<SubgroupSet> {
    let order = group.order();
    let mut series: Vec<SubgroupSet> = vec![center(group)];
    loop {
        let last = &series.last().unwrap().elements;
        let next = SubSet::from_indices(
            order,
            (0..order)
                .filter(|&x| (0..order).all(|g| last.contains(commutator_index(group, x, g)))),
        );
        if &next == last {
            break;
        }
        series.push(SubgroupSet::new(group, next));
    }
    series
}

/// Descending derived series `G >= G' >= G'' >= ...` until stabilization;
/// the group itself is the first entry.
pub fn derived_series(group: &Group) -> Vec<SubgroupSet> {
    let mut series = vec![SubgroupSet::new(group, SubSet::full(group.order()))];
    loop {
        let last = &series.last().unwrap().elements;
        let next = mutual_commutator(group, last, last);
        if &next == last {
            break;
        }
        series.push(SubgroupSet::new(group, next));
    }
    series
}

/// Nilpotency class: the length of the upper central series when it reaches
/// the whole group; `Some(0)` for the trivial group, `None` when not
/// nilpotent.
pub fn nilpotency_class(group: &Group) -> Option<usize> {
    if group.order() == 1 {
        return Some(0);
    }
    let series = upper_central_series(group);
    series
        .iter()
        .position(|z| z.elements.is_full())
        .map(|i| i + 1)
}

pub fn is_solvable(group: &Group) -> bool {
    derived_series(group).last().unwrap().elements.count() == 1
}

/// Verifies commutator bilinearity `[ab, g] = [a,g][b,g]` on every triple,
/// plus that each `x -> [x, g]` is a homomorphism with kernel the
/// centralizer of `g` and image size equal to the centralizer index.
/// Requires nilpotency class at most 2.
pub fn check_commutator_bilinearity(group: &Group) -> Result<bool, StructureError> {
    let class = nilpotency_class(group);
    if !matches!(class, Some(c) if c <= 2) {
        return Err(StructureError::NotClassAtMostTwo { found: class });
    }
    let order = group.order();
    for g in 0..order {
        for a in 0..order {
            let ca = commutator_index(group, a, g);
            for b in 0..order {
                let lhs = commutator_index(group, group.mul_index(a, b), g);
                let rhs = group.mul_index(ca, commutator_index(group, b, g));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        // x -> [x, g] is a homomorphism; its kernel must be C_G(g) and its
        // image size the index [G : C_G(g)].
        let centralizer_of_g = centralizer(group, g);
        let mut image = SubSet::empty(order);
        for x in 0..order {
            let value = commutator_index(group, x, g);
            image.insert(value);
            let in_kernel = value == group.identity_index();
            if in_kernel != centralizer_of_g.elements.contains(x) {
                return Ok(false);
            }
        }
        if image.count() * centralizer_of_g.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of Engel elements: `x` such that for every `g` the iterated
/// commutator `[g, x, x, ...]` reaches the identity. The iteration lives in
/// a finite set, so revisiting any value before the identity settles the
/// answer negatively. On finite groups this set is the Fitting subgroup.
pub fn engel_set(group: &Group) -> SubSet {
    let order = group.order();
    let mut out = SubSet::empty(order);
    'candidates: for x in 0..order {
        for g in 0..order {
            let mut seen = SubSet::empty(order);
            let mut y = g;
            loop {
                if y == group.identity_index() {
                    break;
                }
                if seen.contains(y) {
                    continue 'candidates;
                }
                seen.insert(y);
                y = commutator_index(group, y, x);
            }
        }
        out.insert(x);
    }
    out
}

/// Every subgroup, by breadth-first closure: cyclic subgroups, then all
/// 2-generated subgroups, then pairwise joins until a fixpoint. At the
/// supported orders the 2-generated subgroups and their joins exhaust the
/// lattice.
pub fn enumerate_subgroups(group: &Group, cap: usize) -> Result<Vec<SubSet>, StructureError> {
    enumerate_subgroups_cancellable(group, cap, &CancelToken::new())
}

/// Subgroup enumeration with a cancellation checkpoint per candidate batch.
pub fn enumerate_subgroups_cancellable(
    group: &Group,
    cap: usize,
    cancel: &CancelToken,
) -> Result<Vec<SubSet>, StructureError> {
    let order = group.order();
    if order > cap {
        return Err(StructureError::CapExceeded { order, cap });
    }
    let mut found: Vec<SubSet> = Vec::new();
    let push = |set: SubSet, found: &mut Vec<SubSet>| {
        if !found.contains(&set) {
            found.push(set);
        }
    };
    for a in 0..order {
        if cancel.is_cancelled() {
            return Err(StructureError::Cancelled);
        }
        push(group.generated_subgroup(&[a]), &mut found);
    }
    for a in 0..order {
        if cancel.is_cancelled() {
            return Err(StructureError::Cancelled);
        }
        for b in a + 1..order {
            push(group.generated_subgroup(&[a, b]), &mut found);
        }
    }
    loop {
        let mut grew = false;
        let snapshot = found.clone();
        for i in 0..snapshot.len() {
            if cancel.is_cancelled() {
                return Err(StructureError::Cancelled);
            }
            for j in i + 1..snapshot.len() {
                let join_gens: Vec<usize> = snapshot[i].iter().chain(snapshot[j].iter()).collect();
                let join = group.generated_subgroup(&join_gens);
                if !found.contains(&join) {
                    found.push(join);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    found.sort_by_key(|s| (s.count(), s.to_bit_string()));
    Ok(found)
}

/// Realizes a verified subgroup as a group in its own right (sub-table).
pub fn subgroup_as_group(group: &Group, subgroup: &SubSet) -> Result<Group, StructureError> {
    group
        .verify_subgroup(subgroup)
        .map_err(|e| StructureError::NotASubgroup(e.to_string()))?;
    let members: Vec<usize> = subgroup.iter().collect();
    let position = |x: usize| members.binary_search(&x).expect("closed subgroup");
    let mut table = Vec::with_capacity(members.len() * members.len());
    for &a in &members {
        for &b in &members {
            table.push(position(group.mul_index(a, b)) as u32);
        }
    }
    let names = members
        .iter()
        .map(|&m| group.name_of(group.element(m).unwrap()).to_string())
        .collect();
    Group::from_table(crate::group::GroupKind::CayleyTable, table, names)
        .map_err(|e| StructureError::NotASubgroup(e.to_string()))
}

/// The Fitting subgroup: the join of all nilpotent normal subgroups.
pub fn fitting_subgroup(group: &Group, cap: usize) -> Result<SubgroupSet, StructureError> {
    let subgroups = enumerate_subgroups(group, cap)?;
    let mut generators: Vec<usize> = Vec::new();
    for candidate in &subgroups {
        if !group.is_normal(candidate) {
            continue;
        }
        let as_group = subgroup_as_group(group, candidate)?;
        if nilpotency_class(&as_group).is_some() {
            generators.extend(candidate.iter());
        }
    }
    Ok(SubgroupSet::new(
        group,
        group.generated_subgroup(&generators),
    ))
}

/// For groups of exponent 3: every element commutes with all its
/// conjugates, i.e. `x (y x y^-1) = (y x y^-1) x` for all pairs.
pub fn commutes_with_conjugates_check(group: &Group) -> Result<bool, StructureError> {
    let exponent = group.exponent();
    if exponent != 3 {
        return Err(StructureError::WrongExponent {
            found: exponent,
            need: 3,
        });
    }
    let order = group.order();
    for x in 0..order {
        for y in 0..order {
            let conjugate = group.mul_index(group.mul_index(y, x), group.inv_index(y));
            if group.mul_index(x, conjugate) != group.mul_index(conjugate, x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Full structural report for one finite group, with subsets given by
/// element index lists.
#[derive(Debug, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub exponent: u64,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub center: Vec<usize>,
    pub upper_central_series: Vec<Vec<usize>>,
    pub derived_series: Vec<Vec<usize>>,
    pub engel_set: Vec<usize>,
    pub fitting_subgroup: Vec<usize>,
    pub subgroup_count: usize,
}

pub fn structure_report(group: &Group, cap: usize) -> Result<StructureReport, StructureError> {
    let indices = |s: &SubSet| s.iter().collect::<Vec<usize>>();
    let fitting = fitting_subgroup(group, cap)?;
    Ok(StructureReport {
        order: group.order(),
        exponent: group.exponent(),
        abelian: group.is_abelian(),
        nilpotency_class: nilpotency_class(group),
        solvable: is_solvable(group),
        center: indices(&group.center()),
        upper_central_series: upper_central_series(group)
            .iter()
            .map(|z| indices(&z.elements))
            .collect(),
        derived_series: derived_series(group)
            .iter()
            .map(|d| indices(&d.elements))
            .collect(),
        engel_set: indices(&engel_set(group)),
        fitting_subgroup: indices(&fitting.elements),
        subgroup_count: enumerate_subgroups(group, cap)?.len(),
    })
}
