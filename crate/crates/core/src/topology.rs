//! Closed-set families on finite carriers, generated from subbases.
//!
//! A family here is the least collection of subsets containing a given
//! subbasis together with the empty set and the full carrier, closed under
//! pairwise union and pairwise intersection. On a finite carrier pairwise
//! closure already gives closure under arbitrary intersections and unions,
//! and the whole family is determined by its point closures:
//!
//! * `cl({x})` is the intersection of the subbasis members containing `x`
//!   (any finite union covering `x` contains a single subbasis member that
//!   covers `x`, so unions never shrink a point closure);
//! * a set `S` is in the family exactly when `S` is the union of the point
//!   closures of its members, because finite unions of closed sets are
//!   closed and every closed superset of `{x}` contains `cl({x})`.
//!
//! Families are therefore carried in two interchangeable forms: a lazy one
//! backed by the point-closure matrix (usable at any carrier size), and an
//! explicitly materialized one produced by fixpoint iteration (bounded by
//! generation caps). Both answer closure, membership, separation and
//! comparison queries identically; the tests pit one against the other.

use crate::bitset::SubSet;
use crate::group::Group;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Default cap on carrier size for explicit family generation.
pub const DEFAULT_CARRIER_CAP: usize = 64;
/// Guard against materializing an exponentially large family.
pub const DEFAULT_FAMILY_CAP: usize = 1 << 16;

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("carrier size {got} exceeds the generation cap {cap}")]
    CarrierTooLarge { got: usize, cap: usize },
    #[error("generated family exceeds the cap of {cap} sets")]
    FamilyTooLarge { cap: usize },
    #[error("family is not materialized; generate it explicitly first")]
    NotMaterialized,
    #[error("families live on carriers of different sizes")]
    CarrierMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyLabel {
    Cofinite,
    Monomial,
    Centralizer,
    CentralizerCofinite,
    Zariski,
    Custom(String),
}

impl fmt::Display for TopologyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyLabel::Cofinite => write!(f, "cofinite"),
            TopologyLabel::Monomial => write!(f, "monomial"),
            TopologyLabel::Centralizer => write!(f, "centralizer"),
            TopologyLabel::CentralizerCofinite => write!(f, "c_prime"),
            TopologyLabel::Zariski => write!(f, "zariski"),
            TopologyLabel::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// Outcome of comparing two families by inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyOrder {
    Coarser,
    Equal,
    Finer,
    Incomparable,
}

/// The closed sets of a topology on a finite carrier.
#[derive(Debug, Clone)]
pub struct ClosedSetFamily {
    label: TopologyLabel,
    carrier: usize,
    subbasis: Vec<SubSet>,
    point_closures: Vec<SubSet>,
    sets: Option<BTreeSet<SubSet>>,
}

impl ClosedSetFamily {
    /// Lazy family: point closures only. Exact at any carrier size.
    pub fn lazy(label: TopologyLabel, carrier: usize, subbasis: Vec<SubSet>) -> ClosedSetFamily {
        let point_closures = (0..carrier)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|b| b.contains(x))
                    .fold(SubSet::full(carrier), |acc, b| acc.intersection(b))
            })
            .collect();
        ClosedSetFamily {
            label,
            carrier,
            subbasis,
            point_closures,
            sets: None,
        }
    }

    /// Explicit family: least fixpoint of pairwise union and intersection
    /// over the subbasis plus the empty set and the carrier.
    pub fn generate(
        label: TopologyLabel,
        carrier: usize,
        subbasis: Vec<SubSet>,
        carrier_cap: usize,
        family_cap: usize,
    ) -> Result<ClosedSetFamily, TopologyError> {
        if carrier > carrier_cap {
            return Err(TopologyError::CarrierTooLarge {
                got: carrier,
                cap: carrier_cap,
            });
        }
        let mut family: BTreeSet<SubSet> = BTreeSet::new();
        family.insert(SubSet::empty(carrier));
        family.insert(SubSet::full(carrier));
        for b in &subbasis {
            family.insert(b.clone());
        }
        let mut worklist: Vec<SubSet> = family.iter().cloned().collect();
        while let Some(next) = worklist.pop() {
            let snapshot: Vec<SubSet> = family.iter().cloned().collect();
            for other in &snapshot {
                for candidate in [next.union(other), next.intersection(other)] {
                    if !family.contains(&candidate) {
                        if family.len() >= family_cap {
                            return Err(TopologyError::FamilyTooLarge { cap: family_cap });
                        }
                        family.insert(candidate.clone());
                        worklist.push(candidate);
                    }
                }
            }
        }
        let mut out = ClosedSetFamily::lazy(label, carrier, subbasis);
        out.sets = Some(family);
        Ok(out)
    }

    pub fn label(&self) -> &TopologyLabel {
        &self.label
    }

    pub fn carrier_len(&self) -> usize {
        self.carrier
    }

    pub fn is_materialized(&self) -> bool {
        self.sets.is_some()
    }

    pub fn sets(&self) -> Result<&BTreeSet<SubSet>, TopologyError> {
        self.sets.as_ref().ok_or(TopologyError::NotMaterialized)
    }

    pub fn len(&self) -> Result<usize, TopologyError> {
        Ok(self.sets()?.len())
    }

    pub fn is_empty(&self) -> Result<bool, TopologyError> {
        Ok(self.sets()?.is_empty())
    }

    pub fn point_closure(&self, x: usize) -> &SubSet {
        &self.point_closures[x]
    }

    /// Closure of an arbitrary set: the union of the point closures of its
    /// members (equal, on a finite carrier, to the intersection of all
    /// closed supersets).
    pub fn closure(&self, s: &SubSet) -> SubSet {
        s.iter().fold(SubSet::empty(self.carrier), |acc, x| {
            acc.union(&self.point_closures[x])
        })
    }

    /// Closure via the literal definition, available on materialized
    /// families: intersect every closed set containing `s`.
    pub fn closure_by_intersection(&self, s: &SubSet) -> Result<SubSet, TopologyError> {
        let mut out = SubSet::full(self.carrier);
        for closed in self.sets()? {
            if s.is_subset_of(closed) {
                out = out.intersection(closed);
            }
        }
        Ok(out)
    }

    pub fn is_closed(&self, s: &SubSet) -> bool {
        match &self.sets {
            Some(sets) => sets.contains(s),
            None => &self.closure(s) == s,
        }
    }

    /// All singletons closed. On a finite carrier this is the same as the
    /// family being the full power set.
    pub fn is_t1(&self) -> bool {
        (0..self.carrier).all(|x| self.point_closures[x].count() == 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.is_t1()
    }

    /// Stability of the family under the translations and the inversion of
    /// `group`, checked through point closures: the family is stable under
    /// a bijection `phi` exactly when `phi(cl({x})) = cl({phi(x)})` for all
    /// `x`.
    pub fn is_quasitopological(&self, group: &Group) -> bool {
        assert_eq!(group.order(), self.carrier, "family lives on this group");
        let stable = |phi: &dyn Fn(usize) -> usize| -> bool {
            (0..self.carrier)
                .all(|x| self.point_closures[x].map(phi) == self.point_closures[phi(x)])
        };
        for g in 0..self.carrier {
            if !stable(&|x| group.mul_index(g, x)) || !stable(&|x| group.mul_index(x, g)) {
                return false;
            }
        }
        stable(&|x| group.inv_index(x))
    }

    /// Inclusion comparison. `Coarser` means every closed set of `self` is
    /// closed in `other`.
    pub fn compare(&self, other: &ClosedSetFamily) -> Result<FamilyOrder, TopologyError> {
        if self.carrier != other.carrier {
            return Err(TopologyError::CarrierMismatch);
        }
        // self <= other iff cl_other({x}) <= cl_self({x}) for every x.
        let le = |a: &ClosedSetFamily, b: &ClosedSetFamily| {
            (0..a.carrier).all(|x| b.point_closures[x].is_subset_of(&a.point_closures[x]))
        };
        Ok(match (le(self, other), le(other, self)) {
            (true, true) => FamilyOrder::Equal,
            (true, false) => FamilyOrder::Coarser,
            (false, true) => FamilyOrder::Finer,
            (false, false) => FamilyOrder::Incomparable,
        })
    }

    /// JSON dump: carrier size, label, subbasis and closed sets as sorted
    /// bit strings (the set list is empty for lazy families).
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump {
            carrier: usize,
            label: String,
            #[serde(skip_serializing_if = "Option::is_none")]
            family_size: Option<usize>,
            t1: bool,
            subbasis: Vec<String>,
            sets: Vec<String>,
        }
        let sets: Vec<String> = match &self.sets {
            Some(sets) => sets.iter().map(|s| s.to_bit_string()).collect(),
            None => Vec::new(),
        };
        let mut subbasis: Vec<String> = self.subbasis.iter().map(|s| s.to_bit_string()).collect();
        subbasis.sort();
        subbasis.dedup();
        let dump = Dump {
            carrier: self.carrier,
            label: self.label.to_string(),
            family_size: self.sets.as_ref().map(|s| s.len()),
            t1: self.is_t1(),
            subbasis,
            sets,
        };
        serde_json::to_string_pretty(&dump).expect("serializable")
    }

    /// DOT rendering of the Hasse diagram of the family under inclusion.
    pub fn dot_hasse(&self) -> Result<String, TopologyError> {
        let sets: Vec<&SubSet> = self.sets()?.iter().collect();
        let mut out = String::from("digraph closed_sets {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, s) in sets.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, render_set(s)));
        }
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i == j || !a.is_subset_of(b) || a == b {
                    continue;
                }
                let covered = sets.iter().enumerate().any(|(k, c)| {
                    k != i
                        && k != j
                        && a.is_subset_of(c)
                        && c.is_subset_of(b)
                        && *c != *a
                        && *c != *b
                });
                if !covered {
                    out.push_str(&format!("  n{i} -> n{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

fn render_set(s: &SubSet) -> String {
    let members: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", members.join(","))
}

/// The centralizer subbasis: the empty set plus every left coset of every
/// centralizer.
pub fn centralizer_subbasis(group: &Group) -> Vec<SubSet> {
    let order = group.order();
    let mut seen: BTreeSet<SubSet> = BTreeSet::new();
    seen.insert(SubSet::empty(order));
    for g in 0..order {
        let mut centralizer = SubSet::empty(order);
        for x in 0..order {
            if group.mul_index(x, g) == group.mul_index(g, x) {
                centralizer.insert(x);
            }
        }
        for h in 0..order {
            seen.insert(centralizer.map(|x| group.mul_index(h, x)));
        }
    }
    seen.into_iter().collect()
}

/// Fibers of the power maps `x -> x^n` for `0 <= n <= exponent`; the
/// subbasic closed sets of the monomial topology (fibers repeat with period
/// dividing the exponent).
pub fn monomial_subbasis(group: &Group) -> Vec<SubSet> {
    let order = group.order();
    let exponent = group.exponent();
    let mut seen: BTreeSet<SubSet> = BTreeSet::new();
    seen.insert(SubSet::empty(order));
    for n in 0..=exponent {
        let mut fibers: Vec<SubSet> = vec![SubSet::empty(order); order];
        for x in 0..order {
            let image = group
                .power(group.element(x).unwrap(), n as i64)
                .unwrap()
                .index();
            fibers[image].insert(x);
        }
        for fiber in fibers {
            seen.insert(fiber);
        }
    }
    seen.into_iter().collect()
}

/// Degree-one fibers `{x : g x = t}`: all singletons. These already
/// generate the full Zariski family on a finite group.
pub fn zariski_subbasis(group: &Group) -> Vec<SubSet> {
    (0..group.order())
        .map(|x| SubSet::singleton(group.order(), x))
        .collect()
}

/// Centralizer cosets joined with the degree-one singletons: the subbasis
/// of the centralizer-plus-cofinite topology.
pub fn cprime_subbasis(group: &Group) -> Vec<SubSet> {
    let mut out = centralizer_subbasis(group);
    out.extend(zariski_subbasis(group));
    let dedup: BTreeSet<SubSet> = out.into_iter().collect();
    dedup.into_iter().collect()
}

/// The five standard topologies instantiated on one finite group, compared
/// pairwise, rendered as a DOT diagram of the inclusion order.
pub fn dot_comparison_diagram(group: &Group) -> String {
    let carrier = group.order();
    let instances: Vec<(&str, ClosedSetFamily)> = vec![
        (
            "cofinite",
            ClosedSetFamily::lazy(TopologyLabel::Cofinite, carrier, zariski_subbasis(group)),
        ),
        (
            "centralizer",
            ClosedSetFamily::lazy(
                TopologyLabel::Centralizer,
                carrier,
                centralizer_subbasis(group),
            ),
        ),
        (
            "c_prime",
            ClosedSetFamily::lazy(
                TopologyLabel::CentralizerCofinite,
                carrier,
                cprime_subbasis(group),
            ),
        ),
        (
            "monomial",
            ClosedSetFamily::lazy(TopologyLabel::Monomial, carrier, monomial_subbasis(group)),
        ),
        (
            "zariski",
            ClosedSetFamily::lazy(TopologyLabel::Zariski, carrier, zariski_subbasis(group)),
        ),
    ];
    // Merge equal families into one node.
    let mut groups_of_equal: Vec<(Vec<&str>, &ClosedSetFamily)> = Vec::new();
    for (name, family) in &instances {
        match groups_of_equal
            .iter_mut()
            .find(|(_, f)| f.compare(family).unwrap() == FamilyOrder::Equal)
        {
            Some((names, _)) => names.push(name),
            None => groups_of_equal.push((vec![name], family)),
        }
    }
    let mut out = String::from("digraph topologies {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, (names, _)) in groups_of_equal.iter().enumerate() {
        out.push_str(&format!("  t{} [label=\"{}\"];\n", i, names.join(" = ")));
    }
    for (i, (_, a)) in groups_of_equal.iter().enumerate() {
        for (j, (_, b)) in groups_of_equal.iter().enumerate() {
            if i == j {
                continue;
            }
            if a.compare(b).unwrap() == FamilyOrder::Coarser {
                let covered = groups_of_equal.iter().enumerate().any(|(k, (_, c))| {
                    k != i
                        && k != j
                        && a.compare(c).unwrap() == FamilyOrder::Coarser
                        && c.compare(b).unwrap() == FamilyOrder::Coarser
                });
                if !covered {
                    out.push_str(&format!("  t{i} -> t{j};\n"));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
