//! Concrete finite groups with exact element arithmetic.
//!
//! Every construction (cyclic, dihedral, quaternion, permutation, finite
//! Heisenberg, Cayley table, direct product, quotient) compiles down to a
//! multiplication table over indices `0..order`, so all downstream engines
//! operate uniformly on indexed carriers. Groups are nominal contexts: two
//! separately constructed isomorphic groups do not share elements.

mod build;
mod descriptor;

pub use build::corpus;
pub use descriptor::GroupSpec;

use crate::bitset::SubSet;
use crate::nat::ExtendedNat;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use thiserror::Error;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Exhaustive associativity is checked up to this order at construction;
/// larger tables are spot-checked on random triples.
pub const FULL_ASSOCIATIVITY_CAP: usize = 64;

/// Largest order accepted from external descriptors; tables are quadratic
/// in the order, so this bounds construction memory.
pub const MAX_DESCRIPTOR_ORDER: usize = 1024;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("element does not belong to this group")]
    GroupMismatch,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unsupported for this group: {0}")]
    Unsupported(String),
    #[error("group of order {order} exceeds the construction cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid descriptor: {0}")]
    BadDescriptor(String),
}

/// How the group was constructed; retained for display and serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    Symmetric(u32),
    Alternating(u32),
    HeisenbergFinite(u64),
    Permutation { degree: u32 },
    CayleyTable,
    DirectProduct(Vec<GroupKind>),
    Quotient(Box<GroupKind>),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "C{n}"),
            GroupKind::Dihedral(n) => write!(f, "D{n}"),
            GroupKind::Quaternion8 => write!(f, "Q8"),
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Alternating(n) => write!(f, "A{n}"),
            GroupKind::HeisenbergFinite(m) => write!(f, "H(Z/{m})"),
            GroupKind::Permutation { degree } => write!(f, "Perm(deg {degree})"),
            GroupKind::CayleyTable => write!(f, "table"),
            GroupKind::DirectProduct(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            GroupKind::Quotient(parent) => write!(f, "{parent}/N"),
        }
    }
}

#[derive(Default)]
struct Caches {
    center: Option<SubSet>,
    element_orders: Option<Vec<u64>>,
}

struct GroupInner {
    id: u64,
    kind: GroupKind,
    order: usize,
    identity: u32,
    table: Vec<u32>,
    inverses: Vec<u32>,
    names: Vec<String>,
    caches: Mutex<Caches>,
}

/// A finite group handle. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

/// An element of a specific [`Group`]: the group's nominal id plus a table
/// index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    group_id: u64,
    index: u32,
}

impl Element {
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}@{}", self.index, self.group_id)
    }
}

impl Group {
    /// Builds a group from a full multiplication table (entries are element
    /// indices). The table is validated: closure, identity, inverses, and
    /// associativity (exhaustive up to [`FULL_ASSOCIATIVITY_CAP`], sampled
    /// above).
    pub fn from_table(
        kind: GroupKind,
        table: Vec<u32>,
        names: Vec<String>,
    ) -> Result<Group, GroupError> {
        let order = names.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty carrier".into()));
        }
        if table.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v as usize >= order) {
            return Err(GroupError::NotAGroup(format!(
                "table entry {bad} out of range"
            )));
        }

        let at = |a: usize, b: usize| table[a * order + b] as usize;

        let mut identity = None;
        for e in 0..order {
            if (0..order).all(|a| at(e, a) == a && at(a, e) == a) {
                identity = Some(e);
                break;
            }
        }
        let identity =
            identity.ok_or_else(|| GroupError::NotAGroup("no identity element".into()))? as u32;

        let mut inverses = vec![u32::MAX; order];
        for (a, slot) in inverses.iter_mut().enumerate() {
            match (0..order)
                .find(|&b| at(a, b) == identity as usize && at(b, a) == identity as usize)
            {
                Some(b) => *slot = b as u32,
                None => return Err(GroupError::NotAGroup(format!("element {a} has no inverse"))),
            }
        }

        if order <= FULL_ASSOCIATIVITY_CAP {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if at(at(a, b), c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic sample: stride through the triple space.
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..200_000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % order;
                let b = (state >> 13) as usize % order;
                let c = state as usize % order;
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }

        Ok(Group {
            inner: Arc::new(GroupInner {
                id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
                kind,
                order,
                identity,
                table,
                inverses,
                names,
                caches: Mutex::new(Caches::default()),
            }),
        })
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn kind(&self) -> &GroupKind {
        &self.inner.kind
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> Element {
        Element {
            group_id: self.inner.id,
            index: self.inner.identity,
        }
    }

    pub fn element(&self, index: usize) -> Result<Element, GroupError> {
        if index >= self.inner.order {
            return Err(GroupError::IndexOutOfRange {
                index,
                order: self.inner.order,
            });
        }
        Ok(Element {
            group_id: self.inner.id,
            index: index as u32,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let id = self.inner.id;
        (0..self.inner.order as u32).map(move |index| Element {
            group_id: id,
            index,
        })
    }

    pub fn contains(&self, a: Element) -> bool {
        a.group_id == self.inner.id && (a.index as usize) < self.inner.order
    }

    fn check(&self, a: Element) -> Result<(), GroupError> {
        if !self.contains(a) {
            return Err(GroupError::GroupMismatch);
        }
        Ok(())
    }

    pub fn name_of(&self, a: Element) -> &str {
        &self.inner.names[a.index as usize]
    }

    /// Raw index multiplication, bypassing the element ownership check.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b] as usize
    }

    pub fn inv_index(&self, a: usize) -> usize {
        self.inner.inverses[a] as usize
    }

    pub fn identity_index(&self) -> usize {
        self.inner.identity as usize
    }

    pub fn multiply(&self, a: Element, b: Element) -> Result<Element, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(Element {
            group_id: self.inner.id,
            index: self.inner.table[a.index as usize * self.inner.order + b.index as usize],
        })
    }

    pub fn inverse(&self, a: Element) -> Result<Element, GroupError> {
        self.check(a)?;
        Ok(Element {
            group_id: self.inner.id,
            index: self.inner.inverses[a.index as usize],
        })
    }

    /// `a^n` by square-and-multiply; negative exponents act through the
    /// inverse, and `a^0` is the identity.
    pub fn power(&self, a: Element, n: i64) -> Result<Element, GroupError> {
        self.check(a)?;
        let mut base = if n < 0 {
            self.inv_index(a.index as usize)
        } else {
            a.index as usize
        };
        let mut exp = n.unsigned_abs();
        let mut acc = self.identity_index();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_index(acc, base);
            }
            base = self.mul_index(base, base);
            exp >>= 1;
        }
        Ok(Element {
            group_id: self.inner.id,
            index: acc as u32,
        })
    }

    /// Least `n >= 1` with `a^n = e`. Always finite for table groups.
    pub fn order_of(&self, a: Element) -> Result<ExtendedNat, GroupError> {
        self.check(a)?;
        Ok(ExtendedNat::finite(self.order_of_index(a.index as usize)))
    }

    pub fn order_of_index(&self, a: usize) -> u64 {
        if let Some(orders) = &self.inner.caches.lock().unwrap().element_orders {
            return orders[a];
        }
        let orders = self.compute_orders();
        let result = orders[a];
        self.inner.caches.lock().unwrap().element_orders = Some(orders);
        result
    }

    fn compute_orders(&self) -> Vec<u64> {
        (0..self.inner.order)
            .map(|a| {
                let mut acc = a;
                let mut n = 1u64;
                while acc != self.identity_index() {
                    acc = self.mul_index(acc, a);
                    n += 1;
                }
                n
            })
            .collect()
    }

    /// The n-socle `{g : g^n = e}` as an index set, by enumeration.
    pub fn socle(&self, n: u64) -> SubSet {
        let mut out = SubSet::empty(self.inner.order);
        for a in 0..self.inner.order {
            if n.is_multiple_of(self.order_of_index(a)) {
                out.insert(a);
            }
        }
        if n == 0 {
            // g^0 = e for every g.
            return SubSet::full(self.inner.order);
        }
        out
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.inner.order).fold(1u64, |acc, a| {
            let o = self.order_of_index(a);
            acc / gcd_u64(acc, o) * o
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.inner.order)
            .all(|a| (0..self.inner.order).all(|b| self.mul_index(a, b) == self.mul_index(b, a)))
    }

    /// Center as an index set; computed once and cached.
    pub fn center(&self) -> SubSet {
        if let Some(center) = &self.inner.caches.lock().unwrap().center {
            return center.clone();
        }
        let mut center = SubSet::empty(self.inner.order);
        for a in 0..self.inner.order {
            if (0..self.inner.order).all(|b| self.mul_index(a, b) == self.mul_index(b, a)) {
                center.insert(a);
            }
        }
        self.inner.caches.lock().unwrap().center = Some(center.clone());
        center
    }

    /// Checks that `subset` contains the identity and is closed under
    /// product and inverse.
    pub fn verify_subgroup(&self, subset: &SubSet) -> Result<(), GroupError> {
        if subset.carrier_len() != self.inner.order {
            return Err(GroupError::NotASubgroup("carrier size mismatch".into()));
        }
        if !subset.contains(self.identity_index()) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for a in subset.iter() {
            if !subset.contains(self.inv_index(a)) {
                return Err(GroupError::NotASubgroup(format!(
                    "not inverse-closed at {a}"
                )));
            }
            for b in subset.iter() {
                if !subset.contains(self.mul_index(a, b)) {
                    return Err(GroupError::NotASubgroup(format!(
                        "not product-closed at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, subgroup: &SubSet) -> bool {
        (0..self.inner.order).all(|g| {
            let ginv = self.inv_index(g);
            subgroup
                .iter()
                .all(|h| subgroup.contains(self.mul_index(self.mul_index(g, h), ginv)))
        })
    }

    /// Quotient by a verified normal subgroup, as a fresh table group on the
    /// cosets. Also returns the canonical projection (parent index to coset
    /// index).
    pub fn quotient(&self, normal: &SubSet) -> Result<(Group, Vec<usize>), GroupError> {
        self.verify_subgroup(normal)?;
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let order = self.inner.order;
        let mut coset_of = vec![usize::MAX; order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let coset_index = reps.len();
            reps.push(g);
            for h in normal.iter() {
                coset_of[self.mul_index(g, h)] = coset_index;
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul_index(a, b)] as u32);
            }
        }
        let names = reps
            .iter()
            .map(|&r| format!("[{}]", self.inner.names[r]))
            .collect();
        let group = Group::from_table(
            GroupKind::Quotient(Box::new(self.inner.kind.clone())),
            table,
            names,
        )?;
        Ok((group, coset_of))
    }

    /// The subgroup generated by a set of indices, by closure.
    pub fn generated_subgroup(&self, generators: &[usize]) -> SubSet {
        let mut set = SubSet::singleton(self.inner.order, self.identity_index());
        let mut frontier: Vec<usize> = vec![self.identity_index()];
        for &g in generators {
            if !set.contains(g) {
                set.insert(g);
                frontier.push(g);
            }
        }
        while let Some(a) = frontier.pop() {
            for &g in generators {
                for product in [
                    self.mul_index(a, g),
                    self.mul_index(g, a),
                    self.inv_index(a),
                ] {
                    if !set.contains(product) {
                        set.insert(product);
                        frontier.push(product);
                    }
                }
            }
        }
        set
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.inner.kind, self.inner.order)
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_multiplication_is_addition_mod_n() {
        let g = Group::cyclic(6);
        let four = g.element(4).unwrap();
        let five = g.element(5).unwrap();
        assert_eq!(g.multiply(four, five).unwrap(), g.element(3).unwrap());
        for a in g.elements() {
            assert_eq!(g.multiply(g.identity(), a).unwrap(), a);
        }
    }

    #[test]
    fn power_rules() {
        let g = Group::cyclic(5);
        let two = g.element(2).unwrap();
        assert_eq!(g.power(two, 7).unwrap(), g.element(4).unwrap());
        assert_eq!(g.power(two, 0).unwrap(), g.identity());
        let q8 = Group::quaternion8();
        // i^2 = -1
        let i = q8.element_by_name("i").unwrap();
        let minus_one = q8.element_by_name("-1").unwrap();
        assert_eq!(q8.power(i, 2).unwrap(), minus_one);
    }

    #[test]
    fn power_additivity_on_sampled_exponents() {
        for g in [Group::cyclic(12), Group::quaternion8(), Group::symmetric(4)] {
            let a = g.element(g.order() - 1).unwrap();
            for m in -16i64..=16 {
                for n in -16i64..=16 {
                    let lhs = g.power(a, m + n).unwrap();
                    let rhs = g
                        .multiply(g.power(a, m).unwrap(), g.power(a, n).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn element_orders() {
        let g = Group::cyclic(12);
        assert_eq!(
            g.order_of(g.element(8).unwrap()).unwrap(),
            ExtendedNat::finite(3u64)
        );
        assert_eq!(g.order_of(g.identity()).unwrap(), ExtendedNat::one());
        let d4 = Group::dihedral(4);
        // Reflections are the elements outside the rotation subgroup.
        for idx in 4..8 {
            assert_eq!(d4.order_of_index(idx), 2);
        }
    }

    #[test]
    fn socles() {
        let c6 = Group::cyclic(6);
        assert_eq!(c6.socle(2), SubSet::from_indices(6, [0, 3]));
        assert_eq!(c6.socle(1), SubSet::singleton(6, 0));
        let s3 = Group::symmetric(3);
        assert_eq!(s3.socle(2).count(), 4); // e plus three transpositions
                                            // Socle contains e and is inversion-closed.
        for g in [Group::dihedral(5), Group::quaternion8()] {
            for n in 1..=8 {
                let socle = g.socle(n);
                assert!(socle.contains(g.identity_index()));
                for a in socle.iter() {
                    assert!(socle.contains(g.inv_index(a)));
                }
            }
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(Group::cyclic(7).exponent(), 7);
        assert_eq!(Group::symmetric(3).exponent(), 6);
        assert_eq!(Group::heisenberg_finite(3).exponent(), 3);
        assert_eq!(Group::heisenberg_finite(2).exponent(), 4);
    }

    #[test]
    fn quotient_by_trivial_is_same_order() {
        let g = Group::dihedral(4);
        let trivial = SubSet::singleton(8, g.identity_index());
        let (q, projection) = g.quotient(&trivial).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(projection.len(), 8);
    }

    #[test]
    fn quaternion_mod_center_is_klein_four() {
        let q8 = Group::quaternion8();
        let center = q8.center();
        assert_eq!(center.count(), 2);
        let (q, _) = q8.quotient(&center).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
    }

    #[test]
    fn s3_mod_a3_is_c2() {
        let s3 = Group::symmetric(3);
        let a3 = SubSet::from_indices(
            s3.order(),
            (0..s3.order()).filter(|&i| s3.order_of_index(i) % 2 == 1),
        );
        assert_eq!(a3.count(), 3);
        let (q, _) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = Group::symmetric(3);
        // A subgroup generated by one transposition is not normal in S3.
        let refl = (0..6).find(|&i| s3.order_of_index(i) == 2).unwrap();
        let sub = s3.generated_subgroup(&[refl]);
        assert_eq!(sub.count(), 2);
        assert!(matches!(s3.quotient(&sub), Err(GroupError::NotNormal)));
    }

    #[test]
    fn lagrange_consistency_for_cosets() {
        let s4 = Group::symmetric(4);
        // V4 inside S4: identity and the three double transpositions.
        let v4 = SubSet::from_indices(
            24,
            (0..24).filter(|&i| {
                s4.order_of_index(i) <= 2 && (i == s4.identity_index() || fixes_nothing(&s4, i))
            }),
        );
        assert_eq!(v4.count(), 4);
        let (q, projection) = s4.quotient(&v4).unwrap();
        assert_eq!(q.order() * v4.count(), s4.order());
        // Each coset has exactly |N| preimages.
        for coset in 0..q.order() {
            assert_eq!(
                projection.iter().filter(|&&c| c == coset).count(),
                v4.count()
            );
        }
    }

    fn fixes_nothing(g: &Group, index: usize) -> bool {
        // Double transpositions in S4 are exactly the order-2 elements whose
        // cycle name has two 2-cycles; detect via the stored name.
        let name = g.name_of(g.element(index).unwrap()).to_string();
        name.matches('(').count() == 2
    }

    #[test]
    fn group_axioms_exhaustive_on_small_corpus() {
        for g in [
            Group::cyclic(8),
            Group::dihedral(6),
            Group::quaternion8(),
            Group::alternating(4),
        ] {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul_index(a, g.identity_index()), a);
                assert_eq!(g.mul_index(g.identity_index(), a), a);
                assert_eq!(g.mul_index(a, g.inv_index(a)), g.identity_index());
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(
                            g.mul_index(g.mul_index(a, b), c),
                            g.mul_index(a, g.mul_index(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let g1 = Group::cyclic(6);
        let g2 = Group::cyclic(6);
        let a = g1.element(2).unwrap();
        let b = g2.element(3).unwrap();
        assert!(matches!(g1.multiply(a, b), Err(GroupError::GroupMismatch)));
    }

    #[test]
    fn bad_cayley_tables_are_rejected() {
        // Left translations not bijective: no identity can exist.
        let table = vec![0u32, 0, 0, 0];
        let names = vec!["a".into(), "b".into()];
        assert!(Group::from_table(GroupKind::CayleyTable, table, names).is_err());
        // Non-associative magma on 3 points (subtraction mod 3).
        let mut sub_table = Vec::new();
        for a in 0i32..3 {
            for b in 0i32..3 {
                sub_table.push(((a - b).rem_euclid(3)) as u32);
            }
        }
        let names3 = vec!["0".into(), "1".into(), "2".into()];
        assert!(Group::from_table(GroupKind::CayleyTable, sub_table, names3).is_err());
    }
}
