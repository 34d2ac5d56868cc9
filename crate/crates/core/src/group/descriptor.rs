//! JSON descriptors for concrete groups.
//!
//! The schema is a tagged union on `"kind"`:
//!
//! ```json
//! {"kind": "cyclic", "n": 6}
//! {"kind": "dihedral", "n": 4}
//! {"kind": "quaternion8"}
//! {"kind": "symmetric", "n": 4}
//! {"kind": "alternating", "n": 4}
//! {"kind": "heisenberg_finite", "modulus": 3}
//! {"kind": "cayley", "order": 2, "table": [[0,1],[1,0]]}
//! {"kind": "permutation", "degree": 3, "generators": [[1,0,2],[0,2,1]]}
//! {"kind": "product", "factors": [{"kind":"cyclic","n":2}, {"kind":"symmetric","n":3}]}
//! {"kind": "quotient", "parent": {"kind":"quaternion8"}, "normal": [0,1]}
//! ```

use super::{Group, GroupError, GroupKind, MAX_DESCRIPTOR_ORDER};
use crate::bitset::SubSet;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic {
        n: u64,
    },
    Dihedral {
        n: u64,
    },
    Quaternion8,
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    HeisenbergFinite {
        modulus: u64,
    },
    Cayley {
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    Quotient {
        parent: Box<GroupSpec>,
        normal: Vec<usize>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, GroupError> {
        if let Some(order) = self.announced_order() {
            if order > MAX_DESCRIPTOR_ORDER {
                return Err(GroupError::TooLarge {
                    order,
                    cap: MAX_DESCRIPTOR_ORDER,
                });
            }
        }
        match self {
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(GroupError::BadDescriptor(
                        "cyclic order must be >= 1".into(),
                    ));
                }
                Ok(Group::cyclic(*n))
            }
            GroupSpec::Dihedral { n } => {
                if *n == 0 {
                    return Err(GroupError::BadDescriptor(
                        "dihedral parameter must be >= 1".into(),
                    ));
                }
                Ok(Group::dihedral(*n))
            }
            GroupSpec::Quaternion8 => Ok(Group::quaternion8()),
            GroupSpec::Symmetric { n } => {
                if !(1..=6).contains(n) {
                    return Err(GroupError::BadDescriptor(
                        "symmetric degree must be 1..=6".into(),
                    ));
                }
                Ok(Group::symmetric(*n))
            }
            GroupSpec::Alternating { n } => {
                if !(3..=6).contains(n) {
                    return Err(GroupError::BadDescriptor(
                        "alternating degree must be 3..=6".into(),
                    ));
                }
                Ok(Group::alternating(*n))
            }
            GroupSpec::HeisenbergFinite { modulus } => {
                if *modulus == 0 || *modulus > 5 {
                    return Err(GroupError::BadDescriptor(
                        "finite heisenberg modulus must be 1..=5 (order m^3)".into(),
                    ));
                }
                Ok(Group::heisenberg_finite(*modulus))
            }
            GroupSpec::Cayley { order, table } => {
                if table.len() != *order {
                    return Err(GroupError::BadDescriptor("table row count != order".into()));
                }
                let mut flat = Vec::with_capacity(order * order);
                for row in table {
                    if row.len() != *order {
                        return Err(GroupError::BadDescriptor(
                            "table row length != order".into(),
                        ));
                    }
                    flat.extend(row.iter().map(|&v| v as u32));
                }
                let names = (0..*order).map(|i| format!("g{i}")).collect();
                Group::from_table(GroupKind::CayleyTable, flat, names)
            }
            GroupSpec::Permutation { degree, generators } => {
                Group::permutation(*degree, generators)
            }
            GroupSpec::Product { factors } => {
                let built: Result<Vec<Group>, GroupError> =
                    factors.iter().map(|f| f.build()).collect();
                let built = built?;
                // Factor orders are only known for sure after building
                // (permutation closures announce nothing up front).
                let order = built
                    .iter()
                    .fold(1usize, |acc, g| acc.saturating_mul(g.order()));
                if order > MAX_DESCRIPTOR_ORDER {
                    return Err(GroupError::TooLarge {
                        order,
                        cap: MAX_DESCRIPTOR_ORDER,
                    });
                }
                Group::direct_product(&built)
            }
            GroupSpec::Quotient { parent, normal } => {
                let parent = parent.build()?;
                for &i in normal {
                    if i >= parent.order() {
                        return Err(GroupError::BadDescriptor(format!(
                            "normal subgroup index {i} out of range"
                        )));
                    }
                }
                let subset = SubSet::from_indices(parent.order(), normal.iter().copied());
                let (quotient, _) = parent.quotient(&subset)?;
                Ok(quotient)
            }
        }
    }

    pub fn from_json(text: &str) -> Result<GroupSpec, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::BadDescriptor(e.to_string()))
    }

    /// Order as announced by the descriptor, when it can be read off
    /// without building anything (permutation closures are guarded during
    /// construction instead).
    fn announced_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic { n } => Some(*n as usize),
            GroupSpec::Dihedral { n } => Some(2 * *n as usize),
            GroupSpec::Quaternion8 => Some(8),
            GroupSpec::Symmetric { n } => Some((1..=*n).product()),
            GroupSpec::Alternating { n } => Some((1..=*n).product::<usize>() / 2),
            GroupSpec::HeisenbergFinite { modulus } => Some((*modulus as usize).pow(3)),
            GroupSpec::Cayley { order, .. } => Some(*order),
            GroupSpec::Permutation { .. } => None,
            GroupSpec::Product { factors } => factors
                .iter()
                .map(|f| f.announced_order())
                .try_fold(1usize, |acc, order| order.map(|o| acc.saturating_mul(o))),
            GroupSpec::Quotient { parent, .. } => parent.announced_order(),
        }
    }
}
