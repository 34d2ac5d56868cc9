//! Computational toolkit for word equations over groups, the closed-set
//! topologies they generate, and cofiniteness classification of finitely
//! described groups.
//!
//! The crate is organised around a small set of engines:
//!
//! * [`group`]: concrete finite groups (tables, permutations, products,
//!   quotients) with exact element arithmetic;
//! * [`word`]: one-variable words `g1 x^e1 g2 x^e2 ...` with coefficients in
//!   a group, their evaluation maps and solution sets;
//! * [`abelian`]: symbolic abelian groups (finite and infinite) with exact
//!   socle and root-counting arithmetic;
//! * [`heisenberg`]: generalized Heisenberg groups with a closed power
//!   formula and exact root solving;
//! * [`free_group`]: reduced words in free groups, primitive roots and
//!   centralizer generators;
//! * [`topology`]: closed-set families on finite carriers generated from
//!   subbases, with closure, separation and comparison queries;
//! * [`structure`]: centralizers, normalizers, central and derived series,
//!   Engel sets and Fitting subgroups of finite groups;
//! * [`classify`]: a rule-based verdict engine deciding membership in the
//!   monomial-, centralizer- and full-cofiniteness classes, each verdict
//!   carrying its justifying rule.

pub mod abelian;
pub mod bitset;
pub mod classify;
pub mod free_group;
pub mod group;
pub mod heisenberg;
pub mod nat;
pub mod snf;
pub mod structure;
pub mod topology;
pub mod verify;
pub mod word;

pub use abelian::{AbelianDescriptor, Block, BlockKind, SolutionSet};
pub use bitset::SubSet;
pub use classify::{ClassReport, GroupDescriptor, Property, Verdict};
pub use free_group::FreeWord;
pub use group::{Element, Group, GroupError};
pub use nat::ExtendedNat;
pub use topology::ClosedSetFamily;
pub use word::Word;
