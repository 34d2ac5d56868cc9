//! Generalized Heisenberg groups: triples over abelian components with
//! multiplication twisted by a bilinear pairing,
//!
//! ```text
//! (a, b, c) * (x, y, z) = (a + x, b + y, c + z + w(a, y)).
//! ```
//!
//! The n-th power has the closed form
//!
//! ```text
//! (a, b, c)^n = (n a, n b, n c + T(n) w(a, b)),   T(n) = n(n-1)/2,
//! ```
//!
//! valid for every integer n (including negatives, via the inverse
//! `(-a, -b, -c + w(a,b))`). The coefficient `T(n) = binomial(n, 2)` is
//! pinned by the repeated-multiplication oracle: squaring directly gives
//! `(2a, 2b, 2c + w(a,b))`, so the quadratic coefficient is 1. A test keeps
//! the rejected alternative `n(n+1)/2` from creeping back in.

use crate::abelian::{AbelianDescriptor, SolutionSet};
use crate::classify::Verdict;
use crate::nat::ExtendedNat;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Scalar = Ratio<i128>;
/// A component value: one scalar per coordinate of the component group.
pub type Coord = Vec<Scalar>;

#[derive(Debug, Error)]
pub enum HeisenbergError {
    #[error("coordinate has wrong arity: got {got}, expected {expected}")]
    Arity { got: usize, expected: usize },
    #[error("coordinate must be an integer for this component")]
    NotIntegral,
    #[error("pairing table has wrong shape")]
    BadTable,
    #[error("pairing is not bilinear at ({0}, {1})")]
    NotBilinear(usize, usize),
    #[error("operation unsupported for symbolic components")]
    Symbolic,
    #[error("root index must be >= 1")]
    BadRootIndex,
}

/// One of the three component groups of a Heisenberg spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentGroup {
    /// The integers.
    Integers,
    /// The rationals.
    Rationals,
    /// Integers mod m.
    ModularInt(u64),
    /// A finite abelian tuple group given by invariant factors.
    Tuples(Vec<u64>),
    /// A symbolic component: classification only, no arithmetic.
    Symbolic(AbelianDescriptor),
}

impl ComponentGroup {
    pub fn arity(&self) -> usize {
        match self {
            ComponentGroup::Integers
            | ComponentGroup::Rationals
            | ComponentGroup::ModularInt(_) => 1,
            ComponentGroup::Tuples(factors) => factors.len(),
            ComponentGroup::Symbolic(_) => 0,
        }
    }

    pub fn descriptor(&self) -> AbelianDescriptor {
        match self {
            ComponentGroup::Integers => AbelianDescriptor::integers(),
            ComponentGroup::Rationals => AbelianDescriptor::new(vec![crate::abelian::Block {
                kind: crate::abelian::BlockKind::Rational,
                multiplicity: ExtendedNat::one(),
            }])
            .unwrap(),
            ComponentGroup::ModularInt(m) => AbelianDescriptor::cyclic(*m),
            ComponentGroup::Tuples(factors) => AbelianDescriptor::from_invariant_factors(factors),
            ComponentGroup::Symbolic(d) => d.clone(),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, ComponentGroup::Symbolic(_))
    }

    fn zero(&self) -> Coord {
        vec![Scalar::zero(); self.arity()]
    }

    fn validate(&self, value: &Coord) -> Result<Coord, HeisenbergError> {
        if self.is_symbolic() {
            return Err(HeisenbergError::Symbolic);
        }
        if value.len() != self.arity() {
            return Err(HeisenbergError::Arity {
                got: value.len(),
                expected: self.arity(),
            });
        }
        match self {
            ComponentGroup::Rationals => Ok(value.clone()),
            ComponentGroup::Integers => {
                if value.iter().any(|v| !v.is_integer()) {
                    return Err(HeisenbergError::NotIntegral);
                }
                Ok(value.clone())
            }
            _ => {
                if value.iter().any(|v| !v.is_integer()) {
                    return Err(HeisenbergError::NotIntegral);
                }
                Ok(self.reduce(value))
            }
        }
    }

    fn reduce(&self, value: &Coord) -> Coord {
        match self {
            ComponentGroup::ModularInt(m) => {
                vec![Ratio::from_integer(
                    value[0].to_integer().rem_euclid(*m as i128),
                )]
            }
            ComponentGroup::Tuples(factors) => value
                .iter()
                .zip(factors)
                .map(|(v, &d)| Ratio::from_integer(v.to_integer().rem_euclid(d as i128)))
                .collect(),
            _ => value.clone(),
        }
    }

    fn add(&self, a: &Coord, b: &Coord) -> Coord {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &Coord) -> Coord {
        self.reduce(&a.iter().map(|x| -x).collect())
    }

    fn scale(&self, n: i128, a: &Coord) -> Coord {
        let n = Ratio::from_integer(n);
        self.reduce(&a.iter().map(|x| x * n).collect())
    }

    /// Exact division by n, when unique. Finite components use exhaustive
    /// search instead and never call this.
    fn divide_exact(&self, a: &Coord, n: i128) -> Option<Coord> {
        let n = Ratio::from_integer(n);
        let out: Coord = a.iter().map(|x| x / n).collect();
        match self {
            ComponentGroup::Integers => out.iter().all(|v| v.is_integer()).then_some(out),
            ComponentGroup::Rationals => Some(out),
            _ => None,
        }
    }

    fn enumerate(&self) -> Option<Vec<Coord>> {
        match self {
            ComponentGroup::ModularInt(m) => Some(
                (0..*m as i128)
                    .map(|v| vec![Ratio::from_integer(v)])
                    .collect(),
            ),
            ComponentGroup::Tuples(factors) => {
                let mut out: Vec<Coord> = vec![Vec::new()];
                for &d in factors {
                    let mut grown = Vec::with_capacity(out.len() * d as usize);
                    for prefix in &out {
                        for v in 0..d as i128 {
                            let mut next = prefix.clone();
                            next.push(Ratio::from_integer(v));
                            grown.push(next);
                        }
                    }
                    out = grown;
                }
                Some(out)
            }
            _ => None,
        }
    }

    fn index_of(&self, value: &Coord) -> usize {
        match self {
            ComponentGroup::ModularInt(_) => value[0].to_integer() as usize,
            ComponentGroup::Tuples(factors) => {
                value.iter().zip(factors).fold(0usize, |acc, (v, &d)| {
                    acc * d as usize + v.to_integer() as usize
                })
            }
            _ => unreachable!("index_of is only used on finite components"),
        }
    }
}

/// The bilinear pairing `w : E x F -> A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// Ring multiplication; only meaningful when E = F = A is a ring.
    RingMultiplication,
    /// Explicit table indexed by (element of E, element of F), finite
    /// components only.
    Table(Vec<Vec<Coord>>),
    /// Declared nondegenerate bilinear form on symbolic components.
    Declared,
}

/// A generalized Heisenberg group on `E x F x A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeisenbergSpec {
    pub e: ComponentGroup,
    pub f: ComponentGroup,
    pub a: ComponentGroup,
    pub omega: Pairing,
    /// Recorded nondegeneracy; verified exhaustively for finite components
    /// at construction time.
    pub nondegenerate: bool,
}

/// An element `(x, y, z)` of a Heisenberg group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPoint {
    pub x: Coord,
    pub y: Coord,
    pub z: Coord,
}

impl HPoint {
    pub fn from_integers(x: i128, y: i128, z: i128) -> HPoint {
        HPoint {
            x: vec![Ratio::from_integer(x)],
            y: vec![Ratio::from_integer(y)],
            z: vec![Ratio::from_integer(z)],
        }
    }
}

impl HeisenbergSpec {
    /// `H_Z`: the integer Heisenberg group.
    pub fn over_integers() -> Self {
        HeisenbergSpec {
            e: ComponentGroup::Integers,
            f: ComponentGroup::Integers,
            a: ComponentGroup::Integers,
            omega: Pairing::RingMultiplication,
            nondegenerate: true,
        }
    }

    /// `H_Q`: the rational Heisenberg group.
    pub fn over_rationals() -> Self {
        HeisenbergSpec {
            e: ComponentGroup::Rationals,
            f: ComponentGroup::Rationals,
            a: ComponentGroup::Rationals,
            omega: Pairing::RingMultiplication,
            nondegenerate: true,
        }
    }

    /// `H_{Z/m}`: the order-`m^3` finite Heisenberg group.
    pub fn over_mod(m: u64) -> Self {
        HeisenbergSpec {
            e: ComponentGroup::ModularInt(m),
            f: ComponentGroup::ModularInt(m),
            a: ComponentGroup::ModularInt(m),
            omega: Pairing::RingMultiplication,
            nondegenerate: m > 1,
        }
    }

    /// Finite components with an explicit pairing table. Bilinearity is
    /// verified exhaustively; the nondegeneracy flag is computed.
    pub fn with_pairing(
        e: Vec<u64>,
        f: Vec<u64>,
        a: Vec<u64>,
        table: Vec<Vec<Coord>>,
    ) -> Result<Self, HeisenbergError> {
        let spec = HeisenbergSpec {
            e: ComponentGroup::Tuples(e),
            f: ComponentGroup::Tuples(f),
            a: ComponentGroup::Tuples(a),
            omega: Pairing::Table(table),
            nondegenerate: false,
        };
        let es = spec.e.enumerate().unwrap();
        let fs = spec.f.enumerate().unwrap();
        {
            let Pairing::Table(table) = &spec.omega else {
                unreachable!()
            };
            if table.len() != es.len() || table.iter().any(|row| row.len() != fs.len()) {
                return Err(HeisenbergError::BadTable);
            }
            for row in table {
                for value in row {
                    if value.len() != spec.a.arity() {
                        return Err(HeisenbergError::BadTable);
                    }
                }
            }
        }
        // Bilinearity, exhaustively.
        for (i, x) in es.iter().enumerate() {
            for (j, x2) in es.iter().enumerate() {
                for y in &fs {
                    let lhs = spec.omega_eval(&spec.e.add(x, x2), y)?;
                    let rhs = spec
                        .a
                        .add(&spec.omega_eval(x, y)?, &spec.omega_eval(x2, y)?);
                    if lhs != rhs {
                        return Err(HeisenbergError::NotBilinear(i, j));
                    }
                }
            }
        }
        for x in &es {
            for (i, y) in fs.iter().enumerate() {
                for (j, y2) in fs.iter().enumerate() {
                    let lhs = spec.omega_eval(x, &spec.f.add(y, y2))?;
                    let rhs = spec
                        .a
                        .add(&spec.omega_eval(x, y)?, &spec.omega_eval(x, y2)?);
                    if lhs != rhs {
                        return Err(HeisenbergError::NotBilinear(i, j));
                    }
                }
            }
        }
        let zero_a = spec.a.zero();
        let left_nondeg = es
            .iter()
            .filter(|x| **x != spec.e.zero())
            .all(|x| fs.iter().any(|y| spec.omega_eval(x, y).unwrap() != zero_a));
        let right_nondeg = fs
            .iter()
            .filter(|y| **y != spec.f.zero())
            .all(|y| es.iter().any(|x| spec.omega_eval(x, y).unwrap() != zero_a));
        Ok(HeisenbergSpec {
            nondegenerate: left_nondeg && right_nondeg,
            ..spec
        })
    }

    /// Symbolic components: usable by the classification rules only.
    pub fn symbolic(e: AbelianDescriptor, f: AbelianDescriptor, a: AbelianDescriptor) -> Self {
        HeisenbergSpec {
            e: ComponentGroup::Symbolic(e),
            f: ComponentGroup::Symbolic(f),
            a: ComponentGroup::Symbolic(a),
            omega: Pairing::Declared,
            nondegenerate: true,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.e.is_symbolic() || self.f.is_symbolic() || self.a.is_symbolic()
    }

    pub fn omega_eval(&self, x: &Coord, y: &Coord) -> Result<Coord, HeisenbergError> {
        match &self.omega {
            Pairing::RingMultiplication => Ok(self.a.reduce(&vec![x[0] * y[0]])),
            Pairing::Table(table) => Ok(table[self.e.index_of(x)][self.f.index_of(y)].clone()),
            Pairing::Declared => Err(HeisenbergError::Symbolic),
        }
    }

    pub fn identity(&self) -> HPoint {
        HPoint {
            x: self.e.zero(),
            y: self.f.zero(),
            z: self.a.zero(),
        }
    }

    pub fn validate(&self, u: &HPoint) -> Result<HPoint, HeisenbergError> {
        Ok(HPoint {
            x: self.e.validate(&u.x)?,
            y: self.f.validate(&u.y)?,
            z: self.a.validate(&u.z)?,
        })
    }

    /// `(a,b,c)(x,y,z) = (a+x, b+y, c+z+w(a,y))`.
    pub fn multiply(&self, u: &HPoint, v: &HPoint) -> Result<HPoint, HeisenbergError> {
        let u = self.validate(u)?;
        let v = self.validate(v)?;
        let twist = self.omega_eval(&u.x, &v.y)?;
        Ok(HPoint {
            x: self.e.add(&u.x, &v.x),
            y: self.f.add(&u.y, &v.y),
            z: self.a.add(&self.a.add(&u.z, &v.z), &twist),
        })
    }

    /// `(a,b,c)^-1 = (-a, -b, -c + w(a,b))`.
    pub fn inverse(&self, u: &HPoint) -> Result<HPoint, HeisenbergError> {
        let u = self.validate(u)?;
        let twist = self.omega_eval(&u.x, &u.y)?;
        Ok(HPoint {
            x: self.e.neg(&u.x),
            y: self.f.neg(&u.y),
            z: self.a.add(&self.a.neg(&u.z), &twist),
        })
    }

    /// `u v u^-1 v^-1`; lands in the center `(0, 0, w(a,y) - w(x,b))`.
    pub fn commutator(&self, u: &HPoint, v: &HPoint) -> Result<HPoint, HeisenbergError> {
        let uv = self.multiply(u, v)?;
        let back = self.multiply(&self.inverse(u)?, &self.inverse(v)?)?;
        self.multiply(&uv, &back)
    }

    /// Power by repeated multiplication: the ground-truth oracle.
    pub fn power_naive(&self, u: &HPoint, n: i64) -> Result<HPoint, HeisenbergError> {
        let base = if n < 0 {
            self.inverse(u)?
        } else {
            self.validate(u)?
        };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    /// Closed-form power `(na, nb, nc + T(n) w(a,b))` with `T(n) = n(n-1)/2`.
    pub fn power(&self, u: &HPoint, n: i64) -> Result<HPoint, HeisenbergError> {
        let u = self.validate(u)?;
        let n = n as i128;
        let twist_count = n * (n - 1) / 2;
        let twist = self.a.scale(twist_count, &self.omega_eval(&u.x, &u.y)?);
        Ok(HPoint {
            x: self.e.scale(n, &u.x),
            y: self.f.scale(n, &u.y),
            z: self.a.add(&self.a.scale(n, &u.z), &twist),
        })
    }

    /// Solves `u^n = target` for `n >= 1`. Over the integers divisibility
    /// pins at most one solution; over the rationals exactly one; finite
    /// components are solved exhaustively.
    pub fn solve_power(
        &self,
        n: i64,
        target: &HPoint,
    ) -> Result<SolutionSet<HPoint>, HeisenbergError> {
        if n < 1 {
            return Err(HeisenbergError::BadRootIndex);
        }
        let target = self.validate(target)?;
        match (&self.e, &self.f, &self.a) {
            (ComponentGroup::Integers, _, _) | (ComponentGroup::Rationals, _, _) => {
                let n128 = n as i128;
                let Some(a) = self.e.divide_exact(&target.x, n128) else {
                    return Ok(SolutionSet::Empty);
                };
                let Some(b) = self.f.divide_exact(&target.y, n128) else {
                    return Ok(SolutionSet::Empty);
                };
                let twist_count = n128 * (n128 - 1) / 2;
                let twist = self.a.scale(twist_count, &self.omega_eval(&a, &b)?);
                let residue = self.a.add(&target.z, &self.a.neg(&twist));
                let Some(c) = self.a.divide_exact(&residue, n128) else {
                    return Ok(SolutionSet::Empty);
                };
                let candidate = HPoint { x: a, y: b, z: c };
                debug_assert_eq!(self.power(&candidate, n)?, target);
                Ok(SolutionSet::Finite(vec![candidate]))
            }
            _ => {
                let (Some(es), Some(fs), Some(zs)) =
                    (self.e.enumerate(), self.f.enumerate(), self.a.enumerate())
                else {
                    return Err(HeisenbergError::Symbolic);
                };
                let mut witnesses = Vec::new();
                for x in &es {
                    for y in &fs {
                        for z in &zs {
                            let u = HPoint {
                                x: x.clone(),
                                y: y.clone(),
                                z: z.clone(),
                            };
                            if self.power(&u, n)? == target {
                                witnesses.push(u);
                            }
                        }
                    }
                }
                if witnesses.is_empty() {
                    Ok(SolutionSet::Empty)
                } else {
                    Ok(SolutionSet::Finite(witnesses))
                }
            }
        }
    }

    /// Every component almost torsion-free (the hypothesis of the symbolic
    /// root-finiteness rule).
    pub fn components_atf(&self) -> bool {
        [&self.e, &self.f, &self.a]
            .iter()
            .all(|c| c.descriptor().is_almost_torsion_free())
    }

    pub fn cardinality(&self) -> ExtendedNat {
        [&self.e, &self.f, &self.a]
            .iter()
            .fold(ExtendedNat::one(), |acc, c| {
                acc.mul(&c.descriptor().cardinality())
            })
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_finite()
    }
}

/// One-directional central-extension rule: if both the center and the
/// central quotient satisfy the weak cancellation law, so does the whole
/// group. No converse is available, so anything else stays undecided.
pub fn wcl_by_central_extension(center: Verdict, quotient: Verdict) -> Verdict {
    match (center, quotient) {
        (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
        _ => Verdict::Undecided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeroth_power_is_identity() {
        let h = HeisenbergSpec::over_integers();
        let u = HPoint::from_integers(4, -2, 7);
        assert_eq!(h.power(&u, 0).unwrap(), h.identity());
        assert_eq!(h.power_naive(&u, 0).unwrap(), h.identity());
    }

    #[test]
    fn square_and_cube_over_integers() {
        let h = HeisenbergSpec::over_integers();
        let u = HPoint::from_integers(1, 1, 0);
        assert_eq!(
            h.power_naive(&u, 2).unwrap(),
            HPoint::from_integers(2, 2, 1)
        );
        assert_eq!(h.power(&u, 2).unwrap(), HPoint::from_integers(2, 2, 1));
        assert_eq!(
            h.power_naive(&u, 3).unwrap(),
            HPoint::from_integers(3, 3, 3)
        );
        assert_eq!(h.power(&u, 3).unwrap(), HPoint::from_integers(3, 3, 3));
    }

    #[test]
    fn closed_form_matches_oracle_on_a_box() {
        let h = HeisenbergSpec::over_integers();
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    let u = HPoint::from_integers(a, b, c);
                    for n in -12..=12 {
                        assert_eq!(
                            h.power(&u, n).unwrap(),
                            h.power_naive(&u, n).unwrap(),
                            "disagree at ({a},{b},{c})^{n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle_exhaustively_mod_3() {
        let h = HeisenbergSpec::over_mod(3);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let u = HPoint::from_integers(a, b, c);
                    for n in 0..=9 {
                        assert_eq!(h.power(&u, n).unwrap(), h.power_naive(&u, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn rejected_quadratic_coefficient_disagrees_with_oracle() {
        // The alternative coefficient sum_{k=0..n} k = n(n+1)/2 gives
        // (2a, 2b, 2c + 3 w(a,b)) at n = 2; the oracle multiplies out to
        // coefficient 1. Any witness with w(a,b) != 0 separates them.
        let h = HeisenbergSpec::over_integers();
        let u = HPoint::from_integers(1, 1, 0);
        let n = 2i128;
        let rejected_count = n * (n + 1) / 2;
        let rejected = HPoint {
            x: h.e.scale(n, &u.x),
            y: h.f.scale(n, &u.y),
            z: h.a.add(
                &h.a.scale(n, &u.z),
                &h.a.scale(rejected_count, &h.omega_eval(&u.x, &u.y).unwrap()),
            ),
        };
        assert_ne!(rejected, h.power_naive(&u, 2).unwrap());
    }

    #[test]
    fn inverse_cancels() {
        let h = HeisenbergSpec::over_integers();
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let u = HPoint::from_integers(a, b, c);
                    let inv = h.inverse(&u).unwrap();
                    assert_eq!(h.multiply(&u, &inv).unwrap(), h.identity());
                    assert_eq!(h.multiply(&inv, &u).unwrap(), h.identity());
                }
            }
        }
    }

    #[test]
    fn commutators_are_central_and_class_is_two() {
        let h = HeisenbergSpec::over_integers();
        let range = -2..=2i128;
        for a in range.clone() {
            for b in range.clone() {
                for x in range.clone() {
                    for y in range.clone() {
                        let u = HPoint::from_integers(a, b, 1);
                        let v = HPoint::from_integers(x, y, -1);
                        let c = h.commutator(&u, &v).unwrap();
                        // [(a,b,*),(x,y,*)] = (0,0, ay - xb)
                        assert_eq!(c, HPoint::from_integers(0, 0, a * y - x * b));
                        // Central: commutes with everything sampled.
                        let w = HPoint::from_integers(1, 2, 3);
                        assert_eq!(h.multiply(&c, &w).unwrap(), h.multiply(&w, &c).unwrap());
                    }
                }
            }
        }
        // Not abelian: (1,0,0)(0,1,0) != (0,1,0)(1,0,0).
        let u = HPoint::from_integers(1, 0, 0);
        let v = HPoint::from_integers(0, 1, 0);
        assert_ne!(h.multiply(&u, &v).unwrap(), h.multiply(&v, &u).unwrap());
    }

    #[test]
    fn solve_power_over_integers() {
        let h = HeisenbergSpec::over_integers();
        let target = HPoint::from_integers(3, 3, 3);
        match h.solve_power(3, &target).unwrap() {
            SolutionSet::Finite(witnesses) => {
                assert_eq!(witnesses, vec![HPoint::from_integers(1, 1, 0)]);
                assert_eq!(h.power_naive(&witnesses[0], 3).unwrap(), target);
            }
            other => panic!("expected unique root, got {other:?}"),
        }
        assert!(h
            .solve_power(2, &HPoint::from_integers(1, 0, 0))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn solve_power_mod_3() {
        let h = HeisenbergSpec::over_mod(3);
        // Exponent 3: cubes of everything are trivial.
        let nontrivial = HPoint::from_integers(1, 0, 0);
        assert!(h.solve_power(3, &nontrivial).unwrap().is_empty());
        match h.solve_power(3, &h.identity()).unwrap() {
            SolutionSet::Finite(witnesses) => assert_eq!(witnesses.len(), 27),
            other => panic!("expected all 27 elements, got {other:?}"),
        }
    }

    #[test]
    fn solve_power_brute_force_oracle_over_small_box() {
        let h = HeisenbergSpec::over_integers();
        for n in 1..=4i64 {
            for a in -2..=2 {
                for b in -2..=2 {
                    for c in -2..=2 {
                        let u = HPoint::from_integers(a, b, c);
                        let target = h.power_naive(&u, n).unwrap();
                        match h.solve_power(n, &target).unwrap() {
                            SolutionSet::Finite(witnesses) => {
                                assert_eq!(witnesses.len(), 1);
                                assert_eq!(witnesses[0], u);
                            }
                            other => panic!("missing root of {target:?}: {other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_table_round_trip() {
        // Z/2 x Z/2 -> Z/2 multiplication as an explicit table.
        let table = vec![
            vec![vec![Ratio::from_integer(0)], vec![Ratio::from_integer(0)]],
            vec![vec![Ratio::from_integer(0)], vec![Ratio::from_integer(1)]],
        ];
        let h = HeisenbergSpec::with_pairing(vec![2], vec![2], vec![2], table).unwrap();
        assert!(h.nondegenerate);
        assert_eq!(h.cardinality(), ExtendedNat::finite(8u64));
        // Matches the ring construction pointwise.
        let ring = HeisenbergSpec::over_mod(2);
        for a in 0..2 {
            for b in 0..2 {
                for x in 0..2 {
                    for y in 0..2 {
                        let u = HPoint::from_integers(a, b, 0);
                        let v = HPoint::from_integers(x, y, 1);
                        assert_eq!(h.multiply(&u, &v).unwrap(), ring.multiply(&u, &v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn non_bilinear_table_is_rejected() {
        // w(x, y) = x OR y over Z/2 is not bilinear.
        let table = vec![
            vec![vec![Ratio::from_integer(0)], vec![Ratio::from_integer(1)]],
            vec![vec![Ratio::from_integer(1)], vec![Ratio::from_integer(1)]],
        ];
        assert!(HeisenbergSpec::with_pairing(vec![2], vec![2], vec![2], table).is_err());
    }

    #[test]
    fn central_extension_rule_is_one_directional() {
        use Verdict::*;
        assert_eq!(wcl_by_central_extension(Yes, Yes), Yes);
        assert_eq!(wcl_by_central_extension(No, Yes), Undecided);
        assert_eq!(wcl_by_central_extension(Yes, Undecided), Undecided);
        assert_eq!(wcl_by_central_extension(No, No), Undecided);
    }

    #[test]
    fn atf_components() {
        assert!(HeisenbergSpec::over_integers().components_atf());
        assert!(HeisenbergSpec::over_mod(3).components_atf());
        let bad = HeisenbergSpec::symbolic(
            AbelianDescriptor::cyclic(2).power(ExtendedNat::Infinite),
            AbelianDescriptor::integers(),
            AbelianDescriptor::integers(),
        );
        assert!(!bad.components_atf());
    }

    #[test]
    fn center_is_exactly_the_last_coordinate_axis() {
        // (0,0,c) commutes with everything; anything with a nonzero first or
        // second coordinate has a witness it fails to commute with.
        let h = HeisenbergSpec::over_integers();
        let box_range = -3i128..=3;
        for c in box_range.clone() {
            let central = HPoint::from_integers(0, 0, c);
            for x in box_range.clone() {
                for y in box_range.clone() {
                    let v = HPoint::from_integers(x, y, 1);
                    assert_eq!(
                        h.multiply(&central, &v).unwrap(),
                        h.multiply(&v, &central).unwrap()
                    );
                }
            }
        }
        for a in box_range.clone() {
            for b in box_range.clone() {
                if a == 0 && b == 0 {
                    continue;
                }
                let u = HPoint::from_integers(a, b, 0);
                // The commutator with (-b, a, 0) has twist a^2 + b^2 != 0.
                let v = HPoint::from_integers(-b, a, 0);
                assert_ne!(
                    h.multiply(&u, &v).unwrap(),
                    h.multiply(&v, &u).unwrap(),
                    "({a},{b},0) wrongly central"
                );
            }
        }
    }

    #[test]
    fn integrality_is_enforced_over_integers() {
        let h = HeisenbergSpec::over_integers();
        let half = HPoint {
            x: vec![Ratio::new(1, 2)],
            y: vec![Ratio::from_integer(0)],
            z: vec![Ratio::from_integer(0)],
        };
        assert!(h.multiply(&half, &h.identity()).is_err());
    }
}
