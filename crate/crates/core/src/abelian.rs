//! Symbolic abelian groups with exact socle and root arithmetic.
//!
//! A descriptor is a finite list of blocks, each a standard building group
//! raised to a finite or infinite multiplicity (direct-sum semantics, i.e.
//! finitely supported tuples, for infinite multiplicities):
//!
//! * `free`: the integers;
//! * `cyclic m`: integers mod `m`, `m >= 2`;
//! * `prufer p`: the p-primary component of the rationals mod integers;
//! * `rational`: the rationals;
//! * `qmodz`: the full rationals mod integers.
//!
//! Per-block n-socle sizes are closed forms: `free -> 1`, `cyclic m ->
//! gcd(n,m)`, `prufer p -> p^v_p(n)`, `rational -> 1`, `qmodz -> n`; the
//! total socle is the product over blocks of the block socle raised to the
//! block multiplicity.

use crate::group::gcd_u64;
use crate::nat::ExtendedNat;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AbelianError {
    #[error("cyclic modulus must be >= 2, got {0}")]
    BadModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("multiplicity must be >= 1")]
    ZeroMultiplicity,
    #[error("element has {got} coordinates, expected {expected}")]
    BadElement { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockKind {
    Free,
    Cyclic { m: u64 },
    Prufer { p: u64 },
    Rational,
    Qmodz,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    #[serde(flatten)]
    pub kind: BlockKind,
    #[serde(rename = "mult")]
    pub multiplicity: ExtendedNat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianDescriptor {
    pub blocks: Vec<Block>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl AbelianDescriptor {
    pub fn new(blocks: Vec<Block>) -> Result<Self, AbelianError> {
        for block in &blocks {
            match block.kind {
                BlockKind::Cyclic { m } if m < 2 => return Err(AbelianError::BadModulus(m)),
                BlockKind::Prufer { p } if !is_prime(p) => return Err(AbelianError::NotPrime(p)),
                _ => {}
            }
            if block.multiplicity == ExtendedNat::zero() {
                return Err(AbelianError::ZeroMultiplicity);
            }
        }
        Ok(AbelianDescriptor { blocks })
    }

    /// The trivial group (empty block list).
    pub fn trivial() -> Self {
        AbelianDescriptor { blocks: Vec::new() }
    }

    /// The integers.
    pub fn integers() -> Self {
        AbelianDescriptor {
            blocks: vec![Block {
                kind: BlockKind::Free,
                multiplicity: ExtendedNat::one(),
            }],
        }
    }

    /// The rationals mod integers.
    pub fn qmodz() -> Self {
        AbelianDescriptor {
            blocks: vec![Block {
                kind: BlockKind::Qmodz,
                multiplicity: ExtendedNat::one(),
            }],
        }
    }

    pub fn cyclic(m: u64) -> Self {
        AbelianDescriptor {
            blocks: vec![Block {
                kind: BlockKind::Cyclic { m },
                multiplicity: ExtendedNat::one(),
            }],
        }
    }

    /// One block per invariant factor (factors equal to 1 are dropped).
    pub fn from_invariant_factors(factors: &[u64]) -> Self {
        AbelianDescriptor {
            blocks: factors
                .iter()
                .filter(|&&d| d > 1)
                .map(|&d| Block {
                    kind: BlockKind::Cyclic { m: d },
                    multiplicity: ExtendedNat::one(),
                })
                .collect(),
        }
    }

    /// The same group with every multiplicity scaled (used for powers like
    /// `G^omega`).
    pub fn power(&self, multiplicity: ExtendedNat) -> Self {
        AbelianDescriptor {
            blocks: self
                .blocks
                .iter()
                .map(|b| Block {
                    kind: b.kind.clone(),
                    multiplicity: b.multiplicity.mul(&multiplicity),
                })
                .collect(),
        }
    }

    /// Direct sum.
    pub fn sum(&self, other: &AbelianDescriptor) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        AbelianDescriptor { blocks }
    }

    /// `|G[n]|` where `G[n] = {g : ng = 0}`, exact.
    pub fn socle_cardinality(&self, n: u64) -> ExtendedNat {
        assert!(n >= 1, "socle index must be positive");
        let mut total = ExtendedNat::one();
        for block in &self.blocks {
            let per_block: BigUint = match block.kind {
                BlockKind::Free | BlockKind::Rational => BigUint::from(1u64),
                BlockKind::Cyclic { m } => BigUint::from(gcd_u64(n, m)),
                BlockKind::Prufer { p } => {
                    let mut size = BigUint::from(1u64);
                    let mut rest = n;
                    while rest.is_multiple_of(p) {
                        size *= p;
                        rest /= p;
                    }
                    size
                }
                BlockKind::Qmodz => BigUint::from(n),
            };
            total = total.mul(&ExtendedNat::Finite(per_block).pow(&block.multiplicity));
        }
        total
    }

    /// Least `m` with `mG = 0`, or infinite.
    pub fn exponent(&self) -> ExtendedNat {
        let mut lcm = 1u64;
        for block in &self.blocks {
            match block.kind {
                BlockKind::Cyclic { m } => lcm = lcm / gcd_u64(lcm, m) * m,
                BlockKind::Free
                | BlockKind::Prufer { .. }
                | BlockKind::Rational
                | BlockKind::Qmodz => return ExtendedNat::Infinite,
            }
        }
        ExtendedNat::finite(lcm)
    }

    /// The finitely many primes at which the socle could be infinite: primes
    /// dividing a cyclic modulus, primes labelling a Prufer block, and a
    /// representative prime for any qmodz block (all primes behave alike
    /// there).
    pub fn relevant_primes(&self) -> Vec<u64> {
        let mut primes = Vec::new();
        let mut push = |p: u64| {
            if !primes.contains(&p) {
                primes.push(p);
            }
        };
        for block in &self.blocks {
            match block.kind {
                BlockKind::Cyclic { m } => {
                    let mut rest = m;
                    let mut d = 2;
                    while d * d <= rest {
                        if rest % d == 0 {
                            push(d);
                            while rest % d == 0 {
                                rest /= d;
                            }
                        }
                        d += 1;
                    }
                    if rest > 1 {
                        push(rest);
                    }
                }
                BlockKind::Prufer { p } => push(p),
                BlockKind::Qmodz => push(2),
                BlockKind::Free | BlockKind::Rational => {}
            }
        }
        primes.sort_unstable();
        primes
    }

    /// Almost torsion-free: every n-socle is finite; for abelian groups it
    /// is enough to check the relevant primes.
    pub fn is_almost_torsion_free(&self) -> bool {
        self.relevant_primes()
            .iter()
            .all(|&p| self.socle_cardinality(p).is_finite())
    }

    pub fn is_prime_exponent(&self) -> bool {
        matches!(self.exponent().to_u64(), Some(p) if is_prime(p))
    }

    /// Total cardinality: finite only when every block is cyclic with finite
    /// multiplicity.
    pub fn cardinality(&self) -> ExtendedNat {
        let mut total = ExtendedNat::one();
        for block in &self.blocks {
            let base = match block.kind {
                BlockKind::Cyclic { m } => ExtendedNat::finite(m),
                _ => ExtendedNat::Infinite,
            };
            total = total.mul(&base.pow(&block.multiplicity));
        }
        total
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_finite()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for AbelianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0");
        }
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match block.kind {
                BlockKind::Free => write!(f, "Z")?,
                BlockKind::Cyclic { m } => write!(f, "Z/{m}")?,
                BlockKind::Prufer { p } => write!(f, "Z({p}^inf)")?,
                BlockKind::Rational => write!(f, "Q")?,
                BlockKind::Qmodz => write!(f, "Q/Z")?,
            }
            if !block.multiplicity.is_one() {
                write!(f, "^{}", block.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// A solution set of an equation, with witnesses materialized whenever the
/// set is finite and concretely representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet<T> {
    Empty,
    Finite(Vec<T>),
    CosetOfSocle {
        representative: T,
        socle_cardinality: ExtendedNat,
    },
}

impl<T> SolutionSet<T> {
    pub fn count(&self) -> ExtendedNat {
        match self {
            SolutionSet::Empty => ExtendedNat::zero(),
            SolutionSet::Finite(witnesses) => ExtendedNat::from(witnesses.len()),
            SolutionSet::CosetOfSocle {
                socle_cardinality, ..
            } => socle_cardinality.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }
}

/// A concrete finitely generated abelian group `Z/d1 + ... + Z/dk + Z^r`
/// given by invariant factors and free rank; elements are coordinate
/// vectors (torsion coordinates first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFactorGroup {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl InvariantFactorGroup {
    pub fn new(torsion: Vec<u64>, free_rank: usize) -> Result<Self, AbelianError> {
        if let Some(&bad) = torsion.iter().find(|&&d| d < 2) {
            return Err(AbelianError::BadModulus(bad));
        }
        Ok(InvariantFactorGroup { torsion, free_rank })
    }

    pub fn coords(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Order of the torsion part; the whole group when the free rank is 0.
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    pub fn descriptor(&self) -> AbelianDescriptor {
        let mut d = AbelianDescriptor::from_invariant_factors(&self.torsion);
        if self.free_rank > 0 {
            d.blocks.push(Block {
                kind: BlockKind::Free,
                multiplicity: ExtendedNat::from(self.free_rank),
            });
        }
        d
    }

    fn reduce(&self, element: &[i64]) -> Result<Vec<i64>, AbelianError> {
        if element.len() != self.coords() {
            return Err(AbelianError::BadElement {
                got: element.len(),
                expected: self.coords(),
            });
        }
        let mut out = element.to_vec();
        for (slot, &d) in self.torsion.iter().enumerate() {
            out[slot] = out[slot].rem_euclid(d as i64);
        }
        Ok(out)
    }

    /// Solves `n*x = a` componentwise. The solution set, when nonempty, is a
    /// coset of the n-socle; for `n != 0` it is finite with exactly
    /// `prod gcd(n, d_i)` witnesses, all materialized.
    pub fn solve_linear(&self, n: i64, a: &[i64]) -> Result<SolutionSet<Vec<i64>>, AbelianError> {
        let a = self.reduce(a)?;
        if n == 0 {
            if a.iter().any(|&v| v != 0) {
                return Ok(SolutionSet::Empty);
            }
            // 0*x = 0: every element solves it.
            let socle = if self.free_rank > 0 {
                ExtendedNat::Infinite
            } else {
                ExtendedNat::finite(self.torsion_order())
            };
            return Ok(SolutionSet::CosetOfSocle {
                representative: vec![0; self.coords()],
                socle_cardinality: socle,
            });
        }
        let (n, a): (i64, Vec<i64>) = if n < 0 {
            (-n, a.iter().map(|&v| -v).collect::<Vec<i64>>())
        } else {
            (n, a)
        };
        let a = self.reduce(&a)?;

        // Per-coordinate solution lists.
        let mut per_coord: Vec<Vec<i64>> = Vec::with_capacity(self.coords());
        for (slot, &d) in self.torsion.iter().enumerate() {
            let d = d as i64;
            let g = gcd_u64(n as u64, d as u64) as i64;
            if a[slot] % g != 0 {
                return Ok(SolutionSet::Empty);
            }
            // n x = a (mod d) has the g solutions x0 + k d/g.
            let dg = d / g;
            let ng = (n / g).rem_euclid(dg);
            let ag = (a[slot] / g).rem_euclid(dg);
            let x0 = if dg == 1 {
                0
            } else {
                (mod_inverse(ng, dg) * ag).rem_euclid(dg)
            };
            per_coord.push((0..g).map(|k| x0 + k * dg).collect());
        }
        for &free_coord in &a[self.torsion.len()..] {
            if free_coord % n != 0 {
                return Ok(SolutionSet::Empty);
            }
            per_coord.push(vec![free_coord / n]);
        }

        let mut witnesses: Vec<Vec<i64>> = vec![Vec::new()];
        for options in &per_coord {
            let mut grown = Vec::with_capacity(witnesses.len() * options.len());
            for w in &witnesses {
                for &v in options {
                    let mut next = w.clone();
                    next.push(v);
                    grown.push(next);
                }
            }
            witnesses = grown;
        }
        Ok(SolutionSet::Finite(witnesses))
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    // Extended Euclid; gcd(a, m) = 1 is guaranteed by the caller.
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m)
}
