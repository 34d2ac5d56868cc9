//! Reduced words in a free group of finite rank: multiplication, primitive
//! roots, n-th roots and centralizer generators.
//!
//! A word is a reduced letter sequence; the primitive root of a nonempty
//! word `w` is the unique `u` that is not a proper power with `w = u^k`,
//! found by cyclically reducing `w = s t s^-1` and locating the smallest
//! period of the core `t` among the divisors of its length. Centralizers of
//! nonidentity elements are infinite cyclic, generated by the primitive
//! root.

use crate::abelian::SolutionSet;
use std::fmt;
use thiserror::Error;

/// Default cap on the rank accepted from user input.
pub const DEFAULT_RANK_CAP: u32 = 4;

#[derive(Debug, Error)]
pub enum FreeGroupError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("rank must be between 1 and 26, got {0}")]
    BadRank(u32),
    #[error("the identity has no primitive root")]
    IdentityInput,
    #[error("unrecognized letter `{0}`")]
    BadLetter(char),
    #[error("root index must be >= 1")]
    BadRootIndex,
}

/// A reduced word; `letters` holds `(generator index, sign)` pairs with no
/// adjacent cancelling pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: u32,
    letters: Vec<(u32, i8)>,
}

impl FreeWord {
    pub fn identity(rank: u32) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// Builds a word from raw letters, reducing adjacent inverse pairs.
    pub fn from_letters(rank: u32, letters: &[(u32, i8)]) -> Result<FreeWord, FreeGroupError> {
        if rank == 0 || rank > 26 {
            return Err(FreeGroupError::BadRank(rank));
        }
        let mut reduced: Vec<(u32, i8)> = Vec::with_capacity(letters.len());
        for &(gen, sign) in letters {
            debug_assert!(sign == 1 || sign == -1);
            if gen >= rank {
                return Err(FreeGroupError::BadRank(rank));
            }
            match reduced.last() {
                Some(&(g, s)) if g == gen && s == -sign => {
                    reduced.pop();
                }
                _ => reduced.push((gen, sign)),
            }
        }
        Ok(FreeWord {
            rank,
            letters: reduced,
        })
    }

    /// Parses letters `a..z` with capitals for inverses; whitespace is
    /// ignored, so `"a b A c"` and `"abAc"` agree.
    pub fn parse(rank: u32, text: &str) -> Result<FreeWord, FreeGroupError> {
        let mut letters = Vec::new();
        for ch in text.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if ch.is_ascii_lowercase() {
                letters.push((ch as u32 - 'a' as u32, 1i8));
            } else if ch.is_ascii_uppercase() {
                letters.push((ch as u32 - 'A' as u32, -1i8));
            } else {
                return Err(FreeGroupError::BadLetter(ch));
            }
        }
        FreeWord::from_letters(rank, &letters)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(u32, i8)] {
        &self.letters
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        for &(gen, sign) in &other.letters {
            match letters.last() {
                Some(&(g, s)) if g == gen && s == -sign => {
                    letters.pop();
                }
                _ => letters.push((gen, sign)),
            }
        }
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    pub fn power(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base).expect("same rank");
        }
        acc
    }

    pub fn commutes_with(&self, other: &FreeWord) -> Result<bool, FreeGroupError> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }

    /// Splits `w = s . core . s^-1` with the core cyclically reduced.
    pub fn cyclic_reduction(&self) -> (FreeWord, FreeWord) {
        let mut core = self.letters.clone();
        let mut conjugator = Vec::new();
        while core.len() >= 2 {
            let (first, last) = (core[0], core[core.len() - 1]);
            if first.0 == last.0 && first.1 == -last.1 {
                conjugator.push(first);
                core.remove(0);
                core.pop();
            } else {
                break;
            }
        }
        (
            FreeWord {
                rank: self.rank,
                letters: conjugator,
            },
            FreeWord {
                rank: self.rank,
                letters: core,
            },
        )
    }

    /// The maximal-root decomposition `w = u^k` with `k` largest (so `u` is
    /// not a proper power). Errors on the identity.
    pub fn primitive_root(&self) -> Result<(FreeWord, u64), FreeGroupError> {
        if self.is_empty() {
            return Err(FreeGroupError::IdentityInput);
        }
        let (conjugator, core) = self.cyclic_reduction();
        let n = core.letters.len();
        // Smallest divisor-length period of the core.
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let candidate = &core.letters[..d];
            if core.letters.chunks(d).all(|chunk| chunk == candidate) {
                let seed = FreeWord {
                    rank: self.rank,
                    letters: candidate.to_vec(),
                };
                let root = conjugator
                    .multiply(&seed)?
                    .multiply(&conjugator.inverse())?;
                return Ok((root, (n / d) as u64));
            }
        }
        unreachable!("period d = n always matches");
    }

    /// Unique n-th root when it exists: `w = u^k` has an n-th root exactly
    /// when `n | k`, namely `u^(k/n)`; the identity only has itself.
    pub fn nth_root(&self, n: u64) -> Result<SolutionSet<FreeWord>, FreeGroupError> {
        if n == 0 {
            return Err(FreeGroupError::BadRootIndex);
        }
        if self.is_empty() {
            // Torsion-freeness: x^n = e forces x = e.
            return Ok(SolutionSet::Finite(vec![FreeWord::identity(self.rank)]));
        }
        let (root, k) = self.primitive_root()?;
        if k % n != 0 {
            return Ok(SolutionSet::Empty);
        }
        Ok(SolutionSet::Finite(vec![root.power((k / n) as i64)]))
    }

    /// Generator of the centralizer: `C(w) = <primitive root of w>`.
    pub fn centralizer_generator(&self) -> Result<FreeWord, FreeGroupError> {
        Ok(self.primitive_root()?.0)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for &(gen, sign) in &self.letters {
            let ch = (b'a' + gen as u8) as char;
            if sign > 0 {
                write!(f, "{ch}")?;
            } else {
                write!(f, "{}", ch.to_ascii_uppercase())?;
            }
        }
        Ok(())
    }
}

/// All reduced words of length up to `max_len` over the given rank,
/// by breadth-first extension. Identity included.
pub fn enumerate_reduced_words(rank: u32, max_len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity(rank)];
    let mut layer: Vec<Vec<(u32, i8)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_layer = Vec::new();
        for word in &layer {
            for gen in 0..rank {
                for sign in [1i8, -1] {
                    if let Some(&(g, s)) = word.last() {
                        if g == gen && s == -sign {
                            continue;
                        }
                    }
                    let mut next = word.clone();
                    next.push((gen, sign));
                    next_layer.push(next);
                }
            }
        }
        for letters in &next_layer {
            out.push(FreeWord {
                rank,
                letters: letters.clone(),
            });
        }
        layer = next_layer;
    }
    out
}
