//! One-variable words with coefficients in a group, their evaluation maps,
//! and the solution sets of the equations `w(x) = e`.
//!
//! A word is an element of the free product of the coefficient group with an
//! infinite cyclic group generated by the variable `x`. The normal form kept
//! here is
//!
//! ```text
//! head . x^m1 . c1 . x^m2 . c2 ... x^mk . ck
//! ```
//!
//! with every exponent nonzero and every interior coefficient nontrivial, so
//! that no `x^e x^-e` cancellation remains and trivial coefficients between
//! like-sign occurrences merge into one exponent run. The empty tail is a
//! constant word. Evaluation is invariant under this normalization because
//! substitution is a homomorphism out of the free product.

use crate::bitset::SubSet;
use crate::group::{Element, Group, GroupError};
use std::fmt;

/// A normalized word over a fixed coefficient group. Immutable; all
/// operations are pure.
#[derive(Clone)]
pub struct Word {
    group: Group,
    head: usize,
    /// `(exponent, following coefficient index)` pairs.
    tail: Vec<(i64, usize)>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.group.id() == other.group.id() && self.head == other.head && self.tail == other.tail
    }
}

impl Eq for Word {}

impl Word {
    /// The constant word `g`.
    pub fn constant(group: &Group, g: Element) -> Result<Word, GroupError> {
        if !group.contains(g) {
            return Err(GroupError::GroupMismatch);
        }
        Ok(Word {
            group: group.clone(),
            head: g.index(),
            tail: Vec::new(),
        })
    }

    /// The monomial `g x^n`.
    pub fn monomial(group: &Group, g: Element, n: i64) -> Result<Word, GroupError> {
        let mut w = Word::constant(group, g)?;
        w.push_x(n);
        Ok(w)
    }

    /// The bare variable `x`.
    pub fn variable(group: &Group) -> Word {
        Word::monomial(group, group.identity(), 1).expect("identity belongs to its group")
    }

    /// The commutator word `g x g^-1 x^-1`, whose zero set is the
    /// centralizer of `g`.
    pub fn commutator(group: &Group, g: Element) -> Result<Word, GroupError> {
        let mut w = Word::constant(group, g)?;
        w.push_x(1);
        w.push_coefficient(group.inverse(g)?.index());
        w.push_x(-1);
        Ok(w)
    }

    /// The conjugation word `x g x^-1`.
    pub fn conjugation(group: &Group, g: Element) -> Result<Word, GroupError> {
        if !group.contains(g) {
            return Err(GroupError::GroupMismatch);
        }
        let mut w = Word::constant(group, group.identity())?;
        w.push_x(1);
        w.push_coefficient(g.index());
        w.push_x(-1);
        Ok(w)
    }

    /// Builds (and normalizes) the word `g1 x^m1 g2 x^m2 ... gn x^mn` from
    /// raw alternating terms.
    pub fn from_terms(group: &Group, terms: &[(Element, i64)]) -> Result<Word, GroupError> {
        let mut w = Word::constant(group, group.identity())?;
        for &(g, m) in terms {
            if !group.contains(g) {
                return Err(GroupError::GroupMismatch);
            }
            w.push_coefficient(g.index());
            w.push_x(m);
        }
        Ok(w)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// True when no variable occurrence remains.
    pub fn is_constant(&self) -> bool {
        self.tail.is_empty()
    }

    /// For words of the shape `g x^n`, the pair `(g, n)`.
    pub fn as_monomial(&self) -> Option<(Element, i64)> {
        match self.tail.as_slice() {
            [] => Some((self.group.element(self.head).unwrap(), 0)),
            [(n, c)] if *c == self.group.identity_index() => {
                Some((self.group.element(self.head).unwrap(), *n))
            }
            _ => None,
        }
    }

    /// Number of variable occurrences counted with multiplicity.
    pub fn degree(&self) -> u64 {
        self.tail.iter().map(|(m, _)| m.unsigned_abs()).sum()
    }

    fn push_coefficient(&mut self, g: usize) {
        match self.tail.last_mut() {
            Some((_, c)) => *c = self.group.mul_index(*c, g),
            None => self.head = self.group.mul_index(self.head, g),
        }
    }

    fn push_x(&mut self, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some((m, c)) = self.tail.last_mut() {
            if *c == self.group.identity_index() {
                *m += exp;
                if *m == 0 {
                    self.tail.pop();
                }
                return;
            }
        }
        self.tail.push((exp, self.group.identity_index()));
    }

    /// Word concatenation (product in the free product), renormalized.
    pub fn concat(&self, other: &Word) -> Result<Word, GroupError> {
        if self.group.id() != other.group.id() {
            return Err(GroupError::GroupMismatch);
        }
        let mut w = self.clone();
        w.push_coefficient(other.head);
        for &(m, c) in &other.tail {
            w.push_x(m);
            w.push_coefficient(c);
        }
        Ok(w)
    }

    /// Left-multiplies by the constant `t^-1`; `fiber(w, t)` is the zero set
    /// of this word.
    pub fn left_divide_by(&self, t: Element) -> Result<Word, GroupError> {
        if !self.group.contains(t) {
            return Err(GroupError::GroupMismatch);
        }
        let mut w = Word::constant(&self.group, self.group.inverse(t)?)?;
        w = w.concat(self)?;
        Ok(w)
    }

    /// Substitutes `a` for the variable and multiplies out.
    pub fn evaluate(&self, a: Element) -> Result<Element, GroupError> {
        if !self.group.contains(a) {
            return Err(GroupError::GroupMismatch);
        }
        let mut acc = self.head;
        for &(m, c) in &self.tail {
            let power = self.group.power(a, m)?;
            acc = self.group.mul_index(acc, power.index());
            acc = self.group.mul_index(acc, c);
        }
        self.group.element(acc)
    }

    /// The solution set `{a : w(a) = e}` by exhaustive evaluation.
    pub fn elementary_set(&self) -> SubSet {
        let mut out = SubSet::empty(self.group.order());
        let e = self.group.identity();
        for a in self.group.elements() {
            if self.evaluate(a).unwrap() == e {
                out.insert(a.index());
            }
        }
        out
    }

    /// The fiber `{a : w(a) = t}`, computed as the zero set of `t^-1 w`.
    pub fn fiber(&self, t: Element) -> Result<SubSet, GroupError> {
        Ok(self.left_divide_by(t)?.elementary_set())
    }

    /// Transports the word along an index map into another group. Used to
    /// realize words over a subgroup as words over the ambient group.
    pub fn map_coefficients<F>(&self, target: &Group, f: F) -> Result<Word, GroupError>
    where
        F: Fn(Element) -> Result<Element, GroupError>,
    {
        let mut w = Word::constant(target, f(self.group.element(self.head)?)?)?;
        for &(m, c) in &self.tail {
            w.push_x(m);
            w.push_coefficient(f(self.group.element(c)?)?.index());
        }
        Ok(w)
    }

    /// Parses the CLI literal syntax: whitespace separated tokens, each
    /// either `gK` (element with index `K`), `e` (identity), `x`, or `x^N`
    /// with `N` a possibly negative integer. Example: `g3 x g5 x^-1`.
    pub fn parse(group: &Group, text: &str) -> Result<Word, GroupError> {
        let mut w = Word::constant(group, group.identity())?;
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            if token == "x" {
                w.push_x(1);
            } else if let Some(exp) = token.strip_prefix("x^") {
                let exp: i64 = exp
                    .parse()
                    .map_err(|_| GroupError::BadDescriptor(format!("bad exponent in `{token}`")))?;
                w.push_x(exp);
            } else if let Some(index) = token.strip_prefix('g') {
                let index: usize = index
                    .parse()
                    .map_err(|_| GroupError::BadDescriptor(format!("bad coefficient `{token}`")))?;
                let g = group.element(index)?;
                w.push_coefficient(g.index());
            } else {
                return Err(GroupError::BadDescriptor(format!(
                    "unrecognized token `{token}`"
                )));
            }
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if self.head != self.group.identity_index() || self.tail.is_empty() {
            pieces.push(format!("g{}", self.head));
        }
        for &(m, c) in &self.tail {
            if m == 1 {
                pieces.push("x".into());
            } else {
                pieces.push(format!("x^{m}"));
            }
            if c != self.group.identity_index() {
                pieces.push(format!("g{c}"));
            }
        }
        write!(f, "{}", pieces.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
