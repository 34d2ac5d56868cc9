//! Rule-based verdict engine for cofiniteness of group topologies.
//!
//! For a group descriptor the engine decides, with three-valued verdicts,
//! whether the monomial topology, the centralizer-plus-cofinite topology,
//! and the full one-variable-equation (Zariski-type) topology coincide with
//! the cofinite topology. Every verdict carries the rule that produced it,
//! stated as a self-contained mathematical fact, so reports are auditable.
//!
//! Soundness over completeness: infinite non-abelian groups that pass every
//! known necessary condition stay `undecided`; whether any such group has
//! cofinite equation topology is open, and the engine refuses to guess.
//!
//! Cofiniteness of any of these topologies reflects to countable subgroups
//! (an infinite proper solution set already lives inside a countable
//! subgroup generated by countably many solutions, the word coefficients
//! and one outside witness). None of the symbolic families handled here
//! needs that reduction, so it is recorded but has no executable form.

use crate::abelian::{is_prime, AbelianDescriptor};
use crate::group::{gcd_u64, Group};
use crate::heisenberg::HeisenbergSpec;
use crate::nat::ExtendedNat;
use crate::topology::{
    centralizer_subbasis, cprime_subbasis, monomial_subbasis, zariski_subbasis, ClosedSetFamily,
    TopologyLabel,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error("bad descriptor: {0}")]
    BadDescriptor(String),
    #[error("oracle verification failed: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "yes"),
            Verdict::No => write!(f, "no"),
            Verdict::Undecided => write!(f, "undecided"),
        }
    }
}

/// A verdict together with the rule that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct Justified {
    pub verdict: Verdict,
    pub rule: &'static str,
    pub statement: &'static str,
}

impl Justified {
    fn new(verdict: Verdict, rule: &'static str, statement: &'static str) -> Justified {
        Justified {
            verdict,
            rule,
            statement,
        }
    }

    fn undecided(rule: &'static str) -> Justified {
        Justified::new(
            Verdict::Undecided,
            rule,
            "no applicable rule decides this property",
        )
    }
}

/// The properties a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    IsAbelian,
    IsFinite,
    Exponent,
    Atf,
    Wcl,
    PrimeExponent,
    MonCofinite,
    CenCofinite,
    ZarCofinite,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::IsAbelian,
        Property::IsFinite,
        Property::Exponent,
        Property::Atf,
        Property::Wcl,
        Property::PrimeExponent,
        Property::MonCofinite,
        Property::CenCofinite,
        Property::ZarCofinite,
    ];

    pub fn json_key(&self) -> &'static str {
        match self {
            Property::IsAbelian => "is_abelian",
            Property::IsFinite => "is_finite",
            Property::Exponent => "exponent",
            Property::Atf => "atf",
            Property::Wcl => "wcl",
            Property::PrimeExponent => "prime_exponent",
            Property::MonCofinite => "mon_cofinite",
            Property::CenCofinite => "cen_cofinite",
            Property::ZarCofinite => "zar_cofinite",
        }
    }
}

/// Classification report: one justified verdict per property.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub descriptor: String,
    pub properties: BTreeMap<Property, Justified>,
}

impl ClassReport {
    pub fn verdict(&self, property: Property) -> Verdict {
        self.properties[&property].verdict
    }

    pub fn justification(&self, property: Property) -> &Justified {
        &self.properties[&property]
    }

    /// JSON rendering with alphabetically ordered keys.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Rendered<'a> {
            descriptor: &'a str,
            properties: BTreeMap<&'static str, &'a Justified>,
        }
        let rendered = Rendered {
            descriptor: &self.descriptor,
            properties: self
                .properties
                .iter()
                .map(|(p, j)| (p.json_key(), j))
                .collect(),
        };
        serde_json::to_string_pretty(&rendered).expect("serializable")
    }
}

/// Declared properties of the kernel in a symbolic quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct KernelSpec {
    pub finite: bool,
    pub central: bool,
}

/// The groups the engine can talk about.
#[derive(Debug, Clone)]
pub enum GroupDescriptor {
    /// A concrete finite group.
    Finite(Group),
    /// A symbolic abelian group.
    Abelian(AbelianDescriptor),
    /// A generalized Heisenberg group.
    Heisenberg(HeisenbergSpec),
    /// A free group of the given rank (>= 2 for the non-abelian facts).
    Free { rank: u32 },
    /// A finite direct product.
    Product(Vec<GroupDescriptor>),
    /// A quotient of a symbolic group by a kernel with declared properties.
    Quotient {
        base: Box<GroupDescriptor>,
        kernel: KernelSpec,
    },
    /// A curated knowledge-base entry.
    Known(String),
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Finite(g) => write!(f, "{g:?}"),
            GroupDescriptor::Abelian(d) => write!(f, "{d}"),
            GroupDescriptor::Heisenberg(h) => {
                use crate::heisenberg::ComponentGroup;
                match (&h.e, &h.f, &h.a) {
                    (
                        ComponentGroup::Integers,
                        ComponentGroup::Integers,
                        ComponentGroup::Integers,
                    ) => {
                        write!(f, "H(Z)")
                    }
                    (
                        ComponentGroup::Rationals,
                        ComponentGroup::Rationals,
                        ComponentGroup::Rationals,
                    ) => {
                        write!(f, "H(Q)")
                    }
                    (ComponentGroup::ModularInt(m), _, _) => write!(f, "H(Z/{m})"),
                    _ => write!(f, "H(E,F,A)"),
                }
            }
            GroupDescriptor::Free { rank } => write!(f, "F{rank}"),
            GroupDescriptor::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            GroupDescriptor::Quotient { base, kernel } => {
                write!(
                    f,
                    "({base})/N[{}{}]",
                    if kernel.finite { "finite" } else { "?" },
                    if kernel.central { ",central" } else { "" }
                )
            }
            GroupDescriptor::Known(name) => write!(f, "{name}"),
        }
    }
}

/// A knowledge-base entry: verdicts asserted as recorded facts, not
/// computed.
#[derive(Debug, Clone)]
pub struct KnownGroupEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub is_finite: Verdict,
    pub is_abelian: Verdict,
    pub bounded_exponent: Verdict,
    pub prime_exponent: Verdict,
    pub atf: Verdict,
    pub wcl: Verdict,
    pub mon_cofinite: Verdict,
    pub cen_cofinite: Verdict,
    pub zar_cofinite: Verdict,
    pub has_infinite_abelian_subgroup: bool,
    pub statement: &'static str,
}

/// The curated knowledge base.
pub fn knowledge_base() -> &'static [KnownGroupEntry] {
    const ENTRIES: [KnownGroupEntry; 1] = [KnownGroupEntry {
        name: "tarski_monster",
        summary: "infinite group all of whose proper nontrivial subgroups have order p",
        is_finite: Verdict::No,
        is_abelian: Verdict::No,
        bounded_exponent: Verdict::Yes,
        prime_exponent: Verdict::Yes,
        atf: Verdict::No,
        wcl: Verdict::No,
        mon_cofinite: Verdict::Yes,
        cen_cofinite: Verdict::Yes,
        zar_cofinite: Verdict::No,
        has_infinite_abelian_subgroup: false,
        statement: "a Tarski monster has prime exponent, so its monomial topology is cofinite; \
                    all proper centralizers are finite, so the centralizer topology joined with \
                    cofinite is cofinite; the known constructions are non-topologizable countable \
                    groups, whose equation topology is discrete and hence not cofinite",
    }];
    &ENTRIES
}

pub fn known_entry(name: &str) -> Result<&'static KnownGroupEntry, ClassifyError> {
    knowledge_base()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| ClassifyError::UnknownGroup(name.to_string()))
}

/// What is known about the exponent of a descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
enum ExponentInfo {
    Infinite,
    Finite(u64),
    /// Bounded by some prime at least 5, exact value not recorded.
    SomePrimeAtLeast5,
    /// Bounded, provably not a prime.
    BoundedNotPrime,
    /// Bounded, primality not determined.
    BoundedUnknown,
    Unknown,
}

fn exponent_info(d: &GroupDescriptor) -> ExponentInfo {
    match d {
        GroupDescriptor::Finite(g) => ExponentInfo::Finite(g.exponent()),
        GroupDescriptor::Abelian(a) => match a.exponent() {
            ExtendedNat::Infinite => ExponentInfo::Infinite,
            finite => ExponentInfo::Finite(finite.to_u64().expect("abelian exponents fit u64")),
        },
        GroupDescriptor::Heisenberg(h) => heisenberg_exponent(h),
        GroupDescriptor::Free { rank } => {
            if *rank == 0 {
                ExponentInfo::Finite(1)
            } else {
                ExponentInfo::Infinite
            }
        }
        GroupDescriptor::Product(factors) => factors
            .iter()
            .map(exponent_info)
            .fold(ExponentInfo::Finite(1), combine_exponents),
        GroupDescriptor::Quotient { base, .. } => {
            // The quotient exponent divides the base exponent; an infinite
            // quotient of a prime-exponent group keeps that prime exponent
            // (exponent 1 only happens for the trivial group).
            let quotient_infinite = is_finite(d) == Verdict::No;
            match exponent_info(base) {
                ExponentInfo::Finite(1) => ExponentInfo::Finite(1),
                ExponentInfo::Finite(p) if is_prime(p) && quotient_infinite => {
                    ExponentInfo::Finite(p)
                }
                ExponentInfo::SomePrimeAtLeast5 if quotient_infinite => {
                    ExponentInfo::SomePrimeAtLeast5
                }
                ExponentInfo::Finite(_)
                | ExponentInfo::SomePrimeAtLeast5
                | ExponentInfo::BoundedNotPrime
                | ExponentInfo::BoundedUnknown => ExponentInfo::BoundedUnknown,
                ExponentInfo::Infinite | ExponentInfo::Unknown => ExponentInfo::Unknown,
            }
        }
        GroupDescriptor::Known(name) => match known_entry(name) {
            Ok(entry) if entry.name == "tarski_monster" => ExponentInfo::SomePrimeAtLeast5,
            _ => ExponentInfo::Unknown,
        },
    }
}

fn heisenberg_exponent(h: &HeisenbergSpec) -> ExponentInfo {
    use crate::heisenberg::ComponentGroup;
    if h.is_symbolic() {
        return ExponentInfo::Unknown;
    }
    match (&h.e, &h.f, &h.a) {
        (ComponentGroup::Integers, _, _) | (ComponentGroup::Rationals, _, _) => {
            ExponentInfo::Infinite
        }
        (ComponentGroup::ModularInt(m), _, _) => {
            // Closed form over Z/m with the multiplication pairing:
            // u^m = (0, 0, T(m) w(a,b)) and T(m) = m(m-1)/2 vanishes mod m
            // exactly when m is odd, so the exponent is m for odd m and 2m
            // for even m (the twist survives one more doubling).
            let m = *m;
            if m <= 1 {
                ExponentInfo::Finite(1)
            } else if m % 2 == 1 {
                ExponentInfo::Finite(m)
            } else {
                ExponentInfo::Finite(2 * m)
            }
        }
        _ => {
            // Finite components: take the lcm of element orders directly.
            let identity = h.identity();
            let mut exponent = 1u64;
            if let (Some(es), Some(fs), Some(zs)) = (
                component_elements(&h.e),
                component_elements(&h.f),
                component_elements(&h.a),
            ) {
                for x in &es {
                    for y in &fs {
                        for z in &zs {
                            let u = crate::heisenberg::HPoint {
                                x: x.clone(),
                                y: y.clone(),
                                z: z.clone(),
                            };
                            let mut power = u.clone();
                            let mut order = 1u64;
                            while power != identity {
                                power =
                                    h.multiply(&power, &u).expect("finite component arithmetic");
                                order += 1;
                            }
                            exponent = exponent / gcd_u64(exponent, order) * order;
                        }
                    }
                }
                ExponentInfo::Finite(exponent)
            } else {
                ExponentInfo::Unknown
            }
        }
    }
}

fn component_elements(
    c: &crate::heisenberg::ComponentGroup,
) -> Option<Vec<crate::heisenberg::Coord>> {
    use crate::heisenberg::ComponentGroup;
    match c {
        ComponentGroup::ModularInt(m) => Some(
            (0..*m as i128)
                .map(|v| vec![num_rational::Ratio::from_integer(v)])
                .collect(),
        ),
        ComponentGroup::Tuples(factors) => {
            let mut out: Vec<crate::heisenberg::Coord> = vec![Vec::new()];
            for &d in factors {
                let mut grown = Vec::new();
                for prefix in &out {
                    for v in 0..d as i128 {
                        let mut next = prefix.clone();
                        next.push(num_rational::Ratio::from_integer(v));
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

fn combine_exponents(a: ExponentInfo, b: ExponentInfo) -> ExponentInfo {
    use ExponentInfo::*;
    match (a, b) {
        (Infinite, _) | (_, Infinite) => Infinite,
        (Unknown, _) | (_, Unknown) => Unknown,
        (Finite(m), Finite(n)) => Finite(m / gcd_u64(m, n) * n),
        (Finite(1), other) | (other, Finite(1)) => other,
        (BoundedNotPrime, _) | (_, BoundedNotPrime) => BoundedNotPrime,
        (SomePrimeAtLeast5, Finite(m)) | (Finite(m), SomePrimeAtLeast5) => {
            // lcm(p, m) for an unrecorded prime p >= 5: composite unless m
            // is itself a prime >= 5 that might equal p.
            if is_prime(m) && m >= 5 {
                BoundedUnknown
            } else {
                BoundedNotPrime
            }
        }
        (SomePrimeAtLeast5, SomePrimeAtLeast5) => BoundedUnknown,
        (BoundedUnknown, _) | (_, BoundedUnknown) => BoundedUnknown,
    }
}

fn is_finite(d: &GroupDescriptor) -> Verdict {
    match d {
        GroupDescriptor::Finite(_) => Verdict::Yes,
        GroupDescriptor::Abelian(a) => {
            if a.is_finite() {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        GroupDescriptor::Heisenberg(h) => {
            if h.is_finite() {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        GroupDescriptor::Free { rank } => {
            if *rank == 0 {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        GroupDescriptor::Product(factors) => {
            let verdicts: Vec<Verdict> = factors.iter().map(is_finite).collect();
            if verdicts.contains(&Verdict::No) {
                Verdict::No
            } else if verdicts.iter().all(|v| *v == Verdict::Yes) {
                Verdict::Yes
            } else {
                Verdict::Undecided
            }
        }
        GroupDescriptor::Quotient { base, kernel } => match is_finite(base) {
            Verdict::Yes => Verdict::Yes,
            Verdict::No if kernel.finite => Verdict::No,
            _ => Verdict::Undecided,
        },
        GroupDescriptor::Known(name) => {
            known_entry(name).map_or(Verdict::Undecided, |e| e.is_finite)
        }
    }
}

fn is_abelian(d: &GroupDescriptor) -> Verdict {
    match d {
        GroupDescriptor::Finite(g) => {
            if g.is_abelian() {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        GroupDescriptor::Abelian(_) => Verdict::Yes,
        GroupDescriptor::Heisenberg(h) => heisenberg_abelian(h),
        GroupDescriptor::Free { rank } => {
            if *rank <= 1 {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        GroupDescriptor::Product(factors) => {
            let verdicts: Vec<Verdict> = factors.iter().map(is_abelian).collect();
            if verdicts.contains(&Verdict::No) {
                Verdict::No
            } else if verdicts.iter().all(|v| *v == Verdict::Yes) {
                Verdict::Yes
            } else {
                Verdict::Undecided
            }
        }
        GroupDescriptor::Quotient { .. } => Verdict::Undecided,
        GroupDescriptor::Known(name) => {
            known_entry(name).map_or(Verdict::Undecided, |e| e.is_abelian)
        }
    }
}

fn heisenberg_abelian(h: &HeisenbergSpec) -> Verdict {
    use crate::heisenberg::{ComponentGroup, Pairing};
    // The group is abelian exactly when the pairing vanishes identically.
    match &h.omega {
        Pairing::RingMultiplication => match &h.e {
            ComponentGroup::ModularInt(1) => Verdict::Yes,
            _ => Verdict::No,
        },
        Pairing::Table(table) => {
            let zero = table
                .iter()
                .all(|row| row.iter().all(|v| v.iter().all(|s| s.numer() == &0)));
            if zero {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        Pairing::Declared => {
            let trivial_side = h.e.descriptor().is_trivial() || h.f.descriptor().is_trivial();
            if trivial_side {
                Verdict::Yes
            } else if h.nondegenerate {
                Verdict::No
            } else {
                Verdict::Undecided
            }
        }
    }
}

fn has_infinite_abelian_subgroup(d: &GroupDescriptor) -> Verdict {
    match d {
        GroupDescriptor::Finite(_) => Verdict::No,
        GroupDescriptor::Abelian(a) => {
            if a.is_finite() {
                Verdict::No
            } else {
                Verdict::Yes
            }
        }
        GroupDescriptor::Heisenberg(h) => {
            // An infinite component yields an infinite abelian coordinate
            // subgroup (E x 0 x A and 0 x F x A are abelian).
            if h.is_finite() {
                Verdict::No
            } else {
                Verdict::Yes
            }
        }
        GroupDescriptor::Free { rank } => {
            if *rank == 0 {
                Verdict::No
            } else {
                Verdict::Yes // any generator spans an infinite cyclic subgroup
            }
        }
        GroupDescriptor::Product(factors) => {
            let verdicts: Vec<Verdict> =
                factors.iter().map(has_infinite_abelian_subgroup).collect();
            if verdicts.contains(&Verdict::Yes) {
                Verdict::Yes
            } else if verdicts.iter().all(|v| *v == Verdict::No) {
                Verdict::No
            } else {
                Verdict::Undecided
            }
        }
        GroupDescriptor::Quotient { .. } => Verdict::Undecided,
        GroupDescriptor::Known(name) => known_entry(name).map_or(Verdict::Undecided, |e| {
            if e.has_infinite_abelian_subgroup {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }),
    }
}

fn decide_atf(d: &GroupDescriptor) -> Justified {
    const RULE_FINITE: (&str, &str) = ("atf-finite", "every socle of a finite group is finite");
    const RULE_ABELIAN: (&str, &str) = (
        "atf-abelian-socle",
        "an abelian group is almost torsion-free iff its p-socle is finite for every prime p",
    );
    const RULE_HEIS: (&str, &str) = (
        "atf-heisenberg-components",
        "a twisted triple group is almost torsion-free iff its three components are: component \
         socles embed, and over almost torsion-free components each power equation has finitely \
         many solutions",
    );
    const RULE_FREE: (&str, &str) = ("atf-free", "free groups are torsion-free");
    const RULE_PRODUCT: (&str, &str) = (
        "atf-product",
        "the n-socle of a finite direct product is the product of the factor socles",
    );
    if is_finite(d) == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1);
    }
    match d {
        GroupDescriptor::Finite(_) => Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1),
        GroupDescriptor::Abelian(a) => Justified::new(
            if a.is_almost_torsion_free() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            RULE_ABELIAN.0,
            RULE_ABELIAN.1,
        ),
        GroupDescriptor::Heisenberg(h) => Justified::new(
            if h.components_atf() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            RULE_HEIS.0,
            RULE_HEIS.1,
        ),
        GroupDescriptor::Free { .. } => Justified::new(Verdict::Yes, RULE_FREE.0, RULE_FREE.1),
        GroupDescriptor::Product(factors) => {
            let verdicts: Vec<Verdict> = factors.iter().map(|f| decide_atf(f).verdict).collect();
            let verdict = if verdicts.contains(&Verdict::No) {
                Verdict::No
            } else if verdicts.iter().all(|v| *v == Verdict::Yes) {
                Verdict::Yes
            } else {
                Verdict::Undecided
            };
            Justified::new(verdict, RULE_PRODUCT.0, RULE_PRODUCT.1)
        }
        GroupDescriptor::Quotient { .. } => Justified::undecided("atf-quotient"),
        GroupDescriptor::Known(name) => match known_entry(name) {
            Ok(entry) => Justified::new(entry.atf, "atf-knowledge-base", entry.statement),
            Err(_) => Justified::undecided("atf-unknown-name"),
        },
    }
}

/// Weak cancellation law: every power map is finitely-many-to-one.
pub fn decide_wcl(d: &GroupDescriptor) -> Justified {
    const RULE_FINITE: (&str, &str) = (
        "wcl-finite",
        "maps on a finite carrier are finitely-many-to-one",
    );
    const RULE_ABELIAN: (&str, &str) = (
        "wcl-abelian",
        "for abelian groups the weak cancellation law is equivalent to being almost torsion-free",
    );
    const RULE_FREE: (&str, &str) = (
        "wcl-free",
        "free groups satisfy the cancellation law (equal powers force equal elements), hence the \
         weak cancellation law",
    );
    const RULE_HEIS_YES: (&str, &str) = (
        "wcl-heisenberg-atf",
        "over almost torsion-free components the closed power formula leaves finitely many \
         solutions to every power equation; equivalently the center and central quotient both \
         satisfy the weak cancellation law",
    );
    const RULE_HEIS_NO: (&str, &str) = (
        "wcl-heisenberg-not-atf",
        "a component with an infinite p-socle embeds as a coordinate subgroup, so the p-th power \
         map has an infinite fiber over the identity",
    );
    const RULE_PRODUCT: (&str, &str) = (
        "wcl-product",
        "the weak cancellation law passes to subgroups (hence to factors) and is finitely \
         productive (fibers of a product power map are products of factor fibers)",
    );
    const RULE_QUOTIENT: (&str, &str) = (
        "wcl-quotient-finite-kernel",
        "a quotient by a finite normal subgroup inherits the weak cancellation law: infinitely \
         many roots downstairs would crowd a finite kernel coset and lift to infinitely many \
         roots upstairs",
    );
    if is_finite(d) == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1);
    }
    match d {
        GroupDescriptor::Finite(_) => Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1),
        GroupDescriptor::Abelian(a) => Justified::new(
            if a.is_almost_torsion_free() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            RULE_ABELIAN.0,
            RULE_ABELIAN.1,
        ),
        GroupDescriptor::Free { .. } => Justified::new(Verdict::Yes, RULE_FREE.0, RULE_FREE.1),
        GroupDescriptor::Heisenberg(h) => {
            if h.is_finite() {
                Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1)
            } else if h.components_atf() {
                Justified::new(Verdict::Yes, RULE_HEIS_YES.0, RULE_HEIS_YES.1)
            } else {
                Justified::new(Verdict::No, RULE_HEIS_NO.0, RULE_HEIS_NO.1)
            }
        }
        GroupDescriptor::Product(factors) => {
            let verdicts: Vec<Verdict> = factors.iter().map(|f| decide_wcl(f).verdict).collect();
            let verdict = if verdicts.contains(&Verdict::No) {
                Verdict::No
            } else if verdicts.iter().all(|v| *v == Verdict::Yes) {
                Verdict::Yes
            } else {
                Verdict::Undecided
            };
            Justified::new(verdict, RULE_PRODUCT.0, RULE_PRODUCT.1)
        }
        GroupDescriptor::Quotient { base, kernel } => {
            if kernel.finite && decide_wcl(base).verdict == Verdict::Yes {
                Justified::new(Verdict::Yes, RULE_QUOTIENT.0, RULE_QUOTIENT.1)
            } else {
                Justified::undecided("wcl-quotient")
            }
        }
        GroupDescriptor::Known(name) => match known_entry(name) {
            Ok(entry) => Justified::new(entry.wcl, "wcl-knowledge-base", entry.statement),
            Err(_) => Justified::undecided("wcl-unknown-name"),
        },
    }
}

fn decide_bounded_exponent(d: &GroupDescriptor) -> Justified {
    const RULE: (&str, &str) = (
        "exponent-computation",
        "least m with every m-th power trivial, computed or propagated from the structure",
    );
    let verdict = match exponent_info(d) {
        ExponentInfo::Infinite => Verdict::No,
        ExponentInfo::Unknown => Verdict::Undecided,
        _ => Verdict::Yes,
    };
    Justified::new(verdict, RULE.0, RULE.1)
}

pub fn decide_prime_exponent(d: &GroupDescriptor) -> Justified {
    const RULE: (&str, &str) = ("prime-exponent", "the exponent is a prime number");
    let verdict = match exponent_info(d) {
        ExponentInfo::Finite(m) => {
            if is_prime(m) {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        ExponentInfo::SomePrimeAtLeast5 => Verdict::Yes,
        ExponentInfo::BoundedNotPrime => Verdict::No,
        ExponentInfo::Infinite => Verdict::No,
        ExponentInfo::BoundedUnknown | ExponentInfo::Unknown => Verdict::Undecided,
    };
    Justified::new(verdict, RULE.0, RULE.1)
}

/// Monomial topology cofinite?
pub fn decide_mon_cofinite(d: &GroupDescriptor) -> Justified {
    const RULE_FINITE: (&str, &str) = (
        "mon-finite",
        "on a finite group the degree-one monomial fibers are the singletons, so the monomial \
         topology is discrete and equals the cofinite topology",
    );
    const RULE_PRIME: (&str, &str) = (
        "mon-prime-exponent",
        "in a group of prime exponent p the n-socle is trivial or everything, and any nontrivial \
         element has at most one n-th root, so all monomial solution sets are finite or full",
    );
    const RULE_WCL: (&str, &str) = (
        "mon-wcl",
        "an infinite group has cofinite monomial topology iff it has prime exponent or satisfies \
         the weak cancellation law",
    );
    const RULE_PRODUCT: (&str, &str) = (
        "mon-product",
        "a product has cofinite monomial topology iff either all factors satisfy the weak \
         cancellation law or all factors share one prime exponent",
    );
    const RULE_QUOTIENT: (&str, &str) = (
        "mon-quotient-finite-kernel",
        "cofinite monomial topology passes to quotients by finite normal subgroups: both prime \
         exponent and the weak cancellation law survive such quotients",
    );
    if let GroupDescriptor::Known(name) = d {
        return match known_entry(name) {
            Ok(entry) => Justified::new(entry.mon_cofinite, "mon-knowledge-base", entry.statement),
            Err(_) => Justified::undecided("mon-unknown-name"),
        };
    }
    if is_finite(d) == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1);
    }
    if let GroupDescriptor::Quotient { base, kernel } = d {
        if kernel.finite && decide_mon_cofinite(base).verdict == Verdict::Yes {
            return Justified::new(Verdict::Yes, RULE_QUOTIENT.0, RULE_QUOTIENT.1);
        }
    }
    let prime = decide_prime_exponent(d).verdict;
    let wcl = decide_wcl(d).verdict;
    let (rule, statement) = if matches!(d, GroupDescriptor::Product(_)) {
        RULE_PRODUCT
    } else if prime == Verdict::Yes {
        RULE_PRIME
    } else {
        RULE_WCL
    };
    let verdict = match (prime, wcl) {
        (Verdict::Yes, _) | (_, Verdict::Yes) => Verdict::Yes,
        (Verdict::No, Verdict::No) => Verdict::No,
        _ => Verdict::Undecided,
    };
    Justified::new(verdict, rule, statement)
}

/// Centralizer-plus-cofinite topology cofinite?
pub fn decide_cen_cofinite(d: &GroupDescriptor) -> Justified {
    const RULE_ABELIAN: (&str, &str) = (
        "cen-abelian",
        "in an abelian group every centralizer is the whole group, so the centralizer topology \
         is indiscrete and its join with the cofinite topology is cofinite",
    );
    const RULE_FINITE: (&str, &str) = (
        "cen-finite",
        "every topology finer than the cofinite one on a finite carrier is cofinite",
    );
    const RULE_INF_AB_SUB: (&str, &str) = (
        "cen-infinite-abelian-subgroup",
        "an infinite non-abelian group with cofinite centralizer-plus-cofinite topology has no \
         infinite abelian subgroups: a non-central element of such a subgroup would have an \
         infinite proper centralizer",
    );
    const RULE_FREE: (&str, &str) = (
        "cen-free",
        "in a free group the centralizer of a nontrivial element is the infinite cyclic group on \
         its primitive root: an infinite proper closed set",
    );
    const RULE_PRODUCT_MANY: (&str, &str) = (
        "cen-product-shape",
        "an infinite non-abelian product has cofinite centralizer-plus-cofinite topology iff \
         exactly one factor is infinite non-abelian with that property and the rest is finite \
         abelian",
    );
    const RULE_QUOTIENT: (&str, &str) = (
        "cen-quotient-central-kernel",
        "a quotient by a central subgroup preserves cofinite centralizer-plus-cofinite topology: \
         commutator fibers stay finite modulo a central kernel",
    );
    if let GroupDescriptor::Known(name) = d {
        return match known_entry(name) {
            Ok(entry) => Justified::new(entry.cen_cofinite, "cen-knowledge-base", entry.statement),
            Err(_) => Justified::undecided("cen-unknown-name"),
        };
    }
    let abelian = is_abelian(d);
    if abelian == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_ABELIAN.0, RULE_ABELIAN.1);
    }
    if is_finite(d) == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1);
    }
    if let GroupDescriptor::Quotient { base, kernel } = d {
        if kernel.central && decide_cen_cofinite(base).verdict == Verdict::Yes {
            return Justified::new(Verdict::Yes, RULE_QUOTIENT.0, RULE_QUOTIENT.1);
        }
        return Justified::undecided("cen-quotient");
    }
    // Infinite, non-abelian territory: necessary conditions first.
    if abelian == Verdict::No && is_finite(d) == Verdict::No {
        if has_infinite_abelian_subgroup(d) == Verdict::Yes {
            return Justified::new(Verdict::No, RULE_INF_AB_SUB.0, RULE_INF_AB_SUB.1);
        }
        if matches!(d, GroupDescriptor::Free { rank } if *rank >= 2) {
            return Justified::new(Verdict::No, RULE_FREE.0, RULE_FREE.1);
        }
        if let GroupDescriptor::Product(factors) = d {
            return product_shape_rule(factors, decide_cen_cofinite, RULE_PRODUCT_MANY);
        }
    }
    Justified::undecided("cen-no-rule")
}

/// Shared analysis for the product theorems on the centralizer and full
/// equation topologies: an infinite non-abelian product is cofinite (in
/// either sense) iff exactly one factor is infinite non-abelian and itself
/// cofinite, while all other factors are finite abelian.
fn product_shape_rule(
    factors: &[GroupDescriptor],
    decide: fn(&GroupDescriptor) -> Justified,
    rule: (&'static str, &'static str),
) -> Justified {
    let mut exceptional: Vec<&GroupDescriptor> = Vec::new();
    for factor in factors {
        match (is_finite(factor), is_abelian(factor)) {
            (Verdict::Yes, Verdict::Yes) => {}
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => {
                return Justified::undecided(rule.0);
            }
            _ => exceptional.push(factor),
        }
    }
    match exceptional.as_slice() {
        [] => Justified::undecided(rule.0), // finite abelian product; callers handle earlier
        [single] => {
            if is_finite(single) == Verdict::No && is_abelian(single) == Verdict::No {
                Justified::new(decide(single).verdict, rule.0, rule.1)
            } else {
                // Finite non-abelian or infinite abelian single exception:
                // the product is then finite or abelian, handled earlier;
                // reaching here means the product mixes shapes ruled out.
                Justified::new(Verdict::No, rule.0, rule.1)
            }
        }
        _ => Justified::new(Verdict::No, rule.0, rule.1),
    }
}

/// Full one-variable-equation topology cofinite?
pub fn decide_zar_cofinite(d: &GroupDescriptor) -> Justified {
    const RULE_FINITE: (&str, &str) = (
        "zar-finite",
        "singleton solution sets of degree-one equations make the equation topology discrete on \
         a finite group, and discrete equals cofinite there",
    );
    const RULE_ABELIAN: (&str, &str) = (
        "zar-abelian",
        "for abelian groups the equation topology equals the monomial topology, which is \
         cofinite iff the group is almost torsion-free or of prime exponent",
    );
    const RULE_CEN_NECESSARY: (&str, &str) = (
        "zar-needs-cen",
        "cofinite equation topology forces cofinite centralizer-plus-cofinite topology, which \
         fails here",
    );
    const RULE_MON_NECESSARY: (&str, &str) = (
        "zar-needs-mon",
        "cofinite equation topology forces cofinite monomial topology, which fails here",
    );
    const RULE_EXPONENT: (&str, &str) = (
        "zar-prime-exponent-at-least-5",
        "an infinite non-abelian group with cofinite equation topology must have prime exponent \
         p >= 5: non-central elements have infinitely many conjugates of equal order, and \
         exponent 3 would force elements to commute with all their conjugates",
    );
    const RULE_NILPOTENT: (&str, &str) = (
        "zar-no-infinite-solvable",
        "an infinite group with cofinite equation topology is never solvable or nilpotent: the \
         ascending central series freezes and derived subgroups stay infinite",
    );
    const RULE_PRODUCT: (&str, &str) = (
        "zar-product-shape",
        "an infinite non-abelian product has cofinite equation topology iff exactly one factor \
         is infinite non-abelian with that property and the rest is finite abelian",
    );
    const RULE_QUOTIENT: (&str, &str) = (
        "zar-quotient-finite-kernel",
        "quotients by finite normal subgroups preserve cofinite equation topology",
    );
    if let GroupDescriptor::Known(name) = d {
        return match known_entry(name) {
            Ok(entry) => Justified::new(entry.zar_cofinite, "zar-knowledge-base", entry.statement),
            Err(_) => Justified::undecided("zar-unknown-name"),
        };
    }
    if is_finite(d) == Verdict::Yes {
        return Justified::new(Verdict::Yes, RULE_FINITE.0, RULE_FINITE.1);
    }
    let abelian = is_abelian(d);
    if abelian == Verdict::Yes {
        return Justified::new(
            decide_mon_cofinite(d).verdict,
            RULE_ABELIAN.0,
            RULE_ABELIAN.1,
        );
    }
    if let GroupDescriptor::Quotient { base, kernel } = d {
        if kernel.finite && decide_zar_cofinite(base).verdict == Verdict::Yes {
            return Justified::new(Verdict::Yes, RULE_QUOTIENT.0, RULE_QUOTIENT.1);
        }
        return Justified::undecided("zar-quotient");
    }
    if abelian == Verdict::No && is_finite(d) == Verdict::No {
        if decide_cen_cofinite(d).verdict == Verdict::No {
            return Justified::new(Verdict::No, RULE_CEN_NECESSARY.0, RULE_CEN_NECESSARY.1);
        }
        if decide_mon_cofinite(d).verdict == Verdict::No {
            return Justified::new(Verdict::No, RULE_MON_NECESSARY.0, RULE_MON_NECESSARY.1);
        }
        let exponent_ok = match exponent_info(d) {
            ExponentInfo::Finite(m) => is_prime(m) && m >= 5,
            ExponentInfo::SomePrimeAtLeast5 => true,
            ExponentInfo::BoundedNotPrime | ExponentInfo::Infinite => false,
            ExponentInfo::BoundedUnknown | ExponentInfo::Unknown => true, // not refuted
        };
        if !exponent_ok {
            return Justified::new(Verdict::No, RULE_EXPONENT.0, RULE_EXPONENT.1);
        }
        if matches!(d, GroupDescriptor::Heisenberg(_)) {
            return Justified::new(Verdict::No, RULE_NILPOTENT.0, RULE_NILPOTENT.1);
        }
        if let GroupDescriptor::Product(factors) = d {
            return product_shape_rule(factors, decide_zar_cofinite, RULE_PRODUCT);
        }
    }
    Justified::undecided("zar-open")
}

fn justified_bool(v: Verdict, rule: &'static str, statement: &'static str) -> Justified {
    Justified::new(v, rule, statement)
}

/// Full classification of a descriptor, with derived implications filled in.
pub fn classify(d: &GroupDescriptor) -> ClassReport {
    let mut properties: BTreeMap<Property, Justified> = BTreeMap::new();
    properties.insert(
        Property::IsAbelian,
        justified_bool(
            is_abelian(d),
            "structural-abelian",
            "commutativity of the construction",
        ),
    );
    properties.insert(
        Property::IsFinite,
        justified_bool(
            is_finite(d),
            "structural-finite",
            "cardinality of the construction",
        ),
    );
    properties.insert(Property::Exponent, decide_bounded_exponent(d));
    properties.insert(Property::Atf, decide_atf(d));
    properties.insert(Property::Wcl, decide_wcl(d));
    properties.insert(Property::PrimeExponent, decide_prime_exponent(d));
    properties.insert(Property::MonCofinite, decide_mon_cofinite(d));
    properties.insert(Property::CenCofinite, decide_cen_cofinite(d));
    properties.insert(Property::ZarCofinite, decide_zar_cofinite(d));

    // Implication closure: strengthen undecided entries from decided ones.
    let strengthen = |props: &mut BTreeMap<Property, Justified>,
                      target: Property,
                      verdict: Verdict,
                      rule: &'static str,
                      statement: &'static str| {
        let entry = props.get_mut(&target).expect("all properties present");
        if entry.verdict == Verdict::Undecided {
            *entry = Justified::new(verdict, rule, statement);
        }
    };
    for _ in 0..2 {
        if properties[&Property::Wcl].verdict == Verdict::Yes {
            strengthen(
                &mut properties,
                Property::Atf,
                Verdict::Yes,
                "derived-wcl-implies-atf",
                "finitely-many-to-one power maps leave every socle finite",
            );
        }
        if properties[&Property::Atf].verdict == Verdict::No {
            strengthen(
                &mut properties,
                Property::Wcl,
                Verdict::No,
                "derived-not-atf-implies-not-wcl",
                "an infinite socle is an infinite fiber of a power map",
            );
        }
        if properties[&Property::ZarCofinite].verdict == Verdict::Yes {
            for target in [Property::MonCofinite, Property::CenCofinite] {
                strengthen(
                    &mut properties,
                    target,
                    Verdict::Yes,
                    "derived-zar-implies-partial",
                    "partial families of equation solution sets are coarser than the full one",
                );
            }
        }
        for source in [Property::MonCofinite, Property::CenCofinite] {
            if properties[&source].verdict == Verdict::No {
                strengthen(
                    &mut properties,
                    Property::ZarCofinite,
                    Verdict::No,
                    "derived-partial-blocks-zar",
                    "a partial family that is not cofinite blocks the full family from being cofinite",
                );
            }
        }
        if properties[&Property::PrimeExponent].verdict == Verdict::Yes {
            strengthen(
                &mut properties,
                Property::Exponent,
                Verdict::Yes,
                "derived-prime-exponent-bounded",
                "prime exponent is in particular a finite exponent",
            );
        }
    }

    let report = ClassReport {
        descriptor: d.to_string(),
        properties,
    };
    debug_assert!(
        check_consistency(&report).is_ok(),
        "inconsistent report for {d}"
    );
    report
}

/// Classification of a symbolic abelian group.
pub fn classify_abelian(d: &AbelianDescriptor) -> ClassReport {
    classify(&GroupDescriptor::Abelian(d.clone()))
}

/// The emission-time consistency constraints every report must satisfy.
pub fn check_consistency(report: &ClassReport) -> Result<(), Vec<String>> {
    let v = |p: Property| report.verdict(p);
    let mut violations = Vec::new();
    let mut implies = |name: &str, premise: bool, conclusion: bool| {
        if premise && !conclusion {
            violations.push(format!("{}: {name}", report.descriptor));
        }
    };
    use Verdict::*;
    implies(
        "zar-cofinite must force mon-cofinite",
        v(Property::ZarCofinite) == Yes,
        v(Property::MonCofinite) == Yes,
    );
    implies(
        "zar-cofinite must force cen-cofinite",
        v(Property::ZarCofinite) == Yes,
        v(Property::CenCofinite) == Yes,
    );
    implies(
        "mon-cofinite must come with prime exponent or the weak cancellation law",
        v(Property::MonCofinite) == Yes,
        v(Property::PrimeExponent) == Yes || v(Property::Wcl) == Yes,
    );
    implies(
        "wcl must force atf",
        v(Property::Wcl) == Yes,
        v(Property::Atf) == Yes,
    );
    implies(
        "finite groups satisfy everything",
        v(Property::IsFinite) == Yes,
        [
            Property::Atf,
            Property::Wcl,
            Property::MonCofinite,
            Property::CenCofinite,
            Property::ZarCofinite,
        ]
        .iter()
        .all(|&p| v(p) == Yes),
    );
    implies(
        "prime exponent is bounded",
        v(Property::PrimeExponent) == Yes,
        v(Property::Exponent) == Yes,
    );
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Ground-truth cross-check for a concrete finite group: the monomial and
/// degree-one families must be discrete, the centralizer-plus-cofinite
/// family must be discrete (hence T1), and the rule engine must say yes on
/// all three cofiniteness properties. Any mismatch is an engine bug.
pub fn oracle_check_finite(group: &Group) -> Result<ClassReport, ClassifyError> {
    let carrier = group.order();
    let mon = ClosedSetFamily::lazy(TopologyLabel::Monomial, carrier, monomial_subbasis(group));
    let zar = ClosedSetFamily::lazy(TopologyLabel::Zariski, carrier, zariski_subbasis(group));
    let cprime = ClosedSetFamily::lazy(
        TopologyLabel::CentralizerCofinite,
        carrier,
        cprime_subbasis(group),
    );
    if !mon.is_discrete() {
        return Err(ClassifyError::Verification(format!(
            "monomial family not discrete on {group:?}"
        )));
    }
    if !zar.is_discrete() {
        return Err(ClassifyError::Verification(format!(
            "degree-one family not discrete on {group:?}"
        )));
    }
    if !cprime.is_discrete() || !cprime.is_t1() {
        return Err(ClassifyError::Verification(format!(
            "centralizer-plus-cofinite family not discrete on {group:?}"
        )));
    }
    let report = classify(&GroupDescriptor::Finite(group.clone()));
    for property in [
        Property::MonCofinite,
        Property::CenCofinite,
        Property::ZarCofinite,
    ] {
        if report.verdict(property) != Verdict::Yes {
            return Err(ClassifyError::Verification(format!(
                "rule verdict for {property:?} is {} on finite {group:?}",
                report.verdict(property)
            )));
        }
    }
    check_consistency(&report).map_err(|v| ClassifyError::Verification(v.join("; ")))?;
    Ok(report)
}

/// Additionally exposed for diagnostics: the centralizer family of a finite
/// group, T1 exactly when the center is trivial.
pub fn centralizer_family(group: &Group) -> ClosedSetFamily {
    ClosedSetFamily::lazy(
        TopologyLabel::Centralizer,
        group.order(),
        centralizer_subbasis(group),
    )
}

/// The pinned symbolic regression set: named descriptors exercising every
/// rule family, used by the verification suites.
pub fn symbolic_test_set() -> Vec<(String, GroupDescriptor)> {
    use GroupDescriptor::*;
    let prufer_sum = AbelianDescriptor::new(vec![
        crate::abelian::Block {
            kind: crate::abelian::BlockKind::Prufer { p: 2 },
            multiplicity: ExtendedNat::one(),
        },
        crate::abelian::Block {
            kind: crate::abelian::BlockKind::Prufer { p: 3 },
            multiplicity: ExtendedNat::finite(2u64),
        },
        crate::abelian::Block {
            kind: crate::abelian::BlockKind::Prufer { p: 5 },
            multiplicity: ExtendedNat::one(),
        },
    ])
    .expect("valid prufer sum");
    let rationals = AbelianDescriptor::new(vec![crate::abelian::Block {
        kind: crate::abelian::BlockKind::Rational,
        multiplicity: ExtendedNat::one(),
    }])
    .expect("valid rationals");
    vec![
        ("Z".into(), Abelian(AbelianDescriptor::integers())),
        (
            "Z^inf".into(),
            Abelian(AbelianDescriptor::integers().power(ExtendedNat::Infinite)),
        ),
        ("Q".into(), Abelian(rationals)),
        ("Q/Z".into(), Abelian(AbelianDescriptor::qmodz())),
        (
            "(Q/Z)^inf".into(),
            Abelian(AbelianDescriptor::qmodz().power(ExtendedNat::Infinite)),
        ),
        ("prufer-sum".into(), Abelian(prufer_sum)),
        (
            "(Z/5)^inf".into(),
            Abelian(AbelianDescriptor::cyclic(5).power(ExtendedNat::Infinite)),
        ),
        (
            "(Z/6)^inf".into(),
            Abelian(AbelianDescriptor::cyclic(6).power(ExtendedNat::Infinite)),
        ),
        ("H(Z)".into(), Heisenberg(HeisenbergSpec::over_integers())),
        ("H(Q)".into(), Heisenberg(HeisenbergSpec::over_rationals())),
        ("H(Z/3)".into(), Heisenberg(HeisenbergSpec::over_mod(3))),
        (
            "H(symbolic-atf)".into(),
            Heisenberg(HeisenbergSpec::symbolic(
                AbelianDescriptor::qmodz(),
                AbelianDescriptor::qmodz(),
                AbelianDescriptor::qmodz(),
            )),
        ),
        (
            "H(symbolic-not-atf)".into(),
            Heisenberg(HeisenbergSpec::symbolic(
                AbelianDescriptor::cyclic(2).power(ExtendedNat::Infinite),
                AbelianDescriptor::integers(),
                AbelianDescriptor::integers(),
            )),
        ),
        ("F2".into(), Free { rank: 2 }),
        ("F3".into(), Free { rank: 3 }),
        ("tarski_monster".into(), Known("tarski_monster".into())),
        ("S3".into(), Finite(Group::symmetric(3))),
        ("S4".into(), Finite(Group::symmetric(4))),
        ("Q8".into(), Finite(Group::quaternion8())),
        ("C6".into(), Finite(Group::cyclic(6))),
        (
            "Z x Z".into(),
            Product(vec![
                Abelian(AbelianDescriptor::integers()),
                Abelian(AbelianDescriptor::integers()),
            ]),
        ),
        (
            "F2 x F2".into(),
            Product(vec![Free { rank: 2 }, Free { rank: 2 }]),
        ),
        (
            "S3 x Z".into(),
            Product(vec![
                Finite(Group::symmetric(3)),
                Abelian(AbelianDescriptor::integers()),
            ]),
        ),
        (
            "tarski x C2".into(),
            Product(vec![
                Known("tarski_monster".into()),
                Finite(Group::cyclic(2)),
            ]),
        ),
        (
            "H(Z)/center".into(),
            Quotient {
                base: Box::new(Heisenberg(HeisenbergSpec::over_integers())),
                kernel: KernelSpec {
                    finite: false,
                    central: true,
                },
            },
        ),
    ]
}

impl GroupDescriptor {
    /// Parses a classification descriptor from JSON. Alongside the symbolic
    /// kinds, every concrete finite-group descriptor is accepted as a leaf:
    ///
    /// ```json
    /// {"kind": "cyclic", "n": 6}
    /// {"kind": "abelian", "blocks": [{"kind": "qmodz", "mult": 1}]}
    /// {"kind": "free", "rank": 2}
    /// {"kind": "heisenberg", "ring": "Z"}
    /// {"kind": "heisenberg", "ring": {"mod": 3}}
    /// {"kind": "heisenberg", "components": {"e": [2], "f": [2], "a": [2]}, "pairing": [[[0],[0]],[[0],[1]]]}
    /// {"kind": "known", "name": "tarski_monster"}
    /// {"kind": "product", "factors": [{"kind": "known", "name": "tarski_monster"}, {"kind": "cyclic", "n": 2}]}
    /// {"kind": "quotient", "base": {"kind": "heisenberg", "ring": "Z"}, "kernel": {"finite": false, "central": true}}
    /// ```
    pub fn from_json(text: &str) -> Result<GroupDescriptor, ClassifyError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| ClassifyError::BadDescriptor(e.to_string()))?;
        descriptor_from_value(&value)
    }
}

fn descriptor_from_value(value: &serde_json::Value) -> Result<GroupDescriptor, ClassifyError> {
    let bad = |msg: String| ClassifyError::BadDescriptor(msg);
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| bad("descriptor needs a string `kind`".into()))?;
    match kind {
        "abelian" => {
            let parsed: AbelianDescriptor =
                serde_json::from_value(value.clone()).map_err(|e| bad(e.to_string()))?;
            let validated =
                AbelianDescriptor::new(parsed.blocks).map_err(|e| bad(e.to_string()))?;
            Ok(GroupDescriptor::Abelian(validated))
        }
        "free" => {
            let rank = value
                .get("rank")
                .and_then(|r| r.as_u64())
                .ok_or_else(|| bad("free descriptor needs a numeric `rank`".into()))?;
            Ok(GroupDescriptor::Free { rank: rank as u32 })
        }
        "known" => {
            let name = value
                .get("name")
                .and_then(|n| n.as_str())
                .ok_or_else(|| bad("known descriptor needs a `name`".into()))?;
            known_entry(name)?;
            Ok(GroupDescriptor::Known(name.to_string()))
        }
        "heisenberg" => heisenberg_from_value(value).map(GroupDescriptor::Heisenberg),
        "product" => {
            let factors = value
                .get("factors")
                .and_then(|f| f.as_array())
                .ok_or_else(|| bad("product descriptor needs a `factors` array".into()))?;
            if factors.is_empty() {
                return Err(bad("product needs at least one factor".into()));
            }
            let parsed: Result<Vec<GroupDescriptor>, ClassifyError> =
                factors.iter().map(descriptor_from_value).collect();
            Ok(GroupDescriptor::Product(parsed?))
        }
        "quotient" if value.get("base").is_some() => {
            let base = descriptor_from_value(value.get("base").unwrap())?;
            let kernel: KernelSpec = serde_json::from_value(
                value
                    .get("kernel")
                    .cloned()
                    .ok_or_else(|| bad("symbolic quotient needs a `kernel` spec".into()))?,
            )
            .map_err(|e| bad(e.to_string()))?;
            Ok(GroupDescriptor::Quotient {
                base: Box::new(base),
                kernel,
            })
        }
        _ => {
            let spec: crate::group::GroupSpec =
                serde_json::from_value(value.clone()).map_err(|e| bad(e.to_string()))?;
            let group = spec.build().map_err(|e| bad(e.to_string()))?;
            Ok(GroupDescriptor::Finite(group))
        }
    }
}

fn heisenberg_from_value(value: &serde_json::Value) -> Result<HeisenbergSpec, ClassifyError> {
    let bad = |msg: String| ClassifyError::BadDescriptor(msg);
    if let Some(ring) = value.get("ring") {
        return match ring {
            serde_json::Value::String(name) if name == "Z" => Ok(HeisenbergSpec::over_integers()),
            serde_json::Value::String(name) if name == "Q" => Ok(HeisenbergSpec::over_rationals()),
            serde_json::Value::Object(fields) => {
                let modulus = fields
                    .get("mod")
                    .and_then(|m| m.as_u64())
                    .ok_or_else(|| bad("ring object needs a numeric `mod`".into()))?;
                if modulus == 0 {
                    return Err(bad("modulus must be positive".into()));
                }
                Ok(HeisenbergSpec::over_mod(modulus))
            }
            other => Err(bad(format!("unrecognized ring `{other}`"))),
        };
    }
    let components = value
        .get("components")
        .and_then(|c| c.as_object())
        .ok_or_else(|| bad("heisenberg descriptor needs `ring` or `components`".into()))?;
    let get = |key: &str| {
        components
            .get(key)
            .ok_or_else(|| bad(format!("components need `{key}`")))
    };
    let (e, f, a) = (get("e")?, get("f")?, get("a")?);
    let all_arrays = [e, f, a].iter().all(|v| v.is_array());
    if all_arrays {
        let factors = |v: &serde_json::Value| -> Result<Vec<u64>, ClassifyError> {
            v.as_array()
                .unwrap()
                .iter()
                .map(|x| {
                    x.as_u64()
                        .ok_or_else(|| bad("invariant factors must be integers".into()))
                })
                .collect()
        };
        let pairing: Vec<Vec<Vec<i64>>> = serde_json::from_value(
            value
                .get("pairing")
                .cloned()
                .ok_or_else(|| bad("finite components need a `pairing` table".into()))?,
        )
        .map_err(|e| bad(e.to_string()))?;
        let table: Vec<Vec<crate::heisenberg::Coord>> = pairing
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|entry| {
                        entry
                            .into_iter()
                            .map(|v| num_rational::Ratio::from_integer(v as i128))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        return HeisenbergSpec::with_pairing(factors(e)?, factors(f)?, factors(a)?, table)
            .map_err(|e| bad(e.to_string()));
    }
    let symbolic = |v: &serde_json::Value| -> Result<AbelianDescriptor, ClassifyError> {
        let parsed: AbelianDescriptor =
            serde_json::from_value(v.clone()).map_err(|e| bad(e.to_string()))?;
        AbelianDescriptor::new(parsed.blocks).map_err(|e| bad(e.to_string()))
    };
    Ok(HeisenbergSpec::symbolic(
        symbolic(e)?,
        symbolic(f)?,
        symbolic(a)?,
    ))
}
