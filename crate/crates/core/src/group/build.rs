//! Constructors for the concrete group families.

use super::{Element, Group, GroupError, GroupKind};

impl Group {
    /// Integers mod `n` under addition, `n >= 1`.
    pub fn cyclic(n: u64) -> Group {
        let order = n as usize;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(((a + b) % order) as u32);
            }
        }
        let names = (0..order).map(|a| a.to_string()).collect();
        Group::from_table(GroupKind::Cyclic(n), table, names).expect("cyclic table is a group")
    }

    /// Dihedral group of order `2n`: rotations `r^k` at indices `0..n`,
    /// reflections `s r^k` at indices `n..2n`.
    pub fn dihedral(n: u64) -> Group {
        let n = n as usize;
        let order = 2 * n;
        let encode = |flip: bool, k: usize| if flip { n + k } else { k };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (f1, k1) = (a >= n, a % n);
            for b in 0..order {
                let (f2, k2) = (b >= n, b % n);
                // s^f1 r^k1 * s^f2 r^k2 = s^(f1+f2) r^(k2 +/- k1),
                // using s r s = r^-1.
                let k = if f2 { (k2 + n - k1) % n } else { (k1 + k2) % n };
                table.push(encode(f1 ^ f2, k) as u32);
            }
        }
        let mut names: Vec<String> = (0..n).map(|k| format!("r{k}")).collect();
        names.extend((0..n).map(|k| format!("sr{k}")));
        Group::from_table(GroupKind::Dihedral(n as u64), table, names)
            .expect("dihedral table is a group")
    }

    /// The quaternion group {1, -1, i, -i, j, -j, k, -k}.
    pub fn quaternion8() -> Group {
        // Encode as (unit, sign): unit 0=1, 1=i, 2=j, 3=k; index = 2*unit + sign.
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) => (x, false),
                (x, 0) => (x, false),
                (1, 1) => (0, true),
                (2, 2) => (0, true),
                (3, 3) => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let order = 8;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (ua, sa) = (a / 2, a % 2 == 1);
            for b in 0..order {
                let (ub, sb) = (b / 2, b % 2 == 1);
                let (u, s) = unit_mul(ua, ub);
                let sign = sa ^ sb ^ s;
                table.push((2 * u + sign as usize) as u32);
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Group::from_table(GroupKind::Quaternion8, table, names)
            .expect("quaternion table is a group")
    }

    /// Heisenberg group over `Z/m`: triples `(a,b,c)` with
    /// `(a,b,c)(x,y,z) = (a+x, b+y, c+z+a*y)`. Order `m^3`.
    pub fn heisenberg_finite(m: u64) -> Group {
        let m = m as usize;
        let order = m * m * m;
        let encode = |a: usize, b: usize, c: usize| (a * m + b) * m + c;
        let mut table = Vec::with_capacity(order * order);
        for left in 0..order {
            let (a, b, c) = (left / (m * m), left / m % m, left % m);
            for right in 0..order {
                let (x, y, z) = (right / (m * m), right / m % m, right % m);
                table.push(encode((a + x) % m, (b + y) % m, (c + z + a * y) % m) as u32);
            }
        }
        let names = (0..order)
            .map(|i| format!("({},{},{})", i / (m * m), i / m % m, i % m))
            .collect();
        Group::from_table(GroupKind::HeisenbergFinite(m as u64), table, names)
            .expect("heisenberg table is a group")
    }

    /// The group generated by the given permutations of `0..degree`
    /// (as image arrays), closed under composition.
    ///
    /// Composition is left-to-right: `(p * q)(x) = q(p(x))`, i.e. the left
    /// factor acts first.
    pub fn permutation(degree: usize, generators: &[Vec<usize>]) -> Result<Group, GroupError> {
        for g in generators {
            if g.len() != degree {
                return Err(GroupError::NotAGroup(format!(
                    "generator has {} images, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &img in g {
                if img >= degree || seen[img] {
                    return Err(GroupError::NotAGroup("generator is not a bijection".into()));
                }
                seen[img] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
            // left-to-right: apply p, then q
            p.iter().map(|&x| q[x]).collect()
        };
        let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let next = compose(&p, g);
                if !elements.contains(&next) {
                    if elements.len() >= super::MAX_DESCRIPTOR_ORDER {
                        return Err(GroupError::TooLarge {
                            order: elements.len() + 1,
                            cap: super::MAX_DESCRIPTOR_ORDER,
                        });
                    }
                    elements.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        elements.sort();
        let order = elements.len();
        let index_of =
            |p: &Vec<usize>| elements.binary_search(p).expect("closed under composition");
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index_of(&compose(a, b)) as u32);
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Group::from_table(
            GroupKind::Permutation {
                degree: degree as u32,
            },
            table,
            names,
        )
    }

    /// The full symmetric group on `n` points (small `n`).
    pub fn symmetric(n: usize) -> Group {
        assert!((1..=6).contains(&n), "symmetric group limited to degree 6");
        let mut generators = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            generators.push(t);
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            generators.push(cycle);
        }
        let mut g =
            Group::permutation(n, &generators).expect("symmetric generators are bijections");
        g = retag(g, GroupKind::Symmetric(n as u32));
        g
    }

    /// The alternating group on `n` points (small `n`).
    pub fn alternating(n: usize) -> Group {
        assert!(
            (3..=6).contains(&n),
            "alternating group limited to degree 3..6"
        );
        let mut generators = Vec::new();
        for i in 0..n.saturating_sub(2) {
            let mut c: Vec<usize> = (0..n).collect();
            // 3-cycle (i, i+1, i+2)
            c[i] = i + 1;
            c[i + 1] = i + 2;
            c[i + 2] = i;
            generators.push(c);
        }
        let g = Group::permutation(n, &generators).expect("alternating generators are bijections");
        retag(g, GroupKind::Alternating(n as u32))
    }

    /// Direct product with mixed-radix element indexing (last factor varies
    /// fastest).
    pub fn direct_product(factors: &[Group]) -> Result<Group, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::BadDescriptor("empty product".into()));
        }
        let order: usize = factors.iter().map(|f| f.order()).product();
        let decode = |mut index: usize| -> Vec<usize> {
            let mut parts = vec![0; factors.len()];
            for (slot, factor) in factors.iter().enumerate().rev() {
                parts[slot] = index % factor.order();
                index /= factor.order();
            }
            parts
        };
        let encode = |parts: &[usize]| -> usize {
            parts
                .iter()
                .zip(factors)
                .fold(0usize, |acc, (&p, factor)| acc * factor.order() + p)
        };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let pa = decode(a);
            for b in 0..order {
                let pb = decode(b);
                let product: Vec<usize> = pa
                    .iter()
                    .zip(&pb)
                    .zip(factors)
                    .map(|((&x, &y), factor)| factor.mul_index(x, y))
                    .collect();
                table.push(encode(&product) as u32);
            }
        }
        let names = (0..order)
            .map(|i| {
                let parts = decode(i);
                let pieces: Vec<&str> = parts
                    .iter()
                    .zip(factors)
                    .map(|(&p, factor)| factor.name_of(factor.element(p).unwrap()))
                    .collect();
                format!("({})", pieces.join(","))
            })
            .collect();
        Group::from_table(
            GroupKind::DirectProduct(factors.iter().map(|f| f.kind().clone()).collect()),
            table,
            names,
        )
    }

    /// Looks an element up by its display name.
    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        (0..self.order()).find_map(|i| {
            let e = self.element(i).ok()?;
            (self.name_of(e) == name).then_some(e)
        })
    }
}

fn retag(g: Group, kind: GroupKind) -> Group {
    // Rebuild with a friendlier kind tag; the table is already validated.
    let order = g.order();
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(g.mul_index(a, b) as u32);
        }
    }
    let names = (0..order)
        .map(|i| g.name_of(g.element(i).unwrap()).to_string())
        .collect();
    Group::from_table(kind, table, names).expect("retag preserves the group")
}

/// Cycle notation with 1-based points, identity printed as `e`.
fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// The pinned verification corpus: all finite groups the oracle suites run
/// over. Orders stay at or below 64.
pub fn corpus() -> Vec<(String, Group)> {
    let mut list: Vec<(String, Group)> = Vec::new();
    for n in 2..=12 {
        list.push((format!("C{n}"), Group::cyclic(n)));
    }
    for n in 3..=6 {
        list.push((format!("D{n}"), Group::dihedral(n)));
    }
    list.push(("Q8".into(), Group::quaternion8()));
    list.push(("S3".into(), Group::symmetric(3)));
    list.push(("S4".into(), Group::symmetric(4)));
    list.push(("A4".into(), Group::alternating(4)));
    list.push(("H(Z/3)".into(), Group::heisenberg_finite(3)));
    let c2 = Group::cyclic(2);
    let c3 = Group::cyclic(3);
    let c6 = Group::cyclic(6);
    let s3 = Group::symmetric(3);
    list.push((
        "C2xC2".into(),
        Group::direct_product(&[c2.clone(), c2.clone()]).unwrap(),
    ));
    list.push((
        "C2xC6".into(),
        Group::direct_product(&[c2.clone(), c6]).unwrap(),
    ));
    list.push((
        "C3xC3".into(),
        Group::direct_product(&[c3.clone(), c3.clone()]).unwrap(),
    ));
    list.push((
        "C2xS3".into(),
        Group::direct_product(&[c2.clone(), s3.clone()]).unwrap(),
    ));
    list.push((
        "Q8xC2".into(),
        Group::direct_product(&[Group::quaternion8(), c2]).unwrap(),
    ));
    list.push((
        "D4xC3".into(),
        Group::direct_product(&[Group::dihedral(4), c3]).unwrap(),
    ));
    list.push((
        "S3xS3".into(),
        Group::direct_product(&[s3.clone(), s3]).unwrap(),
    ));
    list
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_six_elements_and_composes_left_to_right() {
        let s3 = Group::symmetric(3);
        assert_eq!(s3.order(), 6);
        let t12 = s3.element_by_name("(1 2)").unwrap();
        let t23 = s3.element_by_name("(2 3)").unwrap();
        // Apply (1 2) first, then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
        let product = s3.multiply(t12, t23).unwrap();
        assert_eq!(s3.name_of(product), "(1 3 2)");
    }

    #[test]
    fn alternating_and_symmetric_orders() {
        assert_eq!(Group::symmetric(4).order(), 24);
        assert_eq!(Group::alternating(4).order(), 12);
        assert_eq!(Group::alternating(3).order(), 3);
    }

    #[test]
    fn quaternion_identities() {
        let q8 = Group::quaternion8();
        let i = q8.element_by_name("i").unwrap();
        let j = q8.element_by_name("j").unwrap();
        let k = q8.element_by_name("k").unwrap();
        assert_eq!(q8.multiply(i, j).unwrap(), k);
        let minus_k = q8.element_by_name("-k").unwrap();
        assert_eq!(q8.multiply(j, i).unwrap(), minus_k);
        let minus_one = q8.element_by_name("-1").unwrap();
        assert_eq!(q8.power(i, 2).unwrap(), minus_one);
        assert_eq!(q8.power(j, 2).unwrap(), minus_one);
        assert_eq!(q8.power(k, 2).unwrap(), minus_one);
    }

    #[test]
    fn heisenberg_mod3_is_extraspecial_27() {
        let h = Group::heisenberg_finite(3);
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert_eq!(h.center().count(), 3);
        assert!(!h.is_abelian());
    }

    #[test]
    fn products_multiply_componentwise() {
        let g = Group::direct_product(&[Group::cyclic(2), Group::cyclic(3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let a = g.element_by_name("(1,2)").unwrap();
        let b = g.element_by_name("(1,1)").unwrap();
        let ab = g.multiply(a, b).unwrap();
        assert_eq!(g.name_of(ab), "(0,0)");
    }

    #[test]
    fn corpus_is_pinned_and_small() {
        let corpus = corpus();
        assert_eq!(corpus.len(), 27);
        for (name, g) in &corpus {
            assert!(g.order() <= 64, "{name} exceeds the corpus cap");
        }
    }
}
