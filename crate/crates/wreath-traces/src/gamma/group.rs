use std::collections::HashMap;

use super::{ClassRep, GammaClassTable, GammaSpec, RawClass};
use crate::error::{Error, Result};
use crate::exact::{QuadField, Quaternion, RationalAngle};

/// Largest group order for which a Cayley table is materialized.
const MAX_GROUP_ORDER: u64 = 2048;

/// Concrete element realization, indexed 0..order.
pub enum GammaElements {
    /// Element i is a^i in Z_n.
    Cyclic { n: u32 },
    /// Element i encodes a^k b^e with k = i mod 2n, e = i div 2n, under
    /// a^{2n} = 1, b² = a^n, b a b⁻¹ = a⁻¹.
    Dihedral { n: u32 },
    /// Unit quaternions, closed under multiplication.
    Quaternions(Vec<Quaternion>),
}

/// A finite subgroup of Sp(2, C) with a materialized multiplication table.
pub struct GammaGroup {
    pub spec: GammaSpec,
    pub elements: GammaElements,
    pub cayley: Vec<Vec<u32>>,
    pub inverse: Vec<u32>,
    pub identity: usize,
}

impl GammaGroup {
    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i][j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn order_of(&self, i: usize) -> u64 {
        let mut current = i;
        let mut m = 1;
        while current != self.identity {
            current = self.mul(current, i);
            m += 1;
        }
        m
    }

    /// Eigenvalue angle of element i.
    pub fn angle_of(&self, i: usize) -> RationalAngle {
        match &self.elements {
            GammaElements::Cyclic { n } => RationalAngle::new(i as u64, *n as u64),
            GammaElements::Dihedral { n } => {
                let two_n = 2 * *n as u64;
                let (k, e) = (i as u64 % two_n, i as u64 / two_n);
                if e == 0 {
                    RationalAngle::new(k, two_n)
                } else {
                    RationalAngle::new(1, 4)
                }
            }
            GammaElements::Quaternions(q) => q[i]
                .eigenangle()
                .expect("polyhedral elements have tabulated eigenangles"),
        }
    }

    pub fn element_label(&self, i: usize) -> String {
        match &self.elements {
            GammaElements::Cyclic { .. } => format!("a^{i}"),
            GammaElements::Dihedral { n } => {
                let two_n = 2 * *n as usize;
                let (k, e) = (i % two_n, i / two_n);
                match (k, e) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => format!("a^{k}"),
                    (0, 1) => "b".to_string(),
                    (_, 1) => format!("a^{k} b"),
                    _ => unreachable!(),
                }
            }
            GammaElements::Quaternions(q) => format!("{:?}", q[i]),
        }
    }
}

/// Build Γ with a full element list and Cayley table. Cyclic and binary
/// dihedral groups are laid out from their presentations; the polyhedral
/// groups are closed under quaternion multiplication from fixed generator
/// sets, and the closure size is checked against the expected order.
pub fn build_group(spec: GammaSpec) -> Result<GammaGroup> {
    let order = spec.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::ResourceBound {
            what: "Cayley table construction",
            required: order as u128,
            allowed: MAX_GROUP_ORDER as u128,
        });
    }
    match spec {
        GammaSpec::Cyclic(n) => Ok(build_cyclic(n)),
        GammaSpec::BinaryDihedral(n) => Ok(build_dihedral(n)),
        _ => build_polyhedral(spec),
    }
}

fn finish(spec: GammaSpec, elements: GammaElements, cayley: Vec<Vec<u32>>) -> GammaGroup {
    let order = cayley.len();
    let identity = (0..order)
        .find(|&e| (0..order).all(|i| cayley[e][i] as usize == i))
        .expect("group has an identity");
    let inverse = (0..order)
        .map(|i| {
            (0..order)
                .find(|&j| cayley[i][j] as usize == identity)
                .expect("group element has an inverse") as u32
        })
        .collect();
    GammaGroup {
        spec,
        elements,
        cayley,
        inverse,
        identity,
    }
}

fn build_cyclic(n: u32) -> GammaGroup {
    let order = n as usize;
    let cayley = (0..order)
        .map(|i| (0..order).map(|j| ((i + j) % order) as u32).collect())
        .collect();
    finish(
        GammaSpec::Cyclic(n),
        GammaElements::Cyclic { n },
        cayley,
    )
}

fn build_dihedral(n: u32) -> GammaGroup {
    let two_n = 2 * n as usize;
    let order = 4 * n as usize;
    let split = |i: usize| (i % two_n, i / two_n);
    let join = |k: usize, e: usize| k + e * two_n;
    let mul = |i: usize, j: usize| {
        let (k, e) = split(i);
        let (l, f) = split(j);
        if e == 0 {
            join((k + l) % two_n, f)
        } else {
            // a^k b · a^l b^f = a^{k−l} b^{1+f}, with b² = a^n
            let k_minus_l = (k + two_n - l) % two_n;
            if f == 0 {
                join(k_minus_l, 1)
            } else {
                join((k_minus_l + n as usize) % two_n, 0)
            }
        }
    };
    let cayley = (0..order)
        .map(|i| (0..order).map(|j| mul(i, j) as u32).collect())
        .collect();
    finish(
        GammaSpec::BinaryDihedral(n),
        GammaElements::Dihedral { n },
        cayley,
    )
}

fn polyhedral_generators(spec: GammaSpec) -> Vec<Quaternion> {
    let half = |a: i64, b: i64, c: i64, d: i64| {
        Quaternion::new(
            QuadField::from_rational(crate::exact::ratio(a, 2)),
            QuadField::from_rational(crate::exact::ratio(b, 2)),
            QuadField::from_rational(crate::exact::ratio(c, 2)),
            QuadField::from_rational(crate::exact::ratio(d, 2)),
        )
    };
    match spec {
        GammaSpec::BinaryTetrahedral => vec![Quaternion::i(), half(-1, 1, 1, 1)],
        GammaSpec::BinaryOctahedral => vec![
            Quaternion::new(
                QuadField::sqrt2_times(1, 2),
                QuadField::sqrt2_times(1, 2),
                QuadField::zero(),
                QuadField::zero(),
            ),
            half(-1, 1, 1, 1),
        ],
        GammaSpec::BinaryIcosahedral => vec![
            // (τ + τ⁻¹ i + j)/2 with τ = (1+√5)/2
            Quaternion::new(
                QuadField::new(
                    crate::exact::ratio(1, 4),
                    crate::exact::ratio(0, 1),
                    crate::exact::ratio(1, 4),
                    crate::exact::ratio(0, 1),
                ),
                QuadField::new(
                    crate::exact::ratio(-1, 4),
                    crate::exact::ratio(0, 1),
                    crate::exact::ratio(1, 4),
                    crate::exact::ratio(0, 1),
                ),
                QuadField::from_rational(crate::exact::ratio(1, 2)),
                QuadField::zero(),
            ),
            Quaternion::i(),
        ],
        _ => unreachable!("only polyhedral specs have quaternion generators"),
    }
}

fn build_polyhedral(spec: GammaSpec) -> Result<GammaGroup> {
    let generators = polyhedral_generators(spec);
    let expected = spec.order() as usize;

    // BFS closure from the identity, recording how each element is first
    // reached: elements[j] = elements[parent_of[j].0] · generators[parent_of[j].1].
    let mut elements = vec![Quaternion::one()];
    let mut index: HashMap<Quaternion, usize> = HashMap::new();
    index.insert(Quaternion::one(), 0);
    let mut parent_of: Vec<(usize, usize)> = vec![(0, 0)];
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        for (g, generator) in generators.iter().enumerate() {
            let product = &current * generator;
            if !index.contains_key(&product) {
                index.insert(product.clone(), elements.len());
                elements.push(product);
                parent_of.push((head, g));
            }
        }
        head += 1;
        if elements.len() > expected {
            break;
        }
    }
    if elements.len() != expected {
        return Err(Error::ClosureSize {
            got: elements.len(),
            expected,
        });
    }

    // Cayley table with |G|·|gens| quaternion products: generator columns
    // come from real multiplications, the rest by index composition
    // i·j = (i·parent_j)·gen_j, valid in BFS order.
    let n = elements.len();
    let gen_cols: Vec<usize> = generators.iter().map(|g| index[g]).collect();
    let mut cayley = vec![vec![0u32; n]; n];
    for (i, row) in cayley.iter_mut().enumerate() {
        row[0] = i as u32;
        for (g, generator) in generators.iter().enumerate() {
            row[gen_cols[g]] = index[&(&elements[i] * generator)] as u32;
        }
    }
    for j in 1..n {
        let (pj, gj) = parent_of[j];
        let gen_col = gen_cols[gj];
        for i in 0..n {
            let k = cayley[i][pj] as usize;
            cayley[i][j] = cayley[k][gen_col];
        }
    }
    Ok(finish(spec, GammaElements::Quaternions(elements), cayley))
}

/// Conjugation orbits of the group, discovered in element-index order.
fn conjugation_orbits(group: &GammaGroup) -> Vec<Vec<usize>> {
    let order = group.order();
    let mut seen = vec![false; order];
    let mut orbits = Vec::new();
    for start in 0..order {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        for g in 0..order {
            let conj = group.mul(group.mul(g, start), group.inv(g));
            if !seen[conj] {
                seen[conj] = true;
                orbit.push(conj);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn orbit_rep(group: &GammaGroup, orbit: &[usize]) -> ClassRep {
    let min = orbit[0];
    match &group.elements {
        GammaElements::Cyclic { .. } => ClassRep::Exponent(min as u64),
        GammaElements::Dihedral { n } => {
            let two_n = 2 * *n as usize;
            let (k, e) = (min % two_n, min / two_n);
            if e == 0 {
                ClassRep::Exponent(k as u64)
            } else {
                ClassRep::Flip(k % 2 == 1)
            }
        }
        GammaElements::Quaternions(_) => ClassRep::Element(min),
    }
}

/// Class table plus the element → canonical-class-id map.
pub(crate) fn classify_group(group: &GammaGroup) -> (GammaClassTable, Vec<usize>) {
    let orbits = conjugation_orbits(group);
    let raw = orbits
        .iter()
        .map(|orbit| RawClass {
            size: orbit.len() as u64,
            element_order: group.order_of(orbit[0]),
            angle: group.angle_of(orbit[0]),
            rep: orbit_rep(group, orbit),
        })
        .collect();
    let table = GammaClassTable::from_raw(group.spec, raw);
    let mut class_of = vec![0usize; group.order()];
    for orbit in &orbits {
        let id = table.class_by_rep(&orbit_rep(group, orbit));
        for &el in orbit {
            class_of[el] = id;
        }
    }
    (table, class_of)
}

/// Conjugacy classes by orbit enumeration; the slow, assumption-free path.
pub fn brute_force_class_table(group: &GammaGroup) -> GammaClassTable {
    classify_group(group).0
}
