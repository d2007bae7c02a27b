//! The finite subgroups Γ of Sp(2, C) — cyclic, binary dihedral, and the
//! three binary polyhedral groups — with their conjugacy-class tables.

mod group;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num::integer::gcd;
use once_cell::sync::Lazy;

pub use group::{build_group, brute_force_class_table, GammaElements, GammaGroup};
pub(crate) use group::classify_group;

use crate::error::{Error, Result};
use crate::exact::RationalAngle;

/// One of the five families of finite subgroups of Sp(2, C).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GammaSpec {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GammaSpec {
    pub fn order(&self) -> u64 {
        match *self {
            GammaSpec::Cyclic(n) => n as u64,
            GammaSpec::BinaryDihedral(n) => 4 * n as u64,
            GammaSpec::BinaryTetrahedral => 24,
            GammaSpec::BinaryOctahedral => 48,
            GammaSpec::BinaryIcosahedral => 120,
        }
    }

    /// Number of conjugacy classes: n, n+3, 7, 8, 9 across the families.
    pub fn class_count(&self) -> u64 {
        match *self {
            GammaSpec::Cyclic(n) => n as u64,
            GammaSpec::BinaryDihedral(n) => n as u64 + 3,
            GammaSpec::BinaryTetrahedral => 7,
            GammaSpec::BinaryOctahedral => 8,
            GammaSpec::BinaryIcosahedral => 9,
        }
    }

    /// −1 lies in Γ except for odd cyclic groups.
    pub fn minus_one_in_group(&self) -> bool {
        match *self {
            GammaSpec::Cyclic(n) => n % 2 == 0,
            _ => true,
        }
    }
}

impl FromStr for GammaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGammaSpec(s.to_string());
        let upper = s.trim().to_ascii_uppercase();
        match upper.as_str() {
            "2T" => return Ok(GammaSpec::BinaryTetrahedral),
            "2O" => return Ok(GammaSpec::BinaryOctahedral),
            "2I" => return Ok(GammaSpec::BinaryIcosahedral),
            _ => {}
        }
        if upper.len() < 2 {
            return Err(bad());
        }
        let (head, digits) = upper.split_at(1);
        let n: u32 = digits.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match head {
            "Z" => Ok(GammaSpec::Cyclic(n)),
            "D" => Ok(GammaSpec::BinaryDihedral(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GammaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GammaSpec::Cyclic(n) => write!(f, "Z{n}"),
            GammaSpec::BinaryDihedral(n) => write!(f, "D{n}"),
            GammaSpec::BinaryTetrahedral => write!(f, "2T"),
            GammaSpec::BinaryOctahedral => write!(f, "2O"),
            GammaSpec::BinaryIcosahedral => write!(f, "2I"),
        }
    }
}

/// Canonical representative of a conjugacy class, used as a deterministic
/// tie-break when two classes share (order, angle, size) — e.g. the two
/// order-3 classes of the binary tetrahedral group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) enum ClassRep {
    /// a^k in a cyclic or binary dihedral group (canonical exponent).
    Exponent(u64),
    /// a^k·b in a binary dihedral group, keyed by the parity of k.
    Flip(bool),
    /// Smallest element index of a brute-force orbit.
    Element(usize),
}

/// A conjugacy class of Γ with the data the census needs: its size, the
/// order of its elements, and the eigenvalue angle of its spectrum.
#[derive(Clone, Debug)]
pub struct GammaClass {
    pub id: usize,
    pub size: u64,
    pub element_order: u64,
    pub angle: RationalAngle,
    pub is_identity: bool,
    pub is_minus_one: bool,
    pub(crate) rep: ClassRep,
}

/// The conjugacy-class table of Γ in canonical order: classes sorted by
/// (element order, angle, size, representative), ids assigned by position.
#[derive(Clone, Debug)]
pub struct GammaClassTable {
    pub spec: GammaSpec,
    pub order: u64,
    pub classes: Vec<GammaClass>,
}

pub(crate) struct RawClass {
    pub size: u64,
    pub element_order: u64,
    pub angle: RationalAngle,
    pub rep: ClassRep,
}

impl GammaClassTable {
    pub(crate) fn from_raw(spec: GammaSpec, mut raw: Vec<RawClass>) -> Self {
        raw.sort_by(|a, b| {
            (a.element_order, a.angle, a.size, &a.rep).cmp(&(
                b.element_order,
                b.angle,
                b.size,
                &b.rep,
            ))
        });
        let classes: Vec<GammaClass> = raw
            .into_iter()
            .enumerate()
            .map(|(id, c)| GammaClass {
                id,
                size: c.size,
                element_order: c.element_order,
                angle: c.angle,
                is_identity: c.angle.is_zero(),
                is_minus_one: c.angle.is_half(),
                rep: c.rep,
            })
            .collect();
        let order = spec.order();
        debug_assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), order);
        debug_assert_eq!(classes.len() as u64, spec.class_count());
        debug_assert_eq!(classes.iter().filter(|c| c.is_identity).count(), 1);
        debug_assert!(classes.iter().filter(|c| c.is_minus_one).count() <= 1);
        GammaClassTable {
            spec,
            order,
            classes,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, id: usize) -> &GammaClass {
        &self.classes[id]
    }

    /// Canonical label `c<id>` used in partition strings and CLI output.
    pub fn label(&self, id: usize) -> String {
        format!("c{id}")
    }

    pub fn class_by_label(&self, label: &str) -> Result<&GammaClass> {
        let err = || Error::UnknownClass {
            label: label.to_string(),
            count: self.classes.len(),
        };
        let id: usize = label.strip_prefix('c').ok_or_else(err)?.parse().map_err(|_| err())?;
        self.classes.get(id).ok_or_else(err)
    }

    pub fn identity_id(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.is_identity)
            .expect("every table has an identity class")
    }

    pub fn minus_one_id(&self) -> Option<usize> {
        self.classes.iter().position(|c| c.is_minus_one)
    }

    /// True iff −1 ∈ Γ, i.e. some class has the spectrum {−1, −1}.
    pub fn contains_minus_one(&self) -> bool {
        let found = self.minus_one_id().is_some();
        debug_assert_eq!(found, self.spec.minus_one_in_group());
        found
    }

    /// Number of marked cycles of length r that are t-admissible resp.
    /// s-admissible, computed from the per-class predicates and checked
    /// against the closed forms C−1 and C−1 / C.
    pub fn admissible_counts(&self, r: u64) -> (u64, u64) {
        let t = self.classes.iter().filter(|c| !c.is_identity).count() as u64;
        let s = self
            .classes
            .iter()
            .filter(|c| single_cycle_s_admissible(c, r))
            .count() as u64;
        let c = self.class_count() as u64;
        assert_eq!(t, c - 1);
        let s_closed = if self.contains_minus_one() || r % 2 == 0 {
            c - 1
        } else {
            c
        };
        assert_eq!(s, s_closed);
        (t, s)
    }

    /// A Klein operator exists in the wreath-product algebra iff −1 ∈ Γ;
    /// at N = 0 the one-element group supplies one unconditionally.
    pub fn klein_exists(&self, n: u64) -> bool {
        n == 0 || self.contains_minus_one()
    }

    pub(crate) fn class_by_rep(&self, rep: &ClassRep) -> usize {
        self.classes
            .iter()
            .position(|c| &c.rep == rep)
            .expect("representative belongs to the table")
    }
}

/// One marked cycle (r, α) is s-admissible iff α is neither ±1, or r is
/// even and α = −1, or r is odd and α = 1.
fn single_cycle_s_admissible(class: &GammaClass, r: u64) -> bool {
    (!class.is_identity && !class.is_minus_one)
        || (r % 2 == 0 && class.is_minus_one)
        || (r % 2 == 1 && class.is_identity)
}

/// Conjugacy-class table of Γ. Cyclic and binary dihedral tables are
/// written down directly from the presentation; the polyhedral tables
/// come from orbit enumeration on the quaternion realization.
pub fn class_table(spec: GammaSpec) -> GammaClassTable {
    match spec {
        GammaSpec::Cyclic(n) => cyclic_table(n),
        GammaSpec::BinaryDihedral(n) => dihedral_table(n),
        _ => {
            let group = build_group(spec).expect("polyhedral closure matches table order");
            brute_force_class_table(&group)
        }
    }
}

fn cyclic_table(n: u32) -> GammaClassTable {
    let m = n as u64;
    let raw = (0..m)
        .map(|k| RawClass {
            size: 1,
            element_order: if k == 0 { 1 } else { m / gcd(m, k) },
            angle: RationalAngle::new(k, m),
            rep: ClassRep::Exponent(k),
        })
        .collect();
    GammaClassTable::from_raw(GammaSpec::Cyclic(n), raw)
}

fn dihedral_table(n_param: u32) -> GammaClassTable {
    let n = n_param as u64;
    let two_n = 2 * n;
    let mut raw = vec![
        RawClass {
            size: 1,
            element_order: 1,
            angle: RationalAngle::zero(),
            rep: ClassRep::Exponent(0),
        },
        RawClass {
            size: 1,
            element_order: 2,
            angle: RationalAngle::half(),
            rep: ClassRep::Exponent(n),
        },
    ];
    for k in 1..n {
        raw.push(RawClass {
            size: 2,
            element_order: two_n / gcd(two_n, k),
            angle: RationalAngle::new(k, two_n),
            rep: ClassRep::Exponent(k),
        });
    }
    for odd in [false, true] {
        raw.push(RawClass {
            size: n,
            element_order: 4,
            angle: RationalAngle::new(1, 4),
            rep: ClassRep::Flip(odd),
        });
    }
    GammaClassTable::from_raw(GammaSpec::BinaryDihedral(n_param), raw)
}

static TABLE_CACHE: Lazy<Mutex<HashMap<GammaSpec, Arc<GammaClassTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Shared, cached class table. Polyhedral tables cost a group closure to
/// build, so callers that repeatedly consult the same Γ go through here.
pub fn table_for(spec: GammaSpec) -> Arc<GammaClassTable> {
    let mut cache = TABLE_CACHE.lock().expect("table cache lock");
    cache
        .entry(spec)
        .or_insert_with(|| Arc::new(class_table(spec)))
        .clone()
}
