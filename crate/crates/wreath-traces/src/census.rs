//! Marked-partition census of the conjugacy classes of Γ≀S_N: direct
//! enumeration, exact admissibility predicates, characteristic
//! polynomials, and allocation-free counting.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::exact::RationalAngle;
use crate::gamma::{table_for, GammaClassTable, GammaSpec};

/// Largest N accepted by the census routines.
pub const MAX_CENSUS_N: u64 = 60;
/// Largest C(Γ)·N accepted by the census routines.
pub const MAX_CENSUS_CLASSES_TIMES_N: u64 = 600;

/// A conjugacy class of Γ≀S_N: a multiset of marked cycles, stored as
/// (cycle length r, class id α) → multiplicity, keyed in canonical order
/// (r ascending, then α ascending). The weight Σ r·p recovers N.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MarkedPartition {
    parts: BTreeMap<(u64, usize), u64>,
}

impl MarkedPartition {
    /// The empty partition, the single class of Γ≀S_0.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(parts: impl IntoIterator<Item = ((u64, usize), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for ((r, alpha), count) in parts {
            if count > 0 {
                *map.entry((r, alpha)).or_insert(0) += count;
            }
        }
        MarkedPartition { parts: map }
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|(&(r, _), &p)| r * p).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Keys in canonical order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = ((u64, usize), u64)> + '_ {
        self.parts.iter().map(|(&k, &v)| (k, v))
    }

    /// Canonical text form, longest cycles first: `2^1[c2] 1^3[c0]`.
    /// The empty partition renders as `-`.
    pub fn render(&self) -> String {
        if self.parts.is_empty() {
            return "-".to_string();
        }
        let mut items: Vec<_> = self.parts.iter().collect();
        items.sort_by_key(|&(&(r, alpha), _)| (std::cmp::Reverse(r), alpha));
        items
            .iter()
            .map(|(&(r, alpha), &p)| format!("{r}^{p}[c{alpha}]"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse the canonical text form against a class table (class labels
    /// must exist). Accepts items in any order; `-` or an empty string is
    /// the empty partition.
    pub fn parse(input: &str, table: &GammaClassTable) -> Result<Self> {
        let bad = |reason: &str| Error::BadPartition {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Self::empty());
        }
        let mut parts = BTreeMap::new();
        for item in trimmed.split_whitespace() {
            let (r_str, rest) = item
                .split_once('^')
                .ok_or_else(|| bad("expected r^p[c<id>]"))?;
            let (p_str, label) = rest
                .split_once('[')
                .ok_or_else(|| bad("expected r^p[c<id>]"))?;
            let label = label
                .strip_suffix(']')
                .ok_or_else(|| bad("missing closing bracket"))?;
            let r: u64 = r_str.parse().map_err(|_| bad("cycle length must be a positive integer"))?;
            let p: u64 = p_str.parse().map_err(|_| bad("multiplicity must be a positive integer"))?;
            if r == 0 || p == 0 {
                return Err(bad("cycle length and multiplicity must be positive"));
            }
            let class = table.class_by_label(label)?;
            if parts.insert((r, class.id), p).is_some() {
                return Err(bad("duplicate (length, class) key"));
            }
        }
        Ok(MarkedPartition { parts })
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Visit every marked partition of weight n over the classes of `table`,
/// in canonical order, without materializing the full list.
pub fn for_each_marked_partition<F: FnMut(&MarkedPartition)>(
    table: &GammaClassTable,
    n: u64,
    mut visit: F,
) {
    // keys descending: longest cycles chosen first, matching partition
    // conventions; every remainder is fillable by 1-cycles, so there are
    // no dead branches.
    let class_count = table.class_count();
    let keys: Vec<(u64, usize)> = (1..=n)
        .rev()
        .flat_map(|r| (0..class_count).rev().map(move |alpha| (r, alpha)))
        .collect();
    let mut acc: Vec<((u64, usize), u64)> = Vec::new();

    fn recurse<F: FnMut(&MarkedPartition)>(
        keys: &[(u64, usize)],
        index: usize,
        remaining: u64,
        acc: &mut Vec<((u64, usize), u64)>,
        visit: &mut F,
    ) {
        if remaining == 0 {
            visit(&MarkedPartition::from_parts(acc.iter().copied()));
            return;
        }
        if index == keys.len() {
            return;
        }
        let (r, alpha) = keys[index];
        for p in (0..=remaining / r).rev() {
            if p > 0 {
                acc.push(((r, alpha), p));
            }
            recurse(keys, index + 1, remaining - p * r, acc, visit);
            if p > 0 {
                acc.pop();
            }
        }
    }

    recurse(&keys, 0, n, &mut acc, &mut visit);
}

/// All marked partitions of weight n, in canonical order. N = 0 yields
/// exactly the empty partition.
pub fn enumerate_marked_partitions(table: &GammaClassTable, n: u64) -> Vec<MarkedPartition> {
    let mut out = Vec::new();
    for_each_marked_partition(table, n, |mp| out.push(mp.clone()));
    out
}

/// A class is t-admissible iff no cycle is marked by the identity class.
pub fn is_t_admissible(mp: &MarkedPartition, table: &GammaClassTable) -> bool {
    let id = table.identity_id();
    mp.iter().all(|((_, alpha), _)| alpha != id)
}

/// A class is s-admissible iff every cycle (r, α) has α ∉ {1, −1}, or r
/// even with α = −1, or r odd with α = 1.
pub fn is_s_admissible(mp: &MarkedPartition, table: &GammaClassTable) -> bool {
    let id = table.identity_id();
    let minus = table.minus_one_id();
    mp.iter().all(|((r, alpha), _)| {
        (alpha != id && Some(alpha) != minus)
            || (r % 2 == 0 && Some(alpha) == minus)
            || (r % 2 == 1 && alpha == id)
    })
}

/// The C/T/S counts for Γ≀S_N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub gamma: GammaSpec,
    pub n: u64,
    /// Number of conjugacy classes.
    pub c: BigUint,
    /// Number of t-admissible classes = independent traces.
    pub t: BigUint,
    /// Number of s-admissible classes = independent supertraces.
    pub s: BigUint,
}

fn check_census_bounds(table: &GammaClassTable, n: u64) -> Result<()> {
    if n > MAX_CENSUS_N {
        return Err(Error::ResourceBound {
            what: "census N",
            required: n as u128,
            allowed: MAX_CENSUS_N as u128,
        });
    }
    let load = table.class_count() as u64 * n;
    if load > MAX_CENSUS_CLASSES_TIMES_N {
        return Err(Error::ResourceBound {
            what: "census C(Γ)·N",
            required: load as u128,
            allowed: MAX_CENSUS_CLASSES_TIMES_N as u128,
        });
    }
    Ok(())
}

/// Multiset coefficient C(colors + p − 1, p): ways to pick p cycles of a
/// fixed length from `colors` admissible markings.
fn multichoose(colors: u64, p: u64) -> BigUint {
    let mut value = BigUint::one();
    for i in 0..p {
        // C(c+i, i+1) = C(c+i−1, i)·(c+i)/(i+1), division exact
        value = value * BigUint::from(colors + i) / BigUint::from(i + 1);
    }
    value
}

/// Count colored partitions of n where cycles of length r may carry
/// `colors(r)` distinct marks, without materializing them.
fn count_colored(n: u64, colors: impl Fn(u64) -> u64) -> BigUint {
    let size = n as usize + 1;
    let mut counts = vec![BigUint::zero(); size];
    counts[0] = BigUint::one();
    for r in 1..=n {
        let palette = colors(r);
        let mut next = vec![BigUint::zero(); size];
        for m in 0..size as u64 {
            let mut total = BigUint::zero();
            for p in 0..=m / r {
                let ways = multichoose(palette, p);
                if !ways.is_zero() {
                    total += ways * &counts[(m - p * r) as usize];
                }
            }
            next[m as usize] = total;
        }
        counts = next;
    }
    counts[n as usize].clone()
}

/// C, T, S for Γ≀S_N by counting marked partitions directly: per cycle
/// length the admissible marks follow the per-class predicates, and
/// admissibility of a partition is the conjunction over its cycles.
pub fn census_counts_for_table(table: &GammaClassTable, n: u64) -> Result<CensusResult> {
    check_census_bounds(table, n)?;
    let class_count = table.class_count() as u64;
    let c = count_colored(n, |_| class_count);
    let t = count_colored(n, |r| table.admissible_counts(r).0);
    let s = count_colored(n, |r| table.admissible_counts(r).1);
    Ok(CensusResult {
        gamma: table.spec,
        n,
        c,
        t,
        s,
    })
}

/// C, T, S for Γ≀S_N. N = 0 yields C = T = S = 1.
pub fn census_counts(spec: GammaSpec, n: u64) -> Result<CensusResult> {
    census_counts_for_table(&table_for(spec), n)
}

/// Reference implementation by exhaustive enumeration plus predicates;
/// used to cross-check the counting path at small N.
pub fn census_counts_by_enumeration(
    table: &GammaClassTable,
    n: u64,
) -> (BigUint, BigUint, BigUint) {
    let mut c = BigUint::zero();
    let mut t = BigUint::zero();
    let mut s = BigUint::zero();
    for_each_marked_partition(table, n, |mp| {
        c += 1u32;
        if is_t_admissible(mp, table) {
            t += 1u32;
        }
        if is_s_admissible(mp, table) {
            s += 1u32;
        }
    });
    (c, t, s)
}

/// One factor (λ^{2r} − 2cos(2πk/m)·λ^r + 1)^multiplicity of the
/// characteristic polynomial of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyFactor {
    pub angle: RationalAngle,
    pub cycle_len: u64,
    pub multiplicity: u64,
}

/// Characteristic polynomial of a class in factored form; total degree 2N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyFactors {
    pub factors: Vec<CharPolyFactor>,
}

impl CharPolyFactors {
    pub fn degree(&self) -> u64 {
        2 * self
            .factors
            .iter()
            .map(|f| f.cycle_len * f.multiplicity)
            .sum::<u64>()
    }

    /// Numeric coefficient vector of the expanded polynomial, constant
    /// term first. Exact decisions never use this; it exists for output
    /// and for palindromicity checks.
    pub fn expand_numeric(&self) -> Vec<f64> {
        let mut poly = vec![1.0];
        for factor in &self.factors {
            let r = factor.cycle_len as usize;
            let mut base = vec![0.0; 2 * r + 1];
            base[0] = 1.0;
            base[r] = -2.0 * factor.angle.cos_f64();
            base[2 * r] = 1.0;
            for _ in 0..factor.multiplicity {
                poly = convolve(&poly, &base);
            }
        }
        poly
    }
}

fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Factored characteristic polynomial of the class labelled by `mp`: one
/// factor per (r, α) key, det(g_α − λ^r) = λ^{2r} − 2cos(2πk/m)λ^r + 1.
pub fn char_poly(mp: &MarkedPartition, table: &GammaClassTable) -> CharPolyFactors {
    let factors = mp
        .iter()
        .map(|((r, alpha), p)| CharPolyFactor {
            angle: table.class(alpha).angle,
            cycle_len: r,
            multiplicity: p,
        })
        .collect();
    CharPolyFactors { factors }
}

/// Evaluation side of the admissibility test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Exact zero test and numeric value of the characteristic polynomial at
/// λ = ±1. A factor vanishes at +1 iff its angle is 0, and at −1 iff the
/// cycle is even with angle 0 or odd with angle 1/2.
pub fn char_poly_eval_signed_one(factors: &CharPolyFactors, sign: Sign) -> (bool, f64) {
    let mut is_zero = false;
    let mut value = 1.0;
    for f in &factors.factors {
        let zero_here = match sign {
            Sign::Plus => f.angle.is_zero(),
            Sign::Minus => {
                (f.cycle_len % 2 == 0 && f.angle.is_zero())
                    || (f.cycle_len % 2 == 1 && f.angle.is_half())
            }
        };
        is_zero |= zero_here;
        let lambda_r = match sign {
            Sign::Plus => 1.0,
            Sign::Minus => {
                if f.cycle_len % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
        };
        let base: f64 = 2.0 - 2.0 * f.angle.cos_f64() * lambda_r;
        value *= base.powi(f.multiplicity as i32);
    }
    if is_zero {
        value = 0.0;
    }
    (is_zero, value)
}

/// Componentwise product rule for (T, S) under direct products of groups.
pub fn product_counts(a: &(BigUint, BigUint), b: &(BigUint, BigUint)) -> (BigUint, BigUint) {
    (&a.0 * &b.0, &a.1 * &b.1)
}

/// Census of symplectic reflection classes in Γ≀S_N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReflectionCensus {
    /// Conjugacy classes of reflections: C(Γ)−1 diagonal classes plus,
    /// for N ≥ 2, the single class of all transposition-type reflections.
    pub reflection_classes: u64,
    /// Independent coupling parameters, one per reflection class.
    pub parameter_count: u64,
    /// True at N = 1, where no transposition-type reflections exist and
    /// the parameter count covers diagonal classes only.
    pub degenerate_n1: bool,
}

/// Reflection classes and parameter count for Γ≀S_N, N ≥ 1. For N ≥ 2
/// the transposition-type reflections form one extra class, giving C(Γ)
/// parameters in total; at N = 1 only the C(Γ)−1 diagonal classes exist.
pub fn reflection_census(table: &GammaClassTable, n: u64) -> ReflectionCensus {
    assert!(n >= 1, "reflection census requires N >= 1");
    let c = table.class_count() as u64;
    if n >= 2 {
        ReflectionCensus {
            reflection_classes: c,
            parameter_count: c,
            degenerate_n1: false,
        }
    } else {
        ReflectionCensus {
            reflection_classes: c - 1,
            parameter_count: c - 1,
            degenerate_n1: true,
        }
    }
}
