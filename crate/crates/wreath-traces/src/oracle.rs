//! Element-level brute force over Γ≀S_N for tiny N: enumerate every
//! element, partition into conjugacy classes by orbit expansion, and test
//! eigenvalues ±1 on explicit numeric 2N×2N matrices.

use std::collections::HashMap;

use num::complex::Complex64;

use crate::census::MarkedPartition;
use crate::error::{Error, Result};
use crate::gamma::{build_group, classify_group, GammaClassTable, GammaElements, GammaGroup, GammaSpec};

/// Default cap on |Γ|^N · N!, overridable via `WREATH_ORACLE_CAP`.
pub const DEFAULT_ORACLE_CAP: u64 = 50_000;

/// Determinant magnitude below which λ = ±1 counts as an eigenvalue. The
/// nearest distinct eigenvalue on the unit circle is ≥ |1 − e^{2πi/(120N)}|
/// away, so the determinant is either 0 or far above this at desk scale.
pub const DEFAULT_EIGEN_TOLERANCE: f64 = 1e-6;

/// An element D·σ of Γ≀S_N: block-diagonal part `d` (indices into the
/// group's element list) and block permutation `sigma` (sigma[i] is the
/// image of slot i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    pub d: Vec<u32>,
    pub sigma: Vec<u32>,
}

impl WreathElement {
    pub fn identity(group: &GammaGroup, n: usize) -> Self {
        WreathElement {
            d: vec![group.identity as u32; n],
            sigma: (0..n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }
}

/// (D₁σ₁)(D₂σ₂) = D₃σ₃ with σ₃ = σ₁σ₂ and D₃ = D₁·σ₁(D₂): slot k of D₃
/// is d₁_k · d₂_{σ₁⁻¹(k)}.
pub fn wreath_mul(a: &WreathElement, b: &WreathElement, group: &GammaGroup) -> WreathElement {
    let n = a.n();
    debug_assert_eq!(n, b.n());
    let mut sigma_inv_a = vec![0u32; n];
    for (slot, &image) in a.sigma.iter().enumerate() {
        sigma_inv_a[image as usize] = slot as u32;
    }
    let d = (0..n)
        .map(|k| {
            let from = sigma_inv_a[k] as usize;
            group.mul(a.d[k] as usize, b.d[from] as usize) as u32
        })
        .collect();
    let sigma = (0..n).map(|k| a.sigma[b.sigma[k] as usize]).collect();
    WreathElement { d, sigma }
}

pub fn wreath_inv(e: &WreathElement, group: &GammaGroup) -> WreathElement {
    let n = e.n();
    let mut sigma = vec![0u32; n];
    for (slot, &image) in e.sigma.iter().enumerate() {
        sigma[image as usize] = slot as u32;
    }
    let d = (0..n)
        .map(|k| group.inv(e.d[e.sigma[k] as usize] as usize) as u32)
        .collect();
    WreathElement { d, sigma }
}

fn wreath_size(group_order: u64, n: u64) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..n {
        size = size.saturating_mul(group_order as u128);
    }
    for k in 1..=n as u128 {
        size = size.saturating_mul(k);
    }
    size
}

/// Every element of Γ≀S_N, exactly once, refusing sizes above `cap`.
pub fn enumerate_wreath(group: &GammaGroup, n: usize, cap: u64) -> Result<Vec<WreathElement>> {
    let total = wreath_size(group.order() as u64, n as u64);
    if total > cap as u128 {
        return Err(Error::ResourceBound {
            what: "wreath-product enumeration",
            required: total,
            allowed: cap as u128,
        });
    }
    let mut permutations = Vec::new();
    let mut current: Vec<u32> = (0..n as u32).collect();
    permute(&mut current, 0, &mut permutations);

    let order = group.order() as u32;
    let mut elements = Vec::with_capacity(total as usize);
    let mut d = vec![0u32; n];
    loop {
        for sigma in &permutations {
            elements.push(WreathElement {
                d: d.clone(),
                sigma: sigma.clone(),
            });
        }
        // mixed-radix increment of d
        let mut slot = 0;
        loop {
            if slot == n {
                return Ok(elements);
            }
            d[slot] += 1;
            if d[slot] < order {
                break;
            }
            d[slot] = 0;
            slot += 1;
        }
    }
}

fn permute(values: &mut Vec<u32>, start: usize, out: &mut Vec<Vec<u32>>) {
    if start == values.len() {
        out.push(values.clone());
        return;
    }
    for i in start..values.len() {
        values.swap(start, i);
        permute(values, start + 1, out);
        values.swap(start, i);
    }
}

/// Conjugacy classes as index lists into `elements`, by orbit expansion:
/// for each unseen element, conjugate by the whole group.
pub fn conjugacy_classes_brute(
    elements: &[WreathElement],
    group: &GammaGroup,
) -> Vec<Vec<usize>> {
    let index: HashMap<&WreathElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let inverses: Vec<WreathElement> = elements.iter().map(|e| wreath_inv(e, group)).collect();
    let mut seen = vec![false; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        for g in 0..elements.len() {
            let conj = wreath_mul(
                &wreath_mul(&elements[g], &elements[start], group),
                &inverses[g],
                group,
            );
            let id = index[&conj];
            if !seen[id] {
                seen[id] = true;
                orbit.push(id);
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    classes
}

/// Dense complex matrix of size 2N×2N, row-major.
pub struct NumericMatrix {
    pub size: usize,
    pub data: Vec<Complex64>,
}

impl NumericMatrix {
    fn zero(size: usize) -> Self {
        NumericMatrix {
            size,
            data: vec![Complex64::new(0.0, 0.0); size * size],
        }
    }

    fn at(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.size + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.size + col] = value;
    }

    /// ‖M·M† − I‖∞; the blocks are unitary, so this is pure rounding.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.size;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut sum = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    sum += self.at(i, k) * self.at(j, k).conj();
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((sum - expected).norm());
            }
        }
        worst
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.size;
        if n == 0 {
            return Complex64::new(1.0, 0.0);
        }
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r1, &r2| {
                    a[r1 * n + col]
                        .norm()
                        .partial_cmp(&a[r2 * n + col].norm())
                        .expect("finite entries")
                })
                .expect("nonempty range");
            let pivot = a[pivot_row * n + col];
            if pivot.norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot_row != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot_row * n + k);
                }
                det = -det;
            }
            det *= pivot;
            for row in col + 1..n {
                let factor = a[row * n + col] / pivot;
                if factor.norm() == 0.0 {
                    continue;
                }
                for k in col..n {
                    let sub = factor * a[col * n + k];
                    a[row * n + k] -= sub;
                }
            }
        }
        det
    }
}

/// Numeric 2×2 block of a Γ element: the SU(2) matrix of a quaternion,
/// a real rotation for cyclic groups, and for binary dihedral groups the
/// diagonal rotation diag(e^{iπk/n}, e^{−iπk/n}) with b ↦ [[0,1],[−1,0]]
/// (no real 2×2 realization exists — finite subgroups of SL(2,R) are
/// cyclic — and any conjugate convention yields identical counts).
fn element_block(group: &GammaGroup, element: usize) -> [[Complex64; 2]; 2] {
    let re = |x: f64| Complex64::new(x, 0.0);
    match &group.elements {
        GammaElements::Cyclic { n } => {
            let theta = std::f64::consts::TAU * element as f64 / *n as f64;
            let (sin, cos) = theta.sin_cos();
            [[re(cos), re(sin)], [re(-sin), re(cos)]]
        }
        GammaElements::Dihedral { n } => {
            let two_n = 2 * *n as usize;
            let (k, e) = (element % two_n, element / two_n);
            let theta = std::f64::consts::PI * k as f64 / *n as f64;
            let u = Complex64::from_polar(1.0, theta);
            let rot = [[u, re(0.0)], [re(0.0), u.conj()]];
            if e == 0 {
                rot
            } else {
                // rot · [[0,1],[−1,0]]
                [[-rot[0][1], rot[0][0]], [-rot[1][1], rot[1][0]]]
            }
        }
        GammaElements::Quaternions(q) => {
            let q = &q[element];
            let (w, x, y, z) = (q.w.to_f64(), q.x.to_f64(), q.y.to_f64(), q.z.to_f64());
            [
                [Complex64::new(w, x), Complex64::new(y, z)],
                [Complex64::new(-y, z), Complex64::new(w, -x)],
            ]
        }
    }
}

/// The 2N×2N matrix of D·σ: block (k, l) is the block of d_k when σ maps
/// slot l to k, zero otherwise.
pub fn to_matrix(e: &WreathElement, group: &GammaGroup) -> NumericMatrix {
    let n = e.n();
    let mut m = NumericMatrix::zero(2 * n);
    for l in 0..n {
        let k = e.sigma[l] as usize;
        let block = element_block(group, e.d[k] as usize);
        for (bi, row) in block.iter().enumerate() {
            for (bj, &value) in row.iter().enumerate() {
                m.set(2 * k + bi, 2 * l + bj, value);
            }
        }
    }
    debug_assert!(m.unitarity_defect() < 1e-9);
    m
}

/// True iff det(M − sign·I) vanishes within the tolerance.
pub fn has_eigenvalue_signed_one(m: &NumericMatrix, sign: f64, tolerance: f64) -> bool {
    let mut shifted = NumericMatrix {
        size: m.size,
        data: m.data.clone(),
    };
    for i in 0..m.size {
        let diag = shifted.at(i, i) - Complex64::new(sign, 0.0);
        shifted.set(i, i, diag);
    }
    shifted.det().norm() < tolerance
}

/// The brute-force verifier bundle: a concrete group, its canonical class
/// table, and the element → class-id map the classifier needs.
pub struct OracleContext {
    pub group: GammaGroup,
    pub table: GammaClassTable,
    class_of: Vec<usize>,
}

impl OracleContext {
    pub fn new(spec: GammaSpec) -> Result<Self> {
        let group = build_group(spec)?;
        let (table, class_of) = classify_group(&group);
        Ok(OracleContext {
            group,
            table,
            class_of,
        })
    }

    pub fn class_of_element(&self, index: usize) -> usize {
        self.class_of[index]
    }

    /// Marked partition of an element: for each cycle of σ, the Γ-class
    /// of the product of the d-entries along the cycle (traversed against
    /// σ so that slot products telescope under conjugation).
    pub fn classify_element(&self, e: &WreathElement) -> MarkedPartition {
        let n = e.n();
        let mut sigma_inv = vec![0usize; n];
        for (slot, &image) in e.sigma.iter().enumerate() {
            sigma_inv[image as usize] = slot;
        }
        let mut visited = vec![false; n];
        let mut parts: Vec<((u64, usize), u64)> = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut product = e.d[start] as usize;
            let mut len = 1u64;
            visited[start] = true;
            let mut slot = sigma_inv[start];
            while slot != start {
                visited[slot] = true;
                product = self.group.mul(product, e.d[slot] as usize);
                len += 1;
                slot = sigma_inv[slot];
            }
            parts.push(((len, self.class_of[product]), 1));
        }
        MarkedPartition::from_parts(parts)
    }

    /// (C, T, S) by explicit matrices: per conjugacy class, test whether
    /// a representative has eigenvalue +1 / −1.
    pub fn counts(&self, n: usize, cap: u64, tolerance: f64) -> Result<(u64, u64, u64)> {
        let elements = enumerate_wreath(&self.group, n, cap)?;
        let classes = conjugacy_classes_brute(&elements, &self.group);
        let mut t = 0;
        let mut s = 0;
        for class in &classes {
            let matrix = to_matrix(&elements[class[0]], &self.group);
            if !has_eigenvalue_signed_one(&matrix, 1.0, tolerance) {
                t += 1;
            }
            if !has_eigenvalue_signed_one(&matrix, -1.0, tolerance) {
                s += 1;
            }
        }
        Ok((classes.len() as u64, t, s))
    }
}

/// Oracle element cap: `WREATH_ORACLE_CAP` when set, the default otherwise.
pub fn oracle_cap_from_env() -> u64 {
    std::env::var("WREATH_ORACLE_CAP")
        .ok()
        .and_then(|raw| raw.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}
