//! Truncated power series over big integers: the Euler-product generating
//! functions whose coefficients are the C/T/S counts.

use num::{BigUint, One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gamma::{table_for, GammaSpec};

/// A formal power series truncated at degree n_max, with exact
/// big-integer coefficients indexed 0..=n_max.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigUint>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The multiplicative unit 1 + 0x + …
    pub fn one(n_max: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); n_max + 1];
        coeffs[0] = BigUint::one();
        TruncatedSeries { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Exact Cauchy product truncated at the common n_max.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::SeriesLength {
                left: self.n_max(),
                right: other.n_max(),
            });
        }
        let n = self.coeffs.len();
        let mut out = vec![BigUint::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiply in place by 1/(1−x^i), a stride-i running sum.
    fn mul_geometric(&mut self, i: usize) {
        for m in i..self.coeffs.len() {
            let lower = self.coeffs[m - i].clone();
            self.coeffs[m] += lower;
        }
    }

    /// Multiply in place by (1/(1−x^i))^power using the sparse expansion
    /// Σ_p C(power+p−1, p) x^{ip}; cost is independent of the exponent.
    fn mul_geometric_pow(&mut self, i: usize, power: u64) {
        if power == 0 {
            return;
        }
        if power == 1 {
            self.mul_geometric(i);
            return;
        }
        let n = self.coeffs.len();
        let mut weights = vec![BigUint::one()];
        let mut w = BigUint::one();
        let mut p = 1u64;
        while p as usize * i < n {
            w = w * BigUint::from(power + p - 1) / BigUint::from(p);
            weights.push(w.clone());
            p += 1;
        }
        let mut out = vec![BigUint::zero(); n];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (p, weight) in weights.iter().enumerate() {
                let target = m + p * i;
                if target >= n {
                    break;
                }
                out[target] += c * weight;
            }
        }
        self.coeffs = out;
    }

    /// Render as a JSON array; coefficients above 2⁵³ become decimal
    /// strings so consumers never lose precision.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(biguint_to_json).collect())
    }
}

/// JSON encoding of a big integer: a plain number while exactly
/// representable in an f64 (≤ 2⁵³), a decimal string beyond.
pub fn biguint_to_json(value: &BigUint) -> Value {
    const MAX_SAFE: u64 = 1 << 53;
    match u64::try_from(value) {
        Ok(small) if small <= MAX_SAFE => json!(small),
        _ => json!(value.to_string()),
    }
}

/// f_i(x) = 1 + x^i + x^{2i} + … truncated at n_max.
pub fn geometric_factor(i: u64, n_max: usize) -> TruncatedSeries {
    assert!(i >= 1, "cycle length must be positive");
    let mut coeffs = vec![BigUint::zero(); n_max + 1];
    let mut m = 0usize;
    while m <= n_max {
        coeffs[m] = BigUint::one();
        m += i as usize;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// An eventually-constant assignment of color counts n_r to cycle
/// lengths r: explicit values for r = 1..=prefix.len(), then `tail` for
/// every larger r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSpec {
    pub prefix: Vec<u64>,
    pub tail: u64,
}

impl ColorSpec {
    pub fn constant(tail: u64) -> Self {
        ColorSpec {
            prefix: Vec::new(),
            tail,
        }
    }

    pub fn color_count(&self, r: u64) -> u64 {
        *self
            .prefix
            .get(r as usize - 1)
            .unwrap_or(&self.tail)
    }

    /// Pointwise sum, the input of the product rule F(n+m) = F(n)·F(m).
    pub fn add(&self, other: &ColorSpec) -> ColorSpec {
        let len = self.prefix.len().max(other.prefix.len());
        let prefix = (1..=len as u64)
            .map(|r| self.color_count(r) + other.color_count(r))
            .collect();
        ColorSpec {
            prefix,
            tail: self.tail + other.tail,
        }
    }
}

/// Generating function of colored partitions: ∏_{i≥1} f_i^{n_i} with
/// n_i from the color spec, truncated at n_max.
pub fn colored_generating_function(colors: &ColorSpec, n_max: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(n_max);
    for i in 1..=n_max {
        series.mul_geometric_pow(i, colors.color_count(i as u64));
    }
    series
}

/// The Euler function Ψ(x) = ∏ 1/(1−x^i); coefficients are the partition
/// numbers.
pub fn euler_psi(n_max: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(n_max);
    for i in 1..=n_max {
        series.mul_geometric(i);
    }
    series
}

/// Φ(x) = ∏ 1/(1−x^{2k+1}); coefficients count partitions into odd parts.
pub fn odd_phi(n_max: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(n_max);
    let mut i = 1;
    while i <= n_max {
        series.mul_geometric(i);
        i += 2;
    }
    series
}

/// Ψ^exponent by repeated squaring of truncated series.
pub fn psi_pow(exponent: u64, n_max: usize) -> TruncatedSeries {
    let mut base = euler_psi(n_max);
    let mut result = TruncatedSeries::one(n_max);
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).expect("equal truncation");
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).expect("equal truncation");
        }
    }
    result
}

/// t(Γ, x) = Ψ^{C(Γ)−1}: coefficient N is the number of independent
/// traces on the algebra of Γ≀S_N.
pub fn trace_series(spec: GammaSpec, n_max: usize) -> TruncatedSeries {
    let table = table_for(spec);
    psi_pow(table.class_count() as u64 - 1, n_max)
}

/// s(Γ, x): Ψ^{C−1} when −1 ∈ Γ, and Ψ^{C−1}·Φ otherwise.
pub fn supertrace_series(spec: GammaSpec, n_max: usize) -> TruncatedSeries {
    let table = table_for(spec);
    let base = psi_pow(table.class_count() as u64 - 1, n_max);
    if table.contains_minus_one() {
        base
    } else {
        base.mul(&odd_phi(n_max)).expect("equal truncation")
    }
}

/// c(Γ, x) = Ψ^{C(Γ)}: coefficient N counts the conjugacy classes of Γ≀S_N.
pub fn class_series(spec: GammaSpec, n_max: usize) -> TruncatedSeries {
    let table = table_for(spec);
    psi_pow(table.class_count() as u64, n_max)
}
