//! Weight distributions and the MacWilliams transform.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Counts `A_0..A_n` of codewords by weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub counts: Vec<u128>,
    pub exact: bool,
}

impl WeightDistribution {
    pub fn exact(counts: Vec<u128>) -> Self {
        WeightDistribution { counts, exact: true }
    }

    pub fn len(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }

    /// Distribution of a direct product of codes.
    pub fn convolve(&self, other: &WeightDistribution) -> WeightDistribution {
        let mut out = vec![0u128; self.counts.len() + other.counts.len() - 1];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        WeightDistribution { counts: out, exact: self.exact && other.exact }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Krawtchouk polynomial `K_j(i)` for alphabet size `q` and length `n`.
pub fn krawtchouk(n: usize, q: u64, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let qm1 = BigInt::from(q - 1);
    for s in 0..=j {
        let term = binomial(i, s) * binomial(n - i, j - s) * num_traits::pow(qm1.clone(), j - s);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Distribution of the dual of a code of length `n`, size `q^k` over an
/// alphabet of size `q`, from the code's distribution.
pub fn macwilliams(w: &WeightDistribution, n: usize, k: usize, q: u64) -> Result<WeightDistribution> {
    macwilliams_sized(w, n, num_traits::pow(BigInt::from(q), k), q)
}

/// As [`macwilliams`], for a code of `size` words that need not be a power of `q`.
pub(crate) fn macwilliams_sized(w: &WeightDistribution, n: usize, size: BigInt, q: u64) -> Result<WeightDistribution> {
    if w.counts.len() != n + 1 || !w.exact {
        return Err(Error::NonIntegralResult);
    }
    let total: BigInt = w.counts.iter().map(|&c| BigInt::from(c)).sum();
    if total != size {
        return Err(Error::NonIntegralResult);
    }
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &a) in w.counts.iter().enumerate() {
            if a != 0 {
                acc += BigInt::from(a) * krawtchouk(n, q, j, i);
            }
        }
        if (&acc % &size) != BigInt::zero() || acc < BigInt::zero() {
            return Err(Error::NonIntegralResult);
        }
        out.push((acc / &size).to_u128().ok_or(Error::NonIntegralResult)?);
    }
    Ok(WeightDistribution::exact(out))
}
