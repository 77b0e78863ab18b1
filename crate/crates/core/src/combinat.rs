//! Integer partitions, bipartitions and characters of finite cyclic groups.
//!
//! Every listing produced here is in a fixed canonical order so that all
//! downstream tables are deterministic:
//!
//! * partitions of `n` are listed lexicographically decreasing,
//!   `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`;
//! * bipartitions are listed by decreasing size of the first component,
//!   then by the canonical order of each component;
//! * characters of `Z/dZ` are listed by increasing exponent.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A weakly decreasing sequence of positive integers. The empty partition is
/// valid and stands for the partition of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zeros before building the partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }
}

/// Canonical order: lexicographically larger sequences come first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .first
            .size()
            .cmp(&self.first.size())
            .then_with(|| self.first.cmp(&other.first))
            .then_with(|| self.second.cmp(&other.second))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

/// A character of `Z/dZ`, recorded as the exponent `k` it applies to a fixed
/// generator: `ζ_d ↦ exp(2πi k/d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicCharacter {
    modulus: u32,
    exponent: u32,
}

impl CyclicCharacter {
    pub fn new(modulus: u32, exponent: u32) -> Result<Self> {
        if modulus == 0 || exponent >= modulus {
            return Err(Error::InvalidCharacter { modulus, exponent });
        }
        Ok(Self { modulus, exponent })
    }

    pub fn trivial(modulus: u32) -> Result<Self> {
        Self::new(modulus, 0)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn order(&self) -> u32 {
        self.modulus / gcd(self.modulus, self.exponent)
    }

    /// The unit `u ∈ (Z/order)^×` with `exponent = (modulus/order)·u`.
    ///
    /// Two characters on different cyclic groups with the same order and the
    /// same unit pull back to the same character of any cyclic group mapping
    /// onto both by `ζ ↦ ζ`.
    pub fn unit(&self) -> u32 {
        self.exponent / (self.modulus / self.order())
    }

    /// The order-`order` character of `Z/modulus` whose unit is `unit`.
    pub fn from_unit(modulus: u32, order: u32, unit: u32) -> Result<Self> {
        if order == 0 || !modulus.is_multiple_of(order) || unit >= order || gcd(unit, order) != 1 {
            return Err(Error::InvalidCharacter {
                modulus,
                exponent: unit,
            });
        }
        Self::new(modulus, (modulus / order) * unit)
    }
}

impl fmt::Display for CyclicCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.exponent, self.modulus)
    }
}

/// The conjugate partition.
pub fn transpose(p: &Partition) -> Partition {
    let width = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|j| p.parts.iter().filter(|&&x| x >= j).count() as u32)
        .collect();
    Partition { parts }
}

/// All partitions of `n` in canonical (lexicographically decreasing) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n` in canonical order.
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let seconds = partitions_of(n - a);
        for first in partitions_of(a) {
            for second in &seconds {
                out.push(Bipartition::new(first.clone(), second.clone()));
            }
        }
    }
    out
}

/// The characters of `Z/dZ` of exact order `m`, by increasing exponent.
/// Empty unless `m | d`.
pub fn characters_of_order(d: u32, m: u32) -> Vec<CyclicCharacter> {
    if d == 0 || m == 0 || !d.is_multiple_of(m) {
        return Vec::new();
    }
    (0..d)
        .map(|k| CyclicCharacter {
            modulus: d,
            exponent: k,
        })
        .filter(|c| c.order() == m)
        .collect()
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(m: u32) -> u32 {
    assert!(m >= 1, "euler_phi is defined for m >= 1");
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
