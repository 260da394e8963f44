//! The modulus p. Primality is checked once at construction; everything
//! downstream can then rely on Z_p being a field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A verified prime modulus. The intended range is small odd primes
/// (p <= 13 for the exhaustive tooling); p = 2 is permitted for the
/// search and testing paths.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Prime(p))
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn us(self) -> usize {
        self.0 as usize
    }

    /// |Z_p^3| = p^3.
    pub fn group_order(self) -> usize {
        self.us().pow(3)
    }

    /// |PG(2,p)| = p^2 + p + 1.
    pub fn plane_order(self) -> usize {
        self.us() * self.us() + self.us() + 1
    }

    /// Multiplicative inverse mod p for a != 0.
    pub fn inverse(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        mod_pow(a % self.0, self.0 - 2, self.0)
    }
}

impl std::fmt::Debug for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u32, mut exp: u32, m: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64 % m as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u64;
        }
        b = b * b % m as u64;
        exp >>= 1;
    }
    base = acc as u32;
    base
}
