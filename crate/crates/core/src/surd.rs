//! Exact comparison of quadratic surds a + b*sqrt(r).
//!
//! The spectral-exclusion thresholds involve sqrt(p) and sqrt(3p - 5);
//! deciding whether an integer cardinality falls inside an exclusion
//! interval must not depend on floating point. A `Surd` compares exactly
//! against rationals and against other surds (of any radicand) by
//! sign-aware squaring.

use num::{Signed, Zero};
use std::cmp::Ordering;

use crate::rat::{rat_to_f64, Rat};

/// The real number `rational + coeff * sqrt(radicand)`, radicand >= 0.
/// Perfect-square radicands are folded into the rational part at
/// construction, so `coeff != 0` implies sqrt(radicand) is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    rational: Rat,
    coeff: Rat,
    radicand: u64,
}

fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

impl Surd {
    pub fn new(rational: Rat, coeff: Rat, radicand: u64) -> Self {
        let root = isqrt(radicand);
        if coeff.is_zero() || radicand == 0 {
            Surd {
                rational,
                coeff: Rat::zero(),
                radicand: 0,
            }
        } else if root * root == radicand {
            Surd {
                rational: rational + coeff * Rat::from_integer(root.into()),
                coeff: Rat::zero(),
                radicand: 0,
            }
        } else {
            Surd {
                rational,
                coeff,
                radicand,
            }
        }
    }

    pub fn from_rational(r: Rat) -> Self {
        Surd::new(r, Rat::zero(), 0)
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rational) + rat_to_f64(&self.coeff) * (self.radicand as f64).sqrt()
    }

    /// Exact sign of (self - q).
    pub fn cmp_rational(&self, q: &Rat) -> Ordering {
        // (a - q) + b*sqrt(r) vs 0
        let a = &self.rational - q;
        if self.coeff.is_zero() {
            return rat_cmp_zero(&a);
        }
        let r = Rat::from_integer(self.radicand.into());
        let b2r = &self.coeff * &self.coeff * r;
        if self.coeff.is_positive() {
            // b*sqrt(r) vs -a
            if !a.is_negative() {
                Ordering::Greater // positive irrational + nonnegative
            } else {
                // compare b^2 r vs a^2; equality impossible (irrational)
                b2r.cmp(&(&a * &a))
            }
        } else {
            // -|b|*sqrt(r) + a vs 0
            if !a.is_positive() {
                Ordering::Less
            } else {
                (&a * &a).cmp(&b2r)
            }
        }
    }

    /// Exact comparison with another surd, radicands may differ.
    pub fn cmp_surd(&self, other: &Surd) -> Ordering {
        if other.is_rational() {
            return self.cmp_rational(&other.rational);
        }
        if self.is_rational() {
            return other.cmp_rational(&self.rational).reverse();
        }
        // e + b*sqrt(r) - d*sqrt(s) vs 0
        let e = &self.rational - &other.rational;
        let b = &self.coeff;
        let d = &other.coeff;
        let r = self.radicand;
        let s = other.radicand;
        // sign of w = b*sqrt(r) - d*sqrt(s)
        let w_sign = match (b.is_positive(), d.is_positive()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (true, true) | (false, false) => {
                let lhs = b * b * Rat::from_integer(r.into());
                let rhs = d * d * Rat::from_integer(s.into());
                let mag = lhs.cmp(&rhs);
                if b.is_positive() {
                    mag
                } else {
                    mag.reverse()
                }
            }
        };
        let e_sign = rat_cmp_zero(&e);
        match (e_sign, w_sign) {
            (Ordering::Equal, w) => w,
            (e_s, Ordering::Equal) => e_s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: compare e^2 vs w^2 = b^2 r + d^2 s - 2bd*sqrt(rs)
            (e_s, _) => {
                let w_sq = Surd::new(
                    b * b * Rat::from_integer(r.into()) + d * d * Rat::from_integer(s.into()),
                    -(Rat::from_integer(2.into()) * b * d),
                    r.checked_mul(s).expect("radicand product fits u64"),
                );
                let mag = w_sq.cmp_rational(&(&e * &e)).reverse(); // e^2 vs w^2
                match mag {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => e_s, // |e| > |w|: sign of e wins
                    Ordering::Less => e_s.reverse(), // |w| > |e|: sign of w wins
                }
            }
        }
    }
}

fn rat_cmp_zero(r: &Rat) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::rat::rat_to_string;
        if self.coeff.is_zero() {
            return write!(f, "{}", rat_to_string(&self.rational));
        }
        let sign = if self.coeff.is_negative() { "-" } else { "+" };
        let mag = rat_to_string(&self.coeff.abs());
        write!(
            f,
            "{} {} {}*sqrt({})",
            rat_to_string(&self.rational),
            sign,
            mag,
            self.radicand
        )
    }
}
