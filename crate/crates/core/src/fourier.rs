//! Characters, Fourier transforms, and exact zero-set computation on Z_p^3.
//!
//! Conventions: zeta_p = e^{+2*pi*i/p}, the character attached to x is
//! xi_x(y) = zeta_p^{<x,y>}, and the transform is
//!
//!   f^(x) = sum_y f(y) * zeta_p^{-<x,y>},
//!
//! with inversion f(x) = (1/p^3) * sum_y f^(y) * zeta_p^{+<x,y>}.
//!
//! A character sum of a rational-valued function collapses to the level
//! sums over the p parallel planes orthogonal to the evaluation direction;
//! the sum is itself rational exactly when all nonzero levels agree (the
//! only rational points of the cyclotomic lattice), and it vanishes exactly
//! when *all* levels agree. Zero sets are therefore decided purely on
//! integer level counts; floating point never enters that path.

use num::complex::Complex64;
use num::Zero;

use crate::error::{Error, Result};
use crate::group::{GroupPoint, GroupSet};
use crate::prime::Prime;
use crate::projective::{ProjPoint, ProjSet};
use crate::rat::{rat_int, rat_to_f64, Rat};

/// Absolute tolerance for the floating cross-check path (sums of at most
/// p^3 unit-modulus terms at p <= 13 stay well inside this).
pub const FLOAT_TOL: f64 = 1e-9;

/// A single function value: exact rational where the arithmetic allows it,
/// complex floating point otherwise.
#[derive(Clone, Debug)]
pub enum Value {
    Rational(Rat),
    Complex(Complex64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Rational(Rat::zero())
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Value::Rational(r) => Some(r),
            Value::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Value::Rational(r) => Complex64::new(rat_to_f64(r), 0.0),
            Value::Complex(z) => *z,
        }
    }

    pub fn abs_squared_f64(&self) -> f64 {
        self.to_complex().norm_sqr()
    }

    pub fn approx_eq(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => a == b,
            _ => (self.to_complex() - other.to_complex()).norm() <= tol,
        }
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            _ => Value::Complex(self.to_complex() * other.to_complex()),
        }
    }
}

/// A function Z_p^3 -> C, stored densely in group-index order.
#[derive(Clone, Debug)]
pub struct GroupFunction {
    p: Prime,
    values: Vec<Value>,
}

impl GroupFunction {
    pub fn zero(p: Prime) -> Self {
        GroupFunction {
            p,
            values: vec![Value::zero(); p.group_order()],
        }
    }

    pub fn constant(p: Prime, v: Rat) -> Self {
        GroupFunction {
            p,
            values: vec![Value::Rational(v); p.group_order()],
        }
    }

    /// The point mass at x.
    pub fn delta(p: Prime, x: &GroupPoint) -> Self {
        let mut f = GroupFunction::zero(p);
        f.values[x.index(p)] = Value::Rational(rat_int(1));
        f
    }

    pub fn indicator(a: &GroupSet) -> Self {
        let p = a.prime();
        let mut f = GroupFunction::zero(p);
        for x in a.iter() {
            f.values[x.index(p)] = Value::Rational(rat_int(1));
        }
        f
    }

    pub fn from_rational_values(p: Prime, values: Vec<Rat>) -> Self {
        assert_eq!(values.len(), p.group_order());
        GroupFunction {
            p,
            values: values.into_iter().map(Value::Rational).collect(),
        }
    }

    pub fn from_complex_values(p: Prime, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), p.group_order());
        GroupFunction {
            p,
            values: values.into_iter().map(Value::Complex).collect(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn value(&self, x: &GroupPoint) -> &Value {
        &self.values[x.index(self.p)]
    }

    pub fn value_at_index(&self, i: usize) -> &Value {
        &self.values[i]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// All values as exact rationals, if the whole function lives on the
    /// exact path.
    pub fn rational_values(&self) -> Option<Vec<Rat>> {
        self.values
            .iter()
            .map(|v| v.as_rational().cloned())
            .collect()
    }

    pub fn is_even(&self) -> bool {
        let p = self.p;
        (0..p.group_order()).all(|i| {
            let neg = GroupPoint::from_index(p, i).neg(p).index(p);
            self.values[i].approx_eq(&self.values[neg], FLOAT_TOL)
        })
    }

    pub fn approx_eq(&self, other: &GroupFunction, tol: f64) -> bool {
        self.p == other.p
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// f^(x) = sum_y f(y) zeta^{-<x,y>}. Rational inputs take the exact
    /// path pointwise: the value stays an exact rational at every x where
    /// the nonzero character levels agree (in particular everywhere, for
    /// balanced functions), and falls back to complex floats elsewhere.
    pub fn fourier_transform(&self) -> GroupFunction {
        self.transform(true)
    }

    /// Inverse transform; exact on the rational path, so the round trip
    /// through `fourier_transform` is the identity there.
    pub fn inverse_transform(&self) -> GroupFunction {
        self.transform(false)
    }

    fn transform(&self, forward: bool) -> GroupFunction {
        let p = self.p;
        let n = p.group_order();
        let order = rat_int(n as i64);
        let values = if let Some(rats) = self.rational_values() {
            (0..n)
                .map(|xi| {
                    let x = GroupPoint::from_index(p, xi);
                    let v = exact_character_sum(p, &rats, &x, forward);
                    if forward {
                        v
                    } else {
                        match v {
                            Value::Rational(r) => Value::Rational(r / &order),
                            Value::Complex(z) => Value::Complex(z / n as f64),
                        }
                    }
                })
                .collect()
        } else {
            let vals: Vec<Complex64> = self.values.iter().map(Value::to_complex).collect();
            let zeta = roots_of_unity(p);
            (0..n)
                .map(|xi| {
                    let x = GroupPoint::from_index(p, xi);
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (yi, v) in vals.iter().enumerate() {
                        let y = GroupPoint::from_index(p, yi);
                        let k = exponent(p, &x, &y, forward);
                        acc += v * zeta[k];
                    }
                    if forward {
                        Value::Complex(acc)
                    } else {
                        Value::Complex(acc / n as f64)
                    }
                })
                .collect()
        };
        GroupFunction { p, values }
    }

    /// (f*g)(x) = sum_y f(y) g(x-y); exact when both factors are rational.
    pub fn convolve(&self, other: &GroupFunction) -> Result<GroupFunction> {
        if self.p != other.p {
            return Err(Error::MismatchedModulus(self.p.value(), other.p.value()));
        }
        let p = self.p;
        let n = p.group_order();
        let values = match (self.rational_values(), other.rational_values()) {
            (Some(f), Some(g)) => (0..n)
                .map(|xi| {
                    let x = GroupPoint::from_index(p, xi);
                    let mut acc = Rat::zero();
                    for (yi, fv) in f.iter().enumerate() {
                        if fv.is_zero() {
                            continue;
                        }
                        let y = GroupPoint::from_index(p, yi);
                        acc += fv * &g[x.sub(&y, p).index(p)];
                    }
                    Value::Rational(acc)
                })
                .collect(),
            _ => {
                let f: Vec<Complex64> = self.values.iter().map(Value::to_complex).collect();
                let g: Vec<Complex64> = other.values.iter().map(Value::to_complex).collect();
                (0..n)
                    .map(|xi| {
                        let x = GroupPoint::from_index(p, xi);
                        let mut acc = Complex64::new(0.0, 0.0);
                        for (yi, fv) in f.iter().enumerate() {
                            let y = GroupPoint::from_index(p, yi);
                            acc += fv * g[x.sub(&y, p).index(p)];
                        }
                        Value::Complex(acc)
                    })
                    .collect()
            }
        };
        Ok(GroupFunction { p, values })
    }

    /// Pointwise product (for the convolution-theorem checks).
    pub fn pointwise_mul(&self, other: &GroupFunction) -> Result<GroupFunction> {
        if self.p != other.p {
            return Err(Error::MismatchedModulus(self.p.value(), other.p.value()));
        }
        Ok(GroupFunction {
            p: self.p,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    pub fn scale_rational(&self, c: &Rat) -> GroupFunction {
        GroupFunction {
            p: self.p,
            values: self
                .values
                .iter()
                .map(|v| match v {
                    Value::Rational(r) => Value::Rational(r * c),
                    Value::Complex(z) => Value::Complex(z * rat_to_f64(c)),
                })
                .collect(),
        }
    }

    /// Average over the dilation orbit: f(x) = (1/(p-1)) sum_l h(l*x).
    /// Preserves h(0) and the transform at 0, and produces a balanced
    /// function. The input must be even.
    pub fn balance_symmetrize(&self) -> Result<GroupFunction> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        let p = self.p;
        let n = p.group_order();
        let scalings = (p.value() - 1) as i64;
        let values = if let Some(rats) = self.rational_values() {
            let inv = Rat::new(1.into(), scalings.into());
            (0..n)
                .map(|xi| {
                    let x = GroupPoint::from_index(p, xi);
                    let mut acc = Rat::zero();
                    for l in 1..p.value() {
                        acc += &rats[x.scale(l, p).index(p)];
                    }
                    Value::Rational(acc * &inv)
                })
                .collect()
        } else {
            (0..n)
                .map(|xi| {
                    let x = GroupPoint::from_index(p, xi);
                    let mut acc = Complex64::new(0.0, 0.0);
                    for l in 1..p.value() {
                        acc += self.values[x.scale(l, p).index(p)].to_complex();
                    }
                    Value::Complex(acc / scalings as f64)
                })
                .collect()
        };
        Ok(GroupFunction { p, values })
    }

    /// True when the function is constant on every punctured line.
    pub fn is_balanced(&self) -> bool {
        let p = self.p;
        (0..p.group_order()).all(|xi| {
            let x = GroupPoint::from_index(p, xi);
            (2..p.value())
                .all(|l| self.values[xi].approx_eq(&self.values[x.scale(l, p).index(p)], FLOAT_TOL))
        })
    }

    pub fn sum_abs_squared_f64(&self) -> f64 {
        self.values.iter().map(Value::abs_squared_f64).sum()
    }

    pub fn sum_abs_squared_exact(&self) -> Option<Rat> {
        self.rational_values()
            .map(|rats| rats.iter().map(|r| r * r).sum())
    }
}

fn roots_of_unity(p: Prime) -> Vec<Complex64> {
    (0..p.value())
        .map(|k| {
            Complex64::from_polar(
                1.0,
                2.0 * std::f64::consts::PI * k as f64 / p.value() as f64,
            )
        })
        .collect()
}

#[inline]
fn exponent(p: Prime, x: &GroupPoint, y: &GroupPoint, forward: bool) -> usize {
    let d = x.dot(y, p);
    if forward {
        ((p.value() - d) % p.value()) as usize
    } else {
        d as usize
    }
}

/// sum_y f(y) zeta^{+-<x,y>} for rational f: bucket the mass by exponent;
/// the result is the exact rational e0 - e1 when the nonzero buckets all
/// agree, and a floating complex number otherwise.
fn exact_character_sum(p: Prime, rats: &[Rat], x: &GroupPoint, forward: bool) -> Value {
    let q = p.us();
    let mut buckets = vec![Rat::zero(); q];
    for (yi, v) in rats.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let y = GroupPoint::from_index(p, yi);
        buckets[exponent(p, x, &y, forward)] += v;
    }
    if buckets[1..].iter().all(|b| *b == buckets[1.min(q - 1)]) {
        let tail = if q > 1 {
            buckets[1].clone()
        } else {
            Rat::zero()
        };
        Value::Rational(buckets[0].clone() - tail)
    } else {
        let zeta = roots_of_unity(p);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, b) in buckets.iter().enumerate() {
            acc += zeta[k] * rat_to_f64(b);
        }
        Value::Complex(acc)
    }
}

/// Intersection sizes of A with the p planes H_j = {y : <x,y> = j}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCounts {
    direction: GroupPoint,
    counts: Vec<u64>,
}

impl LevelCounts {
    pub fn direction(&self) -> &GroupPoint {
        &self.direction
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn all_equal(&self) -> bool {
        self.counts.iter().all(|&c| c == self.counts[0])
    }
}

impl GroupSet {
    /// Level counts of A in direction x != 0.
    pub fn level_counts(&self, x: &GroupPoint) -> Result<LevelCounts> {
        if x.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let p = self.prime();
        let mut counts = vec![0u64; p.us()];
        for y in self.iter() {
            counts[x.dot(&y, p) as usize] += 1;
        }
        Ok(LevelCounts {
            direction: *x,
            counts,
        })
    }

    /// The zero set of the transform of the indicator, as projective
    /// points: [x] is included iff A is equidistributed over the p planes
    /// orthogonal to x. Decided purely on integer level counts.
    pub fn zero_set(&self) -> ProjSet {
        let p = self.prime();
        let mut out = ProjSet::empty(p);
        for i in 0..p.plane_order() {
            let q = ProjPoint::from_index(p, i);
            let dir = GroupPoint::new(p, q.coords().map(|c| c as i64));
            if self
                .level_counts(&dir)
                .expect("nonzero direction")
                .all_equal()
            {
                out.insert(q);
            }
        }
        out
    }

    /// The trace weight h(x) = sum_{l=1}^{p-1} |1^_A(l*x)|^2, computed
    /// exactly from level counts: h(x) = p * sum_j n_j(x)^2 - |A|^2 for
    /// x != 0 and h(0) = (p-1)|A|^2. Integer-valued and balanced.
    pub fn trace_weight(&self) -> GroupFunction {
        let p = self.prime();
        let n = p.group_order();
        let size = self.len() as i64;
        let mut values = vec![Value::zero(); n];
        values[0] = Value::Rational(rat_int((p.value() as i64 - 1) * size * size));
        for (xi, value) in values.iter_mut().enumerate().skip(1) {
            let x = GroupPoint::from_index(p, xi);
            let lc = self.level_counts(&x).expect("nonzero");
            let sq: i64 = lc.counts().iter().map(|&c| (c * c) as i64).sum();
            *value = Value::Rational(rat_int(p.value() as i64 * sq - size * size));
        }
        GroupFunction { p, values }
    }
}

/// B is a spectrum of A iff |A| = |B| and every nonzero difference of B
/// lies in the zero set of the transform of A's indicator.
pub fn check_spectral_pair(a: &GroupSet, b: &GroupSet) -> bool {
    assert_eq!(a.prime(), b.prime(), "mismatched modulus");
    if a.len() != b.len() {
        return false;
    }
    let p = a.prime();
    let zs = a.zero_set();
    let pts: Vec<GroupPoint> = b.iter().collect();
    for (i, u) in pts.iter().enumerate() {
        for v in &pts[i + 1..] {
            let d = u.sub(v, p);
            let proj = ProjPoint::from_group(p, &d).expect("distinct points");
            if !zs.contains(&proj) {
                return false;
            }
        }
    }
    true
}
