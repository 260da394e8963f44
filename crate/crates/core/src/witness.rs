//! Witness functions on PG(2,p) + {O}, the projective Fourier transform,
//! the Delsarte bound, the explicit blocking-set witnesses, and the
//! exact spectral-exclusion thresholds.
//!
//! A balanced function on Z_p^3 (constant on punctured lines) descends to
//! a function on the projective plane plus the adjoined origin O. On that
//! quotient the transform is the linear extension of
//!
//!   T(delta_O) = 1,    T(delta_P) = p*delta_{P^perp} + p*delta_O - 1,
//!
//! which matches the Z_p^3 transform under lifting. All arithmetic here is
//! exact rational: the bounds produced are mathematical statements, not
//! numerics.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::GroupFunction;
use crate::prime::Prime;
use crate::projective::{is_blocking, line_masks, ProjPoint, ProjSet};
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::surd::Surd;

/// A rational-valued function on PG(2,p) + {O}; the projective shadow of
/// a balanced function on Z_p^3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedFunction {
    p: Prime,
    at_o: Rat,
    values: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct BalancedFunctionJson {
    p: u32,
    #[serde(rename = "value_at_O")]
    value_at_o: String,
    /// Values in the canonical point enumeration order.
    values: Vec<String>,
}

impl BalancedFunction {
    pub fn zero(p: Prime) -> Self {
        BalancedFunction {
            p,
            at_o: Rat::zero(),
            values: vec![Rat::zero(); p.plane_order()],
        }
    }

    pub fn delta_o(p: Prime) -> Self {
        let mut f = BalancedFunction::zero(p);
        f.at_o = Rat::one();
        f
    }

    pub fn delta_point(p: Prime, q: &ProjPoint) -> Self {
        let mut f = BalancedFunction::zero(p);
        f.values[q.index(p)] = Rat::one();
        f
    }

    /// delta_S (+ c * delta_O when the set carries the O tag is not used
    /// here; O mass is set explicitly by callers).
    pub fn indicator(s: &ProjSet) -> Self {
        let mut f = BalancedFunction::zero(s.prime());
        for q in s.iter() {
            f.values[q.index(s.prime())] = Rat::one();
        }
        f
    }

    pub fn constant(p: Prime, v: Rat) -> Self {
        BalancedFunction {
            p,
            at_o: v.clone(),
            values: vec![v; p.plane_order()],
        }
    }

    pub fn from_values(p: Prime, at_o: Rat, values: Vec<Rat>) -> Self {
        assert_eq!(values.len(), p.plane_order());
        BalancedFunction { p, at_o, values }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn at_o(&self) -> &Rat {
        &self.at_o
    }

    pub fn at(&self, q: &ProjPoint) -> &Rat {
        &self.values[q.index(self.p)]
    }

    pub fn at_index(&self, i: usize) -> &Rat {
        &self.values[i]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn set_at_o(&mut self, v: Rat) {
        self.at_o = v;
    }

    pub fn set_at_index(&mut self, i: usize, v: Rat) {
        self.values[i] = v;
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BalancedFunction {
            p: self.p,
            at_o: &self.at_o * c,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Descend a balanced rational function on Z_p^3 to PG(2,p) + {O}.
    pub fn from_group_function(f: &GroupFunction) -> Result<Self> {
        let p = f.prime();
        let rats = f.rational_values().ok_or(Error::NotBalancedFunction)?;
        let mut values = Vec::with_capacity(p.plane_order());
        for i in 0..p.plane_order() {
            let q = ProjPoint::from_index(p, i);
            let mut members = q.line_members(p);
            let first = rats[members.next().expect("nonempty line").index(p)].clone();
            if members.any(|x| rats[x.index(p)] != first) {
                return Err(Error::NotBalancedFunction);
            }
            values.push(first);
        }
        Ok(BalancedFunction {
            p,
            at_o: rats[0].clone(),
            values,
        })
    }

    /// Constant extension back to Z_p^3 along punctured lines.
    pub fn lift(&self) -> GroupFunction {
        let p = self.p;
        let mut vals = vec![Rat::zero(); p.group_order()];
        vals[0] = self.at_o.clone();
        for (i, v) in self.values.iter().enumerate() {
            for x in ProjPoint::from_index(p, i).line_members(p) {
                vals[x.index(p)] = v.clone();
            }
        }
        GroupFunction::from_rational_values(p, vals)
    }

    /// The projective Fourier transform:
    ///   T(f)(O) = f(O) + (p-1) * sum_P f(P)
    ///   T(f)(Q) = f(O) + p * sum_{P in Q^perp} f(P) - sum_P f(P)
    /// It satisfies T(T(f)) = p^3 * f.
    pub fn proj_fourier(&self) -> BalancedFunction {
        let p = self.p;
        let masks = line_masks(p);
        let total: Rat = self.values.iter().sum();
        let pr = rat_int(p.value() as i64);
        let at_o = &self.at_o + (&pr - Rat::one()) * &total;
        let values = masks
            .iter()
            .map(|m| {
                let line_sum: Rat = m.iter_ones().map(|i| &self.values[i]).sum();
                &self.at_o + &pr * line_sum - &total
            })
            .collect();
        BalancedFunction { p, at_o, values }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&BalancedFunctionJson {
            p: self.p.value(),
            value_at_o: rat_to_string(&self.at_o),
            values: self.values.iter().map(rat_to_string).collect(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: BalancedFunctionJson =
            serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        let p = Prime::new(raw.p)?;
        if raw.values.len() != p.plane_order() {
            return Err(Error::BadSet(format!(
                "expected {} values, got {}",
                p.plane_order(),
                raw.values.len()
            )));
        }
        Ok(BalancedFunction {
            p,
            at_o: rat_from_str(&raw.value_at_o)?,
            values: raw
                .values
                .iter()
                .map(|v| rat_from_str(v))
                .collect::<Result<_>>()?,
        })
    }
}

/// Witness check with respect to a forbidden-support set E (projectivized;
/// O is always allowed): h <= 0 off E, transform >= 0 everywhere, and the
/// transform at O strictly positive. Evenness holds automatically for
/// balanced functions since -x lies on the same punctured line as x.
pub fn is_witness(h: &BalancedFunction, e: &ProjSet) -> bool {
    assert_eq!(h.prime(), e.prime(), "mismatched modulus");
    let negative_ok =
        (0..h.prime().plane_order()).all(|i| e.contains_index(i) || !h.at_index(i).is_positive());
    if !negative_ok {
        return false;
    }
    let ft = h.proj_fourier();
    ft.at_o().is_positive() && !ft.values().iter().any(|v| v.is_negative())
}

/// |B| <= |G| * h(O) / T(h)(O) for any set B whose differences avoid the
/// support of h off O. Exact rational output.
pub fn delsarte_bound(h: &BalancedFunction) -> Result<Rat> {
    let ft = h.proj_fourier();
    if !ft.at_o().is_positive() {
        return Err(Error::NonPositiveTransform);
    }
    let g = rat_int(h.prime().group_order() as i64);
    Ok(g * h.at_o() / ft.at_o())
}

/// The explicit witness delta_{S'} + (|S'| - p) * delta_O attached to a
/// blocking set S'. Its transform is p * (|S' meet Q^perp| - 1) >= 0 at
/// every Q and p * (|S'| - 1) at O.
pub fn section5_witness(s_prime: &ProjSet) -> Result<BalancedFunction> {
    tfold_witness_unchecked(s_prime, 1)
}

/// The t-fold generalization delta_{S'} + (|S'| - t*p) * delta_O for a
/// t-fold blocking set S'; its transform is p * (|S' meet Q^perp| - t).
/// t >= p - 1 is impossible for blocking-set supports and is rejected.
pub fn tfold_witness(s_prime: &ProjSet, t: u32) -> Result<BalancedFunction> {
    if t + 1 >= s_prime.prime().value() {
        return Err(Error::InvalidParameter(format!(
            "t = {t} must be at most p - 2 = {}",
            s_prime.prime().value().saturating_sub(2)
        )));
    }
    tfold_witness_unchecked(s_prime, t)
}

fn tfold_witness_unchecked(s_prime: &ProjSet, t: u32) -> Result<BalancedFunction> {
    if !is_blocking(s_prime, t)? {
        return Err(Error::NotBlocking { t });
    }
    let p = s_prime.prime();
    let size = s_prime.len() as i64;
    if size <= (t as i64) * p.value() as i64 {
        return Err(Error::InvalidParameter(format!(
            "|S'| = {size} must exceed t*p = {}",
            t * p.value()
        )));
    }
    let mut h = BalancedFunction::indicator(s_prime);
    h.set_at_o(rat_int(size - t as i64 * p.value() as i64));
    Ok(h)
}

/// Open exclusion interval (lower, p^2): spectral sets with cardinality
/// inside it cannot exist. For t = 1 the lower endpoint is
/// p^2 - (p-1)*sqrt(p); for t = 3 it is
/// p * (p^2 - p - 1 - (p-1)*sqrt(3p-5)) / (p-2), the rationalized form of
/// p * (p - 3(p-1)/(sqrt(3p-5)+1)). Membership tests are exact.
#[derive(Clone, Debug)]
pub struct ExclusionInterval {
    p: Prime,
    t: u32,
    lower: Surd,
    upper: Rat,
}

impl ExclusionInterval {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn lower(&self) -> &Surd {
        &self.lower
    }

    pub fn upper(&self) -> &Rat {
        &self.upper
    }

    /// Is an integer cardinality strictly inside (lower, p^2)?
    pub fn excludes(&self, size: u64) -> bool {
        let s = rat_int(size as i64);
        self.lower.cmp_rational(&s) == std::cmp::Ordering::Less && s < self.upper
    }

    /// All k with 1 < k < p whose multiples p*k fall in the interval.
    pub fn excluded_k(&self) -> Vec<u32> {
        let p = self.p.value();
        (2..p)
            .filter(|&k| self.excludes(p as u64 * k as u64))
            .collect()
    }
}

pub fn spectral_exclusion_threshold(p: Prime, t: u32) -> Result<ExclusionInterval> {
    let pv = p.value() as i64;
    let upper = rat_int(pv * pv);
    let lower = match t {
        1 => Surd::new(rat_int(pv * pv), rat_int(-(pv - 1)), p.value() as u64),
        3 => {
            if pv < 5 {
                return Err(Error::InvalidParameter(
                    "t = 3 requires p >= 5 (t <= p - 2)".into(),
                ));
            }
            let denom = rat_int(pv - 2);
            Surd::new(
                rat_int(pv * (pv * pv - pv - 1)) / &denom,
                rat_int(-pv * (pv - 1)) / &denom,
                (3 * pv - 5) as u64,
            )
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unsupported t = {t}: thresholds are stated for t = 1 and t = 3"
            )))
        }
    };
    Ok(ExclusionInterval { p, t, lower, upper })
}

/// Certification record for a witness function: validity, the exact bound
/// |G| h(O)/T(h)(O), and the cardinalities pk (1 < k < p) it excludes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub valid: bool,
    pub h_at_o: Rat,
    pub ht_at_o: Rat,
    pub bound: Rat,
    pub excluded_k: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct WitnessReportJson {
    valid: bool,
    #[serde(rename = "h_at_O")]
    h_at_o: String,
    #[serde(rename = "ht_at_O")]
    ht_at_o: String,
    bound: String,
    excluded_k: Vec<u32>,
}

impl WitnessReport {
    /// Evaluate a witness against its allowed support E (where h may be
    /// positive). The exclusions are certified only when `valid` is true.
    pub fn certify(h: &BalancedFunction, allowed: &ProjSet) -> Result<WitnessReport> {
        let p = h.prime();
        let ft = h.proj_fourier();
        if !ft.at_o().is_positive() {
            return Err(Error::NonPositiveTransform);
        }
        let bound = rat_int(p.group_order() as i64) * h.at_o() / ft.at_o();
        let excluded_k = (2..p.value())
            .filter(|&k| rat_int((p.value() * k) as i64) > bound)
            .collect();
        Ok(WitnessReport {
            valid: is_witness(h, allowed),
            h_at_o: h.at_o().clone(),
            ht_at_o: ft.at_o().clone(),
            bound,
            excluded_k,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&WitnessReportJson {
            valid: self.valid,
            h_at_o: rat_to_string(&self.h_at_o),
            ht_at_o: rat_to_string(&self.ht_at_o),
            bound: rat_to_string(&self.bound),
            excluded_k: self.excluded_k.clone(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<WitnessReport> {
        let raw: WitnessReportJson =
            serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        Ok(WitnessReport {
            valid: raw.valid,
            h_at_o: rat_from_str(&raw.h_at_o)?,
            ht_at_o: rat_from_str(&raw.ht_at_o)?,
            bound: rat_from_str(&raw.bound)?,
            excluded_k: raw.excluded_k,
        })
    }
}
