//! Optimal witness functions by exact rational linear programming.
//!
//! The abstract problem has one variable per point of PG(2,p) + {O}
//! (the witness values), transform-nonnegativity constraints at every
//! point, the normalization T(h)(O) = 1, and sign constraints on the
//! forbidden set Z. Internally the solver works in the transform domain:
//! with g = T(h) and g(O) = 1 substituted, the transform constraints
//! become plain variable bounds g >= 0, the objective h(O) becomes
//! (1 + (p-1) * sum g) / p^3, and only the |Z| sign constraints remain as
//! rows. The reported witness is mapped back to the function domain and
//! every certificate is re-verified there, constraint by constraint, in
//! exact rational arithmetic.
//!
//! The simplex is a dense two-phase tableau with Bland's rule: slow by LP
//! standards, deterministic and cycle-free, and exact — at these sizes
//! (at most p^2 + p + 1 = 183 structural variables) that trade is free.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::projective::{line_masks, ProjSet};
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::witness::BalancedFunction;

/// Specification of a witness LP: minimize h(O) subject to T(h) >= 0
/// everywhere, T(h)(O) = 1, and h <= 0 on `forbidden_z` (h = 0 there when
/// `allow_negative_on_z` is false).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessLp {
    pub p: Prime,
    pub forbidden_z: ProjSet,
    pub allow_negative_on_z: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver output; `certified` is set only after exact re-substitution of
/// every constraint in the function domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub witness: Option<BalancedFunction>,
    pub objective: Option<Rat>,
    pub certified: bool,
}

impl LpSolution {
    /// The Delsarte bound p^3 * h(O) of the solved witness.
    pub fn bound(&self) -> Option<Rat> {
        let p = self.witness.as_ref()?.prime();
        self.objective
            .as_ref()
            .map(|obj| obj * rat_int(p.group_order() as i64))
    }

    pub fn to_json(&self) -> String {
        let witness = self
            .witness
            .as_ref()
            .map(|w| serde_json::from_str::<serde_json::Value>(&w.to_json()).unwrap());
        let doc = serde_json::json!({
            "status": match self.status {
                LpStatus::Optimal => "optimal",
                LpStatus::Infeasible => "infeasible",
                LpStatus::Unbounded => "unbounded",
            },
            "objective": self.objective.as_ref().map(rat_to_string),
            "bound": self.bound().as_ref().map(rat_to_string),
            "certified": self.certified,
            "witness": witness,
        });
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<LpSolution> {
        let doc: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        let status = match doc.get("status").and_then(|v| v.as_str()) {
            Some("optimal") => LpStatus::Optimal,
            Some("infeasible") => LpStatus::Infeasible,
            Some("unbounded") => LpStatus::Unbounded,
            _ => return Err(Error::BadSet("missing or invalid status".into())),
        };
        let objective = match doc.get("objective") {
            Some(serde_json::Value::String(s)) => Some(rat_from_str(s)?),
            _ => None,
        };
        let witness = match doc.get("witness") {
            Some(v) if !v.is_null() => Some(BalancedFunction::from_json(&v.to_string())?),
            _ => None,
        };
        let certified = doc
            .get("certified")
            .and_then(|v| v.as_bool())
            .unwrap_or(false);
        Ok(LpSolution {
            status,
            witness,
            objective,
            certified,
        })
    }
}

impl WitnessLp {
    pub fn new(p: Prime, forbidden_z: ProjSet, allow_negative_on_z: bool) -> Result<Self> {
        if forbidden_z.prime() != p {
            return Err(Error::MismatchedModulus(
                p.value(),
                forbidden_z.prime().value(),
            ));
        }
        Ok(WitnessLp {
            p,
            forbidden_z,
            allow_negative_on_z,
        })
    }

    pub fn to_json(&self) -> String {
        let forbidden = serde_json::from_str::<serde_json::Value>(&self.forbidden_z.to_json())
            .expect("valid json");
        let doc = serde_json::json!({
            "p": self.p.value(),
            "forbidden_Z": forbidden,
            "allow_negative_on_Z": self.allow_negative_on_z,
        });
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<WitnessLp> {
        let doc: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        let p = Prime::new(
            doc.get("p")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| Error::BadSet("missing p".into()))? as u32,
        )?;
        let forbidden_z = ProjSet::from_json(
            &doc.get("forbidden_Z")
                .ok_or_else(|| Error::BadSet("missing forbidden_Z".into()))?
                .to_string(),
        )?;
        let allow = doc
            .get("allow_negative_on_Z")
            .and_then(|v| v.as_bool())
            .unwrap_or(true);
        WitnessLp::new(p, forbidden_z, allow)
    }
}

/// Minimize h(O) over witness functions for the given forbidden set.
/// Deterministic: identical specs produce identical solutions.
pub fn optimize_witness(spec: &WitnessLp) -> LpSolution {
    let p = spec.p;
    let n = p.plane_order();
    let masks = line_masks(p);

    // transform-domain LP: minimize sum g_Q subject to, for each P in Z,
    //   sum_Q (p * [Q in P^perp] - 1) g_Q  <=/= -1,     g >= 0
    let mut rows = Vec::new();
    for (pi, mask) in masks.iter().enumerate() {
        if !spec.forbidden_z.contains_index(pi) {
            continue;
        }
        let coeffs: Vec<Rat> = (0..n)
            .map(|qi| {
                if mask.get(qi) {
                    rat_int(p.value() as i64 - 1)
                } else {
                    rat_int(-1)
                }
            })
            .collect();
        let rel = if spec.allow_negative_on_z {
            Rel::Le
        } else {
            Rel::Eq
        };
        rows.push((coeffs, rel, rat_int(-1)));
    }
    let lp = LinearProgram {
        num_vars: n,
        objective: vec![Rat::one(); n],
        rows,
    };

    match simplex(&lp) {
        SimplexOutcome::Optimal { x, objective } => {
            let g = BalancedFunction::from_values(p, Rat::one(), x);
            let scale = Rat::new(1.into(), (p.group_order() as i64).into());
            let witness = g.proj_fourier().scale(&scale);
            // h(O) = (1 + (p-1) * sum g) / p^3
            debug_assert_eq!(
                witness.at_o(),
                &((Rat::one() + rat_int(p.value() as i64 - 1) * objective) * &scale)
            );
            let objective = witness.at_o().clone();
            let mut sol = LpSolution {
                status: LpStatus::Optimal,
                witness: Some(witness),
                objective: Some(objective),
                certified: false,
            };
            sol.certified = verify_certificate(&sol, spec);
            sol
        }
        SimplexOutcome::Infeasible => LpSolution {
            status: LpStatus::Infeasible,
            witness: None,
            objective: None,
            certified: false,
        },
        SimplexOutcome::Unbounded => LpSolution {
            status: LpStatus::Unbounded,
            witness: None,
            objective: None,
            certified: false,
        },
    }
}

/// Re-check an LP solution against its spec in exact arithmetic: transform
/// nonnegativity everywhere, normalization T(h)(O) = 1, the sign (or
/// vanishing) constraints on Z, and objective consistency. A solution that
/// passes yields a sound Delsarte exclusion regardless of optimality.
pub fn verify_certificate(sol: &LpSolution, spec: &WitnessLp) -> bool {
    if sol.status != LpStatus::Optimal {
        return false;
    }
    let (Some(h), Some(objective)) = (&sol.witness, &sol.objective) else {
        return false;
    };
    if h.prime() != spec.p {
        return false;
    }
    let ft = h.proj_fourier();
    if ft.at_o() != &Rat::one() {
        return false;
    }
    if ft.values().iter().any(|v| v.is_negative()) {
        return false;
    }
    for i in 0..spec.p.plane_order() {
        if !spec.forbidden_z.contains_index(i) {
            continue;
        }
        let v = h.at_index(i);
        let ok = if spec.allow_negative_on_z {
            !v.is_positive()
        } else {
            v.is_zero()
        };
        if !ok {
            return false;
        }
    }
    h.at_o() == objective
}

// ---------------------------------------------------------------------------
// dense exact simplex
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Rel {
    Le,
    Eq,
}

pub(crate) struct LinearProgram {
    pub num_vars: usize,
    /// minimize objective . x over x >= 0
    pub objective: Vec<Rat>,
    pub rows: Vec<(Vec<Rat>, Rel, Rat)>,
}

pub(crate) enum SimplexOutcome {
    Optimal { x: Vec<Rat>, objective: Rat },
    Infeasible,
    Unbounded,
}

struct Tableau {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = {
            let pv = &self.rows[row][col];
            debug_assert!(!pv.is_zero());
            Rat::one() / pv
        };
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        self.rhs[row] *= &inv;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for c in 0..self.cols {
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[r] -= delta;
        }
        self.basis[row] = col;
    }

    /// Reduced cost of column j for the given cost vector: c_j - c_B . A_j.
    fn reduced_cost(&self, costs: &[Rat], j: usize) -> Rat {
        let mut z = Rat::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if !row[j].is_zero() && !costs[self.basis[i]].is_zero() {
                z += &costs[self.basis[i]] * &row[j];
            }
        }
        &costs[j] - z
    }

    /// Bland's rule minimization over the allowed columns. Returns false
    /// on unboundedness.
    fn run(&mut self, costs: &[Rat], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(costs, j).is_negative()
            });
            let Some(col) = entering else {
                return true;
            };
            // ratio test, ties broken by smallest basis variable index
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][col];
                    let better = match &leaving {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

pub(crate) fn simplex(lp: &LinearProgram) -> SimplexOutcome {
    let n = lp.num_vars;
    let m = lp.rows.len();
    // column layout: structural | slack (Le rows) | artificial
    let num_slacks = lp.rows.iter().filter(|r| r.1 == Rel::Le).count();
    let cols = n + num_slacks + m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack_at = 0usize;
    for (ri, (coeffs, rel, b)) in lp.rows.iter().enumerate() {
        assert_eq!(coeffs.len(), n);
        let flip = b.is_negative();
        let mut row = vec![Rat::zero(); cols];
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = if flip { -c.clone() } else { c.clone() };
        }
        if *rel == Rel::Le {
            // slack keeps the row an equality; flipped rows get a surplus
            row[n + slack_at] = if flip { -Rat::one() } else { Rat::one() };
            slack_at += 1;
        }
        row[n + num_slacks + ri] = Rat::one();
        rows.push(row);
        rhs.push(if flip { -b.clone() } else { b.clone() });
        basis.push(n + num_slacks + ri);
    }
    let mut tab = Tableau {
        cols,
        rows,
        rhs,
        basis,
    };

    // phase 1: minimize the artificial mass
    let mut phase1 = vec![Rat::zero(); cols];
    for c in phase1.iter_mut().skip(n + num_slacks) {
        *c = Rat::one();
    }
    let allowed_all = vec![true; cols];
    if !tab.run(&phase1, &allowed_all) {
        // phase-1 objective is bounded below by zero; cannot happen
        return SimplexOutcome::Unbounded;
    }
    let artificial_mass: Rat = (0..m)
        .filter(|&i| tab.basis[i] >= n + num_slacks)
        .map(|i| tab.rhs[i].clone())
        .sum();
    if !artificial_mass.is_zero() {
        return SimplexOutcome::Infeasible;
    }
    // drive any degenerate artificials out of the basis
    for i in 0..m {
        if tab.basis[i] >= n + num_slacks {
            if let Some(col) = (0..n + num_slacks).find(|&j| !tab.rows[i][j].is_zero()) {
                tab.pivot(i, col);
            }
        }
    }

    // phase 2: artificial columns are frozen
    let mut costs = vec![Rat::zero(); cols];
    costs[..n].clone_from_slice(&lp.objective);
    let mut allowed = vec![true; cols];
    for a in allowed.iter_mut().skip(n + num_slacks) {
        *a = false;
    }
    if !tab.run(&costs, &allowed) {
        return SimplexOutcome::Unbounded;
    }

    let mut x = vec![Rat::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs[i].clone();
        }
    }
    let objective = x.iter().zip(&lp.objective).map(|(xi, ci)| xi * ci).sum();
    SimplexOutcome::Optimal { x, objective }
}
