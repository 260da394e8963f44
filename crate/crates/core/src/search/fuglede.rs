//! Spectral-vs-tile concordance tables. For p = 2 the whole power set of
//! Z_2^3 (256 subsets) is classified exhaustively; for p = 3 a seeded
//! sample plus the structured subgroup families is used, since 2^27
//! subsets are out of reach of a desk check.

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GroupPoint, GroupSet};
use crate::prime::Prime;
use crate::sample;

use super::{analyze_structure, SearchBudget, TriState};

#[derive(Clone, Debug)]
pub struct FugledeOptions {
    pub budget: SearchBudget,
    /// Number of random subsets for the sampled (p = 3) mode.
    pub samples: usize,
    pub seed: u64,
}

impl Default for FugledeOptions {
    fn default() -> Self {
        FugledeOptions {
            budget: SearchBudget::default(),
            samples: 200,
            seed: 0,
        }
    }
}

/// One classified subset; `id` is the membership bitmask in group-index
/// order (p <= 3 keeps it inside a u64).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FugledeRow {
    pub id: u64,
    pub size: usize,
    pub spectral: TriState,
    pub tile: TriState,
}

impl FugledeRow {
    pub fn concordant(&self) -> bool {
        self.spectral == self.tile
    }
}

#[derive(Clone, Debug)]
pub struct FugledeReport {
    pub p: u32,
    pub exhaustive: bool,
    pub rows: Vec<FugledeRow>,
    /// Conclusive rows where spectrality and tiling disagree.
    pub discrepancies: usize,
    /// Rows with at least one inconclusive verdict.
    pub inconclusive: usize,
}

impl FugledeReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("set-id,size,spectral,tile\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.id, r.size, r.spectral, r.tile));
        }
        out
    }
}

fn classify(a: &GroupSet, id: u64, budget: &SearchBudget) -> FugledeRow {
    let size = a.len();
    // the empty set and the full group are trivially concordant: the full
    // group is its own spectrum and tiles with T = {0}; the empty set is
    // counted as both by convention
    if size == 0 || a.is_full() {
        return FugledeRow {
            id,
            size,
            spectral: TriState::Yes,
            tile: TriState::Yes,
        };
    }
    let v = analyze_structure(a, budget);
    FugledeRow {
        id,
        size,
        spectral: v.spectral,
        tile: v.tile,
    }
}

fn set_id(a: &GroupSet) -> u64 {
    let p = a.prime();
    let mut id = 0u64;
    for x in a.iter() {
        id |= 1 << x.index(p);
    }
    id
}

fn set_from_id(p: Prime, id: u64) -> GroupSet {
    GroupSet::from_points(
        p,
        (0..p.group_order())
            .filter(|&i| id >> i & 1 == 1)
            .map(|i| GroupPoint::from_index(p, i)),
    )
}

/// Classify subsets of Z_p^3 as spectral and/or tiles. p = 2 is fully
/// exhaustive (all 256 subsets); p = 3 classifies the subgroup lines and
/// planes plus `options.samples` seeded random subsets.
pub fn exhaustive_fuglede_check(p: Prime, options: &FugledeOptions) -> Result<FugledeReport> {
    let rows: Vec<FugledeRow> = match p.value() {
        2 => (0u64..256)
            .map(|id| classify(&set_from_id(p, id), id, &options.budget))
            .collect(),
        3 => {
            let mut rng = sample::rng(options.seed);
            let mut ids = Vec::new();
            // structured families: all lines and planes through the origin
            for i in 0..p.plane_order() {
                let q = crate::projective::ProjPoint::from_index(p, i);
                let mut line = GroupSet::from_points(p, q.line_members(p));
                line.insert(GroupPoint::zero());
                ids.push(set_id(&line));
                let dir = GroupPoint::new(p, q.coords().map(|c| c as i64));
                let plane = GroupSet::from_points(
                    p,
                    (0..p.group_order())
                        .map(|i| GroupPoint::from_index(p, i))
                        .filter(|y| y.dot(&dir, p) == 0),
                );
                ids.push(set_id(&plane));
            }
            for _ in 0..options.samples {
                let size = rng.gen_range(0..=p.group_order());
                ids.push(set_id(&sample::random_group_set(p, size, &mut rng)));
            }
            ids.sort_unstable();
            ids.dedup();
            ids.into_iter()
                .map(|id| classify(&set_from_id(p, id), id, &options.budget))
                .collect()
        }
        _ => {
            return Err(Error::TooLarge(format!(
                "concordance check supports p = 2 (exhaustive) and p = 3 (sampled), not p = {p}"
            )))
        }
    };
    let discrepancies = rows
        .iter()
        .filter(|r| {
            r.spectral != TriState::Inconclusive
                && r.tile != TriState::Inconclusive
                && r.spectral != r.tile
        })
        .count();
    let inconclusive = rows
        .iter()
        .filter(|r| r.spectral == TriState::Inconclusive || r.tile == TriState::Inconclusive)
        .count();
    Ok(FugledeReport {
        p: p.value(),
        exhaustive: p.value() == 2,
        rows,
        discrepancies,
        inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_concordance_is_exact() {
        let p = Prime::new(2).unwrap();
        let report = exhaustive_fuglede_check(p, &FugledeOptions::default()).unwrap();
        assert_eq!(report.rows.len(), 256);
        assert_eq!(report.discrepancies, 0);
        assert_eq!(report.inconclusive, 0);
        // sizes 3, 5, 6, 7 never tile (3, 5, 6, 7 do not divide 8) and are
        // never spectral
        for r in &report.rows {
            if [3, 5, 6, 7].contains(&r.size) {
                assert_eq!(r.spectral, TriState::No, "id={}", r.id);
                assert_eq!(r.tile, TriState::No, "id={}", r.id);
            }
            // every nontrivial spectral set has cardinality divisible by p
            if r.spectral == TriState::Yes && r.size > 1 && r.size < 8 {
                assert_eq!(r.size % 2, 0, "id={}", r.id);
            }
        }
        // trivial rows
        assert_eq!(report.rows[0].spectral, TriState::Yes);
        assert_eq!(report.rows[255].tile, TriState::Yes);
        let csv = report.to_csv();
        assert!(csv.starts_with("set-id,size,spectral,tile\n"));
        assert_eq!(csv.lines().count(), 257);
    }

    #[test]
    fn z3_sampled_mode_runs() {
        let p = Prime::new(3).unwrap();
        let options = FugledeOptions {
            samples: 10,
            seed: 4,
            ..Default::default()
        };
        let report = exhaustive_fuglede_check(p, &options).unwrap();
        assert!(!report.exhaustive);
        assert_eq!(report.discrepancies, 0);
        // the structured families (lines and planes) are all concordant
        assert!(report.rows.iter().any(|r| r.size == 3));
        assert!(report.rows.iter().any(|r| r.size == 9));
    }

    #[test]
    fn large_p_rejected() {
        let p = Prime::new(5).unwrap();
        assert!(matches!(
            exhaustive_fuglede_check(p, &FugledeOptions::default()),
            Err(Error::TooLarge(_))
        ));
    }
}
