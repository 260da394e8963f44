//! Seeded generators for random sets, functions, and geometry instances.
//!
//! Every sampled experiment in the crate (and the CLI) threads an explicit
//! `u64` seed through `ChaCha8Rng`, so identical seeds reproduce identical
//! instances bit for bit.

use num::complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::Bitset;
use crate::fourier::GroupFunction;
use crate::group::{GroupPoint, GroupSet};
use crate::prime::Prime;
use crate::projective::{line_masks, ProjPoint, ProjSet};
use crate::rat::{rat_int, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform subset of Z_p^3 of the given cardinality.
pub fn random_group_set(p: Prime, size: usize, rng: &mut impl Rng) -> GroupSet {
    let n = p.group_order();
    assert!(size <= n);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    GroupSet::from_points(p, idx[..size].iter().map(|&i| GroupPoint::from_index(p, i)))
}

/// Random nonempty subset, cardinality uniform in 1..=p^3.
pub fn random_nonempty_group_set(p: Prime, rng: &mut impl Rng) -> GroupSet {
    let size = rng.gen_range(1..=p.group_order());
    random_group_set(p, size, rng)
}

/// Random subset of PG(2,p) with the given inclusion density.
pub fn random_proj_set(p: Prime, density: f64, rng: &mut impl Rng) -> ProjSet {
    ProjSet::from_points(
        p,
        (0..p.plane_order())
            .filter(|_| rng.gen_bool(density))
            .map(|i| ProjPoint::from_index(p, i)),
    )
}

/// Complex-valued function with coordinates uniform in [-1, 1].
pub fn random_complex_function(p: Prime, rng: &mut impl Rng) -> GroupFunction {
    let vals = (0..p.group_order())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    GroupFunction::from_complex_values(p, vals)
}

/// Integer-valued function with values in [lo, hi].
pub fn random_integer_function(p: Prime, lo: i64, hi: i64, rng: &mut impl Rng) -> GroupFunction {
    let vals = (0..p.group_order())
        .map(|_| rat_int(rng.gen_range(lo..=hi)))
        .collect();
    GroupFunction::from_rational_values(p, vals)
}

/// Even integer-valued function (f(x) = f(-x)).
pub fn random_even_integer_function(
    p: Prime,
    lo: i64,
    hi: i64,
    rng: &mut impl Rng,
) -> GroupFunction {
    let n = p.group_order();
    let mut vals = vec![Rat::from_integer(0.into()); n];
    for i in 0..n {
        let neg = GroupPoint::from_index(p, i).neg(p).index(p);
        if i <= neg {
            let v = rat_int(rng.gen_range(lo..=hi));
            vals[neg] = v.clone();
            vals[i] = v;
        }
    }
    GroupFunction::from_rational_values(p, vals)
}

/// Balanced integer-valued function: constant on every punctured line.
pub fn random_balanced_integer_function(
    p: Prime,
    lo: i64,
    hi: i64,
    rng: &mut impl Rng,
) -> GroupFunction {
    let n = p.group_order();
    let mut vals = vec![Rat::from_integer(0.into()); n];
    vals[0] = rat_int(rng.gen_range(lo..=hi));
    for i in 0..p.plane_order() {
        let v = rat_int(rng.gen_range(lo..=hi));
        for x in ProjPoint::from_index(p, i).line_members(p) {
            vals[x.index(p)] = v.clone();
        }
    }
    GroupFunction::from_rational_values(p, vals)
}

/// Random t-fold blocking set, by a randomized repair walk: start from a
/// density-q sample, then repeatedly fix the first violated line (add a
/// missing point when the line is hit fewer than t times, drop a random
/// point when the line is fully contained). Restarts cover the rare
/// non-converging walk. Panics when no t-fold blocking set turns up after
/// many restarts — e.g. PG(2,5) has no 3-fold blocking set at all.
pub fn random_blocking_set(p: Prime, t: u32, rng: &mut impl Rng) -> ProjSet {
    assert!(t >= 1 && (t as usize) < p.us());
    let masks = line_masks(p);
    let n = p.plane_order();
    let density = 0.5 + 0.05 * (t as f64 - 1.0);
    for _restart in 0..500 {
        let mut bits = Bitset::new(n);
        for i in 0..n {
            if rng.gen_bool(density) {
                bits.set(i);
            }
        }
        for _ in 0..50 * n {
            let mut violated = None;
            for m in &masks {
                let hits = bits.intersection_count(m);
                if hits < t as usize {
                    violated = Some((m, true));
                    break;
                }
                if hits == m.count_ones() {
                    violated = Some((m, false));
                    break;
                }
            }
            match violated {
                None => {
                    return ProjSet::from_points(
                        p,
                        bits.iter_ones().map(|i| ProjPoint::from_index(p, i)),
                    );
                }
                Some((m, add)) => {
                    let candidates: Vec<usize> =
                        m.iter_ones().filter(|&i| bits.get(i) != add).collect();
                    let &pick = candidates.choose(rng).expect("line has candidates");
                    if add {
                        bits.set(pick);
                    } else {
                        bits.clear(pick);
                    }
                }
            }
        }
    }
    panic!("no {t}-fold blocking set found in PG(2,{p}); it may not exist");
}

/// Random tile of size p: one point in each of the p planes orthogonal to
/// a random direction. Returns (A, T) with A + T a tiling (T is the
/// orthogonal subgroup plane).
pub fn random_plane_transversal_tile(p: Prime, rng: &mut impl Rng) -> (GroupSet, GroupSet) {
    let n = p.group_order();
    let dir = loop {
        let x = GroupPoint::from_index(p, rng.gen_range(1..n));
        if !x.is_zero() {
            break x;
        }
    };
    let mut by_level: Vec<Vec<GroupPoint>> = vec![Vec::new(); p.us()];
    for i in 0..n {
        let y = GroupPoint::from_index(p, i);
        by_level[dir.dot(&y, p) as usize].push(y);
    }
    let a = GroupSet::from_points(
        p,
        by_level
            .iter()
            .map(|lvl| *lvl.choose(rng).expect("plane is nonempty")),
    );
    let t = GroupSet::from_points(p, by_level[0].iter().copied());
    (a, t)
}

/// Random tile of size p^2: one point in each coset of a random line L.
/// Returns (A, T) with T = L.
pub fn random_line_transversal_tile(p: Prime, rng: &mut impl Rng) -> (GroupSet, GroupSet) {
    let n = p.group_order();
    let v = loop {
        let x = GroupPoint::from_index(p, rng.gen_range(1..n));
        if !x.is_zero() {
            break x;
        }
    };
    let line: Vec<GroupPoint> = (0..p.value()).map(|l| v.scale(l, p)).collect();
    let mut seen = vec![false; n];
    let mut picks = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let x = GroupPoint::from_index(p, i);
        let coset: Vec<GroupPoint> = line.iter().map(|l| x.add(l, p)).collect();
        for c in &coset {
            seen[c.index(p)] = true;
        }
        picks.push(*coset.choose(rng).expect("coset is nonempty"));
    }
    (
        GroupSet::from_points(p, picks),
        GroupSet::from_points(p, line),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::GroupFunction;
    use crate::projective::is_blocking;
    use crate::rat::rat_int;

    #[test]
    fn determinism() {
        let p = Prime::new(5).unwrap();
        let a = random_group_set(p, 20, &mut rng(7));
        let b = random_group_set(p, 20, &mut rng(7));
        assert_eq!(a, b);
        let s = random_blocking_set(p, 1, &mut rng(7));
        let t = random_blocking_set(p, 1, &mut rng(7));
        assert_eq!(s, t);
    }

    #[test]
    fn blocking_samples_are_blocking() {
        // no (5, 3) here: PG(2,5) has no 3-fold blocking set
        for (pv, t) in [(3u32, 1u32), (5, 1), (7, 1), (7, 3), (11, 3)] {
            let p = Prime::new(pv).unwrap();
            let mut r = rng(1000 + pv as u64 + t as u64);
            for _ in 0..5 {
                let s = random_blocking_set(p, t, &mut r);
                assert!(is_blocking(&s, t).unwrap(), "p={pv} t={t}");
            }
        }
    }

    #[test]
    fn transversal_tiles_tile() {
        let p = Prime::new(3).unwrap();
        let one = GroupFunction::constant(p, rat_int(1));
        let mut r = rng(99);
        for _ in 0..5 {
            let (a, t) = random_plane_transversal_tile(p, &mut r);
            assert_eq!(a.len(), 3);
            let conv = GroupFunction::indicator(&a)
                .convolve(&GroupFunction::indicator(&t))
                .unwrap();
            assert!(conv.approx_eq(&one, 0.0));

            let (a2, t2) = random_line_transversal_tile(p, &mut r);
            assert_eq!(a2.len(), 9);
            let conv = GroupFunction::indicator(&a2)
                .convolve(&GroupFunction::indicator(&t2))
                .unwrap();
            assert!(conv.approx_eq(&one, 0.0));
        }
    }

    #[test]
    fn balanced_samples_are_balanced() {
        let p = Prime::new(5).unwrap();
        let f = random_balanced_integer_function(p, -4, 4, &mut rng(3));
        assert!(f.is_balanced());
        let g = random_even_integer_function(p, -4, 4, &mut rng(3));
        assert!(g.is_even());
    }
}
