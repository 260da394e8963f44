//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured evidence. Run with
//! `cargo test -p spectile-core --test acceptance -- --nocapture`.

use std::time::Instant;

use spectile_core::fourier::FLOAT_TOL;
use spectile_core::rat::{rat_int, Rat};
use spectile_core::sample;
use spectile_core::{
    check_spectral_pair, dual_line, enumerate_points, exhaustive_fuglede_check, find_spectrum,
    is_tile, min_blocking_size_bruteforce, minimalize, optimize_witness, section5_witness,
    spectral_exclusion_threshold, spectrum_of_tile, verify_certificate, verify_tiling,
    BalancedFunction, FugledeOptions, GroupFunction, GroupPoint, GroupSet, Outcome, Prime,
    SearchBudget, WitnessLp, WitnessReport,
};

fn pr(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn acceptance_01_fuglede_concordance_z2() {
    let start = Instant::now();
    let report = exhaustive_fuglede_check(pr(2), &FugledeOptions::default()).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.rows.len(), 256, "all subsets classified");
    assert_eq!(report.discrepancies, 0, "spectral <=> tile");
    assert_eq!(report.inconclusive, 0, "every verdict conclusive");
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "runtime {elapsed:?} exceeds 5 s"
    );
    println!(
        "ACCEPTANCE 1 PASS: 256/256 subsets of Z_2^3 classified, 0 discrepancies, {:.2?}",
        elapsed
    );
}

#[test]
fn acceptance_02_delsarte_equality_trace_weight() {
    for (pv, seed) in [(3u32, 0xA2u64), (5, 0xB2)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        for i in 0..200 {
            let a = sample::random_nonempty_group_set(p, &mut rng);
            let h = BalancedFunction::from_group_function(&a.trace_weight())
                .expect("trace weight is balanced");
            let bound = spectile_core::delsarte_bound(&h).expect("positive transform at O");
            assert_eq!(
                bound,
                rat_int(a.len() as i64),
                "p={pv} instance {i}: bound must equal |A| exactly"
            );
        }
    }
    println!(
        "ACCEPTANCE 2 PASS: trace-weight bound = |A| exactly on 200 random sets in Z_3^3 and Z_5^3"
    );
}

#[test]
fn acceptance_03_section5_transform_identity() {
    for (pv, seed) in [(3u32, 0xC3u64), (5, 0xD3), (7, 0xE3)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        for i in 0..100 {
            let s = sample::random_blocking_set(p, 1, &mut rng);
            let h = section5_witness(&s).unwrap();
            let ft = h.proj_fourier();
            for q in enumerate_points(p) {
                let dual = dual_line(p, &q);
                let hits = s.iter().filter(|r| dual.contains(r)).count() as i64;
                assert_eq!(
                    ft.at(&q),
                    &rat_int(pv as i64 * (hits - 1)),
                    "p={pv} instance {i} at {q:?}"
                );
            }
            assert_eq!(ft.at_o(), &rat_int(pv as i64 * (s.len() as i64 - 1)));
        }
    }
    println!("ACCEPTANCE 3 PASS: section-5 transform = p(|S' meet Q^perp| - 1) on 100 blocking sets per p in {{3,5,7}}");
}

#[test]
fn acceptance_04_theorem_pipeline_minimal_blocking() {
    let start = Instant::now();
    for pv in [3u32, 5, 7, 11, 13] {
        let p = pr(pv);
        let mut rng = sample::rng(0xF4 + pv as u64);
        let interval = spectral_exclusion_threshold(p, 1).unwrap();
        for i in 0..3 {
            let s0 = sample::random_blocking_set(p, 1, &mut rng);
            let s = minimalize(&s0, 1).unwrap();
            // minimal blocking sets are smaller than p*sqrt(p) + 1,
            // checked as the exact squared comparison (|S'| - 1)^2 < p^3
            let n = s.len() as i64;
            let pc = pv as i64;
            assert!(
                (n - 1) * (n - 1) < pc * pc * pc,
                "p={pv} instance {i}: |S'| = {n} violates the minimal bound"
            );
            let h = section5_witness(&s).unwrap();
            let report = WitnessReport::certify(&h, &s).unwrap();
            assert!(report.valid, "p={pv} instance {i}: witness must be valid");
            for k in 2..pv {
                if interval.excludes((pv * k) as u64) {
                    assert!(
                        report.excluded_k.contains(&k),
                        "p={pv} instance {i}: witness misses k={k} (|S'|={n}, bound={})",
                        report.bound
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "runtime {elapsed:?} exceeds 60 s"
    );
    println!(
        "ACCEPTANCE 4 PASS: minimal blocking pipeline covers the full exclusion interval for p in {{3,5,7,11,13}}, {:.2?}",
        elapsed
    );
}

#[test]
fn acceptance_05_blocking_bruteforce() {
    let start = Instant::now();
    assert_eq!(
        min_blocking_size_bruteforce(pr(2), 1).unwrap(),
        None,
        "Fano plane has no blocking set"
    );
    let min3 = min_blocking_size_bruteforce(pr(3), 1).unwrap();
    assert_eq!(min3, Some(6));
    assert_eq!(6, 3 * (3 + 1) / 2, "matches the classical lower bound");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "runtime {elapsed:?} exceeds 30 s"
    );
    println!(
        "ACCEPTANCE 5 PASS: PG(2,2) has no blocking set; PG(2,3) minimum = 6 = 3(p+1)/2, {:.2?}",
        elapsed
    );
}

#[test]
fn acceptance_06_lp_dominance() {
    let mut instances = 0usize;
    for (pv, seed) in [(3u32, 0x16u64), (5, 0x26), (7, 0x36)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        for i in 0..50 {
            let s0 = sample::random_blocking_set(p, 1, &mut rng);
            let spec = WitnessLp::new(p, s0.complement(), true).unwrap();
            let sol = optimize_witness(&spec);
            assert!(
                sol.certified && verify_certificate(&sol, &spec),
                "p={pv} instance {i}: certificate must verify exactly"
            );
            // strongest explicit competitor: the minimalized section-5 witness
            let s = minimalize(&s0, 1).unwrap();
            let h = section5_witness(&s).unwrap();
            let explicit = spectile_core::delsarte_bound(&h).unwrap();
            let lp_bound = sol.bound().unwrap();
            assert!(
                lp_bound <= explicit,
                "p={pv} instance {i}: LP bound {lp_bound} worse than section-5 bound {explicit}"
            );
            instances += 1;
        }
    }
    println!(
        "ACCEPTANCE 6 PASS: certified LP bound <= section-5 bound on {instances} blocking-set complements (p in {{3,5,7}})"
    );
}

#[test]
fn acceptance_07_delsarte_soundness_oracle() {
    let budget = SearchBudget::default();
    for (pv, seed) in [(2u32, 0x17u64), (3, 0x27)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        for i in 0..50 {
            // Z = where the witness must be <= 0; the bound applies to
            // sets whose nonzero differences stay inside Z, i.e. avoid
            // the support region E = PG \ Z
            let z = sample::random_proj_set(p, 0.5, &mut rng);
            let spec = WitnessLp::new(p, z.clone(), true).unwrap();
            let sol = optimize_witness(&spec);
            assert!(sol.certified, "p={pv} instance {i}");
            let support = z.complement();
            let best = match spectile_core::max_difference_avoiding_set(p, &support, &budget) {
                Outcome::Found(b) => b,
                other => panic!("oracle must be exhaustive at p={pv}: {other:?}"),
            };
            let bound = sol.bound().unwrap();
            assert!(
                rat_int(best.len() as i64) <= bound,
                "p={pv} instance {i}: |B| = {} exceeds certified bound {bound}",
                best.len()
            );
        }
    }
    println!("ACCEPTANCE 7 PASS: brute-force max avoiding set <= certified LP bound on 50 forbidden sets per p in {{2,3}}");
}

#[test]
fn acceptance_08_constructive_spectra_of_tiles() {
    let budget = SearchBudget::default();
    // all subgroup tiles: lines and planes through the origin
    for pv in [3u32, 5] {
        let p = pr(pv);
        for i in 0..p.plane_order() {
            let q = spectile_core::ProjPoint::from_index(p, i);
            let dir = GroupPoint::new(p, q.coords().map(|c| c as i64));
            let mut line = GroupSet::from_points(p, q.line_members(p));
            line.insert(GroupPoint::zero());
            let plane = GroupSet::from_points(
                p,
                (0..p.group_order())
                    .map(|idx| GroupPoint::from_index(p, idx))
                    .filter(|y| y.dot(&dir, p) == 0),
            );
            // transversal complements: a plane not containing the line,
            // and a line not inside the plane
            let t_line = (0..p.plane_order())
                .map(|j| spectile_core::ProjPoint::from_index(p, j))
                .find_map(|w| {
                    let wdir = GroupPoint::new(p, w.coords().map(|c| c as i64));
                    (wdir.dot(&dir, p) != 0).then(|| {
                        GroupSet::from_points(
                            p,
                            (0..p.group_order())
                                .map(|idx| GroupPoint::from_index(p, idx))
                                .filter(|y| y.dot(&wdir, p) == 0),
                        )
                    })
                })
                .unwrap();
            let t_plane = (0..p.plane_order())
                .map(|j| spectile_core::ProjPoint::from_index(p, j))
                .find_map(|w| {
                    let wdir = GroupPoint::new(p, w.coords().map(|c| c as i64));
                    (wdir.dot(&dir, p) != 0).then(|| {
                        let mut l = GroupSet::from_points(p, w.line_members(p));
                        l.insert(GroupPoint::zero());
                        l
                    })
                })
                .unwrap();
            for (a, t) in [(&line, &t_line), (&plane, &t_plane)] {
                assert!(verify_tiling(a, t), "p={pv} subgroup tiling");
                let b = spectrum_of_tile(a, t).unwrap();
                assert!(check_spectral_pair(a, &b), "p={pv} subgroup {a:?}");
            }
        }
    }
    // 50 random non-subgroup tiles, complements found by search
    let mut checked = 0usize;
    for (pv, seed) in [(3u32, 0x18u64), (5, 0x28)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        while checked < if pv == 3 { 25 } else { 50 } {
            let (a, _) = if checked.is_multiple_of(2) {
                sample::random_plane_transversal_tile(p, &mut rng)
            } else {
                sample::random_line_transversal_tile(p, &mut rng)
            };
            // skip subgroup cosets: those have |A - A| = |A|
            let mut diffs = GroupSet::empty(p);
            for x in a.iter() {
                for y in a.iter() {
                    diffs.insert(x.sub(&y, p));
                }
            }
            if diffs.len() == a.len() {
                continue;
            }
            let t = match is_tile(&a, &budget) {
                Outcome::Found(t) => t,
                other => panic!("constructed tile not found by search: {other:?}"),
            };
            assert!(verify_tiling(&a, &t));
            let b = spectrum_of_tile(&a, &t).unwrap();
            assert!(check_spectral_pair(&a, &b), "p={pv} tile #{checked}");
            checked += 1;
        }
    }
    println!("ACCEPTANCE 8 PASS: constructive spectra verified for all subgroup tiles of Z_3^3, Z_5^3 and 50 searched non-subgroup tiles");
}

#[test]
fn acceptance_09_fourier_identities() {
    for (pv, seed) in [(2u32, 0x19u64), (3, 0x29), (5, 0x39)] {
        let p = pr(pv);
        let order = p.group_order() as f64;
        let mut rng = sample::rng(seed);
        for i in 0..500 {
            if i % 2 == 0 {
                // exact path: balanced integer functions, zero tolerance
                let f = sample::random_balanced_integer_function(p, -5, 5, &mut rng);
                let g = sample::random_balanced_integer_function(p, -5, 5, &mut rng);
                let ft = f.fourier_transform();
                // Plancherel
                let lhs =
                    rat_int(p.group_order() as i64) * f.sum_abs_squared_exact().expect("rational");
                let rhs = ft.sum_abs_squared_exact().expect("exact transform path");
                assert_eq!(lhs, rhs, "p={pv} exact Plancherel, instance {i}");
                // inversion round trip
                assert!(ft.inverse_transform().approx_eq(&f, 0.0));
                // convolution theorem
                let conv_ft = f.convolve(&g).unwrap().fourier_transform();
                let prod = ft.pointwise_mul(&g.fourier_transform()).unwrap();
                assert!(conv_ft.approx_eq(&prod, 0.0), "p={pv} exact convolution");
            } else {
                // float path: complex-valued functions, 1e-9 tolerance
                let f = sample::random_complex_function(p, &mut rng);
                let g = sample::random_complex_function(p, &mut rng);
                let ft = f.fourier_transform();
                let lhs = order * f.sum_abs_squared_f64();
                let rhs = ft.sum_abs_squared_f64();
                assert!(
                    (lhs - rhs).abs() <= FLOAT_TOL * lhs.abs().max(1.0),
                    "p={pv} float Plancherel, instance {i}: {lhs} vs {rhs}"
                );
                assert!(ft.inverse_transform().approx_eq(&f, FLOAT_TOL));
                // the two sides here are products of transforms with
                // magnitudes up to |G|^2, so the 1e-9 tolerance is taken
                // relative to the value scale
                let conv_ft = f.convolve(&g).unwrap().fourier_transform();
                let prod = ft.pointwise_mul(&g.fourier_transform()).unwrap();
                for (u, v) in conv_ft.values().iter().zip(prod.values()) {
                    let (u, v) = (u.to_complex(), v.to_complex());
                    let scale = u.norm().max(v.norm()).max(1.0);
                    assert!(
                        (u - v).norm() <= FLOAT_TOL * scale,
                        "p={pv} float convolution: {u} vs {v}"
                    );
                }
            }
        }
    }
    println!("ACCEPTANCE 9 PASS: Plancherel, inversion, convolution on 500 random functions per p in {{2,3,5}}");
}

#[test]
fn acceptance_10_improved_thresholds_widen() {
    for pv in [7u32, 11, 13] {
        let p = pr(pv);
        let t1 = spectral_exclusion_threshold(p, 1).unwrap();
        let t3 = spectral_exclusion_threshold(p, 3).unwrap();
        assert_eq!(t1.upper(), t3.upper(), "upper endpoints are both p^2");
        // strict widening: the 3-fold lower endpoint sits strictly below
        assert_eq!(
            t3.lower().cmp_surd(t1.lower()),
            std::cmp::Ordering::Less,
            "p={pv}: t=3 interval must strictly widen t=1"
        );
        let k1 = t1.excluded_k();
        let k3 = t3.excluded_k();
        assert!(
            k1.iter().all(|k| k3.contains(k)),
            "p={pv}: t=3 exclusions must contain t=1 exclusions"
        );
        println!(
            "  p={pv}: t=1 lower ~ {:.3} excludes k={k1:?}; t=3 lower ~ {:.3} excludes k={k3:?}",
            t1.lower().to_f64(),
            t3.lower().to_f64()
        );
    }
    println!("ACCEPTANCE 10 PASS: t=3 thresholds strictly widen t=1 for p in {{7,11,13}}");
}

// --- cross-cutting checks used by several criteria ---

#[test]
fn spectral_pairs_have_orthogonal_character_gram_matrix() {
    // for spectral pairs the |A| x |A| character Gram matrix on A is
    // |A| * identity; entries are exact transform values
    let budget = SearchBudget::default();
    for pv in [2u32, 3, 5] {
        let p = pr(pv);
        let plane = GroupSet::from_points(
            p,
            (0..p.group_order())
                .map(|i| GroupPoint::from_index(p, i))
                .filter(|x| x.coords()[2] == 0),
        );
        let b = match find_spectrum(&plane, &budget) {
            Outcome::Found(b) => b,
            other => panic!("plane is spectral: {other:?}"),
        };
        let ft = GroupFunction::indicator(&plane).fourier_transform();
        let pts: Vec<GroupPoint> = b.iter().collect();
        for (i, u) in pts.iter().enumerate() {
            for (j, v) in pts.iter().enumerate() {
                let gram = ft.value(&u.sub(v, p));
                let expected = if i == j {
                    rat_int(plane.len() as i64)
                } else {
                    Rat::from_integer(0.into())
                };
                assert_eq!(gram.as_rational(), Some(&expected), "p={pv} ({i},{j})");
            }
        }
    }
}

#[test]
fn zero_set_membership_matches_float_transform() {
    // cross-check of the exact zero-set rule against the floating
    // transform: |1^_A(x)| < 1e-9 iff the level counts are all equal
    for (pv, seed) in [(3u32, 0x77u64), (5, 0x78), (7, 0x79)] {
        let p = pr(pv);
        let mut rng = sample::rng(seed);
        for _ in 0..20 {
            let a = sample::random_nonempty_group_set(p, &mut rng);
            let zs = a.zero_set();
            let lifted = zs.lift();
            let ft_float = GroupFunction::from_complex_values(
                p,
                GroupFunction::indicator(&a)
                    .values()
                    .iter()
                    .map(|v| v.to_complex())
                    .collect(),
            )
            .fourier_transform();
            for i in 1..p.group_order() {
                let x = GroupPoint::from_index(p, i);
                let vanishes = ft_float.value_at_index(i).to_complex().norm() < FLOAT_TOL;
                assert_eq!(vanishes, lifted.contains(&x), "p={pv} at {x:?}");
            }
        }
    }
}
