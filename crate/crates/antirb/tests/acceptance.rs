//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Expected values tagged as derived in the criteria are computed by
//! independent oracles in this file (direct substitution, exhaustive
//! enumeration) before being asserted against the library.
//!
//! Two sub-criteria are implemented faithfully and are expected to fail;
//! the checks themselves prove the printed claims they encode are not
//! attainable (see `c09b` and `c11b`).

use antirb::lie::{basis_list, check_jacobi, AlgebraKind, BasisIndex, Element};
use antirb::op::{
    delta_rb_residual, verify_identity, CoefficientSource, IdentityKind, OperatorSpec,
};
use antirb::scalar::Scalar;
use antirb::sl2::{
    bridge_check, grid_search, sample_antiderivations, verify_family, Matrix3, Sl2Tag,
};
use antirb::witt::{
    build_vir_family, build_witt_family, classify_solution, enumerate_witt_solutions,
    functional_eq_residual, Branch, VirFamily, WittFamily,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

fn s(text: &str) -> Scalar {
    Scalar::parse(text).unwrap()
}

fn outcome(criterion: &str, description: &str, pass: bool) {
    println!(
        "ACCEPTANCE {criterion} ({description}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {criterion} failed: {description}");
}

/// Independent oracle for the functional equation: direct substitution of
/// explicit values, no library code on the evaluation path.
fn eq7_oracle(f: &dyn Fn(i64) -> Scalar, k: i64, m: i64, n: i64) -> Scalar {
    let lhs = &(&f(m) * &f(n)) * &Scalar::from_int(n - m);
    let rhs = &f(m + n)
        * &(&(&f(m) * &Scalar::from_int(m - n + k))
            + &(&f(n) * &Scalar::from_int(m - n - k)));
    &lhs - &rhs
}

#[test]
fn c01_structure_constants() {
    let start = Instant::now();
    let mut pass = true;
    for (algebra, window) in [
        (AlgebraKind::Witt, 12),
        (AlgebraKind::Virasoro, 12),
        (AlgebraKind::Sl2, 1),
    ] {
        let jacobi = check_jacobi(algebra, window);
        pass &= jacobi.passed() && jacobi.skipped == 0;
        let basis = basis_list(algebra, window);
        for &x in &basis {
            for &y in &basis {
                let xy = Element::basis(x).bracket(&Element::basis(y)).unwrap();
                let yx = Element::basis(y).bracket(&Element::basis(x)).unwrap();
                pass &= xy.add(&yx).unwrap().is_zero();
            }
        }
    }
    pass &= start.elapsed().as_secs() < 10;
    outcome("C1", "antisymmetry and Jacobi, window 12, under 10s", pass);
}

#[test]
fn c02_operator_vs_functional_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_201);
    let mut pass = true;
    let mut pairs_checked = 0u64;
    for k in [0i64, 1, -1, 2, -2] {
        for _ in 0..10 {
            let values: BTreeMap<i64, Scalar> = (-8..=8)
                .map(|m| {
                    let re = (rng.gen_range(-9..=9i64), rng.gen_range(1..=9i64));
                    let im = if rng.gen_range(0..5) == 0 {
                        (rng.gen_range(-9..=9i64), rng.gen_range(1..=9i64))
                    } else {
                        (0, 1)
                    };
                    (m, Scalar::from_parts(re.0, re.1, im.0, im.1))
                })
                .collect();
            let table = CoefficientSource::table(-8, 8, values.clone());
            let op = OperatorSpec::homogeneous_witt(k, table.clone());
            let lookup = |m: i64| values.get(&m).cloned().unwrap_or_else(Scalar::zero);
            for m in -16..=16i64 {
                for n in -16..=16i64 {
                    let (mp, np, target) = (m + k, n + k, m + n + 2 * k);
                    if ![mp, np, target].iter().all(|i| (-8..=8).contains(i)) {
                        continue;
                    }
                    let op_residual =
                        delta_rb_residual(&op, BasisIndex::WittGen(m), BasisIndex::WittGen(n), &s("-1"))
                            .unwrap()
                            .expect("all lookups in domain");
                    // predicted basis vector: -L_{m+n+2k}; the sign is fixed
                    // by the two pinned residual orientations
                    let r = eq7_oracle(&lookup, k, mp, np);
                    let predicted =
                        Element::basis(BasisIndex::WittGen(target)).scale(&-&r);
                    pass &= op_residual == predicted;
                    pass &= functional_eq_residual(&table, k, mp, np) == Some(r);
                    pairs_checked += 1;
                }
            }
        }
    }
    pass &= pairs_checked > 1000;
    outcome(
        "C2",
        "operator residual = functional residual x predicted basis vector, 50 seeded tables",
        pass,
    );
}

#[test]
fn c03_witt_family_i() {
    let mut pass = true;
    for k in -3..=3i64 {
        for alpha in ["1", "2/3", "1+1i"] {
            let op = build_witt_family(&WittFamily::I { k, alpha: s(alpha) }).unwrap();
            let report = verify_identity(&op, 20, &IdentityKind::AntiRb).unwrap();
            pass &= report.passed() && report.skipped == 0;
        }
    }
    outcome("C3", "family I exact-zero residual, k in -3..=3, window 20", pass);
}

#[test]
fn c04_witt_family_ii() {
    let mut pass = true;
    for half in [1i64, -1, 2, -2] {
        for beta in ["1", "-5/7"] {
            let op = build_witt_family(&WittFamily::II {
                half_degree: half,
                beta: s(beta),
            })
            .unwrap();
            let report = verify_identity(&op, 20, &IdentityKind::AntiRb).unwrap();
            pass &= report.passed() && report.skipped == 0;
        }
    }
    outcome("C4", "family II exact-zero residual, window 20", pass);
}

#[test]
fn c05_family_iii_adjudication() {
    // Oracle first: direct substitution of the proposition's formula
    // f(m) = (k-2m)/(m+k) on even integers, f(0) = 1, at k=1, l=2.
    let oracle_f = |m: i64| -> Scalar {
        if m.rem_euclid(2) != 0 {
            Scalar::zero()
        } else {
            Scalar::from_ratio(1 - 2 * m, m + 1)
        }
    };
    let oracle_residual = eq7_oracle(&oracle_f, 1, 2, 4);
    let mut pass = oracle_residual == s("384/35");

    for family in [
        WittFamily::IiiThm { k: 1, l: 2, gamma: s("1") },
        WittFamily::IiiProp4 { k: 1, l: 2, gamma: s("1") },
    ] {
        let op = build_witt_family(&family).unwrap();
        let report = verify_identity(&op, 8, &IdentityKind::AntiRb).unwrap();
        pass &= !report.violations.is_empty();
    }

    let prop4 = build_witt_family(&WittFamily::IiiProp4 { k: 1, l: 2, gamma: s("1") }).unwrap();
    let OperatorSpec::Homogeneous(h) = &prop4 else { unreachable!() };
    pass &= functional_eq_residual(&h.coeffs, 1, 2, 4) == Some(s("384/35"));
    outcome(
        "C5",
        "both family III variants violated; residual at (2,4) is exactly 384/35",
        pass,
    );
}

/// Exhaustive dichotomy-assignment oracle: enumerate the full product of
/// allowed values per index, then filter by the functional equation on all
/// in-window pairs. No pruning, no solver code.
fn dichotomy_oracle(k: i64, window: i64) -> BTreeSet<Vec<(i64, Scalar)>> {
    let dich = |m: i64| -> Scalar {
        if k == 0 {
            Scalar::from_int(-2)
        } else {
            Scalar::from_ratio(k - 2 * m, m + k)
        }
    };
    let mut choice_sets: Vec<(i64, Vec<Scalar>)> = Vec::new();
    for m in -window..=window {
        let choices = if m == 0 {
            vec![Scalar::one()]
        } else if k != 0 && m == -k {
            // n = 0 relation at m = -k: -3k f(0) f(-k) = 0
            vec![Scalar::zero()]
        } else {
            let v = dich(m);
            if v.is_zero() {
                vec![Scalar::zero()]
            } else {
                vec![Scalar::zero(), v]
            }
        };
        choice_sets.push((m, choices));
    }

    let mut out = BTreeSet::new();
    let total: usize = choice_sets.iter().map(|(_, c)| c.len()).product();
    for combo in 0..total {
        let mut rest = combo;
        let mut values = BTreeMap::new();
        for (m, choices) in &choice_sets {
            let pick = &choices[rest % choices.len()];
            rest /= choices.len();
            if !pick.is_zero() {
                values.insert(*m, pick.clone());
            }
        }
        let f = |m: i64| values.get(&m).cloned().unwrap_or_else(Scalar::zero);
        let mut ok = true;
        'pairs: for m in -window..=window {
            for n in m..=window {
                let sum = m + n;
                if (-window..=window).contains(&sum)
                    && !eq7_oracle(&f, k, m, n).is_zero()
                {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            out.insert(values.into_iter().collect());
        }
    }
    out
}

#[test]
fn c06_solver_vs_oracle() {
    let mut pass = true;
    for k in [1i64, 2, 3, 0] {
        let solved = enumerate_witt_solutions(k, 6, Branch::F0Nonzero).unwrap();
        let solved_set: BTreeSet<Vec<(i64, Scalar)>> = solved
            .iter()
            .map(|c| c.values.clone().into_iter().collect())
            .collect();
        let oracle_set = dichotomy_oracle(k, 6);
        pass &= solved_set == oracle_set;

        let stable: BTreeSet<Vec<(i64, Scalar)>> = solved
            .iter()
            .filter(|c| c.stable)
            .map(|c| c.values.clone().into_iter().collect())
            .collect();
        let origin = vec![(0i64, s("1"))];
        let expected_stable: BTreeSet<Vec<(i64, Scalar)>> = match k {
            2 => BTreeSet::from([origin.clone(), vec![(-1, s("4")), (0, s("1"))]]),
            _ => BTreeSet::from([origin.clone()]),
        };
        pass &= stable == expected_stable;

        if k != 0 {
            // the f(0) = 0 branch candidate delta_{m,-k}
            let zero_branch = enumerate_witt_solutions(k, 6, Branch::F0Zero).unwrap();
            pass &= zero_branch.len() == 1
                && zero_branch[0].values == BTreeMap::from([(-k, s("1"))])
                && zero_branch[0].stable;

            // delta_{m,0} at nonzero degree must be reported as
            // unclassified with respect to the printed families
            let origin_candidate = solved
                .iter()
                .find(|c| c.values == BTreeMap::from([(0, s("1"))]))
                .expect("origin candidate present");
            pass &= classify_solution(origin_candidate).unclassified_wrt_paper;
        }
    }
    outcome(
        "C6",
        "solver set equals exhaustive dichotomy oracle; stable sets as derived",
        pass,
    );
}

#[test]
fn c07_virasoro_theorem_degree_zero() {
    let mut pass = true;
    let grid = ["1", "1/2"];
    let mut tuples: Vec<[&str; 4]> = Vec::new();
    for a in grid {
        for t in grid {
            for m in grid {
                for n in grid {
                    tuples.push([a, t, m, n]);
                }
            }
        }
    }
    tuples.push(["1", "1+1i", "1/2", "1"]);
    for [alpha, theta, mu, nu] in tuples {
        let op = build_vir_family(&VirFamily::Deg0 {
            alpha: s(alpha),
            theta: s(theta),
            mu: s(mu),
            nu: s(nu),
        })
        .unwrap();
        let report = verify_identity(&op, 12, &IdentityKind::AntiRb).unwrap();
        pass &= report.passed() && report.skipped == 0;
    }
    outcome(
        "C7",
        "degree-zero Virasoro family exact-zero over 2^4 grid plus non-real theta, window 12",
        pass,
    );
}

/// Independent substitution oracle for the family-IV sign: with
/// `R(L_0) = c L_k` and `R(C) = mu L_k`, the residual at `(L_0, L_{-k})`
/// is `c (2k c + (k^3 - k) mu / 12) L_k` and the residual at `(L_{-k}, C)`
/// is `-mu (2k c + (k^3 - k) mu / 12) L_k`; every other pair vanishes.
fn family_iv_oracle_passes(k: i64, c: &Scalar, mu: &Scalar) -> bool {
    let cocycle = &Scalar::from_ratio(k * k * k - k, 12) * mu;
    let stem = &(&Scalar::from_int(2 * k) * c) + &cocycle;
    (c * &stem).is_zero() && (mu * &stem).is_zero()
}

#[test]
fn c08_virasoro_theorem_nonzero_degree() {
    let mut pass = true;
    let params = ["1", "2/3", "1+1i"];
    for k in [1i64, -1, 2, -2] {
        for p in params {
            let op = build_vir_family(&VirFamily::I { k, theta: s(p) }).unwrap();
            pass &= verify_identity(&op, 16, &IdentityKind::AntiRb).unwrap().passed();
            let op = build_vir_family(&VirFamily::II { k, alpha: s(p) }).unwrap();
            pass &= verify_identity(&op, 16, &IdentityKind::AntiRb).unwrap().passed();
        }
    }
    for half in [1i64, -1] {
        for p in params {
            let op = build_vir_family(&VirFamily::III {
                half_degree: half,
                beta: s(p),
                vartheta: s("1+1i"),
            })
            .unwrap();
            pass &= verify_identity(&op, 16, &IdentityKind::AntiRb).unwrap().passed();
        }
    }

    // family IV: exactly one sign passes for k in {2, 3}; both coincide and
    // pass at k = 1 where (k^2 - 1)/24 = 0
    for k in [2i64, 3] {
        let mu = s("1");
        let printed = build_vir_family(&VirFamily::IvPrinted { k, mu: mu.clone() }).unwrap();
        let flipped = build_vir_family(&VirFamily::IvSignflip { k, mu: mu.clone() }).unwrap();
        let printed_pass = verify_identity(&printed, 16, &IdentityKind::AntiRb)
            .unwrap()
            .passed();
        let flipped_pass = verify_identity(&flipped, 16, &IdentityKind::AntiRb)
            .unwrap()
            .passed();
        pass &= printed_pass ^ flipped_pass;

        let magnitude = &Scalar::from_ratio(k * k - 1, 24) * &mu;
        pass &= printed_pass == family_iv_oracle_passes(k, &magnitude, &mu);
        pass &= flipped_pass == family_iv_oracle_passes(k, &-&magnitude, &mu);
    }
    for family in [
        VirFamily::IvPrinted { k: 1, mu: s("1") },
        VirFamily::IvSignflip { k: 1, mu: s("1") },
    ] {
        let op = build_vir_family(&family).unwrap();
        pass &= verify_identity(&op, 16, &IdentityKind::AntiRb).unwrap().passed();
    }
    outcome(
        "C8",
        "nonzero-degree Virasoro families; exactly one family-IV sign verifies",
        pass,
    );
}

#[test]
fn c09a_sl2_families_verify() {
    let mut pass = true;
    for tag in Sl2Tag::ALL {
        let report = verify_family(tag, 100, 42);
        pass &= report.relation_failures.is_empty();
        pass &= report.antirb_failures.is_empty();
        if tag.is_strong_listed() {
            pass &= report.strong_violations.is_empty();
        }
    }
    outcome(
        "C9a",
        "ten patterns verify relations and anti-RB at 100 samples; strong sub-list strong",
        pass,
    );
}

#[test]
fn c09b_sl2_nonlisted_strong_falsification() {
    // Implemented exactly as stated: every pattern off the printed strong
    // sub-list should exhibit a sampled strong violation. No such point
    // exists: the strong residual of each of the six families is the zero
    // polynomial (the planned falsification cannot succeed), so this
    // criterion fails and the failure itself is the finding the
    // adjudication records: the printed strong sub-list is not exclusive.
    let mut pass = true;
    for tag in Sl2Tag::ALL {
        if tag.is_strong_listed() {
            continue;
        }
        let report = verify_family(tag, 100, 42);
        pass &= !report.strong_violations.is_empty();
    }
    outcome(
        "C9b",
        "six non-listed patterns each show a sampled strong violation",
        pass,
    );
}

#[test]
fn c10_sl2_grid_search() {
    let start = Instant::now();
    let hits4 = grid_search(2, 4);
    let elapsed = start.elapsed();
    let hits2 = grid_search(2, 2);
    let hits1 = grid_search(2, 1);
    let mut pass = hits4 == hits2 && hits4 == hits1;
    pass &= elapsed.as_secs() < 180;

    // every hit is matched or flagged; the flag list is data, not assumed
    // empty
    let flagged: Vec<_> = hits4.iter().filter(|h| h.matches.is_empty()).collect();
    for hit in &hits4 {
        pass &= !hit.matches.is_empty() || flagged.iter().any(|f| f.entries == hit.entries);
    }
    println!(
        "  grid range 2: {} hits, {} flagged as unmatched, {:?} with 4 workers",
        hits4.len(),
        flagged.len(),
        elapsed
    );
    pass &= hits4
        .iter()
        .any(|h| h.entries == [[0, 1, 0], [0, 0, -1], [2, 0, 0]]);
    outcome(
        "C10",
        "range-2 grid complete under 3 minutes, stable across worker counts",
        pass,
    );
}

fn sample_nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let v = Scalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        if !v.is_zero() {
            return v;
        }
    }
}

fn sample_any(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// The three printed invertible shapes, built directly from raw entries so
/// condition-violating points can be constructed too.
fn invertible_pattern_matrix(pattern: usize, params: &[Scalar]) -> Matrix3 {
    let z = Scalar::zero;
    let two = Scalar::from_int(2);
    match pattern {
        // (0,b,0; 0,0,-k/2; k,0,m), condition b k != 0
        0 => {
            let [b, k, m] = params else { panic!() };
            Matrix3::new([
                [z(), b.clone(), z()],
                [z(), z(), -&(k * &two.inv().unwrap())],
                [k.clone(), z(), m.clone()],
            ])
        }
        // (0,b,c; d,0,bd/4c; -bd/2c,-2c,m), condition d(b^3 d + 8 c^2 b m + 16 c^4) != 0
        1 => {
            let [b, c, d, m] = params else { panic!() };
            let bd = b * d;
            Matrix3::new([
                [z(), b.clone(), c.clone()],
                [d.clone(), z(), &bd * &(&Scalar::from_int(4) * c).inv().unwrap()],
                [
                    &-&bd * &(&two * c).inv().unwrap(),
                    &-&two * c,
                    m.clone(),
                ],
            ])
        }
        // (g,b,c; d,g,h; -2h,-2c,(bd-g^2-4ch)/2g), condition
        // b^2d^2 + 8c^2dg - 2bdg^2 + g^4 - 4bcdh - 12cg^2h + 8bgh^2 != 0
        2 => {
            let [g, b, c, d, h] = params else { panic!() };
            let corner = &(&(&(b * d) - &(g * g)) - &(&Scalar::from_int(4) * &(c * h)))
                * &(&two * g).inv().unwrap();
            Matrix3::new([
                [g.clone(), b.clone(), c.clone()],
                [d.clone(), g.clone(), h.clone()],
                [&-&two * h, &-&two * c, corner],
            ])
        }
        _ => unreachable!(),
    }
}

fn pattern_condition(pattern: usize, params: &[Scalar]) -> Scalar {
    let i = Scalar::from_int;
    match pattern {
        0 => {
            let [b, k, _] = params else { panic!() };
            b * k
        }
        1 => {
            let [b, c, d, m] = params else { panic!() };
            let inner = &(&(&(b * b) * &(b * d)) + &(&(&i(8) * &(c * c)) * &(b * m)))
                + &(&i(16) * &(&(c * c) * &(c * c)));
            d * &inner
        }
        2 => {
            let [g, b, c, d, h] = params else { panic!() };
            let bd = &(b * d);
            let g2 = &(g * g);
            let c2 = &(c * c);
            let t1 = &(bd * bd);
            let t2 = &(&i(8) * &(c2 * &(d * g)));
            let t3 = &(&i(-2) * &(bd * g2));
            let t4 = &(g2 * g2);
            let t5 = &(&i(-4) * &(&(b * c) * &(d * h)));
            let t6 = &(&i(-12) * &(&(c * g2) * h));
            let t7 = &(&i(8) * &(&(b * g) * &(h * h)));
            &(&(&(&(&(t1 + t2) + t3) + t4) + t5) + t6) + t7
        }
        _ => unreachable!(),
    }
}

fn draw_params(pattern: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    match pattern {
        0 => vec![sample_any(rng), sample_any(rng), sample_any(rng)],
        1 => vec![
            sample_any(rng),
            sample_nonzero(rng), // c enters denominators of the shape
            sample_any(rng),
            sample_any(rng),
        ],
        2 => vec![
            sample_nonzero(rng), // g enters the corner denominator
            sample_any(rng),
            sample_any(rng),
            sample_any(rng),
            sample_any(rng),
        ],
        _ => unreachable!(),
    }
}

#[test]
fn c11a_invertibility_condition_satisfied() {
    let mut rng = ChaCha8Rng::seed_from_u64(1_118);
    let mut pass = true;
    for pattern in 0..3usize {
        let mut accepted = 0;
        while accepted < 50 {
            let params = draw_params(pattern, &mut rng);
            if pattern_condition(pattern, &params).is_zero() {
                continue;
            }
            accepted += 1;
            let matrix = invertible_pattern_matrix(pattern, &params);
            let det = matrix.det();
            pass &= !det.is_zero();
            if let Ok(inverse) = matrix.inverse() {
                pass &= matrix.mul(&inverse) == Matrix3::identity();
            } else {
                pass = false;
            }
        }
    }
    outcome(
        "C11a",
        "50 condition-satisfying samples per pattern: det nonzero, exact inverse",
        pass,
    );
}

#[test]
fn c11b_invertibility_condition_violated() {
    let mut rng = ChaCha8Rng::seed_from_u64(1_119);
    let mut pass = true;

    // pattern 1: b k = 0
    for index in 0..10 {
        let (b, k) = if index % 2 == 0 {
            (Scalar::zero(), sample_nonzero(&mut rng))
        } else {
            (sample_nonzero(&mut rng), Scalar::zero())
        };
        let matrix = invertible_pattern_matrix(0, &[b, k, sample_any(&mut rng)]);
        pass &= matrix.det().is_zero();
    }

    // pattern 2: alternate d = 0 with points where the cubic factor
    // vanishes, via m = -(b^3 d + 16 c^4) / (8 c^2 b)
    for index in 0..10 {
        let params = if index % 2 == 0 {
            vec![
                sample_nonzero(&mut rng),
                sample_nonzero(&mut rng),
                Scalar::zero(),
                sample_any(&mut rng),
            ]
        } else {
            let b = sample_nonzero(&mut rng);
            let c = sample_nonzero(&mut rng);
            let d = sample_nonzero(&mut rng);
            let c2 = &c * &c;
            let numer = &(&(&(&b * &b) * &(&b * &d))
                + &(&Scalar::from_int(16) * &(&c2 * &c2)))
                * &s("-1");
            let m = &numer * &(&(&Scalar::from_int(8) * &c2) * &b).inv().unwrap();
            vec![b, c, d, m]
        };
        assert!(pattern_condition(1, &params).is_zero());
        let matrix = invertible_pattern_matrix(1, &params);
        pass &= matrix.det().is_zero();
    }

    // pattern 3: zeros of the printed polynomial, constructed exactly with
    // b = 0 and d = (12 c g^2 h - g^4) / (8 c^2 g). The printed polynomial
    // differs from the determinant by 4g(c^2 d - 2cgh + bh^2), so these
    // points are generically invertible and the printed condition does not
    // characterize invertibility; the assertion below records that finding
    // by failing.
    for _ in 0..10 {
        let g = sample_nonzero(&mut rng);
        let c = sample_nonzero(&mut rng);
        let h = sample_nonzero(&mut rng);
        let g2 = &g * &g;
        let numer = &(&(&Scalar::from_int(12) * &(&c * &g2)) * &h) - &(&g2 * &g2);
        let d = &numer * &(&(&Scalar::from_int(8) * &(&c * &c)) * &g).inv().unwrap();
        let params = vec![g, Scalar::zero(), c, d, h];
        assert!(pattern_condition(2, &params).is_zero());
        let matrix = invertible_pattern_matrix(2, &params);
        pass &= matrix.det().is_zero();
    }

    outcome(
        "C11b",
        "10 condition-violating samples per pattern give det = 0",
        pass,
    );
}

#[test]
fn c12_antiderivation_bridge() {
    let mut pass = true;
    let samples = sample_antiderivations(100, 77);
    pass &= samples.len() == 100;
    for sample in &samples {
        let report = bridge_check(sample).expect("samples are invertible");
        pass &= report.derivation_pass;
        pass &= report.inverse_antirb_pass;
        pass &= report.closed_form != antirb::sl2::ClosedFormCheck::Disagrees;
        pass &= report.inverse_matches_f9;
        pass &= report.det_formula_agrees;
    }
    outcome(
        "C12",
        "100 invertible anti-derivations pass all bridge assertions",
        pass,
    );
}
