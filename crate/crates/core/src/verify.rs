//! Exhaustive consistency checks over all pairs with `p + q ≤ n_max`.
//!
//! Pairs are evaluated in parallel; outcomes are reported in a fixed order and
//! each failing check carries the first counterexample in canonical pair order.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::classify::{
    all_character_sheaves, all_orbital_complexes, character_sheaves, cuspidal_sheaves,
    fourier_forward, fourier_inverse, induction_datum_for_sheaf, levi_for_nilpotent_support,
    nilpotent_support_sheaves, orbital_complexes, Induction,
};
use crate::combinat::euler_phi;
use crate::error::{Error, Result};
use crate::oracle::{centralizer_dim_in_k, count_orbits_independent, representative, stratum_dim};
use crate::orbits::{enumerate_orbits, orbit_dimension, PairContext};
use crate::records::VerificationRecord;
use crate::strata::{cs_orbits, DualStratumLabel};

/// Largest accepted `n_max`.
pub const MAX_N: u32 = 16;
/// Cap for the recursive orbit counter.
pub const ORBIT_COUNT_CAP: u32 = 14;
/// Cap for the centralizer-rank dimension oracle.
pub const ORBIT_DIMENSION_CAP: u32 = 6;
/// Cap for the sampled stratum dimensions.
pub const STRATUM_DIMENSION_CAP: u32 = 8;

/// Per-pair result: number of cases examined and the first failure.
type Cell = (u64, Option<String>);

fn over_pairs<F>(check: &str, n_max: u32, f: F) -> VerificationRecord
where
    F: Fn(PairContext) -> Cell + Sync + Send,
{
    let cells: Vec<Cell> = PairContext::all_up_to(n_max)
        .into_par_iter()
        .map(f)
        .collect();
    let cases = cells.iter().map(|c| c.0).sum();
    let counterexample = cells.into_iter().find_map(|c| c.1);
    VerificationRecord {
        check: check.to_string(),
        passed: counterexample.is_none(),
        cases,
        counterexample,
    }
}

/// Every enumerated diagram has the pair's signature and appears once.
pub fn check_enumeration(n_max: u32) -> VerificationRecord {
    over_pairs("enumeration-signature", n_max, |ctx| {
        let orbits = enumerate_orbits(ctx);
        let distinct: HashSet<_> = orbits.iter().collect();
        if distinct.len() != orbits.len() {
            return (
                orbits.len() as u64,
                Some(format!("{ctx}: duplicate diagrams")),
            );
        }
        let bad = orbits.iter().find(|o| ctx.check_signature(o).is_err());
        (
            orbits.len() as u64,
            bad.map(|o| format!("{ctx}: {o} has signature {:?}", o.signature())),
        )
    })
}

pub fn check_orbit_count(n_max: u32) -> VerificationRecord {
    over_pairs("orbit-count-oracle", n_max.min(ORBIT_COUNT_CAP), |ctx| {
        let listed = enumerate_orbits(ctx).len() as u64;
        let counted = count_orbits_independent(ctx);
        (
            1,
            (listed != counted).then(|| format!("{ctx}: enumerated {listed}, counted {counted}")),
        )
    })
}

pub fn check_orbit_dimension(n_max: u32) -> VerificationRecord {
    over_pairs(
        "orbit-dimension-oracle",
        n_max.min(ORBIT_DIMENSION_CAP),
        |ctx| {
            let orbits = enumerate_orbits(ctx);
            for o in &orbits {
                let formula = orbit_dimension(o, ctx).expect("enumerated orbit");
                let x = representative(o, ctx).expect("enumerated orbit");
                let by_rank = ctx.dim_k() - centralizer_dim_in_k(&x);
                if formula != by_rank {
                    return (
                        orbits.len() as u64,
                        Some(format!("{ctx}: {o} formula {formula}, rank {by_rank}")),
                    );
                }
            }
            (orbits.len() as u64, None)
        },
    )
}

/// Sampled stratum dimensions for `μ = ∅` against `2m²l² − ml + l`.
pub fn check_stratum_dimension(n_max: u32) -> VerificationRecord {
    over_pairs(
        "stratum-dimension-oracle",
        n_max.min(STRATUM_DIMENSION_CAP),
        |ctx| {
            let labels: Vec<DualStratumLabel> = cs_orbits(ctx)
                .into_iter()
                .filter(|s| s.mu().is_none())
                .collect();
            for s in &labels {
                let (m, l) = (u64::from(s.m()), u64::from(s.l()));
                let expected = 2 * m * m * l * l - m * l + l;
                match stratum_dim(s, ctx) {
                    Ok(d) if d == expected => {}
                    Ok(d) => {
                        return (
                            labels.len() as u64,
                            Some(format!("{ctx}: {s} sampled {d}, expected {expected}")),
                        )
                    }
                    Err(e) => return (labels.len() as u64, Some(format!("{ctx}: {s}: {e}"))),
                }
            }
            (labels.len() as u64, None)
        },
    )
}

/// `Σ_λ d_λ = Σ_m |sheaves_m|`, and per `m`, `φ(m)·#{λ : m | d_λ}`.
pub fn check_counting(n_max: u32) -> VerificationRecord {
    over_pairs("counting-identity", n_max, |ctx| {
        let orbits = enumerate_orbits(ctx);
        let sum_d: u64 = orbits.iter().map(|o| u64::from(o.d_lambda())).sum();
        let mut total = 0u64;
        for m in 1..=ctx.n() {
            let count = character_sheaves(ctx, m).len() as u64;
            let expected = u64::from(euler_phi(m))
                * orbits.iter().filter(|o| o.d_lambda() % m == 0).count() as u64;
            if count != expected {
                return (
                    1,
                    Some(format!(
                        "{ctx}, m={m}: {count} sheaves, expected {expected}"
                    )),
                );
            }
            total += count;
        }
        (
            1,
            (total != sum_d).then(|| format!("{ctx}: Σ d_λ = {sum_d}, sheaves = {total}")),
        )
    })
}

/// Forward is onto the sheaves of each order and both composites are identities.
pub fn check_bijection(n_max: u32) -> VerificationRecord {
    over_pairs("fourier-bijection", n_max, |ctx| {
        let mut cases = 0;
        for m in 1..=ctx.n() {
            let complexes = orbital_complexes(ctx, m);
            let sheaves = character_sheaves(ctx, m);
            cases += (complexes.len() + sheaves.len()) as u64;
            let mut image = HashSet::new();
            for c in &complexes {
                let s = fourier_forward(c);
                if s.central_order() != m {
                    return (
                        cases,
                        Some(format!("{ctx}: {c} ↦ {s} changes the central order")),
                    );
                }
                match fourier_inverse(&s, ctx) {
                    Ok(back) if &back == c => {}
                    Ok(back) => return (cases, Some(format!("{ctx}: {c} ↦ {s} ↦ {back}"))),
                    Err(e) => return (cases, Some(format!("{ctx}: {c} ↦ {s}: {e}"))),
                }
                image.insert(s);
            }
            let target: HashSet<_> = sheaves.iter().cloned().collect();
            if image != target || target.len() != sheaves.len() {
                let missing = sheaves.iter().find(|s| !image.contains(*s));
                return (
                    cases,
                    Some(format!(
                        "{ctx}, m={m}: image ≠ sheaves (e.g. {:?} missed)",
                        missing.map(|s| s.to_string())
                    )),
                );
            }
            for s in &sheaves {
                match fourier_inverse(s, ctx) {
                    Ok(c) if &fourier_forward(&c) == s => {}
                    Ok(c) => {
                        return (
                            cases,
                            Some(format!("{ctx}: {s} ↦ {c} ↦ {}", fourier_forward(&c))),
                        )
                    }
                    Err(e) => return (cases, Some(format!("{ctx}: {s}: {e}"))),
                }
            }
        }
        (cases, None)
    })
}

/// The `l = 0` odd sheaves pull back onto Richardson orbits with odd-order characters.
pub fn check_nilpotent_support(n_max: u32) -> VerificationRecord {
    over_pairs("nilpotent-support", n_max, |ctx| {
        let expected: HashSet<_> = nilpotent_support_sheaves(ctx).into_iter().collect();
        let mut pulled = HashSet::new();
        for s in all_character_sheaves(ctx)
            .into_iter()
            .filter(|s| s.is_nilpotent_support())
        {
            match fourier_inverse(&s, ctx) {
                Ok(c) => {
                    pulled.insert((c.orbit().clone(), c.character()));
                }
                Err(e) => return (expected.len() as u64, Some(format!("{ctx}: {s}: {e}"))),
            }
        }
        let cases = expected.len() as u64;
        if pulled != expected {
            let extra = pulled
                .difference(&expected)
                .next()
                .map(|(o, c)| format!("{o} {c}"));
            let missing = expected
                .difference(&pulled)
                .next()
                .map(|(o, c)| format!("{o} {c}"));
            return (
                cases,
                Some(format!("{ctx}: extra {extra:?}, missing {missing:?}")),
            );
        }
        (cases, None)
    })
}

pub fn expected_cuspidal_count(ctx: PairContext) -> u64 {
    let (p, q, n) = (ctx.p(), ctx.q(), ctx.n());
    match p.abs_diff(q) {
        0 => {
            let half = n / 2;
            2 * u64::from(euler_phi(n))
                + if half % 2 == 1 {
                    u64::from(euler_phi(half))
                } else {
                    0
                }
        }
        1 => u64::from(euler_phi(n)),
        _ => 0,
    }
}

pub fn check_cuspidal_counts(n_max: u32) -> VerificationRecord {
    over_pairs("cuspidal-counts", n_max, |ctx| {
        let cusp = cuspidal_sheaves(ctx);
        let expected = expected_cuspidal_count(ctx);
        if cusp.len() as u64 != expected {
            return (
                1,
                Some(format!(
                    "{ctx}: {} cuspidals, expected {expected}",
                    cusp.len()
                )),
            );
        }
        let all: HashSet<_> = all_character_sheaves(ctx).into_iter().collect();
        let stray = cusp.iter().find(|s| !all.contains(*s));
        (
            1,
            stray.map(|s| format!("{ctx}: cuspidal {s} is not a character sheaf")),
        )
    })
}

/// The induction data say "not induced" exactly on the cuspidals, and every
/// Levi returned satisfies the bookkeeping laws.
pub fn check_not_induced(n_max: u32) -> VerificationRecord {
    over_pairs("cuspidals-not-induced", n_max, |ctx| {
        let cusp: HashSet<_> = cuspidal_sheaves(ctx).into_iter().collect();
        let sheaves = all_character_sheaves(ctx);
        let cases = sheaves.len() as u64;
        for s in &sheaves {
            match induction_datum_for_sheaf(s, ctx) {
                Err(e) => return (cases, Some(format!("{ctx}: {s}: {e}"))),
                Ok(Induction::NotInduced) if !cusp.contains(s) => {
                    return (
                        cases,
                        Some(format!("{ctx}: {s} not induced but not cuspidal")),
                    )
                }
                Ok(Induction::Induced(_)) if cusp.contains(s) => {
                    return (cases, Some(format!("{ctx}: cuspidal {s} has a Levi")))
                }
                Ok(Induction::Induced(levi)) => {
                    if levi.is_whole_group() {
                        return (
                            cases,
                            Some(format!("{ctx}: {s} induced from the whole group")),
                        );
                    }
                    if let Err(e) = levi.check_laws(ctx, &s.stratum().merged()) {
                        return (cases, Some(format!("{ctx}: {s}: {e}")));
                    }
                }
                Ok(Induction::NotInduced) => {}
            }
        }
        (cases, None)
    })
}

/// Sign-block Levis for every Richardson orbit and every odd `m | d_λ`.
pub fn check_levi_laws(n_max: u32) -> VerificationRecord {
    over_pairs("levi-laws", n_max, |ctx| {
        let mut cases = 0;
        for lambda in enumerate_orbits(ctx)
            .into_iter()
            .filter(|o| o.is_richardson())
        {
            let d = lambda.d_lambda();
            for m in (1..=d).step_by(2).filter(|m| d % m == 0) {
                cases += 1;
                let levi = match levi_for_nilpotent_support(&lambda, m) {
                    Ok(l) => l,
                    Err(e) => return (cases, Some(format!("{ctx}: {lambda}, m={m}: {e}"))),
                };
                if let Err(e) = levi.check_laws(ctx, &lambda) {
                    return (cases, Some(format!("{ctx}: {lambda}, m={m}: {e}")));
                }
                let all_ones = lambda.blocks().iter().all(|b| b.length == m);
                if levi.is_whole_group() != all_ones {
                    return (
                        cases,
                        Some(format!(
                            "{ctx}: {lambda}, m={m}: whole group = {}",
                            levi.is_whole_group()
                        )),
                    );
                }
            }
        }
        (cases, None)
    })
}

pub fn check_parity(n_max: u32) -> VerificationRecord {
    over_pairs("even-order-parity", n_max, |ctx| {
        if ctx.p() == ctx.q() {
            return (0, None);
        }
        let cases = u64::from(ctx.n() / 2);
        let bad = (2..=ctx.n())
            .step_by(2)
            .find(|&m| !character_sheaves(ctx, m).is_empty());
        (
            cases,
            bad.map(|m| format!("{ctx}: sheaves of even order {m} with p ≠ q")),
        )
    })
}

/// No two stratum labels coincide, and for fixed `m` distinct labels merge to
/// distinct diagrams. Collisions across different `m` are allowed.
pub fn check_label_collisions(n_max: u32) -> VerificationRecord {
    over_pairs("stratum-label-collisions", n_max, |ctx| {
        let labels = cs_orbits(ctx);
        let mut seen_labels = HashSet::new();
        let mut seen_merged = HashSet::new();
        for s in &labels {
            if !seen_labels.insert(s.clone()) {
                return (
                    labels.len() as u64,
                    Some(format!("{ctx}: duplicate label {s}")),
                );
            }
            if !seen_merged.insert((s.m(), s.merged())) {
                return (
                    labels.len() as u64,
                    Some(format!(
                        "{ctx}: {s} collides with another label of the same m"
                    )),
                );
            }
        }
        (labels.len() as u64, None)
    })
}

/// Orbital complexes and sheaves have the same total count per pair.
fn check_totals(n_max: u32) -> VerificationRecord {
    over_pairs("complex-sheaf-totals", n_max, |ctx| {
        let (a, b) = (
            all_orbital_complexes(ctx).len(),
            all_character_sheaves(ctx).len(),
        );
        (
            1,
            (a != b).then(|| format!("{ctx}: {a} complexes, {b} sheaves")),
        )
    })
}

/// Runs every check. `n_max` must lie in `1..=MAX_N`.
pub fn run_all(n_max: u32) -> Result<Vec<VerificationRecord>> {
    if n_max == 0 || n_max > MAX_N {
        return Err(Error::OutOfRange { n_max, max: MAX_N });
    }
    let checks: [fn(u32) -> VerificationRecord; 13] = [
        check_enumeration,
        check_orbit_count,
        check_orbit_dimension,
        check_stratum_dimension,
        check_counting,
        check_totals,
        check_bijection,
        check_nilpotent_support,
        check_cuspidal_counts,
        check_not_induced,
        check_levi_laws,
        check_parity,
        check_label_collisions,
    ];
    Ok(checks.iter().map(|f| f(n_max)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_through_n_8() {
        let report = run_all(8).unwrap();
        assert_eq!(report.len(), 13);
        for r in &report {
            assert!(r.passed, "{}: {:?}", r.check, r.counterexample);
            assert!(r.cases > 0, "{} examined nothing", r.check);
        }
    }

    #[test]
    fn small_n_max_still_samples_the_paired_stratum() {
        let r = check_stratum_dimension(4);
        assert!(r.passed);
        assert_eq!(r.cases, 3);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(run_all(0).is_err());
        assert!(run_all(MAX_N + 1).is_err());
    }

    #[test]
    fn expected_cuspidal_counts() {
        let count = |p, q| expected_cuspidal_count(PairContext::new(p, q).unwrap());
        assert_eq!(
            (count(2, 1), count(1, 1), count(2, 2), count(3, 3)),
            (2, 3, 4, 6)
        );
        assert_eq!(count(4, 1), 0);
    }
}
