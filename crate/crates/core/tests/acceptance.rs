//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use charsheaf::classify::{
    all_character_sheaves, character_sheaves, cuspidal_sheaves, fourier_forward, fourier_inverse,
    levi_for_nilpotent_support, nilpotent_support_sheaves, orbital_complexes,
};
use charsheaf::combinat::euler_phi;
use charsheaf::oracle::{
    centralizer_dim_in_k, count_orbits_independent, representative, stratum_dim,
};
use charsheaf::orbits::{enumerate_orbits, orbit_dimension, PairContext};
use charsheaf::strata::{cs_orbits, DualStratumLabel};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pair(p: u32, q: u32) -> PairContext {
    PairContext::new(p, q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || {
        format!("took {elapsed:.1?}, limit {limit:?}")
    })
}

fn counting_identity() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for ctx in PairContext::all_up_to(12) {
        let sum_d: u32 = enumerate_orbits(ctx).iter().map(|o| o.d_lambda()).sum();
        let sheaves: usize = (1..=ctx.n()).map(|m| character_sheaves(ctx, m).len()).sum();
        ensure(sum_d as usize == sheaves, || {
            format!("{ctx}: Σ d_λ = {sum_d}, sheaves = {sheaves}")
        })?;
        pairs += 1;
    }
    let ctx = pair(2, 2);
    let per_m: Vec<usize> = [1, 2, 4]
        .iter()
        .map(|&m| character_sheaves(ctx, m).len())
        .collect();
    let sum_d: u32 = enumerate_orbits(ctx).iter().map(|o| o.d_lambda()).sum();
    ensure(
        per_m == [10, 5, 4] && sum_d == 19 && character_sheaves(ctx, 3).is_empty(),
        || format!("(2,2): Σ d_λ = {sum_d}, per m {per_m:?}"),
    )?;
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{pairs} pairs, (2,2): 19 = 10 + 5 + 4, {:.1?}",
        start.elapsed()
    ))
}

fn bijection_round_trip() -> Outcome {
    let mut complexes_seen = 0;
    for ctx in PairContext::all_up_to(12) {
        for m in 1..=ctx.n() {
            let complexes = orbital_complexes(ctx, m);
            for c in &complexes {
                let s = fourier_forward(c);
                let back = fourier_inverse(&s, ctx).map_err(|e| format!("{ctx}: {s}: {e}"))?;
                ensure(&back == c, || format!("{ctx}: {c} ↦ {s} ↦ {back}"))?;
            }
            for s in character_sheaves(ctx, m) {
                let c = fourier_inverse(&s, ctx).map_err(|e| format!("{ctx}: {s}: {e}"))?;
                let again = fourier_forward(&c);
                ensure(again == s, || format!("{ctx}: {s} ↦ {c} ↦ {again}"))?;
            }
            complexes_seen += complexes.len();
        }
    }
    Ok(format!(
        "{complexes_seen} complexes, both composites identity"
    ))
}

fn cuspidal_counts() -> Outcome {
    let count = |p, q| cuspidal_sheaves(pair(p, q)).len();
    let spots = [
        ((2, 1), 2),
        ((1, 1), 3),
        ((2, 2), 4),
        ((3, 3), 2 * euler_phi(6) as usize + euler_phi(3) as usize),
    ];
    for ((p, q), expected) in spots {
        ensure(count(p, q) == expected, || {
            format!("({p},{q}): {} cuspidals, expected {expected}", count(p, q))
        })?;
    }
    ensure(spots[3].1 == 6, || "2φ(6) + φ(3) should be 6".into())?;
    let mut far = 0;
    for ctx in PairContext::all_up_to(16)
        .into_iter()
        .filter(|c| c.p().abs_diff(c.q()) >= 2)
    {
        ensure(cuspidal_sheaves(ctx).is_empty(), || {
            format!("{ctx}: cuspidals with |p − q| ≥ 2")
        })?;
        far += 1;
    }
    Ok(format!(
        "(2,1)→2 (1,1)→3 (2,2)→4 (3,3)→6, {far} pairs with |p−q|≥2 → 0"
    ))
}

fn nilpotent_support_consistency() -> Outcome {
    let mut total = 0;
    for ctx in PairContext::all_up_to(12) {
        let expected: HashSet<_> = nilpotent_support_sheaves(ctx).into_iter().collect();
        let pulled: HashSet<_> = all_character_sheaves(ctx)
            .into_iter()
            .filter(|s| s.is_odd() && s.stratum().l() == 0)
            .map(|s| {
                let c = fourier_inverse(&s, ctx).map_err(|e| format!("{ctx}: {s}: {e}"))?;
                Ok((c.orbit().clone(), c.character()))
            })
            .collect::<Result<_, String>>()?;
        ensure(pulled == expected, || {
            format!(
                "{ctx}: pulled {} pairs, expected {}",
                pulled.len(),
                expected.len()
            )
        })?;
        ensure(
            expected
                .iter()
                .all(|(o, chi)| o.is_richardson() && chi.order() % 2 == 1),
            || format!("{ctx}: reference set is not Richardson/odd"),
        )?;
        total += expected.len();
    }
    let at22 = nilpotent_support_sheaves(pair(2, 2)).len();
    ensure(at22 == 6, || format!("(2,2): {at22} pairs, expected 6"))?;
    Ok(format!("{total} pairs, (2,2) → 6"))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut orbits = 0;
    for ctx in PairContext::all_up_to(6) {
        for o in enumerate_orbits(ctx) {
            let formula = orbit_dimension(&o, ctx).map_err(|e| e.to_string())?;
            let x = representative(&o, ctx).map_err(|e| e.to_string())?;
            let by_rank = ctx.dim_k() - centralizer_dim_in_k(&x);
            ensure(formula == by_rank, || {
                format!("{ctx}: {o} formula {formula}, centralizer {by_rank}")
            })?;
            orbits += 1;
        }
    }
    let mut strata = 0;
    for ctx in PairContext::all_up_to(8) {
        for s in cs_orbits(ctx).into_iter().filter(|s| s.mu().is_none()) {
            let (m, l) = (u64::from(s.m()), u64::from(s.l()));
            let expected = 2 * m * m * l * l - m * l + l;
            let sampled = stratum_dim(&s, ctx).map_err(|e| format!("{ctx}: {s}: {e}"))?;
            ensure(sampled == expected, || {
                format!("{ctx}: {s} sampled {sampled}, expected {expected}")
            })?;
            strata += 1;
        }
    }
    let spot = stratum_dim(&DualStratumLabel::new(2, 1, None).unwrap(), pair(2, 2))
        .map_err(|e| e.to_string())?;
    ensure(spot == 7, || {
        format!("(m=2,l=1) at (2,2): {spot}, expected 7")
    })?;
    within(Duration::from_secs(120), start)?;
    Ok(format!(
        "{orbits} orbits, {strata} strata, (m=2,l=1) → 7, {:.1?}",
        start.elapsed()
    ))
}

fn enumeration_cross_check() -> Outcome {
    let mut pairs = 0;
    for ctx in PairContext::all_up_to(14) {
        let listed = enumerate_orbits(ctx).len() as u64;
        let counted = count_orbits_independent(ctx);
        ensure(listed == counted, || {
            format!("{ctx}: enumerated {listed}, counted {counted}")
        })?;
        pairs += 1;
    }
    for ((p, q), expected) in [((1, 1), 3), ((2, 1), 4), ((2, 2), 10)] {
        let got = enumerate_orbits(pair(p, q)).len();
        ensure(got == expected, || {
            format!("({p},{q}): {got} orbits, expected {expected}")
        })?;
    }
    Ok(format!("{pairs} pairs, (1,1)→3 (2,1)→4 (2,2)→10"))
}

fn levi_laws() -> Outcome {
    let mut cases = 0;
    for ctx in PairContext::all_up_to(10) {
        for lambda in enumerate_orbits(ctx)
            .into_iter()
            .filter(|o| o.is_richardson())
        {
            let d = lambda.d_lambda();
            for m in (1..=d).step_by(2).filter(|m| d % m == 0) {
                let levi = levi_for_nilpotent_support(&lambda, m)
                    .map_err(|e| format!("{lambda}, m={m}: {e}"))?;
                let at = || format!("{lambda}, m={m}");
                ensure(levi.block_sizes.iter().sum::<u32>() == ctx.n(), || {
                    format!("{}: Σ blocks ≠ n", at())
                })?;
                ensure(levi.signs.windows(2).all(|w| w[0] != w[1]), || {
                    format!("{}: signs do not alternate", at())
                })?;
                ensure(levi.signs.len() == levi.block_sizes.len(), || {
                    format!("{}: one sign per block", at())
                })?;
                let rows: u32 = lambda.rows().iter().map(|(len, _)| len / m).sum();
                ensure(levi.l_sequence.iter().sum::<u32>() == rows, || {
                    format!("{}: Σ l_a ≠ Σ λ_j/m", at())
                })?;
                let all_ones = lambda.rows().iter().all(|&(len, _)| len == m);
                ensure(levi.is_whole_group() == all_ones, || {
                    format!("{}: whole group iff λ/m = 1^s fails", at())
                })?;
                levi.check_laws(ctx, &lambda)
                    .map_err(|e| format!("{}: {e}", at()))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (λ, m) cases"))
}

fn parity_law() -> Outcome {
    let mut checked = 0;
    for ctx in PairContext::all_up_to(12)
        .into_iter()
        .filter(|c| c.p() != c.q())
    {
        for m in (2..=ctx.n()).step_by(2) {
            ensure(character_sheaves(ctx, m).is_empty(), || {
                format!("{ctx}: sheaves of even order {m}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (pair, even m) cells empty"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("counting identity", counting_identity),
        ("bijection round-trip", bijection_round_trip),
        ("cuspidal counts", cuspidal_counts),
        (
            "nilpotent-support consistency",
            nilpotent_support_consistency,
        ),
        ("oracle agreement", oracle_agreement),
        ("enumeration cross-check", enumeration_cross_check),
        ("Levi construction laws", levi_laws),
        ("parity law", parity_law),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {}. {name}: {why}", i + 1);
                failed += 1;
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
