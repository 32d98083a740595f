//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use centstab::combinatorics::{dim_poly, enumerate_partitions, standard_tableaux};
use centstab::linalg::{Field, Matrix, PrimeField, Rationals};
use centstab::perm::Perm;
use centstab::specht::{generalized_specht, specht_module, stabilization_map_for};
use centstab::stability::{
    boundary_map, boundary_map_with_transversal, boundary_transversal, central_stability_complex,
    central_stabilization, central_stabilization_sequence, CoherentSequence, Seed,
};
use centstab::symrep::{decompose, Character, SymRep, Twist};
use centstab::Partition;
use common::{deletion_multiset, hook_dim};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

fn stabilize_trivial() -> Check {
    for n in 2..=6 {
        let s = central_stabilization(&Seed::Trivial.map(&Rationals, n).map_err(e2s)?).map_err(e2s)?;
        ensure(s.rep.dim() == 1, || format!("n = {n}: dim {}", s.rep.dim()))?;
        ensure(s.rep.gens().iter().all(Matrix::is_identity), || format!("n = {n}: a generator is not the identity"))?;
    }
    Ok("2 <= n <= 6".into())
}

fn stabilize_permutation() -> Check {
    for n in 2..=6 {
        let s = central_stabilization(&Seed::Permutation.map(&Rationals, n).map_err(e2s)?).map_err(e2s)?;
        ensure(s.rep.dim() == n + 1, || format!("n = {n}: dim {}", s.rep.dim()))?;
        let perm = SymRep::permutation(&Rationals, n + 1).character();
        ensure(s.rep.character() == perm, || format!("n = {n}: character differs from the permutation character"))?;
    }
    Ok("2 <= n <= 6".into())
}

fn stab_squared_over<K: Field>(f: &K) -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 1..=4 {
        for mu in enumerate_partitions(n) {
            let s = central_stabilization(&stabilization_map_for(&mu, f).map_err(e2s)?).map_err(e2s)?;
            let target = mu.stab_pow(2);
            ensure(s.rep.dim() as u128 == hook_dim(&parts(&target)), || format!("{mu}: dim {}", s.rep.dim()))?;
            ensure(s.rep.character() == Character::of_specht(f, &target), || {
                format!("{mu}: character is not that of S^({target})")
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn stab_squared() -> Check {
    let q = stab_squared_over(&Rationals)?;
    let p = stab_squared_over(&PrimeField::new(11).map_err(e2s)?)?;
    Ok(format!("{q} partitions over Q, {p} over F_11"))
}

fn specht_sequence<K: Field>(mu: &Partition, maps: usize, f: &K) -> std::result::Result<CoherentSequence<K>, String> {
    let maps = (0..maps)
        .map(|j| stabilization_map_for(&mu.stab_pow(j), f))
        .collect::<centstab::Result<Vec<_>>>()
        .map_err(e2s)?;
    CoherentSequence::from_maps(maps).map_err(e2s)
}

fn square_zero() -> Check {
    let mut complexes = 0;
    for n in 1..=3 {
        for mu in enumerate_partitions(n) {
            for m in n + 1..=8 {
                let seq = specht_sequence(&mu, m - n, &Rationals)?;
                let c = central_stability_complex(&seq, m).map_err(|e| format!("{mu}, M = {m}: {e}"))?;
                for (i, pair) in c.boundaries.windows(2).enumerate() {
                    let dd = pair[1].mul(&pair[0]).map_err(e2s)?;
                    ensure(dd.is_zero(), || format!("{mu}, M = {m}: d∘d != 0 at position {i}"))?;
                }
                complexes += 1;
            }
        }
    }
    Ok(format!("{complexes} complexes"))
}

fn resolution_over<K: Field>(f: &K, max_nk: Option<usize>) -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 1..=3 {
        for mu in enumerate_partitions(n) {
            for k in 1..=3 {
                if max_nk.is_some_and(|b| n + k > b) {
                    continue;
                }
                let seq = specht_sequence(&mu, k, f)?;
                let c = central_stability_complex(&seq, n + k).map_err(e2s)?;
                let h = c.interior_homology();
                ensure(h.iter().all(|&x| x == 0), || format!("{mu}, k = {k}: interior homology {h:?}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn resolution() -> Check {
    let q = resolution_over(&Rationals, None)?;
    let mut fp = 0;
    // The smallest admissible prime for each n + k, and one prime above all of them.
    for bound in 2..=6u64 {
        let p = common::prime_above(bound);
        fp += resolution_over(&PrimeField::new(p).map_err(e2s)?, Some(bound as usize))?;
    }
    fp += resolution_over(&PrimeField::new(11).map_err(e2s)?, None)?;
    Ok(format!("{q} complexes over Q, {fp} over F_p"))
}

fn restriction() -> Check {
    let mut count = 0;
    for m in 1..=6 {
        for mu in enumerate_partitions(m) {
            for k in 0..=2.min(m - 1) {
                let v = specht_module(&mu, &Rationals).rep.restrict(m - k).map_err(e2s)?;
                let mut got: Vec<Vec<usize>> = decompose(&v).map_err(e2s)?.multiset().iter().map(parts).collect();
                got.sort();
                let want = deletion_multiset(&parts(&mu), k);
                ensure(got == want, || format!("{mu}, k = {k}: {got:?} != {want:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} restrictions"))
}

fn dimension_polynomial() -> Check {
    let mut count = 0;
    for n in 1..=5 {
        for mu in enumerate_partitions(n) {
            for k in 0..=5 {
                let big = mu.stab_pow(k);
                let oracle = hook_dim(&parts(&big));
                let counted = standard_tableaux(&big).len() as u128;
                let poly = dim_poly(&mu, k);
                ensure(poly == oracle && counted == oracle, || {
                    format!("{mu}, k = {k}: dimPoly {poly}, |ST| {counted}, hook {oracle}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs (mu, k)"))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn induced_short_exact() -> Check {
    let mut count = 0;
    for n in 1..=4 {
        for nu in enumerate_partitions(n) {
            for k in 1..=3 {
                let ind = specht_module(&nu, &Rationals).rep.induce(k, Twist::Trivial).rep;
                let quotient = generalized_specht(&nu, &nu.bracket_weak(k), &Rationals).map_err(e2s)?;
                let hat = nu.hatstab();
                let sub = generalized_specht(&hat, &hat.bracket_weak(k - 1), &Rationals).map_err(e2s)?;
                let oracle = binomial(n + k, k) * hook_dim(&parts(&nu));
                ensure(ind.dim() as u128 == oracle, || format!("{nu}, k = {k}: dim Ind {} != {oracle}", ind.dim()))?;
                ensure(ind.dim() == quotient.dim() + sub.dim(), || {
                    format!("{nu}, k = {k}: {} != {} + {}", ind.dim(), quotient.dim(), sub.dim())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs (nu, k)"))
}

fn random_transversal(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<Perm> {
    boundary_transversal(n, m)
        .into_iter()
        .map(|sigma| {
            let mut tail: Vec<usize> = (n + 2..=m).collect();
            tail.shuffle(rng);
            let images: Vec<usize> = (1..=n + 1).chain(tail).collect();
            &sigma * &Perm::from_one_based(&images).unwrap()
        })
        .collect()
}

fn transversal_independence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = 0;
    let mut distinct = 0;
    for n in 1..=4 {
        let shapes = enumerate_partitions(n);
        for m in n + 1..=8 {
            for _ in 0..5 {
                let mu = &shapes[rng.gen_range(0..shapes.len())];
                let phi = stabilization_map_for(mu, &Rationals).map_err(e2s)?;
                let reps = random_transversal(n, m, &mut rng);
                if reps != boundary_transversal(n, m) {
                    distinct += 1;
                }
                let a = boundary_map(&phi, m).map_err(e2s)?;
                let b = boundary_map_with_transversal(&phi, m, &reps).map_err(e2s)?;
                ensure(a.matrix == b.matrix, || format!("{mu}, M = {m}: boundary matrices differ"))?;
                cases += 1;
            }
        }
    }
    // For M <= n + 2 the transversal is unique, so those cases compare equal transversals.
    Ok(format!("{cases} cases, {distinct} with a transversal different from the canonical one"))
}

fn width_bound() -> Check {
    let mut seeds = 0;
    let mut terms = 0;
    for big_n in 2..=4 {
        let mut family = vec![Seed::Trivial, Seed::Permutation];
        for lambda in enumerate_partitions(big_n - 1) {
            family.push(Seed::Specht(lambda.clone()));
            family.push(Seed::Induced(lambda));
        }
        family.extend(enumerate_partitions(big_n).into_iter().map(Seed::Zero));
        for seed in family {
            let phi = seed.map(&Rationals, big_n).map_err(e2s)?;
            // Terms V_{N-1}, ..., V_{N+3}.
            let seq = central_stabilization_sequence(&phi, 4, None).map_err(e2s)?;
            for (i, rep) in seq.reps.iter().enumerate() {
                let n = seq.start + i;
                let dec = decompose(rep).map_err(e2s)?;
                let total: u128 = dec.multiplicities.iter().map(|(p, m)| *m as u128 * hook_dim(&parts(p))).sum();
                ensure(total == rep.dim() as u128, || format!("{seed}: V_{n} decomposition misses dimensions"))?;
                for mu in dec.multiset() {
                    ensure(mu.width() + big_n >= n, || format!("{seed}: V_{n} has constituent ({mu})"))?;
                }
                terms += 1;
            }
            seeds += 1;
        }
    }
    Ok(format!("{seeds} seeds, {terms} terms"))
}

fn property_suites() -> Check {
    let f = Rationals;
    let mut reps = 0;
    for n in 1..=7 {
        let mut sum = 0u128;
        for mu in enumerate_partitions(n) {
            let s = specht_module(&mu, &f).rep;
            s.check_coxeter().map_err(|e| format!("S^({mu}): {e}"))?;
            reps += 1;
            sum += (s.dim() as u128).pow(2);
        }
        let fact: u128 = (1..=n as u128).product();
        ensure(sum == fact, || format!("n = {n}: sum of squares {sum} != {fact}"))?;
    }
    // Representations produced by the other constructions.
    let mut built: Vec<SymRep<Rationals>> = Vec::new();
    for mu in enumerate_partitions(3) {
        let phi = stabilization_map_for(&mu, &f).map_err(e2s)?;
        built.push((*central_stabilization(&phi).map_err(e2s)?.rep).clone());
        built.push((*boundary_map(&phi, 6).map_err(e2s)?.source).clone());
        built.push(specht_module(&mu, &f).rep.induce(2, Twist::Sign).rep);
        built.push(generalized_specht(&mu, &mu.bracket_weak(2), &f).map_err(e2s)?);
        built.push(specht_module(&mu, &f).rep.tensor_sign());
    }
    for v in &built {
        v.check_coxeter().map_err(e2s)?;
        reps += 1;
    }
    for n in 1..=6 {
        let shapes = enumerate_partitions(n);
        let chars: Vec<BTreeMap<Partition, i128>> = shapes
            .iter()
            .map(|mu| {
                let chi = specht_module(mu, &f).rep.character();
                chi.values.iter().map(|(l, v)| (l.clone(), f.format_elem(v).parse::<i128>().unwrap())).collect()
            })
            .collect();
        let fact: i128 = (1..=n as i128).product();
        for (a, ca) in chars.iter().enumerate() {
            for (b, cb) in chars.iter().enumerate() {
                let ip: i128 = ca.iter().map(|(l, x)| l.class_size() as i128 * x * cb[l]).sum();
                let want = if a == b { fact } else { 0 };
                ensure(ip == want, || format!("n = {n}: <{}, {}> = {ip}", shapes[a], shapes[b]))?;
            }
        }
    }
    let mut duals = 0;
    for n in 1..=5 {
        for nu in enumerate_partitions(n) {
            let twisted = specht_module(&nu, &f).rep.tensor_sign();
            let conj = specht_module(&nu.conjugate(), &f).rep;
            ensure(twisted.character() == conj.character(), || format!("{nu}: S^nu ⊗ sgn and S^nu' differ"))?;
            duals += 1;
        }
    }
    Ok(format!("{reps} representations satisfy the Coxeter relations, {duals} duality checks"))
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            title: "stabilizing the trivial sequence gives the trivial representation",
            budget: Some(secs(1)),
            run: stabilize_trivial,
        },
        Criterion {
            id: 2,
            title: "stabilizing the permutation sequence gives the permutation representation",
            budget: Some(secs(5)),
            run: stabilize_permutation,
        },
        Criterion {
            id: 3,
            title: "Stab(S^mu, S^stab mu) has the character of S^stab^2 mu (Q, F_11)",
            budget: Some(secs(60)),
            run: stab_squared,
        },
        Criterion { id: 4, title: "d∘d = 0 for Specht seeds, n <= 3, M <= 8", budget: None, run: square_zero },
        Criterion {
            id: 5,
            title: "Specht complexes have zero interior homology (Q, F_p)",
            budget: Some(secs(120)),
            run: resolution,
        },
        Criterion { id: 6, title: "restriction of S^mu matches deletion sequences", budget: None, run: restriction },
        Criterion {
            id: 7,
            title: "dimPoly(mu, k) = |ST(stab^k mu)|",
            budget: Some(secs(10)),
            run: dimension_polynomial,
        },
        Criterion {
            id: 8,
            title: "dim Ind S^nu = dim S^(nu,nu[k]) + dim S^(hatstab nu, ...)",
            budget: None,
            run: induced_short_exact,
        },
        Criterion {
            id: 9,
            title: "boundary matrices do not depend on the transversal",
            budget: None,
            run: transversal_independence,
        },
        Criterion { id: 10, title: "constituents of V_n have first row >= n - N", budget: None, run: width_bound },
        Criterion {
            id: 11,
            title: "Coxeter relations, sum of squares, orthogonality, sign duality",
            budget: None,
            run: property_suites,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over_budget = c.budget.is_some_and(|b| elapsed > b);
        let pass = outcome.is_ok() && !over_budget;
        if !pass {
            failures += 1;
        }
        let detail = match &outcome {
            Ok(d) => d.clone(),
            Err(e) => format!("error: {e}"),
        };
        let budget = c.budget.map_or(String::new(), |b| format!(" (limit {}s)", b.as_secs()));
        println!(
            "criterion {:>2} {}: {} [{}] {:.2}s{budget}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            detail,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
