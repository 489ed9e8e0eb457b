//! Acceptance criteria. Every check is an exact equality; the binary prints
//! one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use okcas::casimir::{casimir_eig_matrix, casimir_eig_sum, restricted_casimir, GLWeight};
use okcas::expansion::{expand, resubstitute, verify_theorem, ExpansionResult};
use okcas::okounkov::{okounkov_poly, okounkov_specialized, OkounkovParams, SpecializationParams};
use okcas::partitions::{partitions_of, partitions_up_to, Partition};
use okcas::rational::{format_rational, int, ratio, Rational};
use okcas::symfunc::{powersum_poly, schur_in_powersums, schur_poly};
use okcas::verify::{dominant_weights, is_bc_invariant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rationals(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    (0..count)
        .map(|_| {
            let num: i64 = rng.gen_range(-20..=20);
            let den: i64 = rng.gen_range(2..=9);
            Rational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// 1. tr(A^k F) equals the Scheunert sum.
fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for w in dominant_weights(n, 4) {
            let weight = GLWeight::from_ints(&w);
            for k in 0..=8 {
                let m = casimir_eig_matrix(&weight, k);
                let s = casimir_eig_sum(&weight, k).map_err(|e| e.to_string())?;
                ensure(m == s, || format!("{w:?} k={k}: {m} vs {s}"))?;
                cases += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ca51);
    for _ in 0..50 {
        let n = rng.gen_range(1..=5);
        let mut w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=20)).collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        let weight = GLWeight::from_ints(&w);
        for k in 0..=8 {
            let m = casimir_eig_matrix(&weight, k);
            let s = casimir_eig_sum(&weight, k).map_err(|e| e.to_string())?;
            ensure(m == s, || format!("random {w:?} k={k}: {m} vs {s}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (weight, k) pairs"))
}

/// 2. top_homogeneous(P_λ(x;1;α)) = s_λ(x_1², …, x_r²).
fn top_degree_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let alphas = random_rationals(&mut rng, 3);
    let mut cases = 0;
    for lam in partitions_up_to(5) {
        for r in 1..=4 {
            let expected = schur_poly(&lam, r).at_squares();
            for alpha in &alphas {
                let poly = okounkov_poly(&lam, &OkounkovParams::new(r, int(1), alpha.clone()))
                    .map_err(|e| e.to_string())?;
                if lam.len() > r {
                    ensure(poly.is_zero() && expected.is_zero(), || {
                        format!("{lam} r={r}")
                    })?;
                } else {
                    let top = poly.top_homogeneous().map_err(|e| e.to_string())?;
                    ensure(top == expected, || format!("{lam} r={r} alpha={alpha}"))?;
                }
                cases += 1;
            }
        }
    }
    let shown: Vec<String> = alphas.iter().map(format_rational).collect();
    Ok(format!("{cases} cases, alpha in {{{}}}", shown.join(", ")))
}

/// 3. top_homogeneous(C_{2i}) = 2 p_{2i}.
fn casimir_leading_term() -> Outcome {
    let mut cases = 0;
    for r in 1..=3 {
        for n in [2 * r, 2 * r + 1, 2 * r + 2] {
            for i in 1..=4u32 {
                let top = restricted_casimir(2 * i, n, r)
                    .and_then(|c| c.top_homogeneous())
                    .map_err(|e| e.to_string())?;
                let expected = powersum_poly(&p(&[2 * i]), r).scale(&int(2));
                ensure(top == expected, || format!("C_{} n={n} r={r}", 2 * i))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn theorem_runs() -> Result<Vec<(Partition, usize, Rational, ExpansionResult)>, String> {
    let mut runs = Vec::new();
    for lam in partitions_up_to(3).into_iter().filter(|l| l.len() <= 2) {
        for n in [4, 5] {
            for s in [int(0), ratio(1, 2), int(2)] {
                let sp = SpecializationParams::new(n, 2, s.clone()).map_err(|e| e.to_string())?;
                let report = verify_theorem(&lam, &sp).map_err(|e| e.to_string())?;
                ensure(report.passed(), || {
                    format!("{lam} n={n} s={s}: mismatches {:?}", report.mismatches)
                })?;
                runs.push((lam.clone(), n, s, report.expansion));
            }
        }
    }
    Ok(runs)
}

/// 4. Top-degree coefficients are a_μ / 2^{ℓ(μ)}, plus the worked rank-one case.
fn theorem_top_degree() -> Outcome {
    let runs = theorem_runs()?;
    for s in [int(0), ratio(1, 2), int(2), ratio(-3, 7)] {
        let sp = SpecializationParams::new(2, 1, s.clone()).map_err(|e| e.to_string())?;
        let res = expand(&p(&[1]), &sp).map_err(|e| e.to_string())?;
        let expected = BTreeMap::from([(p(&[1]), ratio(1, 2)), (Partition::empty(), &s - &s * &s)]);
        let expected: BTreeMap<_, _> = expected.into_iter().filter(|(_, v)| *v != int(0)).collect();
        ensure(res.coeffs == expected, || {
            format!("rank one s={s}: {:?}", res.coeffs)
        })?;
    }
    Ok(format!("{} expansions", runs.len()))
}

/// 5. Σ b_μ C_{2μ} reproduces the specialized polynomial exactly.
fn resubstitution() -> Outcome {
    let runs = theorem_runs()?;
    for (lam, n, s, res) in &runs {
        ensure(res.residual_zero, || {
            format!("{lam} n={n} s={s} flagged nonzero")
        })?;
        let sp = SpecializationParams::new(*n, 2, s.clone()).unwrap();
        let target = okounkov_specialized(lam, &sp).map_err(|e| e.to_string())?;
        let recon = resubstitute(&res.coeffs, *n, 2).map_err(|e| e.to_string())?;
        ensure((&recon - &target).is_zero(), || {
            format!("{lam} n={n} s={s}")
        })?;
    }
    Ok(format!("{} zero residuals", runs.len()))
}

/// 6. P_λ(x;1;α) is invariant under swaps and sign flips.
fn bc_symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let alphas = random_rationals(&mut rng, 3);
    let mut cases = 0;
    for lam in partitions_up_to(4) {
        for r in 1..=3 {
            for alpha in &alphas {
                let poly = okounkov_poly(&lam, &OkounkovParams::new(r, int(1), alpha.clone()))
                    .map_err(|e| e.to_string())?;
                ensure(is_bc_invariant(&poly), || {
                    format!("{lam} r={r} alpha={alpha}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} polynomials"))
}

/// 7. P_λ(μ + δ + α; 1; α) = 0 whenever λ ⊄ μ.
fn vanishing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alphas = random_rationals(&mut rng, 3);
    let mut zeros = 0;
    for lam in partitions_up_to(3) {
        for r in 1..=3usize {
            for alpha in &alphas {
                let poly = okounkov_poly(&lam, &OkounkovParams::new(r, int(1), alpha.clone()))
                    .map_err(|e| e.to_string())?;
                for mu in partitions_up_to(lam.weight() + 2) {
                    if mu.len() > r || mu.contains(&lam) {
                        continue;
                    }
                    let point: Vec<Rational> = (0..r)
                        .map(|i| int(mu.part(i + 1) as i64 + (r - 1 - i) as i64) + alpha)
                        .collect();
                    let v = poly.eval(&point).map_err(|e| e.to_string())?;
                    ensure(v == int(0), || {
                        format!("{lam} at mu={mu} r={r} alpha={alpha}: {v}")
                    })?;
                    zeros += 1;
                }
            }
        }
    }
    Ok(format!("{zeros} exact zeros"))
}

/// 8. Σ_μ a_μ p_μ = s_λ as polynomials.
fn schur_reconstruction() -> Outcome {
    let mut cases = 0;
    for n in 0..=6 {
        for lam in partitions_of(n) {
            let combo = schur_in_powersums(&lam);
            for r in [2, 3, 4] {
                ensure(combo.to_poly(r) == schur_poly(&lam, r), || {
                    format!("{lam} r={r}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} identities"))
}

/// 9. The |μ| = |λ| coefficients do not depend on (n, s).
fn top_independence() -> Outcome {
    let runs = theorem_runs()?;
    let mut by_lambda: BTreeMap<Partition, Vec<BTreeMap<Partition, Rational>>> = BTreeMap::new();
    for (lam, _, _, res) in &runs {
        by_lambda.entry(lam.clone()).or_default().push(res.top());
    }
    for (lam, tops) in &by_lambda {
        ensure(tops.windows(2).all(|w| w[0] == w[1]), || format!("{lam}"))?;
    }
    Ok(format!("{} partitions x 6 (n, s) pairs", by_lambda.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        (
            "1 casimir matrix trace == Scheunert sum",
            oracle_equivalence,
        ),
        (
            "2 top(P_lambda) == s_lambda at squares",
            top_degree_identity,
        ),
        ("3 top(C_2i) == 2 p_2i", casimir_leading_term),
        ("4 top b_mu == a_mu / 2^l(mu)", theorem_top_degree),
        ("5 sum b_mu C_2mu reproduces P_lambda", resubstitution),
        ("6 P_lambda is BC-symmetric", bc_symmetry),
        ("7 P_lambda vanishes off containment", vanishing),
        ("8 sum a_mu p_mu == s_lambda", schur_reconstruction),
        ("9 top b_mu independent of (n, s)", top_independence),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({detail}; {secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
