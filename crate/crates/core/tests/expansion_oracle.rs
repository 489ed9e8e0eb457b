//! Independent checks of the expansion: a dense linear solve over monomial
//! coefficients in the original coordinates, and pointwise evaluation.

use num_traits::{One, Zero};
use okcas::casimir::{
    casimir_eig_matrix, restricted_casimir, restricted_casimir_product, FoldedWeight,
};
use okcas::expansion::expand;
use okcas::okounkov::{okounkov_specialized, SpecializationParams};
use okcas::partitions::{partitions_up_to, Partition};
use okcas::poly::MPoly;
use okcas::rational::{int, ratio, Rational};
use okcas::symfunc::to_even_powersum_basis;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Solves Σ_j c_j cols[j] = target over the monomial coefficients by
/// Gauss–Jordan elimination. Returns `None` unless the solution is unique.
fn unique_solution(cols: &[MPoly], target: &MPoly) -> Option<Vec<Rational>> {
    let mut monos: Vec<Vec<u32>> = cols
        .iter()
        .chain(std::iter::once(target))
        .flat_map(|c| c.terms().map(|(e, _)| e.to_vec()).collect::<Vec<_>>())
        .collect();
    monos.sort();
    monos.dedup();
    let m = cols.len();
    let mut rows: Vec<Vec<Rational>> = monos
        .iter()
        .map(|e| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c.coeff(e)).collect();
            row.push(target.coeff(e));
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let pr = (rank..rows.len()).find(|&i| !rows[i][col].is_zero())?;
        rows.swap(rank, pr);
        let inv = Rational::one() / rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v *= inv.clone();
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..=m {
                    let t = rows[rank][j].clone() * f.clone();
                    rows[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    // consistency
    if rows[rank..].iter().any(|r| !r[m].is_zero()) {
        return None;
    }
    Some((0..m).map(|i| rows[i][m].clone()).collect())
}

#[test]
fn matches_dense_solve_under_any_candidate_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (r, n) in [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)] {
        for lam in partitions_up_to(r as u32)
            .into_iter()
            .filter(|l| l.len() <= r)
        {
            let s = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let sp = SpecializationParams::new(n, r, s).unwrap();
            let res = expand(&lam, &sp).unwrap();
            let target = okounkov_specialized(&lam, &sp).unwrap();
            let mut candidates = partitions_up_to(lam.weight());
            for _ in 0..3 {
                candidates.shuffle(&mut rng);
                let cols: Vec<MPoly> = candidates
                    .iter()
                    .map(|k| restricted_casimir_product(&k.scaled(2), n, r).unwrap())
                    .collect();
                let sol = unique_solution(&cols, &target).expect("unique when |lambda| <= r");
                for (k, b) in candidates.iter().zip(sol) {
                    assert_eq!(res.get(k), b, "{lam} n={n} r={r} at {k}");
                }
            }
        }
    }
}

#[test]
fn two_box_rank_two_pointwise() {
    let lam = Partition::new(vec![2]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for s in [int(0), ratio(1, 2), ratio(-4, 3)] {
        let sp = SpecializationParams::new(4, 2, s).unwrap();
        let res = expand(&lam, &sp).unwrap();
        let target = okounkov_specialized(&lam, &sp).unwrap();
        for _ in 0..20 {
            let x = vec![int(rng.gen_range(-6..=6)), int(rng.gen_range(-6..=6))];
            let gl = FoldedWeight::new(x.clone(), 4).unwrap().to_gl_weight();
            // right-hand side straight from eigenvalues at the folded weight
            let rhs: Rational = res
                .coeffs
                .iter()
                .map(|(mu, b)| {
                    let prod: Rational = mu
                        .parts()
                        .iter()
                        .map(|&k| casimir_eig_matrix(&gl, 2 * k))
                        .fold(Rational::one(), |a, v| a * v);
                    b * prod
                })
                .sum();
            assert_eq!(target.eval(&x).unwrap(), rhs);
        }
    }
}

#[test]
fn shifted_casimirs_are_bc_symmetric() {
    for r in 1..=3 {
        for n in [2 * r, 2 * r + 1, 2 * r + 3] {
            let to_z: Vec<Rational> = (1..=r as i64)
                .map(|i| -ratio(n as i64 - (2 * i - 1), 2))
                .collect();
            for i in 0..=7 {
                let c = restricted_casimir(i, n, r).unwrap().shift(&to_z).unwrap();
                let e = to_even_powersum_basis(&c)
                    .unwrap_or_else(|err| panic!("C_{i} n={n} r={r}: {err}"));
                assert_eq!(e.to_poly(r), c);
            }
        }
    }
}

#[test]
fn unshifted_casimirs_are_not_bc_symmetric() {
    // the fail-fast check catches the wrong coordinate system
    let c = restricted_casimir(2, 4, 2).unwrap();
    assert!(to_even_powersum_basis(&c).is_err());
}

#[test]
fn larger_rank_expansions_resubstitute() {
    for (lam, n, r) in [
        (vec![2, 1], 7, 3),
        (vec![4], 4, 2),
        (vec![2, 2], 5, 2),
        (vec![1, 1, 1], 6, 3),
    ] {
        let lam = Partition::new(lam).unwrap();
        let sp = SpecializationParams::new(n, r, ratio(5, 3)).unwrap();
        let res = expand(&lam, &sp).unwrap();
        assert!(res.residual_zero);
        assert!(res.coeffs.keys().all(|k| k.weight() <= lam.weight()));
    }
}
