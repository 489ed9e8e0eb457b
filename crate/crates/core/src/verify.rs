//! Self-checks behind `okcas verify`. Each suite returns one line per check.

use std::collections::BTreeMap;
use std::fmt;

use crate::casimir::{casimir_eig_matrix, casimir_eig_sum, restricted_casimir, GLWeight};
use crate::error::Result;
use crate::expansion::{resubstitute, verify_theorem};
use crate::okounkov::{okounkov_poly, okounkov_specialized, OkounkovParams, SpecializationParams};
use crate::partitions::{partitions_up_to, Partition};
use crate::poly::MPoly;
use crate::rational::{int, ratio, Rational};
use crate::symfunc::{powersum_poly, schur_in_powersums, schur_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    TopDegree,
    Theorem,
    Vanishing,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Oracle,
        Suite::TopDegree,
        Suite::Theorem,
        Suite::Vanishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::TopDegree => "topdegree",
            Suite::Theorem => "theorem",
            Suite::Vanishing => "vanishing",
        }
    }
}

/// `max_weight` bounds |λ| (and the largest entry of Casimir weights);
/// `max_rank` bounds r (Casimir checks use n ≤ max_rank + 2).
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_weight: u32,
    pub max_rank: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_weight: 3,
            max_rank: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: String, res: Result<Option<String>>) -> Check {
        match res {
            Ok(None) => Check {
                name,
                passed: true,
                detail: String::new(),
            },
            Ok(Some(why)) => Check {
                name,
                passed: false,
                detail: why,
            },
            Err(e) => Check {
                name,
                passed: false,
                detail: e.to_string(),
            },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

/// Weakly decreasing integer vectors of length `n` with entries in `0..=max`.
pub fn dominant_weights(n: usize, max: u32) -> Vec<Vec<i64>> {
    fn go(n: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            go(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max as i64, &mut Vec::new(), &mut out);
    out
}

/// Alpha values used by the polynomial suites.
pub fn sample_alphas() -> [Rational; 3] {
    [int(0), ratio(1, 3), ratio(-5, 2)]
}

fn mismatch(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

pub fn oracle_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    let max_n = b.max_rank + 2;
    for n in 1..=max_n {
        let weights = dominant_weights(n, b.max_weight);
        let count = weights.len();
        let res = (|| {
            for w in &weights {
                let weight = GLWeight::from_ints(w);
                for k in 0..=8 {
                    let m = casimir_eig_matrix(&weight, k);
                    let s = casimir_eig_sum(&weight, k)?;
                    if m != s {
                        return Ok(Some(format!("{w:?} k={k}: matrix {m} vs sum {s}")));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from_result(
            format!("casimir matrix == scheunert, n={n}, {count} weights, k<=8"),
            res,
        ));
    }
    for r in 1..=b.max_rank.max(1) {
        let res = (|| {
            for lam in partitions_up_to(b.max_weight) {
                let lhs = schur_in_powersums(&lam).to_poly(r);
                if lhs != schur_poly(&lam, r) {
                    return Ok(Some(format!("{lam}")));
                }
            }
            Ok(None)
        })();
        out.push(Check::from_result(
            format!(
                "sum a_mu p_mu == s_lambda, r={r}, |lambda|<={}",
                b.max_weight
            ),
            res,
        ));
    }
    out
}

/// BC-symmetry of P_λ(x;1;α) under every swap and sign flip.
pub fn is_bc_invariant(p: &MPoly) -> bool {
    let r = p.nvars();
    (0..r).all(|i| p.flip_sign(i) == *p)
        && (0..r).all(|i| (i + 1..r).all(|j| p.swap_vars(i, j) == *p))
}

pub fn topdegree_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for r in 1..=b.max_rank.max(1) {
        let res = (|| {
            for lam in partitions_up_to(b.max_weight) {
                for alpha in sample_alphas() {
                    let p = okounkov_poly(&lam, &OkounkovParams::new(r, int(1), alpha.clone()))?;
                    let expected = schur_poly(&lam, r).at_squares();
                    let top = if p.is_zero() {
                        p.clone()
                    } else {
                        p.top_homogeneous()?
                    };
                    if top != expected {
                        return Ok(Some(format!("{lam} alpha={alpha}")));
                    }
                    if !is_bc_invariant(&p) {
                        return Ok(Some(format!("{lam} alpha={alpha} not BC-symmetric")));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from_result(
            format!("top(P_lambda) == s_lambda(x^2) and BC-symmetric, r={r}"),
            res,
        ));
    }
    for r in 1..=b.max_rank.max(1) {
        let res = (|| {
            for n in [2 * r, 2 * r + 1, 2 * r + 2] {
                for i in 1..=b.max_weight.max(1) {
                    let top = restricted_casimir(2 * i, n, r)?.top_homogeneous()?;
                    let expected = powersum_poly(&Partition::new(vec![2 * i])?, r).scale(&int(2));
                    if top != expected {
                        return Ok(Some(format!("C_{} n={n}", 2 * i)));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from_result(
            format!("top(C_2i) == 2 p_2i, r={r}, n in 2r..2r+2"),
            res,
        ));
    }
    out
}

pub fn theorem_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    let svals = [int(0), ratio(1, 2), int(2)];
    for r in 1..=b.max_rank.max(1) {
        for lam in partitions_up_to(b.max_weight)
            .into_iter()
            .filter(|l| l.len() <= r)
        {
            let mut tops: Vec<BTreeMap<Partition, Rational>> = Vec::new();
            let res = (|| {
                for n in [2 * r, 2 * r + 1] {
                    for s in &svals {
                        let sp = SpecializationParams::new(n, r, s.clone())?;
                        let report = verify_theorem(&lam, &sp)?;
                        if !report.passed() {
                            return Ok(Some(format!(
                                "n={n} s={s} mismatch at {:?}",
                                report.mismatches
                            )));
                        }
                        let recon = resubstitute(&report.expansion.coeffs, n, r)?;
                        if recon != okounkov_specialized(&lam, &sp)? {
                            return Ok(Some(format!("n={n} s={s} nonzero residual")));
                        }
                        tops.push(report.computed_top);
                    }
                }
                Ok(mismatch(tops.windows(2).all(|w| w[0] == w[1]), || {
                    "top coefficients depend on (n, s)".into()
                }))
            })();
            out.push(Check::from_result(
                format!("theorem lambda={lam} r={r}"),
                res,
            ));
        }
    }
    out
}

pub fn vanishing_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for r in 1..=b.max_rank.max(1) {
        let res = (|| {
            for lam in partitions_up_to(b.max_weight) {
                for alpha in sample_alphas() {
                    let p = okounkov_poly(&lam, &OkounkovParams::new(r, int(1), alpha.clone()))?;
                    for mu in partitions_up_to(lam.weight() + 2) {
                        if mu.len() > r || mu.contains(&lam) {
                            continue;
                        }
                        let point: Vec<Rational> = (0..r)
                            .map(|i| int(mu.part(i + 1) as i64 + (r - 1 - i) as i64) + &alpha)
                            .collect();
                        let v = p.eval(&point)?;
                        if v != int(0) {
                            return Ok(Some(format!("lambda={lam} mu={mu} alpha={alpha}: {v}")));
                        }
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from_result(
            format!("P_lambda(mu+delta+alpha) == 0 unless lambda in mu, r={r}"),
            res,
        ));
    }
    out
}

pub fn run_suite(suite: Suite, b: Bounds) -> Vec<Check> {
    match suite {
        Suite::Oracle => oracle_checks(b),
        Suite::TopDegree => topdegree_checks(b),
        Suite::Theorem => theorem_checks(b),
        Suite::Vanishing => vanishing_checks(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_weight_enumeration() {
        assert_eq!(
            dominant_weights(2, 1),
            vec![vec![1, 1], vec![1, 0], vec![0, 0]]
        );
        assert_eq!(dominant_weights(3, 4).len(), 35);
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds {
            max_weight: 2,
            max_rank: 2,
        };
        for suite in Suite::ALL {
            for check in run_suite(suite, b) {
                assert!(check.passed, "{check}");
            }
        }
    }
}
