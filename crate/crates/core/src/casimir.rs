//! Eigenvalues of the gl(n) Casimir elements C_k = tr(E^k) on highest-weight
//! modules, by two independent formulas, and their restriction to folded
//! weights (x_1,…,x_r,0,…,0,−x_r,…,−x_1).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::MPoly;
use crate::rational::{self, int, ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLWeight {
    entries: Vec<Rational>,
}

impl GLWeight {
    pub fn new(entries: Vec<Rational>) -> Self {
        GLWeight { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        GLWeight::new(entries.iter().map(|&v| int(v)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// ρ_k = (n − (2k−1))/2, k = 1..n
    pub fn rho(&self) -> Vec<Rational> {
        let n = self.n() as i64;
        (1..=n).map(|k| ratio(n - (2 * k - 1), 2)).collect()
    }
}

/// (x_1,…,x_r, 0^{n−2r}, −x_r,…,−x_1)
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedWeight {
    x: Vec<Rational>,
    n: usize,
}

impl FoldedWeight {
    pub fn new(x: Vec<Rational>, n: usize) -> Result<Self> {
        check_rank(n, x.len())?;
        Ok(FoldedWeight { x, n })
    }

    pub fn to_gl_weight(&self) -> GLWeight {
        let r = self.x.len();
        let mut e = vec![Rational::zero(); self.n];
        for (i, v) in self.x.iter().enumerate() {
            e[i] = v.clone();
            e[self.n - 1 - i] = -v.clone();
        }
        debug_assert!(r <= self.n / 2);
        GLWeight::new(e)
    }
}

fn check_rank(n: usize, r: usize) -> Result<()> {
    if n < 2 * r {
        Err(Error::Constraint(format!("need n >= 2r, got n={n}, r={r}")))
    } else {
        Ok(())
    }
}

/// Upper-triangular A with A_ii = λ_i + (n − i) and −1 above the diagonal.
pub fn casimir_matrix(weight: &GLWeight) -> Vec<Vec<Rational>> {
    let n = weight.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => &weight.entries[i] + int((n - 1 - i) as i64),
                    std::cmp::Ordering::Less => -Rational::one(),
                    std::cmp::Ordering::Greater => Rational::zero(),
                })
                .collect()
        })
        .collect()
}

/// c_k(λ) = tr(A^k F), the sum of all entries of A^k.
pub fn casimir_eig_matrix(weight: &GLWeight, k: u32) -> Rational {
    let a = casimir_matrix(weight);
    let n = weight.n();
    let mut power: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..k {
        power = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (i..=j).map(|m| &a[i][m] * &power[m][j]).sum())
                    .collect()
            })
            .collect();
    }
    power.iter().flatten().sum()
}

fn shifted_entries(weight: &GLWeight) -> Vec<Rational> {
    weight
        .entries
        .iter()
        .zip(weight.rho())
        .map(|(l, r)| l + r)
        .collect()
}

/// a_i = Π_{j≠i} (1 − 1/(λ_i − λ_j + ρ_i − ρ_j)); they add up to n.
pub fn scheunert_weights(weight: &GLWeight) -> Result<Vec<Rational>> {
    let shifted = shifted_entries(weight);
    let n = shifted.len();
    (0..n)
        .map(|i| {
            let mut a = Rational::one();
            for j in (0..n).filter(|&j| j != i) {
                let d = &shifted[i] - &shifted[j];
                if d.is_zero() {
                    return Err(Error::SingularScheunert(i.min(j) + 1, i.max(j) + 1));
                }
                a *= Rational::one() - Rational::one() / d;
            }
            Ok(a)
        })
        .collect()
}

/// c_p(λ) = Σ_i a_i (λ_i + ρ_i + (n−1)/2)^p
pub fn casimir_eig_sum(weight: &GLWeight, p: u32) -> Result<Rational> {
    let weights = scheunert_weights(weight)?;
    let half = ratio(weight.n() as i64 - 1, 2);
    Ok(shifted_entries(weight)
        .iter()
        .zip(weights)
        .map(|(l, a)| a * rational::pow(&(l + &half), p))
        .sum())
}

fn folded_diagonal(n: usize, r: usize) -> Vec<MPoly> {
    (0..n)
        .map(|j| {
            let constant = MPoly::constant(r, int((n - 1 - j) as i64));
            if j < r {
                &MPoly::var(r, j) + &constant
            } else if j >= n - r {
                &constant - &MPoly::var(r, n - 1 - j)
            } else {
                constant
            }
        })
        .collect()
}

type RestrictedCache = HashMap<(u32, usize, usize), MPoly>;

/// C_i(x_1..x_r) = c_i at the folded weight, computed symbolically as the
/// entry sum of A^i over the polynomial ring.
pub fn restricted_casimir(i: u32, n: usize, r: usize) -> Result<MPoly> {
    static CACHE: OnceLock<Mutex<RestrictedCache>> = OnceLock::new();
    check_rank(n, r)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&(i, n, r)) {
        return Ok(p.clone());
    }
    let diag = folded_diagonal(n, r);
    // v = A^i · 1, entry sum of A^i = Σ v
    let mut v: Vec<MPoly> = vec![MPoly::one(r); n];
    for _ in 0..i {
        let mut suffix = MPoly::zero(r);
        let mut next = vec![MPoly::zero(r); n];
        for row in (0..n).rev() {
            next[row] = &(&diag[row] * &v[row]) - &suffix;
            suffix = &suffix + &v[row];
        }
        v = next;
    }
    let out = v.iter().fold(MPoly::zero(r), |acc, p| &acc + p);
    cache.lock().unwrap().insert((i, n, r), out.clone());
    Ok(out)
}

/// C_κ = C_{κ_1} C_{κ_2} ⋯, with C_∅ = 1.
pub fn restricted_casimir_product(kappa: &Partition, n: usize, r: usize) -> Result<MPoly> {
    check_rank(n, r)?;
    kappa.parts().iter().try_fold(MPoly::one(r), |acc, &k| {
        Ok(&acc * &restricted_casimir(k, n, r)?)
    })
}
