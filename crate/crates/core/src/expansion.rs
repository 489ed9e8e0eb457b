//! Expansion of the specialized interpolation polynomial in products of even
//! restricted Casimir polynomials, and the top-degree coefficient check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::casimir::restricted_casimir_product;
use crate::error::{Error, Result};
use crate::okounkov::{okounkov_specialized, SpecializationParams};
use crate::parallel::map_ordered;
use crate::partitions::{partitions_up_to, Partition};
use crate::poly::MPoly;
use crate::rational::{self, Rational};
use crate::symfunc::{
    check_bc_symmetric, partition_map, schur_in_powersums, to_even_powersum_basis,
};

/// Coefficients b_μ with P_λ(μ+ρ; 1; s−(n−1)/2) = Σ_μ b_μ C_{2μ}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionResult {
    pub lambda: Partition,
    pub n: usize,
    pub r: usize,
    #[serde(with = "rational::serde_str")]
    pub s: Rational,
    #[serde(with = "partition_map")]
    pub coeffs: BTreeMap<Partition, Rational>,
    pub residual_zero: bool,
}

impl ExpansionResult {
    pub fn get(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients with |μ| = |λ|.
    pub fn top(&self) -> BTreeMap<Partition, Rational> {
        let w = self.lambda.weight();
        self.coeffs
            .iter()
            .filter(|(mu, _)| mu.weight() == w)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// Coefficients with |μ| < |λ|.
    pub fn lower_order(&self) -> BTreeMap<Partition, Rational> {
        let w = self.lambda.weight();
        self.coeffs
            .iter()
            .filter(|(mu, _)| mu.weight() < w)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// `{"lambda":[…],"n":…,"r":…,"s":"p/q","coeffs":{…},"residual_zero":…}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("expansion serializes")
    }
}

fn power_of_two(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(2).pow(k as u32))
}

/// Σ_μ b_μ C_{2μ} in the original coordinates μ_1..μ_r.
pub fn resubstitute(coeffs: &BTreeMap<Partition, Rational>, n: usize, r: usize) -> Result<MPoly> {
    coeffs.iter().try_fold(MPoly::zero(r), |acc, (mu, b)| {
        Ok(&acc + &restricted_casimir_product(&mu.scaled(2), n, r)?.scale(b))
    })
}

/// Solves for the b_μ.
///
/// Everything is moved to z = μ + ρ, where both the target and every C_{2κ}
/// are BC-symmetric. Each C_{2κ} has top homogeneous part 2^{ℓ(κ)} p_{2κ}(z),
/// so working down from degree 2|λ| the top component of the residual,
/// written in even power sums, fixes the b_κ of that degree directly.
pub fn expand(lambda: &Partition, sp: &SpecializationParams) -> Result<ExpansionResult> {
    let (n, r) = (sp.n(), sp.r());
    if lambda.len() > r {
        return Err(Error::Constraint(format!(
            "partition {lambda} has more than r={r} parts"
        )));
    }
    let target = okounkov_specialized(lambda, sp)?;
    let to_z: Vec<Rational> = sp.rho().iter().map(|v| -v.clone()).collect();
    let mut residual = target.shift(&to_z)?;
    check_bc_symmetric(&residual)?;

    let candidates = partitions_up_to(lambda.weight());
    let casimirs_z = map_ordered(&candidates, |kappa| {
        let c = restricted_casimir_product(&kappa.scaled(2), n, r)?.shift(&to_z)?;
        check_bc_symmetric(&c)?;
        Ok(c)
    })?;
    let casimirs_z: HashMap<&Partition, MPoly> = candidates.iter().zip(casimirs_z).collect();

    let mut coeffs = BTreeMap::new();
    while let Some(d) = residual.degree() {
        let top = to_even_powersum_basis(&residual.homogeneous_component(d))?;
        for (kappa, c) in top.coeffs() {
            let c_kappa = casimirs_z.get(kappa).ok_or_else(|| {
                Error::ExpansionFailed(format!("no candidate for {kappa} at degree {d}"))
            })?;
            let b = c / power_of_two(kappa.len());
            residual = &residual - &c_kappa.scale(&b);
            coeffs.insert(kappa.clone(), b);
        }
        if residual.degree().is_some_and(|e| e >= d) {
            return Err(Error::ExpansionFailed(format!(
                "degree {d} component did not cancel"
            )));
        }
    }

    // re-substitution in the original coordinates, independent of the z-route
    let residual_zero = resubstitute(&coeffs, n, r)? == target;
    if !residual_zero {
        return Err(Error::ExpansionFailed(
            "re-substitution does not reproduce the target".into(),
        ));
    }
    Ok(ExpansionResult {
        lambda: lambda.clone(),
        n,
        r,
        s: sp.s().clone(),
        coeffs,
        residual_zero,
    })
}

/// {μ ⊢ |λ| : a_μ / 2^{ℓ(μ)}} where s_λ = Σ a_μ p_μ.
pub fn top_coefficients(lambda: &Partition) -> BTreeMap<Partition, Rational> {
    schur_in_powersums(lambda)
        .coeffs()
        .iter()
        .map(|(mu, a)| (mu.clone(), a / power_of_two(mu.len())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub expansion: ExpansionResult,
    pub expected_top: BTreeMap<Partition, Rational>,
    pub computed_top: BTreeMap<Partition, Rational>,
    /// Partitions where the two top maps disagree.
    pub mismatches: Vec<Partition>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.expansion.residual_zero
    }

    pub fn lower_order(&self) -> BTreeMap<Partition, Rational> {
        self.expansion.lower_order()
    }
}

/// Expands and compares the degree-2|λ| coefficients with a_μ/2^{ℓ(μ)}.
pub fn verify_theorem(lambda: &Partition, sp: &SpecializationParams) -> Result<TheoremReport> {
    let expansion = expand(lambda, sp)?;
    let expected_top = top_coefficients(lambda);
    let computed_top = expansion.top();
    let mut keys: Vec<&Partition> = expected_top.keys().chain(computed_top.keys()).collect();
    keys.sort();
    keys.dedup();
    let mismatches = keys
        .into_iter()
        .filter(|k| expected_top.get(*k) != computed_top.get(*k))
        .cloned()
        .collect();
    Ok(TheoremReport {
        expansion,
        expected_top,
        computed_top,
        mismatches,
    })
}
