//! Power sums, Schur polynomials, the Schur → power-sum transition and
//! rewriting of BC-symmetric polynomials in even power sums.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, semistandard_tableaux, Partition};
use crate::poly::MPoly;
use crate::rational::{format_rational, parse_rational, Rational};

fn coeffs_to_json(coeffs: &BTreeMap<Partition, Rational>) -> Value {
    let map: Map<String, Value> = coeffs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(format_rational(v))))
        .collect();
    Value::Object(map)
}

fn coeffs_from_json(value: &Value) -> Result<BTreeMap<Partition, Rational>> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let mut out = BTreeMap::new();
    for (k, v) in obj {
        let key: Partition =
            serde_json::from_str(k).map_err(|e| Error::Parse(format!("key {k}: {e}")))?;
        let s = v
            .as_str()
            .ok_or_else(|| Error::Parse(format!("coefficient of {k} is not a string")))?;
        let c = parse_rational(s)?;
        if !c.is_zero() {
            out.insert(key, c);
        }
    }
    Ok(out)
}

/// Serde adapter for coefficient maps keyed by partitions, written as
/// `{"[2,1]": "1/3", ...}`.
pub(crate) mod partition_map {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<Partition, Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        coeffs_to_json(map).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<Partition, Rational>, D::Error> {
        let v = Value::deserialize(d)?;
        coeffs_from_json(&v).map_err(serde::de::Error::custom)
    }
}

fn insert_nonzero(map: &mut BTreeMap<Partition, Rational>, key: Partition, c: Rational) {
    let slot = map.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Σ_μ c_μ p_μ
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumCombination {
    coeffs: BTreeMap<Partition, Rational>,
}

impl PowerSumCombination {
    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn get(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Σ_μ c_μ p_μ(x_1..x_r)
    pub fn to_poly(&self, r: usize) -> MPoly {
        self.coeffs.iter().fold(MPoly::zero(r), |acc, (mu, c)| {
            &acc + &powersum_poly(mu, r).scale(c)
        })
    }

    pub fn to_json(&self) -> Value {
        coeffs_to_json(&self.coeffs)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        Ok(PowerSumCombination {
            coeffs: coeffs_from_json(value)?,
        })
    }
}

/// Σ_κ c_κ p_{2κ_1} p_{2κ_2} ⋯, keyed by κ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvenPowerSumExpansion {
    coeffs: BTreeMap<Partition, Rational>,
}

impl EvenPowerSumExpansion {
    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn get(&self, kappa: &Partition) -> Rational {
        self.coeffs
            .get(kappa)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Resubstitutes the power sums in `r` variables.
    pub fn to_poly(&self, r: usize) -> MPoly {
        self.coeffs.iter().fold(MPoly::zero(r), |acc, (k, c)| {
            &acc + &powersum_poly(&k.scaled(2), r).scale(c)
        })
    }

    pub fn to_json(&self) -> Value {
        coeffs_to_json(&self.coeffs)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        Ok(EvenPowerSumExpansion {
            coeffs: coeffs_from_json(value)?,
        })
    }
}

/// p_κ(x_1..x_r) = Π_i (x_1^{κ_i} + ⋯ + x_r^{κ_i}); p_∅ = 1.
pub fn powersum_poly(kappa: &Partition, r: usize) -> MPoly {
    kappa.parts().iter().fold(MPoly::one(r), |acc, &k| {
        let single = (0..r).fold(MPoly::zero(r), |s, i| {
            let mut e = vec![0; r];
            e[i] = k;
            &s + &MPoly::monomial(e, Rational::one())
        });
        &acc * &single
    })
}

/// Schur polynomial as a sum over semistandard tableaux. Zero when ℓ(λ) > r.
pub fn schur_poly(lambda: &Partition, r: usize) -> MPoly {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), MPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), r);
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut out = MPoly::zero(r);
    for t in semistandard_tableaux(lambda, r as u32) {
        let mut e = vec![0u32; r];
        for v in t.entries() {
            e[v as usize - 1] += 1;
        }
        out = &out + &MPoly::monomial(e, Rational::one());
    }
    cache.lock().unwrap().insert(key, out.clone());
    out
}

/// z_μ = Π_i i^{m_i} m_i!
pub fn z_factor(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for i in 1..=mu.part(1) {
        let m = mu.multiplicity(i);
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

fn beta_numbers(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

fn from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i as u32))
        .collect();
    Partition::from_unsorted(parts)
}

/// Irreducible character χ^λ(μ) of the symmetric group, by the
/// Murnaghan–Nakayama rule: border strips are removed as bead moves on the
/// beta-set of λ.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    if lambda.weight() != mu.weight() {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let k = mu.part(1);
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
    let beta = beta_numbers(lambda);
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        let chi = character(&from_beta(moved), &rest);
        if crossed % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    cache.lock().unwrap().insert(key, total.clone());
    total
}

/// s_λ = Σ_{μ ⊢ |λ|} (χ^λ(μ) / z_μ) p_μ
pub fn schur_in_powersums(lambda: &Partition) -> PowerSumCombination {
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(lambda.weight()) {
        let chi = character(lambda, &mu);
        if !chi.is_zero() {
            coeffs.insert(mu.clone(), Rational::new(chi, z_factor(&mu)));
        }
    }
    PowerSumCombination { coeffs }
}

/// Checks invariance under every transposition and every sign flip of the
/// variables.
pub fn check_bc_symmetric(p: &MPoly) -> Result<()> {
    let r = p.nvars();
    for i in 0..r {
        if let Some((e, _)) = p.terms().find(|(e, _)| e[i] % 2 == 1) {
            return Err(Error::NotBcSymmetric(format!(
                "sign flip of x{} changes the term with exponents {e:?}",
                i + 1
            )));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if p.swap_vars(i, j) != *p {
                return Err(Error::NotBcSymmetric(format!(
                    "swap x{} <-> x{} changes the polynomial",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Rewrites a BC-symmetric polynomial in the algebra generated by
/// p_2, p_4, ….
///
/// Each homogeneous component is first written in the Schur basis of the
/// squared variables (leading-term elimination against `s_ν(x²)`, ℓ(ν) ≤ r)
/// and every `s_ν` is then replaced by its power-sum expansion with all
/// parts doubled. When the degree exceeds `2r` the even power sums in `r`
/// variables are not independent; this choice is the representative whose
/// Schur coefficients are supported on ℓ(ν) ≤ r, which makes `s_λ(x²)` map
/// to `Σ a_μ p_{2μ}` for every r ≥ ℓ(λ).
pub fn to_even_powersum_basis(p: &MPoly) -> Result<EvenPowerSumExpansion> {
    check_bc_symmetric(p)?;
    let r = p.nvars();
    let mut coeffs = BTreeMap::new();
    for d in p.degrees() {
        let mut h = p.homogeneous_component(d);
        while let Some((e, c)) = h.leading_term() {
            if e.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Internal(format!(
                    "nonzero residual with non-dominant leading monomial {e:?}"
                )));
            }
            let nu = Partition::new(e.iter().map(|k| k / 2).collect())?;
            let c = c.clone();
            h = &h - &schur_poly(&nu, r).at_squares().scale(&c);
            for (mu, a) in schur_in_powersums(&nu).coeffs() {
                insert_nonzero(&mut coeffs, mu.clone(), a * &c);
            }
        }
    }
    Ok(EvenPowerSumExpansion { coeffs })
}
