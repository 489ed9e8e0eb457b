//! Okounkov BC-type interpolation polynomials from the reverse-tableau formula.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::parallel::sum_polys;
use crate::partitions::{rc_set, reverse_tableaux, Cell, Partition, ReverseTableau};
use crate::poly::MPoly;
use crate::rational::{int, ratio, Rational};

/// Rank `r` with the two deformation parameters τ and α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkounkovParams {
    pub r: usize,
    pub tau: Rational,
    pub alpha: Rational,
}

impl OkounkovParams {
    pub fn new(r: usize, tau: Rational, alpha: Rational) -> Self {
        OkounkovParams { r, tau, alpha }
    }
}

/// `(n, r, s)` with `n ≥ 2r`; fixes τ = 1, α = s − (n−1)/2 and the shift ρ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationParams {
    n: usize,
    r: usize,
    s: Rational,
}

impl SpecializationParams {
    pub fn new(n: usize, r: usize, s: Rational) -> Result<Self> {
        if n < 2 * r {
            return Err(Error::Constraint(format!("need n >= 2r, got n={n}, r={r}")));
        }
        Ok(SpecializationParams { n, r, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// α = s − (n−1)/2
    pub fn alpha(&self) -> Rational {
        &self.s - ratio(self.n as i64 - 1, 2)
    }

    /// ρ_i = (n − (2i−1))/2 for i = 1..r.
    pub fn rho(&self) -> Vec<Rational> {
        (1..=self.r as i64)
            .map(|i| ratio(self.n as i64 - (2 * i - 1), 2))
            .collect()
    }
}

/// b_μ(b; τ) = (a + τ(l+1)) / (a + τ l + 1)
pub fn b_factor(mu: &Partition, cell: Cell, tau: &Rational) -> Result<Rational> {
    let a = int(mu.arm(cell)? as i64);
    let l = int(mu.leg(cell)? as i64);
    let den = &a + tau * &l + Rational::one();
    if den.is_zero() {
        return Err(Error::ZeroDenominator {
            cell,
            shape: mu.clone(),
        });
    }
    Ok((&a + tau * (l + Rational::one())) / den)
}

/// Φ_T(τ): product over the filtration λ^{(0)} ⊇ λ^{(1)} ⊇ … of T of the
/// ratios b_{λ^{(i)}}/b_{λ^{(i−1)}} on the boxes of `rc_set(λ^{(i−1)}, λ^{(i)})`.
pub fn phi_weight(t: &ReverseTableau, tau: &Rational) -> Result<Rational> {
    let top = t.entries().into_iter().max().unwrap_or(0);
    let mut phi = Rational::one();
    let mut outer = t.upper_shape(0);
    for i in 1..=top {
        let inner = t.upper_shape(i);
        for cell in rc_set(&outer, &inner)? {
            let num = b_factor(&inner, cell, tau)?;
            let den = b_factor(&outer, cell, tau)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator {
                    cell,
                    shape: outer.clone(),
                });
            }
            phi *= num / den;
        }
        outer = inner;
    }
    Ok(phi)
}

fn tableau_term(lambda: &Partition, t: &ReverseTableau, params: &OkounkovParams) -> Result<MPoly> {
    let r = params.r;
    let weight = if params.tau.is_one() {
        Rational::one()
    } else {
        phi_weight(t, &params.tau)?
    };
    let mut term = MPoly::constant(r, weight);
    for cell in lambda.cells() {
        let k = t.entry(cell);
        let a_co = int(lambda.arm_colength(cell)? as i64);
        let l_co = int(lambda.leg_colength(cell)? as i64);
        let shift = a_co + &params.tau * (int(r as i64 - k as i64) - l_co) + &params.alpha;
        let mut e = vec![0; r];
        e[k as usize - 1] = 2;
        let factor = &MPoly::monomial(e, Rational::one()) - &MPoly::constant(r, &shift * &shift);
        term = &term * &factor;
    }
    Ok(term)
}

/// P_λ(x; τ; α) in `params.r` variables. Zero when ℓ(λ) > r.
pub fn okounkov_poly(lambda: &Partition, params: &OkounkovParams) -> Result<MPoly> {
    let tableaux = reverse_tableaux(lambda, params.r as u32);
    sum_polys(&tableaux, params.r, |t| tableau_term(lambda, t, params))
}

/// P_λ(μ + ρ; 1; s − (n−1)/2) as a polynomial in μ_1..μ_r.
pub fn okounkov_specialized(lambda: &Partition, sp: &SpecializationParams) -> Result<MPoly> {
    let params = OkounkovParams::new(sp.r, Rational::one(), sp.alpha());
    okounkov_poly(lambda, &params)?.shift(&sp.rho())
}
