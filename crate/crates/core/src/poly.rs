//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, Rational};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in a fixed number of variables. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
    exps: Vec<u32>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = MPoly::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(Exponents(exps), c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(Exponents(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    /// The graded-lex largest term.
    pub fn leading_term(&self) -> Option<(&[u32], &Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.0.as_slice(), c))
    }

    fn check_arity(&self, other: &MPoly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                out.add_term(Exponents(e), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= rational::pow(x, k);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x_i ↦ x_i + offsets[i]`, so `result(x) = self(x + offsets)`.
    pub fn shift(&self, offsets: &[Rational]) -> Result<MPoly> {
        if offsets.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: offsets.len(),
            });
        }
        let n = self.nvars;
        let linear: Vec<MPoly> = offsets
            .iter()
            .enumerate()
            .map(|(i, c)| &MPoly::var(n, i) + &MPoly::constant(n, c.clone()))
            .collect();
        // cache powers of each linear factor
        let mut powers: Vec<Vec<MPoly>> = vec![vec![MPoly::one(n)]; n];
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &linear[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// The terms of maximal total degree.
    pub fn top_homogeneous(&self) -> Result<MPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    pub fn homogeneous_component(&self, d: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees that carry at least one term, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Exponents::degree).collect();
        ds.dedup();
        ds
    }

    /// Applies a map to every exponent vector and re-collects terms.
    pub fn map_exponents<F>(&self, f: F) -> MPoly
    where
        F: Fn(&[u32]) -> Vec<u32>,
    {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(Exponents(f(&e.0)), c.clone());
        }
        out
    }

    /// Substitutes `x_i ↦ x_i²` in every variable.
    pub fn at_squares(&self) -> MPoly {
        self.map_exponents(|e| e.iter().map(|k| 2 * k).collect())
    }

    /// Swaps `x_{i+1}` and `x_{j+1}`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        self.map_exponents(|e| {
            let mut v = e.to_vec();
            v.swap(i, j);
            v
        })
    }

    /// Substitutes `x_{i+1} ↦ −x_{i+1}`.
    pub fn flip_sign(&self, i: usize) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let c = if e.0[i] % 2 == 1 {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    (e.clone(), c)
                })
                .collect(),
        }
    }

    /// Text form with the given variable stem, e.g. `x` gives `x1^2*x2`.
    pub fn to_text(&self, stem: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = rational::is_negative(c);
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| {
                        if a == 1 {
                            format!("{stem}{}", i + 1)
                        } else {
                            format!("{stem}{}^{a}", i + 1)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                s.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    s.push_str(&format_rational(&abs));
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }

    /// JSON list of `{"coeff": "p/q", "exps": [...]}`, graded-lex descending.
    pub fn to_json(&self) -> Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| JsonTerm {
                coeff: c.clone(),
                exps: e.0.clone(),
            })
            .collect();
        serde_json::to_value(terms).expect("term list serializes")
    }

    pub fn from_json(nvars: usize, value: &Value) -> Result<MPoly> {
        let terms: Vec<JsonTerm> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("polynomial json: {e}")))?;
        MPoly::from_terms(nvars, terms.into_iter().map(|t| (t.exps, t.coeff)))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

// Operator forms panic on mismatched arity; use the `checked_*` methods when
// the operands come from outside the crate.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}
