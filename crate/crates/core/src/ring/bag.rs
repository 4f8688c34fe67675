//! Rational functions with a denominator of `(1 - z^k)` factors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::cyclo::{cyclotomic, totient, CycloFrac};
use super::{RatFunc, ZPoly};

/// `numer / Π_k (1 - z^k)^{m_k}` with every `k ≥ 1` and `m_k ≥ 1`.
///
/// The numerator carries any sign and `z^a` scale. Products of these
/// factors are q-Pochhammer symbols in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorBag {
    numer: ZPoly,
    factors: BTreeMap<u32, u32>,
}

impl FactorBag {
    pub fn new(numer: ZPoly, factors: BTreeMap<u32, u32>) -> Self {
        assert!(!factors.contains_key(&0), "factor 1 - z^0 vanishes");
        let factors = factors.into_iter().filter(|&(_, m)| m > 0).collect();
        Self { numer, factors }
    }

    pub fn from_poly(numer: ZPoly) -> Self {
        Self {
            numer,
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(ZPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ZPoly::one())
    }

    /// `1 / (z^a; z^q)_n = 1 / ((1 - z^a)(1 - z^{a+q}) ⋯ (1 - z^{a+(n-1)q}))`.
    pub fn pochhammer_recip(a: u32, q: u32, n: u32) -> Self {
        assert!(a >= 1, "Pochhammer base exponent must be positive");
        let mut factors = BTreeMap::new();
        for i in 0..n {
            *factors.entry(a + i * q).or_insert(0) += 1;
        }
        Self::new(ZPoly::one(), factors)
    }

    pub fn numer(&self) -> &ZPoly {
        &self.numer
    }

    pub fn factors(&self) -> &BTreeMap<u32, u32> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Degree of the expanded denominator.
    pub fn den_degree(&self) -> usize {
        self.factors.iter().map(|(&k, &m)| (k * m) as usize).sum()
    }

    /// `Π_k (1 - z^k)^{m_k}` multiplied out.
    pub fn denominator(&self) -> ZPoly {
        let mut d = ZPoly::one();
        for (&k, &m) in &self.factors {
            for _ in 0..m {
                d = d.mul_one_minus_zk(k as usize);
            }
        }
        d
    }

    pub fn to_cyclo(&self) -> CycloFrac {
        CycloFrac::new(self.numer.clone(), CycloFrac::den_of_factors(&self.factors))
    }

    /// The reduced rational function this bag represents.
    pub fn to_ratfunc(&self) -> RatFunc {
        self.to_cyclo().into_ratfunc()
    }

    /// Constant term of the power series.
    pub fn constant_term(&self) -> BigInt {
        self.numer.coeff(0)
    }

    pub fn neg(&self) -> Self {
        Self {
            numer: -&self.numer,
            factors: self.factors.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&k, &m) in &other.factors {
            *factors.entry(k).or_insert(0) += m;
        }
        Self {
            numer: &self.numer * &other.numer,
            factors,
        }
    }

    pub fn mul_poly(&self, p: &ZPoly) -> Self {
        Self {
            numer: &self.numer * p,
            factors: self.factors.clone(),
        }
    }

    /// Multiplies by `1 - z^k`, cancelling against the bag when possible.
    pub fn mul_one_minus_zk(&self, k: u32) -> Self {
        let mut out = self.clone();
        match out.factors.get_mut(&k) {
            Some(m) => {
                *m -= 1;
                if *m == 0 {
                    out.factors.remove(&k);
                }
            }
            None => out.numer = out.numer.mul_one_minus_zk(k as usize),
        }
        out
    }

    /// Sum over the least common multiple of the two factor bags.
    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut lcm = self.factors.clone();
        for (&k, &m) in &other.factors {
            let e = lcm.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |b: &Self| {
            let mut n = b.numer.clone();
            for (&k, &m) in &lcm {
                let have = b.factors.get(&k).copied().unwrap_or(0);
                for _ in have..m {
                    n = n.mul_one_minus_zk(k as usize);
                }
            }
            n
        };
        Self {
            numer: &lift(self) + &lift(other),
            factors: lcm,
        }
    }

    /// `d/dz`, staying in factored form: each distinct factor gains one power.
    pub fn derivative(&self) -> Self {
        // (N/B)' = [N' P + N Σ_k m_k k z^{k-1} P/(1 - z^k)] / (B P),
        // P = Π over distinct k of (1 - z^k)
        let mut p = ZPoly::one();
        for &k in self.factors.keys() {
            p = p.mul_one_minus_zk(k as usize);
        }
        let mut numer = &self.numer.derivative() * &p;
        for (&k, &m) in &self.factors {
            let others = p
                .div_one_minus_zk(k as usize)
                .expect("distinct factor divides P");
            let term = (&self.numer * &others).shift(k as usize - 1);
            numer = &numer + &term.scale(&BigInt::from(m * k));
        }
        let factors = self.factors.iter().map(|(&k, &m)| (k, m + 1)).collect();
        Self { numer, factors }
    }

    /// Multiplies by `z`.
    pub fn shift(&self, k: usize) -> Self {
        Self {
            numer: self.numer.shift(k),
            factors: self.factors.clone(),
        }
    }

    /// Rewrites a rational function over `(1 - z^k)` factors.
    ///
    /// Factors are peeled off the reduced denominator by trial division,
    /// largest `k` first. A leftover product of cyclotomic polynomials is
    /// completed to full `(1 - z^j)` factors by moving the missing
    /// cyclotomic parts into the numerator. Returns the bag together with
    /// whatever part of the denominator could not be expressed this way
    /// (`None` when fully factored).
    pub fn factor_ratfunc(r: &RatFunc) -> (Self, Option<ZPoly>) {
        let mut rem = r.den().clone();
        let mut factors: BTreeMap<u32, u32> = BTreeMap::new();
        let top = rem.degree().unwrap_or(0);
        for k in (1..=top).rev() {
            while rem.degree().is_some_and(|d| d >= k) {
                match rem.div_one_minus_zk(k) {
                    Some(q) => {
                        rem = q;
                        *factors.entry(k as u32).or_insert(0) += 1;
                    }
                    None => break,
                }
            }
        }
        let mut numer = r.num().clone();
        if rem.degree() != Some(0) {
            // complete leftover cyclotomic factors
            let mut completed = factors.clone();
            let mut cnum = numer.clone();
            let mut crem = rem.clone();
            let bound = 6 * crem.degree().unwrap_or(0) as u32 + 6;
            for j in 1..=bound {
                let d = crem.degree().unwrap_or(0) as u32;
                if d == 0 {
                    break;
                }
                if totient(j) > d {
                    continue;
                }
                let phi = cyclotomic(j);
                while let Some(q) = crem.div_exact_small(&phi) {
                    crem = q;
                    let cofactor = ZPoly::one_minus_zk(j as usize)
                        .div_exact_small(&phi)
                        .expect("Φ'_j divides 1 - z^j");
                    cnum = &cnum * &cofactor;
                    *completed.entry(j).or_insert(0) += 1;
                }
            }
            if crem.degree() != Some(0) {
                return (
                    Self::new(r.num().clone(), BTreeMap::new()),
                    Some(r.den().clone()),
                );
            }
            factors = completed;
            numer = cnum;
            rem = crem;
        }
        // rem is a constant unit of the remaining denominator
        let unit = rem.coeff(0);
        debug_assert!(!unit.is_zero());
        let numer = if unit == BigInt::from(1) {
            numer
        } else if unit == BigInt::from(-1) {
            -&numer
        } else {
            return (
                Self::new(r.num().clone(), BTreeMap::new()),
                Some(r.den().clone()),
            );
        };
        (Self::new(numer, factors), None)
    }
}

/// Multiplies out a factor bag into a reduced rational function.
pub fn factored_expand(f: &FactorBag) -> RatFunc {
    f.to_ratfunc()
}
