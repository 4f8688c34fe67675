//! Fractions whose denominator is a product of cyclotomic polynomials.
//!
//! Every denominator met while assembling a Poincaré series is a product of
//! `(1 - z^k)` factors, so its irreducible factors are the cyclotomic
//! polynomials. Tracking denominators as cyclotomic multisets gives exact
//! LCMs and reduction without a general polynomial GCD.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{RatFunc, ZPoly};

/// Mersenne prime used for the fast divisibility filter.
const FILTER_PRIME: u64 = (1 << 61) - 1;

/// Coefficients of `Φ'_j`: the cyclotomic polynomial `Φ_j` normalized to
/// constant term one, so `Φ'_1 = 1 - z` and `Φ'_j = Φ_j` for `j > 1`.
/// With this normalization `1 - z^k = Π_{j | k} Φ'_j`.
pub fn cyclotomic(j: u32) -> Vec<i64> {
    assert!(j >= 1, "cyclotomic index must be positive");
    let j = j as usize;
    let divisors: Vec<usize> = (1..=j).filter(|d| j.is_multiple_of(*d)).collect();
    let mut p = ZPoly::one();
    for &d in &divisors {
        if mobius(j / d) == 1 {
            p = p.mul_one_minus_zk(d);
        }
    }
    for &d in &divisors {
        if mobius(j / d) == -1 {
            p = p.div_one_minus_zk(d).expect("cyclotomic quotient is exact");
        }
    }
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient fits in i64"))
        .collect()
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return 0;
            }
            result = -result;
        }
        f += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Euler's totient, i.e. the degree of `Φ_n`.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn sparse(phi: &[i64]) -> Vec<(usize, i64)> {
    phi.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % FILTER_PRIME as u128) as u64
}

/// Whether `phi` divides the polynomial whose residues mod the filter prime
/// are `res`. A `false` answer is certain; `true` must be confirmed exactly.
fn maybe_divides(res: &[u64], phi: &[i64]) -> bool {
    let dphi = phi.len() - 1;
    if res.len() <= dphi {
        return res.iter().all(|&c| c == 0);
    }
    let p = FILTER_PRIME;
    let to_mod = |c: i64| {
        if c >= 0 {
            c as u64 % p
        } else {
            p - ((-c) as u64 % p)
        }
    };
    let lc_inv = to_mod(phi[dphi]); // lc is ±1, its own inverse
    let terms: Vec<(usize, u64)> = sparse(phi)
        .into_iter()
        .map(|(i, c)| (i, to_mod(c)))
        .collect();
    let mut r = res.to_vec();
    for i in (dphi..r.len()).rev() {
        if r[i] == 0 {
            continue;
        }
        let t = mulmod(r[i], lc_inv);
        let off = i - dphi;
        for &(j, c) in &terms {
            let s = mulmod(t, c);
            r[off + j] = (r[off + j] + p - s) % p;
        }
    }
    r[..dphi].iter().all(|&c| c == 0)
}

/// `num / Π_j Φ'_j^{m_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFrac {
    pub num: ZPoly,
    pub den: BTreeMap<u32, u32>,
}

impl CycloFrac {
    pub fn new(num: ZPoly, den: BTreeMap<u32, u32>) -> Self {
        let den = den.into_iter().filter(|&(_, m)| m > 0).collect();
        Self { num, den }
    }

    pub fn from_poly(num: ZPoly) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
        }
    }

    /// Cyclotomic multiset of `Π_k (1 - z^k)^{m_k}`.
    pub fn den_of_factors(factors: &BTreeMap<u32, u32>) -> BTreeMap<u32, u32> {
        let mut den = BTreeMap::new();
        for (&k, &m) in factors {
            for j in (1..=k).filter(|j| k % j == 0) {
                *den.entry(j).or_insert(0) += m;
            }
        }
        den
    }

    /// Cancels every cyclotomic factor shared by numerator and denominator.
    pub fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut res = self.num.residues_mod(FILTER_PRIME);
        let keys: Vec<u32> = self.den.keys().rev().copied().collect();
        for j in keys {
            let phi = cyclotomic(j);
            let m = self.den.get_mut(&j).unwrap();
            while *m > 0 && maybe_divides(&res, &phi) {
                match self.num.div_exact_small(&phi) {
                    Some(q) => {
                        self.num = q;
                        res = self.num.residues_mod(FILTER_PRIME);
                        *m -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, m| *m > 0);
        self
    }

    /// Sum over the cyclotomic LCM of the denominators.
    pub fn add(&self, other: &Self) -> Self {
        let mut lcm = self.den.clone();
        for (&j, &m) in &other.den {
            let e = lcm.entry(j).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &Self| {
            let mut num = f.num.clone();
            for (&j, &m) in &lcm {
                let have = f.den.get(&j).copied().unwrap_or(0);
                if m > have && !num.is_zero() {
                    let phi = sparse(&cyclotomic(j));
                    for _ in have..m {
                        num = num.mul_sparse(&phi);
                    }
                }
            }
            num
        };
        let num = &lift(self) + &lift(other);
        Self { num, den: lcm }
    }

    /// Expanded denominator polynomial.
    pub fn den_poly(&self) -> ZPoly {
        let mut d = ZPoly::one();
        for (&j, &m) in &self.den {
            let phi = sparse(&cyclotomic(j));
            for _ in 0..m {
                d = d.mul_sparse(&phi);
            }
        }
        d
    }

    /// Reduces and converts to the normal form of [`RatFunc`].
    pub fn into_ratfunc(self) -> RatFunc {
        let r = self.reduce();
        if r.num.is_zero() {
            return RatFunc::zero();
        }
        let den = r.den_poly();
        debug_assert!(!den.coeff(0).is_zero());
        RatFunc::from_reduced(r.num, den)
    }
}
