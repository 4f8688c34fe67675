//! Brute-force dimension counts for the graded pieces.
//!
//! `ω_n(i)` is the number of degree-`n` monomials in the coefficients of two
//! binary forms whose total weight is `i`. Two independent routes compute
//! it: a dynamic program over the variables, and a truncated expansion of
//! the bivariate generating function `Π 1/(1 - t z^e)`. Dimensions of the
//! invariant and covariant pieces follow as `ω_n(0) - ω_n(2)` and
//! `ω_n(0) + ω_n(1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ring::ZPoly;

/// Degrees of the two binary forms, both at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormPair {
    d1: u32,
    d2: u32,
}

impl FormPair {
    pub fn new(d1: u32, d2: u32) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok(Self { d1, d2 })
    }

    pub fn d1(&self) -> u32 {
        self.d1
    }

    pub fn d2(&self) -> u32 {
        self.d2
    }

    /// `(min, max)` of the two degrees.
    pub fn normalized(&self) -> (u32, u32) {
        (self.d1.min(self.d2), self.d1.max(self.d2))
    }

    pub fn max_degree(&self) -> u32 {
        self.d1.max(self.d2)
    }

    pub fn swapped(&self) -> Self {
        Self {
            d1: self.d2,
            d2: self.d1,
        }
    }

    /// Weights `d - 2j` of the basis vectors of both forms.
    pub fn weights(&self) -> Vec<i64> {
        let form = |d: u32| (0..=d).map(move |j| d as i64 - 2 * j as i64);
        form(self.d1).chain(form(self.d2)).collect()
    }

    /// All pairs `1 ≤ d1 ≤ d2 ≤ bound`.
    pub fn all_up_to(bound: u32) -> Vec<Self> {
        (1..=bound)
            .flat_map(|d2| (1..=d2).map(move |d1| Self { d1, d2 }))
            .collect()
    }
}

/// One entry `ω_n(i)` of the weight table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightCount {
    pub n: u32,
    pub i: i64,
    pub value: u128,
}

/// `ω_n(i)` for every `n ≤ max_n` and every weight, from one dynamic
/// program over the variables.
#[derive(Clone, Debug)]
pub struct OmegaTable {
    max_n: u32,
    offset: i64,
    counts: Vec<Vec<u128>>,
}

impl OmegaTable {
    pub fn build(p: FormPair, max_n: u32) -> Self {
        let dmax = p.max_degree() as i64;
        let offset = max_n as i64 * dmax;
        let width = (2 * offset + 1) as usize;
        let rows = max_n as usize + 1;
        // counts[c][w + offset]: monomials of degree c and weight w in the
        // variables processed so far
        let mut counts = vec![vec![0u128; width]; rows];
        counts[0][offset as usize] = 1;
        for wv in p.weights() {
            for c in 1..rows {
                let (lower, upper) = counts.split_at_mut(c);
                let prev = &lower[c - 1];
                let cur = &mut upper[0];
                for (w, slot) in cur.iter_mut().enumerate() {
                    let src = w as i64 - wv;
                    if (0..width as i64).contains(&src) {
                        let add = prev[src as usize];
                        if add != 0 {
                            *slot = slot.checked_add(add).expect("omega count exceeds u128");
                        }
                    }
                }
            }
        }
        Self {
            max_n,
            offset,
            counts,
        }
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn omega(&self, n: u32, i: i64) -> u128 {
        if n > self.max_n {
            panic!("degree {n} beyond table bound {}", self.max_n);
        }
        let idx = i + self.offset;
        if idx < 0 || idx >= self.counts[0].len() as i64 {
            return 0;
        }
        self.counts[n as usize][idx as usize]
    }

    pub fn entries(&self) -> Vec<WeightCount> {
        let mut out = Vec::new();
        for n in 0..=self.max_n {
            for (w, &value) in self.counts[n as usize].iter().enumerate() {
                if value != 0 {
                    out.push(WeightCount {
                        n,
                        i: w as i64 - self.offset,
                        value,
                    });
                }
            }
        }
        out
    }

    pub fn dim_invariants(&self, n: u32) -> u128 {
        self.omega(n, 0) - self.omega(n, 2)
    }

    pub fn dim_covariants(&self, n: u32) -> u128 {
        self.omega(n, 0) + self.omega(n, 1)
    }

    pub fn invariant_dims(&self) -> Vec<u128> {
        (0..=self.max_n).map(|n| self.dim_invariants(n)).collect()
    }

    pub fn covariant_dims(&self) -> Vec<u128> {
        (0..=self.max_n).map(|n| self.dim_covariants(n)).collect()
    }
}

/// Number of nonnegative integer solutions of the weight system: degree-`n`
/// monomials of total weight `i`.
pub fn omega_count(p: FormPair, n: u32, i: i64) -> u128 {
    OmegaTable::build(p, n).omega(n, i)
}

/// Multiplicity of `V_k` in `S^n(V_{d1} ⊕ V_{d2})`, `ω_n(k) - ω_n(k+2)`.
pub fn gamma_multiplicity(p: FormPair, n: u32, k: u32) -> u128 {
    let t = OmegaTable::build(p, n);
    let (a, b) = (t.omega(n, k as i64), t.omega(n, k as i64 + 2));
    a.checked_sub(b)
        .expect("weight multiplicities are unimodal")
}

pub fn dim_invariants(p: FormPair, n: u32) -> u128 {
    OmegaTable::build(p, n).dim_invariants(n)
}

pub fn dim_covariants(p: FormPair, n: u32) -> u128 {
    OmegaTable::build(p, n).dim_covariants(n)
}

/// Coefficients of `t^0 .. t^N` of `Π_e 1/(1 - t z^e)` over the weight
/// exponents shifted by `max(d1, d2)`, so every exponent is nonnegative.
#[derive(Clone, Debug)]
pub struct TruncatedOmega {
    shift: i64,
    rows: Vec<ZPoly>,
}

impl TruncatedOmega {
    /// The `t^n` coefficient; `z^{n·d + i}` carries `ω_n(i)`.
    pub fn row(&self, n: u32) -> &ZPoly {
        &self.rows[n as usize]
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn omega(&self, n: u32, i: i64) -> BigInt {
        let e = n as i64 * self.shift + i;
        if e < 0 {
            return BigInt::default();
        }
        self.rows[n as usize].coeff(e as usize)
    }

    pub fn table(&self) -> Vec<WeightCount> {
        let mut out = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (e, c) in row.coeffs().iter().enumerate() {
                if let Some(value) = c.to_u128().filter(|&v| v != 0) {
                    out.push(WeightCount {
                        n: n as u32,
                        i: e as i64 - n as i64 * self.shift,
                        value,
                    });
                }
            }
        }
        out
    }
}

pub fn truncated_omega(p: FormPair, max_n: u32) -> TruncatedOmega {
    let (lo, hi) = p.normalized();
    let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
    for i in 0..=lo {
        *exps.entry(lo + hi - 2 * i).or_insert(0) += 1;
    }
    for j in 0..=hi {
        *exps.entry(2 * j).or_insert(0) += 1;
    }
    let mut rows = vec![ZPoly::zero(); max_n as usize + 1];
    rows[0] = ZPoly::one();
    for (&e, &m) in &exps {
        for _ in 0..m {
            // multiply by 1/(1 - t z^e): c_n += z^e c_{n-1}, n ascending
            for n in 1..rows.len() {
                let add = rows[n - 1].shift(e as usize);
                rows[n] = &rows[n] + &add;
            }
        }
    }
    TruncatedOmega {
        shift: hi as i64,
        rows,
    }
}
