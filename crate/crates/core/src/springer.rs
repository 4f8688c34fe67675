//! Poincaré series by partial fractions in `t`.
//!
//! After the substitution `t -> t z^d` the generating function becomes
//! `Π_e 1/(1 - t z^e)^{m_e}` over a finite exponent multiset. Its partial
//! fraction decomposition in `t` has coefficients that are rational
//! functions of `z` only, and the diagonal `Ψ_{1,d}` of each term is a
//! multisection of its coefficient. Summing these gives the series exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::canonical::{present, Presentation};
use crate::error::{Error, Result};
use crate::multisection::{psi_double, psi_simple};
use crate::oracle::FormPair;
use crate::ring::{CycloFrac, FactorBag, RatFunc, ZPoly};

/// Which graded algebra a series counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Invariants,
    Covariants,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::Invariants, Kind::Covariants];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Invariants => "invariants",
            Kind::Covariants => "covariants",
        }
    }

    /// `PI` or `PC`.
    pub fn prefix(&self) -> &'static str {
        match self {
            Kind::Invariants => "PI",
            Kind::Covariants => "PC",
        }
    }

    /// Multiplies by `1 - z^2` (invariants) or `1 + z` (covariants).
    fn weight_filter(&self, b: &FactorBag) -> FactorBag {
        match self {
            Kind::Invariants => b.mul_one_minus_zk(2),
            Kind::Covariants => {
                if b.factors().contains_key(&2) {
                    // (1 + z)/(1 - z^2) = 1/(1 - z)
                    let mut f = b.factors().clone();
                    *f.get_mut(&2).unwrap() -= 1;
                    *f.entry(1).or_insert(0) += 1;
                    FactorBag::new(b.numer().clone(), f)
                } else {
                    b.mul_poly(&ZPoly::from_i64s(&[1, 1]))
                }
            }
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "invariants" => Ok(Kind::Invariants),
            "covariants" => Ok(Kind::Covariants),
            other => Err(Error::Parse(format!("unknown kind {other:?}"))),
        }
    }
}

/// `prefactor(z) · Π_e 1/(1 - t z^e)^{m_e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFactored {
    pub exponents: BTreeMap<u32, u32>,
    pub prefactor: FactorBag,
}

impl TFactored {
    pub fn total_multiplicity(&self) -> u32 {
        self.exponents.values().sum()
    }
}

/// One term `coeff(z) / (1 - t z^e)^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFTerm {
    pub e: u32,
    pub order: u8,
    pub coeff: FactorBag,
}

/// The generating function with `t` replaced by `t z^{max(d1, d2)}`:
/// exponents `{d1 + d2 - 2i : i ≤ d1} ∪ {2j : j ≤ d2}` for `d1 ≤ d2`, with
/// coinciding exponents merged into multiplicity two.
pub fn shifted_genfun(p: FormPair) -> TFactored {
    let (lo, hi) = p.normalized();
    let mut exponents = BTreeMap::new();
    for i in 0..=lo {
        *exponents.entry(lo + hi - 2 * i).or_insert(0) += 1;
    }
    for j in 0..=hi {
        *exponents.entry(2 * j).or_insert(0) += 1;
    }
    TFactored {
        exponents,
        prefactor: FactorBag::one(),
    }
}

/// `Π_{e' ≠ e} (1 - t z^{e'})^{-m'}` evaluated at `t = z^{-e}`.
fn residue_base(f: &TFactored, e: u32) -> Result<FactorBag> {
    let mut factors = BTreeMap::new();
    let mut zpow = 0usize;
    let mut negate = false;
    for (&other, &m) in &f.exponents {
        if other == e {
            continue;
        }
        // 1 - z^{other - e}; for other < e it is -z^{-a}(1 - z^a)
        let a = other.abs_diff(e);
        if a == 0 {
            return Err(Error::DegeneratePole(e));
        }
        *factors.entry(a).or_insert(0) += m;
        if other < e {
            zpow += (a * m) as usize;
            negate ^= m % 2 == 1;
        }
    }
    let sign = if negate { -1 } else { 1 };
    let numer = ZPoly::monomial(BigInt::from(sign), zpow);
    Ok(FactorBag::new(numer, factors).mul(&f.prefactor))
}

/// `-z^{-e} g'_t(z^{-e}) / g(z^{-e})` for `g = f (1 - t z^e)^2`, from the
/// logarithmic derivative `g'/g = Σ m' z^{e'}/(1 - t z^{e'})`.
fn log_derivative_weight(f: &TFactored, e: u32) -> FactorBag {
    let mut acc = FactorBag::zero();
    for (&other, &m) in &f.exponents {
        if other == e {
            continue;
        }
        let a = other.abs_diff(e);
        let term = if other > e {
            FactorBag::new(
                ZPoly::monomial(BigInt::from(-(m as i64)), a as usize),
                BTreeMap::from([(a, 1)]),
            )
        } else {
            FactorBag::new(ZPoly::constant(BigInt::from(m)), BTreeMap::from([(a, 1)]))
        };
        acc = acc.add(&term);
    }
    acc
}

/// Partial fractions of `f` in `t`. Simple poles give one term; a double
/// pole gives an order-2 term `g(z^{-e})` and an order-1 term
/// `-z^{-e} g'_t(z^{-e})`, with `g` the function times `(1 - t z^e)^2`.
pub fn partial_fractions(f: &TFactored) -> Result<Vec<PFTerm>> {
    let mut terms = Vec::new();
    for (&e, &m) in &f.exponents {
        let base = residue_base(f, e)?;
        match m {
            1 => terms.push(PFTerm {
                e,
                order: 1,
                coeff: base,
            }),
            2 => {
                let weight = log_derivative_weight(f, e);
                terms.push(PFTerm {
                    e,
                    order: 1,
                    coeff: base.mul(&weight),
                });
                terms.push(PFTerm {
                    e,
                    order: 2,
                    coeff: base,
                });
            }
            _ => {
                return Err(Error::OutOfRange(format!(
                    "pole multiplicity {m} at exponent {e}"
                )))
            }
        }
    }
    Ok(terms)
}

/// Residue families for pairs of opposite parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueFamily {
    /// Poles at `t = z^{2k - (d1 + d2)}`, `0 ≤ k ≤ d1`.
    A,
    /// Poles at `t = z^{-2k}`, `0 ≤ k ≤ d2`.
    B,
}

/// `sign · z^zpow / Π (1 - z^k)^{m_k}` where `zpow` may be negative.
#[derive(Clone, Debug)]
struct Laurent {
    negate: bool,
    zpow: i64,
    factors: BTreeMap<u32, u32>,
}

impl Laurent {
    fn monomial(negate: bool, zpow: i64) -> Self {
        Self {
            negate,
            zpow,
            factors: BTreeMap::new(),
        }
    }

    /// Divides by `(z^a; z^q)_n`, allowing negative exponents.
    fn over_pochhammer(mut self, a: i64, q: i64, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::OutOfRange(format!("Pochhammer length {n}")));
        }
        for i in 0..n {
            let c = a + i * q;
            match c {
                0 => return Err(Error::OutOfRange("vanishing Pochhammer factor".into())),
                c if c > 0 => *self.factors.entry(c as u32).or_insert(0) += 1,
                c => {
                    // 1/(1 - z^c) = -z^{-c}/(1 - z^{-c})
                    *self.factors.entry((-c) as u32).or_insert(0) += 1;
                    self.zpow -= c;
                    self.negate = !self.negate;
                }
            }
        }
        Ok(self)
    }

    fn to_ratfunc(&self) -> RatFunc {
        let sign = BigInt::from(if self.negate { -1 } else { 1 });
        let bag = FactorBag::new(
            ZPoly::monomial(sign, self.zpow.max(0) as usize),
            self.factors.clone(),
        );
        let den = ZPoly::monomial(BigInt::from(1), (-self.zpow).max(0) as usize);
        bag.to_ratfunc()
            .div(&RatFunc::from_poly(den))
            .expect("monomial is nonzero")
    }
}

/// Closed-form residues for `d1 < d2` of opposite parity, as an independent
/// check on [`partial_fractions`].
///
/// Family A: `(-1)^{d1-k} z^{(d1-k)(d1-k+1)} / ((z²;z²)_k (z²;z²)_{d1-k} (z^{2k-d1-d2}; z²)_{d2+1})`.
/// Family B for `2k < d2 - d1`:
/// `(-1)^k z^{k(k+1)} / ((z^{d2-d1-2k}; z²)_{d1+1} (z²;z²)_k (z²;z²)_{d2-k})`.
/// Family B for larger `k` uses the second printed case, which does not
/// agree with the generic residue in general; callers report mismatches.
pub fn closed_form_simple(p: FormPair, family: ResidueFamily, k: u32) -> Result<RatFunc> {
    let (d1, d2) = p.normalized();
    if d1 == d2 || (d2 - d1) % 2 == 0 {
        return Err(Error::OutOfRange(format!(
            "closed form needs d2 > d1 of opposite parity, got ({d1}, {d2})"
        )));
    }
    let (d1, d2, k) = (d1 as i64, d2 as i64, k as i64);
    let value = match family {
        ResidueFamily::A => {
            if k > d1 {
                return Err(Error::OutOfRange(format!("k = {k} > d1 = {d1}")));
            }
            let j = d1 - k;
            Laurent::monomial(j % 2 == 1, j * (j + 1))
                .over_pochhammer(2, 2, k)?
                .over_pochhammer(2, 2, j)?
                .over_pochhammer(2 * k - d1 - d2, 2, d2 + 1)?
        }
        ResidueFamily::B => {
            if k > d2 {
                return Err(Error::OutOfRange(format!("k = {k} > d2 = {d2}")));
            }
            if 2 * k < d2 - d1 {
                Laurent::monomial(k % 2 == 1, k * (k + 1))
                    .over_pochhammer(d2 - d1 - 2 * k, 2, d1 + 1)?
                    .over_pochhammer(2, 2, k)?
                    .over_pochhammer(2, 2, d2 - k)?
            } else {
                let h = (d2 - d1 + 1) / 2;
                let s = (2 * k - (d2 - d1) - 1) / 2;
                Laurent::monomial(h % 2 == 1, k * (k + 2) - h)
                    .over_pochhammer(1, 2, s + 1)?
                    .over_pochhammer(1, 2, d1 - s)?
                    .over_pochhammer(1, 2, k)?
                    .over_pochhammer(2, 2, d2 - k)?
            }
        }
    };
    Ok(value.to_ratfunc())
}

/// Pole exponent of residue `k` in a family, for `d1 ≤ d2`.
pub fn family_exponent(p: FormPair, family: ResidueFamily, k: u32) -> u32 {
    let (d1, d2) = p.normalized();
    match family {
        ResidueFamily::A => d1 + d2 - 2 * k,
        ResidueFamily::B => 2 * k,
    }
}

/// A computed Poincaré series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareResult {
    pub pair: FormPair,
    pub kind: Kind,
    pub value: RatFunc,
    pub presentation: Option<Presentation>,
    pub series: Option<Vec<BigInt>>,
}

impl PoincareResult {
    /// Attaches the first `terms` coefficients `z^0 .. z^{terms-1}`.
    pub fn with_series(mut self, terms: usize) -> Result<Self> {
        self.series = if terms == 0 {
            Some(Vec::new())
        } else {
            Some(self.value.series_prefix(terms - 1)?)
        };
        Ok(self)
    }
}

/// Sums `Ψ_{1,d}` over the partial fractions of the shifted generating
/// function weighted by `1 - z^2` (invariants) or `1 + z` (covariants).
pub fn poincare_series(p: FormPair, kind: Kind) -> PoincareResult {
    let value = poincare_value(p, kind);
    let presentation = Some(present(&value));
    PoincareResult {
        pair: p,
        kind,
        value,
        presentation,
        series: None,
    }
}

/// The series as a reduced rational function, without a presentation.
pub fn poincare_value(p: FormPair, kind: Kind) -> RatFunc {
    let n = p.max_degree();
    let f = shifted_genfun(p);
    let terms = partial_fractions(&f).expect("shifted generating function has isolated poles");
    let mut acc = CycloFrac::from_poly(ZPoly::zero());
    for t in terms.iter().filter(|t| t.e <= n) {
        let r = kind.weight_filter(&t.coeff);
        let part = match t.order {
            1 => psi_simple(n, t.e, &r),
            _ => psi_double(n, t.e, &r),
        };
        if part.is_zero() {
            continue;
        }
        acc = acc.add(&part.to_cyclo().reduce());
    }
    acc.into_ratfunc()
}
