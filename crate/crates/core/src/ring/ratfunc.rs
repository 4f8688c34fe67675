//! Reduced rational functions over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ZPoly;
use crate::error::{Error, Result};

/// `num / den` in a unique normal form: no common factor of positive degree,
/// joint integer content one, and the lowest nonzero coefficient of `den`
/// positive. Equality of values is therefore structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFunc {
    /// Normalizes `num / den`.
    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self> {
        rat_normalize(num, den)
    }

    pub fn zero() -> Self {
        Self {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(ZPoly::one())
    }

    pub fn from_poly(p: ZPoly) -> Self {
        Self::from_reduced(p, ZPoly::one())
    }

    /// Builds from a pair already known to share no factor of positive
    /// degree; only fixes content and sign.
    pub(crate) fn from_reduced(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut g = num.content().gcd(&den.content());
        if den.lowest().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Self {
            num: num.div_scalar(&g),
            den: den.div_scalar(&g),
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        rat_normalize(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        rat_normalize(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        rat_normalize(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn mul_poly(&self, p: &ZPoly) -> Self {
        rat_normalize(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    /// `d/dz` by the quotient rule.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        rat_normalize(num, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Taylor coefficients `z^0 .. z^n` at the origin.
    pub fn series_prefix(&self, n: usize) -> Result<Vec<BigInt>> {
        series_prefix(self, n)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

pub fn rat_normalize(num: ZPoly, den: ZPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    let g = num.gcd_primitive(&den);
    let (num, den) = if g.degree() == Some(0) {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    Ok(RatFunc::from_reduced(num, den))
}

pub fn rat_arith(a: &RatFunc, b: &RatFunc, op: RatOp) -> Result<RatFunc> {
    Ok(match op {
        RatOp::Add => a.add(b),
        RatOp::Sub => a.sub(b),
        RatOp::Mul => a.mul(b),
        RatOp::Div => a.div(b)?,
    })
}

/// Exact long division of the power series `num / den` up to `z^n`.
pub fn series_prefix(r: &RatFunc, n: usize) -> Result<Vec<BigInt>> {
    let c0 = r.den.coeff(0);
    if c0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let den = r.den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = r.num.coeff(i);
        for (j, d) in den.iter().enumerate().skip(1).take(i) {
            if !d.is_zero() {
                acc -= d * &out[i - j];
            }
        }
        let (q, rem) = acc.div_rem(&c0);
        if !rem.is_zero() {
            return Err(Error::NonIntegralSeries(i));
        }
        out.push(q);
    }
    Ok(out)
}
