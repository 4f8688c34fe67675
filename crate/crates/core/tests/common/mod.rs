//! Shared fixtures and checks for the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;

use joint_poincare::oracle::{truncated_omega, FormPair, OmegaTable};
use joint_poincare::ring::{FactorBag, RatFunc, ZPoly};
use joint_poincare::springer::{partial_fractions, shifted_genfun, Kind};
use num_bigint::BigInt;

/// Parses `3z^{10} - z^2 + 2z + 1` style polynomials; spaces and braces
/// are ignored.
pub fn parse_poly(s: &str) -> ZPoly {
    let s: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
        .collect();
    let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        let end = rest[1..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
        let term = &rest[..end];
        rest = &rest[end..];
        let (c, e) = match term.split_once('z') {
            None => (term.parse::<i64>().expect("constant term"), 0),
            Some((c, pow)) => {
                let c = if c.is_empty() {
                    1
                } else {
                    c.parse().expect("coefficient")
                };
                let e = match pow.strip_prefix('^') {
                    Some(e) => e.parse().expect("exponent"),
                    None if pow.is_empty() => 1,
                    None => panic!("bad term {term:?}"),
                };
                (c, e)
            }
        };
        *coeffs.entry(e).or_default() += BigInt::from(sign * c);
    }
    let top = coeffs.keys().max().copied().unwrap_or(0);
    ZPoly::new(
        (0..=top)
            .map(|i| coeffs.get(&i).cloned().unwrap_or_default())
            .collect(),
    )
}

/// Parses a product of parenthesised factors with optional powers, such
/// as `(1-z)^2(-z^3+1)(1 - z^{12})`, or a single bare factor.
pub fn parse_product(s: &str) -> ZPoly {
    let s = s.trim();
    if !s.starts_with('(') {
        return parse_poly(s);
    }
    let mut out = ZPoly::one();
    let mut rest = s;
    while let Some(open) = rest.find('(') {
        let close = open + rest[open..].find(')').expect("closing paren");
        let factor = parse_poly(&rest[open + 1..close]);
        rest = &rest[close + 1..];
        let mut power = 1;
        if let Some(r) = rest.trim_start().strip_prefix('^') {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            power = digits.parse().expect("power");
            rest = &r[digits.len()..];
        }
        for _ in 0..power {
            out = &out * &factor;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct TableFixture {
    pub kind: Kind,
    pub pair: FormPair,
    /// Numerator as printed, before any reduction.
    pub numerator: ZPoly,
    pub value: RatFunc,
}

pub fn table_fixtures() -> Vec<TableFixture> {
    include_str!("../fixtures/tables.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut parts = line.split('|');
            let head: Vec<&str> = parts.next().unwrap().split_whitespace().collect();
            let kind = match head[0] {
                "PI" => Kind::Invariants,
                "PC" => Kind::Covariants,
                other => panic!("unknown kind {other}"),
            };
            let pair = FormPair::new(head[1].parse().unwrap(), head[2].parse().unwrap()).unwrap();
            let num = parse_poly(parts.next().unwrap());
            let den = parse_product(parts.next().unwrap());
            TableFixture {
                kind,
                pair,
                numerator: num.clone(),
                value: RatFunc::new(num, den).unwrap(),
            }
        })
        .collect()
}

pub fn oracle_dims(pair: FormPair, kind: Kind, max_n: u32) -> Vec<BigInt> {
    let t = OmegaTable::build(pair, max_n);
    let dims = match kind {
        Kind::Invariants => t.invariant_dims(),
        Kind::Covariants => t.covariant_dims(),
    };
    dims.into_iter().map(BigInt::from).collect()
}

pub fn bag(numer: &[i64], factors: &[(u32, u32)]) -> FactorBag {
    FactorBag::new(ZPoly::from_i64s(numer), factors.iter().copied().collect())
}

/// Checks `Σ coeff / (1 - t z^e)^order` against `Π 1/(1 - t z^e)^m`
/// coefficientwise in `t` up to one past the total pole order, which
/// determines both rational functions in `t`. Returns the first `t`-degree
/// that disagrees.
pub fn partial_fraction_mismatch(pair: FormPair) -> Option<u32> {
    let f = shifted_genfun(pair);
    let terms = partial_fractions(&f).expect("isolated poles");
    let top = f.total_multiplicity() + 1;
    let expansion = truncated_omega(pair, top);
    for n in 0..=top {
        let mut sum = FactorBag::zero();
        for t in &terms {
            let scale = if t.order == 1 { 1 } else { n as i64 + 1 };
            let part = t
                .coeff
                .shift((t.e * n) as usize)
                .mul_poly(&ZPoly::from_i64s(&[scale]));
            sum = sum.add(&part);
        }
        let want = f.prefactor.mul_poly(expansion.row(n));
        if sum.to_ratfunc() != want.to_ratfunc() {
            return Some(n);
        }
    }
    None
}
