//! Multisection `φ_n` and the diagonal extraction `Ψ_{1,n}` on
//! partial-fraction terms.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::ring::{FactorBag, RatFunc, ZPoly};

/// `numer / Π (1 - z^{k_i})`, the input shape multisection works on.
pub type MultisectionInput = FactorBag;

/// Keeps every `n`-th coefficient: `z^i` gets the coefficient of `z^{in}`.
pub fn phi_poly(n: usize, p: &ZPoly) -> ZPoly {
    assert!(n >= 1, "phi_poly needs n ≥ 1");
    if n == 1 {
        return p.clone();
    }
    ZPoly::new(p.coeffs().iter().step_by(n).cloned().collect())
}

/// `φ_n` of a factored rational function, multiplying the numerator by
/// `Q_n(z^{k_i}) = 1 + z^{k_i} + ... + z^{(n-1)k_i}` for every factor and
/// keeping the same denominator.
///
/// `φ_0` keeps only the constant term: `φ_0(R) = R(0) / (1 - z)`.
pub fn phi_rat(n: usize, m: &MultisectionInput) -> RatFunc {
    if n == 0 {
        return phi_zero(m).to_ratfunc();
    }
    let mut numer = m.numer().clone();
    for (&k, &mult) in m.factors() {
        let q = ZPoly::geometric(n, k as usize);
        for _ in 0..mult {
            numer = &numer * &q;
        }
    }
    FactorBag::new(phi_poly(n, &numer), m.factors().clone()).to_ratfunc()
}

fn phi_zero(m: &FactorBag) -> FactorBag {
    FactorBag::new(ZPoly::constant(m.constant_term()), BTreeMap::from([(1, 1)]))
}

/// `φ_n` staying in factored form.
///
/// Each factor `1/(1 - z^k)` is rewritten as `Q_r(z^k)/(1 - z^{kr})` with
/// `r = n / gcd(k, n)`, so `z^{kr}` is a power of `z^n` and the factor
/// passes through the multisection as `1/(1 - z^{k/gcd(k,n)})`. The value
/// equals [`phi_rat`] with a smaller denominator.
pub fn phi_bag(n: usize, m: &MultisectionInput) -> FactorBag {
    match n {
        0 => return phi_zero(m),
        1 => return m.clone(),
        _ => {}
    }
    let mut numer = m.numer().clone();
    let mut factors = BTreeMap::new();
    for (&k, &mult) in m.factors() {
        let k = k as usize;
        let g = k.gcd(&n);
        let r = n / g;
        for _ in 0..mult {
            if r > 1 && !numer.is_zero() {
                numer = numer
                    .mul_one_minus_zk(k * r)
                    .div_one_minus_zk(k)
                    .expect("1 - z^k divides 1 - z^{kr}");
            }
        }
        *factors.entry((k / g) as u32).or_insert(0) += mult;
    }
    FactorBag::new(phi_poly(n, &numer), factors)
}

/// `Ψ_{1,n}(R(z) / (1 - t z^k))`: `φ_{n-k}(R)` for `k ≤ n`, zero otherwise.
///
/// For `k > n` the diagonal still picks up `R(0)` at `z^0`; the cutoff is
/// exact only when `R(0) = 0`, which holds for every residue with `k > 0`.
pub fn psi_simple(n: u32, k: u32, r: &MultisectionInput) -> FactorBag {
    if k > n {
        return FactorBag::zero();
    }
    phi_bag((n - k) as usize, r)
}

/// `Ψ_{1,n}(R(z) / (1 - t z^k)^2)`: `(z φ_{n-k}(R))'` for `k ≤ n`, zero
/// otherwise.
pub fn psi_double(n: u32, k: u32, r: &MultisectionInput) -> FactorBag {
    if k > n || r.is_zero() {
        return FactorBag::zero();
    }
    phi_bag((n - k) as usize, r).shift(1).derivative()
}
