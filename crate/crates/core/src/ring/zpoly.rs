//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `z` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `z^i`. Trailing zeros are always
/// trimmed, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let len = terms.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); len];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// `1 - z^k`; for `k = 0` this is the zero polynomial.
    pub fn one_minus_zk(k: usize) -> Self {
        Self::from_terms(&[(0, 1), (k, -1)])
    }

    /// `1 + z^k + z^{2k} + ... + z^{(n-1)k}`.
    pub fn geometric(n: usize, k: usize) -> Self {
        let terms: Vec<(usize, i64)> = (0..n).map(|i| (i * k, 1)).collect();
        Self::from_terms(&terms)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lowest(&self) -> Option<&BigInt> {
        self.valuation().map(|v| &self.coeffs[v])
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `z^k`, discarding coefficients below `z^k`.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Keeps the coefficients of `z^0 .. z^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Multiplies by `1 - z^k` in linear time.
    pub fn mul_one_minus_zk(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
            coeffs[i + k] -= c;
        }
        Self::new(coeffs)
    }

    /// Exact division by `1 - z^k`; `None` when it does not divide.
    pub fn div_one_minus_zk(&self, k: usize) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let deg = self.coeffs.len() - 1;
        if deg < k {
            return None;
        }
        // q_i = p_i + q_{i-k}
        let qlen = deg - k + 1;
        let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut c = self.coeffs[i].clone();
            if i >= k {
                c += &q[i - k];
            }
            q.push(c);
        }
        // above the quotient's degree, p_i = -q_{i-k}
        for i in qlen..=deg {
            let ok = if i >= k {
                self.coeffs[i] == -&q[i - k]
            } else {
                self.coeffs[i].is_zero()
            };
            if !ok {
                return None;
            }
        }
        Some(Self::new(q))
    }

    /// Multiplies by a sparse polynomial given as `(exponent, coefficient)`.
    pub fn mul_sparse(&self, terms: &[(usize, i64)]) -> Self {
        if self.is_zero() || terms.is_empty() {
            return Self::zero();
        }
        let top = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + top];
        for &(e, c) in terms {
            if c == 0 {
                continue;
            }
            for (i, x) in self.coeffs.iter().enumerate() {
                if c == 1 {
                    coeffs[i + e] += x;
                } else if c == -1 {
                    coeffs[i + e] -= x;
                } else {
                    coeffs[i + e] += x * c;
                }
            }
        }
        Self::new(coeffs)
    }

    /// GCD of the coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        self.div_scalar(&g)
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let mut r = self.coeffs.clone();
        let lc = d.coeffs[dd].clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            for x in r.iter_mut() {
                *x *= &lc;
            }
            let off = top - dd;
            for (j, c) in d.coeffs.iter().enumerate() {
                r[off + j] -= &t * c;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Primitive GCD over `Z[z]` via the primitive remainder sequence.
    /// The result has positive leading coefficient and content one.
    pub fn gcd_primitive(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// Exact quotient `self / d`, `None` if `d` does not divide over `Z`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let (quo, rem) = r[i + dd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            if !quo.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &quo * c;
                }
            }
            q[i] = quo;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Exact division by a divisor whose constant term is `±1`, given as
    /// small coefficients. Works from the low end.
    pub(crate) fn div_exact_small(&self, d: &[i64]) -> Option<Self> {
        debug_assert!(d[0] == 1 || d[0] == -1);
        let dd = d.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len() - 1;
        if n < dd {
            return None;
        }
        let nz: Vec<(usize, i64)> = d
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let qlen = n - dd + 1;
        let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
        let residual = |i: usize, q: &[BigInt]| {
            let mut acc = self.coeffs[i].clone();
            for &(l, c) in &nz {
                if l <= i && i - l < q.len() {
                    let t = &q[i - l];
                    match c {
                        1 => acc -= t,
                        -1 => acc += t,
                        _ => acc -= t * c,
                    }
                }
            }
            acc
        };
        for i in 0..qlen {
            let acc = residual(i, &q);
            q.push(if d[0] == 1 { acc } else { -acc });
        }
        for i in qlen..=n {
            if !residual(i, &q).is_zero() {
                return None;
            }
        }
        Some(Self::new(q))
    }

    /// Coefficients reduced modulo a prime `p < 2^63`.
    pub(crate) fn residues_mod(&self, p: u64) -> Vec<u64> {
        let bp = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&bp);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect()
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let bx = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &bx + c)
    }

    /// Formats with a caller-chosen variable name, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (x, y) in coeffs.iter_mut().zip(&short.coeffs) {
            *x += y;
        }
        ZPoly::new(coeffs)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (x, y) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
        ZPoly::new(coeffs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        poly_mul(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

/// Schoolbook product.
pub fn poly_mul(p: &ZPoly, q: &ZPoly) -> ZPoly {
    if p.is_zero() || q.is_zero() {
        return ZPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            if !b.is_zero() {
                coeffs[i + j] += a * b;
            }
        }
    }
    ZPoly::new(coeffs)
}

pub fn poly_derivative(p: &ZPoly) -> ZPoly {
    p.derivative()
}
