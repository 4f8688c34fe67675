//! Presentation and rendering of results.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::FormPair;
use crate::ring::{FactorBag, RatFunc, ZPoly};
use crate::springer::{Kind, PoincareResult};

/// `numerator / (Π (1 - z^k)^{m_k} · unfactored)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub numerator: ZPoly,
    pub factors: BTreeMap<u32, u32>,
    /// Part of the denominator that is not a product of `(1 - z^k)`.
    pub unfactored: Option<ZPoly>,
}

impl Presentation {
    pub fn is_factored(&self) -> bool {
        self.unfactored.is_none()
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let bag = FactorBag::new(self.numerator.clone(), self.factors.clone());
        match &self.unfactored {
            None => bag.to_ratfunc(),
            Some(d) => RatFunc::new(self.numerator.clone(), &bag.denominator() * d)
                .expect("presentation denominator is nonzero"),
        }
    }
}

/// Writes `r` over `(1 - z^k)` factors, extracting the largest `k` first.
pub fn present(r: &RatFunc) -> Presentation {
    let (bag, rest) = FactorBag::factor_ratfunc(r);
    Presentation {
        numerator: bag.numer().clone(),
        factors: bag.factors().clone(),
        unfactored: rest,
    }
}

/// Value equality by cross multiplication.
pub fn rat_equal(a: &RatFunc, b: &RatFunc) -> bool {
    a.num() * b.den() == b.num() * a.den()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Integer that falls back to a decimal string outside the `i64` range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(x) => JsonInt::Small(x),
            None => JsonInt::Big(v.to_string()),
        }
    }
}

impl JsonInt {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Small(x) => Ok(BigInt::from(*x)),
            JsonInt::Big(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub k: u32,
    pub mult: u32,
}

/// The on-disk and `--format json` document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub d1: u32,
    pub d2: u32,
    pub kind: Kind,
    pub numerator: Vec<JsonInt>,
    pub denominator_factors: Vec<FactorEntry>,
    pub unfactored_denominator: Option<Vec<JsonInt>>,
    pub series: Option<Vec<JsonInt>>,
}

fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().map(JsonInt::from).collect()
}

fn parse_ints(v: &[JsonInt]) -> Result<Vec<BigInt>> {
    v.iter().map(JsonInt::to_bigint).collect()
}

impl ResultDoc {
    pub fn from_result(r: &PoincareResult) -> Self {
        let pres = presentation_of(r);
        Self {
            d1: r.pair.d1(),
            d2: r.pair.d2(),
            kind: r.kind,
            numerator: ints(pres.numerator.coeffs()),
            denominator_factors: pres
                .factors
                .iter()
                .map(|(&k, &mult)| FactorEntry { k, mult })
                .collect(),
            unfactored_denominator: pres.unfactored.as_ref().map(|d| ints(d.coeffs())),
            series: r.series.as_deref().map(ints),
        }
    }

    pub fn into_result(self) -> Result<PoincareResult> {
        let pair = FormPair::new(self.d1, self.d2)?;
        let mut factors = BTreeMap::new();
        for f in &self.denominator_factors {
            if f.k == 0 || f.mult == 0 {
                return Err(Error::Parse(format!(
                    "bad factor k={} mult={}",
                    f.k, f.mult
                )));
            }
            *factors.entry(f.k).or_insert(0) += f.mult;
        }
        let unfactored = match &self.unfactored_denominator {
            Some(d) => {
                let d = ZPoly::new(parse_ints(d)?);
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Some(d)
            }
            None => None,
        };
        let pres = Presentation {
            numerator: ZPoly::new(parse_ints(&self.numerator)?),
            factors,
            unfactored,
        };
        let series = self.series.as_deref().map(parse_ints).transpose()?;
        Ok(PoincareResult {
            pair,
            kind: self.kind,
            value: pres.to_ratfunc(),
            presentation: Some(pres),
            series,
        })
    }
}

pub fn parse_json(s: &str) -> Result<PoincareResult> {
    let doc: ResultDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_result()
}

fn presentation_of(r: &PoincareResult) -> Presentation {
    r.presentation.clone().unwrap_or_else(|| present(&r.value))
}

/// Renders a result. Output is a pure function of the result.
pub fn render(result: &PoincareResult, format: Format) -> String {
    match format {
        Format::Json => {
            serde_json::to_string(&ResultDoc::from_result(result)).expect("document serializes")
        }
        Format::Text => {
            let mut s = render_text(&presentation_of(result));
            if let Some(series) = &result.series {
                let list: Vec<String> = series.iter().map(|c| c.to_string()).collect();
                write!(s, "\nseries: [{}]", list.join(", ")).unwrap();
            }
            s
        }
        Format::Latex => render_latex(&presentation_of(result)),
    }
}

fn term_count(p: &ZPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// ASCII, highest power first, e.g. `z^4 - 2*z^2 + 1`.
fn poly_text(p: &ZPoly) -> String {
    p.display_with("z")
}

fn power_text(k: u32) -> String {
    if k == 1 {
        "z".into()
    } else {
        format!("z^{k}")
    }
}

pub fn render_text(pres: &Presentation) -> String {
    let num = poly_text(&pres.numerator);
    let mut parts: Vec<String> = pres
        .factors
        .iter()
        .map(|(&k, &m)| {
            let f = format!("(1 - {})", power_text(k));
            if m > 1 {
                format!("{f}^{m}")
            } else {
                f
            }
        })
        .collect();
    if let Some(d) = &pres.unfactored {
        parts.push(format!("({})", poly_text(d)));
    }
    if parts.is_empty() {
        return num;
    }
    let num = if term_count(&pres.numerator) > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        format!("({})", parts.join(" "))
    };
    format!("{num}/{den}")
}

fn latex_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "z".into(),
        2..=9 => format!("z^{k}"),
        _ => format!("z^{{{k}}}"),
    }
}

fn poly_latex(p: &ZPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = c.abs();
        let mono = latex_power(i);
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    out
}

pub fn render_latex(pres: &Presentation) -> String {
    let num = poly_latex(&pres.numerator);
    let mut den = String::new();
    for (&k, &m) in &pres.factors {
        write!(den, "(1-{})", latex_power(k as usize)).unwrap();
        if m > 1 {
            if m > 9 {
                write!(den, "^{{{m}}}").unwrap();
            } else {
                write!(den, "^{m}").unwrap();
            }
        }
    }
    if let Some(d) = &pres.unfactored {
        write!(den, "({})", poly_latex(d)).unwrap();
    }
    if den.is_empty() {
        num
    } else {
        format!("\\frac{{{num}}}{{{den}}}")
    }
}
