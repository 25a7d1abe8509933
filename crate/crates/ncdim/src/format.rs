//! JSON wire formats and their conversions to core types.
//!
//! Rationals travel as `"p/q"` strings (integers as `"p"`), reals as decimal
//! strings with exactly twelve fractional digits.

use std::collections::BTreeMap;

use ncdim_core::{
    CrVector, CurveSignature, DimensionReport, FilteredObject, KClass, PointId, Quiver, Rational, Slope,
    SupportReport, WeilDivisor,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn rational_string(q: Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Malformed(format!("not a rational \"p/q\": {s:?}")))
}

/// Twelve fractional digits, with `-0` folded into `0`.
pub fn real_string(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Markdown rendering: integers plainly, other rationals as unicode fractions.
pub fn rational_unicode(q: Rational) -> String {
    if q.is_integer() {
        return q.to_string().replace('-', "−");
    }
    let sign = if *q.numer() < 0 { "−" } else { "" };
    let (n, d) = (q.numer().unsigned_abs(), q.denom().unsigned_abs());
    let vulgar = match (n, d) {
        (1, 2) => Some("½"),
        (1, 3) => Some("⅓"),
        (2, 3) => Some("⅔"),
        (1, 4) => Some("¼"),
        (3, 4) => Some("¾"),
        (1, 5) => Some("⅕"),
        (2, 5) => Some("⅖"),
        (3, 5) => Some("⅗"),
        (4, 5) => Some("⅘"),
        (1, 6) => Some("⅙"),
        (5, 6) => Some("⅚"),
        (1, 7) => Some("⅐"),
        (1, 8) => Some("⅛"),
        (3, 8) => Some("⅜"),
        (5, 8) => Some("⅝"),
        (7, 8) => Some("⅞"),
        (1, 9) => Some("⅑"),
        (1, 10) => Some("⅒"),
        _ => None,
    };
    if let Some(v) = vulgar {
        return format!("{sign}{v}");
    }
    let map = |s: String, digits: &[char; 10]| -> String {
        s.chars().map(|c| digits[c.to_digit(10).expect("decimal digit") as usize]).collect()
    };
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    format!("{sign}{}⁄{}", map(n.to_string(), &SUP), map(d.to_string(), &SUB))
}

/// A rational given either as a JSON integer or a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Text(String),
}

impl RationalJson {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalJson::Int(n) => Ok(Rational::from_integer(*n)),
            RationalJson::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureJson {
    pub genus: u32,
    #[serde(default)]
    pub orders: Vec<u32>,
}

impl SignatureJson {
    /// Order-1 points are ordinary points; they are dropped with a warning.
    pub fn to_core(&self, warnings: &mut Vec<String>) -> Result<CurveSignature, CliError> {
        let trivial = self.orders.iter().filter(|&&e| e == 1).count();
        if trivial > 0 {
            warnings.push(format!("dropped {trivial} stacky point(s) of order 1: they are ordinary points"));
        }
        let orders = self.orders.iter().copied().filter(|&e| e != 1).collect();
        Ok(CurveSignature::new(self.genus, orders)?)
    }

    pub fn from_core(sig: &CurveSignature) -> Self {
        SignatureJson { genus: sig.genus(), orders: sig.orders().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KClassOut {
    pub rank: i64,
    pub degree: String,
    pub locals: Vec<Vec<i64>>,
}

impl From<&KClass> for KClassOut {
    fn from(a: &KClass) -> Self {
        KClassOut { rank: a.rank(), degree: rational_string(a.degree()), locals: a.locals().to_vec() }
    }
}

/// A class, given by coordinates or as the line bundle of a divisor.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum KClassJson {
    Coordinates {
        rank: i64,
        degree: RationalJson,
        #[serde(default)]
        locals: Vec<Vec<i64>>,
    },
    LineBundle {
        signature: SignatureJson,
        divisor: DivisorJson,
    },
}

impl KClassJson {
    pub fn to_core(&self, warnings: &mut Vec<String>) -> Result<KClass, CliError> {
        match self {
            KClassJson::Coordinates { rank, degree, locals } => {
                Ok(KClass::new(*rank, degree.value()?, locals.clone())?)
            }
            KClassJson::LineBundle { signature, divisor } => {
                let sig = signature.to_core(warnings)?;
                Ok(KClass::line_bundle(&divisor.to_core()?, &sig)?)
            }
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    #[serde(default)]
    pub stacky: BTreeMap<String, i64>,
    #[serde(default)]
    pub smooth: BTreeMap<String, i64>,
}

impl DivisorJson {
    pub fn to_core(&self) -> Result<WeilDivisor, CliError> {
        let mut d = WeilDivisor::new();
        for (index, &m) in &self.stacky {
            let i = index
                .parse::<usize>()
                .map_err(|_| CliError::Malformed(format!("stacky point index {index:?} is not an integer")))?;
            d.add_term(PointId::Stacky(i), m);
        }
        for (name, &m) in &self.smooth {
            d.add_term(PointId::Smooth(name.clone()), m);
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CrVectorOut {
    pub rank: i64,
    pub coarse_degree: i64,
    pub locals: Vec<Vec<i64>>,
    pub flat: Vec<i64>,
}

impl From<&CrVector> for CrVectorOut {
    fn from(v: &CrVector) -> Self {
        CrVectorOut { rank: v.rank, coarse_degree: v.coarse_degree, locals: v.locals.clone(), flat: v.flatten() }
    }
}

pub fn slope_string(s: Slope) -> String {
    match s {
        Slope::Finite(q) => rational_string(q),
        Slope::Infinite => "inf".to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: usize,
    #[serde(default)]
    pub arrows: Vec<[usize; 2]>,
}

impl QuiverJson {
    pub fn to_core(&self) -> Result<Quiver, CliError> {
        Ok(Quiver::new(self.vertices, self.arrows.iter().map(|&[s, t]| (s, t)).collect())?)
    }

    pub fn from_core(q: &Quiver) -> Self {
        QuiverJson { vertices: q.vertex_count(), arrows: q.arrows().iter().map(|&(s, t)| [s, t]).collect() }
    }
}

/// A quiver given explicitly, or as the star quiver of a triple `(a₁, a₂, a₃)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum QuiverInput {
    Explicit(QuiverJson),
    Star { star: [u32; 3] },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilteredJson {
    pub pieces: Vec<KClassJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FilteredOut {
    pub pieces: Vec<KClassOut>,
    pub slopes: Vec<String>,
}

impl From<&FilteredObject> for FilteredOut {
    fn from(f: &FilteredObject) -> Self {
        FilteredOut {
            pieces: f.pieces().iter().map(KClassOut::from).collect(),
            slopes: f.slopes().into_iter().map(slope_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub hdim: u32,
    pub rdim: u32,
    pub ddim: u32,
    pub sdim: String,
    pub gldim: String,
}

impl From<&DimensionReport> for ReportJson {
    fn from(r: &DimensionReport) -> Self {
        ReportJson {
            hdim: r.hdim,
            rdim: r.rdim,
            ddim: r.ddim,
            sdim: rational_string(r.sdim),
            gldim: rational_string(r.gldim),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportJson {
    pub checked: u64,
    pub min_ratio: String,
    pub lower_bound: String,
    pub minimizer: Vec<i64>,
    pub ok: bool,
}

impl SupportJson {
    pub fn new(r: &SupportReport, lower_bound: Rational) -> Self {
        SupportJson {
            checked: r.checked,
            min_ratio: rational_string(r.min_ratio),
            lower_bound: rational_string(lower_bound),
            minimizer: r.minimizer.clone(),
            ok: r.ok,
        }
    }
}
