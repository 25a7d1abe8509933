//! Weil divisors and the numerical K-theory of an orbifold curve.
//!
//! A class is recorded by its rank, its (rational) degree and, at each
//! stacky point `pᵢ` of order `eᵢ`, the multiplicities `m_{i,1}, …, m_{i,eᵢ−1}`
//! of the nontrivial characters of `μ_{eᵢ}` in the fibre. The multiplicity
//! of the trivial character is `rank − Σⱼ m_{i,j}` and is never stored.
//!
//! The Picard factor of `K₀` is only seen through its degree. The degree of
//! the coarse pushforward of a class is
//!
//! ```text
//! deg π_*E = deg E − Σᵢ (1/eᵢ) Σⱼ j·m_{i,j}
//! ```
//!
//! and must be an integer; this is the integrality invariant every
//! [`KClass`] satisfies.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_traits::Zero;

use crate::curve::CurveSignature;
use crate::{floor_div, modulo, Error, Rational, Result};

/// A point of an orbifold curve: a stacky point by its index into the
/// signature's sorted orders, or an ordinary point by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointId {
    Stacky(usize),
    Smooth(String),
}

impl PointId {
    /// Label of the image `π(pᵢ)` of a stacky point in the coarse curve.
    pub fn coarse_image(index: usize) -> Self {
        PointId::Smooth(format!("pi(p{index})"))
    }
}

/// A finite integer combination of points. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeilDivisor {
    coefficients: BTreeMap<PointId, i64>,
}

impl WeilDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (PointId, i64)>>(terms: I) -> Self {
        let mut d = Self::new();
        for (p, n) in terms {
            d.add_term(p, n);
        }
        d
    }

    /// `n·p`.
    pub fn point(p: PointId, n: i64) -> Self {
        Self::from_terms([(p, n)])
    }

    pub fn add_term(&mut self, p: PointId, n: i64) {
        let c = self.coefficients.entry(p).or_insert(0);
        *c += n;
        if *c == 0 {
            self.coefficients.retain(|_, c| *c != 0);
        }
    }

    pub fn coefficient(&self, p: &PointId) -> i64 {
        self.coefficients.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PointId, i64)> {
        self.coefficients.iter().map(|(p, &n)| (p, n))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn validate(&self, sig: &CurveSignature) -> Result<()> {
        for p in self.coefficients.keys() {
            if let PointId::Stacky(index) = *p {
                if index >= sig.stacky_count() {
                    return Err(Error::StackyIndex { index, count: sig.stacky_count() });
                }
            }
        }
        Ok(())
    }

    /// `Σ n_P·deg P` with `deg pᵢ = 1/eᵢ` and `deg q = 1` for ordinary points.
    pub fn degree(&self, sig: &CurveSignature) -> Result<Rational> {
        self.validate(sig)?;
        Ok(self.terms().fold(Rational::zero(), |acc, (p, n)| match *p {
            PointId::Stacky(i) => acc + Rational::new(n, i64::from(sig.orders()[i])),
            PointId::Smooth(_) => acc + Rational::from_integer(n),
        }))
    }

    /// Pushforward to the coarse curve: `n·pᵢ ↦ ⌊n/eᵢ⌋·π(pᵢ)`, ordinary points
    /// unchanged.
    pub fn pushforward_floor(&self, sig: &CurveSignature) -> Result<WeilDivisor> {
        self.validate(sig)?;
        Ok(Self::from_terms(self.terms().map(|(p, n)| match *p {
            PointId::Stacky(i) => (PointId::coarse_image(i), floor_div(n, i64::from(sig.orders()[i]))),
            PointId::Smooth(_) => (p.clone(), n),
        })))
    }

    /// `Σᵢ (nᵢ mod eᵢ)/eᵢ`, the part of the degree lost by [`Self::pushforward_floor`].
    pub fn fractional_degree(&self, sig: &CurveSignature) -> Result<Rational> {
        self.validate(sig)?;
        Ok(self.terms().fold(Rational::zero(), |acc, (p, n)| match *p {
            PointId::Stacky(i) => {
                let e = i64::from(sig.orders()[i]);
                acc + Rational::new(modulo(n, e), e)
            }
            PointId::Smooth(_) => acc,
        }))
    }
}

impl Add for &WeilDivisor {
    type Output = WeilDivisor;

    fn add(self, rhs: &WeilDivisor) -> WeilDivisor {
        let mut out = self.clone();
        for (p, n) in rhs.terms() {
            out.add_term(p.clone(), n);
        }
        out
    }
}

/// Slope `deg/rank`, infinite on torsion classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

impl Slope {
    pub fn finite(&self) -> Option<Rational> {
        match *self {
            Slope::Finite(mu) => Some(mu),
            Slope::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinite)
    }

    /// Inclusive comparison against a finite threshold; `∞` clears every threshold.
    pub fn at_least(&self, threshold: Rational) -> bool {
        match *self {
            Slope::Finite(mu) => mu >= threshold,
            Slope::Infinite => true,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(mu) => write!(f, "{mu}"),
            Slope::Infinite => f.write_str("∞"),
        }
    }
}

/// A numerical K-theory class. See the module docs for the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KClass {
    rank: i64,
    degree: Rational,
    locals: Vec<Vec<i64>>,
}

impl KClass {
    /// Checks the local shapes and the integrality invariant.
    pub fn new(rank: i64, degree: Rational, locals: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(index) = locals.iter().position(|v| v.is_empty()) {
            return Err(Error::EmptyLocal { index });
        }
        let class = KClass { rank, degree, locals };
        let correction = class.local_correction();
        if !(degree - correction).is_integer() {
            return Err(Error::Integrality { degree, correction });
        }
        Ok(class)
    }

    fn from_parts(rank: i64, degree: Rational, locals: Vec<Vec<i64>>) -> Self {
        let class = KClass { rank, degree, locals };
        debug_assert!((class.degree - class.local_correction()).is_integer());
        class
    }

    pub fn zero(orders: &[u32]) -> Self {
        KClass {
            rank: 0,
            degree: Rational::zero(),
            locals: orders.iter().map(|&e| vec![0; e as usize - 1]).collect(),
        }
    }

    /// The class of the structure sheaf, the unit of [`Self::tensor`].
    pub fn trivial(orders: &[u32]) -> Self {
        KClass { rank: 1, ..Self::zero(orders) }
    }

    /// Class of a line bundle pulled back from the coarse curve.
    pub fn pullback_line_bundle(orders: &[u32], degree: i64) -> Self {
        KClass { degree: Rational::from_integer(degree), ..Self::trivial(orders) }
    }

    /// Class of `O(D)`: rank 1, degree `deg D`, and at each stacky point the
    /// character `z ↦ z^{nᵢ}`, i.e. the indicator of `nᵢ mod eᵢ`.
    pub fn line_bundle(divisor: &WeilDivisor, sig: &CurveSignature) -> Result<Self> {
        let degree = divisor.degree(sig)?;
        let mut class = Self::trivial(sig.orders());
        class.degree = degree;
        for (p, n) in divisor.terms() {
            if let PointId::Stacky(i) = *p {
                let r = modulo(n, i64::from(sig.orders()[i])) as usize;
                if r != 0 {
                    class.locals[i][r - 1] = 1;
                }
            }
        }
        debug_assert!((class.degree - class.local_correction()).is_integer());
        Ok(class)
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> Rational {
        self.degree
    }

    pub fn locals(&self) -> &[Vec<i64>] {
        &self.locals
    }

    /// Stacky orders of the signature this class lives on.
    pub fn orders(&self) -> Vec<u32> {
        self.locals.iter().map(|v| v.len() as u32 + 1).collect()
    }

    /// `Σᵢ (1/eᵢ) Σⱼ j·m_{i,j}`.
    pub fn local_correction(&self) -> Rational {
        self.locals.iter().fold(Rational::zero(), |acc, m| {
            let e = m.len() as i64 + 1;
            let weighted: i64 = m.iter().zip(1..).map(|(&mj, j)| j * mj).sum();
            acc + Rational::new(weighted, e)
        })
    }

    /// Degree of the coarse pushforward; an integer by the class invariant.
    pub fn coarse_degree(&self) -> i64 {
        (self.degree - self.local_correction()).to_integer()
    }

    /// All `eᵢ` character multiplicities at stacky point `i`, index 0 included.
    pub fn full_character(&self, i: usize) -> Vec<i64> {
        let m = &self.locals[i];
        let mut full = Vec::with_capacity(m.len() + 1);
        full.push(self.rank - m.iter().sum::<i64>());
        full.extend_from_slice(m);
        full
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.degree.is_zero() && self.locals.iter().flatten().all(|&m| m == 0)
    }

    /// In the effective cone of the heart `Coh`: positive rank, or torsion of
    /// positive degree.
    pub fn is_heart_effective(&self) -> bool {
        self.rank > 0 || (self.rank == 0 && self.degree > Rational::zero())
    }

    /// Every character multiplicity, the trivial one included, is non-negative.
    pub fn has_effective_fibres(&self) -> bool {
        (0..self.locals.len()).all(|i| self.full_character(i).iter().all(|&m| m >= 0))
    }

    fn check_same_signature(&self, other: &KClass) -> Result<()> {
        let same = self.locals.len() == other.locals.len()
            && self.locals.iter().zip(&other.locals).all(|(a, b)| a.len() == b.len());
        if same {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.orders(), right: other.orders() })
        }
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        self.check_same_signature(other)?;
        let locals = self
            .locals
            .iter()
            .zip(&other.locals)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(KClass::from_parts(self.rank + other.rank, self.degree + other.degree, locals))
    }

    pub fn neg(&self) -> KClass {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> KClass {
        KClass::from_parts(
            k * self.rank,
            self.degree * k,
            self.locals.iter().map(|m| m.iter().map(|x| k * x).collect()).collect(),
        )
    }

    /// Product in `K₀`: ranks multiply, `deg = rk a·deg b + rk b·deg a`, and at
    /// each stacky point the full character vectors convolve cyclically.
    pub fn tensor(&self, other: &KClass) -> Result<KClass> {
        self.check_same_signature(other)?;
        let locals = (0..self.locals.len())
            .map(|i| {
                let a = self.full_character(i);
                let b = other.full_character(i);
                let e = a.len();
                let mut c = vec![0i64; e];
                for (j, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (k, &y) in b.iter().enumerate() {
                        c[(j + k) % e] += x * y;
                    }
                }
                c.remove(0);
                c
            })
            .collect();
        let degree = self.degree * other.rank + other.degree * self.rank;
        Ok(KClass::from_parts(self.rank * other.rank, degree, locals))
    }

    /// Dual class: degree negated, characters inverted (`j ↦ eᵢ − j`).
    pub fn dual(&self) -> KClass {
        let locals = self
            .locals
            .iter()
            .map(|m| m.iter().rev().copied().collect())
            .collect();
        KClass::from_parts(self.rank, -self.degree, locals)
    }

    pub fn slope(&self) -> Result<Slope> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        match self.rank {
            r if r < 0 => Err(Error::NegativeRank(r)),
            0 => Ok(Slope::Infinite),
            r => Ok(Slope::Finite(self.degree / r)),
        }
    }

    /// Orbifold Chern character into the algebraic Chen–Ruan lattice.
    pub fn ch_orb(&self) -> CrVector {
        CrVector {
            rank: self.rank,
            coarse_degree: self.coarse_degree(),
            locals: self.locals.clone(),
        }
    }

    pub fn from_ch_orb(v: &CrVector) -> Result<KClass> {
        if let Some(index) = v.locals.iter().position(|m| m.is_empty()) {
            return Err(Error::EmptyLocal { index });
        }
        let mut class = KClass { rank: v.rank, degree: Rational::zero(), locals: v.locals.clone() };
        class.degree = Rational::from_integer(v.coarse_degree) + class.local_correction();
        Ok(class)
    }
}

/// A vector of `H*_{CR,alg} = H⁰ ⊕ H² ⊕ ⨁ᵢ Z^{eᵢ−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrVector {
    pub rank: i64,
    pub coarse_degree: i64,
    pub locals: Vec<Vec<i64>>,
}

impl CrVector {
    /// `(rank, coarse_degree, y₁…, y₂…, …)`; length is the Chen–Ruan rank.
    pub fn flatten(&self) -> Vec<i64> {
        let mut out = vec![self.rank, self.coarse_degree];
        out.extend(self.locals.iter().flatten());
        out
    }

    /// Inverse of [`Self::flatten`]. Returns `None` on a length mismatch.
    pub fn from_flat(orders: &[u32], flat: &[i64]) -> Option<CrVector> {
        let expected = 2 + orders.iter().map(|&e| e as usize - 1).sum::<usize>();
        if flat.len() != expected {
            return None;
        }
        let mut rest = &flat[2..];
        let locals = orders
            .iter()
            .map(|&e| {
                let (head, tail) = rest.split_at(e as usize - 1);
                rest = tail;
                head.to_vec()
            })
            .collect();
        Some(CrVector { rank: flat[0], coarse_degree: flat[1], locals })
    }

    /// Squared Euclidean norm in the canonical basis.
    pub fn norm_squared(&self) -> i64 {
        self.flatten().iter().map(|x| x * x).sum()
    }
}

/// Class of `E_std = ⊗ᵢ ⊕ⱼ O(j·pᵢ) ⊕ ⊗ᵢ ⊕ⱼ O(−j·pᵢ)`, `0 ≤ j < eᵢ`.
pub fn std_generating_class(sig: &CurveSignature) -> KClass {
    let half = |sign: i64| -> KClass {
        let mut acc = KClass::trivial(sig.orders());
        for (i, &e) in sig.orders().iter().enumerate() {
            let mut sum = KClass::zero(sig.orders());
            for j in 0..i64::from(e) {
                let d = WeilDivisor::point(PointId::Stacky(i), sign * j);
                let l = KClass::line_bundle(&d, sig).expect("stacky index in range");
                sum = sum.add(&l).expect("same signature");
            }
            acc = acc.tensor(&sum).expect("same signature");
        }
        acc
    };
    half(1).add(&half(-1)).expect("same signature")
}

/// The four summands of the one-step generator
/// `H = (π*L⁻¹⊗E) ⊕ E ⊕ (π*L⊗E^∨) ⊕ (π*L²⊗E^∨)`,
/// with `E = ⊕ᵢ ⊕ⱼ O(−j·pᵢ)` (and `E = O` when there are no stacky points).
pub fn orlov_generator_classes(sig: &CurveSignature, l_degree: i64) -> Result<[KClass; 4]> {
    let bound = sig.generator_degree_bound();
    if l_degree < bound {
        return Err(Error::GeneratorDegree { degree: l_degree, bound });
    }
    let orders = sig.orders();
    let e = if orders.is_empty() {
        KClass::trivial(orders)
    } else {
        let mut sum = KClass::zero(orders);
        for (i, &order) in orders.iter().enumerate() {
            for j in 0..i64::from(order) {
                let d = WeilDivisor::point(PointId::Stacky(i), -j);
                sum = sum.add(&KClass::line_bundle(&d, sig)?)?;
            }
        }
        sum
    };
    let e_dual = e.dual();
    let pull = |k: i64| KClass::pullback_line_bundle(orders, k * l_degree);
    Ok([
        pull(-1).tensor(&e)?,
        e.clone(),
        pull(1).tensor(&e_dual)?,
        pull(2).tensor(&e_dual)?,
    ])
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank {}, degree {}, locals {:?})", self.rank, self.degree, self.locals)
    }
}
