//! The stability conditions `σ_{β,H} = (Coh, Z_{β,H})` with
//! `Z_{β,H}(E) = −deg E + (β + iH)·rk E`.
//!
//! Charges, the support constant and the support inequality are exact.
//! Phases are real numbers in `(0, 1]` computed in `f64`; torsion classes
//! sit at phase exactly 1. Phase comparisons should allow
//! [`PHASE_TOLERANCE`].

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::classes::{CrVector, KClass, Slope};
use crate::curve::CurveSignature;
use crate::{Error, Rational, Result};

/// Absolute tolerance for comparing phases.
pub const PHASE_TOLERANCE: f64 = 1e-12;

/// Half-width of the `x`-window sampled when estimating the Serre phase gap.
pub const SAMPLE_RADIUS: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabParams {
    beta: Rational,
    h: Rational,
}

impl StabParams {
    pub fn new(beta: Rational, h: Rational) -> Result<Self> {
        if h <= Rational::zero() {
            return Err(Error::NonPositiveH(h));
        }
        Ok(StabParams { beta, h })
    }

    /// `β = 0, H = 1`.
    pub fn standard() -> Self {
        StabParams { beta: Rational::zero(), h: Rational::one() }
    }

    pub fn beta(&self) -> Rational {
        self.beta
    }

    pub fn h(&self) -> Rational {
        self.h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeValue {
    pub re: Rational,
    pub im: Rational,
}

impl ChargeValue {
    pub fn norm_squared(&self) -> Rational {
        self.re * self.re + self.im * self.im
    }
}

impl core::ops::Add for ChargeValue {
    type Output = ChargeValue;

    fn add(self, rhs: ChargeValue) -> ChargeValue {
        ChargeValue { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

pub fn central_charge(params: &StabParams, a: &KClass) -> ChargeValue {
    ChargeValue {
        re: -a.degree() + params.beta * a.rank(),
        im: params.h * a.rank(),
    }
}

pub fn arccot(x: f64) -> f64 {
    PI / 2.0 - libm::atan(x)
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn require_heart_effective(a: &KClass) -> Result<()> {
    if a.is_heart_effective() {
        Ok(())
    } else {
        Err(Error::NotHeartEffective { rank: a.rank(), degree: a.degree() })
    }
}

/// `(1/π)·arg Z_{β,H}(a)` with `arg ∈ (0, π]`.
pub fn phase(params: &StabParams, a: &KClass) -> Result<f64> {
    require_heart_effective(a)?;
    match a.slope()? {
        Slope::Infinite => Ok(1.0),
        Slope::Finite(mu) => Ok(arccot(to_f64((params.beta - mu) / params.h)) / PI),
    }
}

/// `min {1/eᵢ²}`, or 1 without stacky points.
pub fn support_lower_bound(sig: &CurveSignature) -> Rational {
    sig.orders()
        .iter()
        .map(|&e| Rational::new(1, i64::from(e) * i64::from(e)))
        .min()
        .unwrap_or_else(Rational::one)
}

/// Result of an exhaustive support-property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportReport {
    /// Number of nonzero vectors examined.
    pub checked: u64,
    /// `min |Z_{0,1}|² / ‖ch‖²` over the examined vectors.
    pub min_ratio: Rational,
    /// Lexicographically first flattened vector attaining `min_ratio`.
    pub minimizer: Vec<i64>,
    /// `min_ratio ≥ support_lower_bound`.
    pub ok: bool,
}

/// Checks `|Z_{0,1}(v)|² ≥ min{1/eᵢ²}·‖v‖²` on every nonzero Chen–Ruan
/// vector with all coordinates in `[0, bound]`.
///
/// Everything is scaled by `L = lcm(eᵢ)` so the comparison runs in integers:
/// `L²·|Z|² = (L·deg)² + L²·rk²`.
pub fn check_support(sig: &CurveSignature, bound: u32) -> Result<SupportReport> {
    if bound < 1 {
        return Err(Error::BoundTooSmall { bound, min: 1 });
    }
    let orders = sig.orders();
    let lcm = orders.iter().fold(1i128, |acc, &e| acc.lcm(&i128::from(e)));
    // Weight of coordinate k in L·deg: L for the coarse degree, (L/eᵢ)·j for y_{i,j}.
    let mut weights: Vec<i128> = vec![0, lcm];
    for &e in orders {
        let e = i128::from(e);
        weights.extend((1..e).map(|j| lcm / e * j));
    }
    let len = weights.len();
    debug_assert_eq!(len, sig.cr_rank());

    let bound = i128::from(bound);
    let mut v = vec![0i128; len];
    let mut checked = 0u64;
    // Current minimum as an unreduced fraction num/den.
    let mut best: Option<(i128, i128, Vec<i128>)> = None;
    loop {
        // Odometer increment, last coordinate fastest.
        let mut k = len;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if v[k] < bound {
                v[k] += 1;
                break;
            }
            v[k] = 0;
        }
        if v.iter().all(|&x| x == 0) {
            break;
        }
        checked += 1;
        let scaled_degree: i128 = v.iter().zip(&weights).map(|(x, w)| x * w).sum();
        let num = scaled_degree * scaled_degree + v[0] * v[0] * lcm * lcm;
        let den = lcm * lcm * v.iter().map(|x| x * x).sum::<i128>();
        let better = match &best {
            None => true,
            Some((bn, bd, _)) => num * bd < bn * den,
        };
        if better {
            best = Some((num, den, v.clone()));
        }
    }
    let (num, den, minimizer) = best.ok_or_else(|| Error::Internal("empty enumeration box".into()))?;
    let g = num.gcd(&den);
    let narrow = |x: i128| {
        i64::try_from(x / g).map_err(|_| Error::Internal("support ratio overflows i64".into()))
    };
    let min_ratio = Rational::new(narrow(num)?, narrow(den)?);
    Ok(SupportReport {
        checked,
        min_ratio,
        minimizer: minimizer.into_iter().map(|x| x as i64).collect(),
        ok: min_ratio >= support_lower_bound(sig),
    })
}

/// `|Z_{0,1}(v)|² / ‖v‖²` for one Chen–Ruan vector.
pub fn support_ratio(v: &CrVector) -> Result<Rational> {
    let norm = v.norm_squared();
    if norm == 0 {
        return Err(Error::ZeroClass);
    }
    let class = KClass::from_ch_orb(v)?;
    Ok(central_charge(&StabParams::standard(), &class).norm_squared() / norm)
}

/// `(1/π)·|arccot(x − shift) − arccot(x)|`.
pub fn phase_gap_at(x: f64, shift: f64) -> f64 {
    libm::fabs(arccot(x - shift) - arccot(x)) / PI
}

/// Phase difference between `a ⊗ ω` and `a` under `σ_{β,H}`.
pub fn serre_twist_phase_gap(params: &StabParams, a: &KClass, sig: &CurveSignature) -> Result<f64> {
    require_heart_effective(a)?;
    match a.slope()? {
        Slope::Infinite => Ok(0.0),
        Slope::Finite(mu) => {
            let x = to_f64((params.beta - mu) / params.h);
            let shift = to_f64(sig.omega_degree() / params.h);
            Ok(phase_gap_at(x, shift))
        }
    }
}

/// Numerical supremum over `x ∈ [−10⁶, 10⁶]` of [`phase_gap_at`]`(x, d/h)`.
///
/// Samples a grid that is uniform in `asinh x` (dense near the origin, sparse
/// in the tails), then refines around the best grid point by golden-section
/// search.
pub fn sampled_sup_gap(d: f64, h: f64) -> f64 {
    const CELLS: usize = 20_000;
    let shift = d / h;
    let umax = libm::asinh(SAMPLE_RADIUS);
    let x_at = |k: usize| libm::sinh(-umax + 2.0 * umax * k as f64 / CELLS as f64);

    let (mut best_k, mut best) = (0, f64::NEG_INFINITY);
    for k in 0..=CELLS {
        let g = phase_gap_at(x_at(k), shift);
        if g > best {
            best = g;
            best_k = k;
        }
    }
    let mut lo = x_at(best_k.saturating_sub(1));
    let mut hi = x_at((best_k + 1).min(CELLS));
    let ratio = (libm::sqrt(5.0) - 1.0) / 2.0;
    for _ in 0..200 {
        let m1 = hi - ratio * (hi - lo);
        let m2 = lo + ratio * (hi - lo);
        if phase_gap_at(m1, shift) < phase_gap_at(m2, shift) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    best.max(phase_gap_at((lo + hi) / 2.0, shift))
}

/// Threshold `H₀ = |d| / (2·tan(π·ε/2))`, `d = deg ω`: for every `H > H₀`,
/// twisting by `ω` moves phases of `σ_{0,H}` by less than `ε`.
///
/// The maximum of `arccot(x − t) − arccot(x)` over `x` is `2·atan(t/2)`,
/// attained at `x = t/2`; the closed form solves `2·atan(t/2) = π·ε`. The
/// bound is cross-checked by [`sampled_sup_gap`] just above `H₀`.
pub fn min_h_for_epsilon(sig: &CurveSignature, eps: Rational) -> Result<f64> {
    if eps <= Rational::zero() || eps >= Rational::one() {
        return Err(Error::EpsilonRange(eps));
    }
    let d = sig.omega_degree();
    if d.is_zero() {
        return Ok(0.0);
    }
    let eps_f = to_f64(eps);
    let threshold = to_f64(d.abs()) / (2.0 * libm::tan(PI * eps_f / 2.0));
    let sup = sampled_sup_gap(to_f64(d), threshold * (1.0 + 1e-6));
    if sup >= eps_f {
        return Err(Error::Internal(alloc::format!(
            "sampled phase gap {sup} at H = {threshold}·(1 + 1e-6) is not below ε = {eps}"
        )));
    }
    Ok(threshold)
}

/// Closed-form supremum `(2/π)·atan(|t|/2)` of the phase gap for shift `t`.
pub fn sup_gap_closed_form(d: f64, h: f64) -> f64 {
    2.0 * libm::atan(libm::fabs(d / h) / 2.0) / PI
}

/// Dimension of the stability manifold: the rank of the charge lattice.
pub fn stab_space_dim(sig: &CurveSignature) -> usize {
    sig.cr_rank()
}
