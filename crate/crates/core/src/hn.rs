//! Harder–Narasimhan graded objects at the level of K-classes.
//!
//! A [`FilteredObject`] is the list of HN subquotients `Fᵢ/Fᵢ₋₁`, listed from
//! the top of the filtration (largest slope) down. Objects are formal direct
//! sums of their pieces: extension data is invisible to K-theory, and the
//! semistability of each piece is the caller's assertion.
//!
//! Dualizing reverses the filtration. If `0 = F₀ ⊂ … ⊂ Fₙ = F` has pieces
//! `Fᵢ/Fᵢ₋₁`, then `F^∨` has pieces `(Fᵢ/Fᵢ₋₁)^∨` in the order
//! `i = n, …, 1`; [`dual_hn`] returns them indexed from the top again.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::classes::{KClass, Slope};
use crate::curve::CurveSignature;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilteredObject {
    pieces: Vec<KClass>,
}

impl FilteredObject {
    /// Accepts pieces that already satisfy every invariant: heart-effective,
    /// strictly decreasing slopes, at most one torsion piece and only first.
    pub fn from_normalized(pieces: Vec<KClass>) -> Result<Self> {
        let slopes = slopes_of(&pieces)?;
        if slopes.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::UnsortedPieces);
        }
        Ok(FilteredObject { pieces })
    }

    pub fn pieces(&self) -> &[KClass] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn slopes(&self) -> Vec<Slope> {
        self.pieces.iter().map(|p| p.slope().expect("pieces are nonzero")).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.pieces.first().is_some_and(|p| p.rank() == 0)
    }

    /// Sum of the pieces, the class of the whole object.
    pub fn total(&self) -> Option<KClass> {
        let (first, rest) = self.pieces.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, p| acc.add(p).expect("pieces share a signature")))
    }
}

fn slopes_of(pieces: &[KClass]) -> Result<Vec<Slope>> {
    pieces
        .iter()
        .map(|p| {
            if p.is_heart_effective() {
                p.slope()
            } else {
                Err(Error::NotHeartEffective { rank: p.rank(), degree: p.degree() })
            }
        })
        .collect()
}

/// Sorts pieces by descending slope and merges pieces of equal slope; all
/// torsion merges into one leading piece.
pub fn hn_normalize(pieces: &[KClass]) -> Result<FilteredObject> {
    let slopes = slopes_of(pieces)?;
    let mut keyed: Vec<(Slope, KClass)> = slopes.into_iter().zip(pieces.iter().cloned()).collect();
    keyed.sort_by_key(|entry| core::cmp::Reverse(entry.0));
    let mut out: Vec<(Slope, KClass)> = Vec::with_capacity(keyed.len());
    for (slope, piece) in keyed {
        match out.last_mut() {
            Some((s, acc)) if *s == slope => *acc = acc.add(&piece)?,
            _ => out.push((slope, piece)),
        }
    }
    Ok(FilteredObject { pieces: out.into_iter().map(|(_, p)| p).collect() })
}

/// HN pieces of the dual bundle: reversed and dualized.
pub fn dual_hn(f: &FilteredObject) -> Result<FilteredObject> {
    if let Some(i) = f.pieces.iter().position(|p| p.rank() == 0) {
        return Err(Error::TorsionPiece(i));
    }
    Ok(FilteredObject { pieces: f.pieces.iter().rev().map(KClass::dual).collect() })
}

/// Tensors every piece with a line bundle class; slopes shift by `deg L`.
pub fn twist(f: &FilteredObject, line: &KClass) -> Result<FilteredObject> {
    if line.rank() != 1 {
        return Err(Error::TwistRank(line.rank()));
    }
    let pieces = f.pieces.iter().map(|p| p.tensor(line)).collect::<Result<_>>()?;
    Ok(FilteredObject { pieces })
}

/// The two halves of a filtration cut at slope `4g + 2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrlovSplit {
    /// Pieces with slope `≥ 4g + 2n`: the subobject `Fᵢ`.
    pub top: Option<FilteredObject>,
    /// The remaining pieces: the quotient `F/Fᵢ`.
    pub bottom: Option<FilteredObject>,
}

pub fn orlov_split(f: &FilteredObject, sig: &CurveSignature) -> OrlovSplit {
    let threshold = Rational::from_integer(sig.hn_split_threshold());
    let cut = f
        .slopes()
        .iter()
        .position(|s| !s.at_least(threshold))
        .unwrap_or(f.len());
    let (top, bottom) = f.pieces.split_at(cut);
    let wrap = |pieces: &[KClass]| {
        (!pieces.is_empty()).then(|| FilteredObject { pieces: pieces.to_vec() })
    };
    OrlovSplit { top: wrap(top), bottom: wrap(bottom) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vanishing {
    Zero,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyVerdict {
    pub h0: Vanishing,
    pub h1: Vanishing,
}

/// Sound vanishing predictions for a class the caller asserts is semistable.
///
/// `H⁰ = 0` when `μ < 0`. `H¹(F) ≅ H⁰(F^∨ ⊗ ω)^*` and `F^∨ ⊗ ω` is semistable
/// of slope `deg ω − μ`, so `H¹ = 0` when `μ > deg ω`. Torsion has no `H¹`.
pub fn vanishing_oracle(a: &KClass, sig: &CurveSignature) -> Result<CohomologyVerdict> {
    if !a.is_heart_effective() {
        return Err(Error::NotHeartEffective { rank: a.rank(), degree: a.degree() });
    }
    let mu = match a.slope()? {
        Slope::Infinite => {
            return Ok(CohomologyVerdict { h0: Vanishing::Unknown, h1: Vanishing::Zero });
        }
        Slope::Finite(mu) => mu,
    };
    let verdict = |zero: bool| if zero { Vanishing::Zero } else { Vanishing::Unknown };
    Ok(CohomologyVerdict {
        h0: verdict(mu < Rational::zero()),
        h1: verdict(mu > sig.omega_degree()),
    })
}

/// `μ(F) ≥ 2g + n` and `deg L ≥ −1`, which guarantees `H¹(F ⊗ L) = 0` for a
/// semistable bundle `F` and a line bundle `L`.
pub fn ssvanishing_applies(slope: Rational, twist_degree: Rational, sig: &CurveSignature) -> bool {
    let bound = Rational::from_integer(2 * i64::from(sig.genus()) + sig.stacky_count() as i64);
    slope >= bound && twist_degree >= Rational::from_integer(-1)
}

/// Whether a line bundle of degree `d` on a genus-`g` curve is guaranteed a
/// surjection `O² ↠ L` (`d ≥ 2g`).
pub fn twosections_threshold(g: u32, d: i64) -> Result<bool> {
    if g == 0 {
        return Err(Error::GenusZero(g));
    }
    Ok(d >= 2 * i64::from(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{PointId, WeilDivisor};
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn bundle(rank: i64, degree: i64) -> KClass {
        KClass::new(rank, r(degree, 1), vec![]).unwrap()
    }

    fn sig(g: u32, orders: &[u32]) -> CurveSignature {
        CurveSignature::new(g, orders.to_vec()).unwrap()
    }

    fn finite(f: &FilteredObject) -> Vec<Rational> {
        f.slopes().iter().map(|s| s.finite().unwrap()).collect()
    }

    #[test]
    fn normalize_examples() {
        let f = hn_normalize(&[bundle(1, 2), bundle(1, 5), bundle(2, 4)]).unwrap();
        assert_eq!(f.pieces(), &[bundle(1, 5), bundle(3, 6)]);
        assert_eq!(hn_normalize(f.pieces()).unwrap(), f);

        let torsion = KClass::new(0, r(1, 1), vec![]).unwrap();
        let f = hn_normalize(&[bundle(1, 0), torsion.clone()]).unwrap();
        assert_eq!(f.pieces(), &[torsion.clone(), bundle(1, 0)]);
        assert!(f.has_torsion());

        let f = hn_normalize(&[torsion.clone(), bundle(1, 0), torsion]).unwrap();
        assert_eq!(f.pieces()[0], KClass::new(0, r(2, 1), vec![]).unwrap());
    }

    #[test]
    fn normalize_rejects_ineffective() {
        assert!(matches!(hn_normalize(&[bundle(0, -1)]), Err(Error::NotHeartEffective { .. })));
        assert!(matches!(hn_normalize(&[bundle(-1, 3)]), Err(Error::NotHeartEffective { .. })));
        assert!(matches!(hn_normalize(&[bundle(0, 0)]), Err(Error::NotHeartEffective { .. })));
    }

    #[test]
    fn dual_examples() {
        let f = hn_normalize(&[bundle(1, 3), bundle(1, -1)]).unwrap();
        let d = dual_hn(&f).unwrap();
        assert_eq!(finite(&d), vec![r(1, 1), r(-3, 1)]);
        assert_eq!(dual_hn(&d).unwrap(), f);

        let s = sig(0, &[3]);
        let symmetric = KClass::line_bundle(&WeilDivisor::point(PointId::Stacky(0), 1), &s)
            .unwrap()
            .add(&KClass::line_bundle(&WeilDivisor::point(PointId::Stacky(0), -1), &s).unwrap())
            .unwrap();
        let f = hn_normalize(core::slice::from_ref(&symmetric)).unwrap();
        assert_eq!(dual_hn(&f).unwrap().pieces(), &[symmetric]);

        let t = hn_normalize(&[KClass::new(0, r(1, 1), vec![]).unwrap(), bundle(1, 0)]).unwrap();
        assert_eq!(dual_hn(&t), Err(Error::TorsionPiece(0)));
    }

    #[test]
    fn twist_examples() {
        let f = hn_normalize(&[bundle(1, 3), bundle(2, -1)]).unwrap();
        assert_eq!(twist(&f, &KClass::trivial(&[])).unwrap(), f);

        let s = sig(0, &[2]);
        let o_p = KClass::line_bundle(&WeilDivisor::point(PointId::Stacky(0), 1), &s).unwrap();
        let g = hn_normalize(&[KClass::new(2, r(0, 1), vec![vec![0]]).unwrap()]).unwrap();
        assert_eq!(twist(&g, &o_p).unwrap().slopes(), vec![Slope::Finite(r(1, 2))]);
        assert_eq!(twist(&twist(&g, &o_p).unwrap(), &o_p.dual()).unwrap(), g);

        assert_eq!(twist(&f, &bundle(2, 0)), Err(Error::TwistRank(2)));
    }

    #[test]
    fn split_examples() {
        let s = sig(1, &[2]);
        let f = hn_normalize(&[
            KClass::new(1, r(10, 1), vec![vec![0]]).unwrap(),
            KClass::new(1, r(6, 1), vec![vec![0]]).unwrap(),
            KClass::new(1, r(1, 1), vec![vec![0]]).unwrap(),
        ])
        .unwrap();
        let split = orlov_split(&f, &s);
        assert_eq!(finite(split.top.as_ref().unwrap()), vec![r(10, 1), r(6, 1)]);
        assert_eq!(finite(split.bottom.as_ref().unwrap()), vec![r(1, 1)]);

        let low = hn_normalize(&[bundle(1, 1), bundle(1, 0)]).unwrap();
        let split = orlov_split(&low, &sig(1, &[]));
        assert!(split.top.is_none());
        assert_eq!(split.bottom.unwrap(), low);

        let t = hn_normalize(&[KClass::new(0, r(1, 1), vec![]).unwrap()]).unwrap();
        let split = orlov_split(&t, &sig(3, &[]));
        assert_eq!(split.top.unwrap(), t);
        assert!(split.bottom.is_none());
    }

    #[test]
    fn vanishing_examples() {
        let s = sig(2, &[]);
        let v = vanishing_oracle(&bundle(1, -1), &s).unwrap();
        assert_eq!(v.h0, Vanishing::Zero);

        let omega = s.omega_degree().to_integer();
        let v = vanishing_oracle(&bundle(1, omega + 1), &s).unwrap();
        assert_eq!(v.h1, Vanishing::Zero);

        let v = vanishing_oracle(&KClass::trivial(&[]), &s).unwrap();
        assert_eq!(v, CohomologyVerdict { h0: Vanishing::Unknown, h1: Vanishing::Unknown });

        let v = vanishing_oracle(&KClass::new(0, r(2, 1), vec![]).unwrap(), &s).unwrap();
        assert_eq!(v, CohomologyVerdict { h0: Vanishing::Unknown, h1: Vanishing::Zero });

        assert!(vanishing_oracle(&bundle(0, -2), &s).is_err());
    }

    #[test]
    fn ssvanishing_examples() {
        let s = sig(1, &[2, 3]);
        assert!(ssvanishing_applies(r(4, 1), r(-1, 1), &s));
        assert!(!ssvanishing_applies(r(7, 2), r(0, 1), &s));
        assert!(!ssvanishing_applies(r(5, 1), r(-3, 2), &s));
    }

    #[test]
    fn twosections_examples() {
        assert_eq!(twosections_threshold(1, 2), Ok(true));
        assert_eq!(twosections_threshold(2, 3), Ok(false));
        assert_eq!(twosections_threshold(1, 1), Ok(false));
        assert_eq!(twosections_threshold(0, 5), Err(Error::GenusZero(0)));
    }
}
