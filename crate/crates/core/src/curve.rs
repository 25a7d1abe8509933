//! Orbifold curve signatures and the dimension classifier.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

/// A complete orbifold curve up to the data the numerical invariants see:
/// the genus of its coarse space and the orders of its stacky points.
///
/// Orders are stored sorted ascending, so derived equality is equality of
/// signatures. Stacky points are indexed by position in that sorted list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveSignature {
    genus: u32,
    orders: Vec<u32>,
}

impl CurveSignature {
    pub fn new(genus: u32, mut orders: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&e| e < 2) {
            return Err(Error::InvalidOrder(bad));
        }
        orders.sort_unstable();
        Ok(CurveSignature { genus, orders })
    }

    /// A curve with no stacky points.
    pub fn smooth(genus: u32) -> Self {
        CurveSignature { genus, orders: Vec::new() }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of stacky points `n`.
    pub fn stacky_count(&self) -> usize {
        self.orders.len()
    }

    /// `deg ω = 2g − 2 + Σ (eᵢ − 1)/eᵢ`.
    pub fn omega_degree(&self) -> Rational {
        let base = Rational::from_integer(2 * i64::from(self.genus) - 2);
        self.orders.iter().fold(base, |acc, &e| {
            acc + Rational::new(i64::from(e) - 1, i64::from(e))
        })
    }

    /// Rank of the algebraic Chen–Ruan lattice `H⁰ ⊕ H² ⊕ ⨁ Z^{eᵢ−1}`.
    pub fn cr_rank(&self) -> usize {
        2 + self.orders.iter().map(|&e| e as usize - 1).sum::<usize>()
    }

    /// The Harder–Narasimhan threshold `4g + 2n` used to split a filtration
    /// into its globally generated top and its co-generated bottom.
    pub fn hn_split_threshold(&self) -> i64 {
        4 * i64::from(self.genus) + 2 * self.orders.len() as i64
    }

    /// Lower bound `8g + 4n` on the degree of the line bundle in the
    /// one-step generator.
    pub fn generator_degree_bound(&self) -> i64 {
        8 * i64::from(self.genus) + 4 * self.orders.len() as i64
    }

    /// The negative-degree family of a genus-0 signature with at most three
    /// stacky points, or `None`.
    pub fn negative_family(&self) -> Option<NegativeFamily> {
        let family = if self.genus == 0 && self.orders.len() <= 3 {
            let mut triple = [1u32; 3];
            let pad = 3 - self.orders.len();
            triple[pad..].copy_from_slice(&self.orders);
            NegativeFamily::of_triple(triple)
        } else {
            None
        };
        assert_eq!(
            family.is_some(),
            self.genus == 0 && self.omega_degree() < Rational::zero(),
            "family tag disagrees with the sign of deg ω for {self}"
        );
        family
    }

    pub fn dimension_report(&self) -> DimensionReport {
        let ddim = if self.omega_degree() < Rational::zero() { 1 } else { 2 };
        DimensionReport {
            hdim: 1,
            rdim: 1,
            ddim,
            sdim: Rational::one(),
            gldim: Rational::one(),
        }
    }
}

impl fmt::Display for CurveSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, [", self.genus)?;
        for (i, e) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// `deg ω` of the genus-0 orbifold line with three (possibly trivial)
/// orbifold points of orders `a₁, a₂, a₃ ≥ 1`.
pub fn triple_omega_degree(triple: [u32; 3]) -> Rational {
    triple.iter().fold(Rational::from_integer(-2), |acc, &a| {
        acc + Rational::new(i64::from(a) - 1, i64::from(a))
    })
}

/// The five families of orbifold projective lines with `deg ω < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NegativeFamily {
    /// `(1, p, q)`, `p, q ≥ 1`.
    OnePQ { p: u32, q: u32 },
    /// `(2, 2, r)`, `r ≥ 2`.
    TwoTwoR { r: u32 },
    TwoThreeThree,
    TwoThreeFour,
    TwoThreeFive,
}

impl NegativeFamily {
    /// Matches a triple (in any order) against the family shapes.
    pub fn of_triple(mut triple: [u32; 3]) -> Option<Self> {
        triple.sort_unstable();
        match triple {
            [0, _, _] => None,
            [1, p, q] => Some(NegativeFamily::OnePQ { p, q }),
            [2, 2, r] => Some(NegativeFamily::TwoTwoR { r }),
            [2, 3, 3] => Some(NegativeFamily::TwoThreeThree),
            [2, 3, 4] => Some(NegativeFamily::TwoThreeFour),
            [2, 3, 5] => Some(NegativeFamily::TwoThreeFive),
            _ => None,
        }
    }

    /// The sorted triple this tag stands for.
    pub fn triple(&self) -> [u32; 3] {
        match *self {
            NegativeFamily::OnePQ { p, q } => [1, p, q],
            NegativeFamily::TwoTwoR { r } => [2, 2, r],
            NegativeFamily::TwoThreeThree => [2, 3, 3],
            NegativeFamily::TwoThreeFour => [2, 3, 4],
            NegativeFamily::TwoThreeFive => [2, 3, 5],
        }
    }

    /// Family name with the free parameters left symbolic.
    pub fn name(&self) -> &'static str {
        match self {
            NegativeFamily::OnePQ { .. } => "(1,p,q)",
            NegativeFamily::TwoTwoR { .. } => "(2,2,r)",
            NegativeFamily::TwoThreeThree => "(2,3,3)",
            NegativeFamily::TwoThreeFour => "(2,3,4)",
            NegativeFamily::TwoThreeFive => "(2,3,5)",
        }
    }

    /// Every sorted triple of the five families with entries `≤ bound`,
    /// generated from the family definitions alone.
    pub fn members_up_to(bound: u32) -> BTreeSet<[u32; 3]> {
        let mut out = BTreeSet::new();
        for p in 1..=bound {
            for q in p..=bound {
                out.insert([1, p, q]);
            }
        }
        for r in 2..=bound {
            out.insert([2, 2, r]);
        }
        for c in 3..=5 {
            if c <= bound {
                out.insert([2, 3, c]);
            }
        }
        out
    }
}

impl fmt::Display for NegativeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.triple();
        write!(f, "{} as ({a},{b},{c})", self.name())
    }
}

/// Brute force over all `1 ≤ a₁ ≤ a₂ ≤ a₃ ≤ bound` keeping the triples whose
/// genus-0 orbifold line has `deg ω < 0`.
pub fn enumerate_negative_triples(bound: u32) -> Result<BTreeSet<[u32; 3]>> {
    if bound < 2 {
        return Err(Error::BoundTooSmall { bound, min: 2 });
    }
    let mut out = BTreeSet::new();
    for a1 in 1..=bound {
        for a2 in a1..=bound {
            for a3 in a2..=bound {
                if triple_omega_degree([a1, a2, a3]) < Rational::zero() {
                    out.insert([a1, a2, a3]);
                }
            }
        }
    }
    Ok(out)
}

/// The five dimension invariants of `Dᵇ(𝒜)` for an abelian category 𝒜.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub hdim: u32,
    pub rdim: u32,
    pub ddim: u32,
    pub sdim: Rational,
    pub gldim: Rational,
}

impl DimensionReport {
    /// `rdim ≤ ddim ≤ 2·hdim` (when `hdim ≥ 1`) and `Sdim ≤ gldim`.
    pub fn is_consistent(&self) -> bool {
        let chain = self.hdim == 0 || (self.rdim <= self.ddim && self.ddim <= 2 * self.hdim);
        chain && self.sdim <= self.gldim
    }
}
