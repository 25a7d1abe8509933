//! Finite acyclic quivers and their Dynkin classification.
//!
//! A connected quiver is Dynkin, extended Dynkin or wild according as its
//! Tits form `q(x) = Σ xᵥ² − Σ_{arrows} x_s·x_t` is positive definite,
//! positive semidefinite with a radical, or indefinite. Orientation never
//! matters: the form only sees the underlying multigraph.
//!
//! Definiteness is decided exactly, by symmetric Gaussian elimination on the
//! symmetrized Cartan matrix `2·q`. Coxeter numbers come from enumerating
//! positive roots: `h = 2·|Φ⁺| / rank`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::curve::{triple_omega_degree, CurveSignature, DimensionReport};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Validates endpoints and acyclicity. Parallel arrows are allowed.
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyQuiver);
        }
        for (arrow, &(s, t)) in arrows.iter().enumerate() {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::ArrowOutOfRange {
                    arrow,
                    source_vertex: s,
                    target: t,
                    vertices: vertex_count,
                });
            }
        }
        let q = Quiver { vertex_count, arrows };
        if !q.is_acyclic() {
            return Err(Error::CyclicQuiver);
        }
        Ok(q)
    }

    /// The single vertex with no arrows, `A₁`.
    pub fn point() -> Self {
        Quiver { vertex_count: 1, arrows: Vec::new() }
    }

    /// `0 → 1 → … → n−1`.
    pub fn path(n: usize) -> Self {
        Quiver { vertex_count: n, arrows: (1..n).map(|v| (v - 1, v)).collect() }
    }

    /// Two vertices joined by two parallel arrows.
    pub fn kronecker() -> Self {
        Quiver { vertex_count: 2, arrows: vec![(0, 1), (0, 1)] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// The same quiver with arrow `index` reversed (if it exists).
    pub fn with_reversed_arrow(&self, index: usize) -> Self {
        let mut q = self.clone();
        if let Some(a) = q.arrows.get_mut(index) {
            *a = (a.1, a.0);
        }
        q
    }

    fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.vertex_count];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for &(s, t) in &self.arrows {
            indegree[t] += 1;
            out[s].push(t);
        }
        let mut queue: VecDeque<usize> = (0..self.vertex_count).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == self.vertex_count
    }

    pub fn is_connected(&self) -> bool {
        let adjacency = self.neighbours();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn neighbours(&self) -> Vec<BTreeSet<usize>> {
        let mut adjacency = vec![BTreeSet::new(); self.vertex_count];
        for &(s, t) in &self.arrows {
            adjacency[s].insert(t);
            adjacency[t].insert(s);
        }
        adjacency
    }

    /// `2·q` as a matrix: 2 on the diagonal, minus the number of arrows
    /// between `u` and `v` (either direction) off it.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count;
        let mut c = vec![vec![0i64; n]; n];
        for (v, row) in c.iter_mut().enumerate() {
            row[v] = 2;
        }
        for &(s, t) in &self.arrows {
            c[s][t] -= 1;
            c[t][s] -= 1;
        }
        c
    }

    /// Evaluates the Tits form at `x`.
    pub fn tits_form(&self, x: &[i64]) -> i64 {
        let squares: i64 = x.iter().map(|v| v * v).sum();
        squares - self.arrows.iter().map(|&(s, t)| x[s] * x[t]).sum::<i64>()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, arrows {:?}", self.vertex_count, self.arrows)
    }
}

/// Signature class of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite with a radical of the given dimension.
    PositiveSemidefinite { corank: usize },
    Indefinite,
}

/// Exact definiteness of a symmetric integer matrix.
///
/// Repeatedly pivots on a positive diagonal entry and passes to the Schur
/// complement, which preserves inertia. A negative diagonal entry, or a zero
/// diagonal entry with a nonzero row, witnesses indefiniteness. Pivots are
/// chosen with the fewest off-diagonal entries, which keeps fill-in at zero
/// on trees.
pub fn definiteness(matrix: &[Vec<i64>]) -> Definiteness {
    type Q = Ratio<i128>;
    let n = matrix.len();
    let mut diagonal: Vec<Q> = (0..n).map(|i| Q::from_integer(i128::from(matrix[i][i]))).collect();
    // Sparse off-diagonal rows, kept symmetric.
    let mut rows: Vec<BTreeMap<usize, Q>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && matrix[i][j] != 0)
                .map(|j| (j, Q::from_integer(i128::from(matrix[i][j]))))
                .collect()
        })
        .collect();
    let mut active: BTreeSet<usize> = (0..n).collect();
    loop {
        if active.iter().any(|&i| diagonal[i] < Q::zero()) {
            return Definiteness::Indefinite;
        }
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| diagonal[i] > Q::zero())
            .min_by_key(|&i| rows[i].len());
        let Some(p) = pivot else {
            return if active.iter().any(|&i| !rows[i].is_empty()) {
                Definiteness::Indefinite
            } else if active.is_empty() {
                Definiteness::PositiveDefinite
            } else {
                Definiteness::PositiveSemidefinite { corank: active.len() }
            };
        };
        active.remove(&p);
        let row = core::mem::take(&mut rows[p]);
        for (&i, &x) in &row {
            rows[i].remove(&p);
            let factor = x / diagonal[p];
            for (&j, &y) in &row {
                let delta = factor * y;
                if i == j {
                    diagonal[i] -= delta;
                    continue;
                }
                let entry = rows[i].entry(j).or_insert_with(Q::zero);
                *entry -= delta;
                if entry.is_zero() {
                    rows[i].remove(&j);
                }
            }
        }
    }
}

/// A simply-laced finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn validated(self) -> Result<Self> {
        match self {
            AdeType::A(n) if n >= 1 => Ok(self),
            AdeType::D(n) if n >= 4 => Ok(self),
            AdeType::E6 | AdeType::E7 | AdeType::E8 => Ok(self),
            other => Err(Error::InvalidAdeType(other.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            AdeType::A(n) | AdeType::D(n) => n as usize,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    /// A quiver with this Dynkin diagram as underlying graph.
    pub fn diagram(&self) -> Quiver {
        let n = self.rank();
        let mut q = Quiver::path(match self {
            AdeType::A(_) => n,
            _ => n - 1,
        });
        match self {
            AdeType::A(_) => {}
            AdeType::D(_) => {
                q.vertex_count = n;
                q.arrows.push((n - 3, n - 1));
            }
            AdeType::E6 | AdeType::E7 | AdeType::E8 => {
                q.vertex_count = n;
                q.arrows.push((2, n - 1));
            }
        }
        q
    }

    /// `2·|Φ⁺| / rank`, with the positive roots enumerated.
    pub fn coxeter_number(&self) -> u32 {
        let roots = positive_roots(&self.diagram().cartan_matrix())
            .expect("ADE diagrams have finite root systems");
        (2 * roots.len() / self.rank()) as u32
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E6 => f.write_str("E6"),
            AdeType::E7 => f.write_str("E7"),
            AdeType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidAdeType(s.to_string());
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let n: u32 = tail.parse().map_err(|_| invalid())?;
        let ty = match (head, n) {
            ("A", n) => AdeType::A(n),
            ("D", n) => AdeType::D(n),
            ("E", 6) => AdeType::E6,
            ("E", 7) => AdeType::E7,
            ("E", 8) => AdeType::E8,
            _ => return Err(invalid()),
        };
        ty.validated().map_err(|_| invalid())
    }
}

/// An upper bound for the positive roots of any rank-`n` ADE system
/// (`Dₙ` has `n² − n`, `E₈` has 120).
fn root_limit(n: usize) -> usize {
    (n * n).max(120)
}

fn off_diagonal(c: &[Vec<i64>]) -> Vec<Vec<(usize, i64)>> {
    c.iter()
        .enumerate()
        .map(|(i, row)| row.iter().copied().enumerate().filter(|&(j, x)| j != i && x != 0).collect())
        .collect()
}

/// `⟨α, αᵢ⟩` from the sparse off-diagonal part of the Cartan matrix.
fn pairing(c: &[Vec<i64>], off: &[Vec<(usize, i64)>], alpha: &[i64], i: usize) -> i64 {
    alpha[i] * c[i][i] + off[i].iter().map(|&(j, x)| alpha[j] * x).sum::<i64>()
}

/// Positive roots of the simply-laced root system with Cartan matrix `c`,
/// in simple-root coordinates, by closing the simple roots under simple
/// reflections. `None` if the system is not of finite type.
///
/// A reflection that lengthens a positive root raises its height, so roots
/// are processed height by height and deduplicated within each height.
pub fn positive_roots(c: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = c.len();
    let off = off_diagonal(c);
    let mut pending: BTreeMap<i64, BTreeSet<Vec<i64>>> = BTreeMap::new();
    pending.insert(
        1,
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect(),
    );
    let mut roots = Vec::new();
    while let Some((height, layer)) = pending.pop_first() {
        for alpha in layer {
            for i in 0..n {
                let p = pairing(c, &off, &alpha, i);
                if p < 0 {
                    let mut beta = alpha.clone();
                    beta[i] -= p;
                    pending.entry(height - p).or_default().insert(beta);
                }
            }
            roots.push(alpha);
            if roots.len() > root_limit(n) {
                return None;
            }
        }
    }
    Some(roots)
}

/// The highest root of a connected Dynkin diagram, reached by climbing from
/// a simple root with height-raising reflections: the climb stops at a
/// dominant root, and the highest root is the only one. `None` if the climb
/// does not stop, i.e. the diagram is not of finite type.
pub fn highest_root(c: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = c.len();
    let off = off_diagonal(c);
    let mut alpha = vec![0; n];
    *alpha.first_mut()? = 1;
    for _ in 0..=root_limit(n) {
        match (0..n).find(|&i| pairing(c, &off, &alpha, i) < 0) {
            Some(i) => alpha[i] -= pairing(c, &off, &alpha, i),
            None => return Some(alpha),
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuiverKind {
    Dynkin { ade: AdeType, coxeter: u32 },
    Extended,
    Wild,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuiverClassification {
    pub kind: QuiverKind,
    pub is_a1: bool,
}

/// Classifies a connected acyclic quiver by its Tits form, then names the
/// Dynkin type from the tree shape.
pub fn classify(q: &Quiver) -> Result<QuiverClassification> {
    let kind = match tits_class(q)? {
        TitsClass::Dynkin(ade) => QuiverKind::Dynkin { ade, coxeter: ade.coxeter_number() },
        TitsClass::Extended => QuiverKind::Extended,
        TitsClass::Wild => QuiverKind::Wild,
    };
    Ok(QuiverClassification { kind, is_a1: q.vertex_count == 1 })
}

enum TitsClass {
    Dynkin(AdeType),
    Extended,
    Wild,
}

/// [`classify`] without the root enumeration behind the Coxeter number.
fn tits_class(q: &Quiver) -> Result<TitsClass> {
    if !q.is_connected() {
        return Err(Error::DisconnectedQuiver);
    }
    Ok(match definiteness(&q.cartan_matrix()) {
        Definiteness::PositiveDefinite => TitsClass::Dynkin(dynkin_shape(q)?),
        Definiteness::PositiveSemidefinite { .. } => TitsClass::Extended,
        Definiteness::Indefinite => TitsClass::Wild,
    })
}

/// Names the ADE type of a tree: a path is `Aₙ`; otherwise there is a single
/// branch vertex with arms `(1, 1, k)` for `D`, `(1, 2, 2..=4)` for `E`.
fn dynkin_shape(q: &Quiver) -> Result<AdeType> {
    let n = q.vertex_count as u32;
    let adjacency = q.neighbours();
    let simple = q.arrows.len() + 1 == q.vertex_count
        && adjacency.iter().map(BTreeSet::len).sum::<usize>() == 2 * q.arrows.len();
    let not_ade = || Error::Internal(format!("positive definite quiver with non-ADE shape: {q}"));
    if !simple {
        return Err(not_ade());
    }
    let branches: Vec<usize> = (0..q.vertex_count).filter(|&v| adjacency[v].len() > 2).collect();
    match branches.as_slice() {
        [] => Ok(AdeType::A(n)),
        &[centre] if adjacency[centre].len() == 3 => {
            let mut arms: Vec<u32> = adjacency[centre]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    while let Some(&next) = adjacency[cur].iter().find(|&&w| w != prev) {
                        if adjacency[cur].len() > 2 {
                            break;
                        }
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(AdeType::D(n)),
                [1, 2, 2] => Ok(AdeType::E6),
                [1, 2, 3] => Ok(AdeType::E7),
                [1, 2, 4] => Ok(AdeType::E8),
                _ => Err(not_ade()),
            }
        }
        _ => Err(not_ade()),
    }
}

/// The quiver rows of the dimension table.
pub fn quiver_dimension_report(q: &Quiver) -> Result<DimensionReport> {
    let classification = classify(q)?;
    Ok(match classification.kind {
        _ if classification.is_a1 => DimensionReport {
            hdim: 0,
            rdim: 0,
            ddim: 0,
            sdim: Rational::zero(),
            gldim: Rational::zero(),
        },
        QuiverKind::Dynkin { coxeter, .. } => {
            let value = Rational::one() - Rational::new(2, i64::from(coxeter));
            DimensionReport { hdim: 1, rdim: 0, ddim: 1, sdim: value, gldim: value }
        }
        QuiverKind::Extended | QuiverKind::Wild => DimensionReport {
            hdim: 1,
            rdim: 1,
            ddim: 1,
            sdim: Rational::one(),
            gldim: Rational::one(),
        },
    })
}

/// Output of [`gl_star_quiver`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarQuiver {
    /// The star plus its extending vertex (the last vertex).
    pub quiver: Quiver,
    /// The star alone: a centre with arms of lengths `aᵢ − 1`.
    pub star: Quiver,
    pub star_type: AdeType,
}

/// The quiver attached to the orbifold line `P¹(a₁, a₂, a₃)` with `deg ω < 0`.
///
/// Builds the star with arms of lengths `aᵢ − 1` (vertex 0 is the centre,
/// arrows point away from it), names its type with [`classify`], and adds an
/// extending vertex joined to node `j` by `(Cθ)_j` arrows, `θ` the highest
/// root of the star. The result is asserted to be extended Dynkin.
pub fn gl_star_quiver(a1: u32, a2: u32, a3: u32) -> Result<StarQuiver> {
    let mut triple = [a1, a2, a3];
    triple.sort_unstable();
    if triple[0] == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let sig = CurveSignature::new(0, triple.iter().copied().filter(|&a| a >= 2).collect())?;
    if sig.negative_family().is_none() {
        return Err(Error::NotNegativeFamily { triple, omega: triple_omega_degree(triple) });
    }

    let mut arrows = Vec::new();
    let mut next = 1;
    for &a in &triple {
        let mut prev = 0;
        for _ in 1..a {
            arrows.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let star = Quiver::new(next, arrows)?;
    let star_type = match tits_class(&star)? {
        TitsClass::Dynkin(ade) => ade,
        _ => return Err(Error::Internal(format!("star of {triple:?} is not Dynkin"))),
    };

    let c = star.cartan_matrix();
    let theta = highest_root(&c).ok_or_else(|| Error::Internal("star has no finite root system".into()))?;
    let extra = star.vertex_count;
    let mut arrows = star.arrows.clone();
    for (j, row) in c.iter().enumerate() {
        let multiplicity: i64 = row.iter().zip(&theta).map(|(x, t)| x * t).sum();
        if multiplicity < 0 {
            return Err(Error::Internal(format!("highest root pairs negatively with node {j}")));
        }
        arrows.extend((0..multiplicity).map(|_| (j, extra)));
    }
    let quiver = Quiver::new(extra + 1, arrows)?;
    if !matches!(tits_class(&quiver)?, TitsClass::Extended) {
        return Err(Error::Internal(format!("extended star of {triple:?} is not extended Dynkin")));
    }
    Ok(StarQuiver { quiver, star, star_type })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dynkin(q: &Quiver) -> (AdeType, u32) {
        match classify(q).unwrap().kind {
            QuiverKind::Dynkin { ade, coxeter } => (ade, coxeter),
            other => panic!("{q} classified {other:?}"),
        }
    }

    #[test]
    fn validation() {
        assert_eq!(Quiver::new(0, vec![]), Err(Error::EmptyQuiver));
        assert!(matches!(Quiver::new(2, vec![(0, 2)]), Err(Error::ArrowOutOfRange { .. })));
        assert_eq!(Quiver::new(2, vec![(0, 1), (1, 0)]), Err(Error::CyclicQuiver));
        assert_eq!(Quiver::new(1, vec![(0, 0)]), Err(Error::CyclicQuiver));
        let disconnected = Quiver::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(classify(&disconnected), Err(Error::DisconnectedQuiver));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(dynkin(&Quiver::path(2)), (AdeType::A(2), 3));
        assert_eq!(classify(&Quiver::kronecker()).unwrap().kind, QuiverKind::Extended);
        assert_eq!(dynkin(&AdeType::E8.diagram()), (AdeType::E8, 30));
        let three = Quiver::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(classify(&three).unwrap().kind, QuiverKind::Wild);
        assert!(classify(&Quiver::point()).unwrap().is_a1);
    }

    #[test]
    fn definiteness_of_small_forms() {
        assert_eq!(definiteness(&[vec![2, -1], vec![-1, 2]]), Definiteness::PositiveDefinite);
        assert_eq!(
            definiteness(&[vec![2, -2], vec![-2, 2]]),
            Definiteness::PositiveSemidefinite { corank: 1 }
        );
        assert_eq!(definiteness(&[vec![2, -3], vec![-3, 2]]), Definiteness::Indefinite);
        assert_eq!(definiteness(&[vec![0, 1], vec![1, 0]]), Definiteness::Indefinite);
    }

    #[test]
    fn coxeter_numbers() {
        for n in 1..=12 {
            assert_eq!(AdeType::A(n).coxeter_number(), n + 1);
        }
        for n in 4..=12 {
            assert_eq!(AdeType::D(n).coxeter_number(), 2 * n - 2);
        }
        assert_eq!(AdeType::D(4).coxeter_number(), 6);
        assert_eq!(AdeType::E6.coxeter_number(), 12);
        assert_eq!(AdeType::E7.coxeter_number(), 18);
        assert_eq!(AdeType::E8.coxeter_number(), 30);
        let e6 = positive_roots(&AdeType::E6.diagram().cartan_matrix()).unwrap();
        assert_eq!(e6.len(), 36);
    }

    #[test]
    fn affine_diagrams_have_no_finite_root_system() {
        assert_eq!(positive_roots(&Quiver::kronecker().cartan_matrix()), None);
    }

    #[test]
    fn ade_names_round_trip() {
        for ty in [AdeType::A(1), AdeType::A(7), AdeType::D(4), AdeType::D(9), AdeType::E6, AdeType::E7, AdeType::E8] {
            assert_eq!(ty.to_string().parse::<AdeType>(), Ok(ty));
        }
        assert!("D3".parse::<AdeType>().is_err());
        assert!("E9".parse::<AdeType>().is_err());
        assert!("A0".parse::<AdeType>().is_err());
        assert!("X4".parse::<AdeType>().is_err());
    }

    #[test]
    fn dimension_report_examples() {
        let zero = quiver_dimension_report(&Quiver::point()).unwrap();
        assert_eq!((zero.hdim, zero.rdim, zero.ddim), (0, 0, 0));
        assert_eq!((zero.sdim, zero.gldim), (Rational::zero(), Rational::zero()));

        let a3 = quiver_dimension_report(&Quiver::path(3)).unwrap();
        assert_eq!((a3.hdim, a3.rdim, a3.ddim), (1, 0, 1));
        assert_eq!((a3.sdim, a3.gldim), (Rational::new(1, 2), Rational::new(1, 2)));

        let k = quiver_dimension_report(&Quiver::kronecker()).unwrap();
        assert_eq!((k.hdim, k.rdim, k.ddim, k.sdim, k.gldim), (1, 1, 1, Rational::one(), Rational::one()));
    }

    #[test]
    fn star_quiver_examples() {
        let s = gl_star_quiver(2, 3, 5).unwrap();
        assert_eq!(s.quiver.vertex_count(), 9);
        assert_eq!(s.star_type, AdeType::E8);
        assert_eq!(classify(&s.quiver).unwrap().kind, QuiverKind::Extended);

        for r in 2..8 {
            let s = gl_star_quiver(2, r, 2).unwrap();
            assert_eq!(s.star_type, AdeType::D(r + 2));
        }
        assert!(matches!(gl_star_quiver(2, 3, 7), Err(Error::NotNegativeFamily { .. })));
        assert_eq!(gl_star_quiver(0, 2, 2), Err(Error::InvalidOrder(0)));

        let p1 = gl_star_quiver(1, 1, 1).unwrap();
        assert_eq!(p1.quiver, Quiver::kronecker());
        let cycle = gl_star_quiver(1, 2, 3).unwrap();
        assert_eq!(cycle.quiver.vertex_count(), 5);
        assert_eq!(cycle.quiver.arrows().len(), 5);
    }

    #[test]
    fn reversing_arrows_keeps_the_class() {
        let q = AdeType::E7.diagram();
        for i in 0..q.arrows().len() {
            assert_eq!(classify(&q.with_reversed_arrow(i)).unwrap(), classify(&q).unwrap());
        }
    }
}
