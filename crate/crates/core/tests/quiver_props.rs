mod support;

use ncdim_core::curve::enumerate_negative_triples;
use ncdim_core::quiver::{classify, gl_star_quiver, quiver_dimension_report};
use ncdim_core::{AdeType, Quiver, QuiverKind, Rational};
use num_traits::{One, Zero};
use support::{catalogue_shape, orientations, trees, Shape, TREE_COUNTS};

#[test]
fn tree_enumeration_counts() {
    for (n, &count) in (1..=9).zip(&TREE_COUNTS) {
        assert_eq!(trees(n).len(), count, "trees on {n} vertices");
    }
}

#[test]
fn classify_matches_catalogue_on_all_oriented_trees() {
    for n in 1..=9 {
        for edges in trees(n) {
            let expected = catalogue_shape(n, &edges);
            for arrows in orientations(&edges) {
                let q = Quiver::new(n, arrows).unwrap();
                let kind = classify(&q).unwrap().kind;
                let got = match kind {
                    QuiverKind::Dynkin { ade: AdeType::A(k), .. } => Shape::A(k as usize),
                    QuiverKind::Dynkin { ade: AdeType::D(k), .. } => Shape::D(k as usize),
                    QuiverKind::Dynkin { ade, .. } => Shape::E(ade.rank()),
                    QuiverKind::Extended => Shape::Extended,
                    QuiverKind::Wild => Shape::Wild,
                };
                assert_eq!(got, expected, "{q}");
                let report = quiver_dimension_report(&q).unwrap();
                assert!(report.is_consistent());
                if let QuiverKind::Dynkin { coxeter, .. } = kind {
                    if n > 1 {
                        assert_eq!(report.sdim, report.gldim);
                        assert!(report.sdim > Rational::zero() && report.sdim < Rational::one());
                        assert_eq!(report.sdim, Rational::one() - Rational::new(2, i64::from(coxeter)));
                        assert_eq!((report.rdim, report.ddim), (0, 1));
                    }
                }
            }
        }
    }
}

#[test]
fn coxeter_numbers_from_root_counts() {
    for n in 1..=15 {
        assert_eq!(AdeType::A(n).coxeter_number(), n + 1);
    }
    for n in 4..=15 {
        assert_eq!(AdeType::D(n).coxeter_number(), 2 * n - 2);
    }
    assert_eq!(AdeType::E6.coxeter_number(), 12);
    assert_eq!(AdeType::E7.coxeter_number(), 18);
    assert_eq!(AdeType::E8.coxeter_number(), 30);
}

#[test]
fn star_quivers_are_extended() {
    let accepted = enumerate_negative_triples(50).unwrap();
    for [a, b, c] in &accepted {
        let star = gl_star_quiver(*a, *b, *c).unwrap();
        assert_eq!(classify(&star.quiver).unwrap().kind, QuiverKind::Extended, "({a},{b},{c})");
        assert_eq!(star.quiver.vertex_count(), star.star.vertex_count() + 1);
    }
    for a in 1..=12 {
        for b in a..=12 {
            for c in b..=12 {
                if !accepted.contains(&[a, b, c]) {
                    assert!(gl_star_quiver(a, b, c).is_err());
                }
            }
        }
    }
}

#[test]
fn parallel_arrows_are_never_dynkin() {
    for m in 2..=4 {
        let q = Quiver::new(2, vec![(0, 1); m]).unwrap();
        let kind = classify(&q).unwrap().kind;
        assert_eq!(kind, if m == 2 { QuiverKind::Extended } else { QuiverKind::Wild });
    }
}
