use proptest::prelude::*;

use qstructure::exact_algebra::{format_rational, parse_rational, rat, Laurent, Scalar, XPoly};
use qstructure::families::sampler::sample_specs;
use qstructure::families::{expand_in_basis, FamilyData, FamilyKind};
use qstructure::operators::family_l;
use qstructure::qcalculus::q_derivative;
use qstructure::relations::{Basis, Identity, IdentityId};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| *s != rat(0, 1))
}

/// Dilation factors away from 0 and +-1.
fn base() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("usable base", |s| *s != rat(0, 1) && *s != rat(1, 1) && *s != rat(-1, 1))
}

fn xpoly(max_deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(scalar(), 0..=max_deg + 1).prop_map(XPoly::from_coeffs)
}

fn laurent() -> impl Strategy<Value = Laurent> {
    (-3i64..=3, prop::collection::vec(scalar(), 0..6)).prop_map(|(lo, c)| Laurent::from_coeffs(lo, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn x_and_symmetric_forms_round_trip(f in xpoly(6)) {
        let z = f.to_z_laurent();
        prop_assert!(z.is_symmetric());
        prop_assert_eq!(z.to_sym().unwrap().to_x(), f.clone());
        prop_assert_eq!(XPoly::from_laurent(&f.as_laurent()).unwrap(), f);
    }

    #[test]
    fn exact_division_undoes_multiplication(f in laurent(), g in laurent()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn dilation_by_r_then_one_over_r(f in laurent(), r in nonzero()) {
        let back = f.dilate(&r).unwrap().dilate(&r.recip()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn multiplication_matches_evaluation(f in xpoly(4), g in xpoly(4), x in scalar()) {
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn q_leibniz_rule(f in xpoly(4), g in xpoly(4), q in base()) {
        // D_q(fg)(x) = D_q f(x) g(x) + f(qx) D_q g(x)
        let lhs = q_derivative(&(&f * &g), &q).unwrap();
        let rhs = &(&q_derivative(&f, &q).unwrap() * &g) + &(&f.dilate(&q).unwrap() * &q_derivative(&g, &q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn format_and_parse_round_trip(x in scalar()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn single_coefficient_perturbation_is_caught(c in prop::collection::vec(nonzero(), 3), f in xpoly(2)) {
        let basis = [XPoly::from_ints(&[1]), XPoly::from_ints(&[0, 1]), XPoly::from_ints(&[-1, 0, 2])];
        let lhs = basis.iter().zip(&c).fold(XPoly::zero(), |acc, (p, k)| &acc + &p.scale(k));
        let mut id = Identity::new(IdentityId::Structure, 0, Basis::X, lhs.as_laurent());
        for (k, (p, w)) in basis.iter().zip(&c).enumerate() {
            id = id.term(format!("c{k}"), w.clone(), p.as_laurent());
        }
        prop_assert!(id.holds());
        prop_assert!(id.mutations_detected());
        // an unrelated extra term only holds when it is zero
        let extra = id.clone().term("extra", rat(1, 1), f.as_laurent());
        prop_assert_eq!(extra.holds(), f.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn expansion_in_family_basis_round_trips(
        kind in prop::sample::select(FamilyKind::ALL.to_vec()),
        seed in 0u64..1000,
        c in prop::collection::vec(scalar(), 1..=6),
    ) {
        let spec = sample_specs(kind, 1, seed, 6).unwrap().remove(0);
        let data = FamilyData::build(spec, 6).unwrap();
        let f = c.iter().enumerate().fold(XPoly::zero(), |acc, (k, w)| &acc + &data.p(k).scale(w));
        let mut got = expand_in_basis(&f, &(0..=6).map(|k| data.p(k).clone()).collect::<Vec<_>>()).unwrap();
        got.resize(c.len(), rat(0, 1));
        prop_assert_eq!(got, c);
    }

    #[test]
    fn family_operators_are_linear(
        kind in prop::sample::select(FamilyKind::ALL.to_vec()),
        seed in 0u64..1000,
        f in xpoly(4),
        g in xpoly(4),
        a in scalar(),
        b in scalar(),
    ) {
        let spec = sample_specs(kind, 1, seed, 6).unwrap().remove(0);
        let l = family_l(&spec).unwrap();
        let combined = l.apply(&(&f.scale(&a) + &g.scale(&b))).unwrap();
        let separate = &l.apply(&f).unwrap().scale(&a) + &l.apply(&g).unwrap().scale(&b);
        prop_assert_eq!(combined, separate);
        // L raises degree by exactly one on the basis
        prop_assert_eq!(l.apply(&XPoly::from_ints(&[0, 0, 1])).unwrap().degree(), Some(3));
    }
}
